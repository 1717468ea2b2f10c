#[path = "support/forest.rs"]
mod forest;

use forest::{recount, vectors};
use hairycalc::koszul::kq_dimension;
use num_bigint::BigInt;

#[test]
fn forest_recount_agrees() {
    for m in [vec![2i64], vec![3], vec![2, 3], vec![3, 3]] {
        let r = m.len();
        for kbar in vectors(r, 5) {
            if kbar.iter().sum::<usize>() > 5 {
                continue;
            }
            for s in vectors(r, 5) {
                let (deg, dim) = kq_dimension(&m, &s, &kbar).unwrap();
                let (seen, recount_dim) = recount(&m, &s, &kbar);
                assert_eq!(dim, recount_dim, "m={m:?} s={s:?} k={kbar:?}");
                if recount_dim > BigInt::from(0) {
                    assert_eq!(seen, vec![deg], "m={m:?} s={s:?} k={kbar:?}");
                }
            }
        }
    }
}
