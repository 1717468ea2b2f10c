use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::table::DimTable;
use crate::error::{invalid, Error, Result};

type Key = (Vec<usize>, usize, i64);

fn binomial(n: &BigInt, k: usize) -> BigInt {
    let mut out = BigInt::one();
    for j in 0..k {
        out = out * (n - BigInt::from(j)) / BigInt::from(j + 1);
    }
    out
}

/// Dimensions of the free graded-commutative algebra on the classes of
/// `pi`, graded additively by `(s, t, degree)` and cut off at
/// `sum(s) <= max_hairs`, `t <= max_complexity`.
///
/// The unit sits at `(0, 0, 0)`. Odd-degree classes are exterior, even
/// ones polynomial.
pub fn cofree_extension(
    pi: &DimTable,
    r: usize,
    max_hairs: usize,
    max_complexity: usize,
) -> Result<DimTable> {
    let fits = |s: &[usize], t: usize| s.iter().sum::<usize>() <= max_hairs && t <= max_complexity;
    let mut series: BTreeMap<Key, BigInt> = BTreeMap::new();
    series.insert((vec![0; r], 0, 0), BigInt::one());
    for ((s, t, n), &dim) in pi {
        if s.len() != r {
            return invalid(format!("class with hair vector {s:?} in a table for r = {r}"));
        }
        if s.iter().sum::<usize>() + t == 0 {
            return invalid("a class of weight zero generates an infinite algebra");
        }
        if !fits(s, *t) || dim == 0 {
            continue;
        }
        let a = BigInt::from(dim);
        let odd = n.rem_euclid(2) == 1;
        let mut next: BTreeMap<Key, BigInt> = BTreeMap::new();
        for ((s0, t0, n0), c) in &series {
            for j in 0usize.. {
                let f = if odd {
                    if j > dim {
                        break;
                    }
                    binomial(&a, j)
                } else {
                    binomial(&(&a + BigInt::from(j) - 1), j)
                };
                let s1: Vec<usize> = s0.iter().zip(s).map(|(x, y)| x + j * y).collect();
                let t1 = t0 + j * t;
                if !fits(&s1, t1) {
                    break;
                }
                if !f.is_zero() {
                    *next.entry((s1, t1, n0 + j as i64 * n)).or_default() += c * f;
                }
            }
        }
        series = next;
    }
    series
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            c.to_usize()
                .map(|v| (k.clone(), v))
                .ok_or_else(|| Error::OutOfRange(format!("dimension at {k:?} overflows")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_table_gives_the_unit() {
        let out = cofree_extension(&DimTable::new(), 1, 4, 4).unwrap();
        assert_eq!(out.into_iter().collect::<Vec<_>>(), vec![((vec![0], 0, 0), 1)]);
    }

    #[test]
    fn odd_class_squares_to_zero() {
        let pi: DimTable = [((vec![1], 1, 3), 1)].into_iter().collect();
        let out = cofree_extension(&pi, 1, 4, 4).unwrap();
        assert_eq!(out.len(), 2);
        assert_eq!(out[&(vec![1], 1, 3)], 1);
    }

    #[test]
    fn even_class_is_polynomial() {
        let pi: DimTable = [((vec![2], 1, 2), 1)].into_iter().collect();
        let out = cofree_extension(&pi, 1, 6, 6).unwrap();
        let degrees: Vec<i64> = out.keys().map(|k| k.2).collect();
        assert_eq!(degrees, vec![0, 2, 4, 6]);
        assert!(out.values().all(|&v| v == 1));
    }

    #[test]
    fn two_even_classes_in_one_degree() {
        let pi: DimTable = [((vec![1], 1, 2), 2)].into_iter().collect();
        let out = cofree_extension(&pi, 1, 3, 3).unwrap();
        assert_eq!(out[&(vec![2], 2, 4)], 3);
        assert_eq!(out[&(vec![3], 3, 6)], 4);
    }
}
