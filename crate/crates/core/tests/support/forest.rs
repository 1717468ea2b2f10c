//! Degree and dimension of the Koszul dual module recounted by listing
//! colored forests one by one.

use num_bigint::BigInt;

fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<Vec<usize>>> = vec![vec![]];
    for x in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for i in 0..p.len() {
                let mut q = p.clone();
                q[i].push(x);
                next.push(q);
            }
            let mut q = p.clone();
            q.push(vec![x]);
            next.push(q);
        }
        out = next;
    }
    out
}

fn colorings(blocks: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..blocks {
        out = out
            .into_iter()
            .flat_map(|c: Vec<usize>| {
                (0..r).map(move |col| {
                    let mut c = c.clone();
                    c.push(col);
                    c
                })
            })
            .collect();
    }
    out
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Sum over forests on `k` labelled points whose trees carry colors with
/// `s_i` trees and `k_i` points of color `i`; a tree on `b` points spans
/// a `(b-1)!`-dimensional space. Returns every degree seen.
pub fn recount(m: &[i64], s: &[usize], kbar: &[usize]) -> (Vec<i64>, BigInt) {
    let k: usize = kbar.iter().sum();
    let r = m.len();
    let mut degrees = Vec::new();
    let mut dim = BigInt::from(0);
    for p in set_partitions(k) {
        for col in colorings(p.len(), r) {
            let mut trees = vec![0; r];
            let mut points = vec![0; r];
            for (b, &c) in p.iter().zip(&col) {
                trees[c] += 1;
                points[c] += b.len();
            }
            if trees != s || points != kbar {
                continue;
            }
            let edges: usize = p.iter().map(|b| b.len() - 1).sum();
            let deg = edges as i64 + s.iter().zip(m).map(|(&si, &mi)| si as i64 * mi).sum::<i64>();
            if !degrees.contains(&deg) {
                degrees.push(deg);
            }
            dim += p.iter().map(|b| factorial(b.len() - 1)).product::<BigInt>();
        }
    }
    (degrees, dim)
}

pub fn vectors(r: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|v: Vec<usize>| {
                (0..=max).map(move |x| {
                    let mut v = v.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}
