//! Rank computations.
//!
//! Rational matrices are cleared of denominators row by row and reduced by
//! fraction-free elimination over the integers, dividing every updated row by
//! its content. Pivots follow a Markowitz rule: among the shortest active rows
//! take the column with the fewest active entries, then the smallest entry.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use super::sparse::SparseMatrix;
use crate::error::{inconsistent, Result};
use crate::scalar::{EuclideanScalar, Field, Fp};

/// Primes just below `2^31` used for modular verification.
pub const VERIFICATION_PRIMES: [u64; 8] = [
    2147483647, 2147483629, 2147483587, 2147483579, 2147483563, 2147483549, 2147483543,
    2147483497,
];

#[derive(Clone, Debug, Default)]
pub struct RankOptions {
    /// Recompute the rank modulo two primes and fail on disagreement.
    pub verify_modular: bool,
    /// Seed for the choice of verification primes. `None` draws from entropy.
    pub seed: Option<u64>,
}

type Row<T> = Vec<(usize, T)>;

/// `alpha * x + beta * y` for sorted sparse rows.
fn combine<T: crate::scalar::Scalar>(alpha: &T, x: &Row<T>, beta: &T, y: &Row<T>) -> Row<T> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, alpha.clone() * x[i].1.clone()));
            i += 1;
        } else if take_y {
            out.push((y[j].0, beta.clone() * y[j].1.clone()));
            j += 1;
        } else {
            let v = alpha.clone() * x[i].1.clone() + beta.clone() * y[j].1.clone();
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn remove_content<T: EuclideanScalar>(row: &mut Row<T>) {
    let mut g = T::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    if !g.is_zero() && !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v = v.clone() / g.clone();
        }
    }
}

struct Pivoting {
    col_rows: Vec<BTreeSet<usize>>,
    active: BTreeSet<usize>,
}

impl Pivoting {
    fn new<T>(rows: &[Row<T>], ncols: usize) -> Self {
        let mut col_rows = vec![BTreeSet::new(); ncols];
        let mut active = BTreeSet::new();
        for (i, r) in rows.iter().enumerate() {
            if !r.is_empty() {
                active.insert(i);
            }
            for (c, _) in r {
                col_rows[*c].insert(i);
            }
        }
        Pivoting { col_rows, active }
    }

    fn choose<T>(&self, rows: &[Row<T>], size: impl Fn(&T) -> u64) -> Option<(usize, usize)> {
        let min_len = self.active.iter().map(|&i| rows[i].len()).min()?;
        let mut best: Option<((usize, u64), usize, usize)> = None;
        for &i in &self.active {
            if rows[i].len() != min_len {
                continue;
            }
            for (pos, (c, v)) in rows[i].iter().enumerate() {
                let key = (self.col_rows[*c].len(), size(v));
                if best.as_ref().is_none_or(|b| key < b.0) {
                    best = Some((key, i, pos));
                }
            }
        }
        best.map(|(_, i, pos)| (i, pos))
    }

    fn replace<T>(&mut self, idx: usize, old: &Row<T>, new: &Row<T>) {
        for (c, _) in old {
            self.col_rows[*c].remove(&idx);
        }
        for (c, _) in new {
            self.col_rows[*c].insert(idx);
        }
        if new.is_empty() {
            self.active.remove(&idx);
        }
    }

    fn retire<T>(&mut self, idx: usize, row: &Row<T>) {
        for (c, _) in row {
            self.col_rows[*c].remove(&idx);
        }
        self.active.remove(&idx);
    }
}

/// Rank over the fraction field of `T` by fraction-free elimination.
pub fn fraction_free_rank<T: EuclideanScalar>(mut rows: Vec<Row<T>>, ncols: usize) -> usize {
    for r in rows.iter_mut() {
        r.retain(|(_, v)| !v.is_zero());
        remove_content(r);
    }
    let mut piv = Pivoting::new(&rows, ncols);
    let mut rank = 0;
    while let Some((p, pos)) = piv.choose(&rows, |v: &T| v.bit_length()) {
        let prow = std::mem::take(&mut rows[p]);
        piv.retire(p, &prow);
        let (c, a) = prow[pos].clone();
        let targets: Vec<usize> = piv.col_rows[c].iter().copied().collect();
        for r in targets {
            let b = rows[r]
                .binary_search_by_key(&c, |e| e.0)
                .map(|k| rows[r][k].1.clone())
                .expect("column index out of sync");
            let g = a.gcd(&b);
            let alpha = a.clone() / g.clone();
            let beta = -(b / g);
            let mut new = combine(&alpha, &rows[r], &beta, &prow);
            remove_content(&mut new);
            let old = std::mem::replace(&mut rows[r], new);
            piv.replace(r, &old, &rows[r]);
        }
        rank += 1;
    }
    rank
}

fn field_rank_rows<F: Field>(mut rows: Vec<Row<F>>, ncols: usize) -> usize {
    for r in rows.iter_mut() {
        r.retain(|(_, v)| !v.is_zero());
    }
    let mut piv = Pivoting::new(&rows, ncols);
    let mut rank = 0;
    while let Some((p, pos)) = piv.choose(&rows, |_| 0) {
        let prow = std::mem::take(&mut rows[p]);
        piv.retire(p, &prow);
        let (c, a) = prow[pos].clone();
        let a_inv = a.inv();
        let targets: Vec<usize> = piv.col_rows[c].iter().copied().collect();
        for r in targets {
            let b = rows[r]
                .binary_search_by_key(&c, |e| e.0)
                .map(|k| rows[r][k].1.clone())
                .expect("column index out of sync");
            let new = combine(&F::one(), &rows[r], &(-(b * a_inv.clone())), &prow);
            let old = std::mem::replace(&mut rows[r], new);
            piv.replace(r, &old, &rows[r]);
        }
        rank += 1;
    }
    rank
}

/// Rank of a matrix over a field by Gaussian elimination.
pub fn field_rank<F: Field>(m: &SparseMatrix<F>) -> usize {
    field_rank_rows(m.row_lists(), m.cols())
}

fn integer_rows(m: &SparseMatrix<BigRational>) -> Vec<Row<BigInt>> {
    m.row_lists()
        .into_iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
            row.into_iter()
                .map(|(c, v)| (c, v.numer() * (&l / v.denom())))
                .collect()
        })
        .collect()
}

fn modular_rank<const P: u64>(rows: &[Row<BigInt>], ncols: usize) -> usize {
    let reduced = rows
        .iter()
        .map(|r| r.iter().map(|(c, v)| (*c, Fp::<P>::from_bigint(v))).collect())
        .collect();
    field_rank_rows(reduced, ncols)
}

fn rank_mod(prime: u64, rows: &[Row<BigInt>], ncols: usize) -> usize {
    match prime {
        2147483647 => modular_rank::<2147483647>(rows, ncols),
        2147483629 => modular_rank::<2147483629>(rows, ncols),
        2147483587 => modular_rank::<2147483587>(rows, ncols),
        2147483579 => modular_rank::<2147483579>(rows, ncols),
        2147483563 => modular_rank::<2147483563>(rows, ncols),
        2147483549 => modular_rank::<2147483549>(rows, ncols),
        2147483543 => modular_rank::<2147483543>(rows, ncols),
        2147483497 => modular_rank::<2147483497>(rows, ncols),
        _ => unreachable!("prime outside the verification pool"),
    }
}

/// Exact rank over the rationals.
pub fn rank(m: &SparseMatrix<BigRational>) -> usize {
    fraction_free_rank(integer_rows(m), m.cols())
}

/// Exact rank with optional verification modulo two random primes.
pub fn rank_with(m: &SparseMatrix<BigRational>, opts: &RankOptions) -> Result<usize> {
    let rows = integer_rows(m);
    let r = fraction_free_rank(rows.clone(), m.cols());
    if opts.verify_modular {
        let mut rng = match opts.seed {
            Some(s) => rand::rngs::StdRng::seed_from_u64(s),
            None => rand::rngs::StdRng::from_entropy(),
        };
        for &p in VERIFICATION_PRIMES.choose_multiple(&mut rng, 2) {
            let rp = rank_mod(p, &rows, m.cols());
            if rp != r {
                return inconsistent(format!(
                    "rank over Q is {r} but rank mod {p} is {rp} for a {}x{} matrix",
                    m.rows(),
                    m.cols()
                ));
            }
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank(&SparseMatrix::<BigRational>::zeros(5, 7)), 0);
        assert_eq!(rank(&SparseMatrix::<BigRational>::identity(4)), 4);
        let m = SparseMatrix::from_triplets(
            3,
            3,
            [
                (0, 0, q(1, 2)),
                (0, 1, q(1, 3)),
                (1, 0, q(3, 1)),
                (1, 1, q(2, 1)),
                (2, 2, q(-5, 7)),
            ],
        )
        .unwrap();
        assert_eq!(rank(&m), 2);
        let opts = RankOptions { verify_modular: true, seed: Some(7) };
        assert_eq!(rank_with(&m, &opts).unwrap(), 2);
    }

    #[test]
    fn pool_is_prime() {
        for p in VERIFICATION_PRIMES {
            let mut k = 2u64;
            while k * k <= p {
                assert_ne!(p % k, 0, "{p} divisible by {k}");
                k += 1;
            }
        }
    }

    #[test]
    fn modular_rank_can_drop() {
        let m = SparseMatrix::<Fp<3>>::from_triplets(
            2,
            2,
            [(0, 0, Fp::from_i64(1)), (0, 1, Fp::from_i64(1)), (1, 0, Fp::from_i64(1)), (1, 1, Fp::from_i64(4))],
        )
        .unwrap();
        assert_eq!(field_rank(&m), 1);
    }
}
