//! Free graded Lie algebras, realized inside the tensor algebra.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{inconsistent, invalid, Result};
use crate::lincomb::LinearCombination;
use crate::linalg::SpanBuilder;
use crate::scalar::Scalar;
use crate::Rational;

/// Dimensions keyed by (multiweight, homological degree).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MultigradedDims {
    entries: BTreeMap<(Vec<usize>, i64), usize>,
}

impl MultigradedDims {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, weight: Vec<usize>, degree: i64, dim: usize) {
        if dim == 0 {
            return;
        }
        *self.entries.entry((weight, degree)).or_insert(0) += dim;
    }

    pub fn get(&self, weight: &[usize], degree: i64) -> usize {
        self.entries.get(&(weight.to_vec(), degree)).copied().unwrap_or(0)
    }

    /// Sum over all degrees of the given multiweight.
    pub fn weight_total(&self, weight: &[usize]) -> usize {
        self.entries
            .iter()
            .filter(|((w, _), _)| w.as_slice() == weight)
            .map(|(_, d)| *d)
            .sum()
    }

    pub fn degree_total(&self, degree: i64) -> usize {
        self.entries.iter().filter(|((_, n), _)| *n == degree).map(|(_, d)| *d).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, i64, usize)> {
        self.entries.iter().map(|((w, n), d)| (w, *n, *d))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// All multiweights with `r` entries and total weight exactly `n`, in
/// lexicographic order.
pub fn weights_of_total(r: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(r: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() + 1 == r {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for a in (0..=left).rev() {
            cur.push(a);
            go(r, left - a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if r == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(r, n, &mut Vec::new(), &mut out);
    out.reverse();
    out
}

fn weight_degree(degrees: &[i64], w: &[usize]) -> i64 {
    degrees.iter().zip(w).map(|(d, &k)| d * k as i64).sum()
}

fn multinomial(w: &[usize]) -> BigInt {
    let mut out = BigInt::one();
    let mut n = 0usize;
    for &k in w {
        for j in 1..=k {
            n += 1;
            out = out * BigInt::from(n) / BigInt::from(j);
        }
    }
    out
}

fn binomial(n: &BigInt, k: usize) -> BigInt {
    let mut out = BigInt::one();
    for j in 0..k {
        out = out * (n - BigInt::from(j)) / BigInt::from(j + 1);
    }
    out
}

/// Dimensions of the free graded Lie algebra on generators of the given
/// degrees, for every multiweight of total weight at most `max_weight`.
///
/// The tensor algebra is the enveloping algebra, so its multigraded series
/// factors over a Lie basis: even classes give `1/(1-x^w)`, odd classes give
/// `1+x^w`. The exponents are peeled off one multiweight at a time.
pub fn free_graded_lie_dims(degrees: &[i64], max_weight: usize) -> Result<MultigradedDims> {
    let r = degrees.len();
    if r == 0 {
        return invalid("free_graded_lie_dims needs at least one generator");
    }
    let all: Vec<Vec<usize>> = (0..=max_weight).flat_map(|n| weights_of_total(r, n)).collect();
    let mut product: HashMap<Vec<usize>, BigInt> = HashMap::new();
    product.insert(vec![0; r], BigInt::one());
    let mut out = MultigradedDims::new();
    for w in all.iter().filter(|w| w.iter().any(|&k| k > 0)) {
        let have = product.get(w).cloned().unwrap_or_default();
        let a = multinomial(w) - have;
        if a.is_negative() {
            return inconsistent(format!("negative Lie exponent at weight {w:?}"));
        }
        if a.is_zero() {
            continue;
        }
        let deg = weight_degree(degrees, w);
        let a_usize = a
            .to_usize()
            .ok_or_else(|| crate::Error::OutOfRange(format!("Lie dimension at {w:?} too large")))?;
        out.add(w.clone(), deg, a_usize);
        // coefficients of x^{jw} in the factor
        let wt: usize = w.iter().sum();
        let max_j = max_weight / wt;
        let factor: Vec<BigInt> = (0..=max_j)
            .map(|j| {
                if deg % 2 == 0 {
                    binomial(&(&a + BigInt::from(j) - 1), j)
                } else if j <= a_usize {
                    binomial(&a, j)
                } else {
                    BigInt::zero()
                }
            })
            .collect();
        let mut next: HashMap<Vec<usize>, BigInt> = HashMap::new();
        for (u, c) in &product {
            for (j, f) in factor.iter().enumerate() {
                if f.is_zero() {
                    continue;
                }
                let v: Vec<usize> = u.iter().zip(w).map(|(a, b)| a + j * b).collect();
                if v.iter().sum::<usize>() > max_weight {
                    break;
                }
                *next.entry(v).or_default() += c * f;
            }
        }
        product = next;
    }
    Ok(out)
}

/// Dimension of the multilinear part of the free Lie algebra on `n`
/// letters.
pub fn lie_operad_dim(n: i64) -> Result<BigInt> {
    if n <= 0 {
        return invalid(format!("lie_operad_dim needs n >= 1, got {n}"));
    }
    Ok((1..n).map(BigInt::from).product())
}

/// Number of Lyndon words of length `n` over `q` letters.
pub fn necklace_count(q: u64, n: u64) -> BigInt {
    fn mobius(mut n: u64) -> i64 {
        let mut out = 1;
        let mut p = 2;
        while p * p <= n {
            if n.is_multiple_of(p) {
                n /= p;
                if n.is_multiple_of(p) {
                    return 0;
                }
                out = -out;
            }
            p += 1;
        }
        if n > 1 {
            out = -out;
        }
        out
    }
    let mut sum = BigInt::zero();
    for e in 1..=n {
        if n.is_multiple_of(e) {
            sum += BigInt::from(mobius(e)) * BigInt::from(q).pow((n / e) as u32);
        }
    }
    sum / BigInt::from(n)
}

pub type Word = Vec<usize>;

/// A homogeneous element of the free graded Lie algebra, stored as a sum of
/// signed words in the tensor algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct LieElement {
    pub weight: Vec<usize>,
    pub degree: i64,
    pub words: LinearCombination<Word, Rational>,
}

impl LieElement {
    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn scaled(&self, c: i64) -> LieElement {
        let mut out = self.clone();
        out.words.scale(&Rational::from_i64(c));
        out
    }

    pub fn add(&self, other: &LieElement) -> Result<LieElement> {
        if self.weight != other.weight {
            return invalid("adding Lie elements of different weights");
        }
        let mut out = self.clone();
        out.words.add_assign_scaled(&other.words, &Rational::one());
        Ok(out)
    }
}

/// The free graded Lie algebra on generators of fixed degrees.
#[derive(Clone, Debug)]
pub struct FreeLie {
    degrees: Vec<i64>,
}

impl FreeLie {
    pub fn new(degrees: Vec<i64>) -> Result<FreeLie> {
        if degrees.is_empty() {
            return invalid("free Lie algebra needs at least one generator");
        }
        Ok(FreeLie { degrees })
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn degree_of_weight(&self, w: &[usize]) -> i64 {
        weight_degree(&self.degrees, w)
    }

    pub fn generator(&self, i: usize) -> Result<LieElement> {
        let Some(&deg) = self.degrees.get(i) else {
            return invalid(format!("generator {i} out of range"));
        };
        let mut weight = vec![0; self.rank()];
        weight[i] = 1;
        Ok(LieElement {
            weight,
            degree: deg,
            words: LinearCombination::single(vec![i], Rational::one()),
        })
    }

    /// `[a, b] = ab - (-1)^{|a||b|} ba`.
    pub fn bracket(&self, a: &LieElement, b: &LieElement) -> LieElement {
        let sign = if (a.degree * b.degree) % 2 == 0 { -1 } else { 1 };
        let mut words = LinearCombination::new();
        for (u, cu) in a.words.iter() {
            for (v, cv) in b.words.iter() {
                let c = cu.clone() * cv.clone();
                let mut uv = u.clone();
                uv.extend_from_slice(v);
                words.add_term(uv, c.clone());
                let mut vu = v.clone();
                vu.extend_from_slice(u);
                words.add_term(vu, c * Rational::from_i64(sign));
            }
        }
        LieElement {
            weight: a.weight.iter().zip(&b.weight).map(|(x, y)| x + y).collect(),
            degree: a.degree + b.degree,
            words,
        }
    }

    /// A basis of the multiweight-`w` piece, built from
    /// brackets `[x_i, f]` with `f` running over bases of lower weights.
    pub fn basis(&self, w: &[usize]) -> Result<Vec<LieElement>> {
        let mut memo = HashMap::new();
        self.basis_memo(w, &mut memo)
    }

    fn basis_memo(
        &self,
        w: &[usize],
        memo: &mut HashMap<Vec<usize>, Vec<LieElement>>,
    ) -> Result<Vec<LieElement>> {
        if w.len() != self.rank() {
            return invalid(format!("weight {w:?} has the wrong length"));
        }
        if let Some(b) = memo.get(w) {
            return Ok(b.clone());
        }
        let total: usize = w.iter().sum();
        let out = match total {
            0 => Vec::new(),
            1 => vec![self.generator(w.iter().position(|&k| k == 1).unwrap())?],
            _ => {
                let mut span = SpanBuilder::new();
                let mut out = Vec::new();
                for i in 0..self.rank() {
                    if w[i] == 0 {
                        continue;
                    }
                    let mut rest = w.to_vec();
                    rest[i] -= 1;
                    let x = self.generator(i)?;
                    for f in self.basis_memo(&rest, memo)? {
                        let e = self.bracket(&x, &f);
                        if span.insert(e.words.clone()) {
                            out.push(e);
                        }
                    }
                }
                out
            }
        };
        memo.insert(w.to_vec(), out.clone());
        Ok(out)
    }

    /// Rank of the span of the given elements.
    pub fn span_rank<'a>(elements: impl IntoIterator<Item = &'a LieElement>) -> usize {
        let mut span = SpanBuilder::new();
        for e in elements {
            span.insert(e.words.clone());
        }
        span.rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_even_generator_is_abelian() {
        let dims = free_graded_lie_dims(&[2], 6).unwrap();
        assert_eq!(dims.iter().collect::<Vec<_>>(), vec![(&vec![1], 2, 1)]);
    }

    #[test]
    fn single_odd_generator_keeps_its_square() {
        let dims = free_graded_lie_dims(&[3], 6).unwrap();
        assert_eq!(dims.iter().collect::<Vec<_>>(), vec![(&vec![1], 3, 1), (&vec![2], 6, 1)]);
    }

    #[test]
    fn two_odd_generators_weight_two() {
        let dims = free_graded_lie_dims(&[1, 1], 2).unwrap();
        let w2: usize = weights_of_total(2, 2).iter().map(|w| dims.weight_total(w)).sum();
        assert_eq!(w2, 3);
        assert_eq!(dims.get(&[1, 1], 2), 1);
    }

    #[test]
    fn operad_dims() {
        assert_eq!(lie_operad_dim(1).unwrap(), BigInt::from(1));
        assert_eq!(lie_operad_dim(3).unwrap(), BigInt::from(2));
        assert_eq!(lie_operad_dim(5).unwrap(), BigInt::from(24));
        assert!(lie_operad_dim(0).is_err());
    }

    #[test]
    fn odd_cube_vanishes() {
        let l = FreeLie::new(vec![1]).unwrap();
        let x = l.generator(0).unwrap();
        let xx = l.bracket(&x, &x);
        assert!(!xx.is_zero());
        assert!(l.bracket(&xx, &x).is_zero());
        assert!(l.bracket(&x, &xx).is_zero());
    }

    #[test]
    fn weights_enumeration() {
        assert_eq!(weights_of_total(2, 2), vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert_eq!(weights_of_total(3, 0), vec![vec![0, 0, 0]]);
        assert_eq!(weights_of_total(1, 4), vec![vec![4]]);
    }

    #[test]
    fn necklaces() {
        let expect = [2, 1, 2, 3, 6, 9];
        for (n, e) in expect.iter().enumerate() {
            assert_eq!(necklace_count(2, n as u64 + 1), BigInt::from(*e));
        }
    }
}
