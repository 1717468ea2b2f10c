//! Arnold algebras: graded-commutative algebras on generators `g_ij`
//! modulo `g_ji = ±g_ij`, `g_ij^2 = 0` and the three-term relation.
//!
//! Normal form: factors `g_ij` with `i < j`, pairwise distinct targets `j`,
//! sorted by `(target, source)`.

use std::collections::BTreeMap;

use crate::error::{invalid, Result};
use crate::graded::{sort_with_sign, Sign};
use crate::lincomb::LinearCombination;

pub type Monomial = Vec<(usize, usize)>;

/// Sign conventions of one family of edge generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeAlgebra {
    /// `g_ji = flip * g_ij`.
    pub flip: Sign,
    /// Parity of the degree of `g_ij`.
    pub odd: bool,
}

impl EdgeAlgebra {
    /// Cohomology of configurations in `R^n`: generators of degree `n - 1`.
    pub fn ambient(n: i64) -> Self {
        EdgeAlgebra { flip: Sign::pow(n), odd: (n - 1).rem_euclid(2) == 1 }
    }

    /// Colored edges in the Koszul complex: degree `-1`, symmetric.
    pub fn colored() -> Self {
        EdgeAlgebra { flip: Sign::Plus, odd: true }
    }
}

/// Which inadmissible pair gets rewritten first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RewriteOrder {
    FirstPair,
    LastPair,
}

fn key(e: &(usize, usize)) -> (usize, usize) {
    (e.1, e.0)
}

/// Orients and sorts a product; `None` if it vanishes by a repeated factor.
fn sort_product(alg: EdgeAlgebra, mono: &[(usize, usize)]) -> Result<Option<(Monomial, Sign)>> {
    let mut sign = Sign::Plus;
    let mut m: Monomial = Vec::with_capacity(mono.len());
    for &(a, b) in mono {
        if a == b {
            return invalid(format!("g_{a}{a} is not a generator"));
        }
        if a > b {
            sign *= alg.flip;
            m.push((b, a));
        } else {
            m.push((a, b));
        }
    }
    let odd = alg.odd;
    sign *= sort_with_sign(&mut m, key, |_| odd);
    if m.windows(2).any(|w| w[0] == w[1]) {
        return Ok(None);
    }
    Ok(Some((m, sign)))
}

/// Rewrites a product of generators into the admissible basis.
pub fn arnold_reduce(
    alg: EdgeAlgebra,
    mono: &[(usize, usize)],
) -> Result<LinearCombination<Monomial, i64>> {
    arnold_reduce_with(alg, mono, RewriteOrder::FirstPair)
}

pub fn arnold_reduce_with(
    alg: EdgeAlgebra,
    mono: &[(usize, usize)],
    order: RewriteOrder,
) -> Result<LinearCombination<Monomial, i64>> {
    let mut out = LinearCombination::new();
    let mut work: BTreeMap<Monomial, i64> = BTreeMap::new();
    if let Some((m, s)) = sort_product(alg, mono)? {
        work.insert(m, s.to_i64());
    }
    let eps = if alg.odd { -1 } else { 1 };
    let sigma = alg.flip.to_i64();
    while let Some((m, c)) = work.pop_last() {
        if c == 0 {
            continue;
        }
        let pairs = (0..m.len().saturating_sub(1)).filter(|&p| m[p].1 == m[p + 1].1);
        let pos = match order {
            RewriteOrder::FirstPair => pairs.min(),
            RewriteOrder::LastPair => pairs.max(),
        };
        let Some(p) = pos else {
            out.add_term(m, c);
            continue;
        };
        // g_aj g_bj = -sigma*eps g_ab g_bj - eps g_aj g_ab, a < b < j
        let (a, j) = m[p];
        let b = m[p + 1].0;
        for (first, second, coef) in
            [((a, b), (b, j), -sigma * eps), ((a, j), (a, b), -eps)]
        {
            let mut next = m.clone();
            next[p] = first;
            next[p + 1] = second;
            if let Some((n, s)) = sort_product(alg, &next)? {
                *work.entry(n).or_insert(0) += c * coef * s.to_i64();
            }
        }
    }
    Ok(out)
}

/// Admissible monomials on `k` points grouped by number of factors.
/// With `cover_all`, only monomials touching every point are kept.
pub fn admissible_basis(k: usize, cover_all: bool) -> BTreeMap<usize, Vec<Monomial>> {
    let mut out: BTreeMap<usize, Vec<Monomial>> = BTreeMap::new();
    fn go(
        j: usize,
        k: usize,
        cur: &mut Monomial,
        cover_all: bool,
        out: &mut BTreeMap<usize, Vec<Monomial>>,
    ) {
        if j == k {
            if cover_all {
                let mut seen = vec![false; k];
                for &(a, b) in cur.iter() {
                    seen[a] = true;
                    seen[b] = true;
                }
                if seen.iter().any(|s| !s) {
                    return;
                }
            }
            out.entry(cur.len()).or_default().push(cur.clone());
            return;
        }
        go(j + 1, k, cur, cover_all, out);
        for i in 0..j {
            cur.push((i, j));
            go(j + 1, k, cur, cover_all, out);
            cur.pop();
        }
    }
    go(if k == 0 { 0 } else { 1 }, k, &mut Vec::new(), cover_all, &mut out);
    if cover_all && k == 0 {
        out.clear();
    }
    for v in out.values_mut() {
        v.sort();
    }
    out
}

/// Admissible monomials on `k` points with exactly `edges` factors.
pub fn admissible_monomials(k: usize, edges: usize, cover_all: bool) -> Vec<Monomial> {
    admissible_basis(k, cover_all).remove(&edges).unwrap_or_default()
}
