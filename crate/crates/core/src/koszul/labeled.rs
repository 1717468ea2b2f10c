//! Koszul graphs on labeled vertices.
//!
//! Vertices `0..k` are colored in contiguous blocks, color 0 first. An element
//! stands for the ordered product
//! `[components by min vertex][colored edges][non-colored edges]`,
//! each edge family in admissible normal form. Components have degree `-m_c`,
//! colored edges degree `-1`, non-colored edges degree `d - 1`.

use serde::{Deserialize, Serialize};

use super::arnold::{arnold_reduce, admissible_monomials, EdgeAlgebra, Monomial};
use crate::error::{invalid, Result};
use crate::graded::{sort_with_sign, Params, Sign};
use crate::lincomb::LinearCombination;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KoszulGraph {
    /// Number of vertices of each color.
    pub kbar: Vec<usize>,
    pub colored: Monomial,
    pub noncolored: Monomial,
}

pub type LabeledCombination = LinearCombination<KoszulGraph, i64>;

fn union_find_roots(k: usize, edges: impl Iterator<Item = (usize, usize)>) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for (a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    (0..k).map(|v| find(&mut parent, v)).collect()
}

impl KoszulGraph {
    pub fn k(&self) -> usize {
        self.kbar.iter().sum()
    }

    pub fn color_of(&self, v: usize) -> usize {
        let mut acc = 0;
        for (c, &kc) in self.kbar.iter().enumerate() {
            acc += kc;
            if v < acc {
                return c;
            }
        }
        usize::MAX
    }

    /// Colored components as `(color, vertices)` sorted by minimal vertex.
    pub fn components(&self) -> Vec<(usize, Vec<usize>)> {
        let roots = union_find_roots(self.k(), self.colored.iter().copied());
        let mut comps: Vec<(usize, Vec<usize>)> = Vec::new();
        for (v, &root) in roots.iter().enumerate() {
            if root == v {
                comps.push((self.color_of(v), vec![v]));
            } else {
                let c = comps.iter_mut().find(|c| c.1[0] == root).expect("root precedes members");
                c.1.push(v);
            }
        }
        comps
    }

    /// Number of colored components of each color.
    pub fn hair_counts(&self) -> Vec<usize> {
        let mut s = vec![0; self.kbar.len()];
        for (c, _) in self.components() {
            s[c] += 1;
        }
        s
    }

    pub fn complexity(&self) -> usize {
        self.noncolored.len()
    }

    /// `(d-1) t - #colored edges - sum_i m_i s_i`.
    pub fn degree(&self, params: &Params) -> i64 {
        let comps: i64 = self.components().iter().map(|(c, _)| params.m[*c]).sum();
        (params.d - 1) * self.noncolored.len() as i64 - self.colored.len() as i64 - comps
    }

    /// Connected with respect to colored and non-colored edges together.
    pub fn is_connected(&self) -> bool {
        let k = self.k();
        if k == 0 {
            return false;
        }
        let roots = union_find_roots(k, self.colored.iter().chain(&self.noncolored).copied());
        roots.iter().all(|&r| r == 0)
    }

    pub fn validate(&self, params: &Params) -> Result<()> {
        if self.kbar.len() != params.r() {
            return invalid("vertex counts must list every color");
        }
        let k = self.k();
        for &(a, b) in &self.colored {
            if a >= b || b >= k || self.color_of(a) != self.color_of(b) {
                return invalid(format!("bad colored edge ({a},{b})"));
            }
        }
        let mut covered = vec![false; k];
        for &(a, b) in &self.noncolored {
            if a >= b || b >= k {
                return invalid(format!("bad non-colored edge ({a},{b})"));
            }
            covered[a] = true;
            covered[b] = true;
        }
        if covered.iter().any(|c| !c) {
            return invalid("every vertex must meet a non-colored edge");
        }
        for fam in [&self.colored, &self.noncolored] {
            if fam.windows(2).any(|w| w[0].1 >= w[1].1) {
                return invalid("edges must be admissible and sorted by target");
            }
        }
        Ok(())
    }

    fn assemble(
        kbar: Vec<usize>,
        sign: Sign,
        colored: &[(usize, usize)],
        noncolored: &[(usize, usize)],
        params: &Params,
    ) -> Result<LabeledCombination> {
        let cl = arnold_reduce(EdgeAlgebra::colored(), colored)?;
        let nl = arnold_reduce(EdgeAlgebra::ambient(params.d), noncolored)?;
        let mut out = LabeledCombination::new();
        for (c, cc) in cl.iter() {
            for (n, nc) in nl.iter() {
                out.add_term(
                    KoszulGraph { kbar: kbar.clone(), colored: c.clone(), noncolored: n.clone() },
                    sign.to_i64() * cc * nc,
                );
            }
        }
        Ok(out)
    }

    /// Action of a color-preserving vertex permutation `v -> perm[v]`.
    pub fn relabel(&self, perm: &[usize], params: &Params) -> Result<LabeledCombination> {
        if perm.len() != self.k() {
            return invalid("permutation size differs from vertex count");
        }
        let mut comps: Vec<(usize, bool)> = self
            .components()
            .into_iter()
            .map(|(c, vs)| {
                let min = vs.iter().map(|&v| perm[v]).min().expect("components are non-empty");
                (min, params.m[c] % 2 != 0)
            })
            .collect();
        let sign = sort_with_sign(&mut comps, |c| c.0, |c| c.1);
        let map = |m: &Monomial| -> Monomial { m.iter().map(|&(a, b)| (perm[a], perm[b])).collect() };
        Self::assemble(self.kbar.clone(), sign, &map(&self.colored), &map(&self.noncolored), params)
    }

    /// Contraction differential on a labeled element.
    pub fn contract(&self, params: &Params) -> Result<LabeledCombination> {
        let mut out = LabeledCombination::new();
        let comp_parity: i64 = self.components().iter().map(|(c, _)| params.m[*c]).sum();
        for (p, &(a, b)) in self.colored.iter().enumerate() {
            let sign = Sign::pow(comp_parity + p as i64);
            let merge = |v: usize| -> usize {
                use std::cmp::Ordering::*;
                match v.cmp(&b) {
                    Less => v,
                    Equal => a,
                    Greater => v - 1,
                }
            };
            let colored: Monomial = self
                .colored
                .iter()
                .enumerate()
                .filter(|&(q, _)| q != p)
                .map(|(_, &(x, y))| (merge(x), merge(y)))
                .collect();
            let noncolored: Monomial =
                self.noncolored.iter().map(|&(x, y)| (merge(x), merge(y))).collect();
            if noncolored.iter().any(|&(x, y)| x == y) {
                continue;
            }
            let mut kbar = self.kbar.clone();
            kbar[self.color_of(a)] -= 1;
            let lc = Self::assemble(kbar, sign, &colored, &noncolored, params)?;
            for (g, c) in lc {
                out.add_term(g, c);
            }
        }
        Ok(out)
    }
}

/// Labeled basis with `kbar` vertices, `s` colored components and `t`
/// non-colored edges.
pub fn labeled_basis(
    params: &Params,
    kbar: &[usize],
    s: &[usize],
    t: usize,
    connected_only: bool,
) -> Result<Vec<KoszulGraph>> {
    if kbar.len() != params.r() || s.len() != params.r() {
        return invalid("vertex and component vectors must have one entry per color");
    }
    let k: usize = kbar.iter().sum();
    let mut colored_parts: Vec<Monomial> = vec![Vec::new()];
    let mut offset = 0;
    for (&kc, &sc) in kbar.iter().zip(s) {
        if sc > kc || (kc > 0 && sc == 0) {
            return Ok(Vec::new());
        }
        let local = admissible_monomials(kc, kc - sc, false);
        let mut next = Vec::new();
        for prefix in &colored_parts {
            for m in &local {
                let mut v = prefix.clone();
                v.extend(m.iter().map(|&(a, b)| (a + offset, b + offset)));
                next.push(v);
            }
        }
        colored_parts = next;
        offset += kc;
    }
    let noncolored = admissible_monomials(k, t, true);
    let mut out = Vec::new();
    for c in &colored_parts {
        let mut c = c.clone();
        c.sort_by_key(|e| (e.1, e.0));
        for n in &noncolored {
            let g = KoszulGraph { kbar: kbar.to_vec(), colored: c.clone(), noncolored: n.clone() };
            if !connected_only || g.is_connected() {
                out.push(g);
            }
        }
    }
    out.sort();
    Ok(out)
}
