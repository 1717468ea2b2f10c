//! Symmetric-group invariants of the labeled complex.
//!
//! Over the rationals coinvariants and invariants agree, so the quotient is
//! realized as the image of the symmetrizer `P = sum_sigma sigma`. The
//! contraction descends to coinvariants; transported to invariants it becomes
//! `P(b) -> P(delta b)`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use num_traits::{One, Zero};

use super::labeled::{labeled_basis, KoszulGraph};
use crate::error::{inconsistent, Result};
use crate::graded::Params;
use crate::Rational;

pub type SparseVector = BTreeMap<usize, Rational>;

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// The group `Sigma_{k_1} x ... x Sigma_{k_r}` acting on contiguous blocks.
pub fn block_permutations(kbar: &[usize]) -> Vec<Vec<usize>> {
    let mut acc: Vec<Vec<usize>> = vec![Vec::new()];
    let mut offset = 0;
    for &kc in kbar {
        let local = permutations(kc);
        let mut next = Vec::with_capacity(acc.len() * local.len());
        for a in &acc {
            for l in &local {
                let mut v = a.clone();
                v.extend(l.iter().map(|&x| x + offset));
                next.push(v);
            }
        }
        acc = next;
        offset += kc;
    }
    acc
}

/// Invariant subspace of one labeled block `kbar`.
///
/// The basis consists of symmetrized labeled elements `P(b_j)`. An echelon
/// form of their span, with each row remembered as a combination of the
/// `P(b_j)`, is kept to test independence and to solve for coordinates.
#[derive(Debug)]
pub struct CoinvariantBasis {
    pub kbar: Vec<usize>,
    pub labeled: Vec<KoszulGraph>,
    index: HashMap<KoszulGraph, usize>,
    group: Vec<Vec<usize>>,
    /// Labeled indices `b_j` of the chosen generators.
    pub generators: Vec<usize>,
    rows: Vec<SparseVector>,
    combos: Vec<SparseVector>,
    pivots: Vec<usize>,
    memo: Mutex<HashMap<usize, SparseVector>>,
    /// Orbit classes whose symmetrization vanishes.
    pub zero_orbits: usize,
}

fn axpy(target: &mut SparseVector, c: &Rational, x: &SparseVector) {
    for (col, v) in x {
        let e = target.entry(*col).or_insert_with(Rational::zero);
        *e += c * v;
        if e.is_zero() {
            target.remove(col);
        }
    }
}

impl CoinvariantBasis {
    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn index_of(&self, g: &KoszulGraph) -> Option<usize> {
        self.index.get(g).copied()
    }

    /// `P(y) = sum_sigma sigma y` for a labeled element, in labeled coordinates.
    pub fn symmetrize(&self, y: usize, params: &Params) -> Result<SparseVector> {
        if let Some(v) = self.memo.lock().expect("memo lock").get(&y) {
            return Ok(v.clone());
        }
        let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
        for perm in &self.group {
            for (g, c) in self.labeled[y].relabel(perm, params)? {
                let Some(&i) = self.index.get(&g) else {
                    return inconsistent("relabeling left the labeled basis");
                };
                *acc.entry(i).or_insert(0) += c;
            }
        }
        let v: SparseVector = acc
            .into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|(i, c)| (i, Rational::from_integer(c.into())))
            .collect();
        self.memo.lock().expect("memo lock").insert(y, v.clone());
        Ok(v)
    }

    /// Coordinates of an invariant labeled vector with respect to the
    /// generators `P(b_j)`; fails if the vector is not in their span.
    pub fn coordinates(&self, w: &SparseVector) -> Result<SparseVector> {
        let mut coords = SparseVector::new();
        let mut rest = w.clone();
        for (i, p) in self.pivots.iter().enumerate() {
            if let Some(c) = rest.get(p).cloned() {
                axpy(&mut coords, &c, &self.combos[i]);
                axpy(&mut rest, &-c, &self.rows[i]);
            }
        }
        if !rest.is_empty() {
            return inconsistent(format!(
                "a vector of block {:?} is not invariant under relabeling",
                self.kbar
            ));
        }
        Ok(coords)
    }

    fn insert(&mut self, mut v: SparseVector, generator: usize) -> bool {
        let mut combo: SparseVector = [(generator, Rational::one())].into_iter().collect();
        for i in 0..self.rows.len() {
            if let Some(c) = v.get(&self.pivots[i]).cloned() {
                axpy(&mut v, &-c.clone(), &self.rows[i]);
                axpy(&mut combo, &-c, &self.combos[i]);
            }
        }
        let Some((&p, lead)) = v.iter().next() else {
            return false;
        };
        let inv = Rational::one() / lead;
        for x in v.values_mut() {
            *x *= &inv;
        }
        for x in combo.values_mut() {
            *x *= &inv;
        }
        for i in 0..self.rows.len() {
            if let Some(c) = self.rows[i].get(&p).cloned() {
                axpy(&mut self.rows[i], &-c.clone(), &v);
                axpy(&mut self.combos[i], &-c, &combo);
            }
        }
        self.rows.push(v);
        self.combos.push(combo);
        self.pivots.push(p);
        true
    }
}

/// Symmetrized basis of the labeled block with vertex counts `kbar`.
pub fn coinvariant_basis(
    params: &Params,
    s: &[usize],
    t: usize,
    kbar: &[usize],
    connected_only: bool,
) -> Result<CoinvariantBasis> {
    let labeled = labeled_basis(params, kbar, s, t, connected_only)?;
    let index: HashMap<KoszulGraph, usize> =
        labeled.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();
    let n = labeled.len();
    let mut basis = CoinvariantBasis {
        kbar: kbar.to_vec(),
        labeled,
        index,
        group: block_permutations(kbar),
        generators: Vec::new(),
        rows: Vec::new(),
        combos: Vec::new(),
        pivots: Vec::new(),
        memo: Mutex::new(HashMap::new()),
        zero_orbits: 0,
    };
    let mut covered = vec![false; n];
    for b in 0..n {
        if covered[b] {
            continue;
        }
        for perm in &basis.group {
            let image = basis.labeled[b].relabel(perm, params)?;
            if image.len() == 1 {
                let (g, _) = image.iter().next().expect("one term");
                if let Some(&i) = basis.index.get(g) {
                    covered[i] = true;
                }
            }
        }
        let v = basis.symmetrize(b, params)?;
        if v.is_empty() {
            basis.zero_orbits += 1;
            continue;
        }
        let j = basis.generators.len();
        if basis.insert(v, j) {
            basis.generators.push(b);
        }
    }
    Ok(basis)
}

/// Matrix column of the induced differential: coordinates of
/// `P(delta b_j)` in the target blocks, keyed by target block.
pub fn induced_differential(
    source: &CoinvariantBasis,
    j: usize,
    targets: &HashMap<Vec<usize>, &CoinvariantBasis>,
    params: &Params,
) -> Result<BTreeMap<Vec<usize>, SparseVector>> {
    let image = source.labeled[source.generators[j]].contract(params)?;
    let mut per_block: BTreeMap<Vec<usize>, SparseVector> = BTreeMap::new();
    for (g, c) in image {
        let Some(target) = targets.get(&g.kbar) else {
            return inconsistent("contraction left the block");
        };
        let Some(idx) = target.index_of(&g) else {
            return inconsistent("contraction left the labeled basis");
        };
        let sym = target.symmetrize(idx, params)?;
        axpy(per_block.entry(g.kbar.clone()).or_default(), &Rational::from_integer(c.into()), &sym);
    }
    let mut out = BTreeMap::new();
    for (kb, w) in per_block {
        let coords = targets[&kb].coordinates(&w)?;
        if !coords.is_empty() {
            out.insert(kb, coords);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_counts() {
        assert_eq!(permutations(0).len(), 1);
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(block_permutations(&[2, 3]).len(), 12);
        assert_eq!(block_permutations(&[2, 1])[1], vec![1, 0, 2]);
    }

    #[test]
    fn dual_line_graph_orbit() {
        let p6 = Params::new(vec![2], 6).unwrap();
        assert_eq!(coinvariant_basis(&p6, &[2], 1, &[2], true).unwrap().dim(), 1);
        let p7 = Params::new(vec![2], 7).unwrap();
        let b = coinvariant_basis(&p7, &[2], 1, &[2], true).unwrap();
        assert_eq!(b.dim(), 0);
        assert_eq!(b.zero_orbits, 1);
        assert_eq!(coinvariant_basis(&p6, &[0], 1, &[0], true).unwrap().dim(), 0);
    }
}
