//! The Koszul-side graph complex of colored forests and non-colored monomials.

mod arnold;
mod coinvariant;
mod kq;
mod labeled;

pub use arnold::{
    admissible_basis, admissible_monomials, arnold_reduce, arnold_reduce_with, EdgeAlgebra,
    Monomial, RewriteOrder,
};
pub use coinvariant::{
    block_permutations, coinvariant_basis, induced_differential, permutations, CoinvariantBasis,
    SparseVector,
};
pub use kq::{kq_dimension, stirling1};
pub use labeled::{labeled_basis, KoszulGraph, LabeledCombination};

/// Keeps the elements whose underlying graph is connected.
pub fn connected_filter(basis: &[KoszulGraph]) -> Vec<KoszulGraph> {
    basis.iter().filter(|g| g.is_connected()).cloned().collect()
}

/// Vertex-count vectors `kbar` compatible with `s` components and `t`
/// covering non-colored edges.
pub fn vertex_counts(s: &[usize], t: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if t == 0 {
        return out;
    }
    let lo = t + 1;
    let hi = 2 * t;
    fn go(s: &[usize], i: usize, cur: &mut Vec<usize>, sum: usize, hi: usize, out: &mut Vec<Vec<usize>>) {
        if i == s.len() {
            out.push(cur.clone());
            return;
        }
        if s[i] == 0 {
            cur.push(0);
            go(s, i + 1, cur, sum, hi, out);
            cur.pop();
            return;
        }
        let mut k = s[i];
        while sum + k <= hi {
            cur.push(k);
            go(s, i + 1, cur, sum + k, hi, out);
            cur.pop();
            k += 1;
        }
    }
    go(s, 0, &mut Vec::new(), 0, hi, &mut out);
    out.retain(|k| {
        let total: usize = k.iter().sum();
        total >= lo && total <= hi
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_count_ranges() {
        assert_eq!(vertex_counts(&[2], 1), vec![vec![2]]);
        assert_eq!(vertex_counts(&[1], 2), vec![vec![3], vec![4]]);
        assert_eq!(vertex_counts(&[1, 0], 1), vec![vec![2, 0]]);
        assert!(vertex_counts(&[3], 1).is_empty());
        assert!(vertex_counts(&[1], 0).is_empty());
    }
}
