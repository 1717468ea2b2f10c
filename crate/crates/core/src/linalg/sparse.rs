use std::collections::BTreeMap;

use crate::error::{invalid, Result};
use crate::scalar::Scalar;

/// Sparse matrix stored as row-major sorted triplets.
///
/// No duplicate positions and no explicit zeros are ever stored.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, T)>,
}

impl<T: Scalar> SparseMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, entries: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix { rows: n, cols: n, entries: (0..n).map(|i| (i, i, T::one())).collect() }
    }

    /// Builds a matrix from triplets; duplicates are summed, zeros dropped.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, T)>,
    ) -> Result<Self> {
        let mut acc: BTreeMap<(usize, usize), T> = BTreeMap::new();
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return invalid(format!("entry ({r},{c}) outside a {rows}x{cols} matrix"));
            }
            let slot = acc.entry((r, c)).or_insert_with(T::zero);
            *slot = slot.clone() + v;
        }
        let entries = acc
            .into_iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|((r, c), v)| (r, c, v))
            .collect();
        Ok(SparseMatrix { rows, cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(usize, usize, T)] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> T {
        match self.entries.binary_search_by(|e| (e.0, e.1).cmp(&(r, c))) {
            Ok(i) => self.entries[i].2.clone(),
            Err(_) => T::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn transpose(&self) -> Self {
        let mut entries: Vec<_> = self.entries.iter().map(|(r, c, v)| (*c, *r, v.clone())).collect();
        entries.sort_by_key(|a| (a.0, a.1));
        SparseMatrix { rows: self.cols, cols: self.rows, entries }
    }

    /// Row lists, each sorted by column.
    pub fn row_lists(&self) -> Vec<Vec<(usize, T)>> {
        let mut out = vec![Vec::new(); self.rows];
        for (r, c, v) in &self.entries {
            out[*r].push((*c, v.clone()));
        }
        out
    }

    /// Relabels rows and columns: entry `(r, c)` moves to `(row_perm[r], col_perm[c])`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> Result<Self> {
        if row_perm.len() != self.rows || col_perm.len() != self.cols {
            return invalid("permutation sizes do not match the matrix");
        }
        Self::from_triplets(
            self.rows,
            self.cols,
            self.entries.iter().map(|(r, c, v)| (row_perm[*r], col_perm[*c], v.clone())),
        )
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &SparseMatrix<T>) -> Result<Self> {
        if self.cols != rhs.rows {
            return invalid(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            ));
        }
        let rhs_rows = rhs.row_lists();
        let mut acc: BTreeMap<(usize, usize), T> = BTreeMap::new();
        for (r, k, a) in &self.entries {
            for (c, b) in &rhs_rows[*k] {
                let slot = acc.entry((*r, *c)).or_insert_with(T::zero);
                *slot = slot.clone() + a.clone() * b.clone();
            }
        }
        Ok(SparseMatrix {
            rows: self.rows,
            cols: rhs.cols,
            entries: acc
                .into_iter()
                .filter(|(_, v)| !v.is_zero())
                .map(|((r, c), v)| (r, c, v))
                .collect(),
        })
    }

    /// Entrywise conversion; entries mapping to zero are dropped.
    pub fn try_map<U: Scalar>(&self, f: impl Fn(&T) -> Option<U>) -> Option<SparseMatrix<U>> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for (r, c, v) in &self.entries {
            let u = f(v)?;
            if !u.is_zero() {
                entries.push((*r, *c, u));
            }
        }
        Some(SparseMatrix { rows: self.rows, cols: self.cols, entries })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triplets_merge_and_drop_zeros() {
        let m = SparseMatrix::<i64>::from_triplets(2, 2, [(0, 1, 2), (0, 1, -2), (1, 0, 3), (1, 0, 1)])
            .unwrap();
        assert_eq!(m.nnz(), 1);
        assert_eq!(m.get(1, 0), 4);
        assert_eq!(m.get(0, 1), 0);
        assert!(SparseMatrix::<i64>::from_triplets(1, 1, [(1, 0, 1)]).is_err());
    }

    #[test]
    fn product_and_transpose() {
        let a = SparseMatrix::<i64>::from_triplets(2, 3, [(0, 0, 1), (0, 2, 2), (1, 1, 3)]).unwrap();
        let b = a.transpose();
        assert_eq!(b.rows(), 3);
        assert_eq!(b.get(2, 0), 2);
        let p = a.mul(&b).unwrap();
        assert_eq!(p.get(0, 0), 5);
        assert_eq!(p.get(1, 1), 9);
        assert_eq!(p.get(0, 1), 0);
        assert!(a.mul(&a).is_err());
    }
}
