//! Incremental echelon form for vectors indexed by arbitrary ordered keys.

use std::collections::BTreeMap;

use crate::lincomb::LinearCombination;
use crate::scalar::Field;

/// Keeps a set of independent vectors, each normalized so that its largest
/// key has coefficient one and no other stored vector uses that key as
/// pivot.
#[derive(Clone, Debug)]
pub struct SpanBuilder<K: Ord + Clone, F: Field> {
    rows: BTreeMap<K, LinearCombination<K, F>>,
}

impl<K: Ord + Clone, F: Field> Default for SpanBuilder<K, F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Clone, F: Field> SpanBuilder<K, F> {
    pub fn new() -> Self {
        SpanBuilder { rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` after subtracting the stored rows.
    pub fn reduce(&self, mut v: LinearCombination<K, F>) -> LinearCombination<K, F> {
        loop {
            let Some((top, c)) = v.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) else {
                return v;
            };
            match self.rows.get(&top) {
                Some(row) => v.add_assign_scaled(row, &-c),
                None => return v,
            }
        }
    }

    pub fn contains(&self, v: &LinearCombination<K, F>) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Adds `v` and reports whether it enlarged the span.
    pub fn insert(&mut self, v: LinearCombination<K, F>) -> bool {
        let mut r = self.reduce(v);
        let Some((top, c)) = r.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        r.scale(&c.inv());
        self.rows.insert(top, r);
        true
    }
}
