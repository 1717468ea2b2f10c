//! Finite formal sums of generators.

use std::collections::btree_map::{self, BTreeMap};

use crate::graded::Sign;
use crate::scalar::Scalar;

/// `sum c_k * k` with no zero coefficients stored.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearCombination<K: Ord, T> {
    terms: BTreeMap<K, T>,
}

impl<K: Ord, T: Scalar> Default for LinearCombination<K, T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord, T: Scalar> LinearCombination<K, T> {
    pub fn new() -> Self {
        LinearCombination { terms: BTreeMap::new() }
    }

    pub fn single(k: K, c: T) -> Self {
        let mut lc = Self::new();
        lc.add_term(k, c);
        lc
    }

    pub fn add_term(&mut self, k: K, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_signed(&mut self, k: K, s: Sign) {
        self.add_term(k, s.to_scalar());
    }

    pub fn add_assign_scaled(&mut self, other: &Self, c: &T)
    where
        K: Clone,
    {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v.clone() * c.clone());
        }
    }

    pub fn scale(&mut self, c: &T) {
        if c.is_zero() {
            self.terms.clear();
            return;
        }
        for v in self.terms.values_mut() {
            *v = v.clone() * c.clone();
        }
    }

    pub fn get(&self, k: &K) -> Option<&T> {
        self.terms.get(k)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, T> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, T> {
        self.terms.keys()
    }
}

impl<K: Ord, T: Scalar> IntoIterator for LinearCombination<K, T> {
    type Item = (K, T);
    type IntoIter = btree_map::IntoIter<K, T>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<K: Ord, T: Scalar> FromIterator<(K, T)> for LinearCombination<K, T> {
    fn from_iter<I: IntoIterator<Item = (K, T)>>(iter: I) -> Self {
        let mut lc = Self::new();
        for (k, c) in iter {
            lc.add_term(k, c);
        }
        lc
    }
}
