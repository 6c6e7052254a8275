use std::collections::btree_map::{self, BTreeMap};

use num_bigint::BigInt;
use num_traits::Zero;

/// Finitely supported map `K -> Z` with exact support: zero values are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sparse<K: Ord> {
    entries: BTreeMap<K, BigInt>,
}

impl<K: Ord> Default for Sparse<K> {
    fn default() -> Self {
        Sparse {
            entries: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> Sparse<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_at(&mut self, key: K, delta: impl Into<BigInt>) {
        let delta = delta.into();
        if delta.is_zero() {
            return;
        }
        match self.entries.entry(key) {
            btree_map::Entry::Vacant(v) => {
                v.insert(delta);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += delta;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn get(&self, key: &K) -> BigInt {
        self.entries.get(key).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, BigInt> {
        self.entries.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, BigInt> {
        self.entries.keys()
    }

    pub fn values(&self) -> btree_map::Values<'_, K, BigInt> {
        self.entries.values()
    }

    pub fn first(&self) -> Option<(&K, &BigInt)> {
        self.entries.iter().next()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add_scaled(&mut self, other: &Sparse<K>, factor: &BigInt) {
        for (k, v) in other.iter() {
            self.add_at(k.clone(), v * factor);
        }
    }

    pub fn add_assign(&mut self, other: &Sparse<K>) {
        for (k, v) in other.iter() {
            self.add_at(k.clone(), v.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &Sparse<K>) {
        for (k, v) in other.iter() {
            self.add_at(k.clone(), -v);
        }
    }

    pub fn negated(&self) -> Sparse<K> {
        Sparse {
            entries: self.entries.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }

    pub fn scaled(&self, factor: &BigInt) -> Sparse<K> {
        let mut out = Sparse::new();
        out.add_scaled(self, factor);
        out
    }

    /// Re-keys every entry; colliding keys are summed.
    pub fn map_keys<J: Ord + Clone>(&self, mut f: impl FnMut(&K) -> Option<J>) -> Sparse<J> {
        let mut out = Sparse::new();
        for (k, v) in self.iter() {
            if let Some(j) = f(k) {
                out.add_at(j, v.clone());
            }
        }
        out
    }

    pub fn total(&self) -> BigInt {
        self.entries.values().sum()
    }
}

impl<K: Ord + Clone, V: Into<BigInt>> FromIterator<(K, V)> for Sparse<K> {
    fn from_iter<I: IntoIterator<Item = (K, V)>>(iter: I) -> Self {
        let mut out = Sparse::new();
        for (k, v) in iter {
            out.add_at(k, v);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeros_are_dropped() {
        let mut s: Sparse<u8> = Sparse::new();
        s.add_at(1, 3);
        s.add_at(1, -3);
        s.add_at(2, 0);
        assert!(s.is_empty());
        let t: Sparse<u8> = [(1, 2), (2, 5), (1, -2)].into_iter().collect();
        assert_eq!(t.len(), 1);
        assert_eq!(t.get(&2), BigInt::from(5));
        assert_eq!(t.get(&1), BigInt::zero());
    }
}
