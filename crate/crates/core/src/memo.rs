//! Process-wide memo tables for Kostant partition function and Kostka values.
//!
//! Both tables are idempotent maps: a key always maps to the same value, so a
//! racing duplicate insert is harmless. Snapshots and preloading exist so the
//! CLI can persist them between runs.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;

use crate::partition::Partition;
use crate::weight::Weight;

pub struct MemoTable<K, V> {
    inner: RwLock<HashMap<K, V>>,
}

impl<K: Eq + Hash + Clone, V: Clone> MemoTable<K, V> {
    pub fn new() -> Self {
        MemoTable { inner: RwLock::new(HashMap::new()) }
    }

    pub fn get(&self, key: &K) -> Option<V> {
        self.inner.read().expect("memo lock poisoned").get(key).cloned()
    }

    pub fn insert(&self, key: K, value: V) {
        self.inner.write().expect("memo lock poisoned").entry(key).or_insert(value);
    }

    pub fn len(&self) -> usize {
        self.inner.read().expect("memo lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn snapshot(&self) -> Vec<(K, V)> {
        let guard = self.inner.read().expect("memo lock poisoned");
        guard.iter().map(|(k, v)| (k.clone(), v.clone())).collect()
    }

    pub fn clear(&self) {
        self.inner.write().expect("memo lock poisoned").clear();
    }
}

impl<K: Eq + Hash + Clone, V: Clone> Default for MemoTable<K, V> {
    fn default() -> Self {
        Self::new()
    }
}

/// Kostant partition function values keyed by the weight (its length is the rank).
pub fn kostant_table() -> &'static MemoTable<Weight, BigUint> {
    static TABLE: OnceLock<MemoTable<Weight, BigUint>> = OnceLock::new();
    TABLE.get_or_init(MemoTable::new)
}

/// Kostka numbers keyed by `(λ, τ)`; the rank is `τ.len()`.
pub fn kostka_table() -> &'static MemoTable<(Partition, Weight), BigUint> {
    static TABLE: OnceLock<MemoTable<(Partition, Weight), BigUint>> = OnceLock::new();
    TABLE.get_or_init(MemoTable::new)
}
