use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, RwLock};

/// Thread-safe memo table with an optional entry limit.
///
/// Lookups never block each other. Once the limit is reached new results are
/// still returned but no longer stored, so the table is transparent: callers
/// get identical values with or without it.
pub struct Memo<K, V> {
    map: RwLock<HashMap<K, Arc<V>>>,
    limit: Option<usize>,
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub fn new(limit: Option<usize>) -> Self {
        Memo {
            map: RwLock::new(HashMap::new()),
            limit,
        }
    }

    pub fn unbounded() -> Self {
        Self::new(None)
    }

    pub fn get(&self, key: &K) -> Option<Arc<V>> {
        self.map.read().unwrap().get(key).cloned()
    }

    /// Returns the cached value for `key`, computing it with `f` on a miss.
    ///
    /// `f` runs without the lock held, so it may recurse into the same table.
    pub fn get_or_insert_with<F: FnOnce() -> V>(&self, key: &K, f: F) -> Arc<V> {
        if let Some(v) = self.get(key) {
            return v;
        }
        let value = Arc::new(f());
        let mut map = self.map.write().unwrap();
        if let Some(existing) = map.get(key) {
            return existing.clone();
        }
        if self.limit.is_none_or(|cap| map.len() < cap) {
            map.insert(key.clone(), value.clone());
        }
        value
    }

    pub fn len(&self) -> usize {
        self.map.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clear(&self) {
        self.map.write().unwrap().clear();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn limit_caps_storage_not_results() {
        let memo: Memo<u32, u32> = Memo::new(Some(2));
        for k in 0..5 {
            assert_eq!(*memo.get_or_insert_with(&k, || k * 10), k * 10);
        }
        assert_eq!(memo.len(), 2);
        assert_eq!(*memo.get_or_insert_with(&4, || 99), 99);
        assert_eq!(*memo.get_or_insert_with(&0, || 99), 0);
    }
}
