use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, Mutex};

/// Thread-safe memo table. Values are computed outside the lock, so two
/// threads racing on the same key may both compute it; the first insert wins.
pub(crate) struct Memo<K, V> {
    table: Mutex<HashMap<K, Arc<V>>>,
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub(crate) fn new() -> Self {
        Memo {
            table: Mutex::new(HashMap::new()),
        }
    }

    pub(crate) fn get_or_insert_with(&self, key: &K, compute: impl FnOnce() -> V) -> Arc<V> {
        if let Some(v) = self.table.lock().unwrap().get(key) {
            return Arc::clone(v);
        }
        let value = Arc::new(compute());
        let mut table = self.table.lock().unwrap();
        Arc::clone(table.entry(key.clone()).or_insert(value))
    }
}
