//! Memoized quadrature rules.
//!
//! Rules are pure functions of (n, a, b), so caching them changes no result;
//! it only avoids repeating the O(n²) eigenvalue solve.

use super::quadrature::{GaussJacobiX, QuadratureRule};
use crate::error::Result;
use crate::scalar::Real;
use std::any::{Any, TypeId};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

type Key = (TypeId, bool, usize, u64, u64);
type Store = Mutex<HashMap<Key, Arc<dyn Any + Send + Sync>>>;

fn store() -> &'static Store {
    static STORE: OnceLock<Store> = OnceLock::new();
    STORE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cached<V: Any + Send + Sync>(key: Key, build: impl FnOnce() -> Result<V>) -> Result<Arc<V>> {
    if let Some(v) = store().lock().expect("rule cache poisoned").get(&key) {
        return Ok(Arc::clone(v).downcast::<V>().expect("cache entry type"));
    }
    // built outside the lock; a concurrent duplicate build yields the same rule
    let v = Arc::new(build()?);
    store()
        .lock()
        .expect("rule cache poisoned")
        .insert(key, v.clone() as Arc<dyn Any + Send + Sync>);
    Ok(v)
}

/// Shared θ-rule for the weight (sin θ/2)^{2a+1}(cos θ/2)^{2b+1}.
pub fn cached_rule<T: Real>(n: usize, a: T, b: T) -> Result<Arc<QuadratureRule<T>>> {
    let key = (TypeId::of::<T>(), false, n, a.f64().to_bits(), b.f64().to_bits());
    cached(key, || QuadratureRule::new(n, a, b))
}

/// Shared x-rule for the weight (1−x)^a(1+x)^b.
pub fn cached_x_rule<T: Real>(n: usize, a: T, b: T) -> Result<Arc<GaussJacobiX<T>>> {
    let key = (TypeId::of::<T>(), true, n, a.f64().to_bits(), b.f64().to_bits());
    cached(key, || GaussJacobiX::new(n, a, b))
}
