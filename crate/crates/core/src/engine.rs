//! The computation context shared by the multiplicity, Grassmannian and
//! fusion operations.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, HashMap};
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex};

use crate::datum::{Coweight, RootDatum};
use crate::error::Result;
use crate::multiplicity::{DecompositionTable, InvariantForm};
use crate::weyl::{RootSystem, DEFAULT_WEYL_CAP};

/// Memo tables. Every entry is a pure function of the datum, so sharing them
/// between threads only changes timing.
#[derive(Default)]
pub(crate) struct Caches {
    /// Full partition values keyed by simple-coroot coordinates.
    pub partitions: Mutex<HashMap<Vec<i64>, u64>>,
    /// Recursion memo: (number of positive coroots allowed, target).
    pub partition_steps: Mutex<HashMap<(usize, Vec<i64>), u64>>,
    /// Per highest weight: signed ρ-shifts w(λ+ρ̌) − (λ+ρ̌) in coroot coordinates.
    pub kostant_shifts: Mutex<HashMap<Coweight, Shifts>>,
    /// Per highest weight: multiplicities of the dominant weights.
    pub dominant_tables: Mutex<HashMap<Coweight, Arc<BTreeMap<Coweight, u64>>>>,
    /// Per highest weight: the full weight table.
    pub weight_tables: Mutex<HashMap<Coweight, Arc<DecompositionTable>>>,
}

/// Sign-tagged Kostant shifts for one highest weight.
pub(crate) type Shifts = Arc<Vec<(bool, Vec<i64>)>>;

pub struct Satake {
    pub(crate) sys: RootSystem,
    pub(crate) form: InvariantForm,
    pub(crate) weyl_cap: usize,
    pub(crate) caching: bool,
    pub(crate) caches: Caches,
    fingerprint: u64,
}

impl Satake {
    pub fn new(datum: RootDatum) -> Result<Self> {
        let sys = RootSystem::new(datum)?;
        let form = InvariantForm::new(&sys)?;
        let mut h = DefaultHasher::new();
        sys.datum().n.hash(&mut h);
        sys.datum().simple_roots.hash(&mut h);
        sys.datum().simple_coroots.hash(&mut h);
        Ok(Satake {
            sys,
            form,
            weyl_cap: DEFAULT_WEYL_CAP,
            caching: true,
            caches: Caches::default(),
            fingerprint: h.finish(),
        })
    }

    pub fn with_weyl_cap(mut self, cap: usize) -> Self {
        self.weyl_cap = cap;
        self
    }

    /// With caching off every call recomputes from scratch.
    pub fn with_caching(mut self, on: bool) -> Self {
        self.caching = on;
        self
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.sys
    }

    pub fn datum(&self) -> &RootDatum {
        self.sys.datum()
    }

    pub fn invariant_form(&self) -> &InvariantForm {
        &self.form
    }

    pub fn weyl_cap(&self) -> usize {
        self.weyl_cap
    }

    /// Identifies the datum for operand compatibility checks.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    /// Partition values computed so far, sorted by key.
    pub fn partition_cache_entries(&self) -> Vec<(Vec<i64>, u64)> {
        let mut v: Vec<_> = lock(&self.caches.partitions)
            .iter()
            .map(|(k, v)| (k.clone(), *v))
            .collect();
        v.sort();
        v
    }

    /// Seed the partition cache, e.g. from a persisted file. Keys of the
    /// wrong length are dropped.
    pub fn seed_partition_cache<I: IntoIterator<Item = (Vec<i64>, u64)>>(&self, entries: I) {
        if !self.caching {
            return;
        }
        let r = self.sys.semisimple_rank();
        let mut map = lock(&self.caches.partitions);
        map.extend(entries.into_iter().filter(|(k, _)| k.len() == r));
    }
}

pub(crate) fn lock<T>(m: &Mutex<T>) -> std::sync::MutexGuard<'_, T> {
    m.lock().unwrap_or_else(|poisoned| poisoned.into_inner())
}
