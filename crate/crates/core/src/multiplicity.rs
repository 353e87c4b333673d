//! Weight multiplicities of the irreducible representations of the dual
//! group, indexed by dominant coweights.
//!
//! The roots of the dual group are the coroots of the datum, so every
//! formula below runs over positive coroots and uses ρ̌, the half sum of the
//! positive coroots. It is carried doubled (`2ρ̌`) and halved only where the
//! lattice guarantees an even result.
//!
//! Two independent routes are provided: Kostant's alternating sum over the
//! Weyl group, and Freudenthal's recursion with respect to an invariant form.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_rational::{Ratio, Rational64};
use num_traits::Zero;
use serde::Serialize;

use crate::datum::{pair, symmetrizer, Coweight};
use crate::engine::{lock, Satake, Shifts};
use crate::error::{Result, SatakeError};
use crate::weyl::RootSystem;

/// A finitely supported map from coweights to positive multiplicities.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct DecompositionTable {
    entries: BTreeMap<Coweight, u64>,
}

impl DecompositionTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `mult` at `key`; zero contributions are ignored.
    pub fn add(&mut self, key: Coweight, mult: u64) {
        if mult > 0 {
            *self.entries.entry(key).or_insert(0) += mult;
        }
    }

    pub fn get(&self, key: &Coweight) -> u64 {
        self.entries.get(key).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Coweight, &u64)> {
        self.entries.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &Coweight> {
        self.entries.keys()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of all multiplicities.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn as_map(&self) -> &BTreeMap<Coweight, u64> {
        &self.entries
    }
}

impl FromIterator<(Coweight, u64)> for DecompositionTable {
    fn from_iter<I: IntoIterator<Item = (Coweight, u64)>>(iter: I) -> Self {
        let mut t = DecompositionTable::new();
        for (k, v) in iter {
            t.add(k, v);
        }
        t
    }
}

/// A W-invariant inner product on the coweight space.
///
/// On the coroot span it is the symmetrization of the Cartan matrix, scaled
/// so that the short coroots of each simple factor have squared length 2.
/// The central directions (common kernel of the simple roots) get the
/// standard dot product and are orthogonal to the coroot span.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantForm {
    gram: Vec<Vec<Rational64>>,
}

impl InvariantForm {
    pub fn new(sys: &RootSystem) -> Result<Self> {
        let d = symmetrizer(sys.cartan())
            .ok_or_else(|| SatakeError::Internal("validated Cartan matrix is not symmetrizable".into()))?;
        let n = sys.lattice_rank();
        let datum = sys.datum();
        let basis: Vec<Coweight> = (0..n)
            .map(|a| Coweight((0..n).map(|k| i64::from(k == a)).collect()))
            .collect();
        // Split each basis vector into coroot-span and central components.
        let split: Vec<(Vec<Rational64>, Vec<Rational64>)> = basis
            .iter()
            .map(|e| {
                let c = sys.span_coefficients(e);
                let mut central: Vec<Rational64> = e.0.iter().map(|&x| Rational64::from(x)).collect();
                for (cj, cor) in c.iter().zip(&datum.simple_coroots) {
                    for (slot, x) in central.iter_mut().zip(&cor.0) {
                        *slot -= cj * Rational64::from(*x);
                    }
                }
                (c, central)
            })
            .collect();
        let mut gram = vec![vec![Rational64::zero(); n]; n];
        for a in 0..n {
            for b in 0..n {
                let (ca, za) = &split[a];
                let span: Rational64 = (0..sys.semisimple_rank())
                    .map(|i| ca[i] * d[i] * Rational64::from(pair(&datum.simple_roots[i], &basis[b])))
                    .sum();
                let central: Rational64 = za.iter().zip(&split[b].1).map(|(x, y)| x * y).sum();
                gram[a][b] = span + central;
            }
        }
        Ok(InvariantForm { gram })
    }

    pub fn gram(&self) -> &[Vec<Rational64>] {
        &self.gram
    }

    pub fn eval(&self, u: &Coweight, v: &Coweight) -> Rational64 {
        let mut total = Rational64::zero();
        for (a, row) in self.gram.iter().enumerate() {
            if u.0[a] == 0 {
                continue;
            }
            let inner: Rational64 = row.iter().zip(&v.0).map(|(g, &x)| g * Rational64::from(x)).sum();
            total += inner * Rational64::from(u.0[a]);
        }
        total
    }
}

impl Satake {
    fn coroot_coords_of_positive(&self) -> Vec<Vec<i64>> {
        self.sys
            .positive_roots()
            .iter()
            .map(|p| p.coroot_coords.clone())
            .collect()
    }

    /// Number of ways to write `beta` as a nonnegative integer combination of
    /// positive coroots.
    pub fn kostant_partition(&self, beta: &Coweight) -> Result<u64> {
        self.sys.check_len(beta)?;
        Ok(match self.sys.coroot_coordinates(beta) {
            Some(c) => self.partition_in_coroot_coords(&c),
            None => 0,
        })
    }

    pub(crate) fn partition_in_coroot_coords(&self, target: &[i64]) -> u64 {
        if target.iter().any(|&x| x < 0) {
            return 0;
        }
        if self.caching {
            if let Some(&v) = lock(&self.caches.partitions).get(target) {
                return v;
            }
        }
        let gammas = self.coroot_coords_of_positive();
        let r = self.sys.semisimple_rank();
        let value = if self.caching {
            let mut memo = lock(&self.caches.partition_steps);
            count_partitions(&gammas, r, gammas.len(), target.to_vec(), &mut memo)
        } else {
            count_partitions(&gammas, r, gammas.len(), target.to_vec(), &mut HashMap::new())
        };
        if self.caching {
            lock(&self.caches.partitions).insert(target.to_vec(), value);
        }
        value
    }

    fn kostant_shifts(&self, lambda: &Coweight) -> Result<Shifts> {
        if self.caching {
            if let Some(v) = lock(&self.caches.kostant_shifts).get(lambda) {
                return Ok(v.clone());
            }
        }
        let top = &lambda.scaled(2) + self.sys.two_rho_check();
        let orbit = self.sys.regular_orbit(&top, self.weyl_cap)?;
        let mut shifts = Vec::with_capacity(orbit.len());
        for (odd, image) in orbit {
            let doubled = &image - &top;
            let coords = self.sys.coroot_coordinates(&doubled).ok_or_else(|| {
                SatakeError::Internal(format!("w(λ+ρ̌) − (λ+ρ̌) left the coroot lattice at {doubled}"))
            })?;
            if coords.iter().any(|x| x % 2 != 0) {
                return Err(SatakeError::Internal(format!("odd ρ̌-shift {doubled}")));
            }
            shifts.push((odd, coords.iter().map(|x| x / 2).collect()));
        }
        let shifts = Arc::new(shifts);
        if self.caching {
            lock(&self.caches.kostant_shifts).insert(lambda.clone(), shifts.clone());
        }
        Ok(shifts)
    }

    /// m_λ(ν) by Kostant's multiplicity formula.
    pub fn weight_multiplicity_kostant(&self, lambda: &Coweight, nu: &Coweight) -> Result<u64> {
        self.sys.require_dominant(lambda)?;
        self.sys.check_len(nu)?;
        if !self.in_support(lambda, nu) {
            return Ok(0);
        }
        let base = self
            .sys
            .coroot_coordinates(&(lambda - nu))
            .expect("support check guarantees coroot lattice");
        let shifts = self.kostant_shifts(lambda)?;
        let mut total: i128 = 0;
        for (odd, shift) in shifts.iter() {
            let target: Vec<i64> = shift.iter().zip(&base).map(|(a, b)| a + b).collect();
            let p = i128::from(self.partition_in_coroot_coords(&target));
            total += if *odd { -p } else { p };
        }
        u64::try_from(total).map_err(|_| SatakeError::Internal(format!("Kostant sum {total} at λ={lambda}, ν={nu}")))
    }

    /// Whether ν is a weight of V_λ: its dominant representative lies below λ
    /// in the dominance order.
    pub fn in_support(&self, lambda: &Coweight, nu: &Coweight) -> bool {
        let dom = self.sys.dominant(nu);
        self.sys.dominance_leq(&dom, lambda)
    }

    /// Dominant μ ≤ λ, by enumerating coroot coefficient vectors. Dominant
    /// weights have nonnegative height, which bounds the coefficient sum.
    pub fn dominant_weights_below(&self, lambda: &Coweight) -> Result<Vec<Coweight>> {
        self.sys.require_dominant(lambda)?;
        let r = self.sys.semisimple_rank();
        let budget = self.sys.doubled_height(lambda) / 2;
        let mut out = Vec::new();
        let mut coeffs = vec![0i64; r];
        fn walk(s: &Satake, lambda: &Coweight, k: usize, left: i64, coeffs: &mut Vec<i64>, out: &mut Vec<Coweight>) {
            if k == coeffs.len() {
                let mu = lambda - &s.sys.coroot_combination(coeffs);
                if s.sys.is_dominant(&mu) {
                    out.push(mu);
                }
                return;
            }
            for c in 0..=left {
                coeffs[k] = c;
                walk(s, lambda, k + 1, left - c, coeffs, out);
            }
            coeffs[k] = 0;
        }
        walk(self, lambda, 0, budget, &mut coeffs, &mut out);
        out.sort_by(|a, b| {
            self.sys
                .doubled_height(b)
                .cmp(&self.sys.doubled_height(a))
                .then_with(|| b.cmp(a))
        });
        Ok(out)
    }

    /// Multiplicities of all dominant weights of V_λ via Freudenthal's recursion.
    pub fn dominant_multiplicities(&self, lambda: &Coweight) -> Result<Arc<BTreeMap<Coweight, u64>>> {
        if self.caching {
            if let Some(t) = lock(&self.caches.dominant_tables).get(lambda) {
                return Ok(t.clone());
            }
        }
        let dominants = self.dominant_weights_below(lambda)?;
        let two_rho_check = self.sys.two_rho_check();
        let positive = self.sys.positive_coroots();
        let lambda_plus = &(lambda + lambda) + two_rho_check;
        let mut table: BTreeMap<Coweight, u64> = BTreeMap::new();
        for mu in &dominants {
            if mu == lambda {
                table.insert(mu.clone(), 1);
                continue;
            }
            let mut numerator = Rational64::zero();
            for beta in &positive {
                let mut k = 1;
                loop {
                    let shifted = mu.add_scaled(k, beta);
                    let dom = self.sys.dominant(&shifted);
                    let Some(&m) = table.get(&dom) else {
                        break;
                    };
                    numerator += Rational64::from(m as i64) * self.form.eval(&shifted, beta);
                    k += 1;
                }
            }
            // |λ+ρ̌|² − |μ+ρ̌|² = (λ−μ, λ+μ+2ρ̌)
            let denominator = self.form.eval(&(lambda - mu), &(&(lambda + mu) + two_rho_check));
            if denominator <= Rational64::zero() {
                return Err(SatakeError::Internal(format!(
                    "nonpositive Freudenthal denominator at μ={mu} (λ+ρ̌ doubled {lambda_plus})"
                )));
            }
            let m = numerator * Rational64::from(2) / denominator;
            if !m.is_integer() || m < Rational64::zero() {
                return Err(SatakeError::Internal(format!("Freudenthal value {m} at μ={mu}")));
            }
            table.insert(mu.clone(), m.to_integer() as u64);
        }
        let table = Arc::new(table);
        if self.caching {
            lock(&self.caches.dominant_tables).insert(lambda.clone(), table.clone());
        }
        Ok(table)
    }

    /// m_λ(ν) by Freudenthal's recursion.
    pub fn weight_multiplicity_freudenthal(&self, lambda: &Coweight, nu: &Coweight) -> Result<u64> {
        self.sys.require_dominant(lambda)?;
        self.sys.check_len(nu)?;
        if !self.in_support(lambda, nu) {
            return Ok(0);
        }
        let table = self.dominant_multiplicities(lambda)?;
        Ok(table.get(&self.sys.dominant(nu)).copied().unwrap_or(0))
    }

    /// m_λ(ν); Kostant's formula.
    pub fn weight_multiplicity(&self, lambda: &Coweight, nu: &Coweight) -> Result<u64> {
        self.weight_multiplicity_kostant(lambda, nu)
    }

    /// dim V_λ = Π ⟨β, λ+ρ̌⟩ / ⟨β, ρ̌⟩ over positive roots β of the datum
    /// (the coroots of the dual group).
    pub fn weyl_dimension(&self, lambda: &Coweight) -> Result<u128> {
        self.sys.require_dominant(lambda)?;
        let top = &lambda.scaled(2) + self.sys.two_rho_check();
        let mut acc: Ratio<i128> = Ratio::from_integer(1);
        for p in self.sys.positive_roots() {
            let num = i128::from(pair(&p.root, &top));
            let den = i128::from(pair(&p.root, self.sys.two_rho_check()));
            acc *= Ratio::new(num, den);
        }
        if !acc.is_integer() || acc.to_integer() <= 0 {
            return Err(SatakeError::Internal(format!("Weyl dimension {acc} at λ={lambda}")));
        }
        Ok(acc.to_integer() as u128)
    }

    /// Full weight-space table of V_λ.
    pub fn weight_table(&self, lambda: &Coweight) -> Result<DecompositionTable> {
        Ok(self.shared_weight_table(lambda)?.as_ref().clone())
    }

    pub(crate) fn shared_weight_table(&self, lambda: &Coweight) -> Result<Arc<DecompositionTable>> {
        if self.caching {
            if let Some(t) = lock(&self.caches.weight_tables).get(lambda) {
                return Ok(t.clone());
            }
        }
        let dominant = self.dominant_multiplicities(lambda)?;
        let mut table = DecompositionTable::new();
        for (mu, &m) in dominant.iter() {
            for w in self.sys.orbit(mu) {
                table.add(w, m);
            }
        }
        let table = Arc::new(table);
        if self.caching {
            lock(&self.caches.weight_tables).insert(lambda.clone(), table.clone());
        }
        Ok(table)
    }
}

/// Partitions of `target` using the first `k` of `gammas`. The first `r`
/// entries are the simple coroots, i.e. unit vectors, so with only those left
/// the count is 1 for any nonnegative target.
fn count_partitions(
    gammas: &[Vec<i64>],
    r: usize,
    k: usize,
    target: Vec<i64>,
    memo: &mut HashMap<(usize, Vec<i64>), u64>,
) -> u64 {
    if target.iter().any(|&x| x < 0) {
        return 0;
    }
    if k <= r {
        let rest_zero = target.iter().enumerate().all(|(i, &x)| i < k || x == 0);
        return u64::from(rest_zero);
    }
    let key = (k, target);
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let gamma = &gammas[k - 1];
    let mut total = 0u64;
    let mut cur = key.1.clone();
    loop {
        total += count_partitions(gammas, r, k - 1, cur.clone(), memo);
        for (x, g) in cur.iter_mut().zip(gamma) {
            *x -= g;
        }
        if cur.iter().any(|&x| x < 0) {
            break;
        }
    }
    memo.insert(key, total);
    total
}
