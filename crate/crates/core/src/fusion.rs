//! Characters of the dual group: the ring in which convolution of orbit
//! sheaves becomes multiplication.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::datum::Coweight;
use crate::engine::Satake;
use crate::error::{Result, SatakeError};
use crate::multiplicity::DecompositionTable;

/// A finitely supported integer combination of coweights. Zero coefficients
/// are never stored, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    datum: u64,
    n: usize,
    terms: BTreeMap<Coweight, i64>,
}

impl Character {
    pub fn zero(engine: &Satake) -> Self {
        Character {
            datum: engine.fingerprint(),
            n: engine.root_system().lattice_rank(),
            terms: BTreeMap::new(),
        }
    }

    /// A possibly virtual character from explicit terms.
    pub fn from_terms<I: IntoIterator<Item = (Coweight, i64)>>(engine: &Satake, terms: I) -> Result<Self> {
        let mut c = Character::zero(engine);
        for (k, v) in terms {
            engine.root_system().check_len(&k)?;
            c.add_term(k, v);
        }
        Ok(c)
    }

    fn add_term(&mut self, key: Coweight, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.remove(&key);
        }
    }

    /// `self += k * other`
    pub fn add_scaled(&mut self, k: i64, other: &Character) -> Result<()> {
        if self.datum != other.datum {
            return Err(SatakeError::DatumMismatch);
        }
        for (w, c) in &other.terms {
            self.add_term(w.clone(), k * c);
        }
        Ok(())
    }

    pub fn coefficient(&self, w: &Coweight) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> &BTreeMap<Coweight, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of coefficients: the dimension for a genuine character.
    pub fn degree(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn lattice_rank(&self) -> usize {
        self.n
    }
}

/// Dimensions of the cohomological degrees: degree k ↦ dim ℍ^k.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct GradedDims {
    entries: BTreeMap<i64, u64>,
}

impl GradedDims {
    pub fn get(&self, k: i64) -> u64 {
        self.entries.get(&k).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &u64)> {
        self.entries.iter()
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn top_degree(&self) -> Option<i64> {
        self.entries.keys().next_back().copied()
    }

    pub fn is_palindromic(&self) -> bool {
        self.entries.iter().all(|(k, v)| self.get(-k) == *v)
    }

    pub fn as_map(&self) -> &BTreeMap<i64, u64> {
        &self.entries
    }
}

impl FromIterator<(i64, u64)> for GradedDims {
    fn from_iter<I: IntoIterator<Item = (i64, u64)>>(iter: I) -> Self {
        let mut entries = BTreeMap::new();
        for (k, v) in iter {
            if v > 0 {
                *entries.entry(k).or_insert(0) += v;
            }
        }
        GradedDims { entries }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObjectEntry {
    pub lambda: Coweight,
    pub dim: u128,
    pub grading: GradedDims,
    pub dual: Coweight,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TensorEntry {
    pub lambda: Coweight,
    pub mu: Coweight,
    pub decomposition: DecompositionTable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub cases: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

impl CheckOutcome {
    pub(crate) fn new(name: &str) -> Self {
        CheckOutcome {
            name: name.to_string(),
            passed: true,
            cases: 0,
            failure: None,
        }
    }

    /// Records one case; keeps the first failure message.
    pub(crate) fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.passed {
            self.passed = false;
            self.failure = Some(describe());
        }
    }
}

/// Objects up to a height bound, their pairwise tensor products, and the
/// cross-checks run while building them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SatakeReport {
    pub height_bound: i64,
    pub objects: Vec<ObjectEntry>,
    pub tensor: Vec<TensorEntry>,
    pub checks: Vec<CheckOutcome>,
}

impl SatakeReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Largest number of objects a report will tabulate.
pub const REPORT_OBJECT_CAP: usize = 200;

impl Satake {
    fn same_datum(&self, c: &Character) -> Result<()> {
        if c.datum == self.fingerprint() {
            Ok(())
        } else {
            Err(SatakeError::DatumMismatch)
        }
    }

    /// char V_λ; the leading term λ has coefficient 1.
    pub fn irreducible_character(&self, lambda: &Coweight) -> Result<Character> {
        let table = self.shared_weight_table(lambda)?;
        Character::from_terms(self, table.iter().map(|(k, &v)| (k.clone(), v as i64)))
    }

    /// Convolution of finitely supported maps.
    pub fn product(&self, c1: &Character, c2: &Character) -> Result<Character> {
        self.same_datum(c1)?;
        self.same_datum(c2)?;
        let mut acc: HashMap<Coweight, i64> = HashMap::with_capacity(c1.terms.len() * c2.terms.len());
        for (w1, a) in &c1.terms {
            for (w2, b) in &c2.terms {
                *acc.entry(w1 + w2).or_insert(0) += a * b;
            }
        }
        let mut out = Character::zero(self);
        out.terms = acc.into_iter().filter(|(_, v)| *v != 0).collect();
        Ok(out)
    }

    /// Writes a W-invariant character as an integer combination of
    /// irreducible characters, peeling off the highest dominant term first.
    pub fn decompose(&self, c: &Character) -> Result<DecompositionTable> {
        self.same_datum(c)?;
        let sys = &self.sys;
        for (w, coeff) in &c.terms {
            for i in 0..sys.semisimple_rank() {
                if c.coefficient(&sys.reflect(i, w)?) != *coeff {
                    return Err(SatakeError::NonWInvariantInput(w.clone()));
                }
            }
        }
        let mut rest = c.clone();
        let mut found: Vec<(Coweight, i64)> = Vec::new();
        while !rest.is_zero() {
            let pivot = rest
                .terms
                .iter()
                .filter(|(w, _)| sys.is_dominant(w))
                .max_by(|(a, _), (b, _)| sys.doubled_height(a).cmp(&sys.doubled_height(b)).then_with(|| a.cmp(b)))
                .map(|(w, &k)| (w.clone(), k))
                .ok_or_else(|| SatakeError::Internal("W-invariant remainder without a dominant term".into()))?;
            let irreducible = self.irreducible_character(&pivot.0)?;
            rest.add_scaled(-pivot.1, &irreducible)?;
            found.push(pivot);
        }
        found.sort();
        if let Some((w, k)) = found.iter().find(|(_, k)| *k < 0) {
            return Err(SatakeError::NegativeMultiplicity {
                weight: w.clone(),
                multiplicity: *k,
            });
        }
        Ok(found.into_iter().map(|(w, k)| (w, k as u64)).collect())
    }

    /// V_λ ⊗ V_μ as a sum of irreducibles.
    pub fn tensor_decompose(&self, lambda: &Coweight, mu: &Coweight) -> Result<DecompositionTable> {
        let a = self.irreducible_character(lambda)?;
        let b = self.irreducible_character(mu)?;
        self.decompose(&self.product(&a, &b)?)
    }

    /// Highest weight −w₀λ of the dual representation.
    pub fn dual_object(&self, lambda: &Coweight) -> Result<Coweight> {
        self.sys.require_dominant(lambda)?;
        Ok(self.sys.dominant(&-lambda))
    }

    /// dim ℍ^k = Σ { m_λ(ν) : ⟨2ρ, ν⟩ = k }.
    pub fn fiber_functor_grading(&self, lambda: &Coweight) -> Result<GradedDims> {
        let table = self.shared_weight_table(lambda)?;
        Ok(table
            .iter()
            .map(|(nu, &m)| (self.sys.doubled_height(nu), m))
            .collect())
    }

    /// Tabulates every dominant λ in the coroot span with doubled height at
    /// most `height_bound`, together with all pairwise tensor products.
    pub fn satake_report(&self, height_bound: i64) -> Result<SatakeReport> {
        if height_bound < 0 {
            return Err(SatakeError::Precondition("height bound must be nonnegative".into()));
        }
        let lambdas = self.sys.dominant_coweights_up_to(height_bound);
        if lambdas.len() > REPORT_OBJECT_CAP {
            return Err(SatakeError::ResourceCap(format!(
                "{} objects below height {height_bound} (cap {REPORT_OBJECT_CAP})",
                lambdas.len()
            )));
        }
        let mut sum_rule = CheckOutcome::new("sum_rule");
        let mut grading = CheckOutcome::new("grading_symmetry");
        let mut duality = CheckOutcome::new("dual_involution");
        let mut objects = Vec::with_capacity(lambdas.len());
        for lambda in &lambdas {
            let dim = self.weyl_dimension(lambda)?;
            let table = self.weight_table(lambda)?;
            sum_rule.record(u128::from(table.total()) == dim, || {
                format!("λ={lambda}: Σm = {} but dim = {dim}", table.total())
            });
            let g = self.fiber_functor_grading(lambda)?;
            let top = self.sys.doubled_height(lambda);
            grading.record(
                g.is_palindromic()
                    && u128::from(g.total()) == dim
                    && g.top_degree() == Some(top)
                    && g.get(top) == 1
                    && g.iter().all(|(k, _)| (k - top) % 2 == 0),
                || format!("λ={lambda}: grading {:?}", g.as_map()),
            );
            let dual = self.dual_object(lambda)?;
            duality.record(self.dual_object(&dual)? == *lambda, || format!("λ={lambda}: dual {dual}"));
            objects.push(ObjectEntry {
                lambda: lambda.clone(),
                dim,
                grading: g,
                dual,
            });
        }

        let mut dims = CheckOutcome::new("dimension_multiplicativity");
        let mut rigidity = CheckOutcome::new("rigidity");
        let mut support = CheckOutcome::new("convolution_support");
        let zero = Coweight::zero(self.sys.lattice_rank());
        let mut tensor = Vec::new();
        for (i, a) in objects.iter().enumerate() {
            for b in &objects[i..] {
                let decomposition = self.tensor_decompose(&a.lambda, &b.lambda)?;
                let mut total = 0u128;
                for (nu, &n) in decomposition.iter() {
                    total += u128::from(n) * self.weyl_dimension(nu)?;
                }
                dims.record(total == a.dim * b.dim, || {
                    format!("λ={}, μ={}: Σ N dim = {total}, expected {}", a.lambda, b.lambda, a.dim * b.dim)
                });
                let top = &a.lambda + &b.lambda;
                support.record(
                    decomposition.get(&top) == 1 && decomposition.keys().all(|nu| self.sys.dominance_leq(nu, &top)),
                    || format!("λ={}, μ={}: support {:?}", a.lambda, b.lambda, decomposition.as_map()),
                );
                let expected = u64::from(b.lambda == a.dual);
                rigidity.record(decomposition.get(&zero) == expected, || {
                    format!("λ={}, μ={}: identity multiplicity {}", a.lambda, b.lambda, decomposition.get(&zero))
                });
                tensor.push(TensorEntry {
                    lambda: a.lambda.clone(),
                    mu: b.lambda.clone(),
                    decomposition,
                });
            }
        }
        Ok(SatakeReport {
            height_bound,
            objects,
            tensor,
            checks: vec![sum_rule, grading, duality, dims, support, rigidity],
        })
    }
}
