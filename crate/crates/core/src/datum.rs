//! Reductive root data and their Langlands duals.
//!
//! The character lattice X*(T) and the cocharacter lattice X_*(T) are both
//! stored in coordinates with respect to mutually dual bases, so the perfect
//! pairing between them is the ordinary dot product.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Result, SatakeError};
use crate::linalg;

/// A cocharacter: an integer vector in the X_*(T) basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coweight(pub Vec<i64>);

/// A character: an integer vector in the X*(T) basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

macro_rules! lattice_vector {
    ($ty:ident) => {
        impl $ty {
            pub fn zero(n: usize) -> Self {
                Self(vec![0; n])
            }

            pub fn coords(&self) -> &[i64] {
                &self.0
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|&x| x == 0)
            }

            pub fn scaled(&self, k: i64) -> Self {
                Self(self.0.iter().map(|x| x * k).collect())
            }

            /// `self + k * other`
            pub fn add_scaled(&self, k: i64, other: &Self) -> Self {
                Self(self.0.iter().zip(&other.0).map(|(a, b)| a + k * b).collect())
            }
        }

        impl std::ops::Add for &$ty {
            type Output = $ty;
            fn add(self, rhs: Self) -> $ty {
                self.add_scaled(1, rhs)
            }
        }

        impl std::ops::Sub for &$ty {
            type Output = $ty;
            fn sub(self, rhs: Self) -> $ty {
                self.add_scaled(-1, rhs)
            }
        }

        impl std::ops::Neg for &$ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                self.scaled(-1)
            }
        }

        impl From<Vec<i64>> for $ty {
            fn from(v: Vec<i64>) -> Self {
                Self(v)
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "(")?;
                for (i, x) in self.0.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
        }
    };
}

lattice_vector!(Coweight);
lattice_vector!(Weight);

/// Pairing ⟨weight, coweight⟩.
pub fn pair(w: &Weight, v: &Coweight) -> i64 {
    linalg::dot(&w.0, &v.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A Dynkin type such as `B3` or `G2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(SatakeError::InvalidCartanType {
                family: format!("{family:?}"),
                rank,
            })
        }
    }

    /// Cartan matrix with entries ⟨α_i, α̌_j⟩ in Bourbaki numbering.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            c[i][j] = -1;
            c[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C => {
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::D => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            Family::E => {
                link(0, 2);
                link(2, 3);
                link(1, 3);
                for i in 3..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::F => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            Family::G => link(0, 1),
        }
        // Double and triple bonds: ⟨α_long, α̌_short⟩ carries the bond order.
        match self.family {
            Family::B => c[n - 2][n - 1] = -2,
            Family::C => c[n - 1][n - 2] = -2,
            Family::F => c[1][2] = -2,
            Family::G => c[1][0] = -3,
            _ => {}
        }
        c
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = SatakeError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || SatakeError::InvalidCartanType {
            family: s.to_string(),
            rank: 0,
        };
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        CartanType::new(family, rank)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Isogeny {
    SimplyConnected,
    Adjoint,
}

impl FromStr for Isogeny {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "sc" | "simply-connected" | "simply_connected" => Ok(Isogeny::SimplyConnected),
            "ad" | "adjoint" => Ok(Isogeny::Adjoint),
            other => Err(format!("unknown isogeny `{other}` (expected sc or adjoint)")),
        }
    }
}

/// A reductive root datum with a chosen base of simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootDatum {
    #[serde(default)]
    pub name: Option<String>,
    #[serde(rename = "rank_lattice")]
    pub n: usize,
    #[serde(rename = "rank_semisimple")]
    pub r: usize,
    pub simple_roots: Vec<Weight>,
    pub simple_coroots: Vec<Coweight>,
}

impl RootDatum {
    /// Standard realization of a Cartan type.
    ///
    /// Simply connected: the simple coroots are the standard basis of X_*(T).
    /// Adjoint: the simple roots are the standard basis of X*(T).
    pub fn from_cartan_type(ty: CartanType, isogeny: Isogeny) -> Self {
        let c = ty.cartan_matrix();
        let r = ty.rank;
        let unit = |i: usize| (0..r).map(|k| i64::from(k == i)).collect::<Vec<_>>();
        let (roots, coroots): (Vec<Weight>, Vec<Coweight>) = match isogeny {
            Isogeny::SimplyConnected => (
                (0..r).map(|i| Weight(c[i].clone())).collect(),
                (0..r).map(|i| Coweight(unit(i))).collect(),
            ),
            Isogeny::Adjoint => (
                (0..r).map(|i| Weight(unit(i))).collect(),
                (0..r)
                    .map(|j| Coweight((0..r).map(|i| c[i][j]).collect()))
                    .collect(),
            ),
        };
        let tag = match isogeny {
            Isogeny::SimplyConnected => "sc",
            Isogeny::Adjoint => "adjoint",
        };
        RootDatum {
            name: Some(format!("{ty} {tag}")),
            n: r,
            r,
            simple_roots: roots,
            simple_coroots: coroots,
        }
    }

    pub fn build(type_name: &str, isogeny: Isogeny) -> Result<Self> {
        Ok(Self::from_cartan_type(type_name.parse()?, isogeny))
    }

    /// A datum of semisimple rank zero: a torus of the given dimension.
    pub fn torus(n: usize) -> Self {
        RootDatum {
            name: Some(format!("T{n}")),
            n,
            r: 0,
            simple_roots: Vec::new(),
            simple_coroots: Vec::new(),
        }
    }

    /// `cartan[i][j] = ⟨α_i, α̌_j⟩`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.simple_roots
            .iter()
            .map(|a| self.simple_coroots.iter().map(|c| pair(a, c)).collect())
            .collect()
    }

    pub fn validate(&self) -> std::result::Result<(), ValidationReport> {
        let mut issues = Vec::new();
        if self.r > self.n {
            issues.push(ValidationIssue::RankExceedsLattice {
                r: self.r,
                n: self.n,
            });
        }
        if self.simple_roots.len() != self.r || self.simple_coroots.len() != self.r {
            issues.push(ValidationIssue::CountMismatch {
                r: self.r,
                roots: self.simple_roots.len(),
                coroots: self.simple_coroots.len(),
            });
        }
        for (i, a) in self.simple_roots.iter().enumerate() {
            if a.len() != self.n {
                issues.push(ValidationIssue::RootLength { index: i, len: a.len() });
            }
        }
        for (i, a) in self.simple_coroots.iter().enumerate() {
            if a.len() != self.n {
                issues.push(ValidationIssue::CorootLength { index: i, len: a.len() });
            }
        }
        if !issues.is_empty() {
            return Err(ValidationReport { issues });
        }

        let c = self.cartan_matrix();
        let r = self.r;
        for i in 0..r {
            if c[i][i] != 2 {
                issues.push(ValidationIssue::DiagonalNotTwo { i, value: c[i][i] });
            }
            for j in 0..r {
                if i == j {
                    continue;
                }
                if c[i][j] > 0 {
                    issues.push(ValidationIssue::PositiveOffDiagonal { i, j, value: c[i][j] });
                }
                if (c[i][j] == 0) != (c[j][i] == 0) && i < j {
                    issues.push(ValidationIssue::AsymmetricZeroPattern { i, j });
                }
            }
        }
        let root_rows: Vec<Vec<i64>> = self.simple_roots.iter().map(|a| a.0.clone()).collect();
        let coroot_rows: Vec<Vec<i64>> = self.simple_coroots.iter().map(|a| a.0.clone()).collect();
        if linalg::rank(&root_rows) < r {
            issues.push(ValidationIssue::DependentRoots);
        }
        if linalg::rank(&coroot_rows) < r {
            issues.push(ValidationIssue::DependentCoroots);
        }
        if issues.is_empty() {
            // Symmetrizable with positive weights and positive leading minors
            // is equivalent to every principal minor being positive.
            if symmetrizer(&c).is_none() {
                issues.push(ValidationIssue::NotSymmetrizable);
            } else if let Some(k) = (1..=r).find(|&k| {
                let minor: Vec<Vec<i64>> = c[..k].iter().map(|row| row[..k].to_vec()).collect();
                linalg::determinant(&minor) <= 0
            }) {
                issues.push(ValidationIssue::NotFiniteType { leading_minor: k });
            }
        }
        if issues.is_empty() {
            Ok(())
        } else {
            Err(ValidationReport { issues })
        }
    }

    /// Swap the character and cocharacter lattices together with roots and coroots.
    pub fn langlands_dual(&self) -> Self {
        RootDatum {
            name: self.name.as_ref().map(|s| match s.strip_prefix("dual of ") {
                Some(orig) => orig.to_string(),
                None => format!("dual of {s}"),
            }),
            n: self.n,
            r: self.r,
            simple_roots: self.simple_coroots.iter().map(|c| Weight(c.0.clone())).collect(),
            simple_coroots: self.simple_roots.iter().map(|a| Coweight(a.0.clone())).collect(),
        }
    }

    /// Integer coefficients of `v` on the simple coroots, if `v` lies in the
    /// coroot lattice.
    pub fn coroot_coordinates(&self, v: &Coweight) -> Option<Vec<i64>> {
        let inv = linalg::inverse(&linalg::to_rational(&self.cartan_matrix()))?;
        coroot_coordinates_with(&inv, &self.simple_roots, &self.simple_coroots, v)
    }

    pub fn in_coroot_lattice(&self, v: &Coweight) -> bool {
        self.coroot_coordinates(v).is_some()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("root datum serializes")
    }

    pub fn from_json(s: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

/// Rational coefficients `c` with ⟨α_i, v⟩ = ⟨α_i, Σ c_j α̌_j⟩.
pub(crate) fn span_coefficients(cartan_inv: &linalg::RatMatrix, roots: &[Weight], v: &Coweight) -> Vec<Rational64> {
    let a: Vec<Rational64> = roots.iter().map(|al| Rational64::from_integer(pair(al, v))).collect();
    linalg::mat_vec(cartan_inv, &a)
}

pub(crate) fn coroot_coordinates_with(
    cartan_inv: &linalg::RatMatrix,
    roots: &[Weight],
    coroots: &[Coweight],
    v: &Coweight,
) -> Option<Vec<i64>> {
    let c = span_coefficients(cartan_inv, roots, v);
    if c.iter().any(|x| !x.is_integer()) {
        return None;
    }
    let c: Vec<i64> = c.iter().map(|x| x.to_integer()).collect();
    let mut rebuilt = vec![0i64; v.len()];
    for (cj, cor) in c.iter().zip(coroots) {
        for (slot, x) in rebuilt.iter_mut().zip(&cor.0) {
            *slot += cj * x;
        }
    }
    (rebuilt == v.0).then_some(c)
}

/// Positive `d` with `d_i c_ij = d_j c_ji`, normalized to minimum 1 on each
/// connected component of the Dynkin diagram.
pub fn symmetrizer(c: &[Vec<i64>]) -> Option<Vec<Rational64>> {
    let r = c.len();
    let mut d: Vec<Option<Rational64>> = vec![None; r];
    for start in 0..r {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Rational64::from_integer(1));
        let mut component = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let di = d[i]?;
            for j in 0..r {
                if i == j || c[i][j] == 0 {
                    continue;
                }
                if c[j][i] == 0 {
                    return None;
                }
                let dj = di * Rational64::from_integer(c[i][j]) / Rational64::from_integer(c[j][i]);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        component.push(j);
                        queue.push_back(j);
                    }
                    Some(existing) if existing != dj => return None,
                    Some(_) => {}
                }
            }
        }
        let min = component.iter().filter_map(|&k| d[k]).min()?;
        for &k in &component {
            d[k] = d[k].map(|x| x / min);
        }
    }
    let d: Vec<Rational64> = d.into_iter().collect::<Option<_>>()?;
    d.iter().all(|x| x.is_positive() && !x.is_zero()).then_some(d)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValidationIssue {
    RankExceedsLattice { r: usize, n: usize },
    CountMismatch { r: usize, roots: usize, coroots: usize },
    RootLength { index: usize, len: usize },
    CorootLength { index: usize, len: usize },
    DiagonalNotTwo { i: usize, value: i64 },
    PositiveOffDiagonal { i: usize, j: usize, value: i64 },
    AsymmetricZeroPattern { i: usize, j: usize },
    DependentRoots,
    DependentCoroots,
    NotSymmetrizable,
    NotFiniteType { leading_minor: usize },
}

impl fmt::Display for ValidationIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ValidationIssue::*;
        match self {
            RankExceedsLattice { r, n } => write!(f, "semisimple rank {r} exceeds lattice rank {n}"),
            CountMismatch { r, roots, coroots } => {
                write!(f, "expected {r} simple roots and coroots, got {roots} and {coroots}")
            }
            RootLength { index, len } => write!(f, "simple root {index} has length {len}"),
            CorootLength { index, len } => write!(f, "simple coroot {index} has length {len}"),
            DiagonalNotTwo { i, value } => write!(f, "DiagonalNotTwo: cartan({i},{i}) = {value}"),
            PositiveOffDiagonal { i, j, value } => {
                write!(f, "PositiveOffDiagonal: cartan({i},{j}) = {value}")
            }
            AsymmetricZeroPattern { i, j } => {
                write!(f, "AsymmetricZeroPattern: exactly one of cartan({i},{j}), cartan({j},{i}) vanishes")
            }
            DependentRoots => write!(f, "simple roots are linearly dependent"),
            DependentCoroots => write!(f, "simple coroots are linearly dependent"),
            NotSymmetrizable => write!(f, "Cartan matrix is not symmetrizable"),
            NotFiniteType { leading_minor } => {
                write!(f, "Cartan matrix is not of finite type (leading minor {leading_minor} is not positive)")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub issues: Vec<ValidationIssue>,
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, issue) in self.issues.iter().enumerate() {
            if k > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{issue}")?;
        }
        Ok(())
    }
}

impl std::error::Error for ValidationReport {}

#[cfg(test)]
mod tests {
    use super::*;

    fn transpose(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
        (0..m.len()).map(|j| m.iter().map(|row| row[j]).collect()).collect()
    }

    /// Brute-force check over every principal submatrix.
    fn all_principal_minors_positive(c: &[Vec<i64>]) -> bool {
        let r = c.len();
        (1u32..(1 << r)).all(|mask| {
            let idx: Vec<usize> = (0..r).filter(|&i| mask & (1 << i) != 0).collect();
            let sub: Vec<Vec<i64>> = idx.iter().map(|&i| idx.iter().map(|&j| c[i][j]).collect()).collect();
            linalg::determinant(&sub) > 0
        })
    }

    fn generated() -> Vec<RootDatum> {
        let mut out = Vec::new();
        for name in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "F4", "G2"] {
            for iso in [Isogeny::SimplyConnected, Isogeny::Adjoint] {
                out.push(RootDatum::build(name, iso).unwrap());
            }
        }
        out
    }

    #[test]
    fn a1_tables() {
        let ad = RootDatum::build("A1", Isogeny::Adjoint).unwrap();
        assert_eq!(ad.simple_roots, vec![Weight(vec![1])]);
        assert_eq!(ad.simple_coroots, vec![Coweight(vec![2])]);
        let sc = RootDatum::build("A1", Isogeny::SimplyConnected).unwrap();
        assert_eq!(sc.simple_roots, vec![Weight(vec![2])]);
        assert_eq!(sc.simple_coroots, vec![Coweight(vec![1])]);
        assert_eq!(ad.cartan_matrix(), vec![vec![2]]);
        assert_eq!(sc.cartan_matrix(), vec![vec![2]]);
    }

    #[test]
    fn a2_cartan_matrix() {
        let d = RootDatum::build("A2", Isogeny::SimplyConnected).unwrap();
        let c = d.cartan_matrix();
        assert_eq!(c, vec![vec![2, -1], vec![-1, 2]]);
        assert!(all_principal_minors_positive(&c));
    }

    #[test]
    fn rank_bounds() {
        for bad in ["A0", "B1", "D3", "E5", "E9", "F3", "G3", "H3", "", "A"] {
            assert!(bad.parse::<CartanType>().is_err(), "{bad}");
        }
        assert!(matches!(
            CartanType::new(Family::G, 3),
            Err(SatakeError::InvalidCartanType { .. })
        ));
    }

    #[test]
    fn generated_data_validate() {
        for d in generated() {
            d.validate().unwrap_or_else(|e| panic!("{:?}: {e}", d.name));
            assert!(all_principal_minors_positive(&d.cartan_matrix()));
        }
        for name in ["E6", "E7", "E8", "D5", "A7"] {
            RootDatum::build(name, Isogeny::Adjoint).unwrap().validate().unwrap();
        }
    }

    #[test]
    fn sc_coroots_and_adjoint_roots_are_bases() {
        for d in generated() {
            let sc = d.name.as_deref().unwrap().ends_with("sc");
            let rows: Vec<Vec<i64>> = if sc {
                d.simple_coroots.iter().map(|v| v.0.clone()).collect()
            } else {
                d.simple_roots.iter().map(|v| v.0.clone()).collect()
            };
            assert_eq!(linalg::determinant(&rows).abs(), 1);
        }
    }

    #[test]
    fn validation_errors() {
        let mut d = RootDatum::build("A2", Isogeny::SimplyConnected).unwrap();
        d.simple_roots[0] = Weight(vec![1, -1]);
        let report = d.validate().unwrap_err();
        assert!(report.issues.contains(&ValidationIssue::DiagonalNotTwo { i: 0, value: 1 }));

        let asym = RootDatum {
            name: None,
            n: 2,
            r: 2,
            simple_roots: vec![Weight(vec![2, -1]), Weight(vec![0, 2])],
            simple_coroots: vec![Coweight(vec![1, 0]), Coweight(vec![0, 1])],
        };
        let report = asym.validate().unwrap_err();
        assert!(report.issues.contains(&ValidationIssue::AsymmetricZeroPattern { i: 0, j: 1 }));

        // Affine A1: cartan ((2,-2),(-2,2)) is not of finite type.
        let affine = RootDatum {
            name: None,
            n: 2,
            r: 2,
            simple_roots: vec![Weight(vec![2, -2]), Weight(vec![-2, 2])],
            simple_coroots: vec![Coweight(vec![1, 0]), Coweight(vec![0, 1])],
        };
        let report = affine.validate().unwrap_err();
        assert!(matches!(
            report.issues[0],
            ValidationIssue::DependentRoots | ValidationIssue::NotFiniteType { .. }
        ));

        let short = RootDatum {
            name: None,
            n: 2,
            r: 1,
            simple_roots: vec![Weight(vec![2])],
            simple_coroots: vec![Coweight(vec![1, 0])],
        };
        assert!(matches!(
            short.validate().unwrap_err().issues[0],
            ValidationIssue::RootLength { index: 0, len: 1 }
        ));
    }

    #[test]
    fn dual_is_involution_and_transposes() {
        for d in generated() {
            let dd = d.langlands_dual();
            dd.validate().unwrap();
            assert_eq!(dd.cartan_matrix(), transpose(&d.cartan_matrix()));
            assert_eq!(dd.langlands_dual(), d);
        }
        let sc = RootDatum::build("A1", Isogeny::SimplyConnected).unwrap();
        let ad = RootDatum::build("A1", Isogeny::Adjoint).unwrap();
        assert_eq!(sc.langlands_dual().simple_roots, ad.simple_roots);
        assert_eq!(sc.langlands_dual().simple_coroots, ad.simple_coroots);
    }

    #[test]
    fn dual_of_b2_is_c2() {
        let b2 = RootDatum::build("B2", Isogeny::SimplyConnected).unwrap();
        let c2 = CartanType::new(Family::C, 2).unwrap().cartan_matrix();
        assert_eq!(b2.langlands_dual().cartan_matrix(), c2);
        assert_eq!(transpose(&b2.cartan_matrix()), c2);
    }

    #[test]
    fn coroot_lattice_membership() {
        let ad = RootDatum::build("A1", Isogeny::Adjoint).unwrap();
        assert!(ad.in_coroot_lattice(&Coweight(vec![2])));
        assert!(!ad.in_coroot_lattice(&Coweight(vec![1])));
        let sc = RootDatum::build("A2", Isogeny::SimplyConnected).unwrap();
        assert_eq!(sc.coroot_coordinates(&Coweight(vec![1, 1])), Some(vec![1, 1]));
        let a2ad = RootDatum::build("A2", Isogeny::Adjoint).unwrap();
        // Fundamental coweight (1,0) in the adjoint realization is (2α̌1+α̌2)/3.
        assert!(!a2ad.in_coroot_lattice(&Coweight(vec![1, 0])));
        assert!(a2ad.in_coroot_lattice(&Coweight(vec![1, 1])));
    }

    #[test]
    fn central_directions() {
        // GL2: X*(T) = Z^2, α = e1 - e2, α̌ = e1 - e2.
        let gl2 = RootDatum {
            name: Some("GL2".into()),
            n: 2,
            r: 1,
            simple_roots: vec![Weight(vec![1, -1])],
            simple_coroots: vec![Coweight(vec![1, -1])],
        };
        gl2.validate().unwrap();
        assert!(gl2.in_coroot_lattice(&Coweight(vec![2, -2])));
        assert!(!gl2.in_coroot_lattice(&Coweight(vec![1, 1])));
        assert!(!gl2.in_coroot_lattice(&Coweight(vec![1, 0])));
        RootDatum::torus(3).validate().unwrap();
    }

    #[test]
    fn json_round_trip() {
        let d = RootDatum::build("G2", Isogeny::Adjoint).unwrap();
        let s = d.to_json();
        assert!(s.contains("\"rank_lattice\""));
        assert!(s.contains("\"rank_semisimple\""));
        assert_eq!(RootDatum::from_json(&s).unwrap(), d);
        let bare = r#"{"rank_lattice":1,"rank_semisimple":1,"simple_roots":[[2]],"simple_coroots":[[1]]}"#;
        assert_eq!(RootDatum::from_json(bare).unwrap().name, None);
    }

    #[test]
    fn symmetrizer_of_g2() {
        let c = CartanType::new(Family::G, 2).unwrap().cartan_matrix();
        let d = symmetrizer(&c).unwrap();
        assert_eq!(d[0] * Rational64::from(c[0][1]), d[1] * Rational64::from(c[1][0]));
        assert_eq!(*d.iter().min().unwrap(), Rational64::from(1));
    }
}
