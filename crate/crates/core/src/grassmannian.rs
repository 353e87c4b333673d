//! Dimension calculus of the loop Grassmannian.
//!
//! Orbits of the arc group are labelled by dominant coweights; semi-infinite
//! orbits S_ν (unipotent radical of the Borel) and T_ν (opposite radical) by
//! arbitrary coweights. All dimensions are ordinary (not doubled) integers;
//! a parity failure is reported as an internal error rather than rounded.

use serde::Serialize;

use crate::datum::Coweight;
use crate::engine::Satake;
use crate::error::{Result, SatakeError};

/// Label of the orbit G(𝒪)·λ.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct OrbitId {
    lambda: Coweight,
}

impl OrbitId {
    pub fn new(engine: &Satake, lambda: Coweight) -> Result<Self> {
        engine.root_system().require_dominant(&lambda)?;
        Ok(OrbitId { lambda })
    }

    pub fn lambda(&self) -> &Coweight {
        &self.lambda
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    /// S_ν = N(𝒦)·ν
    Attracting,
    /// T_ν = N̄(𝒦)·ν
    Repelling,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SemiInfiniteOrbitId {
    pub nu: Coweight,
    pub side: Side,
}

/// Dimension of an intersection that may be empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum IntersectionDim {
    Empty,
    Dim(u64),
}

impl IntersectionDim {
    pub fn value(self) -> Option<u64> {
        match self {
            IntersectionDim::Empty => None,
            IntersectionDim::Dim(d) => Some(d),
        }
    }
}

impl std::fmt::Display for IntersectionDim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            IntersectionDim::Empty => write!(f, "Empty"),
            IntersectionDim::Dim(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ConvolutionBound {
    NotComparable,
    Bound(i64),
}

fn halve(doubled: i64, what: &str) -> Result<i64> {
    if doubled % 2 != 0 {
        return Err(SatakeError::Internal(format!("odd doubled {what}: {doubled}")));
    }
    Ok(doubled / 2)
}

fn nonnegative(x: i64, what: &str) -> Result<u64> {
    u64::try_from(x).map_err(|_| SatakeError::Internal(format!("negative {what}: {x}")))
}

impl Satake {
    /// dim 𝒢_λ = ⟨2ρ, λ⟩.
    pub fn orbit_dim(&self, lambda: &Coweight) -> Result<u64> {
        self.sys.require_dominant(lambda)?;
        nonnegative(self.sys.doubled_height(lambda), "orbit dimension")
    }

    /// 𝒢_μ ⊆ closure of 𝒢_λ.
    pub fn closure_contains(&self, lambda: &Coweight, mu: &Coweight) -> Result<bool> {
        self.sys.require_dominant(lambda)?;
        self.sys.require_dominant(mu)?;
        Ok(self.sys.dominance_leq(mu, lambda))
    }

    /// dim(S_ν ∩ 𝒢_λ) = ht(ν + λ) for dominant λ.
    pub fn s_intersection_dim(&self, nu: &Coweight, lambda: &Coweight) -> Result<IntersectionDim> {
        if self.weight_multiplicity(lambda, nu)? == 0 {
            return Ok(IntersectionDim::Empty);
        }
        let doubled = self.sys.doubled_height(nu) + self.sys.doubled_height(lambda);
        Ok(IntersectionDim::Dim(nonnegative(halve(doubled, "S-intersection height")?, "S-intersection dimension")?))
    }

    /// dim(T_ν ∩ 𝒢_λ) = −ht(ν + w₀λ), with the orbit named by its dominant label.
    pub fn t_intersection_dim(&self, nu: &Coweight, lambda: &Coweight) -> Result<IntersectionDim> {
        if self.weight_multiplicity(lambda, nu)? == 0 {
            return Ok(IntersectionDim::Empty);
        }
        let anti = self.sys.longest_element_image(lambda)?;
        let doubled = self.sys.doubled_height(nu) + self.sys.doubled_height(&anti);
        Ok(IntersectionDim::Dim(nonnegative(-halve(doubled, "T-intersection height")?, "T-intersection dimension")?))
    }

    /// Number of irreducible components of S_ν ∩ 𝒢_λ, which is m_λ(ν).
    pub fn mv_cycle_count(&self, nu: &Coweight, lambda: &Coweight) -> Result<u64> {
        self.weight_multiplicity(lambda, nu)
    }

    /// w₀·ν: the S-side functor at ν matches the T-side functor at w₀·ν.
    pub fn w0_functor_relation(&self, nu: &Coweight) -> Result<Coweight> {
        self.sys.longest_element_image(nu)
    }

    /// ht(λ+μ+ν), the dimension of m⁻¹(S_ν) ∩ (𝒢_λ ×̃ 𝒢_μ), defined for ν in
    /// the closure of 𝒢_{λ+μ}.
    pub fn convolution_bound(&self, lambda: &Coweight, mu: &Coweight, nu: &Coweight) -> Result<ConvolutionBound> {
        self.sys.require_dominant(lambda)?;
        self.sys.require_dominant(mu)?;
        self.sys.check_len(nu)?;
        let top = lambda + mu;
        if !self.sys.dominance_leq(&self.sys.dominant(nu), &top) {
            return Ok(ConvolutionBound::NotComparable);
        }
        let doubled = self.sys.doubled_height(&top) + self.sys.doubled_height(nu);
        if doubled % 2 != 0 {
            return Ok(ConvolutionBound::NotComparable);
        }
        Ok(ConvolutionBound::Bound(doubled / 2))
    }

    /// Half the codimension of 𝒢_ν in the closure of 𝒢_{λ+μ}, minus the
    /// fiber dimension ht(λ+μ) − ht(ν) of the convolution map over 𝒢_ν.
    /// Semi-smallness is the statement that this is never negative.
    pub fn semismall_defect(&self, lambda: &Coweight, mu: &Coweight, nu: &Coweight) -> Result<i64> {
        self.sys.require_dominant(lambda)?;
        self.sys.require_dominant(mu)?;
        self.sys.require_dominant(nu)?;
        let top = lambda + mu;
        if !self.sys.dominance_leq(nu, &top) {
            return Err(SatakeError::Precondition(format!("{nu} is not in the closure of the orbit of {top}")));
        }
        let codim = self.orbit_dim(&top)? as i64 - self.orbit_dim(nu)? as i64;
        let half_codim = halve(codim, "codimension")?;
        let fiber = halve(self.sys.doubled_height(&top) - self.sys.doubled_height(nu), "fiber dimension")?;
        Ok(half_codim - fiber)
    }
}
