//! The invariant suite: exhaustive cross-checks up to a height bound.

use std::collections::{BTreeMap, BTreeSet};

use crate::datum::Coweight;
use crate::engine::Satake;
use crate::error::Result;
use crate::fusion::CheckOutcome;
use crate::grassmannian::{ConvolutionBound, IntersectionDim};

impl Satake {
    /// Weights of V_λ together with their neighbours one simple coroot away,
    /// so that both sides of the support boundary get probed.
    fn probe_weights(&self, lambda: &Coweight) -> Result<BTreeSet<Coweight>> {
        let table = self.weight_table(lambda)?;
        let mut out = BTreeSet::new();
        for nu in table.keys() {
            out.insert(nu.clone());
            for cor in &self.sys.datum().simple_coroots {
                out.insert(nu + cor);
                out.insert(nu - cor);
            }
        }
        Ok(out)
    }

    /// Runs every cross-check with all dominant coweights of doubled height
    /// at most `height_bound` (in the coroot span).
    pub fn run_invariant_suite(&self, height_bound: i64) -> Result<Vec<CheckOutcome>> {
        let sys = &self.sys;
        let lambdas = sys.dominant_coweights_up_to(height_bound);

        let mut agreement = CheckOutcome::new("two_algorithm_agreement");
        let mut sum_rule = CheckOutcome::new("sum_rule");
        let mut support = CheckOutcome::new("support_characterization");
        let mut eq45 = CheckOutcome::new("intersection_dimensions");
        let mut grading = CheckOutcome::new("graded_fiber_functor");
        let mut w0 = CheckOutcome::new("w0_relation");

        for lambda in &lambdas {
            let table = self.weight_table(lambda)?;
            let dim = self.weyl_dimension(lambda)?;
            sum_rule.record(u128::from(table.total()) == dim, || {
                format!("λ={lambda}: Σm = {}, dim = {dim}", table.total())
            });

            let orbit_dim = self.orbit_dim(lambda)?;
            let mut by_degree: BTreeMap<i64, u64> = BTreeMap::new();
            for nu in self.probe_weights(lambda)? {
                let k = self.weight_multiplicity_kostant(lambda, &nu)?;
                let f = self.weight_multiplicity_freudenthal(lambda, &nu)?;
                agreement.record(k == f && k == table.get(&nu), || {
                    format!("λ={lambda}, ν={nu}: Kostant {k}, Freudenthal {f}, table {}", table.get(&nu))
                });

                let s = self.s_intersection_dim(&nu, lambda)?;
                let t = self.t_intersection_dim(&nu, lambda)?;
                let count = self.mv_cycle_count(&nu, lambda)?;
                let inside = self.in_support(lambda, &nu);
                support.record(
                    (s == IntersectionDim::Empty) == (count == 0)
                        && (count == 0) == !inside
                        && (t == IntersectionDim::Empty) == (count == 0),
                    || format!("λ={lambda}, ν={nu}: S {s}, count {count}, in support {inside}"),
                );
                if let (IntersectionDim::Dim(sd), IntersectionDim::Dim(td)) = (s, t) {
                    let h = sys.doubled_height(&nu) + sys.doubled_height(lambda);
                    eq45.record(
                        sd + td == orbit_dim
                            && 2 * sd as i64 == h
                            && sd <= orbit_dim
                            && ((sd == orbit_dim) == (nu == *lambda)),
                        || format!("λ={lambda}, ν={nu}: S {sd} + T {td} vs orbit {orbit_dim}"),
                    );
                }
                if count > 0 {
                    *by_degree.entry(sys.doubled_height(&nu)).or_insert(0) += count;
                }

                let image = self.w0_functor_relation(&nu)?;
                let back = self.w0_functor_relation(&image)?;
                w0.record(back == nu && sys.doubled_height(&image) == -sys.doubled_height(&nu), || {
                    format!("ν={nu}: w₀ν = {image}, w₀²ν = {back}")
                });
            }

            let g = self.fiber_functor_grading(lambda)?;
            let top = sys.doubled_height(lambda);
            grading.record(
                g.is_palindromic()
                    && u128::from(g.total()) == dim
                    && g.top_degree() == Some(top)
                    && g.get(top) == 1
                    && g.iter().all(|(k, _)| (k - top).rem_euclid(2) == 0)
                    && g.as_map() == &by_degree,
                || format!("λ={lambda}: grading {:?}, cycle counts {:?}", g.as_map(), by_degree),
            );
        }

        let (semismall, bound61, rigidity) = self.convolution_checks(&lambdas)?;
        Ok(vec![agreement, sum_rule, support, eq45, grading, w0, semismall, bound61, rigidity])
    }

    /// Semi-smallness arithmetic, the convolution dimension bound and rigidity
    /// over all pairs from `lambdas`.
    pub fn convolution_checks(&self, lambdas: &[Coweight]) -> Result<(CheckOutcome, CheckOutcome, CheckOutcome)> {
        let sys = &self.sys;
        let mut semismall = CheckOutcome::new("semismall_defect");
        let mut bound61 = CheckOutcome::new("convolution_bound");
        let mut rigidity = CheckOutcome::new("rigidity");
        let zero = Coweight::zero(sys.lattice_rank());
        for (i, lambda) in lambdas.iter().enumerate() {
            let dual = self.dual_object(lambda)?;
            for mu in &lambdas[i..] {
                let top = lambda + mu;
                for nu in self.dominant_weights_below(&top)? {
                    let defect = self.semismall_defect(lambda, mu, &nu)?;
                    semismall.record(defect == 0, || format!("λ={lambda}, μ={mu}, ν={nu}: defect {defect}"));
                }
                for nu in self.weight_table(&top)?.keys() {
                    let here = self.convolution_bound(lambda, mu, nu)?;
                    let ConvolutionBound::Bound(value) = here else {
                        bound61.record(false, || format!("λ={lambda}, μ={mu}, ν={nu}: not comparable"));
                        continue;
                    };
                    let mut ok = value >= 0;
                    if nu == &top {
                        ok &= value == sys.doubled_height(&top);
                    }
                    for cor in &sys.datum().simple_coroots {
                        let above = nu + cor;
                        if let ConvolutionBound::Bound(v) = self.convolution_bound(lambda, mu, &above)? {
                            ok &= v > value;
                        }
                    }
                    bound61.record(ok, || format!("λ={lambda}, μ={mu}, ν={nu}: bound {value}"));
                }
                let anti = sys.longest_element_image(&top)?;
                bound61.record(self.convolution_bound(lambda, mu, &anti)? == ConvolutionBound::Bound(0), || {
                    format!("λ={lambda}, μ={mu}: bound at w₀(λ+μ) is not 0")
                });

                let decomposition = self.tensor_decompose(lambda, mu)?;
                let expected = u64::from(*mu == dual);
                rigidity.record(decomposition.get(&zero) == expected, || {
                    format!("λ={lambda}, μ={mu}: identity multiplicity {}", decomposition.get(&zero))
                });
            }
        }
        Ok((semismall, bound61, rigidity))
    }
}
