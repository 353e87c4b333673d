//! Positive roots, the Weyl group action on coweights, dominance and heights.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use num_rational::Rational64;

use crate::datum::{coroot_coordinates_with, pair, span_coefficients, Coweight, RootDatum, Weight};
use crate::error::{Result, SatakeError};
use crate::linalg::{self, RatMatrix};

/// Default upper bound on the number of Weyl group elements enumerated.
pub const DEFAULT_WEYL_CAP: usize = 1_000_000;

/// A word in the simple reflections, read as a product: `[i, j]` is `s_i s_j`,
/// so `s_j` acts first. Letters are zero-based.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        let letters: Vec<String> = self.0.iter().map(|i| format!("s{}", i + 1)).collect();
        write!(f, "{}", letters.join(" "))
    }
}

/// A positive root together with its coroot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveRoot {
    pub root: Weight,
    pub coroot: Coweight,
    /// Coefficients of the root on the simple roots.
    pub root_coords: Vec<i64>,
    /// Coefficients of the coroot on the simple coroots.
    pub coroot_coords: Vec<i64>,
}

/// A validated root datum with the derived data every computation needs.
#[derive(Debug, Clone)]
pub struct RootSystem {
    datum: RootDatum,
    cartan: Vec<Vec<i64>>,
    cartan_inv: RatMatrix,
    positive: Vec<PositiveRoot>,
    two_rho: Weight,
    two_rho_check: Coweight,
    w0: WeylWord,
}

impl RootSystem {
    pub fn new(datum: RootDatum) -> Result<Self> {
        datum.validate().map_err(SatakeError::InvalidDatum)?;
        let cartan = datum.cartan_matrix();
        let cartan_inv = linalg::inverse(&linalg::to_rational(&cartan))
            .ok_or_else(|| SatakeError::Internal("finite-type Cartan matrix is singular".into()))?;
        let positive = enumerate_positive_roots(&datum, &cartan);
        let n = datum.n;
        let mut two_rho = Weight::zero(n);
        let mut two_rho_check = Coweight::zero(n);
        for p in &positive {
            two_rho = &two_rho + &p.root;
            two_rho_check = &two_rho_check + &p.coroot;
        }
        let mut sys = RootSystem {
            datum,
            cartan,
            cartan_inv,
            positive,
            two_rho,
            two_rho_check,
            w0: WeylWord::default(),
        };
        // w0 is the unique element taking the antidominant regular coweight
        // -2ρ̌ to 2ρ̌.
        let (_, w0) = sys.dominant_representative(&-&sys.two_rho_check)?;
        sys.w0 = w0;
        Ok(sys)
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn lattice_rank(&self) -> usize {
        self.datum.n
    }

    pub fn semisimple_rank(&self) -> usize {
        self.datum.r
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[PositiveRoot] {
        &self.positive
    }

    pub fn positive_coroots(&self) -> Vec<Coweight> {
        self.positive.iter().map(|p| p.coroot.clone()).collect()
    }

    /// Sum of the positive roots.
    pub fn two_rho(&self) -> &Weight {
        &self.two_rho
    }

    /// Sum of the positive coroots.
    pub fn two_rho_check(&self) -> &Coweight {
        &self.two_rho_check
    }

    pub fn longest_word(&self) -> &WeylWord {
        &self.w0
    }

    pub fn check_len(&self, v: &Coweight) -> Result<()> {
        if v.len() == self.datum.n {
            Ok(())
        } else {
            Err(SatakeError::DimensionMismatch {
                expected: self.datum.n,
                found: v.len(),
            })
        }
    }

    /// ⟨α_i, v⟩ for every simple root.
    pub fn simple_pairings(&self, v: &Coweight) -> Vec<i64> {
        self.datum.simple_roots.iter().map(|a| pair(a, v)).collect()
    }

    pub fn is_dominant(&self, v: &Coweight) -> bool {
        self.datum.simple_roots.iter().all(|a| pair(a, v) >= 0)
    }

    /// Zero in every direction paired against the simple roots.
    pub fn is_central(&self, v: &Coweight) -> bool {
        self.datum.simple_roots.iter().all(|a| pair(a, v) == 0)
    }

    pub fn require_dominant(&self, v: &Coweight) -> Result<()> {
        self.check_len(v)?;
        if self.is_dominant(v) {
            Ok(())
        } else {
            Err(SatakeError::NotDominant(v.clone()))
        }
    }

    fn reflect_unchecked(&self, i: usize, v: &Coweight) -> Coweight {
        let k = pair(&self.datum.simple_roots[i], v);
        v.add_scaled(-k, &self.datum.simple_coroots[i])
    }

    /// s_i(v) = v − ⟨α_i, v⟩ α̌_i.
    pub fn reflect(&self, i: usize, v: &Coweight) -> Result<Coweight> {
        self.check_len(v)?;
        if i >= self.datum.r {
            return Err(SatakeError::IndexOutOfRange {
                index: i,
                rank: self.datum.r,
            });
        }
        Ok(self.reflect_unchecked(i, v))
    }

    pub fn apply_word(&self, word: &WeylWord, v: &Coweight) -> Result<Coweight> {
        self.check_len(v)?;
        let mut out = v.clone();
        for &i in word.0.iter().rev() {
            out = self.reflect(i, &out)?;
        }
        Ok(out)
    }

    /// The dominant element of the W-orbit of `v` and a word `w` with
    /// `w·v` dominant. Always reflects at the smallest violated index.
    pub fn dominant_representative(&self, v: &Coweight) -> Result<(Coweight, WeylWord)> {
        self.check_len(v)?;
        let mut cur = v.clone();
        let mut applied = Vec::new();
        while let Some(i) = self
            .datum
            .simple_roots
            .iter()
            .position(|a| pair(a, &cur) < 0)
        {
            cur = self.reflect_unchecked(i, &cur);
            applied.push(i);
        }
        applied.reverse();
        Ok((cur, WeylWord(applied)))
    }

    pub fn dominant(&self, v: &Coweight) -> Coweight {
        self.dominant_representative(v)
            .map(|(d, _)| d)
            .expect("length checked by caller")
    }

    /// w₀(v).
    pub fn longest_element_image(&self, v: &Coweight) -> Result<Coweight> {
        self.apply_word(&self.w0, v)
    }

    /// ⟨2ρ, v⟩.
    pub fn doubled_height(&self, v: &Coweight) -> i64 {
        pair(&self.two_rho, v)
    }

    /// Integer coefficients on the simple coroots, when `v` is in the coroot lattice.
    pub fn coroot_coordinates(&self, v: &Coweight) -> Option<Vec<i64>> {
        coroot_coordinates_with(&self.cartan_inv, &self.datum.simple_roots, &self.datum.simple_coroots, v)
    }

    /// Rational coefficients of the projection of `v` onto the coroot span.
    pub fn span_coefficients(&self, v: &Coweight) -> Vec<Rational64> {
        span_coefficients(&self.cartan_inv, &self.datum.simple_roots, v)
    }

    pub fn in_coroot_lattice(&self, v: &Coweight) -> bool {
        self.coroot_coordinates(v).is_some()
    }

    /// `lower ≤ upper`: `upper − lower` is a nonnegative integer combination
    /// of simple coroots.
    pub fn dominance_leq(&self, lower: &Coweight, upper: &Coweight) -> bool {
        self.coroot_coordinates(&(upper - lower))
            .is_some_and(|c| c.iter().all(|&x| x >= 0))
    }

    pub fn coroot_combination(&self, coords: &[i64]) -> Coweight {
        let mut v = Coweight::zero(self.datum.n);
        for (c, cor) in coords.iter().zip(&self.datum.simple_coroots) {
            v = v.add_scaled(*c, cor);
        }
        v
    }

    /// The coweight in the coroot span with ⟨α_i, v⟩ = pairings[i], if it
    /// has integer coordinates.
    pub fn coweight_with_pairings(&self, pairings: &[i64]) -> Option<Coweight> {
        let a: Vec<Rational64> = pairings.iter().map(|&x| Rational64::from_integer(x)).collect();
        let c = linalg::mat_vec(&self.cartan_inv, &a);
        let mut out = vec![Rational64::from_integer(0); self.datum.n];
        for (cj, cor) in c.iter().zip(&self.datum.simple_coroots) {
            for (slot, x) in out.iter_mut().zip(&cor.0) {
                *slot += cj * Rational64::from_integer(*x);
            }
        }
        out.iter()
            .all(|x| x.is_integer())
            .then(|| Coweight(out.iter().map(|x| x.to_integer()).collect()))
    }

    /// The fundamental coweight ω̌_i (zero-based `i`) in the coroot span.
    pub fn fundamental_coweight(&self, i: usize) -> Result<Coweight> {
        if i >= self.datum.r {
            return Err(SatakeError::IndexOutOfRange {
                index: i,
                rank: self.datum.r,
            });
        }
        let e: Vec<i64> = (0..self.datum.r).map(|k| i64::from(k == i)).collect();
        self.coweight_with_pairings(&e).ok_or_else(|| {
            SatakeError::Precondition(format!(
                "fundamental coweight {} is not in the cocharacter lattice",
                i + 1
            ))
        })
    }

    /// Dominant coweights in the coroot span with doubled height at most
    /// `bound`, ordered by height and then coordinates.
    pub fn dominant_coweights_up_to(&self, bound: i64) -> Vec<Coweight> {
        let r = self.datum.r;
        // ⟨2ρ, ω̌_i⟩ is the coefficient of α_i in 2ρ.
        let steps: Vec<i64> = (0..r)
            .map(|i| self.positive.iter().map(|p| p.root_coords[i]).sum())
            .collect();
        let mut out = Vec::new();
        let mut a = vec![0i64; r];
        fn walk(sys: &RootSystem, steps: &[i64], k: usize, left: i64, a: &mut Vec<i64>, out: &mut Vec<Coweight>) {
            if k == a.len() {
                if let Some(v) = sys.coweight_with_pairings(a) {
                    out.push(v);
                }
                return;
            }
            let mut c = 0;
            while c * steps[k] <= left {
                a[k] = c;
                walk(sys, steps, k + 1, left - c * steps[k], a, out);
                c += 1;
            }
            a[k] = 0;
        }
        if bound >= 0 {
            walk(self, &steps, 0, bound, &mut a, &mut out);
        }
        out.sort_by(|x, y| self.doubled_height(x).cmp(&self.doubled_height(y)).then_with(|| x.cmp(y)));
        out
    }

    /// The W-orbit of `v`, sorted.
    pub fn orbit(&self, v: &Coweight) -> Vec<Coweight> {
        let mut seen = BTreeSet::from([v.clone()]);
        let mut queue = VecDeque::from([v.clone()]);
        while let Some(x) = queue.pop_front() {
            for i in 0..self.datum.r {
                let y = self.reflect_unchecked(i, &x);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Orbit of a regular dominant coweight, with the parity of the length of
    /// the element producing each image. Fails past `cap` elements.
    pub(crate) fn regular_orbit(&self, v: &Coweight, cap: usize) -> Result<Vec<(bool, Coweight)>> {
        let mut seen = HashSet::from([v.clone()]);
        let mut out = vec![(false, v.clone())];
        let mut frontier = vec![v.clone()];
        let mut odd = false;
        while !frontier.is_empty() {
            odd = !odd;
            let mut next = Vec::new();
            for x in &frontier {
                for i in 0..self.datum.r {
                    let y = self.reflect_unchecked(i, x);
                    if seen.insert(y.clone()) {
                        if seen.len() > cap {
                            return Err(SatakeError::WeylGroupTooLarge { cap });
                        }
                        out.push((odd, y.clone()));
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        Ok(out)
    }

    /// Every Weyl group element as a reduced word, in breadth-first order.
    pub fn enumerate_weyl_group(&self, cap: usize) -> Result<Vec<WeylWord>> {
        let seed = &self.two_rho_check;
        let mut seen = HashSet::from([seed.clone()]);
        let mut out = vec![WeylWord::default()];
        let mut frontier = vec![(seed.clone(), WeylWord::default())];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for (x, w) in &frontier {
                for i in 0..self.datum.r {
                    let y = self.reflect_unchecked(i, x);
                    if seen.insert(y.clone()) {
                        if seen.len() > cap {
                            return Err(SatakeError::WeylGroupTooLarge { cap });
                        }
                        let mut letters = vec![i];
                        letters.extend_from_slice(&w.0);
                        let word = WeylWord(letters);
                        out.push(word.clone());
                        next.push((y, word));
                    }
                }
            }
            frontier = next;
        }
        Ok(out)
    }
}

/// Close the simple roots under simple reflections, keeping positive roots.
fn enumerate_positive_roots(d: &RootDatum, cartan: &[Vec<i64>]) -> Vec<PositiveRoot> {
    let r = d.r;
    // Work in simple-root / simple-coroot coordinates, then map to lattices.
    // s_i(α) = α − ⟨α, α̌_i⟩ α_i and s_i(α̌) = α̌ − ⟨α_i, α̌⟩ α̌_i.
    let unit = |i: usize| (0..r).map(|k| i64::from(k == i)).collect::<Vec<_>>();
    let mut found: Vec<(Vec<i64>, Vec<i64>)> = (0..r).map(|i| (unit(i), unit(i))).collect();
    let mut seen: HashSet<Vec<i64>> = found.iter().map(|(a, _)| a.clone()).collect();
    let mut queue: VecDeque<usize> = (0..found.len()).collect();
    while let Some(idx) = queue.pop_front() {
        for i in 0..r {
            let (a, c) = found[idx].clone();
            if a == unit(i) {
                continue;
            }
            let root_on_coroot: i64 = (0..r).map(|k| a[k] * cartan[k][i]).sum();
            let root_on_coroot_rev: i64 = (0..r).map(|k| cartan[i][k] * c[k]).sum();
            let mut a2 = a.clone();
            a2[i] -= root_on_coroot;
            let mut c2 = c.clone();
            c2[i] -= root_on_coroot_rev;
            if a2.iter().all(|&x| x >= 0) && seen.insert(a2.clone()) {
                found.push((a2, c2));
                queue.push_back(found.len() - 1);
            }
        }
    }
    found.sort_by_key(|(a, _)| (a.iter().sum::<i64>(), std::cmp::Reverse(a.clone())));
    found
        .into_iter()
        .map(|(a, c)| {
            let mut root = Weight::zero(d.n);
            for (k, x) in a.iter().enumerate() {
                root = root.add_scaled(*x, &d.simple_roots[k]);
            }
            let mut coroot = Coweight::zero(d.n);
            for (k, x) in c.iter().enumerate() {
                coroot = coroot.add_scaled(*x, &d.simple_coroots[k]);
            }
            PositiveRoot {
                root,
                coroot,
                root_coords: a,
                coroot_coords: c,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datum::Isogeny;
    use proptest::prelude::*;

    fn sys(name: &str, iso: Isogeny) -> RootSystem {
        RootSystem::new(RootDatum::build(name, iso).unwrap()).unwrap()
    }

    /// All roots as the orbit of the simple roots under simple reflections
    /// acting on the character lattice.
    fn brute_force_root_count(s: &RootSystem) -> (usize, usize) {
        let d = s.datum();
        let mut seen: BTreeSet<Vec<i64>> = d.simple_roots.iter().map(|a| a.0.clone()).collect();
        let mut queue: VecDeque<Vec<i64>> = seen.iter().cloned().collect();
        while let Some(a) = queue.pop_front() {
            for i in 0..d.r {
                let k = linalg::dot(&a, &d.simple_coroots[i].0);
                let b: Vec<i64> = a.iter().zip(&d.simple_roots[i].0).map(|(x, y)| x - k * y).collect();
                if seen.insert(b.clone()) {
                    queue.push_back(b);
                }
            }
        }
        let positive = seen
            .iter()
            // A root is positive iff it pairs positively with 2ρ̌.
            .filter(|a| linalg::dot(a, &s.two_rho_check().0) > 0)
            .count();
        (seen.len(), positive)
    }

    #[test]
    fn positive_root_counts() {
        for (name, count) in [("A1", 1), ("A2", 3), ("B2", 4), ("G2", 6), ("A3", 6), ("B3", 9), ("C3", 9), ("D4", 12), ("F4", 24)] {
            for iso in [Isogeny::SimplyConnected, Isogeny::Adjoint] {
                let s = sys(name, iso);
                assert_eq!(s.positive_roots().len(), count, "{name}");
                let (total, positive) = brute_force_root_count(&s);
                assert_eq!(total, 2 * count, "{name}");
                assert_eq!(positive, count, "{name}");
                assert_eq!(s.longest_word().len(), count, "{name}");
            }
        }
    }

    #[test]
    fn a2_positive_roots() {
        let s = sys("A2", Isogeny::SimplyConnected);
        let coords: Vec<Vec<i64>> = s.positive_roots().iter().map(|p| p.root_coords.clone()).collect();
        assert_eq!(coords, vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn two_rho_pairs_to_two_with_simple_coroots() {
        for name in ["A1", "A2", "B2", "C3", "G2", "F4", "D4"] {
            let s = sys(name, Isogeny::Adjoint);
            for c in &s.datum().simple_coroots {
                assert_eq!(s.doubled_height(c), 2);
            }
            for a in &s.datum().simple_roots {
                assert_eq!(pair(a, s.two_rho_check()), 2);
            }
        }
    }

    #[test]
    fn weyl_group_orders() {
        for (name, order) in [("A1", 2), ("A2", 6), ("B2", 8), ("G2", 12), ("A3", 24), ("B3", 48), ("D4", 192)] {
            let s = sys(name, Isogeny::SimplyConnected);
            let w = s.enumerate_weyl_group(DEFAULT_WEYL_CAP).unwrap();
            assert_eq!(w.len(), order, "{name}");
            assert_eq!(w.iter().map(WeylWord::len).max().unwrap(), s.positive_roots().len());
        }
        let e8 = sys("E8", Isogeny::Adjoint);
        assert_eq!(
            e8.enumerate_weyl_group(10_000).unwrap_err(),
            SatakeError::WeylGroupTooLarge { cap: 10_000 }
        );
    }

    #[test]
    fn reflections() {
        let a1 = sys("A1", Isogeny::Adjoint);
        assert_eq!(a1.reflect(0, &Coweight(vec![1])).unwrap(), Coweight(vec![-1]));
        assert!(matches!(a1.reflect(1, &Coweight(vec![1])), Err(SatakeError::IndexOutOfRange { .. })));
        assert!(matches!(a1.reflect(0, &Coweight(vec![1, 2])), Err(SatakeError::DimensionMismatch { .. })));
        let a2 = sys("A2", Isogeny::SimplyConnected);
        let c1 = a2.datum().simple_coroots[0].clone();
        assert_eq!(a2.reflect(0, &c1).unwrap(), -&c1);
    }

    #[test]
    fn dominant_representatives() {
        let a1 = sys("A1", Isogeny::Adjoint);
        let (d, w) = a1.dominant_representative(&Coweight(vec![-3])).unwrap();
        assert_eq!(d, Coweight(vec![3]));
        assert_eq!(w, WeylWord(vec![0]));
        let (d, w) = a1.dominant_representative(&Coweight(vec![5])).unwrap();
        assert_eq!((d, w.is_empty()), (Coweight(vec![5]), true));
    }

    #[test]
    fn longest_element() {
        let a1 = sys("A1", Isogeny::Adjoint);
        assert_eq!(a1.longest_element_image(&Coweight(vec![2])).unwrap(), Coweight(vec![-2]));
        let a2 = sys("A2", Isogeny::Adjoint);
        let w1 = a2.fundamental_coweight(0).unwrap();
        let w2 = a2.fundamental_coweight(1).unwrap();
        assert_eq!(-&a2.longest_element_image(&w1).unwrap(), w2);
        // Orbit enumeration oracle: w₀ω̌1 is the unique antidominant element of the orbit.
        let anti: Vec<_> = a2
            .orbit(&w1)
            .into_iter()
            .filter(|v| a2.simple_pairings(v).iter().all(|&x| x <= 0))
            .collect();
        assert_eq!(anti, vec![a2.longest_element_image(&w1).unwrap()]);
        for name in ["B2", "G2"] {
            let s = sys(name, Isogeny::Adjoint);
            for v in s.dominant_coweights_up_to(20) {
                assert_eq!(s.longest_element_image(&v).unwrap(), -&v);
            }
        }
    }

    #[test]
    fn heights_and_dominance() {
        let a2 = sys("A2", Isogeny::SimplyConnected);
        assert_eq!(a2.doubled_height(&Coweight(vec![0, 0])), 0);
        assert_eq!(a2.doubled_height(&Coweight(vec![1, 1])), 4);
        let a1 = sys("A1", Isogeny::Adjoint);
        assert!(a1.dominance_leq(&Coweight(vec![0]), &Coweight(vec![2])));
        assert!(!a1.dominance_leq(&Coweight(vec![0]), &Coweight(vec![1])));
        let a2ad = sys("A2", Isogeny::Adjoint);
        let w1 = a2ad.fundamental_coweight(0).unwrap();
        let w2 = a2ad.fundamental_coweight(1).unwrap();
        assert!(!a2ad.dominance_leq(&w1, &w2));
        assert!(!a2ad.dominance_leq(&w2, &w1));
        assert!(a2ad.dominance_leq(&w1, &w1));
    }

    #[test]
    fn fundamental_coweights() {
        let a1 = sys("A1", Isogeny::Adjoint);
        assert_eq!(a1.fundamental_coweight(0).unwrap(), Coweight(vec![1]));
        let a1sc = sys("A1", Isogeny::SimplyConnected);
        assert!(a1sc.fundamental_coweight(0).is_err());
        assert!(a1sc.fundamental_coweight(3).is_err());
    }

    #[test]
    fn dominant_enumeration_respects_bound() {
        let g2 = sys("G2", Isogeny::SimplyConnected);
        let list = g2.dominant_coweights_up_to(24);
        // ⟨2ρ, ω̌⟩ = (10, 6) for G2.
        assert_eq!(list.len(), 9);
        assert!(list.iter().all(|v| g2.is_dominant(v) && g2.doubled_height(v) <= 24));
        assert!(g2.dominant_coweights_up_to(-1).is_empty());
        assert_eq!(g2.dominant_coweights_up_to(0), vec![Coweight(vec![0, 0])]);
    }

    fn arb_case() -> impl Strategy<Value = (usize, Vec<i64>, Vec<usize>)> {
        (0usize..4, proptest::collection::vec(-6i64..=6, 2), proptest::collection::vec(0usize..2, 0..12))
    }

    proptest! {
        #[test]
        fn orbit_invariants((which, v, word) in arb_case()) {
            let name = ["A2", "B2", "C2", "G2"][which];
            let s = sys(name, Isogeny::SimplyConnected);
            let v = Coweight(v);
            let w = WeylWord(word);
            let moved = s.apply_word(&w, &v).unwrap();
            let (dom, word) = s.dominant_representative(&v).unwrap();
            prop_assert!(s.is_dominant(&dom));
            prop_assert_eq!(s.apply_word(&word, &v).unwrap(), dom.clone());
            prop_assert_eq!(s.dominant(&moved), dom.clone());
            prop_assert!(s.doubled_height(&moved) <= s.doubled_height(&dom));
            if s.doubled_height(&moved) == s.doubled_height(&dom) {
                prop_assert_eq!(&moved, &dom);
            }
            for i in 0..2 {
                let r = s.reflect(i, &v).unwrap();
                prop_assert_eq!(s.reflect(i, &r).unwrap(), v.clone());
            }
            let image = s.longest_element_image(&v).unwrap();
            prop_assert_eq!(s.doubled_height(&image), -s.doubled_height(&v));
            prop_assert_eq!(s.longest_element_image(&image).unwrap(), v);
        }
    }
}
