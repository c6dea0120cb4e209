//! The compactly based space `X = P ∪ {x, y, z}`: `P` is a sequence of
//! isolated points accumulating (in the ambient spectral space) at a
//! removed point that specializes to `x` and `z`, and `z` specializes to
//! `y`. Compact opens of `X` are order-dual to the semilattice `A`.
//!
//! Points share one index scheme with `A`: `p_i` is `i` for `i >= 3`, and
//! `x, y, z` are `0, 1, 2`. Under it the anti-isomorphism is complement.

use std::collections::BTreeMap;
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::counterexample::{
    claim1_witness, elem_a, elem_b, elem_c, in_a, in_up_a, in_up_c, sample_in, TraceClass,
};
use super::finset::FinOrCofin;
use crate::error::{Error, Result};

pub const PX: u8 = 0b001;
pub const PY: u8 = 0b010;
pub const PZ: u8 = 0b100;
const POINT_NAMES: [&str; 3] = ["x", "y", "z"];

/// An open subset of `X`: its `P`-points (a finite or cofinite subset of
/// ℕ≥3) together with a subset of `{x, y, z}` as bits.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymbolicOpen {
    p_part: FinOrCofin,
    extra: u8,
}

/// The compact opens are exactly: finite `P`-part with no extra points, or
/// cofinite `P`-part with extra `{x}`, `{z}`, `{x,z}`, `{y,z}` or
/// `{x,y,z}`.
pub fn in_qcop_x(p_part: &FinOrCofin, extra: u8) -> bool {
    let p_ok = p_part.support().iter().all(|&i| i >= 3);
    let downset = extra & PY == 0 || extra & PZ != 0;
    let near_limit = extra & (PX | PZ) != 0;
    let kind_ok = if p_part.is_finite() {
        !near_limit && extra == 0
    } else {
        extra != 0
    };
    extra < 8 && p_ok && downset && kind_ok
}

impl SymbolicOpen {
    pub fn new(p_part: FinOrCofin, extra: u8) -> Result<Self> {
        if in_qcop_x(&p_part, extra) {
            Ok(SymbolicOpen { p_part, extra })
        } else {
            Err(Error::NotOpen(format!(
                "P-part {p_part}, extra bits {extra:03b}"
            )))
        }
    }

    /// The open `P ∪ extra`.
    pub fn with_all_p(extra: u8) -> Result<Self> {
        Self::new(FinOrCofin::cofinite([]), extra)
    }

    pub fn whole() -> Self {
        SymbolicOpen {
            p_part: FinOrCofin::cofinite([]),
            extra: PX | PY | PZ,
        }
    }

    pub fn p_part(&self) -> &FinOrCofin {
        &self.p_part
    }

    pub fn extra(&self) -> u8 {
        self.extra
    }

    /// The point set in the shared index scheme.
    pub fn flat(&self) -> FinOrCofin {
        flat_of(&self.p_part, self.extra)
    }

    /// Reads a flat point set; `None` if it is not a compact open.
    pub fn from_flat(f: &FinOrCofin) -> Option<Self> {
        let (p_part, extra) = split_flat(f);
        Self::new(p_part, extra).ok()
    }

    pub fn union(&self, other: &Self) -> Self {
        Self::from_flat(&self.flat().union(&other.flat()))
            .expect("compact opens are closed under finite unions")
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.flat().is_subset(&other.flat())
    }
}

fn flat_of(p_part: &FinOrCofin, extra: u8) -> FinOrCofin {
    let bits = FinOrCofin::finite((0..3).filter(|&i| extra >> i & 1 == 1));
    p_part.intersection(&FinOrCofin::at_least(3)).union(&bits)
}

fn split_flat(f: &FinOrCofin) -> (FinOrCofin, u8) {
    let tail = f.support().iter().copied().filter(|&i| i >= 3);
    let p_part = if f.is_finite() {
        FinOrCofin::finite(tail)
    } else {
        FinOrCofin::cofinite(tail)
    };
    (p_part, f.trace())
}

/// Intersection, when it is again a compact open.
pub fn qcop_x_inter(u: &SymbolicOpen, v: &SymbolicOpen) -> Option<SymbolicOpen> {
    SymbolicOpen::from_flat(&u.flat().intersection(&v.flat()))
}

impl fmt::Display for SymbolicOpen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = (0..3)
            .filter(|&i| self.extra >> i & 1 == 1)
            .map(|i| POINT_NAMES[i])
            .collect();
        let ps: Vec<String> = self
            .p_part
            .support()
            .iter()
            .map(|i| format!("p{i}"))
            .collect();
        let p = match (self.p_part.is_finite(), ps.is_empty()) {
            (true, _) => format!("{{{}}}", ps.join(",")),
            (false, true) => "P".to_string(),
            (false, false) => format!("(P∖{{{}}})", ps.join(",")),
        };
        if names.is_empty() {
            write!(f, "{p}")
        } else {
            write!(f, "{p}∪{{{}}}", names.join(","))
        }
    }
}

impl Serialize for SymbolicOpen {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let names: Vec<&str> = (0..3)
            .filter(|&i| self.extra >> i & 1 == 1)
            .map(|i| POINT_NAMES[i])
            .collect();
        let mut st = s.serialize_struct("SymbolicOpen", 2)?;
        st.serialize_field("p_part", &self.p_part)?;
        st.serialize_field("extra", &names)?;
        st.end()
    }
}

/// `E ↦ ℕ ∖ E`, read as a compact open of `X`.
pub fn antiiso(e: &FinOrCofin) -> Result<SymbolicOpen> {
    if !in_a(e) {
        return Err(Error::NotInA(e.to_string()));
    }
    Ok(SymbolicOpen::from_flat(&e.complement())
        .expect("complements of A-elements are compact opens"))
}

pub fn antiiso_inverse(u: &SymbolicOpen) -> FinOrCofin {
    u.flat().complement()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentificationReport {
    /// Each bijection `{0,1,2} → {x,y,z}` as the images of 0, 1, 2, and
    /// whether complementation through it is a bijection onto the compact
    /// opens.
    pub candidates: Vec<([&'static str; 3], bool)>,
    pub unique: Option<[&'static str; 3]>,
}

/// Tries all six ways to match `0, 1, 2` with `x, y, z`. Membership in `A`
/// and openness depend only on the kind and trace, so the class
/// representatives decide each candidate exactly.
pub fn derive_identification() -> IdentificationReport {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let valid_forms: Vec<(bool, u8)> = std::iter::once((true, 0))
        .chain([PX, PZ, PX | PZ, PY | PZ, PX | PY | PZ].map(|e| (false, e)))
        .collect();
    let candidates: Vec<([&'static str; 3], bool)> = perms
        .iter()
        .map(|perm| {
            let mut images: Vec<(bool, u8)> = TraceClass::A
                .iter()
                .map(|class| {
                    let comp = class.representative().complement();
                    let extra = (0..3)
                        .filter(|&i| comp.contains(i as u64))
                        .fold(0u8, |m, i| m | 1 << perm[i]);
                    (comp.is_finite(), extra)
                })
                .collect();
            let all_open = images.iter().all(|&(fin, extra)| {
                let p = if fin {
                    FinOrCofin::empty()
                } else {
                    FinOrCofin::cofinite([])
                };
                in_qcop_x(&p, extra)
            });
            images.sort_unstable();
            images.dedup();
            let onto = images.len() == valid_forms.len();
            (perm.map(|i| POINT_NAMES[i]), all_open && onto)
        })
        .collect();
    let good: Vec<_> = candidates.iter().filter(|c| c.1).map(|c| c.0).collect();
    IdentificationReport {
        unique: if good.len() == 1 { Some(good[0]) } else { None },
        candidates,
    }
}

/// `p ⊑ q` iff `q` is in the closure of `p`; only `z ⊑ y` is nontrivial.
pub fn specializes(p: u64, q: u64) -> bool {
    p == q || (p == 2 && q == 1)
}

/// Closed points of `X` as a flat set: everything but `z`.
pub fn closed_points_x() -> FinOrCofin {
    FinOrCofin::cofinite([2])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct XReport {
    pub basic_sets: (SymbolicOpen, SymbolicOpen),
    pub patch_open: FinOrCofin,
    pub closure_of_z: FinOrCofin,
    pub closed_point_free: bool,
    pub transported_pair: (SymbolicOpen, SymbolicOpen),
    /// For each shape of compact open `W`: whether `U ∪ W = X` and
    /// `V ∪ W ≠ X` for the transported pair `(U, V)`.
    pub shapes: Vec<(SymbolicOpen, bool, bool)>,
    pub join_witness_exists: bool,
    pub intersection_escapes: bool,
}

impl XReport {
    pub fn ok(&self) -> bool {
        self.patch_open == FinOrCofin::finite([2])
            && self.closed_point_free
            && !self.join_witness_exists
            && self.intersection_escapes
    }
}

/// Compact opens of `X` are not join-subfit, checked two ways: the
/// patch-open `{z} = (P ∪ {z}) ∖ (P ∪ {x})` misses every closed point,
/// and the non-subfit pair of `A` transported through [`antiiso`] has no
/// separating open.
pub fn check_x_not_join_subfit() -> Result<XReport> {
    let u = SymbolicOpen::with_all_p(PZ)?;
    let v = SymbolicOpen::with_all_p(PX)?;
    let patch_open = u.flat().difference(&v.flat());
    let closure_of_z = FinOrCofin::finite((0..3).filter(|&q| specializes(2, q)));
    let closed_point_free = patch_open.intersection(&closed_points_x()).is_empty();

    let (pu, pv) = (antiiso(&elem_b())?, antiiso(&elem_c())?);
    // Both contain all of P, so only the extra points of W matter.
    let whole = SymbolicOpen::whole();
    let mut shapes = vec![SymbolicOpen::new(FinOrCofin::empty(), 0)?];
    for extra in [PX, PZ, PX | PZ, PY | PZ, PX | PY | PZ] {
        shapes.push(SymbolicOpen::with_all_p(extra)?);
    }
    let shapes: Vec<(SymbolicOpen, bool, bool)> = shapes
        .into_iter()
        .map(|w| {
            let covers = pu.union(&w) == whole;
            let misses = pv.union(&w) != whole;
            (w, covers, misses)
        })
        .collect();
    let join_witness_exists = shapes.iter().any(|&(_, c, m)| c && m);
    let intersection_escapes = qcop_x_inter(&v, &u).is_none();

    Ok(XReport {
        basic_sets: (u, v),
        patch_open,
        closure_of_z,
        closed_point_free,
        transported_pair: (pu, pv),
        shapes,
        join_witness_exists,
        intersection_escapes,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UpCCase {
    Tail,
    SkipZero,
}

/// For `x, y ∈ ↑c` with `y ⊄ x`: `z = {1, 2, n}` with `n >= 3` in `y ∖ x`,
/// so `x ∩ z = c ≠ y ∩ z`.
pub fn up_c_witness(x: &FinOrCofin, y: &FinOrCofin) -> Result<(FinOrCofin, UpCCase)> {
    if !(in_up_c(x) && in_up_c(y)) {
        return Err(Error::PreconditionViolated(format!(
            "{x} and {y} must lie in ↑c"
        )));
    }
    let diff = y.difference(x);
    let least = diff
        .least()
        .ok_or_else(|| Error::PreconditionViolated(format!("{y} ⊆ {x}")))?;
    // Only 0 can lie below 3 in the difference; then y is cofinite and x
    // finite, so the difference is infinite.
    let n = diff
        .least_at_least(3)
        .expect("difference has an element above 2");
    let case = if least >= 3 {
        UpCCase::Tail
    } else {
        UpCCase::SkipZero
    };
    Ok((FinOrCofin::finite([1, 2, n]), case))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SideReport {
    pub samples: usize,
    pub passed: usize,
    pub case_counts: BTreeMap<String, usize>,
    pub first_failure: Option<(SymbolicOpen, SymbolicOpen)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VwReport {
    pub v: SymbolicOpen,
    pub w: SymbolicOpen,
    /// `V` is the image of `c = {1,2}` and `W` the image of `a = {0}`.
    pub v_is_image_of_c: bool,
    pub w_is_image_of_a: bool,
    pub covers_x: bool,
    pub v_side: SideReport,
    pub w_side: SideReport,
}

impl VwReport {
    pub fn ok(&self) -> bool {
        self.v_is_image_of_c
            && self.w_is_image_of_a
            && self.covers_x
            && self.v_side.passed == self.v_side.samples
            && self.w_side.passed == self.w_side.samples
    }
}

/// For compact opens `U1 ⊄ U2` inside `top`: `U3 ⊆ top` with
/// `U1 ∪ U3 = top ≠ U2 ∪ U3`.
fn join_separates(
    top: &SymbolicOpen,
    u1: &SymbolicOpen,
    u2: &SymbolicOpen,
    u3: &SymbolicOpen,
) -> bool {
    [u1, u2, u3].iter().all(|u| u.is_subset(top))
        && !u1.is_subset(u2)
        && u1.union(u3) == *top
        && u2.union(u3) != *top
}

type Constructor = fn(&FinOrCofin, &FinOrCofin) -> Result<(FinOrCofin, String)>;

fn run_side(
    top: &SymbolicOpen,
    classes: &[TraceClass],
    construct: Constructor,
    samples: usize,
    rng: &mut ChaCha8Rng,
    bound: u64,
) -> Result<SideReport> {
    let mut report = SideReport {
        samples,
        ..SideReport::default()
    };
    while report.samples > report.passed + usize::from(report.first_failure.is_some()) {
        let x = sample_in(classes, bound, rng);
        let y = sample_in(classes, bound, rng);
        if y.is_subset(&x) {
            continue;
        }
        // y ⊄ x in A is U1 ⊄ U2 for U1 = image of x, U2 = image of y.
        let (u1, u2) = (antiiso(&x)?, antiiso(&y)?);
        let ok = match construct(&x, &y) {
            Ok((z, case)) => {
                let good = join_separates(top, &u1, &u2, &antiiso(&z)?);
                if good {
                    *report.case_counts.entry(case).or_insert(0) += 1;
                }
                good
            }
            Err(_) => false,
        };
        if ok {
            report.passed += 1;
        } else if report.first_failure.is_none() {
            report.first_failure = Some((u1, u2));
        } else {
            break;
        }
    }
    Ok(report)
}

/// `V = P ∪ {x}` and `W = P ∪ {y, z}` cover `X`, and the compact opens of
/// each are join-subfit: sampled pairs are separated by witnesses pulled
/// back from `↑c` and `↑a` respectively.
pub fn check_v_w_join_subfit(samples: usize, seed: u64, bound: u64) -> Result<VwReport> {
    let v = SymbolicOpen::with_all_p(PX)?;
    let w = SymbolicOpen::with_all_p(PY | PZ)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let w_side = run_side(
        &w,
        &TraceClass::UP_A,
        |x, y| {
            let (z, case) = claim1_witness(x, y)?;
            Ok((
                z,
                serde_json::to_value(case)
                    .expect("enum")
                    .as_str()
                    .unwrap_or("")
                    .to_owned(),
            ))
        },
        samples,
        &mut rng,
        bound,
    )?;
    let v_side = run_side(
        &v,
        &TraceClass::UP_C,
        |x, y| {
            let (z, case) = up_c_witness(x, y)?;
            Ok((
                z,
                serde_json::to_value(case)
                    .expect("enum")
                    .as_str()
                    .unwrap_or("")
                    .to_owned(),
            ))
        },
        samples,
        &mut rng,
        bound,
    )?;
    Ok(VwReport {
        v_is_image_of_c: antiiso(&elem_c())? == v,
        w_is_image_of_a: antiiso(&elem_a())? == w,
        covers_x: v.union(&w) == SymbolicOpen::whole(),
        v,
        w,
        v_side,
        w_side,
    })
}

/// Samples pairs of `A` and checks that [`antiiso`] reverses inclusion,
/// sends meets to unions, lands in the compact opens, and inverts.
pub fn check_antiiso_order(samples: usize, seed: u64, bound: u64) -> Result<SideReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SideReport {
        samples,
        ..SideReport::default()
    };
    for _ in 0..samples {
        let e = sample_in(&TraceClass::A, bound, &mut rng);
        let f = sample_in(&TraceClass::A, bound, &mut rng);
        let (ue, uf) = (antiiso(&e)?, antiiso(&f)?);
        let ok = e.is_subset(&f) == uf.is_subset(&ue)
            && f.is_subset(&e) == ue.is_subset(&uf)
            && ue.union(&uf) == antiiso(&e.intersection(&f))?
            && in_qcop_x(ue.p_part(), ue.extra())
            && antiiso_inverse(&ue) == e;
        if ok {
            let key = if e.is_subset(&f) || f.is_subset(&e) {
                "comparable"
            } else {
                "incomparable"
            };
            *report.case_counts.entry(key.into()).or_insert(0) += 1;
            report.passed += 1;
        } else if report.first_failure.is_none() {
            report.first_failure = Some((ue, uf));
        }
    }
    Ok(report)
}

/// Claim 1 images land inside `W`: its witnesses separate in `↑a`.
pub fn up_a_images_lie_in_w(e: &FinOrCofin) -> Result<bool> {
    Ok(!in_up_a(e) || antiiso(e)?.is_subset(&antiiso(&elem_a())?))
}

/// The pair from the non-subfit argument: `{1}` and `c`, as opens.
pub fn transported_claim3_pair() -> Result<(SymbolicOpen, SymbolicOpen)> {
    Ok((antiiso(&elem_b())?, antiiso(&elem_c())?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::counterexample::sample_a;
    use proptest::prelude::*;

    #[test]
    fn qcop_membership_examples() {
        let cof = FinOrCofin::cofinite([]);
        assert!(in_qcop_x(&cof, PX));
        assert!(in_qcop_x(&cof, PY | PZ));
        assert!(!in_qcop_x(&cof, 0));
        assert!(!in_qcop_x(&cof, PY));
        assert!(!in_qcop_x(&FinOrCofin::finite([4]), PX));
        assert!(in_qcop_x(&FinOrCofin::finite([4]), 0));
        assert!(!in_qcop_x(&FinOrCofin::finite([1]), 0));
    }

    #[test]
    fn intersections() {
        let v = SymbolicOpen::with_all_p(PX).unwrap();
        let z = SymbolicOpen::with_all_p(PZ).unwrap();
        assert_eq!(qcop_x_inter(&v, &z), None);
        assert_eq!(qcop_x_inter(&v, &v), Some(v.clone()));
        let f1 = SymbolicOpen::new(FinOrCofin::finite([3, 4]), 0).unwrap();
        let f2 = SymbolicOpen::new(FinOrCofin::finite([4, 9]), 0).unwrap();
        assert!(qcop_x_inter(&f1, &f2).is_some());
    }

    #[test]
    fn identification_is_unique() {
        let r = derive_identification();
        assert_eq!(r.unique, Some(["x", "y", "z"]));
        assert_eq!(r.candidates.iter().filter(|c| c.1).count(), 1);
    }

    #[test]
    fn antiiso_examples() {
        assert_eq!(
            antiiso(&elem_a()).unwrap(),
            SymbolicOpen::with_all_p(PY | PZ).unwrap()
        );
        let finite_p = antiiso(&FinOrCofin::cofinite([5, 8])).unwrap();
        assert_eq!(
            finite_p,
            SymbolicOpen::new(FinOrCofin::finite([5, 8]), 0).unwrap()
        );
        assert!(matches!(
            antiiso(&FinOrCofin::finite([2])),
            Err(Error::NotInA(_))
        ));
        assert_eq!(finite_p.to_string(), "{p5,p8}");
        assert_eq!(
            serde_json::to_string(&antiiso(&elem_c()).unwrap()).unwrap(),
            r#"{"p_part":{"kind":"cofinite","support":[]},"extra":["x"]}"#
        );
    }

    #[test]
    fn x_report() {
        let r = check_x_not_join_subfit().unwrap();
        assert!(r.ok(), "{r:?}");
        assert_eq!(r.patch_open, FinOrCofin::finite([2]));
        assert_eq!(r.closure_of_z, FinOrCofin::finite([1, 2]));
        assert_eq!(
            r.transported_pair,
            (
                SymbolicOpen::with_all_p(PX | PZ).unwrap(),
                SymbolicOpen::with_all_p(PX).unwrap()
            )
        );
    }

    #[test]
    fn up_c_examples() {
        let (z, case) =
            up_c_witness(&FinOrCofin::finite([1, 2]), &FinOrCofin::finite([1, 2, 7])).unwrap();
        assert_eq!((z, case), (FinOrCofin::finite([1, 2, 7]), UpCCase::Tail));
        let (z, case) =
            up_c_witness(&FinOrCofin::finite([1, 2, 3]), &FinOrCofin::naturals()).unwrap();
        assert_eq!(
            (z, case),
            (FinOrCofin::finite([1, 2, 4]), UpCCase::SkipZero)
        );
    }

    #[test]
    fn v_and_w() {
        let r = check_v_w_join_subfit(3000, 11, 30).unwrap();
        assert!(r.ok(), "{r:?}");
        assert_eq!(r.v_side.case_counts.len(), 2);
        assert_eq!(r.w_side.case_counts.len(), 2);
    }

    proptest! {
        #[test]
        fn antiiso_reverses_order(s1 in any::<u64>(), s2 in any::<u64>()) {
            let e = sample_a(30, &mut ChaCha8Rng::seed_from_u64(s1));
            let f = sample_a(30, &mut ChaCha8Rng::seed_from_u64(s2));
            let (ue, uf) = (antiiso(&e).unwrap(), antiiso(&f).unwrap());
            prop_assert_eq!(e.is_subset(&f), uf.is_subset(&ue));
            prop_assert_eq!(antiiso_inverse(&ue), e.clone());
            prop_assert!(in_qcop_x(ue.p_part(), ue.extra()));
            // Unions stay open; the meet of A maps to the union.
            prop_assert_eq!(ue.union(&uf), antiiso(&e.intersection(&f)).unwrap());
            prop_assert!(up_a_images_lie_in_w(&e).unwrap());
        }
    }
}
