//! The meet-semilattice `A` of finite and cofinite subsets of ℕ whose
//! elements are classified by their trace on `{0, 1, 2}`:
//!
//! * finite sets with trace `∅, {0}, {1}, {0,1}, {1,2}` (classes
//!   `F, F0, F1, F01, F12`);
//! * cofinite sets containing `{0,1,2}` (class `C012`).
//!
//! Its generated lattice `B` adds the finite sets with trace `{0,1,2}`
//! (class `F012`). `A` is distributive, `↑{0}` and `↑{1}` are meet-subfit,
//! and `A` itself is not.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::finset::FinOrCofin;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TraceClass {
    F,
    F0,
    F1,
    F01,
    F12,
    F012,
    C012,
}

impl TraceClass {
    /// The classes making up `A`.
    pub const A: [TraceClass; 6] = [
        TraceClass::F,
        TraceClass::F0,
        TraceClass::F1,
        TraceClass::F01,
        TraceClass::F12,
        TraceClass::C012,
    ];
    pub const UP_A: [TraceClass; 3] = [TraceClass::F0, TraceClass::F01, TraceClass::C012];
    pub const UP_B: [TraceClass; 4] = [
        TraceClass::F1,
        TraceClass::F01,
        TraceClass::F12,
        TraceClass::C012,
    ];
    pub const UP_C: [TraceClass; 2] = [TraceClass::F12, TraceClass::C012];

    pub fn trace(self) -> u8 {
        match self {
            TraceClass::F => 0b000,
            TraceClass::F0 => 0b001,
            TraceClass::F1 => 0b010,
            TraceClass::F01 => 0b011,
            TraceClass::F12 => 0b110,
            TraceClass::F012 | TraceClass::C012 => 0b111,
        }
    }

    pub fn is_finite(self) -> bool {
        self != TraceClass::C012
    }

    /// The member of the class with nothing above 2.
    pub fn representative(self) -> FinOrCofin {
        if self.is_finite() {
            FinOrCofin::finite((0..3).filter(|&i| self.trace() >> i & 1 == 1))
        } else {
            FinOrCofin::naturals()
        }
    }
}

/// The class of `e` in `B`, or `None` when `e ∉ B`.
pub fn classify(e: &FinOrCofin) -> Option<TraceClass> {
    let t = e.trace();
    if !e.is_finite() {
        return (t == 0b111).then_some(TraceClass::C012);
    }
    Some(match t {
        0b000 => TraceClass::F,
        0b001 => TraceClass::F0,
        0b010 => TraceClass::F1,
        0b011 => TraceClass::F01,
        0b110 => TraceClass::F12,
        0b111 => TraceClass::F012,
        _ => return None,
    })
}

fn class_in(e: &FinOrCofin, classes: &[TraceClass]) -> bool {
    classify(e).is_some_and(|c| classes.contains(&c))
}

pub fn in_a(e: &FinOrCofin) -> bool {
    class_in(e, &TraceClass::A)
}

pub fn in_b(e: &FinOrCofin) -> bool {
    classify(e).is_some()
}

pub fn in_up_a(e: &FinOrCofin) -> bool {
    class_in(e, &TraceClass::UP_A)
}

pub fn in_up_b(e: &FinOrCofin) -> bool {
    class_in(e, &TraceClass::UP_B)
}

pub fn in_up_c(e: &FinOrCofin) -> bool {
    class_in(e, &TraceClass::UP_C)
}

pub fn elem_a() -> FinOrCofin {
    FinOrCofin::finite([0])
}

pub fn elem_b() -> FinOrCofin {
    FinOrCofin::finite([1])
}

pub fn elem_c() -> FinOrCofin {
    FinOrCofin::finite([1, 2])
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::PreconditionViolated(msg()))
    }
}

fn require_in_a(e: &FinOrCofin) -> Result<()> {
    if in_a(e) {
        Ok(())
    } else {
        Err(Error::NotInA(e.to_string()))
    }
}

pub fn meet_a(e: &FinOrCofin, f: &FinOrCofin) -> Result<FinOrCofin> {
    require_in_a(e)?;
    require_in_a(f)?;
    Ok(e.intersection(f))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim1Case {
    Direct,
    CofiniteFallback,
}

/// For `x, y ∈ ↑a` with `y ⊄ x`: `z ∈ ↑a` with `x ∩ z = a ≠ y ∩ z`.
pub fn claim1_witness(x: &FinOrCofin, y: &FinOrCofin) -> Result<(FinOrCofin, Claim1Case)> {
    require(in_up_a(x) && in_up_a(y), || {
        format!("{x} and {y} must lie in ↑a")
    })?;
    let diff = y.difference(x);
    let n = diff
        .least()
        .ok_or_else(|| Error::PreconditionViolated(format!("{y} ⊆ {x}")))?;
    if n != 2 {
        return Ok((FinOrCofin::finite([0, n]), Claim1Case::Direct));
    }
    // 2 ∈ y forces y cofinite and 2 ∉ x forces x finite.
    let m = diff
        .least_at_least(3)
        .expect("cofinite minus finite is infinite");
    Ok((FinOrCofin::finite([0, m]), Claim1Case::CofiniteFallback))
}

/// For `x, y ∈ ↑b` with `y ⊄ x`: `z = {1, n}` with `n` least in `y ∖ x`.
pub fn claim2_witness(x: &FinOrCofin, y: &FinOrCofin) -> Result<FinOrCofin> {
    require(in_up_b(x) && in_up_b(y), || {
        format!("{x} and {y} must lie in ↑b")
    })?;
    let n = y
        .difference(x)
        .least()
        .ok_or_else(|| Error::PreconditionViolated(format!("{y} ⊆ {x}")))?;
    Ok(FinOrCofin::finite([1, n]))
}

/// `x ∩ z = bottom` and `y ∩ z ≠ bottom` with `z` in `member`.
pub fn separates(
    x: &FinOrCofin,
    y: &FinOrCofin,
    z: &FinOrCofin,
    bottom: &FinOrCofin,
    member: fn(&FinOrCofin) -> bool,
) -> bool {
    member(z) && x.intersection(z) == *bottom && y.intersection(z) != *bottom
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassCheck {
    pub class: TraceClass,
    pub disjoint_from_x: bool,
    pub meets_y: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim3Refutation {
    pub witness_pair: (FinOrCofin, FinOrCofin),
    pub below_c: Vec<FinOrCofin>,
    pub classes: Vec<ClassCheck>,
    pub witness_exists: bool,
}

/// `A` is not meet-subfit: for `x = {1}` and `y = c = {1,2}` no `z ∈ A`
/// has `x ∩ z = ∅ ≠ y ∩ z`.
///
/// Both `x` and `y` lie inside `{0,1,2}`, so the two conditions depend on
/// `z` only through its trace and the six classes are checked exactly.
pub fn claim3_refute() -> Claim3Refutation {
    let (x, y) = (elem_b(), elem_c());
    let classes: Vec<ClassCheck> = TraceClass::A
        .iter()
        .map(|&class| {
            let z = class.representative();
            ClassCheck {
                class,
                disjoint_from_x: x.intersection(&z).is_empty(),
                meets_y: !y.intersection(&z).is_empty(),
            }
        })
        .collect();
    let below_c = [0u64, 1, 2, 3]
        .iter()
        .map(|&bits| {
            FinOrCofin::finite([1u64, 2].into_iter().filter(|&i| bits >> (i - 1) & 1 == 1))
        })
        .filter(in_a)
        .collect();
    let witness_exists = classes.iter().any(|c| c.disjoint_from_x && c.meets_y);
    Claim3Refutation {
        witness_pair: (x, y),
        below_c,
        classes,
        witness_exists,
    }
}

/// `{0,1,2} ∪ (ℕ≥3 ∖ y) ∪ x ∪ z`.
fn cofinite_lift(x: &FinOrCofin, y: &FinOrCofin, z: &FinOrCofin) -> FinOrCofin {
    FinOrCofin::finite([0, 1, 2])
        .union(&FinOrCofin::at_least(3).difference(y))
        .union(x)
        .union(z)
}

/// `x' ⊇ x`, `y' ⊇ y`, `x' ∩ y' = z`, and both lie in `member`.
pub fn distributes(
    (x, y, z): (&FinOrCofin, &FinOrCofin, &FinOrCofin),
    (xp, yp): (&FinOrCofin, &FinOrCofin),
    member: fn(&FinOrCofin) -> bool,
) -> bool {
    x.is_subset(xp) && y.is_subset(yp) && xp.intersection(yp) == *z && member(xp) && member(yp)
}

fn lift_or_union(
    x: &FinOrCofin,
    y: &FinOrCofin,
    z: &FinOrCofin,
    bad: &[TraceClass],
) -> (FinOrCofin, FinOrCofin, bool) {
    if class_in(x, bad) {
        (cofinite_lift(x, y, z), y.union(z), true)
    } else if class_in(y, bad) {
        (x.union(z), cofinite_lift(y, x, z), true)
    } else {
        (x.union(z), y.union(z), false)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim5Case {
    AUnion,
    BUnion,
    BCofinite,
}

/// `↑b` is distributive: for `x ∩ y ⊆ z` in `↑b`, `x' ⊇ x` and `y' ⊇ y` in
/// `↑b` with `x' ∩ y' = z`.
pub fn claim5_witness(
    x: &FinOrCofin,
    y: &FinOrCofin,
    z: &FinOrCofin,
) -> Result<(FinOrCofin, FinOrCofin, Claim5Case)> {
    require(in_up_b(x) && in_up_b(y) && in_up_b(z), || {
        format!("{x}, {y}, {z} must lie in ↑b")
    })?;
    require(x.intersection(y).is_subset(z), || {
        format!("{x} ∩ {y} ⊄ {z}")
    })?;
    let bad: &[TraceClass] = match classify(z).expect("z ∈ ↑b") {
        TraceClass::F1 | TraceClass::C012 => {
            return Ok((x.union(z), y.union(z), Claim5Case::AUnion));
        }
        TraceClass::F01 => &[TraceClass::F12],
        TraceClass::F12 => &[TraceClass::F01],
        _ => unreachable!("classes of ↑b"),
    };
    let (xp, yp, lifted) = lift_or_union(x, y, z, bad);
    let case = if lifted {
        Claim5Case::BCofinite
    } else {
        Claim5Case::BUnion
    };
    Ok((xp, yp, case))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim6Case {
    I,
    IiUnion,
    IiCofinite,
    IiiUnion,
    IiiCofinite,
    IvUnion,
    IvCofinite,
}

/// `A` is distributive: for `x ∩ y ⊆ z` in `A`, `x' ⊇ x` and `y' ⊇ y` in
/// `A` with `x' ∩ y' = z`.
pub fn claim6_witness(
    x: &FinOrCofin,
    y: &FinOrCofin,
    z: &FinOrCofin,
) -> Result<(FinOrCofin, FinOrCofin, Claim6Case)> {
    for e in [x, y, z] {
        require(in_a(e), || format!("{e} ∉ A"))?;
    }
    require(x.intersection(y).is_subset(z), || {
        format!("{x} ∩ {y} ⊄ {z}")
    })?;
    use Claim6Case::*;
    let (bad, cases): (&[TraceClass], _) = match classify(z).expect("z ∈ A") {
        TraceClass::F | TraceClass::F1 | TraceClass::C012 => {
            return Ok((x.union(z), y.union(z), I));
        }
        TraceClass::F0 => (&[TraceClass::F12], (IiUnion, IiCofinite)),
        TraceClass::F01 => (&[TraceClass::F12], (IiiUnion, IiiCofinite)),
        TraceClass::F12 => (&[TraceClass::F0, TraceClass::F01], (IvUnion, IvCofinite)),
        TraceClass::F012 => unreachable!("F012 is outside A"),
    };
    let (xp, yp, lifted) = lift_or_union(x, y, z, bad);
    Ok((xp, yp, if lifted { cases.1 } else { cases.0 }))
}

/// Claim 4 on one pair: `↑a` is closed under union and intersection.
pub fn up_a_closed_on(x: &FinOrCofin, y: &FinOrCofin) -> bool {
    in_up_a(&x.union(y)) && in_up_a(&x.intersection(y))
}

/// A uniformly chosen class, then a uniform tail inside `3..=bound`.
pub fn sample_class<R: Rng + ?Sized>(class: TraceClass, bound: u64, rng: &mut R) -> FinOrCofin {
    let tail: Vec<u64> = (3..=bound).filter(|_| rng.gen_bool(0.5)).collect();
    if class.is_finite() {
        class.representative().union(&FinOrCofin::finite(tail))
    } else {
        FinOrCofin::cofinite(tail)
    }
}

pub fn sample_in<R: Rng + ?Sized>(classes: &[TraceClass], bound: u64, rng: &mut R) -> FinOrCofin {
    let class = *classes.choose(rng).expect("nonempty class list");
    sample_class(class, bound, rng)
}

/// An element of `A` with support inside `0..=bound`, `bound >= 4`.
pub fn sample_a<R: Rng + ?Sized>(bound: u64, rng: &mut R) -> FinOrCofin {
    assert!(bound >= 4, "sampling bound must be at least 4");
    sample_in(&TraceClass::A, bound, rng)
}

/// Greedy shrinking of a failing input tuple: first drop support elements,
/// then remove elements of the traces, keeping each step that still fails.
pub fn shrink(
    mut inputs: Vec<FinOrCofin>,
    still_fails: impl Fn(&[FinOrCofin]) -> bool,
) -> Vec<FinOrCofin> {
    loop {
        let mut progressed = false;
        for i in 0..inputs.len() {
            // Every candidate has a strictly smaller support, so this ends.
            let e = &inputs[i];
            let (tail, trace): (Vec<u64>, Vec<u64>) =
                e.support().iter().rev().partition(|&&s| s >= 3);
            let candidates: Vec<FinOrCofin> = tail
                .into_iter()
                .chain(trace)
                .map(|s| {
                    if e.is_finite() {
                        e.without(s)
                    } else {
                        e.with(s)
                    }
                })
                .collect();
            for cand in candidates {
                let mut trial = inputs.clone();
                trial[i] = cand;
                if still_fails(&trial) {
                    inputs = trial;
                    progressed = true;
                    break;
                }
            }
        }
        if !progressed {
            return inputs;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    /// `claim1` .. `claim6`, or `meet_closure` for intersection-closure of `A`.
    pub suite: String,
    pub exact: bool,
    pub samples: usize,
    pub passed: usize,
    pub failed: usize,
    pub case_counts: BTreeMap<String, usize>,
    /// Shrunk inputs of the first failing sample.
    pub counterexample: Option<Vec<FinOrCofin>>,
}

impl ClaimReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

pub const DEFAULT_SEED: u64 = 0x5eed_2024;
pub const DEFAULT_BOUND: u64 = 30;
const CHUNK: usize = 512;

fn case_name<T: Serialize>(case: &T) -> String {
    serde_json::to_value(case)
        .ok()
        .and_then(|v| v.as_str().map(str::to_owned))
        .unwrap_or_else(|| "unknown".into())
}

/// One sampled trial: `Some(case)` when the postcondition held,
/// `None` when it failed. `inputs` receives the sampled tuple.
type Trial = fn(&mut ChaCha8Rng, u64, &mut Vec<FinOrCofin>) -> Option<String>;

fn check_tuple(claim: u8, inputs: &[FinOrCofin]) -> bool {
    match (claim, inputs) {
        (1, [x, y]) => {
            claim1_witness(x, y).is_ok_and(|(z, _)| separates(x, y, &z, &elem_a(), in_up_a))
        }
        (2, [x, y]) => claim2_witness(x, y).is_ok_and(|z| separates(x, y, &z, &elem_b(), in_up_b)),
        (0, [x, y]) => meet_a(x, y).is_ok_and(|m| in_a(&m)),
        (4, [x, y]) => up_a_closed_on(x, y),
        (5, [x, y, z]) => claim5_witness(x, y, z)
            .is_ok_and(|(xp, yp, _)| distributes((x, y, z), (&xp, &yp), in_up_b)),
        (6, [x, y, z]) => claim6_witness(x, y, z)
            .is_ok_and(|(xp, yp, _)| distributes((x, y, z), (&xp, &yp), in_a)),
        _ => false,
    }
}

/// A pair from `classes` with `y ⊄ x`.
fn sample_incomparable(
    rng: &mut ChaCha8Rng,
    classes: &[TraceClass],
    bound: u64,
) -> [FinOrCofin; 2] {
    loop {
        let x = sample_in(classes, bound, rng);
        let y = sample_in(classes, bound, rng);
        if !y.is_subset(&x) {
            return [x, y];
        }
    }
}

/// A triple from `classes` with `x ∩ y ⊆ z`, built as `z = (x ∩ y) ∪ r`.
fn sample_triple(rng: &mut ChaCha8Rng, classes: &[TraceClass], bound: u64) -> [FinOrCofin; 3] {
    loop {
        let x = sample_in(classes, bound, rng);
        let y = sample_in(classes, bound, rng);
        let r = sample_in(classes, bound, rng);
        let z = x.intersection(&y).union(&r);
        if class_in(&z, classes) {
            return [x, y, z];
        }
    }
}

fn trial_for(claim: u8) -> Option<Trial> {
    Some(match claim {
        0 => |rng, bound, inputs| {
            let x = sample_in(&TraceClass::A, bound, rng);
            let y = sample_in(&TraceClass::A, bound, rng);
            let out = meet_a(&x, &y)
                .ok()
                .and_then(|m| classify(&m).filter(|_| in_a(&m)));
            *inputs = vec![x, y];
            out.map(|c| format!("{c:?}"))
        },
        1 => |rng, bound, inputs| {
            let [x, y] = sample_incomparable(rng, &TraceClass::UP_A, bound);
            let out = claim1_witness(&x, &y).ok().and_then(|(z, case)| {
                separates(&x, &y, &z, &elem_a(), in_up_a).then(|| case_name(&case))
            });
            *inputs = vec![x, y];
            out
        },
        2 => |rng, bound, inputs| {
            let [x, y] = sample_incomparable(rng, &TraceClass::UP_B, bound);
            let out = claim2_witness(&x, &y).ok().and_then(|z| {
                let n = *z.support().iter().find(|&&n| n != 1).expect("z = {1, n}");
                let case = if n < 3 { "small_n" } else { "tail_n" };
                separates(&x, &y, &z, &elem_b(), in_up_b).then(|| case.to_string())
            });
            *inputs = vec![x, y];
            out
        },
        4 => |rng, bound, inputs| {
            let x = sample_in(&TraceClass::UP_A, bound, rng);
            let y = sample_in(&TraceClass::UP_A, bound, rng);
            let kinds = match (x.is_finite(), y.is_finite()) {
                (true, true) => "finite_finite",
                (false, false) => "cofinite_cofinite",
                _ => "mixed",
            };
            let out = up_a_closed_on(&x, &y).then(|| kinds.to_string());
            *inputs = vec![x, y];
            out
        },
        5 => |rng, bound, inputs| {
            let [x, y, z] = sample_triple(rng, &TraceClass::UP_B, bound);
            let out = claim5_witness(&x, &y, &z).ok().and_then(|(xp, yp, case)| {
                distributes((&x, &y, &z), (&xp, &yp), in_up_b).then(|| case_name(&case))
            });
            *inputs = vec![x, y, z];
            out
        },
        6 => |rng, bound, inputs| {
            let [x, y, z] = sample_triple(rng, &TraceClass::A, bound);
            let out = claim6_witness(&x, &y, &z).ok().and_then(|(xp, yp, case)| {
                distributes((&x, &y, &z), (&xp, &yp), in_a).then(|| case_name(&case))
            });
            *inputs = vec![x, y, z];
            out
        },
        _ => return None,
    })
}

/// Passed count, case counts and first failing input of one sampling chunk.
type ChunkResult = (usize, BTreeMap<String, usize>, Option<Vec<FinOrCofin>>);

/// Runs a claim on `samples` seeded inputs. Claim 3 is exact and ignores
/// the sampling parameters. Chunks of the sample stream are seeded
/// independently, so results do not depend on the thread count.
pub fn run_claim(claim: u8, samples: usize, seed: u64, bound: u64) -> Result<ClaimReport> {
    if claim == 0 {
        return Err(Error::Invalid("claims are numbered 1 to 6, got 0".into()));
    }
    run_suite(claim, samples, seed, bound)
}

/// Samples pairs of `A` and checks that their intersection stays in `A`.
pub fn run_meet_closure(samples: usize, seed: u64, bound: u64) -> Result<ClaimReport> {
    run_suite(0, samples, seed, bound)
}

fn suite_name(claim: u8) -> String {
    if claim == 0 {
        "meet_closure".into()
    } else {
        format!("claim{claim}")
    }
}

fn run_suite(claim: u8, samples: usize, seed: u64, bound: u64) -> Result<ClaimReport> {
    if claim == 3 {
        let r = claim3_refute();
        let case_counts = r
            .classes
            .iter()
            .map(|c| (format!("{:?}", c.class), 1))
            .collect();
        let ok = !r.witness_exists && r.classes.len() == 6;
        return Ok(ClaimReport {
            suite: suite_name(claim),
            exact: true,
            samples: r.classes.len(),
            passed: if ok { r.classes.len() } else { 0 },
            failed: usize::from(!ok),
            case_counts,
            counterexample: None,
        });
    }
    let trial = trial_for(claim)
        .ok_or_else(|| Error::Invalid(format!("claims are numbered 1 to 6, got {claim}")))?;
    if bound < 4 {
        return Err(Error::Invalid(format!(
            "sampling bound must be at least 4, got {bound}"
        )));
    }
    let chunks = samples.div_ceil(CHUNK);
    let partials: Vec<ChunkResult> = (0..chunks)
        .into_par_iter()
        .map(|k| {
            let mut rng =
                ChaCha8Rng::seed_from_u64(seed ^ (k as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
            let mut counts = BTreeMap::new();
            let mut first_failure = None;
            let mut inputs = Vec::new();
            let n = CHUNK.min(samples - k * CHUNK);
            let mut passed = 0;
            for _ in 0..n {
                match trial(&mut rng, bound, &mut inputs) {
                    Some(case) => {
                        passed += 1;
                        *counts.entry(case).or_insert(0) += 1;
                    }
                    None => {
                        first_failure.get_or_insert_with(|| inputs.clone());
                    }
                }
            }
            (passed, counts, first_failure)
        })
        .collect();
    let mut report = ClaimReport {
        suite: suite_name(claim),
        exact: false,
        samples,
        passed: 0,
        failed: 0,
        case_counts: BTreeMap::new(),
        counterexample: None,
    };
    for (passed, counts, failure) in partials {
        report.passed += passed;
        for (case, c) in counts {
            *report.case_counts.entry(case).or_insert(0) += c;
        }
        if report.counterexample.is_none() {
            report.counterexample = failure;
        }
    }
    report.failed = samples - report.passed;
    report.counterexample = report
        .counterexample
        .map(|inputs| shrink(inputs, |t| !check_tuple(claim, t)));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fin(v: &[u64]) -> FinOrCofin {
        FinOrCofin::finite(v.iter().copied())
    }

    #[test]
    fn membership_examples() {
        assert!(in_a(&fin(&[1, 2])));
        assert!(!in_a(&fin(&[2])));
        assert!(in_a(&FinOrCofin::cofinite([5])));
        assert!(!in_a(&FinOrCofin::cofinite([1])));
        assert!(!in_a(&fin(&[0, 1, 2])) && in_b(&fin(&[0, 1, 2])));
    }

    #[test]
    fn meets() {
        assert_eq!(meet_a(&fin(&[0, 5]), &fin(&[1, 5])).unwrap(), fin(&[5]));
        assert_eq!(meet_a(&elem_a(), &elem_b()).unwrap(), FinOrCofin::empty());
        let m = meet_a(&FinOrCofin::cofinite([4]), &FinOrCofin::cofinite([9])).unwrap();
        assert!(in_a(&m) && !m.is_finite());
        assert!(matches!(
            meet_a(&fin(&[2]), &elem_a()),
            Err(Error::NotInA(_))
        ));
    }

    #[test]
    fn claim1_examples() {
        let (z, case) = claim1_witness(&fin(&[0]), &fin(&[0, 5])).unwrap();
        assert_eq!((z, case), (fin(&[0, 5]), Claim1Case::Direct));
        let (z, case) = claim1_witness(&fin(&[0, 1]), &FinOrCofin::naturals()).unwrap();
        assert_eq!((z, case), (fin(&[0, 3]), Claim1Case::CofiniteFallback));
        assert!(claim1_witness(&fin(&[0, 5]), &fin(&[0])).is_err());
    }

    #[test]
    fn claim2_examples() {
        assert_eq!(
            claim2_witness(&fin(&[1]), &fin(&[1, 2])).unwrap(),
            fin(&[1, 2])
        );
        assert_eq!(
            claim2_witness(&fin(&[1, 4]), &fin(&[1, 7])).unwrap(),
            fin(&[1, 7])
        );
    }

    #[test]
    fn claim3_is_refuted_exactly() {
        let r = claim3_refute();
        assert_eq!(r.witness_pair, (fin(&[1]), fin(&[1, 2])));
        assert_eq!(r.below_c, vec![fin(&[]), fin(&[1]), fin(&[1, 2])]);
        assert_eq!(r.classes.len(), 6);
        assert!(!r.witness_exists);
    }

    #[test]
    fn claim5_displayed_case() {
        // x ∈ F12, y ∈ F1, z ∈ F01.
        let (x, y, z) = (fin(&[1, 2, 4]), fin(&[1, 4, 6]), fin(&[0, 1, 4]));
        let (xp, yp, case) = claim5_witness(&x, &y, &z).unwrap();
        assert_eq!(case, Claim5Case::BCofinite);
        assert_eq!(yp, y.union(&z));
        assert_eq!(xp, FinOrCofin::cofinite([6]));
        assert!(distributes((&x, &y, &z), (&xp, &yp), in_up_b));
        let c = FinOrCofin::cofinite([8]);
        let (xp, yp, case) = claim5_witness(&x, &y, &c).unwrap();
        assert_eq!(
            (xp, yp, case),
            (x.union(&c), y.union(&c), Claim5Case::AUnion)
        );
    }

    #[test]
    fn claim6_cases() {
        let (xp, yp, case) = claim6_witness(&fin(&[0, 3]), &fin(&[1, 3]), &fin(&[3])).unwrap();
        assert_eq!((xp, yp, case), (fin(&[0, 3]), fin(&[1, 3]), Claim6Case::I));
        let (x, y, z) = (fin(&[1, 2, 5]), fin(&[5, 9]), fin(&[0, 5]));
        let (xp, yp, case) = claim6_witness(&x, &y, &z).unwrap();
        assert_eq!(case, Claim6Case::IiCofinite);
        assert_eq!(xp, cofinite_lift(&x, &y, &z));
        assert_eq!(yp, y.union(&z));
        assert!(distributes((&x, &y, &z), (&xp, &yp), in_a));
        // y ∈ F in case (iv).
        let (x, y, z) = (fin(&[0, 7]), fin(&[7]), fin(&[1, 2, 7]));
        let (xp, yp, case) = claim6_witness(&x, &y, &z).unwrap();
        assert_eq!(case, Claim6Case::IvCofinite);
        assert!(distributes((&x, &y, &z), (&xp, &yp), in_a));
    }

    #[test]
    fn sampler_is_deterministic_and_in_a() {
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..200).map(|_| sample_a(30, &mut rng)).collect::<Vec<_>>()
        };
        let a = draw(7);
        assert_eq!(a, draw(7));
        assert!(a.iter().all(in_a));
    }

    #[test]
    fn shrinker_reaches_a_minimal_failure() {
        let start = vec![fin(&[0, 1, 4, 9, 12]), FinOrCofin::cofinite([3, 5])];
        let out = shrink(start, |t| t[0].contains(9) && !t[1].contains(5));
        assert_eq!(out, vec![fin(&[9]), FinOrCofin::cofinite([5])]);
    }

    #[test]
    fn sampled_claims_hold() {
        for claim in [1, 2, 4, 5, 6] {
            let r = run_claim(claim, 2000, DEFAULT_SEED, DEFAULT_BOUND).unwrap();
            assert!(r.ok(), "{r:?}");
        }
        assert!(run_claim(3, 0, 0, 0).unwrap().ok());
        assert!(run_claim(7, 10, 0, 30).is_err());
        let m = run_meet_closure(5000, DEFAULT_SEED, DEFAULT_BOUND).unwrap();
        assert!(m.ok() && m.case_counts.len() == 6, "{m:?}");
    }
}
