//! Exhaustive and sampled verification sweeps.
//!
//! Every sweep runs its instances in parallel with rayon, merges the
//! per-instance results in enumeration order, and keeps the first failing
//! instance as a JSON counterexample.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bitset::ElemSet;
use crate::duality::{
    birkhoff_space, check_cor53, check_prop52, check_star_property, check_union_theorem,
    closed_sets_contain_closed_points, inverse_space, patch_closure, qcop, FiniteSpace,
};
use crate::enumerate::{enumerate_lattices, enumerate_posets_up_to};
use crate::envelope::{build_envelope, downset_commutation};
use crate::error::Result;
use crate::io::poset_to_json;
use crate::iso::is_isomorphic;
use crate::lattice::{is_distributive_lattice, FiniteLattice};
use crate::poset::FinitePoset;
use crate::subfit::{
    is_ideally_subfit, is_join_subfit, is_join_subfit_directed, subfit_elements,
    thm21_join_witness, ProofBranch,
};
use crate::symbolic::counterexample::{run_claim, run_meet_closure, ClaimReport};
use crate::symbolic::space::{check_v_w_join_subfit, check_x_not_join_subfit, VwReport, XReport};

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct SweepReport {
    pub name: String,
    pub instances: usize,
    pub checks: u64,
    pub failures: u64,
    /// Coverage counters, e.g. how often each proof branch ran.
    pub counts: BTreeMap<String, u64>,
    pub counterexample: Option<Value>,
    /// Exploratory output that is not a pass/fail condition.
    pub example: Option<Value>,
}

impl SweepReport {
    pub fn ok(&self) -> bool {
        self.failures == 0 && self.instances > 0
    }
}

#[derive(Default)]
struct Tally {
    checks: u64,
    failures: u64,
    counts: BTreeMap<String, u64>,
    counterexample: Option<Value>,
    example: Option<Value>,
}

impl Tally {
    fn check(&mut self, ok: bool, cex: impl FnOnce() -> Value) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            self.counterexample.get_or_insert_with(cex);
        }
    }

    fn result<T>(&mut self, r: Result<T>, context: impl FnOnce() -> Value) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(
                    false,
                    || json!({ "error": e.to_string(), "instance": context() }),
                );
                None
            }
        }
    }

    fn count(&mut self, key: &str) {
        *self.counts.entry(key.to_string()).or_insert(0) += 1;
    }
}

fn sweep<T: Sync>(name: &str, items: &[T], f: impl Fn(&T, &mut Tally) + Sync) -> SweepReport {
    let tallies: Vec<Tally> = items
        .par_iter()
        .map(|item| {
            let mut t = Tally::default();
            f(item, &mut t);
            t
        })
        .collect();
    let mut report = SweepReport {
        name: name.to_string(),
        instances: items.len(),
        ..SweepReport::default()
    };
    for t in tallies {
        report.checks += t.checks;
        report.failures += t.failures;
        for (k, v) in t.counts {
            *report.counts.entry(k).or_insert(0) += v;
        }
        if report.counterexample.is_none() {
            report.counterexample = t.counterexample;
        }
        if report.example.is_none() {
            report.example = t.example;
        }
    }
    report
}

fn poset_value(p: &FinitePoset) -> Value {
    serde_json::from_str(&poset_to_json(p)).expect("poset JSON is valid")
}

fn distributive_lattices(max_n: usize) -> Result<Vec<FiniteLattice>> {
    Ok(enumerate_lattices(max_n)?
        .into_iter()
        .filter(is_distributive_lattice)
        .collect())
}

fn spaces(max_n: usize) -> Vec<FiniteSpace> {
    enumerate_posets_up_to(max_n)
        .into_iter()
        .flatten()
        .map(FiniteSpace::from_specialization)
        .collect()
}

/// Subfit elements of every distributive lattice form an ideal, and the
/// witness construction succeeds on every admissible tuple.
pub fn sweep_thm21(max_n: usize) -> Result<SweepReport> {
    let lattices = distributive_lattices(max_n)?;
    Ok(sweep("thm21", &lattices, |l, t| {
        let report = subfit_elements(l.semilattice());
        t.check(
            report.is_ideal,
            || json!({ "lattice": poset_value(l.poset()) }),
        );
        let subfit = report.subfit_set;
        let top = l.top();
        for a in subfit.iter() {
            for b in subfit.iter() {
                if l.join(a, b) != top {
                    continue;
                }
                for s in 0..l.len() {
                    for tt in 0..l.len() {
                        if l.le(tt, s) {
                            continue;
                        }
                        let ctx = || json!({ "lattice": poset_value(l.poset()), "a": a, "b": b, "s": s, "t": tt });
                        let Some(w) = t.result(thm21_join_witness(l, a, b, s, tt), ctx) else {
                            continue;
                        };
                        let valid = l.join(s, w.z) != top && l.join(tt, w.z) == top;
                        t.check(valid, || json!({ "tuple": ctx(), "z": w.z }));
                        let branch = match w.branch {
                            ProofBranch::Direct => "direct",
                            ProofBranch::Combined => "combined",
                        };
                        t.count(branch);
                        if a != top && b != top {
                            t.count(&format!("{branch}_with_a_b_below_top"));
                        }
                        if w.swapped {
                            t.count("swapped");
                        }
                    }
                }
            }
        }
    }))
}

/// The envelope construction passes its internal checks and preserves and
/// reflects join-subfitness on every lattice.
pub fn sweep_thm42(max_n: usize) -> Result<SweepReport> {
    let lattices = enumerate_lattices(max_n)?;
    Ok(sweep("thm42", &lattices, |l, t| {
        let ctx = || json!({ "lattice": poset_value(l.poset()) });
        let Some(env) = t.result(build_envelope(l.semilattice()), ctx) else {
            return;
        };
        let Some(a_sub) = t.result(is_join_subfit(l.semilattice()), ctx) else {
            return;
        };
        let Some(l_sub) = t.result(is_join_subfit(env.l.semilattice()), ctx) else {
            return;
        };
        t.check(
            a_sub == l_sub,
            || json!({ "lattice": poset_value(l.poset()), "a_subfit": a_sub, "l_subfit": l_sub }),
        );
        t.count(if a_sub { "subfit" } else { "not_subfit" });
        if env.l.len() > l.len() {
            t.count("envelope_grows");
        }
    }))
}

/// On distributive lattices the generated lattice is the input itself.
pub fn sweep_envelope_identity(max_n: usize) -> Result<SweepReport> {
    let lattices = distributive_lattices(max_n)?;
    Ok(sweep("envelope_identity", &lattices, |l, t| {
        let ctx = || json!({ "lattice": poset_value(l.poset()) });
        if let Some(env) = t.result(build_envelope(l.semilattice()), ctx) {
            t.check(is_isomorphic(env.l.poset(), l.poset()), ctx);
        }
    }))
}

/// Exploratory: for which `a` the lattice generated by `↓a` differs from
/// the principal downset of `↑a` in the lattice generated by `A`. The
/// smallest instance found is reported as `example`.
pub fn explore_downset_commutation(max_n: usize) -> Result<SweepReport> {
    let lattices = enumerate_lattices(max_n)?;
    Ok(sweep("downset_commutation", &lattices, |l, t| {
        let ctx = || json!({ "lattice": poset_value(l.poset()) });
        let Some(rows) = t.result(downset_commutation(l.semilattice()), ctx) else {
            return;
        };
        for r in rows {
            t.checks += 1;
            if r.isomorphic {
                t.count("commutes");
            } else {
                t.count("differs");
                t.example.get_or_insert_with(|| {
                    json!({ "lattice": poset_value(l.poset()), "element": r.element,
                            "envelope_of_downset": r.envelope_of_downset,
                            "downset_in_envelope": r.downset_in_envelope })
                });
            }
        }
    }))
}

/// Subfitness via separation, via directed witnesses, and via ideals agree.
pub fn sweep_cross_oracle(max_n: usize) -> Result<SweepReport> {
    let lattices = enumerate_lattices(max_n)?;
    Ok(sweep("cross_oracle", &lattices, |l, t| {
        let s = l.semilattice();
        let ctx = || json!({ "lattice": poset_value(l.poset()) });
        let (Some(sep), Some(dir), Some(ideal)) = (
            t.result(is_join_subfit(s), ctx),
            t.result(is_join_subfit_directed(s), ctx),
            t.result(is_ideally_subfit(s), ctx),
        ) else {
            return;
        };
        t.check(sep == dir && dir == ideal, || {
            json!({ "lattice": poset_value(l.poset()), "separation": sep, "directed": dir, "ideal": ideal })
        });
        t.count(if sep { "subfit" } else { "not_subfit" });
    }))
}

fn space_ctx(x: &FiniteSpace) -> Value {
    json!({ "specialization": poset_value(x.specialization()) })
}

pub fn sweep_prop52(max_n: usize) -> SweepReport {
    sweep("prop52", &spaces(max_n), |x, t| {
        if let Some(e) = t.result(check_prop52(x), || space_ctx(x)) {
            t.check(e.holds(), || json!({ "space": space_ctx(x), "sides": e }));
            t.count(if e.left { "both_true" } else { "both_false" });
        }
    })
}

pub fn sweep_cor53(max_n: usize) -> SweepReport {
    sweep("cor53", &spaces(max_n), |x, t| {
        if let Some(e) = t.result(check_cor53(x), || space_ctx(x)) {
            t.check(e.holds(), || json!({ "space": space_ctx(x), "sides": e }));
            t.count(if e.left { "both_true" } else { "both_false" });
        }
    })
}

/// All pairs of opens, and the star property for all nested pairs.
pub fn sweep_union(max_n: usize) -> SweepReport {
    sweep("union", &spaces(max_n), |x, t| {
        let opens = x.opens();
        for &u in &opens {
            for &v in &opens {
                let ctx = || json!({ "space": space_ctx(x), "u": u, "v": v });
                if let Some(ok) = t.result(check_union_theorem(x, u, v), ctx) {
                    t.check(ok, ctx);
                }
                if u.is_subset(v) {
                    if let Some(ok) = t.result(check_star_property(x, u, v), ctx) {
                        t.check(ok, ctx);
                        t.count("star_pairs");
                    }
                }
            }
        }
    })
}

/// Patch discreteness, the antichain/Boolean/subfit equivalence, closed
/// points in closed sets, inverse spaces, and both Birkhoff round trips.
pub fn sweep_spaces(max_n: usize) -> SweepReport {
    sweep("spaces", &spaces(max_n), |x, t| {
        let ctx = || space_ctx(x);
        for s in x.points().subsets() {
            t.check(
                patch_closure(x, s) == s,
                || json!({ "space": ctx(), "set": s }),
            );
        }
        t.check(patch_closure(x, ElemSet::EMPTY).is_empty(), ctx);
        t.check(closed_sets_contain_closed_points(x), ctx);
        let Some(q) = t.result(qcop(x), ctx) else {
            return;
        };
        let Some(subfit) = t.result(is_join_subfit(q.lattice.semilattice()), ctx) else {
            return;
        };
        let antichain = x.specialization().is_antichain();
        let boolean = q.lattice.is_boolean();
        t.check(subfit == antichain && antichain == boolean, || {
            json!({ "space": ctx(), "subfit": subfit, "antichain": antichain, "boolean": boolean })
        });
        t.count(if subfit { "subfit" } else { "not_subfit" });
        if let Some(back) = t.result(birkhoff_space(&q.lattice), ctx) {
            t.check(
                is_isomorphic(back.specialization(), x.specialization()),
                ctx,
            );
        }
        if let Some(qi) = t.result(qcop(&inverse_space(x)), ctx) {
            t.check(
                is_isomorphic(qi.lattice.poset(), &q.lattice.poset().dual()),
                ctx,
            );
        }
    })
}

/// `qcop(birkhoff_space(L)) ≅ L` for distributive lattices.
pub fn sweep_birkhoff_lattices(max_n: usize) -> Result<SweepReport> {
    let lattices = distributive_lattices(max_n)?;
    Ok(sweep("birkhoff_lattices", &lattices, |l, t| {
        let ctx = || json!({ "lattice": poset_value(l.poset()) });
        let Some(x) = t.result(birkhoff_space(l), ctx) else {
            return;
        };
        if let Some(q) = t.result(qcop(&x), ctx) {
            t.check(is_isomorphic(q.lattice.poset(), l.poset()), ctx);
        }
    }))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SymbolicSuite {
    pub claims: Vec<ClaimReport>,
    pub meet_closure: ClaimReport,
}

impl SymbolicSuite {
    pub fn ok(&self) -> bool {
        self.claims.iter().all(ClaimReport::ok) && self.meet_closure.ok()
    }
}

pub fn symbolic_claims(
    claims: &[u8],
    samples: usize,
    closure_samples: usize,
    seed: u64,
    bound: u64,
) -> Result<SymbolicSuite> {
    Ok(SymbolicSuite {
        claims: claims
            .iter()
            .map(|&c| run_claim(c, samples, seed, bound))
            .collect::<Result<_>>()?,
        meet_closure: run_meet_closure(closure_samples, seed, bound)?,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpaceSuite {
    pub x: XReport,
    pub vw: VwReport,
}

impl SpaceSuite {
    pub fn ok(&self) -> bool {
        self.x.ok() && self.vw.ok()
    }
}

pub fn symbolic_space(samples: usize, seed: u64, bound: u64) -> Result<SpaceSuite> {
    Ok(SpaceSuite {
        x: check_x_not_join_subfit()?,
        vw: check_v_w_join_subfit(samples, seed, bound)?,
    })
}
