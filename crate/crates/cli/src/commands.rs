use std::io::Read;

use serde_json::json;

use subfit_core::duality::{birkhoff_space, closed_points, inverse_space, qcop};
use subfit_core::envelope::build_envelope;
use subfit_core::harness::{
    sweep_cor53, sweep_cross_oracle, sweep_prop52, sweep_thm21, sweep_thm42, sweep_union,
    symbolic_claims, symbolic_space, SweepReport,
};
use subfit_core::io::{poset_from_json, PosetFile};
use subfit_core::lattice::is_distributive_join_semilattice;
use subfit_core::subfit::{
    self, indistinguishable_pair, is_join_subfit, is_meet_subfit, thm21_join_witness,
};
use subfit_core::symbolic::space::check_antiiso_order;
use subfit_core::{
    is_distributive_lattice, is_isomorphic, Error, FiniteJoinSemilattice, FiniteLattice,
    FinitePoset,
};

use crate::report::{labels_of, Inputs, RunReport};
use crate::Verify;

/// Input problems; reported on stderr with exit status 2.
pub type CmdResult = Result<RunReport, String>;

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| format!("stdin: {e}"))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
    }
}

fn load(path: &str) -> Result<(FinitePoset, Inputs), String> {
    let text = read_input(path)?;
    let p = poset_from_json(&text).map_err(|e| format!("{path}: {e}"))?;
    Ok((p, Inputs::file(path, &text)))
}

fn as_semilattice(p: FinitePoset) -> Result<FiniteJoinSemilattice, String> {
    FiniteJoinSemilattice::from_poset(p)
        .ok_or_else(|| Error::NotASemilattice("join-semilattice").to_string())
}

fn as_lattice(p: FinitePoset) -> Result<FiniteLattice, String> {
    FiniteLattice::from_poset(p).ok_or_else(|| Error::NotASemilattice("lattice").to_string())
}

/// `#3` is always index 3; a bare name is a label first, then an index.
fn element(p: &FinitePoset, name: &str) -> Result<usize, String> {
    let index = match name.strip_prefix('#') {
        Some(digits) => digits.parse::<usize>().ok(),
        None => p.index_of(name).or_else(|| name.parse::<usize>().ok()),
    };
    index
        .filter(|&i| i < p.len())
        .ok_or_else(|| format!("no element {name:?} among {} elements", p.len()))
}

pub fn check(path: &str) -> CmdResult {
    let (p, inputs) = load(path)?;
    let mut r = RunReport::new("check", inputs);
    let join = FiniteJoinSemilattice::from_poset(p.clone());
    let meet = FiniteJoinSemilattice::from_poset(p.dual());
    let lattice = FiniteLattice::from_poset(p.clone());
    r.set("n", p.len());
    r.set("is_poset", true);
    r.set("has_top", p.top().is_some());
    r.set("has_bottom", p.bottom().is_some());
    r.set("is_bounded", p.top().is_some() && p.bottom().is_some());
    r.set("is_join_semilattice", join.is_some());
    r.set("is_meet_semilattice", meet.is_some());
    r.set("is_lattice", lattice.is_some());
    r.set(
        "is_distributive_join_semilattice",
        join.as_ref().map(is_distributive_join_semilattice),
    );
    r.set(
        "is_distributive_lattice",
        lattice.as_ref().map(is_distributive_lattice),
    );
    r.set(
        "is_boolean",
        lattice.as_ref().map(FiniteLattice::is_boolean),
    );
    let join_subfit = join.as_ref().and_then(|s| is_join_subfit(s).ok());
    r.set("join_subfit", join_subfit);
    r.set(
        "meet_subfit",
        meet.as_ref().and_then(|_| is_meet_subfit(&p).ok()),
    );
    if let Some(Some((u, v))) = join.as_ref().and_then(|s| indistinguishable_pair(s).ok()) {
        r.set("indistinguishable_pair", [u, v]);
        r.set("indistinguishable_pair_labels", labels_of(&p, [u, v]));
    }
    Ok(r)
}

pub fn subfit_elements(path: &str) -> CmdResult {
    let (p, inputs) = load(path)?;
    let s = as_semilattice(p.clone())?;
    let mut r = RunReport::new("subfit-elements", inputs);
    let rep = subfit::subfit_elements(&s);
    r.set("subfit_set", rep.subfit_set);
    r.set("subfit_set_labels", labels_of(&p, rep.subfit_set.iter()));
    r.set("is_downset", rep.is_downset);
    r.set("is_ideal", rep.is_ideal);
    r.set("offending_pair", rep.offending_pair);
    r.set(
        "offending_pair_labels",
        rep.offending_pair.and_then(|(a, b)| labels_of(&p, [a, b])),
    );
    r.set(
        "join_subfit",
        is_join_subfit(&s).map_err(|e| e.to_string())?,
    );
    // Subfit elements of a distributive lattice always form an ideal.
    if FiniteLattice::from_poset(p).is_some_and(|l| is_distributive_lattice(&l)) {
        r.check("distributive_implies_ideal", rep.is_ideal, || {
            Some(json!({ "subfit_set": rep.subfit_set, "offending_pair": rep.offending_pair }))
        });
    }
    Ok(r)
}

pub fn witness(path: &str, names: [&String; 4]) -> CmdResult {
    let (p, inputs) = load(path)?;
    let [a, b, s, t] = [0, 1, 2, 3].map(|k| element(&p, names[k]));
    let (a, b, s, t) = (a?, b?, s?, t?);
    let inputs = inputs
        .param("a", a)
        .param("b", b)
        .param("s", s)
        .param("t", t);
    let l = as_lattice(p.clone())?;
    let w = thm21_join_witness(&l, a, b, s, t).map_err(|e| e.to_string())?;
    let top = l.top();
    let mut r = RunReport::new("witness", inputs);
    r.set("z", w.z);
    r.set("z_label", labels_of(&p, [w.z]).map(|v| v[0].clone()));
    r.set("branch", w.branch);
    r.set("swapped", w.swapped);
    r.set("y", w.y);
    r.set("w", w.w);
    r.set("x", w.x);
    let ctx = || Some(json!({ "a": a, "b": b, "s": s, "t": t, "z": w.z }));
    r.check("s_join_z_below_top", l.join(s, w.z) != top, ctx);
    r.check("t_join_z_is_top", l.join(t, w.z) == top, ctx);
    Ok(r)
}

pub fn envelope(path: &str) -> CmdResult {
    let (p, inputs) = load(path)?;
    let a = as_semilattice(p)?;
    let mut r = RunReport::new("envelope", inputs);
    let env = match build_envelope(&a) {
        Ok(env) => env,
        Err(Error::PropertyCheckFailed(clause)) => {
            r.check("envelope_properties", false, || {
                Some(json!({ "clause": clause }))
            });
            return Ok(r);
        }
        Err(e) => return Err(e.to_string()),
    };
    r.set("envelope_properties", true);
    let subfit_a = is_join_subfit(&a).map_err(|e| e.to_string())?;
    let subfit_l = is_join_subfit(env.l.semilattice()).map_err(|e| e.to_string())?;
    r.set("size_a", a.len());
    r.set("size_e", env.e.len());
    r.set("size_l", env.l.len());
    r.set("join_subfit_a", subfit_a);
    r.set("join_subfit_l", subfit_l);
    r.set("embedding", &env.embedding_table);
    let prop = &env.prop41;
    let cex = || Some(json!(prop));
    r.check("transfer_condition_a", prop.cond_a, cex);
    r.check("transfer_condition_b", prop.cond_b, cex);
    r.check("subfitness_agrees", subfit_a == subfit_l, || {
        Some(json!({ "join_subfit_a": subfit_a, "join_subfit_l": subfit_l }))
    });
    Ok(r)
}

pub fn dualize(path: &str) -> CmdResult {
    let (p, inputs) = load(path)?;
    let l = as_lattice(p)?;
    let x = birkhoff_space(&l).map_err(|e| e.to_string())?;
    let opens = qcop(&x).map_err(|e| e.to_string())?;
    let mut r = RunReport::new("dualize", inputs);
    r.set("space", PosetFile::from_poset(x.specialization()));
    r.set("points", x.len());
    r.set("closed_points", closed_points(&x));
    r.set("opens", opens.opens.len());
    r.check(
        "opens_recover_lattice",
        is_isomorphic(opens.lattice.poset(), l.poset()),
        || Some(json!({ "opens": opens.opens })),
    );
    let back = birkhoff_space(&opens.lattice).map_err(|e| e.to_string())?;
    r.check(
        "space_recovered",
        is_isomorphic(back.specialization(), x.specialization()),
        || None,
    );
    let inv = inverse_space(&x);
    r.check("inverse_is_involution", inverse_space(&inv) == x, || None);
    let dual_opens = qcop(&inv).map_err(|e| e.to_string())?;
    r.check(
        "inverse_opens_are_dual_lattice",
        is_isomorphic(dual_opens.lattice.poset(), l.dual().poset()),
        || None,
    );
    Ok(r)
}

fn add_sweep(r: &mut RunReport, sweep: SweepReport) {
    let ok = sweep.ok();
    let name = sweep.name.clone();
    let cex = sweep.counterexample.clone();
    r.set(&name, &sweep);
    r.check(&format!("{name}_ok"), ok, || cex);
}

pub fn enumerate(max_n: usize, verify: Verify) -> CmdResult {
    let inputs = Inputs::default()
        .param("max_n", max_n)
        .param("verify", format!("{verify:?}").to_lowercase());
    let sweep = match verify {
        Verify::Thm21 => sweep_thm21(max_n),
        Verify::Thm42 => sweep_thm42(max_n),
        Verify::Prop52 => Ok(sweep_prop52(max_n)),
        Verify::Cor53 => Ok(sweep_cor53(max_n)),
        Verify::Union => Ok(sweep_union(max_n)),
        Verify::Idealsubfit => sweep_cross_oracle(max_n),
    }
    .map_err(|e| e.to_string())?;
    let mut r = RunReport::new("enumerate", inputs);
    add_sweep(&mut r, sweep);
    Ok(r)
}

pub fn space_check(max_n: usize) -> CmdResult {
    let mut r = RunReport::new("space-check", Inputs::default().param("max_n", max_n));
    for sweep in [sweep_prop52(max_n), sweep_cor53(max_n), sweep_union(max_n)] {
        add_sweep(&mut r, sweep);
    }
    Ok(r)
}

pub fn counterexample(
    claims: &[u8],
    samples: usize,
    seed: u64,
    bound: u64,
    space: bool,
) -> CmdResult {
    let inputs = Inputs::default()
        .param("claims", claims.to_vec())
        .param("samples", samples)
        .param("seed", seed)
        .param("bound", bound)
        .param("space", space);
    let mut r = RunReport::new("counterexample", inputs);
    if !claims.is_empty() {
        let suite =
            symbolic_claims(claims, samples, samples, seed, bound).map_err(|e| e.to_string())?;
        for c in suite.claims.iter().chain([&suite.meet_closure]) {
            r.set(&c.suite, c);
            r.check(&format!("{}_ok", c.suite), c.ok(), || {
                c.counterexample
                    .as_ref()
                    .map(|v| json!({ "suite": c.suite, "inputs": v }))
            });
        }
    }
    if space {
        let s = symbolic_space(samples, seed, bound).map_err(|e| e.to_string())?;
        let order = check_antiiso_order(samples, seed, bound).map_err(|e| e.to_string())?;
        let order_ok = order.passed == order.samples;
        r.set("space_x", &s.x);
        r.set("space_v_w", &s.vw);
        r.set("space_antiiso_order", &order);
        r.check("space_x_ok", s.x.ok(), || Some(json!(s.x)));
        r.check("space_v_w_ok", s.vw.ok(), || {
            let first =
                s.vw.v_side
                    .first_failure
                    .as_ref()
                    .or(s.vw.w_side.first_failure.as_ref());
            first.map(|f| json!(f))
        });
        r.check("space_antiiso_order_ok", order_ok, || {
            order.first_failure.as_ref().map(|f| json!(f))
        });
    }
    Ok(r)
}
