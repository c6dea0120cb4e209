//! Admissible subsets and the distributive lattice generated by a finite
//! join-semilattice.
//!
//! `E` is the set of nonempty upsets of `A` that contain `⋀S` whenever they
//! contain an admissible `S`, ordered by reverse inclusion: joins are
//! intersections and meets are closures of unions. `a ↦ ↑a` embeds `A`
//! into `E`, and `L` is the bounded sublattice of `E` generated by the
//! image. Every construction step is re-checked and a failed check is
//! reported as [`Error::PropertyCheckFailed`].

use serde::Serialize;

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::iso::is_isomorphic;
use crate::lattice::{is_distributive_lattice, FiniteJoinSemilattice, FiniteLattice};
use crate::poset::FinitePoset;
use crate::subfit::is_join_subfit;

/// Largest base semilattice accepted by [`build_envelope`]; admissible
/// subsets are enumerated exhaustively.
pub const MAX_ENVELOPE_BASE: usize = 16;

/// `⋀S` exists and `⋀(S ∨ b) = (⋀S) ∨ b` for every `b`.
pub fn is_admissible(a: &FiniteJoinSemilattice, s: ElemSet) -> bool {
    admissible_infimum(a, s).is_some()
}

/// The infimum of `s` when `s` is a nonempty admissible subset.
pub fn admissible_infimum(a: &FiniteJoinSemilattice, s: ElemSet) -> Option<usize> {
    if s.is_empty() {
        return None;
    }
    let p = a.poset();
    let m = p.infimum(s)?;
    for b in 0..a.len() {
        let shifted: ElemSet = s.iter().map(|x| a.join(x, b)).collect();
        if p.infimum(shifted) != Some(a.join(m, b)) {
            return None;
        }
    }
    Some(m)
}

/// All nonempty admissible subsets with their infima.
pub fn admissible_subsets(a: &FiniteJoinSemilattice) -> Result<Vec<(ElemSet, usize)>> {
    if a.len() > MAX_ENVELOPE_BASE {
        return Err(Error::TooLarge { n: a.len() });
    }
    Ok(a.poset()
        .all()
        .subsets()
        .filter_map(|s| admissible_infimum(a, s).map(|m| (s, m)))
        .collect())
}

/// Closure operator onto admissible-closed upsets.
#[derive(Clone, Debug)]
pub struct AdmissibleClosure {
    poset: FinitePoset,
    admissible: Vec<(ElemSet, usize)>,
}

impl AdmissibleClosure {
    pub fn new(a: &FiniteJoinSemilattice) -> Result<Self> {
        Ok(AdmissibleClosure {
            poset: a.poset().clone(),
            admissible: admissible_subsets(a)?,
        })
    }

    pub fn admissible(&self) -> &[(ElemSet, usize)] {
        &self.admissible
    }

    pub fn is_closed(&self, u: ElemSet) -> bool {
        self.poset.is_upset(u)
            && self
                .admissible
                .iter()
                .all(|&(s, m)| !s.is_subset(u) || u.contains(m))
    }

    /// Least admissible-closed upset containing `u`, by fixpoint iteration.
    pub fn close(&self, u: ElemSet) -> ElemSet {
        let mut cur = self.poset.upset_closure(u);
        loop {
            let mut changed = false;
            for &(s, m) in &self.admissible {
                if s.is_subset(cur) && !cur.contains(m) {
                    cur = cur.union(self.poset.up(m));
                    changed = true;
                }
            }
            if !changed {
                return cur;
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct EnvelopeResult {
    /// Lattice of admissible-closed upsets under reverse inclusion.
    pub e: FiniteLattice,
    /// Members (as subsets of `A`) of each element of `E`.
    pub e_members: Vec<ElemSet>,
    /// `eta[a]`: index in `E` of `↑a`.
    pub eta: Vec<usize>,
    /// Bounded sublattice of `E` generated by the image of `eta`.
    pub l: FiniteLattice,
    /// `l_in_e[k]`: index in `E` of element `k` of `L`.
    pub l_in_e: Vec<usize>,
    /// `embedding_table[a]`: index in `L` of `↑a`.
    pub embedding_table: Vec<usize>,
    pub prop41: Prop41Report,
}

impl EnvelopeResult {
    pub fn l_members(&self, k: usize) -> ElemSet {
        self.e_members[self.l_in_e[k]]
    }
}

fn fail(clause: impl Into<String>) -> Error {
    Error::PropertyCheckFailed(clause.into())
}

/// Builds `E`, `eta` and `L` for a bounded join-semilattice and checks:
/// `E` is a distributive lattice whose operations are intersection and
/// closure of union; `eta` is injective and preserves joins and bounds;
/// admissible infima of `A` are infima in `E`; and conditions (a), (b) of
/// the subfitness transfer criterion hold for `A ⊆ L`.
pub fn build_envelope(a: &FiniteJoinSemilattice) -> Result<EnvelopeResult> {
    a.require_bottom()?;
    a.require_top()?;
    let closure = AdmissibleClosure::new(a)?;
    let p = a.poset();

    let mut e_members: Vec<ElemSet> = p
        .upsets()
        .into_iter()
        .filter(|&u| !u.is_empty() && closure.is_closed(u))
        .collect();
    e_members.sort_by_key(|u| (std::cmp::Reverse(u.len()), u.0));
    let m = e_members.len();
    if m > crate::bitset::MAX_ELEMENTS {
        return Err(Error::TooLarge { n: m });
    }
    let e_poset = FinitePoset::from_relation(m, |i, j| e_members[j].is_subset(e_members[i]))?;
    let e = FiniteLattice::from_poset(e_poset).ok_or_else(|| fail("E is a lattice"))?;
    let index_of = |u: ElemSet| e_members.iter().position(|&x| x == u);

    for i in 0..m {
        for j in 0..m {
            let (ui, uj) = (e_members[i], e_members[j]);
            if index_of(ui.intersection(uj)) != Some(e.join(i, j)) {
                return Err(fail(format!(
                    "E join of {ui} and {uj} is their intersection"
                )));
            }
            if index_of(closure.close(ui.union(uj))) != Some(e.meet(i, j)) {
                return Err(fail(format!("E meet of {ui} and {uj} is the closed union")));
            }
        }
    }
    if !is_distributive_lattice(&e) {
        return Err(fail("(1) E is distributive"));
    }

    let eta: Vec<usize> = (0..a.len())
        .map(|x| index_of(p.up(x)).ok_or_else(|| fail(format!("↑{x} is admissible-closed"))))
        .collect::<Result<_>>()?;
    for x in 0..a.len() {
        for y in 0..a.len() {
            if x != y && eta[x] == eta[y] {
                return Err(fail("eta is injective"));
            }
            if eta[a.join(x, y)] != e.join(eta[x], eta[y]) {
                return Err(fail(format!("eta preserves the join of {x} and {y}")));
            }
        }
    }
    if eta[a.require_bottom()?] != e.bottom() || eta[a.require_top()?] != e.top() {
        return Err(fail("eta preserves bounds"));
    }
    for &(s, inf) in closure.admissible() {
        let image: ElemSet = s.iter().map(|x| eta[x]).collect();
        if e.meet_all(image) != eta[inf] {
            return Err(fail(format!(
                "(2) admissible infimum of {s} is preserved in E"
            )));
        }
    }

    let mut l_set: ElemSet = eta.iter().copied().collect();
    l_set = l_set.with(e.bottom()).with(e.top());
    loop {
        let mut next = l_set;
        for i in l_set.iter() {
            for j in l_set.iter() {
                next.insert(e.join(i, j));
                next.insert(e.meet(i, j));
            }
        }
        if next == l_set {
            break;
        }
        l_set = next;
    }
    let (l_poset, l_in_e) = e.poset().induced(l_set);
    let l = FiniteLattice::from_poset(l_poset).ok_or_else(|| fail("L is a lattice"))?;
    let embedding_table: Vec<usize> = eta
        .iter()
        .map(|&k| {
            l_in_e
                .iter()
                .position(|&x| x == k)
                .expect("eta image lies in L")
        })
        .collect();

    let prop41 = check_prop41_with(
        &JoinEmbedding {
            source: a,
            target: l.semilattice(),
            map: &embedding_table,
        },
        Some(closure.admissible()),
    )?;
    if !prop41.cond_a {
        return Err(fail(
            "(a) every element of L is cut out by finitely many elements of A",
        ));
    }
    if !prop41.cond_b {
        return Err(fail("(b) admissible infima of A are infima in L"));
    }

    Ok(EnvelopeResult {
        e,
        e_members,
        eta,
        l,
        l_in_e,
        embedding_table,
        prop41,
    })
}

/// A map between bounded join-semilattices, `map[a]` = image of `a`.
#[derive(Clone, Copy, Debug)]
pub struct JoinEmbedding<'a> {
    pub source: &'a FiniteJoinSemilattice,
    pub target: &'a FiniteJoinSemilattice,
    pub map: &'a [usize],
}

impl JoinEmbedding<'_> {
    /// Injective, join-preserving, and sends bounds to bounds.
    pub fn validate(&self) -> Result<()> {
        let (src, tgt, map) = (self.source, self.target, self.map);
        let bad = |m: String| Err(Error::NotAnEmbedding(m));
        if map.len() != src.len() {
            return bad(format!("{} images for {} elements", map.len(), src.len()));
        }
        if let Some(&i) = map.iter().find(|&&i| i >= tgt.len()) {
            return bad(format!("image {i} outside the target"));
        }
        let image: ElemSet = map.iter().copied().collect();
        if image.len() != map.len() {
            return bad("map is not injective".into());
        }
        for x in 0..src.len() {
            for y in 0..src.len() {
                if map[src.join(x, y)] != tgt.join(map[x], map[y]) {
                    return bad(format!("join of {x} and {y} is not preserved"));
                }
            }
        }
        let (sb, st) = (src.require_bottom()?, src.require_top()?);
        if Some(map[sb]) != tgt.bottom() || Some(map[st]) != tgt.top() {
            return bad("bounds are not preserved".into());
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prop41Report {
    pub cond_a: bool,
    pub cond_b: bool,
    /// An element of the target with no finite family from the source.
    pub a_counterexample: Option<usize>,
    /// An admissible subset of the source whose infimum changes.
    pub b_counterexample: Option<ElemSet>,
}

/// Checks, by finite enumeration:
///
/// (a) every `b` in the target has `a_1..a_n` in the source with
///     `a ∨ b = ⋀ {a ∨ a_i}` (in the target) for all source elements `a`;
/// (b) every finite admissible subset of the source keeps its infimum in
///     the target.
pub fn check_prop41(emb: &JoinEmbedding<'_>) -> Result<Prop41Report> {
    check_prop41_with(emb, None)
}

fn check_prop41_with(
    emb: &JoinEmbedding<'_>,
    admissible: Option<&[(ElemSet, usize)]>,
) -> Result<Prop41Report> {
    emb.validate()?;
    let (src, tgt, map) = (emb.source, emb.target, emb.map);
    let tp = tgt.poset();

    let mut a_counterexample = None;
    for b in 0..tgt.len() {
        // With a = bottom the condition forces every a_i above b, so only
        // those are searched; larger families are tried first.
        let candidates: ElemSet = (0..src.len()).filter(|&x| tgt.le(b, map[x])).collect();
        let works = |family: ElemSet| {
            (0..src.len()).all(|x| {
                let shifted: ElemSet = family.iter().map(|ai| tgt.join(map[x], map[ai])).collect();
                tp.infimum(shifted) == Some(tgt.join(map[x], b))
            })
        };
        let mut found = false;
        let mut sub = candidates.0;
        while sub != 0 {
            if works(ElemSet(sub)) {
                found = true;
                break;
            }
            sub = (sub - 1) & candidates.0;
        }
        if !found {
            a_counterexample = Some(b);
            break;
        }
    }

    let owned;
    let admissible = match admissible {
        Some(list) => list,
        None => {
            owned = admissible_subsets(src)?;
            &owned
        }
    };
    let b_counterexample = admissible
        .iter()
        .find(|&&(s, inf)| tp.infimum(s.map_through(map)) != Some(map[inf]))
        .map(|&(s, _)| s);

    Ok(Prop41Report {
        cond_a: a_counterexample.is_none(),
        cond_b: b_counterexample.is_none(),
        a_counterexample,
        b_counterexample,
    })
}

/// Under conditions (a) and (b), source and target agree on join-subfitness.
pub fn check_prop41_transfer(emb: &JoinEmbedding<'_>) -> Result<bool> {
    let r = check_prop41(emb)?;
    if !(r.cond_a && r.cond_b) {
        return Err(Error::ConditionsNotMet {
            cond_a: r.cond_a,
            cond_b: r.cond_b,
        });
    }
    Ok(is_join_subfit(emb.source)? == is_join_subfit(emb.target)?)
}

/// `A` is join-subfit iff its generated distributive lattice `L` is.
pub fn verify_thm42(a: &FiniteJoinSemilattice) -> Result<bool> {
    let env = build_envelope(a)?;
    Ok(is_join_subfit(a)? == is_join_subfit(env.l.semilattice())?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DownsetComparison {
    pub element: usize,
    /// `|L(↓a)|`, the lattice generated by the principal downset alone.
    pub envelope_of_downset: usize,
    /// `|↓eta(a)|` computed inside `L(A)`.
    pub downset_in_envelope: usize,
    pub isomorphic: bool,
}

/// Compares, for each `a`, the lattice generated by `↓a` with the principal
/// downset of `eta(a)` in the lattice generated by `A`.
pub fn downset_commutation(a: &FiniteJoinSemilattice) -> Result<Vec<DownsetComparison>> {
    let env = build_envelope(a)?;
    (0..a.len())
        .map(|x| {
            let (down, _) = a.restrict_to_downset(x);
            let local = build_envelope(&down)?;
            let k = env.embedding_table[x];
            let (in_l, _) = env.l.poset().induced(env.l.poset().down(k));
            Ok(DownsetComparison {
                element: x,
                envelope_of_downset: local.l.len(),
                downset_in_envelope: in_l.len(),
                isomorphic: is_isomorphic(local.l.poset(), &in_l),
            })
        })
        .collect()
}
