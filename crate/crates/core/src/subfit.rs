//! Subfitness of finite join-semilattices, subfit elements, and the
//! witness-producing algorithm behind "subfit elements of a bounded
//! distributive lattice form an ideal".
//!
//! Join-subfit means distinct elements have distinct co-annihilators
//! `{c : a ∨ c = 1}`. The equivalent directed form asks, for every
//! `u ≰ v`, for some `z` with `u ∨ z = 1` and `v ∨ z < 1`; witnesses are
//! always searched in ascending index order.

use serde::Serialize;

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::lattice::{is_distributive_lattice, FiniteJoinSemilattice, FiniteLattice};
use crate::poset::FinitePoset;

/// `c` separates `u` and `v`: exactly one of `u ∨ c`, `v ∨ c` is the top.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SubfitWitness {
    pub u: usize,
    pub v: usize,
    pub c: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubfitElementReport {
    pub subfit_set: ElemSet,
    pub is_downset: bool,
    pub is_ideal: bool,
    pub offending_pair: Option<(usize, usize)>,
}

/// First pair `a < b` (by index) with equal co-annihilators, if any.
pub fn indistinguishable_pair(s: &FiniteJoinSemilattice) -> Result<Option<(usize, usize)>> {
    let top = s.require_top()?;
    let co: Vec<ElemSet> = (0..s.len()).map(|a| s.co_annihilator(a, top)).collect();
    for a in 0..s.len() {
        for b in a + 1..s.len() {
            if co[a] == co[b] {
                return Ok(Some((a, b)));
            }
        }
    }
    Ok(None)
}

pub fn is_join_subfit(s: &FiniteJoinSemilattice) -> Result<bool> {
    Ok(indistinguishable_pair(s)?.is_none())
}

/// Separation form for one pair: some `c` with exactly one of `u ∨ c`,
/// `v ∨ c` equal to the top.
pub fn separating_witness(
    s: &FiniteJoinSemilattice,
    u: usize,
    v: usize,
) -> Result<Option<SubfitWitness>> {
    let top = s.require_top()?;
    Ok((0..s.len())
        .find(|&c| (s.join(u, c) == top) != (s.join(v, c) == top))
        .map(|c| SubfitWitness { u, v, c }))
}

/// Directed form: the first `z` with `u ∨ z = 1` and `v ∨ z < 1`.
pub fn join_subfit_witness(
    s: &FiniteJoinSemilattice,
    u: usize,
    v: usize,
) -> Result<Option<SubfitWitness>> {
    let top = s.require_top()?;
    if s.le(u, v) {
        return Err(Error::NotComparable { u, v });
    }
    Ok((0..s.len())
        .find(|&z| s.join(u, z) == top && s.join(v, z) != top)
        .map(|c| SubfitWitness { u, v, c }))
}

/// Join-subfitness decided through the directed form.
pub fn is_join_subfit_directed(s: &FiniteJoinSemilattice) -> Result<bool> {
    s.require_top()?;
    for u in 0..s.len() {
        for v in 0..s.len() {
            if !s.le(u, v) && join_subfit_witness(s, u, v)?.is_none() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Meet-subfitness of a lattice: join-subfitness of its dual.
pub fn is_lattice_meet_subfit(l: &FiniteLattice) -> bool {
    is_join_subfit(l.dual().semilattice()).expect("finite lattices have a top")
}

/// Meet-subfitness of a finite meet-semilattice given by its order.
pub fn is_meet_subfit(p: &FinitePoset) -> Result<bool> {
    if p.bottom().is_none() {
        return Err(Error::MissingBottom);
    }
    let dual = FiniteJoinSemilattice::from_poset(p.dual())
        .ok_or(Error::NotASemilattice("meet-semilattice"))?;
    is_join_subfit(&dual)
}

fn is_join_closed(s: &FiniteJoinSemilattice, set: ElemSet) -> bool {
    set.iter()
        .all(|a| set.iter().all(|b| set.contains(s.join(a, b))))
}

/// Nonempty downset closed under binary joins.
pub fn is_ideal(s: &FiniteJoinSemilattice, set: ElemSet) -> bool {
    !set.is_empty() && s.poset().is_downset(set) && is_join_closed(s, set)
}

/// `S = { a : ↓a is join-subfit }` with its downset and ideal status.
pub fn subfit_elements(s: &FiniteJoinSemilattice) -> SubfitElementReport {
    let subfit_set: ElemSet = (0..s.len())
        .filter(|&a| {
            let (down, _) = s.restrict_to_downset(a);
            is_join_subfit(&down).expect("a principal downset has its generator as top")
        })
        .collect();
    let is_downset = s.poset().is_downset(subfit_set);
    let is_ideal = is_ideal(s, subfit_set);
    let offending_pair = if is_downset && !is_ideal {
        subfit_set.iter().find_map(|a| {
            subfit_set
                .iter()
                .filter(|&b| b > a)
                .find(|&b| !subfit_set.contains(s.join(a, b)))
                .map(|b| (a, b))
        })
    } else {
        None
    };
    SubfitElementReport {
        subfit_set,
        is_downset,
        is_ideal,
        offending_pair,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProofBranch {
    /// `s ∨ y ∨ a < 1`, answer `z = y ∨ a`.
    Direct,
    /// `s ∨ y ∨ a = 1`, answer `z = w ∨ x`.
    Combined,
}

/// Output of [`thm21_join_witness`] with the intermediate elements of the
/// construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Thm21Witness {
    pub z: usize,
    pub branch: ProofBranch,
    /// The roles of `a` and `b` were exchanged to make `b ∧ t ≰ b ∧ s`.
    pub swapped: bool,
    pub y: usize,
    pub w: Option<usize>,
    pub x: Option<usize>,
}

/// Directed witness inside `↓top_elem`, mapped back into `l`.
fn witness_below(l: &FiniteLattice, top_elem: usize, u: usize, v: usize) -> Result<usize> {
    let (down, map) = l.semilattice().restrict_to_downset(top_elem);
    let local = |e: usize| {
        map.iter()
            .position(|&m| m == e)
            .expect("element lies in the downset")
    };
    let w = join_subfit_witness(&down, local(u), local(v))?.ok_or_else(|| {
        Error::PreconditionViolated(format!(
            "↓{top_elem} has no witness for {u} ≰ {v}; it is not join-subfit"
        ))
    })?;
    Ok(map[w.c])
}

/// Given `a ∨ b = 1` with `↓a`, `↓b` join-subfit and `t ≰ s` in a bounded
/// distributive lattice, constructs `z` with `s ∨ z < 1` and `t ∨ z = 1`.
///
/// The steps mirror the constructive argument: pick the side where
/// `b ∧ t ≰ b ∧ s` (swapping `a` and `b` if needed), take `y ≤ b` from the
/// subfitness of `↓b`, and either return `y ∨ a` or, when
/// `s ∨ y ∨ a = 1`, set `w = (b ∧ s) ∨ y`, take `x ≤ a` from the
/// subfitness of `↓a` for `a ∧ t ≰ a ∧ (s ∨ w)`, and return `w ∨ x`.
pub fn thm21_join_witness(
    l: &FiniteLattice,
    a: usize,
    b: usize,
    s: usize,
    t: usize,
) -> Result<Thm21Witness> {
    for e in [a, b, s, t] {
        if e >= l.len() {
            return Err(Error::IndexOutOfRange {
                index: e,
                n: l.len(),
            });
        }
    }
    if !is_distributive_lattice(l) {
        return Err(Error::NotDistributive);
    }
    let top = l.top();
    if l.join(a, b) != top {
        return Err(Error::PreconditionViolated(format!(
            "{a} ∨ {b} is not the top"
        )));
    }
    if l.le(t, s) {
        return Err(Error::PreconditionViolated(format!("{t} <= {s}")));
    }
    for e in [a, b] {
        let (down, _) = l.semilattice().restrict_to_downset(e);
        if !is_join_subfit(&down)? {
            return Err(Error::PreconditionViolated(format!(
                "↓{e} is not join-subfit"
            )));
        }
    }

    let swapped = l.le(l.meet(b, t), l.meet(b, s));
    let (a, b) = if swapped { (b, a) } else { (a, b) };
    if l.le(l.meet(b, t), l.meet(b, s)) {
        // Impossible under distributivity with a ∨ b = 1 and t ≰ s.
        return Err(Error::PreconditionViolated(
            "t is below s on both sides of a ∨ b".into(),
        ));
    }

    let y = witness_below(l, b, l.meet(b, t), l.meet(b, s))?;
    if l.join(l.join(s, y), a) != top {
        return Ok(Thm21Witness {
            z: l.join(y, a),
            branch: ProofBranch::Direct,
            swapped,
            y,
            w: None,
            x: None,
        });
    }
    let w = l.join(l.meet(b, s), y);
    let x = witness_below(l, a, l.meet(a, t), l.meet(a, l.join(s, w)))?;
    Ok(Thm21Witness {
        z: l.join(w, x),
        branch: ProofBranch::Combined,
        swapped,
        y,
        w: Some(w),
        x: Some(x),
    })
}

/// Subfit elements of a bounded distributive lattice form an ideal.
pub fn verify_thm21(l: &FiniteLattice) -> Result<bool> {
    if !is_distributive_lattice(l) {
        return Err(Error::NotDistributive);
    }
    Ok(subfit_elements(l.semilattice()).is_ideal)
}

/// All ideals (nonempty join-closed downsets).
pub fn ideals(s: &FiniteJoinSemilattice) -> Vec<ElemSet> {
    s.poset()
        .downsets()
        .into_iter()
        .filter(|&d| is_ideal(s, d))
        .collect()
}

/// The ideal generated by `set`, i.e. its join in the ideal lattice when
/// `set` is a union of ideals.
pub fn generated_ideal(s: &FiniteJoinSemilattice, set: ElemSet) -> ElemSet {
    let mut cur = s.poset().downset_closure(set);
    loop {
        let mut next = cur;
        for a in cur.iter() {
            for b in cur.iter() {
                next.insert(s.join(a, b));
            }
        }
        let next = s.poset().downset_closure(next);
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// For every `u ≰ v` some ideal `W` has `↓u ∨ W = A` and `↓v ∨ W ≠ A` in
/// the ideal lattice.
pub fn is_ideally_subfit(s: &FiniteJoinSemilattice) -> Result<bool> {
    s.require_top()?;
    let all = s.poset().all();
    let ideals = ideals(s);
    for u in 0..s.len() {
        for v in 0..s.len() {
            if s.le(u, v) {
                continue;
            }
            let (du, dv) = (s.poset().down(u), s.poset().down(v));
            let found = ideals.iter().any(|&w| {
                generated_ideal(s, du.union(w)) == all && generated_ideal(s, dv.union(w)) != all
            });
            if !found {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, intro_index as ix};

    fn semi(n: usize) -> FiniteJoinSemilattice {
        FiniteLattice::chain(n).into_semilattice()
    }

    #[test]
    fn chains() {
        assert!(is_join_subfit(&semi(2)).unwrap());
        assert!(!is_join_subfit(&semi(3)).unwrap());
        assert_eq!(indistinguishable_pair(&semi(3)).unwrap(), Some((0, 1)));
        assert!(is_join_subfit(&semi(1)).unwrap());
    }

    #[test]
    fn intro_lattice_pair_s_t() {
        let l = catalog::intro_lattice();
        let s = l.semilattice();
        assert!(!is_join_subfit(s).unwrap());
        let co = |e| s.co_annihilator(e, l.top());
        let expected: ElemSet = [ix("a"), ix("b"), ix("1")].into_iter().collect();
        assert_eq!(co(ix("s")), expected);
        assert_eq!(co(ix("t")), expected);
    }

    #[test]
    fn meet_side_needs_a_bottom() {
        // Two minimal points under a common top.
        let lambda = catalog::v_poset().dual();
        assert!(matches!(is_meet_subfit(&lambda), Err(Error::MissingBottom)));
    }

    #[test]
    fn directed_witness_examples() {
        // Boolean square: atoms p = 1, q = 2. Result must equal the scan.
        let b2 = FiniteLattice::boolean(2).into_semilattice();
        let scan = (0..4).find(|&z| b2.join(1, z) == 3 && b2.join(2, z) != 3);
        assert_eq!(join_subfit_witness(&b2, 1, 2).unwrap().map(|w| w.c), scan);
        // z = q: p ∨ q = 1 while q ∨ q = q.
        assert_eq!(scan, Some(2));

        assert_eq!(join_subfit_witness(&semi(3), 1, 0).unwrap(), None);
        // z = 1 would give 0 ∨ z = 1; the bottom is the witness.
        assert_eq!(join_subfit_witness(&semi(2), 1, 0).unwrap().unwrap().c, 0);
        assert!(matches!(
            join_subfit_witness(&semi(2), 0, 1),
            Err(Error::NotComparable { u: 0, v: 1 })
        ));
    }

    #[test]
    fn meet_subfitness() {
        assert!(is_lattice_meet_subfit(&FiniteLattice::chain(2)));
        assert!(is_lattice_meet_subfit(&FiniteLattice::boolean(2)));
        assert!(!is_lattice_meet_subfit(&FiniteLattice::chain(3)));
        assert!(is_meet_subfit(FiniteLattice::boolean(2).poset()).unwrap());
    }

    #[test]
    fn subfit_elements_examples() {
        let intro = catalog::intro_lattice();
        let r = subfit_elements(intro.semilattice());
        let expected: ElemSet = ["0", "a", "b", "t"].into_iter().map(ix).collect();
        assert_eq!(r.subfit_set, expected);
        assert!(r.is_downset);
        assert!(!r.is_ideal);
        assert_eq!(r.offending_pair, Some((ix("a"), ix("b"))));

        let r = subfit_elements(&semi(3));
        assert_eq!(r.subfit_set, [0, 1].into_iter().collect());
        assert!(r.is_ideal);
        assert_eq!(r.offending_pair, None);

        let r = subfit_elements(FiniteLattice::boolean(3).semilattice());
        assert_eq!(r.subfit_set, ElemSet::full(8));
        assert!(r.is_ideal);
    }

    #[test]
    fn thm21_boolean_square_trace() {
        let l = FiniteLattice::boolean(2);
        let (p, q) = (1, 2);
        let w = thm21_join_witness(&l, p, q, p, q).unwrap();
        assert!(!w.swapped);
        assert_eq!(w.y, 0);
        assert_eq!(w.branch, ProofBranch::Direct);
        assert_eq!(w.z, p);
        assert!(l.join(p, w.z) != l.top());
        assert_eq!(l.join(q, w.z), l.top());
    }

    #[test]
    fn thm21_two_chain() {
        let l = FiniteLattice::chain(2);
        let w = thm21_join_witness(&l, 1, 0, 0, 1).unwrap();
        assert!(w.swapped);
        assert_eq!(w.z, 0);
    }

    #[test]
    fn thm21_preconditions() {
        let intro = catalog::intro_lattice();
        assert_eq!(
            thm21_join_witness(&intro, ix("a"), ix("b"), ix("s"), ix("t")),
            Err(Error::NotDistributive)
        );
        let b2 = FiniteLattice::boolean(2);
        assert!(matches!(
            thm21_join_witness(&b2, 1, 1, 0, 2),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            thm21_join_witness(&b2, 1, 2, 3, 1),
            Err(Error::PreconditionViolated(_))
        ));
        let c3 = FiniteLattice::chain(3);
        assert!(matches!(
            thm21_join_witness(&c3, 2, 0, 0, 1),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn verify_thm21_examples() {
        assert_eq!(
            verify_thm21(&catalog::intro_lattice()),
            Err(Error::NotDistributive)
        );
        assert!(!subfit_elements(catalog::intro_lattice().semilattice()).is_ideal);
        assert_eq!(verify_thm21(&FiniteLattice::boolean(3)), Ok(true));
    }

    #[test]
    fn ideally_subfit_examples() {
        assert!(is_ideally_subfit(&semi(2)).unwrap());
        assert_eq!(ideals(&semi(3)).len(), 3);
        assert!(!is_ideally_subfit(&semi(3)).unwrap());
    }
}
