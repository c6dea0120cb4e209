//! Finite T0 spaces through their specialization order.
//!
//! Convention: `p ⊑ q` iff `q ∈ cl{p}`. Opens are the `⊑`-downsets, the
//! closure of a set is its upset, and the closed points are the maximal
//! points. Every open of a finite space is compact, so the compact opens
//! are all opens.

use serde::Serialize;

use crate::bitset::{ElemSet, MAX_ELEMENTS};
use crate::error::{Error, Result};
use crate::lattice::{is_distributive_lattice, FiniteLattice};
use crate::poset::FinitePoset;
use crate::subfit::{is_join_subfit, is_lattice_meet_subfit};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSpace {
    spec: FinitePoset,
}

impl FiniteSpace {
    pub fn from_specialization(spec: FinitePoset) -> Self {
        FiniteSpace { spec }
    }

    /// A space given by its open sets. They must form a T0 topology.
    pub fn from_opens(n: usize, opens: &[ElemSet]) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::TooLarge { n });
        }
        let all = ElemSet::full(n);
        if let Some(u) = opens.iter().find(|u| !u.is_subset(all)) {
            return Err(Error::Invalid(format!(
                "open {u} has points outside 0..{n}"
            )));
        }
        let spec = FinitePoset::from_relation(n, |p, q| {
            opens.iter().all(|u| !u.contains(q) || u.contains(p))
        })
        .map_err(|_| Error::Invalid("points are not separated by opens (not T0)".into()))?;
        let mut given: Vec<ElemSet> = opens.to_vec();
        given.sort_by_key(|u| (u.len(), u.0));
        given.dedup();
        if given != spec.downsets() {
            return Err(Error::Invalid(
                "open sets are not closed under unions and intersections".into(),
            ));
        }
        Ok(FiniteSpace { spec })
    }

    pub fn specialization(&self) -> &FinitePoset {
        &self.spec
    }

    pub fn len(&self) -> usize {
        self.spec.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spec.is_empty()
    }

    pub fn points(&self) -> ElemSet {
        self.spec.all()
    }

    /// All opens, sorted by size then bits.
    pub fn opens(&self) -> Vec<ElemSet> {
        self.spec.downsets()
    }

    pub fn is_open(&self, u: ElemSet) -> bool {
        u.is_subset(self.points()) && self.spec.is_downset(u)
    }

    pub fn closure(&self, s: ElemSet) -> ElemSet {
        self.spec.upset_closure(s)
    }

    pub fn interior(&self, s: ElemSet) -> ElemSet {
        self.points()
            .iter()
            .filter(|&x| self.spec.down(x).is_subset(s))
            .collect()
    }

    /// Subspace on `s`; `map[k]` is the original index of point `k`.
    pub fn subspace(&self, s: ElemSet) -> (FiniteSpace, Vec<usize>) {
        let (spec, map) = self.spec.induced(s);
        (FiniteSpace { spec }, map)
    }

    fn require_open(&self, u: ElemSet) -> Result<()> {
        if self.is_open(u) {
            Ok(())
        } else {
            Err(Error::NotOpen(u.to_string()))
        }
    }
}

/// The lattice of (compact) opens with the point set of each element.
#[derive(Clone, Debug)]
pub struct OpenLattice {
    pub lattice: FiniteLattice,
    pub opens: Vec<ElemSet>,
}

pub fn qcop(x: &FiniteSpace) -> Result<OpenLattice> {
    let opens = x.opens();
    let m = opens.len();
    if m > MAX_ELEMENTS {
        return Err(Error::TooLarge { n: m });
    }
    let poset = FinitePoset::from_relation(m, |i, j| opens[i].is_subset(opens[j]))?;
    let lattice = FiniteLattice::from_poset(poset).expect("opens of a finite space form a lattice");
    Ok(OpenLattice { lattice, opens })
}

/// Points are the join-irreducibles of `l`, ordered as in `l`.
pub fn birkhoff_space(l: &FiniteLattice) -> Result<FiniteSpace> {
    if !is_distributive_lattice(l) {
        return Err(Error::NotDistributive);
    }
    let (spec, _) = l.poset().induced(l.join_irreducibles());
    Ok(FiniteSpace { spec })
}

pub fn closed_points(x: &FiniteSpace) -> ElemSet {
    x.spec.maximal()
}

pub fn inverse_space(x: &FiniteSpace) -> FiniteSpace {
    FiniteSpace {
        spec: x.spec.dual(),
    }
}

/// Smallest patch neighbourhood of each point: the intersection of all
/// basic sets `U ∖ V` (`U`, `V` open) containing it.
pub fn patch_neighbourhoods(x: &FiniteSpace) -> Vec<ElemSet> {
    let opens = x.opens();
    x.points()
        .iter()
        .map(|p| {
            let inside = opens
                .iter()
                .filter(|u| u.contains(p))
                .fold(x.points(), |acc, &u| acc.intersection(u));
            let outside = opens
                .iter()
                .filter(|v| !v.contains(p))
                .fold(ElemSet::EMPTY, |acc, &v| acc.union(v));
            inside.difference(outside)
        })
        .collect()
}

pub fn patch_closure(x: &FiniteSpace, s: ElemSet) -> ElemSet {
    patch_neighbourhoods(x)
        .iter()
        .enumerate()
        .filter(|(_, n)| !n.is_disjoint(s))
        .map(|(p, _)| p)
        .collect()
}

pub fn patch_interior(x: &FiniteSpace, s: ElemSet) -> ElemSet {
    patch_neighbourhoods(x)
        .iter()
        .enumerate()
        .filter(|(_, n)| n.is_subset(s))
        .map(|(p, _)| p)
        .collect()
}

pub fn is_patch_open(x: &FiniteSpace, s: ElemSet) -> bool {
    patch_interior(x, s) == s
}

pub fn closed_points_patch_dense(x: &FiniteSpace) -> bool {
    patch_closure(x, closed_points(x)) == x.points()
}

/// Two sides of an "iff" evaluated independently.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Equivalence {
    pub left: bool,
    pub right: bool,
}

impl Equivalence {
    pub fn holds(self) -> bool {
        self.left == self.right
    }
}

/// Opens join-subfit vs. closed points patch-dense.
pub fn check_prop52(x: &FiniteSpace) -> Result<Equivalence> {
    Ok(Equivalence {
        left: is_join_subfit(qcop(x)?.lattice.semilattice())?,
        right: closed_points_patch_dense(x),
    })
}

/// `U` equals the interior of its closure.
pub fn is_regular_open(x: &FiniteSpace, u: ElemSet) -> Result<bool> {
    x.require_open(u)?;
    Ok(x.interior(x.closure(u)) == u)
}

/// Opens meet-subfit vs. every open regular.
pub fn check_cor53(x: &FiniteSpace) -> Result<Equivalence> {
    let q = qcop(x)?;
    let mut all_regular = true;
    for &u in &q.opens {
        all_regular &= is_regular_open(x, u)?;
    }
    Ok(Equivalence {
        left: is_lattice_meet_subfit(&q.lattice),
        right: all_regular,
    })
}

fn dense_in_subspace(x: &FiniteSpace, u: ElemSet) -> bool {
    closed_points_patch_dense(&x.subspace(u).0)
}

/// If the closed points of the subspaces `U` and `V` are patch-dense in
/// them, the closed points of `U ∪ V` are patch-dense in `U ∪ V`.
pub fn check_union_theorem(x: &FiniteSpace, u: ElemSet, v: ElemSet) -> Result<bool> {
    x.require_open(u)?;
    x.require_open(v)?;
    if !(dense_in_subspace(x, u) && dense_in_subspace(x, v)) {
        return Ok(true);
    }
    Ok(dense_in_subspace(x, u.union(v)))
}

/// For every patch-open `C` of `O2`, `C ∩ O1` is empty or has nonempty
/// patch interior in `O1`.
pub fn check_star_property(x: &FiniteSpace, o1: ElemSet, o2: ElemSet) -> Result<bool> {
    x.require_open(o1)?;
    x.require_open(o2)?;
    if !o1.is_subset(o2) {
        return Err(Error::BadInclusion {
            inner: o1.to_string(),
            outer: o2.to_string(),
        });
    }
    let (s2, map2) = x.subspace(o2);
    let (s1, map1) = x.subspace(o1);
    let to_local = |set: ElemSet, map: &[usize]| -> ElemSet {
        map.iter()
            .enumerate()
            .filter(|&(_, &g)| set.contains(g))
            .map(|(k, _)| k)
            .collect()
    };
    for c_local in s2.points().subsets() {
        if !is_patch_open(&s2, c_local) {
            continue;
        }
        let c = c_local.map_through(&map2);
        let trace = to_local(c.intersection(o1), &map1);
        if !trace.is_empty() && patch_interior(&s1, trace).is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every nonempty closed set contains a closed point.
pub fn closed_sets_contain_closed_points(x: &FiniteSpace) -> bool {
    let cp = closed_points(x);
    x.spec
        .upsets()
        .into_iter()
        .all(|c| c.is_empty() || !c.is_disjoint(cp))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::iso::is_isomorphic;

    fn sierpinski() -> FiniteSpace {
        FiniteSpace::from_specialization(FinitePoset::chain(2))
    }

    fn antichain(n: usize) -> FiniteSpace {
        FiniteSpace::from_specialization(FinitePoset::antichain(n))
    }

    #[test]
    fn small_opens_lattices() {
        let one = qcop(&antichain(1)).unwrap().lattice;
        assert!(is_isomorphic(one.poset(), &FinitePoset::chain(2)));
        let two = qcop(&antichain(2)).unwrap().lattice;
        assert!(is_isomorphic(
            two.poset(),
            FiniteLattice::boolean(2).poset()
        ));
        let s = qcop(&sierpinski()).unwrap();
        assert!(is_isomorphic(s.lattice.poset(), &FinitePoset::chain(3)));
    }

    #[test]
    fn from_opens_validates() {
        let e = ElemSet::EMPTY;
        let s = FiniteSpace::from_opens(2, &[e, ElemSet::singleton(0), ElemSet::full(2)]).unwrap();
        assert_eq!(s, sierpinski());
        assert!(FiniteSpace::from_opens(2, &[e, ElemSet::full(2)]).is_err());
        let bad = [
            e,
            ElemSet::singleton(0),
            ElemSet::singleton(1),
            ElemSet::full(2),
        ];
        assert!(FiniteSpace::from_opens(2, &bad[..3]).is_err());
        assert!(FiniteSpace::from_opens(2, &bad).is_ok());
    }

    #[test]
    fn birkhoff_examples() {
        let b = birkhoff_space(&FiniteLattice::boolean(2)).unwrap();
        assert!(b.specialization().is_antichain() && b.len() == 2);
        let c = birkhoff_space(&FiniteLattice::chain(3)).unwrap();
        assert_eq!(c.specialization().relation_size(), 3);
        assert_eq!(birkhoff_space(&FiniteLattice::chain(2)).unwrap().len(), 1);
        assert!(matches!(
            birkhoff_space(&catalog::m3()),
            Err(Error::NotDistributive)
        ));
    }

    #[test]
    fn closed_points_examples() {
        assert_eq!(closed_points(&antichain(3)), ElemSet::full(3));
        assert_eq!(closed_points(&sierpinski()), ElemSet::singleton(1));
        let v = FiniteSpace::from_specialization(catalog::v_poset());
        assert_eq!(closed_points(&v).len(), 2);
    }

    #[test]
    fn prop52_and_cor53_examples() {
        for x in [antichain(1), antichain(3)] {
            assert_eq!(
                check_prop52(&x).unwrap(),
                Equivalence {
                    left: true,
                    right: true
                }
            );
            assert_eq!(
                check_cor53(&x).unwrap(),
                Equivalence {
                    left: true,
                    right: true
                }
            );
        }
        let s = sierpinski();
        assert_eq!(
            check_prop52(&s).unwrap(),
            Equivalence {
                left: false,
                right: false
            }
        );
        assert_eq!(
            check_cor53(&s).unwrap(),
            Equivalence {
                left: false,
                right: false
            }
        );
    }

    #[test]
    fn regular_opens() {
        let s = sierpinski();
        assert!(is_regular_open(&s, ElemSet::EMPTY).unwrap());
        assert!(is_regular_open(&s, ElemSet::full(2)).unwrap());
        assert!(!is_regular_open(&s, ElemSet::singleton(0)).unwrap());
        assert!(matches!(
            is_regular_open(&s, ElemSet::singleton(1)),
            Err(Error::NotOpen(_))
        ));
        let a = antichain(3);
        assert!(a
            .opens()
            .into_iter()
            .all(|u| is_regular_open(&a, u).unwrap()));
    }

    #[test]
    fn inverse_is_an_involution_and_dualizes_opens() {
        let v = FiniteSpace::from_specialization(catalog::v_poset());
        assert_eq!(inverse_space(&inverse_space(&v)), v);
        let q = qcop(&v).unwrap().lattice;
        let qi = qcop(&inverse_space(&v)).unwrap().lattice;
        assert!(is_isomorphic(qi.poset(), &q.poset().dual()));
    }

    #[test]
    fn union_and_star_examples() {
        let a = antichain(2);
        assert!(check_union_theorem(&a, a.points(), a.points()).unwrap());
        let s = sierpinski();
        assert!(check_union_theorem(&s, s.points(), s.points()).unwrap());
        assert!(check_star_property(&s, s.points(), s.points()).unwrap());
        assert!(check_star_property(&s, ElemSet::EMPTY, s.points()).unwrap());
        assert!(matches!(
            check_star_property(&s, s.points(), ElemSet::singleton(0)),
            Err(Error::BadInclusion { .. })
        ));
    }

    #[test]
    fn patch_topology_of_sierpinski_is_discrete() {
        let s = sierpinski();
        assert_eq!(
            patch_neighbourhoods(&s),
            vec![ElemSet::singleton(0), ElemSet::singleton(1)]
        );
        assert_eq!(patch_closure(&s, ElemSet::EMPTY), ElemSet::EMPTY);
        assert!(!closed_points_patch_dense(&s));
        assert!(closed_sets_contain_closed_points(&s));
    }
}
