//! Join-semilattices and lattices over a [`FinitePoset`], with operation
//! tables precomputed from the order.

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::poset::FinitePoset;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteJoinSemilattice {
    poset: FinitePoset,
    join: Vec<u8>,
    bottom: Option<usize>,
    top: Option<usize>,
}

fn binary_table(poset: &FinitePoset, op: impl Fn(ElemSet) -> Option<usize>) -> Option<Vec<u8>> {
    let n = poset.len();
    let mut table = vec![0u8; n * n];
    for a in 0..n {
        for b in a..n {
            let c = op(ElemSet::singleton(a).with(b))? as u8;
            table[a * n + b] = c;
            table[b * n + a] = c;
        }
    }
    Some(table)
}

impl FiniteJoinSemilattice {
    /// The join-semilattice on `poset`, or `None` if some pair lacks a
    /// least upper bound.
    pub fn from_poset(poset: FinitePoset) -> Option<Self> {
        let join = binary_table(&poset, |s| poset.supremum(s))?;
        let bottom = poset.bottom();
        let top = poset.top();
        Some(FiniteJoinSemilattice {
            poset,
            join,
            bottom,
            top,
        })
    }

    #[inline]
    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.poset.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    #[inline]
    pub fn le(&self, a: usize, b: usize) -> bool {
        self.poset.le(a, b)
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b] as usize
    }

    pub fn top(&self) -> Option<usize> {
        self.top
    }

    pub fn bottom(&self) -> Option<usize> {
        self.bottom
    }

    pub fn require_top(&self) -> Result<usize> {
        self.top.ok_or(Error::MissingTop)
    }

    pub fn require_bottom(&self) -> Result<usize> {
        self.bottom.ok_or(Error::MissingBottom)
    }

    pub fn is_bounded(&self) -> bool {
        self.top.is_some() && self.bottom.is_some()
    }

    /// Join of a set; the empty join is the bottom, when there is one.
    pub fn join_all(&self, s: ElemSet) -> Option<usize> {
        let mut it = s.iter();
        match it.next() {
            None => self.bottom,
            Some(first) => Some(it.fold(first, |acc, x| self.join(acc, x))),
        }
    }

    /// `{ c : a ∨ c = top }`
    pub fn co_annihilator(&self, a: usize, top: usize) -> ElemSet {
        (0..self.len())
            .filter(|&c| self.join(a, c) == top)
            .collect()
    }

    /// The principal downset `↓a` as a join-semilattice in its own right,
    /// with `a` as absorbing top. `map[k]` is the index in `self` of new
    /// element `k`.
    pub fn restrict_to_downset(&self, a: usize) -> (FiniteJoinSemilattice, Vec<usize>) {
        let (poset, map) = self.poset.induced(self.poset.down(a));
        let n = map.len();
        let mut inv = vec![usize::MAX; self.len()];
        for (k, &i) in map.iter().enumerate() {
            inv[i] = k;
        }
        let mut join = vec![0u8; n * n];
        for x in 0..n {
            for y in 0..n {
                join[x * n + y] = inv[self.join(map[x], map[y])] as u8;
            }
        }
        let bottom = poset.bottom();
        let top = poset.top();
        (
            FiniteJoinSemilattice {
                poset,
                join,
                bottom,
                top,
            },
            map,
        )
    }

    /// Checks the tables against lub recomputed from the order.
    pub fn tables_agree_with_order(&self) -> bool {
        (0..self.len()).all(|a| {
            (0..self.len()).all(|b| {
                Some(self.join(a, b)) == self.poset.supremum(ElemSet::singleton(a).with(b))
            })
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLattice {
    semilattice: FiniteJoinSemilattice,
    meet: Vec<u8>,
}

impl FiniteLattice {
    /// The lattice on `poset`, or `None` if some pair lacks a lub or glb.
    /// The empty poset is not a lattice.
    pub fn from_poset(poset: FinitePoset) -> Option<Self> {
        if poset.is_empty() {
            return None;
        }
        let meet = binary_table(&poset, |s| poset.infimum(s))?;
        let semilattice = FiniteJoinSemilattice::from_poset(poset)?;
        Some(FiniteLattice { semilattice, meet })
    }

    pub fn chain(n: usize) -> Self {
        Self::from_poset(FinitePoset::chain(n)).expect("nonempty chains are lattices")
    }

    /// Powerset lattice of a `k`-element set; element `i` is the subset
    /// with bit pattern `i`.
    pub fn boolean(k: usize) -> Self {
        let n = 1usize << k;
        let poset = FinitePoset::from_relation(n, |i, j| i & j == i).expect("subset order");
        Self::from_poset(poset).expect("powersets are lattices")
    }

    #[inline]
    pub fn semilattice(&self) -> &FiniteJoinSemilattice {
        &self.semilattice
    }

    pub fn into_semilattice(self) -> FiniteJoinSemilattice {
        self.semilattice
    }

    #[inline]
    pub fn poset(&self) -> &FinitePoset {
        self.semilattice.poset()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.semilattice.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn le(&self, a: usize, b: usize) -> bool {
        self.semilattice.le(a, b)
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.semilattice.join(a, b)
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b] as usize
    }

    pub fn top(&self) -> usize {
        self.semilattice.top.expect("finite lattices are bounded")
    }

    pub fn bottom(&self) -> usize {
        self.semilattice
            .bottom
            .expect("finite lattices are bounded")
    }

    pub fn meet_all(&self, s: ElemSet) -> usize {
        s.iter().fold(self.top(), |acc, x| self.meet(acc, x))
    }

    pub fn join_all(&self, s: ElemSet) -> usize {
        s.iter().fold(self.bottom(), |acc, x| self.join(acc, x))
    }

    /// Order dual, with join and meet exchanged.
    pub fn dual(&self) -> FiniteLattice {
        let poset = self.poset().dual();
        FiniteLattice {
            semilattice: FiniteJoinSemilattice {
                poset,
                join: self.meet.clone(),
                bottom: self.semilattice.top,
                top: self.semilattice.bottom,
            },
            meet: self.semilattice.join.clone(),
        }
    }

    /// Elements with exactly one lower cover.
    pub fn join_irreducibles(&self) -> ElemSet {
        (0..self.len())
            .filter(|&a| self.poset().lower_covers(a).len() == 1)
            .collect()
    }

    /// Every element has a complement.
    pub fn is_complemented(&self) -> bool {
        let (bot, top) = (self.bottom(), self.top());
        (0..self.len())
            .all(|a| (0..self.len()).any(|b| self.join(a, b) == top && self.meet(a, b) == bot))
    }

    /// Complemented and distributive.
    pub fn is_boolean(&self) -> bool {
        self.is_complemented() && is_distributive_lattice(self)
    }

    pub fn tables_agree_with_order(&self) -> bool {
        let p = self.poset();
        self.semilattice.tables_agree_with_order()
            && (0..self.len()).all(|a| {
                (0..self.len())
                    .all(|b| Some(self.meet(a, b)) == p.infimum(ElemSet::singleton(a).with(b)))
            })
    }

    pub fn absorption_holds(&self) -> bool {
        (0..self.len()).all(|x| {
            (0..self.len())
                .all(|y| self.join(x, self.meet(x, y)) == x && self.meet(x, self.join(x, y)) == x)
        })
    }
}

/// Whenever `c <= a ∨ b`, `c = a' ∨ b'` for some `a' <= a`, `b' <= b`.
pub fn is_distributive_join_semilattice(s: &FiniteJoinSemilattice) -> bool {
    let p = s.poset();
    let n = s.len();
    for a in 0..n {
        for b in a..n {
            let ab = s.join(a, b);
            for c in p.down(ab).iter() {
                // Only a' <= c and b' <= c can join to c.
                let dc = p.down(c);
                let left = p.down(a).intersection(dc);
                let right = p.down(b).intersection(dc);
                let found = left.iter().any(|x| right.iter().any(|y| s.join(x, y) == c));
                if !found {
                    return false;
                }
            }
        }
    }
    true
}

/// `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)` for all triples.
pub fn is_distributive_lattice(l: &FiniteLattice) -> bool {
    let n = l.len();
    (0..n).all(|x| {
        (0..n)
            .all(|y| (0..n).all(|z| l.meet(x, l.join(y, z)) == l.join(l.meet(x, y), l.meet(x, z))))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn antichain_has_no_join() {
        assert!(FiniteJoinSemilattice::from_poset(FinitePoset::antichain(2)).is_none());
        assert!(FiniteLattice::from_poset(FinitePoset::antichain(2)).is_none());
    }

    #[test]
    fn chain_join_is_max() {
        let s = FiniteJoinSemilattice::from_poset(FinitePoset::chain(4)).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(s.join(a, b), a.max(b));
            }
        }
        assert_eq!(s.bottom(), Some(0));
        assert_eq!(s.top(), Some(3));
    }

    #[test]
    fn boolean_square_is_a_lattice() {
        let l = FiniteLattice::boolean(2);
        assert_eq!(l.len(), 4);
        assert_eq!(l.join(1, 2), 3);
        assert_eq!(l.meet(1, 2), 0);
        assert!(l.is_boolean());
    }

    #[test]
    fn intro_lattice_is_a_lattice() {
        let l = catalog::intro_lattice();
        assert!(l.tables_agree_with_order());
        assert!(l.absorption_holds());
    }

    #[test]
    fn distributivity_examples() {
        for k in 0..=3 {
            assert!(is_distributive_lattice(&FiniteLattice::boolean(k)));
        }
        assert!(!is_distributive_lattice(&catalog::m3()));
        assert!(!is_distributive_lattice(&catalog::n5()));
        assert!(!is_distributive_lattice(&catalog::intro_lattice()));
        for n in 1..6 {
            assert!(is_distributive_join_semilattice(
                FiniteLattice::chain(n).semilattice()
            ));
        }
        assert!(!is_distributive_join_semilattice(
            catalog::m3().semilattice()
        ));
        assert!(!is_distributive_join_semilattice(
            catalog::intro_lattice().semilattice()
        ));
    }

    #[test]
    fn dual_swaps_operations() {
        let l = catalog::intro_lattice();
        let d = l.dual();
        assert!(d.tables_agree_with_order());
        assert_eq!(d.top(), l.bottom());
        assert_eq!(d.dual(), l);
    }

    #[test]
    fn join_irreducibles_of_boolean() {
        assert_eq!(
            FiniteLattice::boolean(2).join_irreducibles(),
            [1, 2].into_iter().collect()
        );
        assert_eq!(
            FiniteLattice::chain(3).join_irreducibles(),
            [1, 2].into_iter().collect()
        );
    }

    #[test]
    fn restriction_to_downset() {
        let l = catalog::intro_lattice();
        let s = catalog::intro_index("s");
        let (d, map) = l.semilattice().restrict_to_downset(s);
        assert_eq!(d.len(), 3);
        assert_eq!(map[d.top().unwrap()], s);
        assert!(d.tables_agree_with_order());
    }
}
