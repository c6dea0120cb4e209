//! Enumeration of small posets, lattices and join-semilattices up to
//! isomorphism.
//!
//! Posets are grown one maximal element at a time (every downset of a
//! smaller poset is a candidate strict downset for the new element) and
//! deduplicated by [`canonical_code`]. A bounded lattice is determined up to
//! isomorphism by the poset strictly between its bounds, so lattices of
//! size `n` come from posets of size `n - 2`.

use std::collections::HashSet;

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::iso::canonical_code;
use crate::lattice::{FiniteJoinSemilattice, FiniteLattice};
use crate::poset::FinitePoset;

/// Largest lattice size [`enumerate_lattices`] accepts.
pub const MAX_LATTICE_ENUMERATION: usize = 8;

/// One representative per isomorphism class of posets with exactly `n`
/// elements, in canonical-code order.
pub fn enumerate_posets(n: usize) -> Vec<FinitePoset> {
    let mut level = vec![FinitePoset::antichain(0)];
    for _ in 0..n {
        level = grow(&level);
    }
    level
}

/// `enumerate_posets(k)` for every `k <= max_n`.
pub fn enumerate_posets_up_to(max_n: usize) -> Vec<Vec<FinitePoset>> {
    let mut out = vec![vec![FinitePoset::antichain(0)]];
    for _ in 0..max_n {
        let next = grow(out.last().expect("nonempty"));
        out.push(next);
    }
    out
}

fn grow(level: &[FinitePoset]) -> Vec<FinitePoset> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for p in level {
        let m = p.len();
        for d in p.downsets() {
            let mut up: Vec<ElemSet> = p.up_rows().to_vec();
            for i in d.iter() {
                up[i].insert(m);
            }
            up.push(ElemSet::singleton(m));
            let q = FinitePoset::from_up_rows(up).expect("adding a maximal element keeps a poset");
            let code = canonical_code(&q);
            if seen.insert(code.clone()) {
                out.push((code, q));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.into_iter().map(|(_, q)| q).collect()
}

/// Adjoins a new bottom (index 0) and a new top (last index) to `inner`.
pub fn bounded_extension(inner: &FinitePoset) -> FinitePoset {
    let k = inner.len();
    let top = k + 1;
    let mut up = vec![ElemSet::full(k + 2)];
    for i in 0..k {
        up.push(
            inner
                .up(i)
                .iter()
                .map(|j| j + 1)
                .collect::<ElemSet>()
                .with(top),
        );
    }
    up.push(ElemSet::singleton(top));
    FinitePoset::from_up_rows(up).expect("bounded extension of a poset is a poset")
}

/// Adjoins a new top (last index) to `inner`.
pub fn top_extension(inner: &FinitePoset) -> FinitePoset {
    let k = inner.len();
    let mut up: Vec<ElemSet> = (0..k).map(|i| inner.up(i).with(k)).collect();
    up.push(ElemSet::singleton(k));
    FinitePoset::from_up_rows(up).expect("top extension of a poset is a poset")
}

/// One representative per isomorphism class of lattices with exactly `n`
/// elements.
pub fn lattices_of_size(n: usize) -> Vec<FiniteLattice> {
    match n {
        0 => Vec::new(),
        1 => vec![FiniteLattice::chain(1)],
        _ => enumerate_posets(n - 2)
            .iter()
            .filter_map(|inner| FiniteLattice::from_poset(bounded_extension(inner)))
            .collect(),
    }
}

/// Every lattice with at most `max_n` elements, up to isomorphism, ordered
/// by size.
pub fn enumerate_lattices(max_n: usize) -> Result<Vec<FiniteLattice>> {
    if max_n > MAX_LATTICE_ENUMERATION {
        return Err(Error::Invalid(format!(
            "lattice enumeration is bounded by {MAX_LATTICE_ENUMERATION} elements, got {max_n}"
        )));
    }
    let mut out = Vec::new();
    if max_n >= 1 {
        out.push(FiniteLattice::chain(1));
    }
    if max_n >= 2 {
        for level in enumerate_posets_up_to(max_n - 2) {
            out.extend(
                level
                    .iter()
                    .filter_map(|inner| FiniteLattice::from_poset(bounded_extension(inner))),
            );
        }
    }
    Ok(out)
}

/// Every finite join-semilattice with at most `max_n` elements (with or
/// without a bottom), up to isomorphism, ordered by size.
pub fn enumerate_join_semilattices(max_n: usize) -> Result<Vec<FiniteJoinSemilattice>> {
    if max_n > MAX_LATTICE_ENUMERATION {
        return Err(Error::Invalid(format!(
            "semilattice enumeration is bounded by {MAX_LATTICE_ENUMERATION} elements, got {max_n}"
        )));
    }
    let mut out = Vec::new();
    if max_n >= 1 {
        for level in enumerate_posets_up_to(max_n - 1) {
            out.extend(
                level
                    .iter()
                    .filter_map(|inner| FiniteJoinSemilattice::from_poset(top_extension(inner))),
            );
        }
    }
    Ok(out)
}
