//! Order isomorphism: a backtracking decision procedure and a canonical
//! labelling used to deduplicate enumerations.

use crate::bitset::ElemSet;
use crate::poset::FinitePoset;

fn degree_key(p: &FinitePoset, i: usize) -> (usize, usize) {
    (p.down(i).len(), p.up(i).len())
}

/// An order isomorphism `P -> Q` as `map[i] = image of i`, if one exists.
pub fn find_isomorphism(p: &FinitePoset, q: &FinitePoset) -> Option<Vec<usize>> {
    let n = p.len();
    if n != q.len() || p.relation_size() != q.relation_size() {
        return None;
    }
    let pk: Vec<_> = (0..n).map(|i| degree_key(p, i)).collect();
    let qk: Vec<_> = (0..n).map(|i| degree_key(q, i)).collect();
    {
        let (mut a, mut b) = (pk.clone(), qk.clone());
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return None;
        }
    }
    // Assign in a linear extension so comparable predecessors are placed
    // first and prune early.
    let order = p.linear_extension();
    let mut map = vec![usize::MAX; n];
    let mut used = ElemSet::EMPTY;
    if extend(p, q, &order, &pk, &qk, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    p: &FinitePoset,
    q: &FinitePoset,
    order: &[usize],
    pk: &[(usize, usize)],
    qk: &[(usize, usize)],
    depth: usize,
    map: &mut [usize],
    used: &mut ElemSet,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let i = order[depth];
    for j in 0..q.len() {
        if used.contains(j) || qk[j] != pk[i] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&i2| {
            let j2 = map[i2];
            p.le(i, i2) == q.le(j, j2) && p.le(i2, i) == q.le(j2, j)
        });
        if !consistent {
            continue;
        }
        map[i] = j;
        used.insert(j);
        if extend(p, q, order, pk, qk, depth + 1, map, used) {
            return true;
        }
        used.remove(j);
        map[i] = usize::MAX;
    }
    false
}

pub fn is_isomorphic(p: &FinitePoset, q: &FinitePoset) -> bool {
    find_isomorphism(p, q).is_some()
}

/// A labelling-independent code: equal codes iff isomorphic posets.
///
/// Elements are grouped by `(|↓i|, |↑i|)`; the code is the
/// lexicographically least relabelled relation over all permutations that
/// respect the grouping.
pub fn canonical_code(p: &FinitePoset) -> Vec<u64> {
    let n = p.len();
    let mut elems: Vec<usize> = (0..n).collect();
    elems.sort_by_key(|&i| degree_key(p, i));
    let mut blocks: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for k in 1..=n {
        if k == n || degree_key(p, elems[k]) != degree_key(p, elems[start]) {
            blocks.push((start, k));
            start = k;
        }
    }
    let mut best: Option<Vec<u64>> = None;
    permute_blocks(p, &mut elems, &blocks, 0, 0, &mut best);
    let mut code = best.unwrap_or_default();
    code.push(n as u64);
    code
}

fn permute_blocks(
    p: &FinitePoset,
    perm: &mut Vec<usize>,
    blocks: &[(usize, usize)],
    block: usize,
    pos: usize,
    best: &mut Option<Vec<u64>>,
) {
    if block == blocks.len() {
        let code = p
            .permuted(perm)
            .up_rows()
            .iter()
            .map(|r| r.0)
            .collect::<Vec<_>>();
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    }
    let (_, end) = blocks[block];
    if pos == end {
        permute_blocks(p, perm, blocks, block + 1, end, best);
        return;
    }
    for k in pos..end {
        perm.swap(pos, k);
        permute_blocks(p, perm, blocks, block, pos + 1, best);
        perm.swap(pos, k);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn identity_and_obvious_negatives() {
        let p = catalog::intro_poset();
        assert!(is_isomorphic(&p, &p));
        assert!(!is_isomorphic(
            &FinitePoset::chain(2),
            &FinitePoset::antichain(2)
        ));
        assert!(!is_isomorphic(
            &FinitePoset::chain(2),
            &FinitePoset::chain(3)
        ));
    }

    #[test]
    fn intro_lattice_is_self_dual() {
        // The dual again has two atoms beside a two-element chain.
        let p = catalog::intro_poset();
        let d = p.dual();
        let m = find_isomorphism(&p, &d).expect("search finds the flip");
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(p.le(i, j), d.le(m[i], m[j]));
            }
        }
    }

    #[test]
    fn canonical_code_is_labelling_invariant() {
        let p = catalog::intro_poset();
        let perms: [[usize; 6]; 3] = [[5, 4, 3, 2, 1, 0], [1, 0, 2, 4, 3, 5], [3, 5, 0, 1, 4, 2]];
        for perm in perms {
            assert_eq!(canonical_code(&p.permuted(&perm)), canonical_code(&p));
        }
        assert_ne!(
            canonical_code(&FinitePoset::chain(3)),
            canonical_code(&catalog::v_poset())
        );
    }
}
