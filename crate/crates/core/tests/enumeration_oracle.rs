//! The enumeration is checked against labelled brute force: every relation
//! on `n` labelled points with each pair in one of three states, kept when
//! transitive, then sorted into classes with the isomorphism test.

use subfit_core::enumerate::{enumerate_posets, lattices_of_size};
use subfit_core::{is_isomorphic, FiniteLattice, FinitePoset};

fn labelled_posets(n: usize) -> Vec<FinitePoset> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    let total = 3usize.pow(pairs.len() as u32);
    for code in 0..total {
        let mut rel = vec![vec![false; n]; n];
        let mut c = code;
        for &(i, j) in &pairs {
            match c % 3 {
                1 => rel[i][j] = true,
                2 => rel[j][i] = true,
                _ => {}
            }
            c /= 3;
        }
        let transitive = (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|d| !(rel[a][b] && rel[b][d]) || rel[a][d] || a == d))
        });
        if transitive {
            out.push(
                FinitePoset::from_relation(n, |a, b| a == b || rel[a][b])
                    .expect("transitive and acyclic"),
            );
        }
    }
    out
}

#[test]
fn labelled_brute_force_matches_enumeration() {
    // Labelled poset counts on 0..=5 points.
    let labelled_counts = [1, 1, 3, 19, 219, 4231];
    for (n, &count) in labelled_counts.iter().enumerate() {
        let labelled = labelled_posets(n);
        assert_eq!(labelled.len(), count, "labelled posets on {n} points");
        let reps = enumerate_posets(n);
        let mut hits = vec![0usize; reps.len()];
        for p in &labelled {
            let matches: Vec<usize> = (0..reps.len())
                .filter(|&k| is_isomorphic(p, &reps[k]))
                .collect();
            assert_eq!(
                matches.len(),
                1,
                "each labelled poset has exactly one representative"
            );
            hits[matches[0]] += 1;
        }
        assert!(hits.iter().all(|&h| h > 0), "every representative occurs");
        for i in 0..reps.len() {
            for j in i + 1..reps.len() {
                assert!(!is_isomorphic(&reps[i], &reps[j]));
            }
        }
    }
}

#[test]
fn lattice_counts_through_eight() {
    let counts: Vec<usize> = (1..=8).map(|n| lattices_of_size(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 1, 2, 5, 15, 53, 222]);
}

#[test]
fn lattices_are_lattices_and_distinct() {
    for n in 1..=6 {
        let ls = lattices_of_size(n);
        for l in &ls {
            assert_eq!(l.len(), n);
            assert!(l.tables_agree_with_order() && l.absorption_holds());
        }
        for i in 0..ls.len() {
            for j in i + 1..ls.len() {
                assert!(!is_isomorphic(ls[i].poset(), ls[j].poset()));
            }
        }
    }
}

#[test]
fn boolean_lattices_are_found() {
    let eight = lattices_of_size(8);
    let cube = FiniteLattice::boolean(3);
    assert_eq!(
        eight
            .iter()
            .filter(|l| is_isomorphic(l.poset(), cube.poset()))
            .count(),
        1
    );
}
