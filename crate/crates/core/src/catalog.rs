//! Named small structures used throughout tests, the CLI and the demo.

use crate::lattice::FiniteLattice;
use crate::poset::FinitePoset;

pub const INTRO_LABELS: [&str; 6] = ["0", "a", "b", "t", "s", "1"];

/// The six-element lattice `0 < a, b < 1`, `0 < t < s < 1` in which `↓a`
/// and `↓b` are join-subfit but `↓(a ∨ b)` is not.
pub fn intro_poset() -> FinitePoset {
    let (z, a, b, t, s, one) = (0, 1, 2, 3, 4, 5);
    FinitePoset::from_cover_pairs(
        6,
        &[(z, a), (z, t), (t, s), (a, one), (s, one), (z, b), (b, one)],
    )
    .and_then(|p| p.with_labels(INTRO_LABELS.iter().map(|s| s.to_string()).collect()))
    .expect("intro poset is well formed")
}

pub fn intro_lattice() -> FiniteLattice {
    FiniteLattice::from_poset(intro_poset()).expect("intro poset is a lattice")
}

pub fn intro_index(label: &str) -> usize {
    INTRO_LABELS
        .iter()
        .position(|&l| l == label)
        .unwrap_or_else(|| panic!("no intro element named {label}"))
}

/// Diamond with three atoms.
pub fn m3() -> FiniteLattice {
    let p = FinitePoset::from_cover_pairs(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
        .expect("M3 is well formed");
    FiniteLattice::from_poset(p).expect("M3 is a lattice")
}

/// Pentagon `0 < x < y < 1`, `0 < z < 1`.
pub fn n5() -> FiniteLattice {
    let p = FinitePoset::from_cover_pairs(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])
        .expect("N5 is well formed");
    FiniteLattice::from_poset(p).expect("N5 is a lattice")
}

/// One bottom below two maximal points.
pub fn v_poset() -> FinitePoset {
    FinitePoset::from_cover_pairs(3, &[(0, 1), (0, 2)]).expect("V is well formed")
}
