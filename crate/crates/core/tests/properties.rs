use proptest::prelude::*;
use proptest::sample::select;

use subfit_core::duality::{
    birkhoff_space, check_cor53, check_prop52, inverse_space, patch_closure, qcop, FiniteSpace,
};
use subfit_core::enumerate::enumerate_lattices;
use subfit_core::io::{poset_from_json, poset_to_json};
use subfit_core::iso::{canonical_code, find_isomorphism};
use subfit_core::subfit::{
    indistinguishable_pair, is_join_subfit, is_join_subfit_directed, join_subfit_witness,
    subfit_elements,
};
use subfit_core::{is_distributive_lattice, is_isomorphic, ElemSet, FiniteLattice, FinitePoset};

/// A random poset: a random relation oriented along index order, closed
/// transitively by the constructor.
fn poset(max_n: usize) -> impl Strategy<Value = FinitePoset> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let covers: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| bits[i * n + j])
                .collect();
            FinitePoset::from_cover_pairs(n, &covers).expect("index-ordered relation is acyclic")
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn lattice() -> impl Strategy<Value = FiniteLattice> {
    select(enumerate_lattices(7).unwrap())
}

proptest! {
    #[test]
    fn dual_is_an_involution(p in poset(8)) {
        prop_assert_eq!(p.dual().dual(), p.clone());
        prop_assert_eq!(p.dual().minimal(), p.maximal());
    }

    #[test]
    fn downsets_are_closed_under_union_and_intersection(p in poset(7)) {
        let ds = p.downsets();
        for &a in &ds {
            for &b in &ds {
                prop_assert!(ds.contains(&a.union(b)) && ds.contains(&a.intersection(b)));
            }
        }
        prop_assert_eq!(p.upsets().len(), ds.len());
    }

    #[test]
    fn relabelling_preserves_the_iso_class(
        (p, perm) in poset(7).prop_flat_map(|p| { let n = p.len(); (Just(p), permutation(n)) })
    ) {
        let q = p.permuted(&perm);
        prop_assert_eq!(canonical_code(&p), canonical_code(&q));
        let m = find_isomorphism(&p, &q).expect("relabelled copy is isomorphic");
        for i in 0..p.len() {
            for j in 0..p.len() {
                prop_assert_eq!(p.le(i, j), q.le(m[i], m[j]));
            }
        }
    }

    #[test]
    fn json_round_trip(p in poset(8)) {
        let text = poset_to_json(&p);
        let back = poset_from_json(&text).unwrap();
        prop_assert_eq!(poset_to_json(&back), text);
        prop_assert_eq!(back, p);
    }

    #[test]
    fn subfitness_forms_agree(l in lattice()) {
        let s = l.semilattice();
        let sep = is_join_subfit(s).unwrap();
        prop_assert_eq!(sep, is_join_subfit_directed(s).unwrap());
        prop_assert_eq!(sep, indistinguishable_pair(s).unwrap().is_none());
        for u in 0..l.len() {
            for v in 0..l.len() {
                if l.le(u, v) {
                    continue;
                }
                if let Some(w) = join_subfit_witness(s, u, v).unwrap() {
                    prop_assert_eq!(l.join(u, w.c), l.top());
                    prop_assert_ne!(l.join(v, w.c), l.top());
                } else {
                    prop_assert!(!sep);
                }
            }
        }
    }

    #[test]
    fn subfit_elements_of_distributive_lattices_form_an_ideal(l in lattice()) {
        let r = subfit_elements(l.semilattice());
        prop_assert!(r.subfit_set.contains(l.bottom()));
        prop_assert_eq!(r.subfit_set.contains(l.top()), is_join_subfit(l.semilattice()).unwrap());
        if is_distributive_lattice(&l) {
            prop_assert!(r.is_downset && r.is_ideal);
        }
    }

    #[test]
    fn space_theorems_hold(p in poset(6)) {
        let x = FiniteSpace::from_specialization(p);
        prop_assert!(check_prop52(&x).unwrap().holds());
        prop_assert!(check_cor53(&x).unwrap().holds());
        let q = qcop(&x).unwrap();
        prop_assert!(is_distributive_lattice(&q.lattice));
        let back = birkhoff_space(&q.lattice).unwrap();
        prop_assert!(is_isomorphic(back.specialization(), x.specialization()));
        prop_assert_eq!(inverse_space(&inverse_space(&x)), x.clone());
        for s in x.points().subsets() {
            prop_assert_eq!(patch_closure(&x, s), s);
        }
        prop_assert_eq!(patch_closure(&x, ElemSet::EMPTY), ElemSet::EMPTY);
    }

    #[test]
    fn opens_determine_the_space(p in poset(6)) {
        let x = FiniteSpace::from_specialization(p);
        prop_assert_eq!(FiniteSpace::from_opens(x.len(), &x.opens()).unwrap(), x);
    }
}
