use subfit_core::enumerate::enumerate_lattices;
use subfit_core::envelope::{
    build_envelope, check_prop41, check_prop41_transfer, AdmissibleClosure, JoinEmbedding,
};
use subfit_core::lattice::is_distributive_lattice;
use subfit_core::subfit::is_join_subfit;
use subfit_core::{ElemSet, Error};

fn injections(k: usize, n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if prefix.len() == k {
        out.push(prefix.clone());
        return;
    }
    for j in 0..n {
        if !prefix.contains(&j) {
            prefix.push(j);
            injections(k, n, prefix, out);
            prefix.pop();
        }
    }
}

#[test]
fn transfer_holds_on_every_small_embedding() {
    let lattices = enumerate_lattices(6).unwrap();
    let (mut embeddings, mut transfers, mut proper) = (0, 0, 0);
    for a in lattices.iter().filter(|l| l.len() <= 5) {
        for b in &lattices {
            if b.len() < a.len() {
                continue;
            }
            let mut maps = Vec::new();
            injections(a.len(), b.len(), &mut Vec::new(), &mut maps);
            for map in maps {
                let emb = JoinEmbedding {
                    source: a.semilattice(),
                    target: b.semilattice(),
                    map: &map,
                };
                if emb.validate().is_err() {
                    continue;
                }
                embeddings += 1;
                let r = check_prop41(&emb).unwrap();
                match check_prop41_transfer(&emb) {
                    Ok(same) => {
                        assert!(r.cond_a && r.cond_b);
                        assert!(same, "transfer fails for {map:?}");
                        transfers += 1;
                        if b.len() > a.len() {
                            proper += 1;
                        }
                    }
                    Err(Error::ConditionsNotMet { cond_a, cond_b }) => {
                        assert_eq!((cond_a, cond_b), (r.cond_a, r.cond_b));
                    }
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }
    assert!(
        embeddings > 100 && proper > 0,
        "{embeddings} embeddings, {transfers} transfers, {proper} proper"
    );
}

#[test]
fn eta_is_an_order_embedding_and_e_is_a_closure_system() {
    for l in enumerate_lattices(6).unwrap() {
        let a = l.semilattice();
        let env = build_envelope(a).unwrap();
        for x in 0..a.len() {
            for y in 0..a.len() {
                assert_eq!(a.le(x, y), env.e.le(env.eta[x], env.eta[y]));
                assert_eq!(env.eta[a.join(x, y)], env.e.join(env.eta[x], env.eta[y]));
            }
        }
        let closure = AdmissibleClosure::new(a).unwrap();
        for &u in &env.e_members {
            for &v in &env.e_members {
                assert!(closure.is_closed(u.intersection(v)));
            }
        }
        assert!(is_distributive_lattice(&env.e));
        assert!(is_distributive_lattice(&env.l));
    }
}

#[test]
fn admissible_sets_of_distributive_lattices_are_those_with_a_meet() {
    // In a lattice every nonempty set has a meet; distributivity makes
    // each admissible.
    for l in enumerate_lattices(6)
        .unwrap()
        .iter()
        .filter(|l| is_distributive_lattice(l))
    {
        let closure = AdmissibleClosure::new(l.semilattice()).unwrap();
        assert_eq!(closure.admissible().len(), (1usize << l.len()) - 1);
        for &(s, m) in closure.admissible() {
            assert_eq!(m, l.meet_all(s));
        }
    }
}

#[test]
fn intro_envelope_golden() {
    let intro = subfit_core::catalog::intro_lattice();
    let env = build_envelope(intro.semilattice()).unwrap();
    assert_eq!((env.e.len(), env.l.len()), (12, 12));
    assert!(!is_join_subfit(intro.semilattice()).unwrap());
    assert!(!is_join_subfit(env.l.semilattice()).unwrap());
    assert!(env.prop41.cond_a && env.prop41.cond_b);
    // The top of E is {1}, the bottom is all of A.
    assert_eq!(env.e_members[env.e.top()], ElemSet::singleton(5));
    assert_eq!(env.e_members[env.e.bottom()], ElemSet::full(6));
}

#[test]
fn unbounded_inputs_are_rejected() {
    let p = subfit_core::FinitePoset::from_cover_pairs(3, &[(0, 2), (1, 2)]).unwrap();
    let s = subfit_core::FiniteJoinSemilattice::from_poset(p).unwrap();
    assert!(matches!(build_envelope(&s), Err(Error::MissingBottom)));
}
