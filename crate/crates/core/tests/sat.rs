mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use simgap::automata::{intersection_nonempty, minimize};
use simgap::pipeline::{sat_via_simulation, NeiPath, SatVerdict, DEFAULT_GADGET_VAR_CAP};
use simgap::random::random_cnf;
use simgap::sat::{
    assignment_to_witness, brute_force_sat, build_split_dfa, parse_dimacs, state_bound_check,
    CnfFormula, Half, Literal,
};
use simgap::Error;

use common::*;

fn formula(seed: u64, n: usize, m: usize) -> CnfFormula {
    random_cnf(&mut ChaCha8Rng::seed_from_u64(seed), n, m, 3)
}

#[test]
fn split_languages_follow_the_rule() {
    for seed in 0..40 {
        let f = formula(seed, 2 * (1 + seed as usize % 3), 1 + seed as usize % 4);
        for (half, first) in [(Half::First, true), (Half::Second, false)] {
            let dfa = build_split_dfa(&f, half);
            let len = f.num_vars() + f.num_clauses();
            for w in all_words(dfa.alphabet(), len) {
                assert_eq!(
                    dfa.run_word(&w).unwrap(),
                    split_member(&f, first, &bools(&w)),
                    "{w}"
                );
            }
        }
    }
}

#[test]
fn intersection_nonempty_iff_satisfiable() {
    for seed in 0..150 {
        let f = formula(seed, 2 + 2 * (seed as usize % 4), 1 + seed as usize % 6);
        let first = build_split_dfa(&f, Half::First);
        let second = build_split_dfa(&f, Half::Second);
        let witness = intersection_nonempty(&[first, second]).unwrap();
        assert_eq!(witness.is_some(), brute_force_sat(&f).unwrap().is_some());
        if let Some(w) = witness {
            let x: Vec<bool> = bools(&w)[..f.num_vars()].to_vec();
            assert!(f.satisfied_by(&x));
        }
    }
}

#[test]
fn example_is_satisfiable_on_every_path() {
    for path in [
        NeiPath::Product,
        NeiPath::Similarity,
        NeiPath::SimEquivalence,
    ] {
        let out = sat_via_simulation(&example_formula(), path, DEFAULT_GADGET_VAR_CAP).unwrap();
        assert_eq!(out.verdict, SatVerdict::Sat);
        assert!(example_formula().satisfied_by(out.assignment.as_ref().unwrap()));
    }
}

#[test]
fn contradiction_is_unsat() {
    let f = CnfFormula::new(
        1,
        vec![vec![Literal::new(1, true)], vec![Literal::new(1, false)]],
    )
    .unwrap();
    assert!(f.was_padded());
    let out = sat_via_simulation(&f, NeiPath::Similarity, DEFAULT_GADGET_VAR_CAP).unwrap();
    assert_eq!(out.verdict, SatVerdict::Unsat);
    assert!(out.assignment.is_none() && out.witness.is_none());
}

#[test]
fn canonical_witness_is_accepted_by_both_halves() {
    for seed in 0..60 {
        let f = formula(seed, 6, 4);
        if let Some(x) = brute_force_sat(&f).unwrap() {
            let w = assignment_to_witness(&f, &x).unwrap().to_word();
            assert!(build_split_dfa(&f, Half::First).run_word(&w).unwrap());
            assert!(build_split_dfa(&f, Half::Second).run_word(&w).unwrap());
        }
    }
}

#[test]
fn example_witness_display() {
    let w = assignment_to_witness(&example_formula(), &[true, true]).unwrap();
    // x1 settles the first clause, only x2 settles the second.
    assert_eq!(w.to_string(), "11|01");
    assert!(assignment_to_witness(&example_formula(), &[true, false]).is_err());
}

#[test]
fn state_bound_for_six_variables() {
    for seed in 0..20 {
        let b = state_bound_check(&formula(seed, 6, 3)).unwrap();
        assert_eq!(b.bound, 144);
        assert!(b.first <= 145 && b.second <= 145, "{b:?}");
    }
}

#[test]
fn tautological_clauses_shrink_the_automata() {
    let plain = parse_dimacs("p cnf 4 2\n1 3 0\n-2 4 0\n").unwrap();
    let taut = parse_dimacs("p cnf 4 2\n1 -1 0\n3 -3 0\n").unwrap();
    for half in [Half::First, Half::Second] {
        let a = minimize(&build_split_dfa(&plain, half)).num_states();
        let b = minimize(&build_split_dfa(&taut, half)).num_states();
        assert!(b < a, "{half:?}: {b} vs {a}");
    }
}

#[test]
fn variable_cap_is_a_scale_error() {
    let f = formula(1, 8, 2);
    let err = sat_via_simulation(&f, NeiPath::Similarity, 6).unwrap_err();
    assert!(matches!(err, Error::ScaleCap { .. }));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dimacs_round_trip(seed in any::<u64>(), half_n in 1usize..5, m in 0usize..6) {
        let f = formula(seed, 2 * half_n, m);
        prop_assert_eq!(parse_dimacs(&f.to_dimacs()).unwrap(), f);
    }

    #[test]
    fn sat_paths_match_brute_force(seed in any::<u64>(), half_n in 1usize..4, m in 1usize..5) {
        let f = formula(seed, 2 * half_n, m);
        let expected = brute_force_sat(&f).unwrap().is_some();
        for path in [NeiPath::Product, NeiPath::Similarity, NeiPath::SimEquivalence] {
            let out = sat_via_simulation(&f, path, DEFAULT_GADGET_VAR_CAP).unwrap();
            prop_assert_eq!(out.verdict == SatVerdict::Sat, expected);
            if let Some(x) = &out.assignment {
                prop_assert!(f.satisfied_by(x));
            }
        }
    }
}
