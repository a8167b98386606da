//! Seeded generators for automata, transition systems and formulas.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::automata::Dfa;
use crate::lts::{Lts, Transition};
use crate::sat::{CnfFormula, Literal};

/// `"a"`, `"b"`, ... for `k ≤ 26` labels.
pub fn letters(k: usize) -> Vec<String> {
    assert!(k <= 26);
    (b'a'..b'a' + k as u8)
        .map(|c| (c as char).to_string())
        .collect()
}

/// Uniform transition table over `letters(k)`; each state accepts with
/// probability `accept_prob`.
pub fn random_dfa<R: Rng>(rng: &mut R, n: usize, k: usize, accept_prob: f64) -> Dfa {
    let delta = (0..n)
        .map(|_| (0..k).map(|_| rng.gen_range(0..n)).collect())
        .collect();
    let accepting: Vec<usize> = (0..n).filter(|_| rng.gen_bool(accept_prob)).collect();
    Dfa::new(letters(k), delta, accepting, 0).expect("generated table is total")
}

/// A pair over a shared alphabet. A third of the pairs are independent, a
/// third have `b` accepting a superset of `a`'s states and a third a
/// subset, so both inclusion outcomes are common.
pub fn random_dfa_pair<R: Rng>(rng: &mut R, max_states: usize, max_symbols: usize) -> (Dfa, Dfa) {
    let k = rng.gen_range(1..=max_symbols);
    let n = rng.gen_range(1..=max_states);
    let p = rng.gen_range(0.1..0.7);
    let a = random_dfa(rng, n, k, p);
    let b = match rng.gen_range(0..3) {
        0 => {
            let n2 = rng.gen_range(1..=max_states);
            let p = rng.gen_range(0.1..0.7);
            random_dfa(rng, n2, k, p)
        }
        variant => {
            let grow = variant == 1;
            let accepting: Vec<usize> = (0..n)
                .filter(|&q| {
                    let flip = rng.gen_bool(0.25);
                    if grow {
                        a.is_accepting(q) || flip
                    } else {
                        a.is_accepting(q) && !flip
                    }
                })
                .collect();
            let delta = (0..n)
                .map(|q| (0..k).map(|s| a.next(q, s)).collect())
                .collect();
            Dfa::new(a.alphabet().to_vec(), delta, accepting, 0).expect("copied table")
        }
    };
    (a, b)
}

/// `num_transitions` triples drawn uniformly (duplicates collapse) over
/// `letters(k)`. All `k` labels are declared.
pub fn random_lts<R: Rng>(rng: &mut R, n: usize, k: usize, num_transitions: usize) -> Lts {
    let transitions = (0..num_transitions)
        .map(|_| {
            Transition::new(
                rng.gen_range(0..n),
                rng.gen_range(0..k),
                rng.gen_range(0..n),
            )
        })
        .collect();
    Lts::new(n, letters(k), transitions, 0).expect("generated triples are in range")
}

/// Each `(state, label)` pair gets one uniform successor with probability
/// `edge_prob`.
pub fn random_deterministic_lts<R: Rng>(rng: &mut R, n: usize, k: usize, edge_prob: f64) -> Lts {
    let mut transitions = Vec::new();
    for s in 0..n {
        for a in 0..k {
            if rng.gen_bool(edge_prob) {
                transitions.push(Transition::new(s, a, rng.gen_range(0..n)));
            }
        }
    }
    Lts::new(n, letters(k), transitions, 0).expect("generated triples are in range")
}

/// Every state draws `out_degree` transitions, each with a uniform label
/// among `letters(k)` and a uniform target.
pub fn random_budget_lts<R: Rng>(rng: &mut R, n: usize, k: usize, out_degree: usize) -> Lts {
    let mut transitions = Vec::with_capacity(n * out_degree);
    for s in 0..n {
        for _ in 0..out_degree {
            transitions.push(Transition::new(s, rng.gen_range(0..k), rng.gen_range(0..n)));
        }
    }
    Lts::new(n, letters(k), transitions, 0).expect("generated triples are in range")
}

/// `num_clauses` clauses of 1 to `max_width` distinct variables with
/// random polarities.
pub fn random_cnf<R: Rng>(
    rng: &mut R,
    num_vars: usize,
    num_clauses: usize,
    max_width: usize,
) -> CnfFormula {
    let vars: Vec<usize> = (1..=num_vars).collect();
    let clauses = (0..num_clauses)
        .map(|_| {
            let width = rng.gen_range(1..=max_width.min(num_vars));
            vars.choose_multiple(rng, width)
                .map(|&v| Literal::new(v, rng.gen_bool(0.5)))
                .collect()
        })
        .collect();
    CnfFormula::new(num_vars, clauses).expect("variables drawn from range")
}
