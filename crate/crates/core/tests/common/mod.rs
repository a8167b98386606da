//! Independent reference implementations used by the integration tests.
#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use simgap::format::parse_dfa;
use simgap::sat::CnfFormula;
use simgap::{Dfa, Lts, Word};

pub fn example_first() -> Dfa {
    parse_dfa(include_str!("../data/example_first.dfa")).unwrap()
}

pub fn example_second() -> Dfa {
    parse_dfa(include_str!("../data/example_second.dfa")).unwrap()
}

pub fn example_formula() -> CnfFormula {
    simgap::sat::parse_dimacs(include_str!("../data/example.cnf")).unwrap()
}

/// Greatest simulation by plain fixpoint iteration over a pair set.
pub fn similarity_oracle(lts: &Lts) -> HashSet<(usize, usize)> {
    let n = lts.num_states();
    let mut rel: HashSet<(usize, usize)> =
        (0..n).flat_map(|s| (0..n).map(move |t| (s, t))).collect();
    loop {
        let mut drop = Vec::new();
        for &(s, t) in &rel {
            let ok = lts.transitions().iter().filter(|x| x.source == s).all(|x| {
                lts.transitions().iter().any(|y| {
                    y.source == t && y.label == x.label && rel.contains(&(x.target, y.target))
                })
            });
            if !ok {
                drop.push((s, t));
            }
        }
        if drop.is_empty() {
            return rel;
        }
        for p in drop {
            rel.remove(&p);
        }
    }
}

/// Whether `L(a) ⊆ L(b)` by searching the pair graph for a state that `a`
/// accepts and `b` rejects. Both automata share one alphabet.
pub fn inclusion_oracle(a: &Dfa, b: &Dfa) -> bool {
    let k = a.alphabet().len();
    let start = (a.initial(), b.initial());
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some((p, q)) = queue.pop_front() {
        if a.is_accepting(p) && !b.is_accepting(q) {
            return false;
        }
        for c in 0..k {
            let next = (a.next(p, c), b.next(q, c));
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    true
}

/// Whether `L(a) ∩ L(b)` is non-empty, by pair-graph search.
pub fn intersection_oracle(a: &Dfa, b: &Dfa) -> bool {
    !inclusion_oracle(a, &b.complement())
}

/// All words over `alphabet` of length at most `max_len`.
pub fn all_words(alphabet: &[String], max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Vec::<String>::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for c in alphabet {
                let mut w = w.clone();
                w.push(c.clone());
                next.push(w);
            }
        }
        out.extend(next.iter().cloned().map(Word::new));
        layer = next;
    }
    out
}

/// Direct membership rule of the split language: `x1..xn b1..bm` where each
/// clause with bit `charged` must be satisfied by the half's variables.
pub fn split_member(f: &CnfFormula, first: bool, word: &[bool]) -> bool {
    let n = f.num_vars();
    let m = f.num_clauses();
    if word.len() != n + m {
        return false;
    }
    let (x, b) = word.split_at(n);
    let charged = !first;
    f.clauses().iter().zip(b).all(|(clause, &bit)| {
        bit != charged
            || clause.iter().any(|lit| {
                let mine = if first {
                    lit.var <= n / 2
                } else {
                    lit.var > n / 2
                };
                mine && x[lit.var - 1] == lit.positive
            })
    })
}

pub fn bools(word: &Word) -> Vec<bool> {
    word.iter().map(|s| s == "1").collect()
}

/// Every relation on `n` states, checked for the simulation property; the
/// union of those that pass.
pub fn union_of_all_simulations(lts: &Lts) -> HashSet<(usize, usize)> {
    let n = lts.num_states();
    let cells = n * n;
    let mut union = HashSet::new();
    for mask in 0u64..(1u64 << cells) {
        let has = |s: usize, t: usize| mask >> (s * n + t) & 1 == 1;
        let is_sim = (0..n).all(|s| {
            (0..n).all(|t| {
                !has(s, t)
                    || lts.transitions().iter().filter(|x| x.source == s).all(|x| {
                        lts.transitions()
                            .iter()
                            .any(|y| y.source == t && y.label == x.label && has(x.target, y.target))
                    })
            })
        });
        if is_sim {
            for s in 0..n {
                for t in 0..n {
                    if has(s, t) {
                        union.insert((s, t));
                    }
                }
            }
        }
    }
    union
}
