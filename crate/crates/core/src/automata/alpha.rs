use crate::lts::{Lts, Transition};

use super::dfa::CHECK_MARK;
use super::Dfa;

/// Embeds a DFA into a deterministic LTS.
///
/// The LTS keeps every DFA transition, adds a fresh state `⊤` with index
/// `num_states()`, and adds `q --✓--> ⊤` for each accepting `q`. Labels are
/// the alphabet followed by `✓`. The initial state is unchanged.
///
/// [`Dfa`] construction already rejects `✓` as a symbol, so this cannot
/// fail.
pub fn alpha_map(dfa: &Dfa) -> Lts {
    let n = dfa.num_states();
    let k = dfa.alphabet().len();
    let top = n;
    let mut labels = dfa.alphabet().to_vec();
    labels.push(CHECK_MARK.to_string());
    let mut transitions = Vec::with_capacity(n * k + dfa.num_accepting());
    for q in 0..n {
        for a in 0..k {
            transitions.push(Transition::new(q, a, dfa.next(q, a)));
        }
        if dfa.is_accepting(q) {
            transitions.push(Transition::new(q, k, top));
        }
    }
    Lts::new(n + 1, labels, transitions, dfa.initial())
        .expect("alpha image of a well-formed DFA is well-formed")
}
