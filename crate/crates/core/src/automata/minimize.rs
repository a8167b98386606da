use std::collections::HashMap;

use super::Dfa;

/// Canonical minimal DFA for `L(dfa)`.
///
/// Unreachable states are dropped and language-equivalent states merged by
/// iterated signature refinement. The result is numbered in breadth-first
/// discovery order from the initial state, following the alphabet order, so
/// automata with equal languages over the same alphabet minimize to equal
/// values.
pub fn minimize(dfa: &Dfa) -> Dfa {
    let k = dfa.alphabet().len();
    let reach = dfa.reachable();
    let mut local = vec![usize::MAX; dfa.num_states()];
    for (i, &q) in reach.iter().enumerate() {
        local[q] = i;
    }
    let succ = |i: usize, a: usize| local[dfa.next(reach[i], a)];

    let mut class: Vec<usize> = Vec::with_capacity(reach.len());
    let mut ids: HashMap<bool, usize> = HashMap::new();
    for &q in &reach {
        let fresh = ids.len();
        class.push(*ids.entry(dfa.is_accepting(q)).or_insert(fresh));
    }
    let mut count = ids.len();

    loop {
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::with_capacity(count * 2);
        let mut next_class = Vec::with_capacity(reach.len());
        for i in 0..reach.len() {
            let mut signature = Vec::with_capacity(k + 1);
            signature.push(class[i]);
            signature.extend((0..k).map(|a| class[succ(i, a)]));
            let fresh = ids.len();
            next_class.push(*ids.entry(signature).or_insert(fresh));
        }
        let refined = ids.len();
        class = next_class;
        if refined == count {
            break;
        }
        count = refined;
    }

    // One representative per class, then renumber breadth-first.
    let mut representative = vec![usize::MAX; count];
    for (i, &c) in class.iter().enumerate() {
        if representative[c] == usize::MAX {
            representative[c] = i;
        }
    }
    let mut canonical = vec![usize::MAX; count];
    let mut order = vec![class[0]];
    canonical[class[0]] = 0;
    let mut head = 0;
    while head < order.len() {
        let c = order[head];
        head += 1;
        for a in 0..k {
            let d = class[succ(representative[c], a)];
            if canonical[d] == usize::MAX {
                canonical[d] = order.len();
                order.push(d);
            }
        }
    }

    let mut delta = Vec::with_capacity(count * k);
    let mut accepting = Vec::with_capacity(count);
    for &c in &order {
        let rep = representative[c];
        delta.extend((0..k).map(|a| canonical[class[succ(rep, a)]]));
        accepting.push(dfa.is_accepting(reach[rep]));
    }
    Dfa::from_table(count, dfa.alphabet().to_vec(), delta, accepting, 0)
}
