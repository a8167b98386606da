use std::collections::HashMap;

use crate::error::{Error, Result};

use super::{Dfa, Word};

/// Searches the product of `dfas` breadth-first from the tuple of initial
/// states and returns a shortest word accepted by all of them.
///
/// Successors are expanded in alphabet order, so among the shortest
/// witnesses the one returned is least in that order. Only reachable
/// product tuples are ever created.
pub fn intersection_nonempty(dfas: &[Dfa]) -> Result<Option<Word>> {
    let Some(first) = dfas.first() else {
        return Err(Error::Malformed("intersection of an empty list".into()));
    };
    Dfa::check_same_alphabet(dfas)?;
    let k = first.alphabet().len();

    let start: Vec<usize> = dfas.iter().map(Dfa::initial).collect();
    let accepts = |tuple: &[usize]| dfas.iter().zip(tuple).all(|(d, &q)| d.is_accepting(q));

    // parent[i] = (index of predecessor tuple, symbol)
    let mut tuples: Vec<Vec<usize>> = vec![start.clone()];
    let mut parent: Vec<(usize, usize)> = vec![(usize::MAX, usize::MAX)];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(start, 0)]);

    let mut head = 0;
    while head < tuples.len() {
        if accepts(&tuples[head]) {
            return Ok(Some(trace(first, &parent, head)));
        }
        for a in 0..k {
            let next: Vec<usize> = dfas
                .iter()
                .zip(&tuples[head])
                .map(|(d, &q)| d.next(q, a))
                .collect();
            if !index.contains_key(&next) {
                index.insert(next.clone(), tuples.len());
                tuples.push(next);
                parent.push((head, a));
            }
        }
        head += 1;
    }
    Ok(None)
}

fn trace(dfa: &Dfa, parent: &[(usize, usize)], mut node: usize) -> Word {
    let mut symbols = Vec::new();
    while node != 0 {
        let (prev, a) = parent[node];
        symbols.push(a);
        node = prev;
    }
    symbols.reverse();
    dfa.decode(&symbols)
}

/// `L(a) ⊆ L(b)`, decided as emptiness of `L(a) ∩ L(complement(b))`.
pub fn language_inclusion(a: &Dfa, b: &Dfa) -> Result<bool> {
    Ok(intersection_nonempty(&[a.clone(), b.complement()])?.is_none())
}
