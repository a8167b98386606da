use std::collections::HashMap;
use std::fmt;

use crate::automata::{minimize, Dfa, Word};
use crate::error::{Error, Result};

use super::CnfFormula;

/// Which half of the variables a split automaton charges with clause
/// satisfaction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Half {
    /// Variables `x1..x(n/2)`; clause bit `0` demands one of them.
    First,
    /// Variables `x(n/2+1)..xn`; clause bit `1` demands one of them.
    Second,
}

impl Half {
    fn owns(self, var: usize, num_vars: usize) -> bool {
        match self {
            Half::First => var <= num_vars / 2,
            Half::Second => var > num_vars / 2,
        }
    }

    /// The clause bit whose use requires this half to satisfy the clause.
    fn charged_bit(self) -> usize {
        match self {
            Half::First => 0,
            Half::Second => 1,
        }
    }
}

fn binary_alphabet() -> Vec<String> {
    vec!["0".to_string(), "1".to_string()]
}

/// Clauses as bit sets.
type ClauseSet = Vec<u64>;

/// DFA over `{0,1}` for the split language of `formula`.
///
/// It accepts exactly the words `x1..xn b1..bm` in which every clause bit
/// equal to the half's charged bit (`0` for [`Half::First`], `1` for
/// [`Half::Second`]) belongs to a clause already satisfied by the half's own
/// variables.
///
/// States are `(position, satisfied clause set)` pairs discovered breadth
/// first from `(0, ∅)`, plus one sink with the last index. Only reachable pairs
/// are built, so the automaton has at most `(n + m + 1) · 2^(n/2) + 1` states
/// before minimization.
pub fn build_split_dfa(formula: &CnfFormula, half: Half) -> Dfa {
    let n = formula.num_vars();
    let m = formula.num_clauses();
    let words = m.div_ceil(64);

    // satisfies[var - 1][bit] = clauses made true by assigning `bit` to var
    let mut satisfies = vec![[vec![0u64; words], vec![0u64; words]]; n];
    for (c, clause) in formula.clauses().iter().enumerate() {
        for lit in clause {
            satisfies[lit.var - 1][usize::from(lit.positive)][c / 64] |= 1 << (c % 64);
        }
    }
    let has = |set: &ClauseSet, c: usize| set[c / 64] >> (c % 64) & 1 == 1;

    let mut states: Vec<(usize, ClauseSet)> = vec![(0, vec![0; words])];
    let mut index: HashMap<(usize, ClauseSet), usize> = HashMap::from([(states[0].clone(), 0)]);
    // Successor per state and bit; `None` is the sink.
    let mut succ: Vec<[Option<usize>; 2]> = Vec::new();

    let mut head = 0;
    while head < states.len() {
        let (pos, set) = states[head].clone();
        let mut row = [None, None];
        for (bit, slot) in row.iter_mut().enumerate() {
            let next = if pos < n {
                let var = pos + 1;
                let mut set = set.clone();
                if half.owns(var, n) {
                    for (s, extra) in set.iter_mut().zip(&satisfies[pos][bit]) {
                        *s |= extra;
                    }
                }
                Some((pos + 1, set))
            } else if pos < n + m {
                let clause = pos - n;
                (bit != half.charged_bit() || has(&set, clause)).then(|| (pos + 1, set.clone()))
            } else {
                None
            };
            *slot = next.map(|key| match index.get(&key) {
                Some(&id) => id,
                None => {
                    let id = states.len();
                    index.insert(key.clone(), id);
                    states.push(key);
                    id
                }
            });
        }
        succ.push(row);
        head += 1;
    }

    let sink = states.len();
    let mut delta = Vec::with_capacity((sink + 1) * 2);
    for row in &succ {
        delta.extend(row.iter().map(|s| s.unwrap_or(sink)));
    }
    delta.extend([sink, sink]);
    let mut accepting: Vec<bool> = states.iter().map(|(pos, _)| *pos == n + m).collect();
    accepting.push(false);
    Dfa::from_table(sink + 1, binary_alphabet(), delta, accepting, 0)
}

/// Minimized sizes of both split automata next to the size bound
/// `m · n · 2^(n/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StateBound {
    pub first: usize,
    pub second: usize,
    pub bound: u128,
}

impl StateBound {
    /// Both counts are at most `bound + 1`; the extra state is the explicit
    /// sink a total automaton needs.
    pub fn holds(&self) -> bool {
        self.first as u128 <= self.bound + 1 && self.second as u128 <= self.bound + 1
    }
}

/// Minimizes both split automata of `formula` and reports their sizes
/// against `m · n · 2^(n/2)`. Requires `m ≥ 1` and `n ≥ 2`.
pub fn state_bound_check(formula: &CnfFormula) -> Result<StateBound> {
    let n = formula.num_vars();
    let m = formula.num_clauses();
    if m == 0 || n < 2 {
        return Err(Error::Contract(format!(
            "state bound needs at least one clause and two variables (m = {m}, n = {n})"
        )));
    }
    let first = minimize(&build_split_dfa(formula, Half::First)).num_states();
    let second = minimize(&build_split_dfa(formula, Half::Second)).num_states();
    let bound = (m as u128) * (n as u128) * (1u128 << (n / 2));
    Ok(StateBound {
        first,
        second,
        bound,
    })
}

/// A word accepted by both split automata: an assignment followed by clause
/// bits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessWord {
    pub assignment_bits: Vec<bool>,
    pub clause_bits: Vec<bool>,
}

fn bit_string(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

impl WitnessWord {
    pub fn to_word(&self) -> Word {
        Word::from_chars(&format!(
            "{}{}",
            bit_string(&self.assignment_bits),
            bit_string(&self.clause_bits)
        ))
    }
}

/// `<assignment bits>|<clause bits>`
impl fmt::Display for WitnessWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}|{}",
            bit_string(&self.assignment_bits),
            bit_string(&self.clause_bits)
        )
    }
}

/// Extends a satisfying assignment with clause bits: `b_i = 0` when clause
/// `i` is satisfied by the first half of the variables, `1` otherwise.
pub fn assignment_to_witness(formula: &CnfFormula, assignment: &[bool]) -> Result<WitnessWord> {
    let n = formula.num_vars();
    if assignment.len() != n {
        return Err(Error::Contract(format!(
            "assignment has {} values for {n} variables",
            assignment.len()
        )));
    }
    if !formula.satisfied_by(assignment) {
        return Err(Error::Contract(
            "assignment does not satisfy the formula".into(),
        ));
    }
    let clause_bits = formula
        .clauses()
        .iter()
        .map(|clause| {
            !clause
                .iter()
                .any(|lit| Half::First.owns(lit.var, n) && lit.holds(assignment))
        })
        .collect();
    Ok(WitnessWord {
        assignment_bits: assignment.to_vec(),
        clause_bits,
    })
}
