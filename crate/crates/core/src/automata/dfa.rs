use std::collections::BTreeSet;

use crate::error::{Error, Result};

use super::Word;

/// Label reserved for the acceptance marker added by [`super::alpha_map`].
pub const CHECK_MARK: &str = "✓";

/// Default limit on the number of words [`Dfa::enumerate_language`] may
/// generate.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;

/// A deterministic finite automaton with a total transition function.
///
/// States are `0..num_states()`. `delta` is stored row-major, one row of
/// `alphabet.len()` targets per state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Vec<String>,
    delta: Vec<usize>,
    accepting: Vec<bool>,
    initial: usize,
}

pub(crate) fn validate_alphabet(alphabet: &[String]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for symbol in alphabet {
        if symbol == CHECK_MARK {
            return Err(Error::ReservedSymbol(symbol.clone()));
        }
        if symbol.is_empty() || symbol.chars().any(char::is_whitespace) || symbol.contains('"') {
            return Err(Error::Malformed(format!("invalid symbol token `{symbol}`")));
        }
        if !seen.insert(symbol.as_str()) {
            return Err(Error::Malformed(format!("duplicate symbol `{symbol}`")));
        }
    }
    Ok(())
}

impl Dfa {
    /// Builds a DFA from a complete transition table, `delta[state][symbol]`.
    pub fn new(
        alphabet: Vec<String>,
        delta: Vec<Vec<usize>>,
        accepting: impl IntoIterator<Item = usize>,
        initial: usize,
    ) -> Result<Self> {
        validate_alphabet(&alphabet)?;
        let n = delta.len();
        let k = alphabet.len();
        let mut flat = Vec::with_capacity(n * k);
        for (state, row) in delta.iter().enumerate() {
            if row.len() != k {
                return Err(Error::Malformed(format!(
                    "state {state} has {} transitions, expected {k}",
                    row.len()
                )));
            }
            for &target in row {
                if target >= n {
                    return Err(Error::UnknownState {
                        state: target,
                        count: n,
                    });
                }
            }
            flat.extend_from_slice(row);
        }
        Self::from_parts(n, alphabet, flat, accepting, initial)
    }

    /// Builds a DFA from a possibly partial list of `(source, symbol index,
    /// target)` transitions over `num_states` states.
    ///
    /// When some `(state, symbol)` cell has no entry, one extra non-accepting
    /// sink state (index `num_states`) is appended and absorbs all missing
    /// cells. Conflicting duplicate entries are rejected.
    pub fn from_partial(
        num_states: usize,
        alphabet: Vec<String>,
        transitions: impl IntoIterator<Item = (usize, usize, usize)>,
        accepting: impl IntoIterator<Item = usize>,
        initial: usize,
    ) -> Result<Self> {
        validate_alphabet(&alphabet)?;
        if num_states == 0 {
            return Err(Error::Malformed("automaton has no states".into()));
        }
        let k = alphabet.len();
        let mut table: Vec<Option<usize>> = vec![None; num_states * k];
        for (source, symbol, target) in transitions {
            for state in [source, target] {
                if state >= num_states {
                    return Err(Error::UnknownState {
                        state,
                        count: num_states,
                    });
                }
            }
            if symbol >= k {
                return Err(Error::Malformed(format!(
                    "symbol index {symbol} out of range"
                )));
            }
            let cell = &mut table[source * k + symbol];
            match *cell {
                Some(existing) if existing != target => {
                    return Err(Error::Malformed(format!(
                        "state {source} has two `{}` transitions ({existing} and {target})",
                        alphabet[symbol]
                    )))
                }
                _ => *cell = Some(target),
            }
        }
        let needs_sink = table.iter().any(Option::is_none);
        let sink = num_states;
        let mut delta: Vec<usize> = table.into_iter().map(|c| c.unwrap_or(sink)).collect();
        if needs_sink {
            delta.extend(std::iter::repeat_n(sink, k));
        }
        let n = num_states + usize::from(needs_sink);
        Self::from_parts(n, alphabet, delta, accepting, initial)
    }

    fn from_parts(
        n: usize,
        alphabet: Vec<String>,
        delta: Vec<usize>,
        accepting: impl IntoIterator<Item = usize>,
        initial: usize,
    ) -> Result<Self> {
        let mut flags = vec![false; n];
        for state in accepting {
            if state >= n {
                return Err(Error::UnknownState { state, count: n });
            }
            flags[state] = true;
        }
        if initial >= n {
            return Err(Error::UnknownState {
                state: initial,
                count: n,
            });
        }
        Ok(Dfa {
            alphabet,
            delta,
            accepting: flags,
            initial,
        })
    }

    /// Unchecked constructor for tables built inside the crate.
    pub(crate) fn from_table(
        num_states: usize,
        alphabet: Vec<String>,
        delta: Vec<usize>,
        accepting: Vec<bool>,
        initial: usize,
    ) -> Self {
        debug_assert_eq!(delta.len(), num_states * alphabet.len());
        debug_assert_eq!(accepting.len(), num_states);
        debug_assert!(initial < num_states);
        Dfa {
            alphabet,
            delta,
            accepting,
            initial,
        }
    }

    /// One-state automaton accepting every word over `alphabet`.
    pub fn universal(alphabet: Vec<String>) -> Result<Self> {
        validate_alphabet(&alphabet)?;
        let k = alphabet.len();
        Ok(Self::from_table(1, alphabet, vec![0; k], vec![true], 0))
    }

    /// One-state automaton accepting nothing.
    pub fn empty_language(alphabet: Vec<String>) -> Result<Self> {
        Ok(Self::universal(alphabet)?.complement())
    }

    pub fn num_states(&self) -> usize {
        self.accepting.len()
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn symbol_index(&self, symbol: &str) -> Option<usize> {
        self.alphabet.iter().position(|s| s == symbol)
    }

    /// Successor of `state` on the symbol with index `symbol`.
    #[inline]
    pub fn next(&self, state: usize, symbol: usize) -> usize {
        self.delta[state * self.alphabet.len() + symbol]
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting[state]
    }

    pub fn accepting_states(&self) -> impl Iterator<Item = usize> + '_ {
        self.accepting
            .iter()
            .enumerate()
            .filter_map(|(i, &acc)| acc.then_some(i))
    }

    pub fn num_accepting(&self) -> usize {
        self.accepting.iter().filter(|&&a| a).count()
    }

    /// Maps every symbol of `word` to its index, failing on the first
    /// symbol outside the alphabet.
    pub fn encode(&self, word: &Word) -> Result<Vec<usize>> {
        word.iter()
            .enumerate()
            .map(|(position, symbol)| {
                self.symbol_index(symbol)
                    .ok_or_else(|| Error::UnknownSymbol {
                        symbol: symbol.to_string(),
                        position,
                    })
            })
            .collect()
    }

    /// Generalised transition function from `state` over encoded symbols.
    pub fn run_from(&self, state: usize, symbols: &[usize]) -> usize {
        symbols.iter().fold(state, |q, &a| self.next(q, a))
    }

    /// Whether the automaton accepts `word`.
    pub fn run_word(&self, word: &Word) -> Result<bool> {
        let symbols = self.encode(word)?;
        Ok(self.accepting[self.run_from(self.initial, &symbols)])
    }

    /// Swaps accepting and non-accepting states.
    pub fn complement(&self) -> Dfa {
        Dfa {
            alphabet: self.alphabet.clone(),
            delta: self.delta.clone(),
            accepting: self.accepting.iter().map(|a| !a).collect(),
            initial: self.initial,
        }
    }

    /// States reachable from the initial state, in breadth-first order.
    pub fn reachable(&self) -> Vec<usize> {
        let mut seen = vec![false; self.num_states()];
        let mut order = vec![self.initial];
        seen[self.initial] = true;
        let mut head = 0;
        while head < order.len() {
            let q = order[head];
            head += 1;
            for a in 0..self.alphabet.len() {
                let r = self.next(q, a);
                if !seen[r] {
                    seen[r] = true;
                    order.push(r);
                }
            }
        }
        order
    }

    /// All accepted words of length at most `max_len`, generated
    /// exhaustively. Uses [`DEFAULT_ENUMERATION_CAP`].
    pub fn enumerate_language(&self, max_len: usize) -> Result<BTreeSet<Word>> {
        self.enumerate_language_capped(max_len, DEFAULT_ENUMERATION_CAP)
    }

    /// Like [`Dfa::enumerate_language`] but refuses when more than `cap`
    /// words would be generated.
    pub fn enumerate_language_capped(&self, max_len: usize, cap: u64) -> Result<BTreeSet<Word>> {
        let k = self.alphabet.len() as u128;
        let mut total: u128 = 0;
        let mut layer: u128 = 1;
        for _ in 0..=max_len {
            total += layer;
            if total > cap as u128 {
                return Err(Error::ScaleCap {
                    what: "enumerated words",
                    actual: total,
                    cap: cap as u128,
                });
            }
            layer = layer.saturating_mul(k);
            if layer == 0 {
                break;
            }
        }
        let mut words = BTreeSet::new();
        let mut frontier: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), self.initial)];
        for len in 0..=max_len {
            for (word, state) in &frontier {
                if self.accepting[*state] {
                    words.insert(self.decode(word));
                }
            }
            if len == max_len {
                break;
            }
            frontier = frontier
                .iter()
                .flat_map(|(word, state)| {
                    (0..self.alphabet.len()).map(move |a| {
                        let mut longer = word.clone();
                        longer.push(a);
                        (longer, self.next(*state, a))
                    })
                })
                .collect();
        }
        Ok(words)
    }

    pub(crate) fn decode(&self, symbols: &[usize]) -> Word {
        Word::new(symbols.iter().map(|&a| self.alphabet[a].clone()).collect())
    }

    /// Fails unless every automaton uses the same alphabet, token for token.
    pub fn check_same_alphabet<'a>(dfas: impl IntoIterator<Item = &'a Dfa>) -> Result<()> {
        let mut iter = dfas.into_iter();
        let Some(first) = iter.next() else {
            return Ok(());
        };
        let mut alphabets: Vec<Vec<String>> = vec![first.alphabet.clone()];
        let mut mismatch = false;
        for dfa in iter {
            if dfa.alphabet != first.alphabet {
                mismatch = true;
            }
            if !alphabets.contains(&dfa.alphabet) {
                alphabets.push(dfa.alphabet.clone());
            }
        }
        if mismatch {
            Err(Error::AlphabetMismatch { alphabets })
        } else {
            Ok(())
        }
    }
}
