//! Labelled transition systems.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// One `(source, label, target)` triple; `label` indexes [`Lts::labels`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transition {
    pub source: usize,
    pub label: usize,
    pub target: usize,
}

impl Transition {
    pub fn new(source: usize, label: usize, target: usize) -> Self {
        Transition {
            source,
            label,
            target,
        }
    }
}

/// A labelled transition system with dense state identifiers `0..num_states`.
///
/// Transitions are kept sorted by `(source, label, target)` without
/// duplicates, so two systems with the same triples compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lts {
    num_states: usize,
    labels: Vec<String>,
    transitions: Vec<Transition>,
    initial: usize,
}

impl Lts {
    pub fn new(
        num_states: usize,
        labels: Vec<String>,
        mut transitions: Vec<Transition>,
        initial: usize,
    ) -> Result<Self> {
        if initial >= num_states {
            return Err(Error::UnknownState {
                state: initial,
                count: num_states,
            });
        }
        let mut seen = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if label.contains(['"', '\n', '\r']) {
                return Err(Error::Malformed(format!("invalid label {label:?}")));
            }
            if seen.insert(label.as_str(), i).is_some() {
                return Err(Error::Malformed(format!("duplicate label `{label}`")));
            }
        }
        for t in &transitions {
            for state in [t.source, t.target] {
                if state >= num_states {
                    return Err(Error::UnknownState {
                        state,
                        count: num_states,
                    });
                }
            }
            if t.label >= labels.len() {
                return Err(Error::Malformed(format!(
                    "label index {} out of range ({} labels)",
                    t.label,
                    labels.len()
                )));
            }
        }
        transitions.sort_unstable();
        transitions.dedup();
        Ok(Lts {
            num_states,
            labels,
            transitions,
            initial,
        })
    }

    /// Builds a system from named triples; labels are declared in order of
    /// first appearance.
    pub fn from_named<S: AsRef<str>>(
        num_states: usize,
        triples: impl IntoIterator<Item = (usize, S, usize)>,
        initial: usize,
    ) -> Result<Self> {
        let mut labels: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut transitions = Vec::new();
        for (source, label, target) in triples {
            let label = label.as_ref();
            let id = match index.get(label) {
                Some(&id) => id,
                None => {
                    labels.push(label.to_string());
                    index.insert(label.to_string(), labels.len() - 1);
                    labels.len() - 1
                }
            };
            transitions.push(Transition::new(source, id, target));
        }
        Lts::new(num_states, labels, transitions, initial)
    }

    pub fn num_states(&self) -> usize {
        self.num_states
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    pub fn num_transitions(&self) -> usize {
        self.transitions.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn check_state(&self, state: usize) -> Result<()> {
        if state < self.num_states {
            Ok(())
        } else {
            Err(Error::UnknownState {
                state,
                count: self.num_states,
            })
        }
    }

    /// Same system with a different initial state.
    pub fn with_initial(mut self, initial: usize) -> Result<Self> {
        self.check_state(initial)?;
        self.initial = initial;
        Ok(self)
    }

    /// At most one successor for every `(state, label)` pair.
    pub fn is_deterministic(&self) -> bool {
        self.transitions
            .windows(2)
            .all(|w| (w[0].source, w[0].label) != (w[1].source, w[1].label))
    }

    /// Disjoint union of `self` and `other`.
    ///
    /// `self` keeps its state indices, `other`'s states are shifted by
    /// `self.num_states()`, and the label set is `self`'s labels followed by
    /// the labels of `other` not already present. The initial state is
    /// `self`'s. Returns the union and the offset applied to `other`.
    pub fn disjoint_union(&self, other: &Lts) -> (Lts, usize) {
        let offset = self.num_states;
        let mut labels = self.labels.clone();
        let remap: Vec<usize> = other
            .labels
            .iter()
            .map(|label| match labels.iter().position(|l| l == label) {
                Some(i) => i,
                None => {
                    labels.push(label.clone());
                    labels.len() - 1
                }
            })
            .collect();
        let mut transitions = self.transitions.clone();
        transitions.extend(
            other
                .transitions
                .iter()
                .map(|t| Transition::new(t.source + offset, remap[t.label], t.target + offset)),
        );
        transitions.sort_unstable();
        let union = Lts {
            num_states: self.num_states + other.num_states,
            labels,
            transitions,
            initial: self.initial,
        };
        (union, offset)
    }

    /// Appends `count` fresh states without transitions and returns the index
    /// of the first one.
    pub(crate) fn add_states(&mut self, count: usize) -> usize {
        let first = self.num_states;
        self.num_states += count;
        first
    }

    /// Ensures `label` is declared and returns its index.
    pub(crate) fn intern_label(&mut self, label: &str) -> usize {
        match self.label_index(label) {
            Some(i) => i,
            None => {
                self.labels.push(label.to_string());
                self.labels.len() - 1
            }
        }
    }

    pub(crate) fn add_transitions(&mut self, extra: impl IntoIterator<Item = Transition>) {
        self.transitions.extend(extra);
        self.transitions.sort_unstable();
        self.transitions.dedup();
    }
}

impl fmt::Display for Lts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::write_lts(self))
    }
}

/// Successor and predecessor lists grouped by `(state, label)`, in
/// compressed sparse row layout.
#[derive(Debug, Clone)]
pub struct Adjacency {
    num_labels: usize,
    post_offsets: Vec<usize>,
    post: Vec<usize>,
    pre_offsets: Vec<usize>,
    pre: Vec<usize>,
}

impl Adjacency {
    pub fn new(lts: &Lts) -> Self {
        let num_labels = lts.labels.len();
        let slots = lts.num_states * num_labels;
        let (post_offsets, post) = Self::group(
            slots,
            lts.transitions
                .iter()
                .map(|t| (t.source * num_labels + t.label, t.target)),
        );
        let (pre_offsets, pre) = Self::group(
            slots,
            lts.transitions
                .iter()
                .map(|t| (t.target * num_labels + t.label, t.source)),
        );
        Adjacency {
            num_labels,
            post_offsets,
            post,
            pre_offsets,
            pre,
        }
    }

    fn group(
        slots: usize,
        entries: impl Iterator<Item = (usize, usize)> + Clone,
    ) -> (Vec<usize>, Vec<usize>) {
        let mut offsets = vec![0usize; slots + 1];
        for (slot, _) in entries.clone() {
            offsets[slot + 1] += 1;
        }
        for i in 0..slots {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut values = vec![0usize; offsets[slots]];
        for (slot, value) in entries {
            values[fill[slot]] = value;
            fill[slot] += 1;
        }
        (offsets, values)
    }

    pub fn num_labels(&self) -> usize {
        self.num_labels
    }

    /// Targets of `state --label-->`.
    pub fn post(&self, state: usize, label: usize) -> &[usize] {
        let slot = state * self.num_labels + label;
        &self.post[self.post_offsets[slot]..self.post_offsets[slot + 1]]
    }

    /// Sources of `--label--> state`.
    pub fn pre(&self, state: usize, label: usize) -> &[usize] {
        let slot = state * self.num_labels + label;
        &self.pre[self.pre_offsets[slot]..self.pre_offsets[slot + 1]]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_dangling_states() {
        let err = Lts::from_named(2, [(0, "a", 2)], 0).unwrap_err();
        assert_eq!(err, Error::UnknownState { state: 2, count: 2 });
        assert!(Lts::from_named(2, [(0, "a", 1)], 5).is_err());
    }

    #[test]
    fn duplicate_triples_collapse() {
        let m = Lts::from_named(2, [(0, "a", 1), (0, "a", 1), (1, "b", 0)], 0).unwrap();
        assert_eq!(m.num_transitions(), 2);
    }

    #[test]
    fn determinism() {
        let det = Lts::from_named(2, [(0, "a", 1), (0, "b", 1)], 0).unwrap();
        assert!(det.is_deterministic());
        let ndet = Lts::from_named(2, [(0, "a", 1), (0, "a", 0)], 0).unwrap();
        assert!(!ndet.is_deterministic());
    }

    #[test]
    fn union_shifts_second_operand() {
        let m1 = Lts::from_named(2, [(0, "a", 1)], 0).unwrap();
        let m2 = Lts::from_named(1, [(0, "b", 0), (0, "a", 0)], 0).unwrap();
        let (u, offset) = m1.disjoint_union(&m2);
        assert_eq!(offset, 2);
        assert_eq!(u.labels(), ["a", "b"]);
        assert_eq!(
            u.transitions(),
            [
                Transition::new(0, 0, 1),
                Transition::new(2, 0, 2),
                Transition::new(2, 1, 2)
            ]
        );
        assert_eq!(u.initial(), 0);
    }

    #[test]
    fn adjacency_lists() {
        let m = Lts::from_named(3, [(0, "a", 1), (0, "a", 2), (2, "b", 1)], 0).unwrap();
        let adj = Adjacency::new(&m);
        assert_eq!(adj.post(0, 0), [1, 2]);
        assert_eq!(adj.post(0, 1), [] as [usize; 0]);
        assert_eq!(adj.pre(1, 0), [0]);
        assert_eq!(adj.pre(1, 1), [2]);
    }
}
