use crate::lts::{Adjacency, Lts};

/// A binary relation over the states of one LTS, stored as an `n × n` bit
/// matrix. Row `s` holds every `t` with `(s, t)` in the relation.
#[derive(Clone, PartialEq, Eq)]
pub struct SimRelation {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl std::fmt::Debug for SimRelation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}

impl SimRelation {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64);
        SimRelation {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut rel = Self::empty(n);
        for s in 0..n {
            rel.fill_row(s);
        }
        rel
    }

    pub fn identity(n: usize) -> Self {
        let mut rel = Self::empty(n);
        for s in 0..n {
            rel.insert(s, s);
        }
        rel
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut rel = Self::empty(n);
        for (s, t) in pairs {
            rel.insert(s, t);
        }
        rel
    }

    pub(crate) fn fill_row(&mut self, s: usize) {
        let row = &mut self.bits[s * self.words..(s + 1) * self.words];
        row.fill(u64::MAX);
        let tail = self.n % 64;
        if tail != 0 {
            row[self.words - 1] = (1u64 << tail) - 1;
        }
    }

    /// Number of states the relation ranges over.
    pub fn num_states(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, s: usize, t: usize) -> bool {
        self.bits[s * self.words + t / 64] >> (t % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, s: usize, t: usize) {
        self.bits[s * self.words + t / 64] |= 1 << (t % 64);
    }

    #[inline]
    pub fn remove(&mut self, s: usize, t: usize) {
        self.bits[s * self.words + t / 64] &= !(1 << (t % 64));
    }

    pub(crate) fn row(&self, s: usize) -> &[u64] {
        &self.bits[s * self.words..(s + 1) * self.words]
    }

    pub(crate) fn row_mut(&mut self, s: usize) -> &mut [u64] {
        &mut self.bits[s * self.words..(s + 1) * self.words]
    }

    /// Members of row `s`, ascending.
    pub fn successors(&self, s: usize) -> impl Iterator<Item = usize> + '_ {
        ones(self.row(s))
    }

    /// All pairs in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |s| self.successors(s).map(move |t| (s, t)))
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &SimRelation) -> bool {
        self.n == other.n && self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|s| self.contains(s, s))
    }

    /// Whether `(s, t)` and `(t, u)` imply `(s, u)`. Checked row-wise:
    /// for every `(s, t)` the row of `t` must be contained in the row of `s`.
    pub fn is_transitive(&self) -> bool {
        (0..self.n).all(|s| {
            let row_s = self.row(s);
            self.successors(s)
                .all(|t| self.row(t).iter().zip(row_s).all(|(b, a)| b & !a == 0))
        })
    }

    /// Whether every pair satisfies the simulation transfer condition in
    /// `lts`: each step of the left state is matched by an equally labelled
    /// step of the right state into a related pair.
    pub fn is_simulation(&self, lts: &Lts) -> bool {
        assert_eq!(lts.num_states(), self.n, "relation and LTS sizes differ");
        let adj = Adjacency::new(lts);
        self.pairs().all(|(s, t)| transfers(self, &adj, s, t))
    }
}

/// The transfer condition for a single pair.
pub(crate) fn transfers(rel: &SimRelation, adj: &Adjacency, s: usize, t: usize) -> bool {
    (0..adj.num_labels()).all(|a| {
        let targets = adj.post(t, a);
        adj.post(s, a)
            .iter()
            .all(|&s2| targets.iter().any(|&t2| rel.contains(s2, t2)))
    })
}

pub(crate) fn ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let bit = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(i * 64 + bit)
        })
    })
}
