use std::collections::HashMap;

use rustc_hash::FxHashMap;

use crate::lts::Lts;

/// A partition of `0..n` into non-empty blocks.
///
/// Blocks are numbered in order of their smallest state and each block
/// lists its states ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    block_of: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Builds the canonical partition induced by arbitrary block labels.
    pub fn from_block_of(labels: &[usize]) -> Self {
        let mut renumber: HashMap<usize, usize> = HashMap::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut block_of = Vec::with_capacity(labels.len());
        for (s, label) in labels.iter().enumerate() {
            let b = *renumber.entry(*label).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[b].push(s);
            block_of.push(b);
        }
        Partition { block_of, blocks }
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn num_states(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_of(&self, state: usize) -> usize {
        self.block_of[state]
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn same_block(&self, s: usize, t: usize) -> bool {
        self.block_of[s] == self.block_of[t]
    }
}

/// A state's current block and its deduplicated `(label, target block)` pairs.
type Signature<'a> = (u32, &'a [(u32, u32)]);

/// Coarsest bisimulation partition by signature refinement.
///
/// Each round gives every state the signature `(block, {(label, block of
/// target)})` and splits blocks by signature. Rounds repeat until the number
/// of blocks stops growing.
pub fn bisimulation_partition(lts: &Lts) -> Partition {
    let n = lts.num_states();
    let transitions = lts.transitions();
    // Transitions are sorted by source, so each state's outgoing edges form
    // a contiguous range.
    let mut offsets = vec![0usize; n + 1];
    for t in transitions {
        offsets[t.source + 1] += 1;
    }
    for s in 0..n {
        offsets[s + 1] += offsets[s];
    }

    // Blocks and signatures are stored as u32 to halve the working set.
    let mut block = vec![0u32; n];
    let mut count = usize::from(n > 0);
    let mut signatures: Vec<(u32, u32)> = Vec::with_capacity(transitions.len());
    let mut lens = vec![0usize; n];
    loop {
        signatures.clear();
        for t in transitions {
            signatures.push((t.label as u32, block[t.target]));
        }
        for s in 0..n {
            let sig = &mut signatures[offsets[s]..offsets[s + 1]];
            sig.sort_unstable();
            lens[s] = dedup_in_place(sig);
        }
        let mut ids: FxHashMap<Signature, u32> =
            FxHashMap::with_capacity_and_hasher(count * 2, Default::default());
        let mut next = Vec::with_capacity(n);
        for s in 0..n {
            let sig = &signatures[offsets[s]..offsets[s] + lens[s]];
            let fresh = ids.len() as u32;
            next.push(*ids.entry((block[s], sig)).or_insert(fresh));
        }
        let refined = ids.len();
        drop(ids);
        block = next;
        if refined == count {
            break;
        }
        count = refined;
    }
    let block: Vec<usize> = block.into_iter().map(|b| b as usize).collect();
    Partition::from_block_of(&block)
}

/// Moves the distinct entries of a sorted slice to its front and returns
/// their count.
fn dedup_in_place(sig: &mut [(u32, u32)]) -> usize {
    if sig.is_empty() {
        return 0;
    }
    let mut len = 1;
    for i in 1..sig.len() {
        if sig[i] != sig[len - 1] {
            sig[len] = sig[i];
            len += 1;
        }
    }
    len
}
