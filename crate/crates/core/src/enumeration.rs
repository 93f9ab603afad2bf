//! Non-isomorphic free trees and the census of tree degree sequences.
//!
//! Rooted trees are walked as level sequences in the successor order of
//! Beyer and Hedetniemi. Only those rooted at a centroid are kept, and the
//! survivors are deduplicated by canonical code.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::sequence::DeltaSequence;
use crate::tree::{CanonicalCode, Tree};

/// Largest node count accepted by [`enumerate_trees`].
pub const MAX_ENUMERATION_NODES: usize = 16;

/// Iterator over the level sequences of all rooted trees on `n` nodes.
/// Levels start at 1 for the root; the first sequence is the path.
struct LevelSequences {
    current: Option<Vec<usize>>,
}

impl LevelSequences {
    fn new(n: usize) -> Self {
        Self {
            current: Some((1..=n).collect()),
        }
    }
}

impl Iterator for LevelSequences {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let levels = self.current.take()?;
        if let Some(p) = levels.iter().rposition(|&l| l > 2) {
            let q = levels[..p]
                .iter()
                .rposition(|&l| l == levels[p] - 1)
                .expect("a parent level precedes every non-root node");
            let mut next = levels.clone();
            for k in p..next.len() {
                next[k] = next[k - (p - q)];
            }
            self.current = Some(next);
        }
        Some(levels)
    }
}

/// Parent array of a level sequence; the root is its own parent.
fn parents(levels: &[usize]) -> Vec<usize> {
    let mut last_at_level = vec![0usize; levels.len() + 2];
    let mut parent = vec![0; levels.len()];
    for (k, &l) in levels.iter().enumerate() {
        if k > 0 {
            parent[k] = last_at_level[l - 1];
        }
        last_at_level[l] = k;
    }
    parent
}

fn rooted_at_centroid(parent: &[usize]) -> bool {
    let n = parent.len();
    let mut size = vec![1usize; n];
    // preorder numbering: children always follow their parent
    for k in (1..n).rev() {
        size[parent[k]] += size[k];
    }
    (1..n).filter(|&k| parent[k] == 0).all(|k| 2 * size[k] <= n)
}

/// One representative per isomorphism class of free trees on `n` nodes,
/// ordered by canonical code.
pub fn enumerate_trees(n: usize) -> Result<Vec<Tree>> {
    Ok(enumerate_classes(n)?.into_values().collect())
}

/// As [`enumerate_trees`], keyed by canonical code.
pub fn enumerate_classes(n: usize) -> Result<BTreeMap<CanonicalCode, Tree>> {
    if n == 0 {
        return Err(Error::NoNodes);
    }
    if n > MAX_ENUMERATION_NODES {
        return Err(Error::BoundExceeded {
            n,
            bound: MAX_ENUMERATION_NODES,
        });
    }
    let mut classes = BTreeMap::new();
    for levels in LevelSequences::new(n) {
        let parent = parents(&levels);
        if !rooted_at_centroid(&parent) {
            continue;
        }
        let edges: Vec<_> = (1..n).map(|k| (parent[k], k)).collect();
        let tree = Tree::new(n, &edges).expect("level sequence encodes a tree");
        classes.entry(tree.canonical_code()).or_insert(tree);
    }
    Ok(classes)
}

/// All tree-feasible sequences of length `n`: partitions of `2(n-1)` into
/// `n` positive parts, in decreasing lexicographic order (star first).
pub fn delta_census(n: usize) -> Vec<DeltaSequence> {
    assert!(n >= 1, "census needs at least one node");
    if n == 1 {
        return vec![DeltaSequence::chain(1)];
    }
    // subtract one from every part: partitions of n - 2 into at most n parts
    let mut out = Vec::new();
    let mut parts = Vec::new();
    partitions(n - 2, n - 2, n, &mut parts, &mut |p| {
        let mut values: Vec<u32> = p.iter().map(|&x| x as u32 + 1).collect();
        values.resize(n, 1);
        out.push(DeltaSequence::from_sorted_unchecked(values));
    });
    out
}

fn partitions(
    remaining: usize,
    max_part: usize,
    slots: usize,
    parts: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if remaining == 0 {
        emit(parts);
        return;
    }
    if slots == 0 {
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        parts.push(part);
        partitions(remaining - part, part, slots - 1, parts, emit);
        parts.pop();
    }
}

/// The classes of [`enumerate_trees`] whose delta sequence is `s`.
pub fn trees_with_delta(n: usize, s: &DeltaSequence) -> Result<Vec<Tree>> {
    if s.len() != n {
        return Err(Error::LengthMismatch(s.len(), n));
    }
    if !s.is_tree_feasible() {
        return Err(Error::NotTreeFeasible {
            sequence: s.to_string(),
            total: s.total(),
            expected: 2 * (n as u64 - 1),
        });
    }
    Ok(enumerate_trees(n)?
        .into_iter()
        .filter(|t| t.delta_sequence() == *s)
        .collect())
}
