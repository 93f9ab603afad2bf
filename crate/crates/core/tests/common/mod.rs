//! Brute-force oracles shared by the integration suites. Nothing here calls
//! into the enumeration or canonical-code paths of the library.
#![allow(dead_code)]

use std::collections::BTreeSet;

/// Decodes a Prüfer sequence over labels `0..n` into the edges of a labeled tree.
pub fn prufer_decode(code: &[usize], n: usize) -> Vec<(usize, usize)> {
    assert_eq!(code.len() + 2, n);
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Every labeled tree on `n >= 2` nodes, one per Prüfer sequence.
pub fn labeled_trees(n: usize) -> impl Iterator<Item = Vec<(usize, usize)>> {
    assert!(n >= 2);
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total).map(move |mut idx| {
        let mut code = vec![0; len];
        for slot in code.iter_mut() {
            *slot = idx % n;
            idx /= n;
        }
        prufer_decode(&code, n)
    })
}

/// Degree list of an edge set.
pub fn degrees(n: usize, edges: &[(usize, usize)]) -> Vec<u32> {
    let mut d = vec![0u32; n];
    for &(u, v) in edges {
        d[u] += 1;
        d[v] += 1;
    }
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Lexicographically least relabeled edge list over all `n!` permutations.
pub fn brute_canonical(n: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    loop {
        let mut relabeled: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        relabeled.sort_unstable();
        if best.as_ref().is_none_or(|b| relabeled < *b) {
            best = Some(relabeled);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap()
}

/// Isomorphism classes of labeled trees on `n` nodes by brute-force relabeling.
pub fn brute_class_count(n: usize) -> usize {
    labeled_trees(n)
        .map(|e| brute_canonical(n, &e))
        .collect::<BTreeSet<_>>()
        .len()
}

/// Every non-increasing `n`-tuple of positive integers summing to `total`,
/// found by scanning all tuples with entries in `1..=total`. Keep `n <= 6`.
pub fn brute_sequences(n: usize, total: u32) -> BTreeSet<Vec<u32>> {
    let mut out = BTreeSet::new();
    let mut tuple = vec![1u32; n];
    loop {
        if tuple.iter().sum::<u32>() == total && tuple.windows(2).all(|w| w[0] >= w[1]) {
            out.insert(tuple.clone());
        }
        let mut k = 0;
        loop {
            if k == n {
                return out;
            }
            tuple[k] += 1;
            if tuple[k] <= total {
                break;
            }
            tuple[k] = 1;
            k += 1;
        }
    }
}

/// Prefix-sum dominance recomputed from scratch: `Some(true)` if `x ⪯ y`.
pub fn brute_below_or_equal(x: &[u32], y: &[u32]) -> bool {
    (1..=x.len()).all(|k| x[..k].iter().sum::<u32>() <= y[..k].iter().sum::<u32>())
}
