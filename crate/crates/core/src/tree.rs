//! Labeled free trees, branch moves, canonical codes and spanning trees.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sequence::DeltaSequence;

#[derive(Serialize, Deserialize)]
struct RawEdges {
    n: usize,
    edges: Vec<(usize, usize)>,
}

type Edges = Vec<(usize, usize)>;
type Adjacency = Vec<Vec<usize>>;

/// Validates node range, self-loops and duplicates; returns normalized,
/// sorted edges and the sorted adjacency lists.
fn simple_edges(n: usize, edges: &[(usize, usize)]) -> Result<(Edges, Adjacency)> {
    if n == 0 {
        return Err(Error::NoNodes);
    }
    let mut seen = BTreeSet::new();
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        for node in [u, v] {
            if node >= n {
                return Err(Error::NodeOutOfRange { node, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let e = (u.min(v), u.max(v));
        if !seen.insert(e) {
            return Err(Error::DuplicateEdge(e.0, e.1));
        }
        adj[u].push(v);
        adj[v].push(u);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    Ok((seen.into_iter().collect(), adj))
}

fn connected(adj: &[Vec<usize>]) -> bool {
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                count += 1;
                stack.push(v);
            }
        }
    }
    count == adj.len()
}

/// A free tree on nodes `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawEdges", into = "RawEdges")]
pub struct Tree {
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Tree {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let (edges, adj) = simple_edges(n, edges)?;
        if edges.len() != n - 1 {
            return Err(Error::EdgeCount {
                n,
                expected: n - 1,
                got: edges.len(),
            });
        }
        if !connected(&adj) {
            return Err(Error::NotConnected);
        }
        Ok(Self { edges, adj })
    }

    /// Path `0-1-...-(n-1)`.
    ///
    /// # Panics
    /// If `n == 0`.
    pub fn chain(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|k| (k - 1, k)).collect();
        Self::new(n, &edges).expect("chain is a tree")
    }

    /// Center `0` joined to leaves `1..n`.
    ///
    /// # Panics
    /// If `n == 0`.
    pub fn star(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|k| (0, k)).collect();
        Self::new(n, &edges).expect("star is a tree")
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adj[node]
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adj[node].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.node_count() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn delta_sequence(&self) -> DeltaSequence {
        DeltaSequence::from_sorted_unchecked(self.adj.iter().map(|a| a.len() as u32).collect())
    }

    fn check_node(&self, node: usize) -> Result<()> {
        if node < self.node_count() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                node,
                n: self.node_count(),
            })
        }
    }

    /// The branch rooted at `root` that leaves through `gateway`.
    pub fn branch(&self, root: usize, gateway: usize) -> Result<Branch> {
        self.check_node(root)?;
        self.check_node(gateway)?;
        if !self.has_edge(root, gateway) {
            return Err(Error::NotAnEdge(root, gateway));
        }
        let mut members = vec![gateway];
        let mut stack = vec![(gateway, root)];
        while let Some((u, parent)) = stack.pop() {
            for &v in &self.adj[u] {
                if v != parent {
                    members.push(v);
                    stack.push((v, u));
                }
            }
        }
        members.sort_unstable();
        Ok(Branch {
            root,
            gateway,
            members,
        })
    }

    /// One branch per neighbour of `m`, ordered by gateway label.
    pub fn branches_at(&self, m: usize) -> Result<Vec<Branch>> {
        self.check_node(m)?;
        self.adj[m].iter().map(|&c| self.branch(m, c)).collect()
    }

    /// Detaches the branch at `donor` through `gateway` and hangs it from
    /// `target`: edge `donor-gateway` becomes `target-gateway`.
    ///
    /// With `enforce_degree_rule`, `target` must have degree at least that of
    /// `donor`, so the delta sequence strictly rises in the majorization order.
    pub fn move_branch(
        &self,
        donor: usize,
        gateway: usize,
        target: usize,
        enforce_degree_rule: bool,
    ) -> Result<Tree> {
        self.check_node(target)?;
        let branch = self.branch(donor, gateway)?;
        if target == donor {
            return Err(Error::TargetIsDonor(donor));
        }
        if self.degree(donor) < 2 {
            return Err(Error::DonorIsLeaf(donor));
        }
        if branch.contains(target) {
            return Err(Error::WouldDisconnect {
                donor,
                gateway,
                target,
            });
        }
        if enforce_degree_rule && self.degree(target) < self.degree(donor) {
            return Err(Error::DegreeRuleViolation {
                donor,
                target,
                donor_degree: self.degree(donor),
                target_degree: self.degree(target),
            });
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&e| {
                if e == (donor.min(gateway), donor.max(gateway)) {
                    (target, gateway)
                } else {
                    e
                }
            })
            .collect();
        Tree::new(self.node_count(), &edges)
    }

    /// All degree-rule moves `(donor, gateway, target)` available in this tree,
    /// in lexicographic order.
    pub fn degree_rule_moves(&self) -> Vec<Move> {
        let mut moves = Vec::new();
        for donor in 0..self.node_count() {
            if self.degree(donor) < 2 {
                continue;
            }
            for &gateway in &self.adj[donor] {
                let branch = self.branch(donor, gateway).expect("edge exists");
                for target in 0..self.node_count() {
                    if target != donor
                        && self.degree(target) >= self.degree(donor)
                        && !branch.contains(target)
                    {
                        moves.push(Move {
                            donor,
                            gateway,
                            target,
                        });
                    }
                }
            }
        }
        moves
    }

    pub fn canonical_code(&self) -> CanonicalCode {
        canonical_code(self)
    }

    pub fn is_isomorphic(&self, other: &Tree) -> bool {
        is_isomorphic(self, other)
    }

    /// Rebuilds a representative tree from a canonical code. Nodes are
    /// numbered in preorder from the root of the encoding.
    pub fn from_canonical_code(code: &CanonicalCode) -> Result<Tree> {
        let bytes = code.as_bytes();
        if bytes.first() != Some(&b'(') {
            return Err(Error::MalformedCode);
        }
        let mut edges = Vec::new();
        let mut stack: Vec<usize> = Vec::new();
        let mut next = 0;
        let mut closed_root = false;
        for &b in bytes {
            if closed_root {
                return Err(Error::MalformedCode);
            }
            match b {
                b'(' => {
                    if let Some(&parent) = stack.last() {
                        edges.push((parent, next));
                    }
                    stack.push(next);
                    next += 1;
                }
                b')' => {
                    stack.pop().ok_or(Error::MalformedCode)?;
                    closed_root = stack.is_empty();
                }
                _ => return Err(Error::MalformedCode),
            }
        }
        if !closed_root {
            return Err(Error::MalformedCode);
        }
        Tree::new(next, &edges)
    }

    /// Text block: node count on the first line, then one `u v` per edge.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.node_count());
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Tree> {
        let (n, edges) = parse_edge_block(text)?;
        Tree::new(n, &edges)
    }

    pub fn to_dot(&self, name: &str) -> String {
        dot(name, self.node_count(), &self.edges)
    }
}

impl TryFrom<RawEdges> for Tree {
    type Error = Error;

    fn try_from(raw: RawEdges) -> Result<Self> {
        Tree::new(raw.n, &raw.edges)
    }
}

impl From<Tree> for RawEdges {
    fn from(t: Tree) -> Self {
        RawEdges {
            n: t.node_count(),
            edges: t.edges,
        }
    }
}

fn parse_edge_block(text: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (first, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing node count".into(),
    })?;
    let n = header.parse::<usize>().map_err(|e| Error::Parse {
        line: first,
        message: format!("bad node count {header:?}: {e}"),
    })?;
    let edges = lines
        .map(|(line, l)| {
            let nums: Vec<usize> = l
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::Parse {
                    line,
                    message: format!("bad edge {l:?}: {e}"),
                })?;
            match nums[..] {
                [u, v] => Ok((u, v)),
                _ => Err(Error::Parse {
                    line,
                    message: format!("expected `u v`, got {l:?}"),
                }),
            }
        })
        .collect::<Result<_>>()?;
    Ok((n, edges))
}

fn dot(name: &str, n: usize, edges: &[(usize, usize)]) -> String {
    let mut out = format!("graph {name} {{\n");
    for v in 0..n {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v) in edges {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

/// A branch rooted at `root`: the edge `root-gateway` plus everything
/// reachable from `root` through it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Branch {
    pub root: usize,
    pub gateway: usize,
    /// Sorted node labels on the gateway side, `root` excluded.
    pub members: Vec<usize>,
}

impl Branch {
    pub fn contains(&self, node: usize) -> bool {
        self.members.binary_search(&node).is_ok()
    }
}

/// A branch move: the branch at `donor` through `gateway` is re-hung at `target`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Move {
    pub donor: usize,
    pub gateway: usize,
    pub target: usize,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.donor, self.gateway, self.target)
    }
}

/// Isomorphism-invariant encoding: a balanced-parenthesis string of the
/// tree rooted at its center, children sorted. Bicentral trees take the
/// smaller of the two encodings.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(std::str::from_utf8(&self.0).expect("ascii parentheses"))
    }
}

impl TryFrom<String> for CanonicalCode {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        let code = CanonicalCode(s.into_bytes());
        let tree = Tree::from_canonical_code(&code)?;
        if tree.canonical_code() != code {
            return Err(Error::MalformedCode);
        }
        Ok(code)
    }
}

impl From<CanonicalCode> for String {
    fn from(c: CanonicalCode) -> Self {
        String::from_utf8(c.0).expect("ascii parentheses")
    }
}

/// One or two central nodes, found by peeling leaves layer by layer.
pub fn centers(t: &Tree) -> Vec<usize> {
    let n = t.node_count();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &v in t.neighbors(leaf) {
                degree[v] -= 1;
                if degree[v] == 1 {
                    next.push(v);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn rooted_code(t: &Tree, root: usize) -> Vec<u8> {
    // iterative post-order; children codes are sorted before concatenation
    let n = t.node_count();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(u) = stack.pop() {
        order.push(u);
        for &v in t.neighbors(u) {
            if parent[v] == usize::MAX {
                parent[v] = u;
                stack.push(v);
            }
        }
    }
    let mut codes: Vec<Vec<Vec<u8>>> = vec![Vec::new(); n];
    let mut done: Vec<Vec<u8>> = vec![Vec::new(); n];
    for &u in order.iter().rev() {
        let mut children = std::mem::take(&mut codes[u]);
        children.sort_unstable();
        let mut code = Vec::with_capacity(2 + children.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for c in children {
            code.extend(c);
        }
        code.push(b')');
        if u == root {
            done[u] = code;
        } else {
            codes[parent[u]].push(code);
        }
    }
    std::mem::take(&mut done[root])
}

pub fn canonical_code(t: &Tree) -> CanonicalCode {
    let code = centers(t)
        .into_iter()
        .map(|c| rooted_code(t, c))
        .min()
        .expect("a tree has a center");
    CanonicalCode(code)
}

pub fn is_isomorphic(a: &Tree, b: &Tree) -> bool {
    a.node_count() == b.node_count() && canonical_code(a) == canonical_code(b)
}

/// A simple undirected graph on nodes `0..n`. Connectivity is not required
/// at construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawEdges", into = "RawEdges")]
pub struct Graph {
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let (edges, adj) = simple_edges(n, edges)?;
        Ok(Self { edges, adj })
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let edges: Vec<_> = (0..n).map(|k| (k, (k + 1) % n)).collect();
        Self::new(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::new(n, &edges)
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adj[node].len()
    }

    pub fn is_connected(&self) -> bool {
        connected(&self.adj)
    }

    /// `true` when the graph is a path on all its nodes.
    pub fn is_chain(&self) -> bool {
        let n = self.node_count();
        self.is_connected()
            && self.edges.len() + 1 == n
            && self.adj.iter().all(|a| a.len() <= 2)
    }

    /// Degree sequence, non-increasing. Not tree-feasible unless the graph is a tree.
    pub fn delta_sequence(&self) -> Result<DeltaSequence> {
        let degrees: Vec<i64> = self.adj.iter().map(|a| a.len() as i64).collect();
        DeltaSequence::from_degrees(&degrees)
    }

    pub fn from_text(text: &str) -> Result<Graph> {
        let (n, edges) = parse_edge_block(text)?;
        Graph::new(n, &edges)
    }

    pub fn to_dot(&self, name: &str) -> String {
        dot(name, self.node_count(), &self.edges)
    }
}

impl TryFrom<RawEdges> for Graph {
    type Error = Error;

    fn try_from(raw: RawEdges) -> Result<Self> {
        Graph::new(raw.n, &raw.edges)
    }
}

impl From<Graph> for RawEdges {
    fn from(g: Graph) -> Self {
        RawEdges {
            n: g.node_count(),
            edges: g.edges,
        }
    }
}

/// Breadth-first spanning tree from node 0, visiting neighbours in
/// increasing label order.
pub fn spanning_tree(g: &Graph) -> Result<Tree> {
    let n = g.node_count();
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    while let Some(u) = queue.pop_front() {
        for &v in &g.adj[u] {
            if !seen[v] {
                seen[v] = true;
                edges.push((u, v));
                queue.push_back(v);
            }
        }
    }
    if edges.len() + 1 != n {
        return Err(Error::NotConnected);
    }
    Tree::new(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[i64]) -> DeltaSequence {
        DeltaSequence::from_degrees(v).unwrap()
    }

    #[test]
    fn rejects_malformed_trees() {
        assert_eq!(Tree::new(0, &[]), Err(Error::NoNodes));
        assert_eq!(Tree::new(2, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Tree::new(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Tree::new(3, &[(0, 3), (1, 2)]),
            Err(Error::NodeOutOfRange { node: 3, n: 3 })
        );
        assert_eq!(
            Tree::new(3, &[(0, 1)]),
            Err(Error::EdgeCount { n: 3, expected: 2, got: 1 })
        );
        assert_eq!(
            Tree::new(4, &[(0, 1), (1, 2), (2, 0)]),
            Err(Error::NotConnected)
        );
    }

    #[test]
    fn delta_sequences_of_standard_trees() {
        assert_eq!(Tree::chain(8).delta_sequence(), seq(&[2, 2, 2, 2, 2, 2, 1, 1]));
        assert_eq!(Tree::star(4).delta_sequence(), seq(&[3, 1, 1, 1]));
        assert_eq!(Tree::chain(2).delta_sequence(), seq(&[1, 1]));
        assert_eq!(Tree::chain(2), Tree::star(2));
        assert_eq!(Tree::star(6).delta_sequence(), seq(&[5, 1, 1, 1, 1, 1]));
        assert_eq!(Tree::chain(1).delta_sequence().values(), &[0]);
    }

    #[test]
    fn branches_partition_the_other_nodes() {
        let chain = Tree::chain(4);
        let b = chain.branches_at(1).unwrap();
        assert_eq!(b.len(), 2);
        assert_eq!(b[0].members, vec![0]);
        assert_eq!(b[1].members, vec![2, 3]);

        let star = Tree::star(5);
        let b = star.branches_at(0).unwrap();
        assert_eq!(b.len(), 4);
        assert!(b.iter().all(|br| br.members == vec![br.gateway]));

        let b = star.branches_at(3).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].members, vec![0, 1, 2, 4]);

        assert_eq!(chain.branch(0, 2), Err(Error::NotAnEdge(0, 2)));
    }

    #[test]
    fn move_branch_examples() {
        let chain = Tree::chain(4);
        let moved = chain.move_branch(2, 3, 1, true).unwrap();
        assert_eq!(moved.edges(), &[(0, 1), (1, 2), (1, 3)]);
        assert_eq!(moved.delta_sequence(), seq(&[3, 1, 1, 1]));

        assert_eq!(
            chain.move_branch(1, 0, 3, true),
            Err(Error::DegreeRuleViolation {
                donor: 1,
                target: 3,
                donor_degree: 2,
                target_degree: 1
            })
        );
        // without the rule the same move is legal and lowers nothing below 1
        let free = chain.move_branch(1, 0, 3, false).unwrap();
        assert_eq!(free.delta_sequence(), chain.delta_sequence());

        assert_eq!(
            chain.move_branch(1, 2, 3, false),
            Err(Error::WouldDisconnect { donor: 1, gateway: 2, target: 3 })
        );
        assert_eq!(chain.move_branch(0, 1, 2, false), Err(Error::DonorIsLeaf(0)));
        assert_eq!(chain.move_branch(1, 2, 1, false), Err(Error::TargetIsDonor(1)));
        assert_eq!(chain.move_branch(1, 3, 0, false), Err(Error::NotAnEdge(1, 3)));
    }

    #[test]
    fn equal_degree_leaf_move_conserves_total() {
        // spider with legs of length 2: 0 center, 1..3 middle, 4..6 tips
        let t = Tree::new(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]).unwrap();
        let moved = t.move_branch(1, 4, 2, true).unwrap();
        assert_eq!(moved.delta_sequence().total(), 12);
        assert_eq!(moved.delta_sequence(), seq(&[3, 3, 1, 1, 1, 1, 2]));
    }

    #[test]
    fn canonical_codes_separate_chain_and_star() {
        let chain = Tree::chain(4);
        let relabeled = Tree::new(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(chain.canonical_code(), relabeled.canonical_code());
        assert!(chain.is_isomorphic(&relabeled));
        assert!(!chain.is_isomorphic(&Tree::star(4)));
    }

    #[test]
    fn canonical_code_round_trips_through_tree() {
        for t in [Tree::chain(1), Tree::chain(2), Tree::chain(7), Tree::star(6)] {
            let code = t.canonical_code();
            let back = Tree::from_canonical_code(&code).unwrap();
            assert!(back.is_isomorphic(&t));
            assert_eq!(back.canonical_code(), code);
        }
        for bad in ["", "(", "())", "()()", "(x)", ")("] {
            assert!(Tree::from_canonical_code(&CanonicalCode(bad.as_bytes().to_vec())).is_err());
        }
    }

    #[test]
    fn centers_of_paths() {
        assert_eq!(centers(&Tree::chain(5)), vec![2]);
        assert_eq!(centers(&Tree::chain(6)), vec![2, 3]);
        assert_eq!(centers(&Tree::star(6)), vec![0]);
    }

    #[test]
    fn spanning_tree_examples() {
        let tree = Tree::star(5);
        let g = Graph::new(5, tree.edges()).unwrap();
        assert_eq!(spanning_tree(&g).unwrap(), tree);

        let c4 = Graph::cycle(4).unwrap();
        let st = spanning_tree(&c4).unwrap();
        assert!(st.is_isomorphic(&Tree::chain(4)));
        assert!(st.edges().iter().all(|e| c4.edges().contains(e)));

        let k3 = Graph::complete(3).unwrap();
        assert!(spanning_tree(&k3).unwrap().is_isomorphic(&Tree::chain(3)));

        let split = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(spanning_tree(&split), Err(Error::NotConnected));
    }

    #[test]
    fn text_and_dot_formats() {
        let t = Tree::chain(3);
        assert_eq!(t.to_text(), "3\n0 1\n1 2\n");
        assert_eq!(Tree::from_text(&t.to_text()).unwrap(), t);
        assert_eq!(Tree::from_text("# comment\n3\n\n2 1\n0 1\n").unwrap(), t);
        assert!(matches!(Tree::from_text("3\n0 1 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Tree::from_text("3\n0 0\n1 2\n"), Err(Error::SelfLoop(0))));
        assert!(matches!(Tree::from_text("3\n0 1\n1 0\n"), Err(Error::DuplicateEdge(0, 1))));
        assert_eq!(
            t.to_dot("T"),
            "graph T {\n  0;\n  1;\n  2;\n  0 -- 1;\n  1 -- 2;\n}\n"
        );
    }

    #[test]
    fn graph_helpers() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.delta_sequence().unwrap(), seq(&[3, 3, 3, 3]));
        assert!(!k4.is_chain());
        assert!(Graph::new(4, Tree::chain(4).edges()).unwrap().is_chain());
        assert!(!Graph::cycle(4).unwrap().is_chain());
    }
}
