//! Exhaustive checks over all trees of a given size: total order of the
//! census, reachability under degree-rule branch moves, chain minimality,
//! the convex-sum characterization, and the Hasse diagram of the order.
//!
//! Reachability is explored over isomorphism classes. Each class keeps the
//! labeled tree it was first reached as, so a path of moves from the start
//! class can be replayed literally.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::enumeration::{delta_census, enumerate_classes, MAX_ENUMERATION_NODES};
use crate::error::{Error, Result};
use crate::realization::MoveTrace;
use crate::sequence::{compare, convex_functional, Comparison, ConvexFn, DeltaSequence};
use crate::tree::{CanonicalCode, Graph, Move, Tree};

/// Largest `n` for which class-level reachability is explored.
pub const MAX_REACHABILITY_NODES: usize = 10;
/// Largest `n` accepted by [`verify_convex_characterization`].
pub const MAX_CONVEX_NODES: usize = 9;
/// Largest `n` accepted by [`hasse_diagram`].
pub const MAX_HASSE_NODES: usize = 12;

fn bound(n: usize, max: usize) -> Result<()> {
    if n > max {
        Err(Error::BoundExceeded { n, bound: max })
    } else if n == 0 {
        Err(Error::NoNodes)
    } else {
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderReport {
    pub n: usize,
    pub is_total: bool,
    pub witness: Option<(DeltaSequence, DeltaSequence)>,
}

/// Scans census pairs in census order and reports the first incomparable one.
pub fn check_total_order(n: usize) -> Result<OrderReport> {
    bound(n, MAX_ENUMERATION_NODES)?;
    let census = delta_census(n);
    for (k, a) in census.iter().enumerate() {
        for b in &census[k + 1..] {
            if compare(a, b)? == Comparison::Incomparable {
                return Ok(OrderReport {
                    n,
                    is_total: false,
                    witness: Some((a.clone(), b.clone())),
                });
            }
        }
    }
    Ok(OrderReport {
        n,
        is_total: true,
        witness: None,
    })
}

#[derive(Clone, Debug)]
struct Visit {
    tree: Tree,
    parent: Option<(CanonicalCode, Move)>,
}

/// Closure of one tree under degree-rule branch moves, over isomorphism classes.
#[derive(Clone, Debug)]
pub struct Reachability {
    start: CanonicalCode,
    visits: HashMap<CanonicalCode, Visit>,
    order: Vec<CanonicalCode>,
}

impl Reachability {
    /// Breadth-first search from `t`.
    pub fn explore(t: &Tree) -> Result<Self> {
        bound(t.node_count(), MAX_REACHABILITY_NODES)?;
        let start = t.canonical_code();
        let mut visits = HashMap::new();
        visits.insert(
            start.clone(),
            Visit {
                tree: t.clone(),
                parent: None,
            },
        );
        let mut order = vec![start.clone()];
        let mut queue = VecDeque::from([start.clone()]);
        while let Some(code) = queue.pop_front() {
            let tree = visits[&code].tree.clone();
            for m in tree.degree_rule_moves() {
                let next = tree.move_branch(m.donor, m.gateway, m.target, true)?;
                let next_code = next.canonical_code();
                if visits.contains_key(&next_code) {
                    continue;
                }
                visits.insert(
                    next_code.clone(),
                    Visit {
                        tree: next,
                        parent: Some((code.clone(), m)),
                    },
                );
                order.push(next_code.clone());
                queue.push_back(next_code);
            }
        }
        Ok(Self {
            start,
            visits,
            order,
        })
    }

    pub fn start(&self) -> &CanonicalCode {
        &self.start
    }

    pub fn contains(&self, code: &CanonicalCode) -> bool {
        self.visits.contains_key(code)
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Reached classes in discovery order.
    pub fn classes(&self) -> &[CanonicalCode] {
        &self.order
    }

    pub fn code_set(&self) -> BTreeSet<CanonicalCode> {
        self.order.iter().cloned().collect()
    }

    /// The labeled representative recorded for a reached class.
    pub fn representative(&self, code: &CanonicalCode) -> Option<&Tree> {
        self.visits.get(code).map(|v| &v.tree)
    }

    /// Moves leading from the start tree to the representative of `code`.
    pub fn trace_to(&self, code: &CanonicalCode) -> Option<MoveTrace> {
        let final_tree = self.visits.get(code)?.tree.clone();
        let mut moves = Vec::new();
        let mut cursor = code;
        while let Some((parent, m)) = &self.visits[cursor].parent {
            moves.push(*m);
            cursor = parent;
        }
        moves.reverse();
        Some(MoveTrace {
            initial: self.visits[&self.start].tree.clone(),
            moves,
            final_tree,
        })
    }

    /// First class in discovery order whose delta sequence is `s`.
    pub fn first_with_delta(&self, s: &DeltaSequence) -> Option<&CanonicalCode> {
        self.order
            .iter()
            .find(|c| self.visits[*c].tree.delta_sequence() == *s)
    }
}

pub fn reachable_classes(t: &Tree) -> Result<BTreeSet<CanonicalCode>> {
    Ok(Reachability::explore(t)?.code_set())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Evidence {
    /// Degree-rule moves from the source to a tree with the target delta.
    Trace(MoveTrace),
    /// The whole class set reachable from the source; none has the target delta.
    Exhausted(Vec<CanonicalCode>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReachabilityCertificate {
    pub source: Tree,
    pub target: DeltaSequence,
    pub evidence: Evidence,
}

impl ReachabilityCertificate {
    /// Re-checks the certificate without trusting the search that produced it.
    ///
    /// A trace must replay under the degree rule and end at the target
    /// delta. An exhaustion set must contain the source, be closed under
    /// every degree-rule move and contain no tree with the target delta.
    pub fn check(&self) -> bool {
        match &self.evidence {
            Evidence::Trace(trace) => {
                trace.initial == self.source
                    && trace.verify().is_ok()
                    && trace.final_tree.delta_sequence() == self.target
            }
            Evidence::Exhausted(codes) => {
                codes.iter().any(|c| *c == self.source.canonical_code())
                    && is_closed(codes, |t| t.delta_sequence() != self.target)
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        matches!(self.evidence, Evidence::Trace(_))
    }
}

/// `true` if every code decodes to a tree satisfying `accept` and every
/// degree-rule move from it lands back inside `codes`.
fn is_closed(codes: &[CanonicalCode], accept: impl Fn(&Tree) -> bool) -> bool {
    let set: BTreeSet<&CanonicalCode> = codes.iter().collect();
    codes.iter().all(|code| {
        let Ok(tree) = Tree::from_canonical_code(code) else {
            return false;
        };
        accept(&tree)
            && tree.degree_rule_moves().iter().all(|m| {
                tree.move_branch(m.donor, m.gateway, m.target, true)
                    .map(|next| set.contains(&next.canonical_code()))
                    .unwrap_or(false)
            })
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub n: usize,
    pub holds: bool,
    /// One per (source class, strictly majorizing census target), in
    /// class order then census order. Negative entries are counterexamples.
    pub certificates: Vec<ReachabilityCertificate>,
    /// A reached class whose delta does not majorize the source delta.
    pub monotonicity_violation: Option<MoveTrace>,
}

/// For every tree class `T` and every census sequence strictly above
/// `delta(T)`, checks that some class reachable from `T` has that sequence,
/// and that nothing reachable falls below `delta(T)`.
pub fn verify_theorem(n: usize) -> Result<TheoremReport> {
    bound(n, MAX_REACHABILITY_NODES)?;
    let census = delta_census(n);
    let mut certificates = Vec::new();
    let mut monotonicity_violation = None;
    for tree in enumerate_classes(n)?.into_values() {
        let source_delta = tree.delta_sequence();
        let reach = Reachability::explore(&tree)?;
        if monotonicity_violation.is_none() {
            for code in reach.classes() {
                let d = reach.representative(code).expect("reached").delta_sequence();
                if !matches!(
                    compare(&source_delta, &d)?,
                    Comparison::Equal | Comparison::StrictlyBelow
                ) {
                    monotonicity_violation = reach.trace_to(code);
                    break;
                }
            }
        }
        for target in &census {
            if compare(&source_delta, target)? != Comparison::StrictlyBelow {
                continue;
            }
            let evidence = match reach.first_with_delta(target) {
                Some(code) => Evidence::Trace(reach.trace_to(code).expect("reached")),
                None => Evidence::Exhausted(reach.classes().to_vec()),
            };
            certificates.push(ReachabilityCertificate {
                source: tree.clone(),
                target: target.clone(),
                evidence,
            });
        }
    }
    let holds = monotonicity_violation.is_none() && certificates.iter().all(|c| c.is_positive());
    Ok(TheoremReport {
        n,
        holds,
        certificates,
        monotonicity_violation,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnreachablePair {
    pub source: Tree,
    pub target: Tree,
    /// Every class reachable from `source`; `target`'s class is not among them.
    pub reachable: Vec<CanonicalCode>,
}

impl UnreachablePair {
    /// Re-checks that `reachable` contains the source, is closed under
    /// degree-rule moves and misses the target's class.
    pub fn check(&self) -> bool {
        let target = self.target.canonical_code();
        self.reachable.contains(&self.source.canonical_code())
            && !self.reachable.contains(&target)
            && is_closed(&self.reachable, |_| true)
    }
}

/// Looks for a tree with delta `s` and a tree with delta `s_prime` such that
/// the second cannot be reached from the first. Returns `None` when every
/// target class is reachable from every source class.
pub fn find_unreachable_pair(
    n: usize,
    s: &DeltaSequence,
    s_prime: &DeltaSequence,
) -> Result<Option<UnreachablePair>> {
    bound(n, MAX_REACHABILITY_NODES)?;
    match compare(s, s_prime)? {
        Comparison::Equal => return Ok(None),
        Comparison::StrictlyBelow => {}
        _ => {
            return Err(Error::NotMajorized {
                source_seq: s.to_string(),
                target_seq: s_prime.to_string(),
            })
        }
    }
    let classes = enumerate_classes(n)?;
    let with = |d: &DeltaSequence| -> Vec<(&CanonicalCode, &Tree)> {
        classes.iter().filter(|(_, t)| t.delta_sequence() == *d).collect()
    };
    let targets = with(s_prime);
    for (_, source) in with(s) {
        let reach = Reachability::explore(source)?;
        if let Some((_, target)) = targets.iter().find(|(code, _)| !reach.contains(code)) {
            return Ok(Some(UnreachablePair {
                source: source.clone(),
                target: (*target).clone(),
                reachable: reach.classes().to_vec(),
            }));
        }
    }
    Ok(None)
}

/// Connected test graphs on `n` nodes, none of them a chain: the cycle and
/// the complete graph (for `n >= 3`), then `random` seeded random graphs.
pub fn sample_connected_graphs(n: usize, random: usize, seed: u64) -> Result<Vec<Graph>> {
    if n < 3 {
        // every connected graph on two nodes is a chain
        return Ok(Vec::new());
    }
    let mut out = vec![Graph::cycle(n)?, Graph::complete(n)?];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while out.len() < random + 2 {
        let mut edges: BTreeSet<(usize, usize)> = (1..n)
            .map(|v| (rng.gen_range(0..v), v))
            .collect();
        let density: f64 = rng.gen_range(0.0..0.5);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(density) {
                    edges.insert((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges.into_iter().collect::<Vec<_>>())?;
        if !g.is_chain() {
            out.push(g);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainMinimalityReport {
    pub n: usize,
    pub holds: bool,
    pub trees_checked: usize,
    pub graphs_checked: usize,
    /// Sequences that are not strictly above the chain sequence.
    pub failures: Vec<DeltaSequence>,
}

/// Checks that the chain's delta sequence lies strictly below that of every
/// other tree class and of every sampled connected graph.
pub fn verify_chain_minimal(n: usize, sample_graphs: &[Graph]) -> Result<ChainMinimalityReport> {
    bound(n, MAX_ENUMERATION_NODES)?;
    let chain = Tree::chain(n);
    let chain_delta = chain.delta_sequence();
    let chain_code = chain.canonical_code();
    let mut failures = Vec::new();
    let mut trees_checked = 0;
    for (code, tree) in enumerate_classes(n)? {
        if code == chain_code {
            continue;
        }
        trees_checked += 1;
        let d = tree.delta_sequence();
        if compare(&chain_delta, &d)? != Comparison::StrictlyBelow {
            failures.push(d);
        }
    }
    for (index, g) in sample_graphs.iter().enumerate() {
        let invalid = |reason: &str| Error::InvalidSample {
            index,
            reason: reason.into(),
        };
        if g.node_count() != n {
            return Err(invalid("wrong node count"));
        }
        if !g.is_connected() {
            return Err(invalid("not connected"));
        }
        if g.is_chain() {
            return Err(invalid("is a chain"));
        }
        let d = g.delta_sequence()?;
        if compare(&chain_delta, &d)? != Comparison::StrictlyBelow {
            failures.push(d);
        }
    }
    Ok(ChainMinimalityReport {
        n,
        holds: failures.is_empty(),
        trees_checked,
        graphs_checked: sample_graphs.len(),
        failures,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvexViolation {
    pub lower: DeltaSequence,
    pub upper: DeltaSequence,
    pub phi: ConvexFn,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvexReport {
    pub n: usize,
    pub holds: bool,
    pub pairs_checked: usize,
    pub violation: Option<ConvexViolation>,
}

/// For each comparable census pair `x ⪯ y` and each function of the test
/// family, checks `Σφ(x) ≤ Σφ(y)`. Incomparable pairs are skipped.
pub fn verify_convex_characterization(n: usize) -> Result<ConvexReport> {
    bound(n, MAX_CONVEX_NODES)?;
    let census = delta_census(n);
    let mut pairs_checked = 0;
    for x in &census {
        for y in &census {
            if !matches!(compare(x, y)?, Comparison::Equal | Comparison::StrictlyBelow) {
                continue;
            }
            pairs_checked += 1;
            for phi in ConvexFn::TEST_FAMILY {
                if convex_functional(x, phi) > convex_functional(y, phi) {
                    return Ok(ConvexReport {
                        n,
                        holds: false,
                        pairs_checked,
                        violation: Some(ConvexViolation {
                            lower: x.clone(),
                            upper: y.clone(),
                            phi,
                        }),
                    });
                }
            }
        }
    }
    Ok(ConvexReport {
        n,
        holds: true,
        pairs_checked,
        violation: None,
    })
}

/// Covering relations of the majorization order on the census.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseDiagram {
    pub n: usize,
    pub nodes: Vec<DeltaSequence>,
    /// `(lower, upper)` index pairs into `nodes`, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl HasseDiagram {
    pub fn to_dot(&self) -> String {
        let mut out = format!("digraph hasse_{} {{\n  rankdir=BT;\n", self.n);
        for (k, s) in self.nodes.iter().enumerate() {
            out.push_str(&format!("  n{k} [label=\"{s}\"];\n"));
        }
        for (a, b) in &self.edges {
            out.push_str(&format!("  n{a} -> n{b};\n"));
        }
        out.push_str("}\n");
        out
    }

    /// `true` if a directed path leads from `from` up to `to`.
    pub fn has_path(&self, from: usize, to: usize) -> bool {
        let mut up: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(a, b) in &self.edges {
            up.entry(a).or_default().push(b);
        }
        let mut seen = BTreeSet::from([from]);
        let mut stack = vec![from];
        while let Some(u) = stack.pop() {
            if u == to {
                return true;
            }
            for &v in up.get(&u).into_iter().flatten() {
                if seen.insert(v) {
                    stack.push(v);
                }
            }
        }
        false
    }
}

pub fn hasse_diagram(n: usize) -> Result<HasseDiagram> {
    bound(n, MAX_HASSE_NODES)?;
    let nodes = delta_census(n);
    let m = nodes.len();
    let mut below = vec![vec![false; m]; m];
    for a in 0..m {
        for b in 0..m {
            below[a][b] = compare(&nodes[a], &nodes[b])? == Comparison::StrictlyBelow;
        }
    }
    let mut edges = Vec::new();
    for a in 0..m {
        for b in 0..m {
            if below[a][b] && !(0..m).any(|c| below[a][c] && below[c][b]) {
                edges.push((a, b));
            }
        }
    }
    Ok(HasseDiagram { n, nodes, edges })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[i64]) -> DeltaSequence {
        DeltaSequence::from_degrees(v).unwrap()
    }

    #[test]
    fn total_order_small_and_witness_at_eight() {
        assert!(check_total_order(7).unwrap().is_total);
        let r = check_total_order(8).unwrap();
        assert!(!r.is_total);
        assert_eq!(
            r.witness,
            Some((seq(&[5, 2, 2, 1, 1, 1, 1, 1]), seq(&[4, 4, 1, 1, 1, 1, 1, 1])))
        );
    }

    #[test]
    fn star_is_closed_and_chain_reaches_everything() {
        let star = reachable_classes(&Tree::star(7)).unwrap();
        assert_eq!(star.len(), 1);
        for n in 2..=8 {
            let reach = reachable_classes(&Tree::chain(n)).unwrap();
            let all: BTreeSet<_> = enumerate_classes(n).unwrap().into_keys().collect();
            assert_eq!(reach, all, "n = {n}");
        }
    }

    #[test]
    fn traces_replay() {
        let reach = Reachability::explore(&Tree::chain(7)).unwrap();
        for code in reach.classes() {
            let trace = reach.trace_to(code).unwrap();
            trace.verify().unwrap();
            assert_eq!(trace.final_tree.canonical_code(), *code);
        }
    }

    #[test]
    fn theorem_small_n() {
        for n in 1..=7 {
            let r = verify_theorem(n).unwrap();
            assert!(r.holds, "n = {n}");
            assert!(r.certificates.iter().all(|c| c.check()));
        }
        assert!(verify_theorem(3).unwrap().certificates.is_empty());
    }

    #[test]
    fn unreachable_pair_absent_for_equal_sequences() {
        let s = seq(&[3, 2, 1, 1, 1]);
        assert_eq!(find_unreachable_pair(5, &s, &s).unwrap(), None);
        assert!(matches!(
            find_unreachable_pair(5, &seq(&[4, 1, 1, 1, 1]), &s),
            Err(Error::NotMajorized { .. })
        ));
    }

    #[test]
    fn tampered_exhaustion_certificate_fails() {
        let cert = ReachabilityCertificate {
            source: Tree::chain(5),
            target: seq(&[4, 1, 1, 1, 1]),
            evidence: Evidence::Exhausted(vec![Tree::chain(5).canonical_code()]),
        };
        assert!(!cert.check());
        let closed = ReachabilityCertificate {
            source: Tree::star(5),
            target: seq(&[2, 2, 2, 1, 1]),
            evidence: Evidence::Exhausted(vec![Tree::star(5).canonical_code()]),
        };
        assert!(closed.check());
    }

    #[test]
    fn chain_minimality_examples() {
        let graphs = sample_connected_graphs(6, 20, 7).unwrap();
        assert_eq!(graphs.len(), 22);
        let r = verify_chain_minimal(6, &graphs).unwrap();
        assert!(r.holds);
        assert_eq!(r.trees_checked, 5);
        let bad = [Graph::new(6, Tree::chain(6).edges()).unwrap()];
        assert!(matches!(
            verify_chain_minimal(6, &bad),
            Err(Error::InvalidSample { index: 0, .. })
        ));
        let chain = DeltaSequence::chain(4);
        let k4 = Graph::complete(4).unwrap().delta_sequence().unwrap();
        assert_eq!(compare(&chain, &k4).unwrap(), Comparison::StrictlyBelow);
        assert_eq!(compare(&chain, &chain).unwrap(), Comparison::Equal);
    }

    #[test]
    fn sample_graphs_are_reproducible() {
        assert_eq!(
            sample_connected_graphs(7, 10, 1).unwrap(),
            sample_connected_graphs(7, 10, 1).unwrap()
        );
        assert_ne!(
            sample_connected_graphs(7, 10, 1).unwrap(),
            sample_connected_graphs(7, 10, 2).unwrap()
        );
    }

    #[test]
    fn convex_characterization_small() {
        for n in 2..=7 {
            assert!(verify_convex_characterization(n).unwrap().holds);
        }
        assert!(verify_convex_characterization(10).is_err());
    }

    #[test]
    fn hasse_small() {
        let h = hasse_diagram(3).unwrap();
        assert_eq!(h.nodes.len(), 1);
        assert!(h.edges.is_empty());
        let h = hasse_diagram(4).unwrap();
        assert_eq!(h.nodes[h.edges[0].0], seq(&[2, 2, 1, 1]));
        assert_eq!(h.nodes[h.edges[0].1], seq(&[3, 1, 1, 1]));
        assert_eq!(h.edges.len(), 1);
        assert!(h.to_dot().contains("n1 -> n0;"));
    }
}
