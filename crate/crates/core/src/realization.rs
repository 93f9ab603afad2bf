//! Turning degree sequences and transfer plans into concrete trees.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sequence::DeltaSequence;
use crate::transfer::{plan_transfers, TransferPlan, TransferStep};
use crate::tree::{CanonicalCode, Move, Tree};

/// A tree, a list of branch moves applied to it in order, and the result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveTrace {
    pub initial: Tree,
    pub moves: Vec<Move>,
    #[serde(rename = "final")]
    pub final_tree: Tree,
}

impl MoveTrace {
    /// Re-applies the moves with the degree rule enforced and checks that
    /// they end at `final_tree`.
    pub fn verify(&self) -> Result<()> {
        let mut t = self.initial.clone();
        for (k, m) in self.moves.iter().enumerate() {
            t = t
                .move_branch(m.donor, m.gateway, m.target, true)
                .map_err(|e| Error::InvalidPlan {
                    step: k + 1,
                    reason: e.to_string(),
                })?;
        }
        if t != self.final_tree {
            return Err(Error::InvalidPlan {
                step: self.moves.len(),
                reason: "moves do not end at the recorded final tree".into(),
            });
        }
        Ok(())
    }

    /// Trees after each move, starting with `initial`.
    pub fn intermediates(&self) -> Result<Vec<Tree>> {
        let mut out = vec![self.initial.clone()];
        for m in &self.moves {
            let next = out
                .last()
                .expect("non-empty")
                .move_branch(m.donor, m.gateway, m.target, true)?;
            out.push(next);
        }
        Ok(out)
    }

    /// Initial tree block, one `donor gateway target` line per move, then
    /// the final tree block.
    pub fn to_text(&self) -> String {
        let mut out = self.initial.to_text();
        for m in &self.moves {
            out.push_str(&format!("{m}\n"));
        }
        out.push_str(&self.final_tree.to_text());
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let lines: Vec<(usize, Vec<&str>)> = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.split_whitespace().collect::<Vec<_>>()))
            .filter(|(_, toks)| !toks.is_empty() && !toks[0].starts_with('#'))
            .collect();
        let mut pos = 0;
        let initial = take_tree_block(&lines, &mut pos)?;
        let mut moves = Vec::new();
        while let Some((line, toks)) = lines.get(pos) {
            if toks.len() != 3 {
                break;
            }
            let nums = toks
                .iter()
                .map(|t| t.parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::Parse {
                    line: *line,
                    message: format!("bad move: {e}"),
                })?;
            moves.push(Move {
                donor: nums[0],
                gateway: nums[1],
                target: nums[2],
            });
            pos += 1;
        }
        let final_tree = take_tree_block(&lines, &mut pos)?;
        if let Some((line, _)) = lines.get(pos) {
            return Err(Error::Parse {
                line: *line,
                message: "trailing content after final tree".into(),
            });
        }
        Ok(MoveTrace {
            initial,
            moves,
            final_tree,
        })
    }
}

fn take_tree_block(lines: &[(usize, Vec<&str>)], pos: &mut usize) -> Result<Tree> {
    let (line, header) = lines.get(*pos).ok_or(Error::Parse {
        line: lines.last().map_or(1, |l| l.0),
        message: "missing tree block".into(),
    })?;
    let n = match header[..] {
        [tok] => tok.parse::<usize>().map_err(|e| Error::Parse {
            line: *line,
            message: format!("bad node count: {e}"),
        })?,
        _ => {
            return Err(Error::Parse {
                line: *line,
                message: "expected a node count".into(),
            })
        }
    };
    let block = lines
        .get(*pos..*pos + n)
        .ok_or(Error::Parse {
            line: *line,
            message: format!("tree block needs {} edge lines", n.saturating_sub(1)),
        })?
        .iter()
        .map(|(_, toks)| toks.join(" "))
        .collect::<Vec<_>>()
        .join("\n");
    *pos += n;
    Tree::from_text(&block)
}

/// Tie-break used when several nodes or branches qualify for a transfer step.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum TieBreak {
    /// Smallest node label, then the branch with the smallest gateway label.
    #[default]
    Smallest,
    /// Largest node label, then the branch with the largest gateway label.
    Largest,
}

fn require_feasible(s: &DeltaSequence) -> Result<()> {
    if s.is_tree_feasible() {
        Ok(())
    } else {
        Err(Error::NotTreeFeasible {
            sequence: s.to_string(),
            total: s.total(),
            expected: 2 * (s.len() as u64 - 1),
        })
    }
}

/// Realizes each step of `plan` as one degree-rule branch move on `t`.
pub fn replay_plan_on_tree(t: &Tree, plan: &TransferPlan) -> Result<MoveTrace> {
    replay_plan_on_tree_with(t, plan, TieBreak::Smallest)
}

pub fn replay_plan_on_tree_with(t: &Tree, plan: &TransferPlan, tie: TieBreak) -> Result<MoveTrace> {
    replay_plan_on_tree_by(t, plan, |_, candidates| match tie {
        TieBreak::Smallest => candidates.first().copied(),
        TieBreak::Largest => candidates.last().copied(),
    })
}

/// Every move that realizes `step` on `current`: a receiver whose degree is
/// the value at the receiving rank, a distinct donor whose degree is the
/// value at the donating rank, and a branch of the donor avoiding the
/// receiver. Sorted by receiver, then donor, then gateway.
pub fn step_candidates(current: &Tree, step: &TransferStep) -> Result<Vec<Move>> {
    let (Some(receive_deg), Some(donate_deg)) =
        (step.before.at_rank(step.receiver), step.before.at_rank(step.donor))
    else {
        return Err(Error::RankOutOfRange {
            rank: step.receiver.max(step.donor),
            len: step.before.len(),
        });
    };
    let with_degree = |d: u32| (0..current.node_count()).filter(move |&v| current.degree(v) == d as usize);
    let mut out = Vec::new();
    for target in with_degree(receive_deg) {
        for donor in with_degree(donate_deg).filter(|&v| v != target) {
            for &gateway in current.neighbors(donor) {
                if !current.branch(donor, gateway)?.contains(target) {
                    out.push(Move {
                        donor,
                        gateway,
                        target,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Replays `plan`, letting `choose` pick one of the [`step_candidates`] at
/// every step.
pub fn replay_plan_on_tree_by<F>(t: &Tree, plan: &TransferPlan, mut choose: F) -> Result<MoveTrace>
where
    F: FnMut(&Tree, &[Move]) -> Option<Move>,
{
    check_source(t, plan)?;
    let mut current = t.clone();
    let mut moves = Vec::with_capacity(plan.steps.len());
    for (k, step) in plan.steps.iter().enumerate() {
        let bad = |reason: &str| Error::InvalidPlan {
            step: k + 1,
            reason: reason.to_string(),
        };
        let candidates = step_candidates(&current, step)?;
        let m = choose(&current, &candidates).ok_or_else(|| bad("no move realizes this step"))?;
        if !candidates.contains(&m) {
            return Err(bad("chosen move does not realize this step"));
        }
        current = current.move_branch(m.donor, m.gateway, m.target, true)?;
        if current.delta_sequence() != step.after {
            return Err(bad("move does not reproduce the recorded sequence"));
        }
        moves.push(m);
    }
    Ok(MoveTrace {
        initial: t.clone(),
        moves,
        final_tree: current,
    })
}

/// All isomorphism classes of final trees obtainable by replaying `plan` on
/// `t` under any choice of candidates, each with one trace reaching it.
pub fn all_replays(t: &Tree, plan: &TransferPlan) -> Result<BTreeMap<CanonicalCode, MoveTrace>> {
    check_source(t, plan)?;
    // one literal tree per class after each step, with the moves that led there
    let mut frontier: BTreeMap<CanonicalCode, (Tree, Vec<Move>)> =
        BTreeMap::from([(t.canonical_code(), (t.clone(), Vec::new()))]);
    for step in &plan.steps {
        let mut next = BTreeMap::new();
        for (tree, moves) in frontier.into_values() {
            for m in step_candidates(&tree, step)? {
                let after = tree.move_branch(m.donor, m.gateway, m.target, true)?;
                let mut path = moves.clone();
                path.push(m);
                next.entry(after.canonical_code()).or_insert((after, path));
            }
        }
        frontier = next;
    }
    Ok(frontier
        .into_iter()
        .map(|(code, (final_tree, moves))| {
            let trace = MoveTrace {
                initial: t.clone(),
                moves,
                final_tree,
            };
            (code, trace)
        })
        .collect())
}

fn check_source(t: &Tree, plan: &TransferPlan) -> Result<()> {
    let actual = t.delta_sequence();
    if actual != plan.source {
        return Err(Error::SourceMismatch {
            expected: plan.source.to_string(),
            actual: actual.to_string(),
        });
    }
    Ok(())
}

/// Starts from the chain and follows the transfer plan up to `target`.
pub fn realize_from_chain(target: &DeltaSequence) -> Result<MoveTrace> {
    require_feasible(target)?;
    let chain = Tree::chain(target.len());
    let plan = plan_transfers(&chain.delta_sequence(), target)?;
    replay_plan_on_tree(&chain, &plan)
}

/// Caterpillar realization: nodes of degree at least two form a spine in
/// non-increasing degree order and leaves fill up the remaining degree.
pub fn realize_direct(target: &DeltaSequence) -> Result<Tree> {
    require_feasible(target)?;
    let n = target.len();
    let spine: Vec<usize> = target
        .values()
        .iter()
        .map(|&d| d as usize)
        .filter(|&d| d >= 2)
        .collect();
    if spine.is_empty() {
        // (0) or (1,1)
        return Ok(Tree::chain(n));
    }
    let mut edges: Vec<(usize, usize)> = (1..spine.len()).map(|k| (k - 1, k)).collect();
    let mut next_leaf = spine.len();
    for (k, &d) in spine.iter().enumerate() {
        let spine_neighbors = usize::from(k > 0) + usize::from(k + 1 < spine.len());
        for _ in spine_neighbors..d {
            edges.push((k, next_leaf));
            next_leaf += 1;
        }
    }
    debug_assert_eq!(next_leaf, n);
    Tree::new(n, &edges)
}
