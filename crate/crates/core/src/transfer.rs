//! Basic transfers (move one unit from a lower rank to a higher rank) and
//! plans that climb the majorization order from one sequence to another.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sequence::{compare, parse_raw_sequence, Comparison, DeltaSequence};

/// One basic transfer. Ranks are 1-based positions in `before`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransferStep {
    pub receiver: usize,
    pub donor: usize,
    pub before: DeltaSequence,
    pub after: DeltaSequence,
}

impl fmt::Display for TransferStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} | {} -> {}",
            self.receiver, self.donor, self.before, self.after
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransferPlan {
    pub source: DeltaSequence,
    pub target: DeltaSequence,
    pub steps: Vec<TransferStep>,
}

/// Adds one to rank `receiver`, removes one from rank `donor` and re-sorts.
pub fn basic_transfer(s: &DeltaSequence, receiver: usize, donor: usize) -> Result<DeltaSequence> {
    let len = s.len();
    for rank in [receiver, donor] {
        if rank == 0 || rank > len {
            return Err(Error::RankOutOfRange { rank, len });
        }
    }
    if receiver == donor {
        return Err(Error::SameRank(receiver));
    }
    let mut values = s.values().to_vec();
    if values[donor - 1] < 2 {
        return Err(Error::DonorWouldVanish(donor));
    }
    values[receiver - 1] += 1;
    values[donor - 1] -= 1;
    Ok(DeltaSequence::from_sorted_unchecked(values))
}

/// Builds the transfer plan from `y` up to `x`, where `y` must be majorized by `x`.
///
/// Each step takes the receiver as the first rank where `y` falls short of
/// `x` and the donor as the first rank where `y` exceeds `x`, then re-sorts.
pub fn plan_transfers(y: &DeltaSequence, x: &DeltaSequence) -> Result<TransferPlan> {
    if y.len() != x.len() {
        return Err(Error::LengthMismatch(y.len(), x.len()));
    }
    if y.total() != x.total() {
        return Err(Error::TotalMismatch(y.total(), x.total()));
    }
    match compare(y, x)? {
        Comparison::Equal | Comparison::StrictlyBelow => {}
        _ => {
            return Err(Error::NotMajorized {
                source_seq: y.to_string(),
                target_seq: x.to_string(),
            })
        }
    }

    let mut steps = Vec::new();
    let mut current = y.clone();
    while current != *x {
        let pairs = || current.values().iter().zip(x.values());
        let receiver = pairs().position(|(c, t)| c < t).expect("short rank exists") + 1;
        let donor = pairs().position(|(c, t)| c > t).expect("surplus rank exists") + 1;
        let after = basic_transfer(&current, receiver, donor)?;
        steps.push(TransferStep {
            receiver,
            donor,
            before: current,
            after: after.clone(),
        });
        current = after;
    }
    Ok(TransferPlan {
        source: y.clone(),
        target: x.clone(),
        steps,
    })
}

/// Re-applies every step of `plan` and returns the final sequence.
///
/// Each step must start where the previous one ended, move a unit from a
/// lower rank to a strictly higher one, and record the re-sorted result.
pub fn replay(plan: &TransferPlan) -> Result<DeltaSequence> {
    let mut current = plan.source.clone();
    for (k, step) in plan.steps.iter().enumerate() {
        let invalid = |reason: String| Error::InvalidPlan { step: k + 1, reason };
        if step.before != current {
            return Err(invalid(format!(
                "starts from {} but the sequence is {}",
                step.before, current
            )));
        }
        if step.receiver >= step.donor {
            return Err(invalid(format!(
                "receiver rank {} is not above donor rank {}",
                step.receiver, step.donor
            )));
        }
        let after = basic_transfer(&current, step.receiver, step.donor)
            .map_err(|e| invalid(e.to_string()))?;
        if after != step.after {
            return Err(invalid(format!(
                "records {} but the transfer gives {}",
                step.after, after
            )));
        }
        current = after;
    }
    if current != plan.target {
        return Err(Error::InvalidPlan {
            step: plan.steps.len(),
            reason: format!("ends at {} instead of {}", current, plan.target),
        });
    }
    Ok(current)
}

impl TransferPlan {
    /// Line-oriented form: a `# source -> target` header then one
    /// `i j | before -> after` line per step.
    pub fn to_text(&self) -> String {
        let mut out = format!("# {} -> {}\n", self.source, self.target);
        for step in &self.steps {
            out.push_str(&step.to_string());
            out.push('\n');
        }
        out
    }

    /// Parses [`TransferPlan::to_text`] output. Without a header, source
    /// and target are taken from the first and last step.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut header = None;
        let mut steps = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = idx + 1;
            let err = |message: String| Error::Parse { line: lineno, message };
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                let (a, b) = rest
                    .split_once("->")
                    .ok_or_else(|| err("header needs `source -> target`".into()))?;
                header = Some((parse_seq(a, lineno)?, parse_seq(b, lineno)?));
                continue;
            }
            let (ranks, seqs) = line
                .split_once('|')
                .ok_or_else(|| err("missing `|`".into()))?;
            let ranks: Vec<usize> = ranks
                .split_whitespace()
                .map(|t| t.parse().map_err(|e| err(format!("bad rank {t:?}: {e}"))))
                .collect::<Result<_>>()?;
            let [receiver, donor] = ranks[..] else {
                return Err(err("expected two ranks".into()));
            };
            let (before, after) = seqs
                .split_once("->")
                .ok_or_else(|| err("missing `->`".into()))?;
            steps.push(TransferStep {
                receiver,
                donor,
                before: parse_seq(before, lineno)?,
                after: parse_seq(after, lineno)?,
            });
        }
        let (source, target) = match (header, steps.first(), steps.last()) {
            (Some(h), _, _) => h,
            (None, Some(first), Some(last)) => (first.before.clone(), last.after.clone()),
            _ => {
                return Err(Error::Parse {
                    line: 1,
                    message: "empty plan without a header".into(),
                })
            }
        };
        Ok(TransferPlan {
            source,
            target,
            steps,
        })
    }
}

fn parse_seq(text: &str, line: usize) -> Result<DeltaSequence> {
    let raw = parse_raw_sequence(text).map_err(|e| match e {
        Error::Parse { message, .. } => Error::Parse { line, message },
        other => other,
    })?;
    DeltaSequence::from_degrees(&raw)
}
