//! Degree sequences, Lorenz curves and the majorization order.
//!
//! A [`DeltaSequence`] is always stored ranked in non-increasing order.
//! Comparison uses prefix-sum dominance, which for sequences of equal total
//! is the same thing as pointwise dominance of the Lorenz curves.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Non-increasing sequence of positive node degrees.
///
/// The only sequence admitted with a zero entry is `(0)`, the degree
/// sequence of the single-node tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct DeltaSequence {
    values: Vec<u32>,
}

impl DeltaSequence {
    /// Builds a sequence from raw degrees, re-sorting them non-increasingly.
    /// Tree feasibility is not required; see [`DeltaSequence::is_tree_feasible`].
    pub fn from_degrees(raw: &[i64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptySequence);
        }
        if raw == [0] {
            return Ok(Self { values: vec![0] });
        }
        let mut values = Vec::with_capacity(raw.len());
        for &d in raw {
            if d <= 0 {
                return Err(Error::NonPositiveDegree(d));
            }
            let d = u32::try_from(d).map_err(|_| Error::Parse {
                line: 1,
                message: format!("degree {d} too large"),
            })?;
            values.push(d);
        }
        Ok(Self::from_sorted_unchecked(values))
    }

    /// Sorts `values` and wraps them. Callers guarantee positivity.
    pub(crate) fn from_sorted_unchecked(mut values: Vec<u32>) -> Self {
        values.sort_unstable_by(|a, b| b.cmp(a));
        Self { values }
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value at 1-based `rank`.
    pub fn at_rank(&self, rank: usize) -> Option<u32> {
        rank.checked_sub(1).and_then(|k| self.values.get(k).copied())
    }

    pub fn total(&self) -> u64 {
        self.values.iter().map(|&v| u64::from(v)).sum()
    }

    /// `true` iff every value is at least one and the total is `2(n-1)`.
    pub fn is_tree_feasible(&self) -> bool {
        let n = self.values.len() as u64;
        let positive = n == 1 || self.values.iter().all(|&v| v >= 1);
        positive && self.total() == 2 * (n - 1)
    }

    /// Cumulative sums; entry `k` is the sum of the `k + 1` largest values.
    pub fn prefix_sums(&self) -> Vec<u64> {
        self.values
            .iter()
            .scan(0u64, |acc, &v| {
                *acc += u64::from(v);
                Some(*acc)
            })
            .collect()
    }

    /// Majorization comparison; see [`compare`].
    pub fn compare(&self, other: &Self) -> Result<Comparison> {
        compare(self, other)
    }

    pub fn lorenz_curve(&self, normalized: bool) -> LorenzCurve {
        lorenz_curve(self, normalized)
    }

    /// The delta sequence of the `n`-node chain.
    pub fn chain(n: usize) -> Self {
        assert!(n >= 1, "chain needs at least one node");
        match n {
            1 => Self { values: vec![0] },
            _ => {
                let mut values = vec![2; n];
                values[n - 2] = 1;
                values[n - 1] = 1;
                Self { values }
            }
        }
    }
}

/// Parses a raw sequence and requires it to be the degree sequence of a tree.
pub fn validate_tree_sequence(raw: &[i64]) -> Result<DeltaSequence> {
    let seq = DeltaSequence::from_degrees(raw)?;
    if !seq.is_tree_feasible() {
        return Err(Error::NotTreeFeasible {
            sequence: seq.to_string(),
            total: seq.total(),
            expected: 2 * (seq.len() as u64 - 1),
        });
    }
    Ok(seq)
}

impl fmt::Display for DeltaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, v) in self.values.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// Splits a sequence literal such as `(5,2,2,1)` or `5 2 2 1` into integers.
/// The order of the values is irrelevant.
pub fn parse_raw_sequence(text: &str) -> Result<Vec<i64>> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('(')
        .map(|s| s.strip_suffix(')'))
        .unwrap_or(Some(trimmed))
        .ok_or_else(|| Error::Parse {
            line: 1,
            message: format!("unbalanced parentheses in {trimmed:?}"),
        })?;
    inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|tok| !tok.is_empty())
        .map(|tok| {
            tok.parse::<i64>().map_err(|e| Error::Parse {
                line: 1,
                message: format!("bad integer {tok:?}: {e}"),
            })
        })
        .collect()
}

impl FromStr for DeltaSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_degrees(&parse_raw_sequence(s)?)
    }
}

impl TryFrom<Vec<i64>> for DeltaSequence {
    type Error = Error;

    fn try_from(raw: Vec<i64>) -> Result<Self> {
        Self::from_degrees(&raw)
    }
}

impl From<DeltaSequence> for Vec<i64> {
    fn from(s: DeltaSequence) -> Self {
        s.values.into_iter().map(i64::from).collect()
    }
}

/// Outcome of comparing two sequences in the majorization order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Comparison {
    Equal,
    /// The left sequence is strictly majorized by the right one.
    StrictlyBelow,
    /// The left sequence strictly majorizes the right one.
    StrictlyAbove,
    Incomparable,
}

impl Comparison {
    pub fn reverse(self) -> Self {
        match self {
            Comparison::StrictlyBelow => Comparison::StrictlyAbove,
            Comparison::StrictlyAbove => Comparison::StrictlyBelow,
            other => other,
        }
    }

    pub fn is_comparable(self) -> bool {
        self != Comparison::Incomparable
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Comparison::Equal => "Equal",
            Comparison::StrictlyBelow => "StrictlyBelow",
            Comparison::StrictlyAbove => "StrictlyAbove",
            Comparison::Incomparable => "Incomparable",
        })
    }
}

/// Generalized majorization: `x` is below `y` when every prefix sum of `x`
/// is at most the matching prefix sum of `y`.
///
/// Totals need not agree. When they do, the result coincides with Lorenz
/// dominance.
pub fn compare(x: &DeltaSequence, y: &DeltaSequence) -> Result<Comparison> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    let (mut some_less, mut some_greater) = (false, false);
    for (px, py) in x.prefix_sums().into_iter().zip(y.prefix_sums()) {
        some_less |= px < py;
        some_greater |= px > py;
    }
    Ok(match (some_less, some_greater) {
        (false, false) => Comparison::Equal,
        (true, false) => Comparison::StrictlyBelow,
        (false, true) => Comparison::StrictlyAbove,
        (true, true) => Comparison::Incomparable,
    })
}

pub type Rational = Ratio<u64>;

/// Polygonal Lorenz curve with exact rational vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LorenzCurve {
    pub points: Vec<(Rational, Rational)>,
    pub normalized: bool,
}

impl LorenzCurve {
    /// `true` when this curve lies on or above `other` at every vertex.
    ///
    /// Both curves must have the same abscissae, which holds for sequences
    /// of the same length.
    pub fn dominates(&self, other: &LorenzCurve) -> bool {
        self.points.len() == other.points.len()
            && self
                .points
                .iter()
                .zip(&other.points)
                .all(|((xa, ya), (xb, yb))| xa == xb && ya >= yb)
    }

    /// Successive segment slopes never increase.
    pub fn is_concave(&self) -> bool {
        let slopes: Vec<Rational> = self
            .points
            .windows(2)
            .map(|w| (w[1].1 - w[0].1) / (w[1].0 - w[0].0))
            .collect();
        slopes.windows(2).all(|w| w[0] >= w[1])
    }
}

/// Vertices `(k/n, S_k/S_n)` when normalized, `(k, S_k)` otherwise, for
/// `k = 0..=n`. A zero-total sequence normalizes to the diagonal.
pub fn lorenz_curve(s: &DeltaSequence, normalized: bool) -> LorenzCurve {
    let n = s.len() as u64;
    let total = s.total();
    let points = std::iter::once(0)
        .chain(s.prefix_sums())
        .enumerate()
        .map(|(k, sum)| {
            let k = k as u64;
            if !normalized {
                (Rational::from_integer(k), Rational::from_integer(sum))
            } else if total == 0 {
                (Rational::new(k, n), Rational::new(k, n))
            } else {
                (Rational::new(k, n), Rational::new(sum, total))
            }
        })
        .collect();
    LorenzCurve { points, normalized }
}

/// Convex functions used to witness the convex-sum characterization of
/// majorization on integer sequences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConvexFn {
    Identity,
    Square,
    Cube,
    /// `t -> max(t - c, 0)`
    Hinge(u32),
}

impl ConvexFn {
    pub const TEST_FAMILY: [ConvexFn; 6] = [
        ConvexFn::Identity,
        ConvexFn::Square,
        ConvexFn::Cube,
        ConvexFn::Hinge(1),
        ConvexFn::Hinge(2),
        ConvexFn::Hinge(3),
    ];

    pub fn eval(self, t: u32) -> i128 {
        let t = i128::from(t);
        match self {
            ConvexFn::Identity => t,
            ConvexFn::Square => t * t,
            ConvexFn::Cube => t * t * t,
            ConvexFn::Hinge(c) => (t - i128::from(c)).max(0),
        }
    }
}

impl fmt::Display for ConvexFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConvexFn::Identity => f.write_str("t"),
            ConvexFn::Square => f.write_str("t^2"),
            ConvexFn::Cube => f.write_str("t^3"),
            ConvexFn::Hinge(c) => write!(f, "max(t-{c},0)"),
        }
    }
}

/// `Σ phi(value)` over the sequence.
pub fn convex_functional(s: &DeltaSequence, phi: ConvexFn) -> i128 {
    s.values().iter().map(|&v| phi.eval(v)).sum()
}
