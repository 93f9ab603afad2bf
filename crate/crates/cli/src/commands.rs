use std::fmt::Write as _;
use std::path::Path;

use majtree::sequence::parse_raw_sequence;
use majtree::verification::{
    hasse_diagram, sample_connected_graphs, verify_convex_characterization, ChainMinimalityReport,
    ConvexReport, TheoremReport,
};
use majtree::{
    check_total_order, compare as compare_seqs, delta_census, enumerate_trees, lorenz_curve,
    plan_transfers, realize_direct, realize_from_chain, validate_tree_sequence,
    verify_chain_minimal, verify_theorem, CanonicalCode, Comparison, DeltaSequence, Error,
    MoveTrace, OrderReport, Tree,
};
use serde::{Deserialize, Serialize};

use crate::{Method, OutputMode};

/// Everything that ends the process with a non-zero status.
#[derive(Debug)]
pub enum Failure {
    /// Parse or validation error (exit 2).
    Invalid(String),
    /// The compared sequences are incomparable (exit 3); carries the report.
    Incomparable(String),
    /// Transfer planning precondition failed (exit 4).
    NotMajorized(String),
    /// A verification check failed (exit 5); carries the report.
    Verification(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Invalid(_) => 2,
            Failure::Incomparable(_) => 3,
            Failure::NotMajorized(_) => 4,
            Failure::Verification(_) => 5,
        }
    }

    pub fn stdout(&self) -> Option<&str> {
        match self {
            Failure::Incomparable(out) | Failure::Verification(out) => Some(out),
            _ => None,
        }
    }

    pub fn message(&self) -> Option<String> {
        match self {
            Failure::Invalid(msg) | Failure::NotMajorized(msg) => Some(msg.clone()),
            Failure::Verification(_) => Some("verification failed".into()),
            Failure::Incomparable(_) => None,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotMajorized { .. } => Failure::NotMajorized(e.to_string()),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("serializable report");
    out.push('\n');
    out
}

/// Parses a sequence, warning on stderr when it had to be re-sorted.
fn parse_sequence(text: &str) -> Result<DeltaSequence, Failure> {
    let raw = parse_raw_sequence(text)?;
    let seq = DeltaSequence::from_degrees(&raw)?;
    if raw.windows(2).any(|w| w[0] < w[1]) {
        eprintln!("note: re-sorted {text:?} to {seq}");
    }
    Ok(seq)
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

#[derive(Serialize, Deserialize)]
pub struct CompareReport {
    pub left: DeltaSequence,
    pub right: DeltaSequence,
    pub result: Comparison,
    pub left_prefix_sums: Vec<u64>,
    pub right_prefix_sums: Vec<u64>,
}

pub fn compare(left: &str, right: &str, mode: OutputMode) -> Result<String, Failure> {
    let (left, right) = (parse_sequence(left)?, parse_sequence(right)?);
    let result = compare_seqs(&left, &right)?;
    let report = CompareReport {
        left_prefix_sums: left.prefix_sums(),
        right_prefix_sums: right.prefix_sums(),
        left,
        right,
        result,
    };
    let out = match mode {
        OutputMode::Structured => json(&report),
        _ => format!(
            "{}\n{} prefix sums: {}\n{} prefix sums: {}\n",
            report.result,
            report.left,
            join(&report.left_prefix_sums),
            report.right,
            join(&report.right_prefix_sums)
        ),
    };
    if result == Comparison::Incomparable {
        Err(Failure::Incomparable(out))
    } else {
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
pub struct LorenzPoint {
    pub k: usize,
    pub x: String,
    pub y: String,
}

#[derive(Serialize, Deserialize)]
pub struct LorenzReport {
    pub sequence: DeltaSequence,
    pub normalized: bool,
    pub points: Vec<LorenzPoint>,
}

pub fn lorenz(sequence: &str, normalized: bool, mode: OutputMode) -> Result<String, Failure> {
    let sequence = parse_sequence(sequence)?;
    let curve = lorenz_curve(&sequence, normalized);
    let points: Vec<LorenzPoint> = curve
        .points
        .iter()
        .enumerate()
        .map(|(k, (x, y))| LorenzPoint {
            k,
            x: x.to_string(),
            y: y.to_string(),
        })
        .collect();
    Ok(match mode {
        OutputMode::Structured => json(&LorenzReport {
            sequence,
            normalized,
            points,
        }),
        OutputMode::Csv => {
            let mut out = String::from("k,x,y\n");
            for p in &points {
                writeln!(out, "{},{},{}", p.k, p.x, p.y).unwrap();
            }
            out
        }
        _ => points
            .iter()
            .map(|p| format!("{} {} {}\n", p.k, p.x, p.y))
            .collect(),
    })
}

pub fn plan(source: &str, target: &str, mode: OutputMode) -> Result<String, Failure> {
    let plan = plan_transfers(&parse_sequence(source)?, &parse_sequence(target)?)?;
    Ok(match mode {
        OutputMode::Structured => json(&plan),
        _ => plan.to_text(),
    })
}

#[derive(Serialize, Deserialize)]
pub struct RealizeReport {
    pub sequence: DeltaSequence,
    pub method: String,
    pub tree: Tree,
    pub trace: Option<MoveTrace>,
}

pub fn realize(sequence: &str, method: Method, mode: OutputMode) -> Result<String, Failure> {
    let raw = parse_raw_sequence(sequence)?;
    let sequence = validate_tree_sequence(&raw)?;
    let (tree, trace) = match method {
        Method::Chain => {
            let trace = realize_from_chain(&sequence)?;
            (trace.final_tree.clone(), Some(trace))
        }
        Method::Direct => (realize_direct(&sequence)?, None),
    };
    Ok(match mode {
        OutputMode::Structured => json(&RealizeReport {
            sequence,
            method: format!("{method:?}").to_lowercase(),
            tree,
            trace,
        }),
        OutputMode::Dot => tree.to_dot("T"),
        _ => match trace {
            Some(trace) => format!(
                "# {} from the {}-node chain in {} moves\n{}",
                sequence,
                sequence.len(),
                trace.moves.len(),
                trace.to_text()
            ),
            None => format!("# {sequence} as a caterpillar\n{}", tree.to_text()),
        },
    })
}

#[derive(Serialize, Deserialize)]
pub struct TreeClass {
    pub code: CanonicalCode,
    pub delta: DeltaSequence,
    pub tree: Tree,
}

pub fn enumerate(n: usize, delta_only: bool, mode: OutputMode) -> Result<String, Failure> {
    if delta_only {
        if n == 0 {
            return Err(Error::NoNodes.into());
        }
        let census = delta_census(n);
        return Ok(match mode {
            OutputMode::Structured => json(&census),
            _ => census.iter().map(|s| format!("{s}\n")).collect(),
        });
    }
    let trees = enumerate_trees(n)?;
    let total = trees.len();
    let classes: Vec<TreeClass> = trees
        .into_iter()
        .map(|tree| TreeClass {
            code: tree.canonical_code(),
            delta: tree.delta_sequence(),
            tree,
        })
        .collect();
    Ok(match mode {
        OutputMode::Structured => json(&classes),
        OutputMode::Dot => classes
            .iter()
            .enumerate()
            .map(|(k, c)| c.tree.to_dot(&format!("T{}", k + 1)))
            .collect(),
        _ => {
            let mut out = String::new();
            for (k, c) in classes.iter().enumerate() {
                writeln!(out, "# class {}/{total} delta {} code {}", k + 1, c.delta, c.code).unwrap();
                out.push_str(&c.tree.to_text());
                out.push('\n');
            }
            out
        }
    })
}

#[derive(Clone, Copy)]
pub struct Checks {
    pub theorem: bool,
    pub total_order: bool,
    pub chain_minimal: bool,
    pub convex: bool,
}

#[derive(Serialize, Deserialize)]
pub struct TotalOrderCheck {
    pub report: OrderReport,
    /// The order is expected to be total exactly when `n <= 7`.
    pub expected_total: bool,
    pub passed: bool,
}

#[derive(Serialize, Deserialize)]
pub struct TheoremCheck {
    pub report: TheoremReport,
    pub certificates_recheck: bool,
    pub passed: bool,
}

#[derive(Serialize, Deserialize)]
pub struct VerifyReport {
    pub n: usize,
    pub passed: bool,
    pub total_order: Option<TotalOrderCheck>,
    pub theorem: Option<TheoremCheck>,
    pub chain_minimal: Option<ChainMinimalityReport>,
    pub convex: Option<ConvexReport>,
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn verify(
    n: usize,
    checks: Checks,
    seed: u64,
    samples: usize,
    mode: OutputMode,
) -> Result<String, Failure> {
    let mut text = String::new();
    let total_order = if checks.total_order {
        let report = check_total_order(n)?;
        let expected_total = n <= 7;
        let passed = report.is_total == expected_total;
        match &report.witness {
            None => writeln!(text, "total-order n={n}: total").unwrap(),
            Some((a, b)) => writeln!(text, "total-order n={n}: not total; witness {a} vs {b}").unwrap(),
        }
        writeln!(text, "  expected total: {expected_total} {}", verdict(passed)).unwrap();
        Some(TotalOrderCheck {
            report,
            expected_total,
            passed,
        })
    } else {
        None
    };

    let theorem = if checks.theorem {
        let report = verify_theorem(n)?;
        let certificates_recheck = report.certificates.iter().all(|c| c.check());
        let passed = report.holds && certificates_recheck;
        writeln!(
            text,
            "theorem n={n}: {} certificates, {}; re-checked: {certificates_recheck} {}",
            report.certificates.len(),
            if report.holds { "all targets reached" } else { "counterexample found" },
            verdict(passed)
        )
        .unwrap();
        for cert in report.certificates.iter().filter(|c| !c.is_positive()) {
            writeln!(
                text,
                "  unreachable: {} from class {}",
                cert.target,
                cert.source.canonical_code()
            )
            .unwrap();
        }
        Some(TheoremCheck {
            report,
            certificates_recheck,
            passed,
        })
    } else {
        None
    };

    let chain_minimal = if checks.chain_minimal {
        let graphs = sample_connected_graphs(n, samples, seed)?;
        let report = verify_chain_minimal(n, &graphs)?;
        writeln!(
            text,
            "chain-minimal n={n}: {} tree classes, {} graphs (seed {seed}) {}",
            report.trees_checked,
            report.graphs_checked,
            verdict(report.holds)
        )
        .unwrap();
        for f in &report.failures {
            writeln!(text, "  not above the chain: {f}").unwrap();
        }
        Some(report)
    } else {
        None
    };

    let convex = if checks.convex {
        let report = verify_convex_characterization(n)?;
        writeln!(
            text,
            "convex n={n}: {} comparable pairs {}",
            report.pairs_checked,
            verdict(report.holds)
        )
        .unwrap();
        if let Some(v) = &report.violation {
            writeln!(text, "  {}: {} vs {}", v.phi, v.lower, v.upper).unwrap();
        }
        Some(report)
    } else {
        None
    };

    let passed = total_order.as_ref().is_none_or(|c| c.passed)
        && theorem.as_ref().is_none_or(|c| c.passed)
        && chain_minimal.as_ref().is_none_or(|r| r.holds)
        && convex.as_ref().is_none_or(|r| r.holds);
    let out = match mode {
        OutputMode::Structured => json(&VerifyReport {
            n,
            passed,
            total_order,
            theorem,
            chain_minimal,
            convex,
        }),
        _ => text,
    };
    if passed {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

fn read_tree(path: &Path) -> Result<Tree, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
    if text.trim_start().starts_with('{') {
        serde_json::from_str(&text).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
    } else {
        Ok(Tree::from_text(&text)?)
    }
}

pub fn move_branch(
    path: &Path,
    (donor, gateway, target): (usize, usize, usize),
    enforce_degree_rule: bool,
    mode: OutputMode,
) -> Result<String, Failure> {
    let tree = read_tree(path)?;
    let moved = tree.move_branch(donor, gateway, target, enforce_degree_rule)?;
    Ok(match mode {
        OutputMode::Structured => json(&moved),
        OutputMode::Dot => moved.to_dot("T"),
        _ => format!("# delta {}\n{}", moved.delta_sequence(), moved.to_text()),
    })
}

pub fn hasse(n: usize, mode: OutputMode) -> Result<String, Failure> {
    let diagram = hasse_diagram(n)?;
    Ok(match mode {
        OutputMode::Structured => json(&diagram),
        _ => diagram.to_dot(),
    })
}
