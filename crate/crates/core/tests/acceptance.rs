//! Acceptance criteria. Every criterion is exact; each prints one PASS/FAIL
//! line (run with `--nocapture` to see them) and the suite fails if any
//! criterion fails.

mod common;

use std::collections::BTreeSet;

use majtree::verification::sample_connected_graphs;
use majtree::{
    check_total_order, compare, convex_functional, delta_census, enumerate_trees,
    find_unreachable_pair, plan_transfers, realize_direct, realize_from_chain,
    replay_plan_on_tree, verify_chain_minimal, verify_theorem, Comparison, ConvexFn,
    DeltaSequence, Reachability, Tree,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5eed_2024;

fn seq(text: &str) -> DeltaSequence {
    text.parse().unwrap()
}

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c1_incomparable_pair() -> Outcome {
    let r = compare(&seq("5,2,2,1,1,1,1,1"), &seq("4,4,1,1,1,1,1,1")).map_err(|e| e.to_string())?;
    ensure(r == Comparison::Incomparable, || format!("got {r}"))
}

fn intermediates(source: &str, target: &str) -> Result<Vec<String>, String> {
    let plan = plan_transfers(&seq(source), &seq(target)).map_err(|e| e.to_string())?;
    Ok(plan.steps.iter().map(|s| s.after.to_string()).collect())
}

fn c2_trace_from_three_threes() -> Outcome {
    let got = intermediates("3,3,3,1,1,1,1,1", "5,3,1,1,1,1,1,1")?;
    let want = vec!["(4,3,2,1,1,1,1,1)", "(5,3,1,1,1,1,1,1)"];
    ensure(got == want, || format!("got {got:?}"))
}

fn c3_trace_from_chain() -> Outcome {
    let got = intermediates("2,2,2,2,2,2,1,1", "5,2,2,1,1,1,1,1")?;
    let want = vec!["(3,2,2,2,2,1,1,1)", "(4,2,2,2,1,1,1,1)", "(5,2,2,1,1,1,1,1)"];
    ensure(got == want, || format!("got {got:?}"))
}

fn c4_replay_on_every_source() -> Outcome {
    let source = seq("4,3,2,2,2,2,1,1,1,1,1");
    let target = seq("5,2,2,2,2,2,1,1,1,1,1");
    let r = compare(&source, &target).map_err(|e| e.to_string())?;
    ensure(r == Comparison::StrictlyBelow, || format!("compare gave {r}"))?;
    let plan = plan_transfers(&source, &target).map_err(|e| e.to_string())?;
    let classes: Vec<Tree> = enumerate_trees(11)
        .map_err(|e| e.to_string())?
        .into_iter()
        .filter(|t| t.delta_sequence() == source)
        .collect();
    ensure(!classes.is_empty(), || "no source classes".into())?;
    for t in &classes {
        let trace = replay_plan_on_tree(t, &plan).map_err(|e| e.to_string())?;
        trace.verify().map_err(|e| e.to_string())?;
        ensure(trace.final_tree.delta_sequence() == target, || {
            format!("final delta {}", trace.final_tree.delta_sequence())
        })?;
    }
    println!("    {} source classes at n = 11", classes.len());
    Ok(())
}

fn c5_total_order_threshold() -> Outcome {
    for n in 2..=10 {
        let report = check_total_order(n).map_err(|e| e.to_string())?;
        ensure(report.is_total == (n <= 7), || format!("n = {n}: is_total = {}", report.is_total))?;
        if n >= 8 {
            let (a, b) = report.witness.ok_or(format!("n = {n}: no witness"))?;
            let r = compare(&a, &b).map_err(|e| e.to_string())?;
            ensure(r == Comparison::Incomparable, || format!("n = {n}: witness {a} {b} is {r}"))?;
            println!("    n = {n}: {a} vs {b}");
        }
    }
    Ok(())
}

fn c6_class_counts() -> Outcome {
    let expected = [1usize, 1, 2, 3, 6, 11, 23];
    for (n, &want) in (2..=8).zip(&expected) {
        let generated: BTreeSet<_> = enumerate_trees(n)
            .map_err(|e| e.to_string())?
            .iter()
            .map(Tree::canonical_code)
            .collect();
        let oracle: BTreeSet<_> = common::labeled_trees(n)
            .map(|e| Tree::new(n, &e).unwrap().canonical_code())
            .collect();
        ensure(generated.len() == want, || format!("n = {n}: {} classes", generated.len()))?;
        ensure(generated == oracle, || format!("n = {n}: differs from Prüfer oracle"))?;
    }
    Ok(())
}

fn c7_realization() -> Outcome {
    for n in 2..=10 {
        for s in delta_census(n) {
            let trace = realize_from_chain(&s).map_err(|e| format!("{s}: {e}"))?;
            trace.verify().map_err(|e| format!("{s}: {e}"))?;
            ensure(trace.final_tree.delta_sequence() == s, || format!("chain route missed {s}"))?;
            let direct = realize_direct(&s).map_err(|e| format!("{s}: {e}"))?;
            ensure(direct.delta_sequence() == s, || format!("direct route missed {s}"))?;
        }
    }
    Ok(())
}

fn c8_theorem_exhaustive() -> Outcome {
    for n in 1..=9 {
        let report = verify_theorem(n).map_err(|e| e.to_string())?;
        ensure(report.holds, || format!("n = {n} fails"))?;
        ensure(report.certificates.iter().all(|c| c.check()), || {
            format!("n = {n}: a certificate does not re-check")
        })?;
    }
    Ok(())
}

fn c9_blocked_pair() -> Outcome {
    let s = seq("4,2,2,2,1,1,1,1");
    let s_prime = seq("5,2,2,1,1,1,1,1");
    let pair = find_unreachable_pair(8, &s, &s_prime)
        .map_err(|e| e.to_string())?
        .ok_or("no blocked pair")?;
    ensure(pair.check(), || "closed-set certificate does not re-check".into())?;
    let reach = Reachability::explore(&pair.source).map_err(|e| e.to_string())?;
    let code = reach.first_with_delta(&s_prime).ok_or("no T'' reachable")?;
    let trace = reach.trace_to(code).ok_or("no trace")?;
    trace.verify().map_err(|e| e.to_string())?;
    ensure(trace.final_tree.delta_sequence() == s_prime, || "T'' has the wrong delta".into())?;
    println!(
        "    T = {:?}\n    T' = {:?}\n    T'' = {:?}",
        pair.source.edges(),
        pair.target.edges(),
        trace.final_tree.edges()
    );
    Ok(())
}

fn c10_chain_minimal() -> Outcome {
    for n in 2..=9 {
        let graphs = if (5..=9).contains(&n) {
            // cycle + complete graph + 98 random graphs
            sample_connected_graphs(n, 98, SEED).map_err(|e| e.to_string())?
        } else {
            Vec::new()
        };
        ensure(graphs.len() == if (5..=9).contains(&n) { 100 } else { 0 }, || {
            format!("n = {n}: {} sample graphs", graphs.len())
        })?;
        let report = verify_chain_minimal(n, &graphs).map_err(|e| e.to_string())?;
        ensure(report.holds, || format!("n = {n}: {:?}", report.failures))?;
    }
    Ok(())
}

fn c11_convex_monotonicity() -> Outcome {
    let census = delta_census(8);
    let mut pairs = 0;
    for x in &census {
        for y in &census {
            if !matches!(compare(x, y).unwrap(), Comparison::Equal | Comparison::StrictlyBelow) {
                continue;
            }
            pairs += 1;
            for phi in ConvexFn::TEST_FAMILY {
                let (a, b) = (convex_functional(x, phi), convex_functional(y, phi));
                ensure(a <= b, || format!("{phi}: {x} -> {a}, {y} -> {b}"))?;
            }
        }
    }
    println!("    {pairs} comparable pairs");
    Ok(())
}

fn c12_random_moves() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut done = 0;
    while done < 1000 {
        let n = rng.gen_range(5..=10);
        let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
        let t = Tree::new(n, &common::prufer_decode(&code, n)).unwrap();
        let moves = t.degree_rule_moves();
        if moves.is_empty() {
            continue;
        }
        let m = moves[rng.gen_range(0..moves.len())];
        let after = t
            .move_branch(m.donor, m.gateway, m.target, true)
            .map_err(|e| format!("{m}: {e}"))?;
        let rebuilt = Tree::new(n, after.edges()).map_err(|e| e.to_string())?;
        ensure(rebuilt == after, || "result is not a valid tree".into())?;
        let r = compare(&t.delta_sequence(), &after.delta_sequence()).unwrap();
        ensure(r == Comparison::StrictlyBelow, || format!("move {m} gave {r}"))?;
        done += 1;
    }
    Ok(())
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 12] = [
        ("1 incomparable pair at n = 8", c1_incomparable_pair),
        ("2 transfer trace (3,3,3,...) -> (5,3,1,...)", c2_trace_from_three_threes),
        ("3 transfer trace chain-8 -> (5,2,2,...)", c3_trace_from_chain),
        ("4 plan replay on every n = 11 source class", c4_replay_on_every_source),
        ("5 total order iff n <= 7", c5_total_order_threshold),
        ("6 tree class counts vs Prüfer oracle", c6_class_counts),
        ("7 realization of every census sequence, n <= 10", c7_realization),
        ("8 reachability theorem, n <= 9", c8_theorem_exhaustive),
        ("9 blocked pair with closed-set certificate", c9_blocked_pair),
        ("10 chain minimality", c10_chain_minimal),
        ("11 convex-sum monotonicity at n = 8", c11_convex_monotonicity),
        ("12 1000 random degree-rule moves", c12_random_moves),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        match check() {
            Ok(()) => println!("PASS  {name}"),
            Err(why) => {
                println!("FAIL  {name}: {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
