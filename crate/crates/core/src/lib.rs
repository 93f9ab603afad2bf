//! Majorization of tree degree sequences.
//!
//! Degree sequences of trees, compared by prefix-sum (Lorenz) dominance,
//! together with the tree operations that move along that order: basic
//! transfers on sequences, branch moves on explicit trees, realization of
//! any feasible sequence as a tree, and exhaustive checks over every tree
//! of a given size.

pub mod enumeration;
pub mod error;
pub mod realization;
pub mod sequence;
pub mod transfer;
pub mod tree;
pub mod verification;

pub use enumeration::{delta_census, enumerate_trees, trees_with_delta};
pub use error::{Error, Result};
pub use realization::{
    all_replays, realize_direct, realize_from_chain, replay_plan_on_tree, replay_plan_on_tree_by,
    replay_plan_on_tree_with, step_candidates, MoveTrace, TieBreak,
};
pub use sequence::{
    compare, convex_functional, lorenz_curve, validate_tree_sequence, Comparison, ConvexFn,
    DeltaSequence, LorenzCurve,
};
pub use transfer::{basic_transfer, plan_transfers, replay, TransferPlan, TransferStep};
pub use tree::{canonical_code, is_isomorphic, spanning_tree, Branch, CanonicalCode, Graph, Move, Tree};
pub use verification::{
    check_total_order, find_unreachable_pair, hasse_diagram, reachable_classes,
    verify_chain_minimal, verify_convex_characterization, verify_theorem, OrderReport,
    Reachability, ReachabilityCertificate, UnreachablePair,
};
