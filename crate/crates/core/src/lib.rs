//! Exact computations for rainbow independent sets in graphs of maximum
//! degree two.
//!
//! The crate covers the greedy rainbow selection on ordered vertex sets, the
//! constructive solvers for cycles, 2-jump collections and 2-regular graphs,
//! the h-value partition engine, and an exhaustive search for `f_G(n, m)`:
//! the least `k` such that every collection of `k` independent `n`-sets of
//! `G` (repetition allowed) has a rainbow independent `m`-set.

pub mod cache;
pub mod certificate;
pub mod claims;
pub mod error;
pub mod fsearch;
pub mod graph;
pub mod gris;
pub mod indset;
pub mod par;
pub mod partition;
pub mod rainbow;
pub mod symmetry;
pub mod two_jump;
pub mod two_regular;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::{label, vertex, Component, ComponentKind, Degree2Graph};
pub use indset::{enumerate_ind_sets, enumerate_jump_sets, Collection, JumpSet};
pub use vertex_set::{VertexSet, MAX_VERTICES};
pub use gris::{gris, rainbow_cycle_n_minus_1, rainbow_path, GreedyResult};
pub use rainbow::{find_rainbow, verify_rainbow, RainbowAssignment};
pub use fsearch::{f_value, is_bad, FResult, SearchConfig, SearchStatus};
pub use par::Executor;
pub use symmetry::SymmetryGroup;
pub use partition::{h_value, split, PartitionResult, SideCondition};
pub use two_jump::{solve_two_jump, TwoJumpOutcome, TwoJumpState};
pub use two_regular::solve_two_regular;
pub use cache::ResultCache;
pub use certificate::Certificate;
pub use claims::{verify_theorem_range, Claim, Grid, GridReport, VerifyOptions};
