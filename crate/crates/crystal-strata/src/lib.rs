//! Tableau crystals for `GL(n)` and the cocharacter-tuple coordinates of
//! top-dimensional semi-module strata.
//!
//! The crate has two halves that meet in the middle:
//!
//! * the *crystal* side — semistandard Young tableaux, Kashiwara raising and
//!   lowering operators computed by the signature rule, tensor products of box
//!   crystals, and the Weyl-group action ([`crystal`], [`lattice`]);
//! * the *stratum* side — cocharacter tuples attached to a superbasic element
//!   of slope `m/n`, their flat coordinates, the `R`-set dimension count, and
//!   the shift equivalence classes that index top-dimensional strata
//!   ([`stratum`]).
//!
//! The bridge is [`construct`]: from a tableau of weight `λ_b` it extracts a
//! tuple of Weyl group elements, a Coxeter element, the conjugating set `Υ`,
//! and the cocharacter tuples `ξ` whose flat coordinates recover the
//! Far-Eastern reading of the tableau. [`oracle`] holds independent
//! brute-force verifiers (Kostka counts, exhaustive stratum enumeration, a
//! full-scan `Υ`, and an arithmetic recursion for the word tuple) used to
//! cross-check the construction at desk scale.
//!
//! Everything is exact integer combinatorics; all values are immutable after
//! construction and every operation is a pure function.
//!
//! ## Quick start
//!
//! ```
//! use crystal_strata::stratum::SuperbasicData;
//! use crystal_strata::crystal::generate_crystal;
//! use crystal_strata::construct::Construction;
//! use crystal_strata::lattice::Cocharacter;
//!
//! let data = SuperbasicData::new(5, 12).unwrap();
//! let mu = Cocharacter::new(vec![4, 3, 3, 2, 0]);
//! let crystal = generate_crystal(5, &mu).unwrap();
//! for idx in crystal.weight_space(&data.lambda_b()) {
//!     let report = Construction::new(data.clone(), crystal.elements()[idx].clone())
//!         .unwrap()
//!         .report()
//!         .unwrap();
//!     assert_eq!(report.upsilon.len(), 5);
//! }
//! ```
//!
//! The `examples/` directory contains one runnable program per capability;
//! the `crystal-strata` binary exposes the same drivers as subcommands.

pub mod cli;
pub mod construct;
pub mod crystal;
pub mod lattice;
pub mod oracle;
pub mod stratum;

pub use lattice::{Cocharacter, Permutation};

/// Version tag stamped into every JSON document the crate emits.
///
/// Field names are frozen per version; see `schema/report.v1.json`.
pub const SCHEMA_VERSION: &str = "1";

/// Errors shared by every module in the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("vector {0:?} is not a permutation of 1..={1}")]
    InvalidPermutation(Vec<usize>, usize),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("m = {m} and n = {n} are not coprime")]
    NotCoprime { n: usize, m: usize },
    #[error("filling is not a semistandard tableau")]
    NotSemistandard,
    #[error("cocharacter {got:?} is not conjugate to {reference:?}")]
    NotConjugate { got: Vec<i64>, reference: Vec<i64> },
    #[error("tableau weight {got:?} differs from the required weight {expected:?}")]
    WeightMismatch { expected: Vec<i64>, got: Vec<i64> },
    #[error("permutation does not conjugate the shift cycle to the Coxeter element")]
    NotInUpsilon,
    #[error("permutation is not an n-cycle")]
    NotAnNCycle,
    #[error("word recursion has no solution; the tuple is not a top stratum")]
    Unsolvable,
    #[error("scale guard exceeded: estimated {estimate} units > limit {limit}")]
    ScaleGuard { estimate: u64, limit: u64 },
    #[error("internal consistency check failed: {0}")]
    CheckFailed(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
