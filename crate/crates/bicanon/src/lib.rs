//! Canonical forms of matrix pairs with prescribed zero patterns.
//!
//! A *pattern* places n distinct unknowns x1..xn into an m x (p+q) grid
//! split into two strips, A and B; every other cell is pinned to zero. The
//! family of matrices M(x) = [A(x) | B(x)] obtained by substituting field
//! elements for the unknowns is studied up to transformations
//! (A, B) -> (S·A·R1, S·B·R2) with S, R1, R2 invertible. Almost every
//! member of the family — all assignments avoiding the zero set of one
//! polynomial f — reduces to the same canonical 0/1 block form, and this
//! crate computes that form together with explicit witnesses:
//!
//! * [`graph`] finds a largest left / largest right matching pair with the
//!   fewest shared vertices, which pins down the generic block sizes;
//! * [`poly`] builds the minor polynomials of the pair and their least
//!   common multiple f, which cuts out the degenerate members;
//! * [`canonical`] produces the canonical form, a 0/1 representative of
//!   the family, pure row/column permutations carrying that representative
//!   into the canonical form, and exact certified reductions of concrete
//!   members over the rationals or a prime field;
//! * [`oracle`] re-derives the same answers by exhaustive search and random
//!   sampling, for cross-checking;
//! * [`report`] bundles everything into serializable reports used by the
//!   command-line tool.

pub mod canonical;
pub mod field;
pub mod graph;
pub mod matrix;
pub mod oracle;
pub mod pattern;
pub mod poly;
pub mod report;

pub use canonical::{
    canonical_bipartite, generic_form, permutations_to_block_form, reduce_numeric,
    BlockPermutations, CanonicalTriple, ReductionCertificate,
};
pub use field::{Field, FieldError, PrimeField, Rationals, SampleRange};
pub use graph::{BipartiteGraph, Edge, GenericRanks, GraphError, Matchbox, MatchboxKind};
pub use matrix::ExactMatrix;
pub use oracle::{
    all_patterns, brute_force_min_v, determinant_crosscheck, enumerate_largest_matchboxes,
    random_pattern, verify_reduction, OracleError, TrialFailure, VerificationReport,
    VerifyOptions, DEFAULT_EXHAUSTIVE_LIMIT,
};
pub use pattern::{
    parse_assignment, parse_values, Assignment, CharacteristicVector, Pattern, PatternError,
    Placement, Side,
};
pub use poly::{
    gcd, generic_polynomial, lcm, lcm3, minor_polynomial, PolyError, PolyTerm, Polynomial,
};
pub use report::{
    analyze, check, run_oracle, run_verify, sha256_hex, tool_version, AnalysisReport,
    CheckReport, MatchboxSummary, MinorsReport, OracleReport, PairReport, ReportError,
    SCHEMA_VERSION,
};
