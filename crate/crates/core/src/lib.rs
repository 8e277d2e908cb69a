//! Pattern matching with (213, 231)-avoiding permutation patterns.
//!
//! * [`linear`]: online linear-time matcher when pattern and text both avoid.
//! * [`factor_dp`]: factor-decomposition dynamic program for arbitrary texts.
//! * [`bivincular`]: bivincular patterns with position/value adjacency and anchors.
//! * [`longest`]: longest avoiding subsequence of one text, and of two texts in common.
//! * [`oracle`]: brute-force reference solvers used by the test suites.

pub mod bivincular;
pub mod class;
pub mod error;
pub mod exec;
pub mod factor;
pub mod factor_dp;
pub mod linear;
pub mod longest;
mod memo;
pub mod oracle;
pub mod perm;
pub mod run_index;

pub use bivincular::{
    matches_bivincular, matches_bivincular_counted, parse_bivincular, parse_bivincular_general,
    BivincularPattern, Constraints,
};
pub use class::{
    ascent_descent_word, enumerate_av, is_av_213_231, random_av, random_av_with,
    word_to_permutation, AscDescWord, AvoidingPermutations, Letter,
};
pub use error::{Error, Result};
pub use exec::Execution;
pub use factor::{factor_decompose, Factor, FactorDecomposition};
pub use factor_dp::{
    build_lm_table, build_lm_table_with, matches_pattern_avoiding, matches_pattern_avoiding_with,
    LmTable,
};
pub use linear::{matches_both_avoiding, matches_both_avoiding_counted, OnlineMatcher};
pub use longest::{lcs_av, lcs_av_counted, longest_av_subsequence, CommonPattern, PivotTables};
pub use perm::{Embedding, Permutation};
pub use run_index::{bounded_lds, bounded_lis, BoundedRunIndex, Direction};
