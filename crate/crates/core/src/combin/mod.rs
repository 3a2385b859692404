//! Exhaustive combinatorial oracles: fixed-point-bicolored matchings with
//! q-statistics and weights, complete-matching distribution identities, the
//! weight-preserving bijection onto 4-tuples, the W-decomposition of the
//! 4-term recurrence, and weighted 2-Motzkin paths.
//!
//! Enumeration is plain recursive generation; the default bounds keep every
//! suite in the thousands of objects.

mod matching;
mod motzkin;

pub use matching::{
    bijection_g, bijection_g_inverse, cm_distribution_sums, complete_matchings, enumerate_fbm,
    factored_weight, fbm_weight_sum, matching_stats, w_claims_hold, w_decomposition, weight,
    Color, GTuple, Matching, MatchingStats, FBM_BOUND,
};
pub use motzkin::{enumerate_motzkin2, motzkin_sum, path_weight, MotzkinPath2, Step};
