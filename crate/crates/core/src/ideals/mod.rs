//! Ideals given by forbidden colorings or built-in tight families, their
//! growth functions, and the reference sequences.

pub mod cache;
pub mod census;
pub mod growth;
pub mod sequence;
pub mod spec;
pub mod verdict;

pub use cache::{growth_cached, GrowthCache};
pub use census::census_distinct;
pub use growth::{
    builtin_by_extension, builtin_contains, growth, members, GrowthOptions, GrowthRecord, LevelCount,
    DEFAULT_BUDGET,
};
pub use sequence::{fibonacci, g, g_k, SequenceName};
pub use spec::{Builtin, IdealSpec};
pub use verdict::{dichotomy_verdict, ConstantVerdict, DichotomyVerdict, QuasiFibonacciVerdict, Theorem};
