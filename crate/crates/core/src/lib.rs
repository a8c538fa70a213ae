//! Maximal common subsequences (MCS) of k strings.
//!
//! * [`subseq`]: subsequence tests, maximality, alphabet pruning.
//! * [`oracle`]: brute-force enumeration over masks of the shortest string.
//! * [`enumerator`]: streaming binary-partition enumeration driven by
//!   unshiftable k-tuples.
//! * [`analysis`]: counting, threshold assessment, and the "another MCS"
//!   decision.
//! * [`reductions`]: 3-CNF and hypergraph constructions producing MCS
//!   instances, with brute-force SAT/MIS oracles and verifiers.
//! * [`gen`]: seeded random instances, formulas and hypergraphs.

pub mod alphabet;
pub mod analysis;
pub mod enumerator;
pub mod error;
pub mod gen;
pub mod instance;
pub mod oracle;
pub mod reductions;
pub mod subseq;

pub use alphabet::{Alphabet, Mode, Seq, SymbolId};
pub use error::{Error, Result};
pub use instance::{parse_strings_file, InstanceSet, StringsFile};

/// Work budgets shared by the oracles and the enumerator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of subsequence masks the MCS oracle may walk.
    pub mask_cap: u64,
    /// Maximum number of unshiftable tuples.
    pub tuple_cap: usize,
    /// Maximum variable count for brute-force SAT.
    pub sat_var_cap: usize,
    /// Maximum vertex count for brute-force MIS.
    pub mis_vertex_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            mask_cap: oracle::DEFAULT_MASK_CAP,
            tuple_cap: enumerator::DEFAULT_TUPLE_CAP,
            sat_var_cap: reductions::sat::DEFAULT_VAR_CAP,
            mis_vertex_cap: reductions::hypergraph::DEFAULT_VERTEX_CAP,
        }
    }
}
