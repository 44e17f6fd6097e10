//! Graph domination parameters at desk scale: exact solvers with witness
//! certificates, randomized bound-achieving constructions and their
//! derandomizations, a catalog of bound formulas with applicability
//! predicates, and a reproducible experiment harness.

pub mod bitset;
pub mod bounds;
pub mod certificates;
pub mod construct;
pub mod error;
pub mod exact;
pub mod experiment;
pub mod families;
pub mod graph;
pub mod matching;
pub mod rng;

pub use bitset::BitSet;
pub use certificates::{check_certificate, complete_roman, Certificate, RomanFunction, Variant, Verdict};
pub use error::{Error, Result};
pub use exact::{brute_force_value, exact_value, roman_assignment_oracle, Solution};
pub use families::{generate, FamilySpec};
pub use graph::{parse_graph, write_dimacs, write_edge_list, DegreeProfile, Graph, GraphFormat};
pub use matching::{brute_force_matching, has_perfect_matching, max_matching, Matching};

/// Map a function over indexed items, in parallel when the `parallel`
/// feature is enabled. Output order always matches input order, so results
/// are identical across worker counts.
pub fn indexed_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().map(f).collect()
    }
}
