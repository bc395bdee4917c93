//! Exact optimum by exhaustive enumeration, and the integer-programming
//! model for handing larger instances to an external solver.

mod enumeration;
mod ilp;
mod lp;

pub use enumeration::{
    for_each_maximal_set, solve_brute_force_reference, solve_enumeration, solve_enumeration_counted, EnumerationResult,
};
pub use ilp::{build_ilp, Assignment, Constraint, ConstraintFamily, IlpModel, Var};
pub use lp::export_lp;
