pub mod engine;
pub mod enumerate;
pub mod frontend;
pub mod oracle;
pub mod sat;
pub mod types;

pub use engine::{
    circ_enumerate, CircEngine, CircInstance, EngineConfig, EnumerationReport, InstanceError,
    Limits, MinimalModel, Step,
};
pub use sat::{Model, SolveOutcome, Solver, SolverConfig, SolverStats};
pub use types::{Atom, CardinalityConstraint, Clause, InfeasibleConstraint, Lit, Theory};
