//! Band-move equation systems for the lens spaces `L(p,1)`: generation,
//! the mirror between the two sides, elimination and the basis probes.

mod experiment;
pub mod linalg;
mod reduce;
mod system;

pub use experiment::{candidate_basis_experiment, check_generating_set, CandidateReport, GeneratingSetReport, ProbeEntry, ProbeStatus};
pub use reduce::{reduce_rows, reduce_system, solve_level, LevelSolution, Orientation, ReducedJson, ReducedSystem, Rule, RuleJson, Strategy, Window};
pub use system::{compare_mirror, generate_system, mirror_equation, mirror_system, MirrorMismatch, MirrorReport, SystemBundle, SystemJson};
