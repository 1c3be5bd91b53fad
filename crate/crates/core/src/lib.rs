//! Fitness-dependent optimizer (FDO) and the improved IFDO variant, together
//! with the classical and CEC-C06 2019 benchmark suites, two application
//! objectives and a repeated-run experiment harness.

pub mod applications;
pub mod bounds;
pub mod error;
pub mod harness;
pub mod levy;
pub mod objectives;
pub mod optimizer;

pub use bounds::Bounds;
pub use error::{Error, Result};

pub use harness::{ExperimentConfig, ExperimentResult};
pub use objectives::{ObjectiveId, ObjectiveSpec};
pub use optimizer::{Mode, RunConfig, RunRecord, ScoutBee, SwarmState, WfScope};
