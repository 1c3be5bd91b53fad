//! Application objectives: aperiodic antenna-array sidelobe suppression and
//! single-exit placement for a pedestrian evacuation area.

pub mod antenna;
pub mod evac;

pub use antenna::{antenna_fitness, array_factor, constraint_violation, AntennaProblem};
pub use evac::{
    build_scenario, evac_distance, evac_fitness, evac_time, EvacScenario, Pedestrian, TimeFormula,
};
