//! Repeated-run experiments, aggregation, comparison tables and export.

mod export;

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use statrs::statistics::Statistics;

use crate::error::{Error, Result};
use crate::objectives::{resolve, ObjectiveId, ObjectiveSpec};
use crate::optimizer::{run, Mode, RunConfig, RunRecord, WfScope};

pub use export::{
    export_results, export_search_history, export_trace, summary_row, ExportFormat, SUMMARY_HEADER,
};

/// Fixed FDO weight factor for a benchmark: 1 on TF2 and TF8, 0 elsewhere.
pub fn default_fdo_wf(id: &ObjectiveId) -> f64 {
    match id {
        ObjectiveId::Tf(2) | ObjectiveId::Tf(8) => 1.0,
        _ => 0.0,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub objective: ObjectiveId,
    pub mode: Mode,
    pub runs: usize,
    pub population: usize,
    pub iterations: usize,
    /// Run `k` uses seed `base_seed + k`.
    pub base_seed: u64,
    pub record_positions: bool,
    pub fdo_wf: f64,
    pub wf_scope: WfScope,
    /// Worker threads; 1 runs sequentially.
    pub jobs: usize,
}

impl ExperimentConfig {
    /// 30 runs of 30 scouts for 500 iterations.
    pub fn new(objective: ObjectiveId, mode: Mode) -> Self {
        let fdo_wf = default_fdo_wf(&objective);
        ExperimentConfig {
            objective,
            mode,
            runs: 30,
            population: 30,
            iterations: 500,
            base_seed: 0,
            record_positions: false,
            fdo_wf,
            wf_scope: WfScope::default(),
            jobs: 1,
        }
    }

    pub fn run_config(&self, run_index: usize) -> RunConfig {
        RunConfig {
            population: self.population,
            iterations: self.iterations,
            mode: self.mode,
            fdo_wf: self.fdo_wf,
            wf_scope: self.wf_scope,
            seed: self.base_seed.wrapping_add(run_index as u64),
            record_positions: self.record_positions,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.runs == 0 {
            return Err(Error::Config("runs must be at least 1".into()));
        }
        if self.jobs == 0 {
            return Err(Error::Config("jobs must be at least 1".into()));
        }
        self.run_config(0).validate()
    }
}

/// Equality ignores wall times.
#[derive(Debug, Clone)]
pub struct ExperimentResult {
    pub config: ExperimentConfig,
    pub runs: Vec<RunRecord>,
    pub mean: f64,
    /// Sample standard deviation (n - 1); 0 for a single run.
    pub std: f64,
    pub wall_time: Duration,
}

impl PartialEq for ExperimentResult {
    fn eq(&self, other: &Self) -> bool {
        self.config == other.config
            && self.runs == other.runs
            && self.mean.to_bits() == other.mean.to_bits()
            && self.std.to_bits() == other.std.to_bits()
    }
}

impl ExperimentResult {
    pub fn final_bests(&self) -> Vec<f64> {
        self.runs.iter().map(|r| r.best_fitness).collect()
    }
}

/// Resolves the configured objective and runs the experiment.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentResult> {
    let spec = resolve(&config.objective)?;
    run_experiment_with(config, &spec)
}

/// Runs the experiment against an already built objective.
pub fn run_experiment_with(
    config: &ExperimentConfig,
    spec: &ObjectiveSpec,
) -> Result<ExperimentResult> {
    config.validate()?;
    let started = Instant::now();
    let one = |k: usize| run(&config.run_config(k), spec);
    let runs = if config.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
        pool.install(|| {
            (0..config.runs)
                .into_par_iter()
                .map(one)
                .collect::<Result<Vec<_>>>()
        })?
    } else {
        (0..config.runs).map(one).collect::<Result<Vec<_>>>()?
    };
    let bests: Vec<f64> = runs.iter().map(|r| r.best_fitness).collect();
    let (mean, std) = aggregate(&bests);
    Ok(ExperimentResult {
        config: config.clone(),
        runs,
        mean,
        std,
        wall_time: started.elapsed(),
    })
}

/// Mean and sample standard deviation; std is 0 for fewer than two values.
pub fn aggregate(values: &[f64]) -> (f64, f64) {
    let mean = values.iter().sum::<f64>() / values.len() as f64;
    let std = if values.len() < 2 {
        0.0
    } else {
        values.std_dev()
    };
    (mean, std)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonRow {
    pub objective: String,
    pub mode: Mode,
    pub runs: usize,
    pub population: usize,
    pub iterations: usize,
    pub mean: f64,
    pub std: f64,
    /// Lowest mean among rows of the same objective.
    pub best: bool,
}

/// Rows grouped by objective in first-appearance order.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonTable {
    pub rows: Vec<ComparisonRow>,
}

/// Runs each configuration and tabulates the results.
pub fn compare(configs: &[ExperimentConfig]) -> Result<ComparisonTable> {
    if configs.len() < 2 {
        return Err(Error::Config(
            "compare needs at least two configurations".into(),
        ));
    }
    let results = configs
        .iter()
        .map(run_experiment)
        .collect::<Result<Vec<_>>>()?;
    Ok(comparison_table(&results))
}

pub fn comparison_table(results: &[ExperimentResult]) -> ComparisonTable {
    let mut order: Vec<String> = Vec::new();
    for r in results {
        let name = r.config.objective.to_string();
        if !order.contains(&name) {
            order.push(name);
        }
    }
    let mut rows = Vec::with_capacity(results.len());
    for name in &order {
        let group: Vec<&ExperimentResult> = results
            .iter()
            .filter(|r| r.config.objective.to_string() == *name)
            .collect();
        let min = group.iter().map(|r| r.mean).fold(f64::INFINITY, f64::min);
        rows.extend(group.iter().map(|r| ComparisonRow {
            objective: name.clone(),
            mode: r.config.mode,
            runs: r.config.runs,
            population: r.config.population,
            iterations: r.config.iterations,
            mean: r.mean,
            std: r.std,
            best: r.mean == min,
        }));
    }
    ComparisonTable { rows }
}

impl fmt::Display for ComparisonTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<10} {:<5} {:>5} {:>24} {:>24}  best",
            "objective", "mode", "runs", "mean", "std"
        )?;
        for r in &self.rows {
            writeln!(
                f,
                "{:<10} {:<5} {:>5} {:>24.16e} {:>24.16e}  {}",
                r.objective,
                r.mode.to_string(),
                r.runs,
                r.mean,
                r.std,
                if r.best { "*" } else { "" }
            )?;
        }
        Ok(())
    }
}
