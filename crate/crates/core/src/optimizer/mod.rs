//! FDO / IFDO search loop.

pub mod moves;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::levy::Levy;
use crate::objectives::ObjectiveSpec;

pub use moves::{
    compute_fitness_weight, compute_pace, enforce_bounds, neighbor_landscape, neighborhood,
    propose_position, update_weight_factor, NeighborhoodContext,
};

/// Stream offset separating objective noise (TF7) from the search stream.
const NOISE_STREAM_SALT: u64 = 0x9E37_79B9_7F4A_7C15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Fdo,
    Ifdo,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Fdo => "FDO",
            Mode::Ifdo => "IFDO",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "fdo" => Ok(Mode::Fdo),
            "ifdo" => Ok(Mode::Ifdo),
            other => Err(Error::Argument(format!(
                "unknown algorithm `{other}` (expected fdo|ifdo)"
            ))),
        }
    }
}

/// Whether each scout carries its own weight factor or the swarm shares one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WfScope {
    #[default]
    Scout,
    Swarm,
}

impl FromStr for WfScope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "scout" => Ok(WfScope::Scout),
            "swarm" => Ok(WfScope::Swarm),
            other => Err(Error::Argument(format!(
                "unknown wf scope `{other}` (expected scout|swarm)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub population: usize,
    pub iterations: usize,
    pub mode: Mode,
    /// Fixed weight factor used in FDO mode.
    pub fdo_wf: f64,
    pub wf_scope: WfScope,
    pub seed: u64,
    pub record_positions: bool,
}

impl RunConfig {
    /// 30 scouts, 500 iterations, seed 0.
    pub fn new(mode: Mode) -> Self {
        RunConfig {
            population: 30,
            iterations: 500,
            mode,
            fdo_wf: 0.0,
            wf_scope: WfScope::Scout,
            seed: 0,
            record_positions: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.population == 0 {
            return Err(Error::Config("population must be at least 1".into()));
        }
        if self.iterations == 0 {
            return Err(Error::Config("iterations must be at least 1".into()));
        }
        if !(0.0..=1.0).contains(&self.fdo_wf) {
            return Err(Error::Config(format!(
                "fdo_wf must lie in [0, 1], got {}",
                self.fdo_wf
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScoutBee {
    pub position: Vec<f64>,
    /// Last accepted movement.
    pub pace: Vec<f64>,
    pub fitness: f64,
}

/// Complete optimizer state for one run.
#[derive(Debug, Clone)]
pub struct SwarmState {
    scouts: Vec<ScoutBee>,
    best_position: Vec<f64>,
    best_fitness: f64,
    iteration: usize,
    weight_factors: Vec<f64>,
    mode: Mode,
    wf_scope: WfScope,
    nl: f64,
    levy: Levy,
    rng: ChaCha8Rng,
    noise: ChaCha8Rng,
}

fn sanitize(value: f64) -> f64 {
    if value.is_finite() {
        value
    } else {
        f64::INFINITY
    }
}

/// Scatters `config.population` scouts uniformly over the objective's box.
pub fn init_population(config: &RunConfig, objective: &ObjectiveSpec) -> Result<SwarmState> {
    config.validate()?;
    let bounds = &objective.bounds;
    let dim = bounds.dimension();
    if objective.shift.len() != dim {
        return Err(Error::Config(format!(
            "{}: shift has length {} but the box has {dim} dimensions",
            objective.id,
            objective.shift.len()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut noise = ChaCha8Rng::seed_from_u64(config.seed ^ NOISE_STREAM_SALT);

    let mut scouts = Vec::with_capacity(config.population);
    for _ in 0..config.population {
        let position: Vec<f64> = bounds
            .lower()
            .iter()
            .zip(bounds.upper())
            .map(|(&lo, &hi)| rng.random_range(lo..=hi))
            .collect();
        let fitness = sanitize(objective.evaluate_unchecked(&position, &mut noise));
        scouts.push(ScoutBee {
            position,
            pace: vec![0.0; dim],
            fitness,
        });
    }

    let weight_factors = match (config.mode, config.wf_scope) {
        (Mode::Fdo, _) => vec![config.fdo_wf; config.population],
        (Mode::Ifdo, WfScope::Scout) => (0..config.population)
            .map(|_| rng.random::<f64>())
            .collect(),
        (Mode::Ifdo, WfScope::Swarm) => vec![rng.random::<f64>(); config.population],
    };

    let best = scouts.iter().enumerate().fold(
        0,
        |b, (i, s)| if s.fitness < scouts[b].fitness { i } else { b },
    );
    Ok(SwarmState {
        best_position: scouts[best].position.clone(),
        best_fitness: scouts[best].fitness,
        scouts,
        iteration: 0,
        weight_factors,
        mode: config.mode,
        wf_scope: config.wf_scope,
        nl: neighbor_landscape(bounds),
        levy: Levy::default(),
        rng,
        noise,
    })
}

impl SwarmState {
    pub fn scouts(&self) -> &[ScoutBee] {
        &self.scouts
    }

    pub fn global_best_position(&self) -> &[f64] {
        &self.best_position
    }

    pub fn global_best_fitness(&self) -> f64 {
        self.best_fitness
    }

    pub fn iteration(&self) -> usize {
        self.iteration
    }

    pub fn weight_factors(&self) -> &[f64] {
        &self.weight_factors
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn neighbor_radius(&self) -> f64 {
        self.nl
    }

    fn evaluate(&mut self, x: &[f64], objective: &ObjectiveSpec) -> f64 {
        let f = sanitize(objective.evaluate_unchecked(x, &mut self.noise));
        if f < self.best_fitness {
            self.best_fitness = f;
            self.best_position = x.to_vec();
        }
        f
    }

    fn shrink_weight_factor(&mut self, i: usize) {
        let wf = update_weight_factor(self.weight_factors[i], true, self.mode, &mut self.rng);
        match self.wf_scope {
            WfScope::Scout => self.weight_factors[i] = wf,
            WfScope::Swarm => self.weight_factors.iter_mut().for_each(|w| *w = wf),
        }
    }

    /// One full iteration: every scout, in index order, tries a fresh pace and
    /// then its saved pace, keeping whichever first improves its fitness.
    pub fn step(&mut self, objective: &ObjectiveSpec) {
        let dim = objective.dimension();
        for i in 0..self.scouts.len() {
            let r = self.levy.sample(&mut self.rng);
            let current = self.scouts[i].fitness;
            let fw = compute_fitness_weight(
                self.best_fitness,
                current,
                self.weight_factors[i],
                self.mode,
            );
            let ctx = match self.mode {
                Mode::Ifdo => neighborhood(i, &self.scouts, self.nl),
                Mode::Fdo => NeighborhoodContext::empty(self.nl, dim),
            };
            let pace = compute_pace(
                &self.scouts[i].position,
                &self.best_position,
                fw,
                r,
                &self.levy,
                &mut self.rng,
            );

            let mut candidate = propose_position(&self.scouts[i].position, &pace, &ctx, self.mode);
            enforce_bounds(&mut candidate, &objective.bounds, &mut self.rng);
            let f = self.evaluate(&candidate, objective);
            if f < current {
                let scout = &mut self.scouts[i];
                scout.position = candidate;
                scout.pace = pace;
                scout.fitness = f;
                self.shrink_weight_factor(i);
                continue;
            }

            let mut retry = propose_position(
                &self.scouts[i].position,
                &self.scouts[i].pace,
                &ctx,
                self.mode,
            );
            enforce_bounds(&mut retry, &objective.bounds, &mut self.rng);
            let f = self.evaluate(&retry, objective);
            if f < current {
                let scout = &mut self.scouts[i];
                scout.position = retry;
                scout.fitness = f;
                self.shrink_weight_factor(i);
            }
        }
        self.iteration += 1;
    }
}

/// Trace and outcome of a single run. Equality ignores `wall_time`.
#[derive(Debug, Clone)]
pub struct RunRecord {
    pub seed: u64,
    /// Global best after each iteration; length equals the iteration count.
    pub trace: Vec<f64>,
    pub best_position: Vec<f64>,
    pub best_fitness: f64,
    /// 1-based iteration at which `best_fitness` was first reached.
    pub first_best_iteration: usize,
    /// `positions[t][agent]` after iteration `t + 1`, when recorded.
    pub positions: Option<Vec<Vec<Vec<f64>>>>,
    pub wall_time: Duration,
}

impl PartialEq for RunRecord {
    fn eq(&self, other: &Self) -> bool {
        self.seed == other.seed
            && self.trace == other.trace
            && self.best_position == other.best_position
            && self.best_fitness == other.best_fitness
            && self.first_best_iteration == other.first_best_iteration
            && self.positions == other.positions
    }
}

/// Initializes a swarm and runs `config.iterations` steps.
pub fn run(config: &RunConfig, objective: &ObjectiveSpec) -> Result<RunRecord> {
    let started = Instant::now();
    let mut swarm = init_population(config, objective)?;
    let mut trace = Vec::with_capacity(config.iterations);
    let mut positions = config
        .record_positions
        .then(|| Vec::with_capacity(config.iterations));
    for _ in 0..config.iterations {
        swarm.step(objective);
        trace.push(swarm.best_fitness);
        if let Some(history) = positions.as_mut() {
            history.push(swarm.scouts.iter().map(|s| s.position.clone()).collect());
        }
    }
    let first_best_iteration = trace
        .iter()
        .position(|&v| v == swarm.best_fitness)
        .map_or(config.iterations, |t| t + 1);
    Ok(RunRecord {
        seed: config.seed,
        trace,
        best_position: swarm.best_position,
        best_fitness: swarm.best_fitness,
        first_best_iteration,
        positions,
        wall_time: started.elapsed(),
    })
}
