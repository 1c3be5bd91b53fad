//! Per-scout movement rules: fitness weight, pace, neighbourhood terms,
//! position proposal, boundary repair and weight-factor shrinking.

use std::f64::consts::PI;

use rand::Rng;

use super::{Mode, ScoutBee};
use crate::bounds::Bounds;
use crate::levy::Levy;

/// Tolerance for the `fw == 0` / `fw == 1` tests and the cohesion zero-guard.
pub const EPS: f64 = 1e-12;

/// Fitness weight `fw` for a scout.
///
/// FDO: `|best / current| - wf`. IFDO: `|best / current|`, reduced by `wf`
/// only when it exceeds `wf`. A zero current fitness yields 0.
pub fn compute_fitness_weight(best_fitness: f64, current_fitness: f64, wf: f64, mode: Mode) -> f64 {
    if current_fitness == 0.0 {
        return 0.0;
    }
    let ratio = (best_fitness / current_fitness).abs();
    if ratio.is_nan() {
        return 0.0;
    }
    match mode {
        Mode::Fdo => ratio - wf,
        Mode::Ifdo => {
            if ratio > wf {
                ratio - wf
            } else {
                ratio
            }
        }
    }
}

pub fn is_random_walk_weight(fw: f64) -> bool {
    fw.abs() < EPS || (fw - 1.0).abs() < EPS
}

/// Pace for one scout.
///
/// With `fw` at 0 or 1 the scout random-walks, `pace_j = x_j · r_j`, where each
/// `r_j` is a fresh Lévy draw. Otherwise the pace is `fw · (x - x*)`, negated
/// when `r < 0`.
pub fn compute_pace<R: Rng + ?Sized>(
    position: &[f64],
    best_position: &[f64],
    fw: f64,
    r: f64,
    levy: &Levy,
    rng: &mut R,
) -> Vec<f64> {
    if is_random_walk_weight(fw) {
        return position.iter().map(|x| x * levy.sample(rng)).collect();
    }
    let sign = if r < 0.0 { -1.0 } else { 1.0 };
    position
        .iter()
        .zip(best_position)
        .map(|(x, b)| (x - b) * fw * sign)
        .collect()
}

/// Neighbour radius `lB / 2π`.
pub fn neighbor_landscape(bounds: &Bounds) -> f64 {
    bounds.landscape_boundary() / (2.0 * PI)
}

#[derive(Debug, Clone, PartialEq)]
pub struct NeighborhoodContext {
    pub nl: f64,
    pub neighbor_count: usize,
    /// Mean pace of the neighbours.
    pub alignment: Vec<f64>,
    /// Mean neighbour position minus the scout's own position.
    pub cohesion: Vec<f64>,
}

impl NeighborhoodContext {
    pub fn empty(nl: f64, dim: usize) -> Self {
        NeighborhoodContext {
            nl,
            neighbor_count: 0,
            alignment: vec![0.0; dim],
            cohesion: vec![0.0; dim],
        }
    }
}

fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Alignment and cohesion of scout `index` over every other scout within
/// Euclidean distance `nl`.
pub fn neighborhood(index: usize, scouts: &[ScoutBee], nl: f64) -> NeighborhoodContext {
    let me = &scouts[index];
    let dim = me.position.len();
    let mut ctx = NeighborhoodContext::empty(nl, dim);
    let mut pos_sum = vec![0.0; dim];
    for (k, other) in scouts.iter().enumerate() {
        if k == index || euclidean(&other.position, &me.position) > nl {
            continue;
        }
        ctx.neighbor_count += 1;
        for j in 0..dim {
            ctx.alignment[j] += other.pace[j];
            pos_sum[j] += other.position[j];
        }
    }
    if ctx.neighbor_count > 0 {
        let n = ctx.neighbor_count as f64;
        for j in 0..dim {
            ctx.alignment[j] /= n;
            ctx.cohesion[j] = pos_sum[j] / n - me.position[j];
        }
    }
    ctx
}

/// Candidate position: `X + pace` (FDO) or `X + pace + alignment ⊘ cohesion`
/// (IFDO), where components with `|cohesion| < EPS` contribute nothing.
pub fn propose_position(
    position: &[f64],
    pace: &[f64],
    ctx: &NeighborhoodContext,
    mode: Mode,
) -> Vec<f64> {
    let mut next: Vec<f64> = position.iter().zip(pace).map(|(x, p)| x + p).collect();
    if mode == Mode::Ifdo && ctx.neighbor_count > 0 {
        for (j, v) in next.iter_mut().enumerate() {
            let c = ctx.cohesion[j];
            if c.abs() >= EPS {
                *v += ctx.alignment[j] / c;
            }
        }
    }
    next
}

/// Boundary repair. A coordinate above `ub` becomes `ub · nrd`, one below
/// `lb` becomes `lb · nrd` (fresh `nrd ~ U[0, 1]` per violation), then the
/// result is clamped into the box. Non-finite coordinates are resampled
/// uniformly inside the box.
pub fn enforce_bounds<R: Rng + ?Sized>(position: &mut [f64], bounds: &Bounds, rng: &mut R) {
    for (j, v) in position.iter_mut().enumerate() {
        let (lo, hi) = (bounds.lower()[j], bounds.upper()[j]);
        if v.is_nan() {
            *v = rng.random_range(lo..=hi);
            continue;
        }
        if *v > hi {
            *v = hi * rng.random::<f64>();
        } else if *v < lo {
            *v = lo * rng.random::<f64>();
        }
        *v = v.clamp(lo, hi);
    }
}

/// IFDO shrinks `wf` to a uniform draw in `[0, wf]` after an accepted move;
/// FDO leaves it alone.
pub fn update_weight_factor<R: Rng + ?Sized>(
    wf: f64,
    accepted: bool,
    mode: Mode,
    rng: &mut R,
) -> f64 {
    match mode {
        Mode::Fdo => wf,
        Mode::Ifdo if accepted => wf * rng.random::<f64>(),
        Mode::Ifdo => wf,
    }
}
