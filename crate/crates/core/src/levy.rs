//! Lévy-flight random walk factor.
//!
//! Raw steps come from Mantegna's algorithm, `u / |v|^(1/β)` with
//! `u ~ N(0, σ_u²)`, `v ~ N(0, 1)`. The walk factor is `0.01 · step` clamped
//! into `[-1, 1]`.

use rand::Rng;
use rand_distr::{Distribution, StandardNormal};
use statrs::function::gamma::gamma;

pub const DEFAULT_BETA: f64 = 1.5;
pub const STEP_SCALE: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Levy {
    beta: f64,
    sigma_u: f64,
}

impl Default for Levy {
    fn default() -> Self {
        Levy::new(DEFAULT_BETA)
    }
}

impl Levy {
    /// `beta` is the stability index, in (0, 2].
    pub fn new(beta: f64) -> Self {
        assert!(
            beta > 0.0 && beta <= 2.0,
            "stability index out of range: {beta}"
        );
        Levy {
            beta,
            sigma_u: mantegna_sigma(beta),
        }
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn sigma_u(&self) -> f64 {
        self.sigma_u
    }

    /// One unclamped Mantegna step.
    pub fn raw_step<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let u: f64 = StandardNormal.sample(rng);
        let v: f64 = StandardNormal.sample(rng);
        self.sigma_u * u / v.abs().powf(1.0 / self.beta)
    }

    /// Walk factor in `[-1, 1]`.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let step = STEP_SCALE * self.raw_step(rng);
        if step.is_nan() {
            0.0
        } else {
            step.clamp(-1.0, 1.0)
        }
    }
}

fn mantegna_sigma(beta: f64) -> f64 {
    let num = gamma(1.0 + beta) * (std::f64::consts::PI * beta / 2.0).sin();
    let den = gamma((1.0 + beta) / 2.0) * beta * 2f64.powf((beta - 1.0) / 2.0);
    (num / den).powf(1.0 / beta)
}

/// Walk factor with the default stability index.
pub fn levy_random<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    Levy::default().sample(rng)
}
