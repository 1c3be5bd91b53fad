//! Hybrid composition functions (TF14 to TF19).
//!
//! Each composite blends ten basic functions, each centred on its own optimum
//! `o_i`, stretched by `λ_i` and normalized to a common magnitude. Rotations are
//! identity and biases are zero.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::classical;
use crate::error::{Error, Result};

pub const COMPOSITE_DIM: usize = 10;
pub const COMPONENTS: usize = 10;
pub const COMPOSITE_BOUND: f64 = 5.0;
/// Magnitude each component is normalized to.
pub const NORMALIZATION: f64 = 2000.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasicFn {
    Sphere,
    Griewank,
    Ackley,
    Rastrigin,
    Weierstrass,
}

impl BasicFn {
    pub fn eval(self, z: &[f64]) -> f64 {
        match self {
            BasicFn::Sphere => classical::sphere(z),
            BasicFn::Griewank => classical::griewank(z),
            BasicFn::Ackley => classical::ackley(z),
            BasicFn::Rastrigin => classical::rastrigin(z),
            BasicFn::Weierstrass => classical::weierstrass(z),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CompositeSpec {
    pub components: [BasicFn; COMPONENTS],
    pub sigmas: [f64; COMPONENTS],
    pub lambdas: [f64; COMPONENTS],
    pub optima: Vec<Vec<f64>>,
    pub biases: [f64; COMPONENTS],
    /// `|f_i(ub / λ_i)|`, precomputed.
    f_max: [f64; COMPONENTS],
}

impl CompositeSpec {
    pub fn new(
        components: [BasicFn; COMPONENTS],
        sigmas: [f64; COMPONENTS],
        lambdas: [f64; COMPONENTS],
        optima: Vec<Vec<f64>>,
        biases: [f64; COMPONENTS],
    ) -> Result<Self> {
        if sigmas.iter().any(|s| !(*s > 0.0)) {
            return Err(Error::Config("composite sigmas must be positive".into()));
        }
        if lambdas.iter().any(|l| !(*l > 0.0)) {
            return Err(Error::Config("composite lambdas must be positive".into()));
        }
        if optima.len() != COMPONENTS || optima.iter().any(|o| o.len() != COMPOSITE_DIM) {
            return Err(Error::Config(format!(
                "composite needs {COMPONENTS} optima of length {COMPOSITE_DIM}"
            )));
        }
        let mut f_max = [0.0; COMPONENTS];
        for i in 0..COMPONENTS {
            let probe = vec![COMPOSITE_BOUND / lambdas[i]; COMPOSITE_DIM];
            f_max[i] = components[i].eval(&probe).abs();
        }
        Ok(CompositeSpec {
            components,
            sigmas,
            lambdas,
            optima,
            biases,
            f_max,
        })
    }

    /// Component optima drawn from a fixed seed inside the box, with the first
    /// pinned to the origin.
    pub fn seeded_optima(seed: u64) -> Vec<Vec<f64>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..COMPONENTS)
            .map(|i| {
                if i == 0 {
                    vec![0.0; COMPOSITE_DIM]
                } else {
                    (0..COMPOSITE_DIM)
                        .map(|_| rng.random_range(-COMPOSITE_BOUND..=COMPOSITE_BOUND))
                        .collect()
                }
            })
            .collect()
    }

    pub fn evaluate(&self, x: &[f64]) -> Result<f64> {
        if x.len() != COMPOSITE_DIM {
            return Err(Error::DimensionMismatch {
                expected: COMPOSITE_DIM,
                got: x.len(),
            });
        }
        Ok(self.evaluate_unchecked(x))
    }

    pub(crate) fn evaluate_unchecked(&self, x: &[f64]) -> f64 {
        let d = x.len() as f64;
        let mut weights = [0.0; COMPONENTS];
        for (i, w) in weights.iter_mut().enumerate() {
            let dist2: f64 = x
                .iter()
                .zip(&self.optima[i])
                .map(|(a, b)| (a - b) * (a - b))
                .sum();
            *w = (-dist2 / (2.0 * d * self.sigmas[i] * self.sigmas[i])).exp();
        }
        let max_w = weights.iter().copied().fold(0.0, f64::max);
        let damp = 1.0 - max_w.powi(10);
        for w in weights.iter_mut() {
            if *w != max_w {
                *w *= damp;
            }
        }
        let total: f64 = weights.iter().sum();
        if total > 0.0 {
            weights.iter_mut().for_each(|w| *w /= total);
        } else {
            weights = [1.0 / COMPONENTS as f64; COMPONENTS];
        }

        let mut z = vec![0.0; x.len()];
        let mut value = 0.0;
        for i in 0..COMPONENTS {
            if weights[i] == 0.0 {
                continue;
            }
            for (j, zj) in z.iter_mut().enumerate() {
                *zj = (x[j] - self.optima[i][j]) / self.lambdas[i];
            }
            let raw = self.components[i].eval(&z);
            let scaled = if self.f_max[i] > 0.0 {
                NORMALIZATION * raw / self.f_max[i]
            } else {
                raw
            };
            value += weights[i] * (scaled + self.biases[i]);
        }
        value
    }
}

fn table_5_row(number: u8) -> ([BasicFn; COMPONENTS], [f64; COMPONENTS], [f64; COMPONENTS]) {
    use BasicFn::*;
    const ONES: [f64; COMPONENTS] = [1.0; COMPONENTS];
    match number {
        14 => ([Sphere; COMPONENTS], ONES, [5.0 / 100.0; COMPONENTS]),
        15 => ([Griewank; COMPONENTS], ONES, [5.0 / 100.0; COMPONENTS]),
        16 => ([Griewank; COMPONENTS], ONES, ONES),
        17 => (
            [
                Ackley,
                Ackley,
                Rastrigin,
                Rastrigin,
                Weierstrass,
                Weierstrass,
                Griewank,
                Griewank,
                Sphere,
                Sphere,
            ],
            ONES,
            [
                5.0 / 32.0,
                5.0 / 32.0,
                1.0,
                1.0,
                5.0 / 0.5,
                5.0 / 0.5,
                5.0 / 100.0,
                5.0 / 100.0,
                5.0 / 100.0,
                5.0 / 100.0,
            ],
        ),
        18 => (
            [
                Rastrigin,
                Rastrigin,
                Weierstrass,
                Weierstrass,
                Griewank,
                Griewank,
                Ackley,
                Ackley,
                Sphere,
                Sphere,
            ],
            ONES,
            [
                1.0 / 5.0,
                1.0 / 5.0,
                5.0 / 0.5,
                5.0 / 0.5,
                5.0 / 100.0,
                5.0 / 100.0,
                5.0 / 32.0,
                5.0 / 32.0,
                5.0 / 100.0,
                5.0 / 100.0,
            ],
        ),
        19 => (
            [
                Rastrigin,
                Rastrigin,
                Weierstrass,
                Weierstrass,
                Griewank,
                Griewank,
                Ackley,
                Ackley,
                Sphere,
                Sphere,
            ],
            [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0],
            [
                0.1 * 1.0 / 5.0,
                0.2 * 1.0 / 5.0,
                0.3 * 5.0 / 0.5,
                0.4 * 5.0 / 0.5,
                0.5 * 5.0 / 100.0,
                0.6 * 5.0 / 100.0,
                0.7 * 5.0 / 32.0,
                0.8 * 5.0 / 32.0,
                0.9 * 5.0 / 100.0,
                1.0 * 5.0 / 100.0,
            ],
        ),
        _ => unreachable!("composite functions are TF14..=TF19"),
    }
}

/// Builds the composite spec for TF14..=TF19.
pub fn table_5(number: u8) -> CompositeSpec {
    assert!((14..=19).contains(&number), "TF{number} is not a composite");
    let (components, sigmas, lambdas) = table_5_row(number);
    let optima = CompositeSpec::seeded_optima(2005 + number as u64);
    CompositeSpec::new(components, sigmas, lambdas, optima, [0.0; COMPONENTS])
        .expect("table parameters are valid")
}
