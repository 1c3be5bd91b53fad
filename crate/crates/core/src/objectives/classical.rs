//! Classical unimodal and multimodal test functions (TF1 to TF13).
//!
//! Every function here takes the already-shifted argument `z`; shifting is
//! applied by [`ObjectiveSpec`](super::ObjectiveSpec).

use std::f64::consts::{E, PI};

use rand::{Rng, RngCore};

pub fn sphere(z: &[f64]) -> f64 {
    z.iter().map(|v| v * v).sum()
}

/// Schwefel 2.22: `Σ|z| + Π|z|`.
pub fn schwefel_2_22(z: &[f64]) -> f64 {
    let sum: f64 = z.iter().map(|v| v.abs()).sum();
    let prod: f64 = z.iter().map(|v| v.abs()).product();
    sum + prod
}

/// Schwefel 1.2: sum of squared prefix sums.
pub fn schwefel_1_2(z: &[f64]) -> f64 {
    let mut prefix = 0.0;
    let mut total = 0.0;
    for v in z {
        prefix += v;
        total += prefix * prefix;
    }
    total
}

/// Schwefel 2.21: `max |z_i|`.
pub fn schwefel_2_21(z: &[f64]) -> f64 {
    z.iter().fold(0.0, |m: f64, v| m.max(v.abs()))
}

pub fn rosenbrock(z: &[f64]) -> f64 {
    z.windows(2)
        .map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (w[0] - 1.0).powi(2))
        .sum()
}

/// Step function `Σ floor(z + 0.5)²`.
pub fn step(z: &[f64]) -> f64 {
    z.iter().map(|v| (v + 0.5).floor().powi(2)).sum()
}

/// Deterministic part of the noisy quartic, `Σ i·z_i⁴`.
pub fn quartic(z: &[f64]) -> f64 {
    z.iter()
        .enumerate()
        .map(|(i, v)| (i + 1) as f64 * v.powi(4))
        .sum()
}

pub fn quartic_noisy(z: &[f64], noise: &mut dyn RngCore) -> f64 {
    quartic(z) + noise.random::<f64>()
}

/// TF8 kernel as printed: `Σ -z² sin(√|z|)`.
pub fn schwefel_squared(z: &[f64]) -> f64 {
    z.iter().map(|v| -v * v * v.abs().sqrt().sin()).sum()
}

pub fn rastrigin(z: &[f64]) -> f64 {
    z.iter()
        .map(|v| v * v - 10.0 * (2.0 * PI * v).cos() + 10.0)
        .sum()
}

pub fn ackley(z: &[f64]) -> f64 {
    let n = z.len() as f64;
    let sq: f64 = z.iter().map(|v| v * v).sum();
    let cs: f64 = z.iter().map(|v| (2.0 * PI * v).cos()).sum();
    -20.0 * (-0.2 * (sq / n).sqrt()).exp() - (cs / n).exp() + 20.0 + E
}

pub fn griewank(z: &[f64]) -> f64 {
    let sq: f64 = z.iter().map(|v| v * v).sum();
    let prod: f64 = z
        .iter()
        .enumerate()
        .map(|(i, v)| (v / ((i + 1) as f64).sqrt()).cos())
        .product();
    sq / 4000.0 - prod + 1.0
}

const WEIERSTRASS_A: f64 = 0.5;
const WEIERSTRASS_B: f64 = 3.0;
const WEIERSTRASS_KMAX: i32 = 20;

/// Weierstrass with a = 0.5, b = 3, k_max = 20; zero at the origin.
pub fn weierstrass(z: &[f64]) -> f64 {
    let mut total = 0.0;
    let mut offset = 0.0;
    for k in 0..=WEIERSTRASS_KMAX {
        let ak = WEIERSTRASS_A.powi(k);
        let bk = WEIERSTRASS_B.powi(k);
        for v in z {
            total += ak * (2.0 * PI * bk * (v + 0.5)).cos();
        }
        offset += ak * (PI * bk).cos();
    }
    total - z.len() as f64 * offset
}

/// Penalty term `u(z, a, k, m)`.
pub fn penalty_u(z: f64, a: f64, k: f64, m: i32) -> f64 {
    if z > a {
        k * (z - a).powi(m)
    } else if z < -a {
        k * (-z - a).powi(m)
    } else {
        0.0
    }
}

/// Generalized penalized function 1; minimum 0 at z = (-1, ..., -1).
pub fn penalized_1(z: &[f64]) -> f64 {
    let n = z.len();
    let y: Vec<f64> = z.iter().map(|v| 1.0 + (v + 1.0) / 4.0).collect();
    let mut inner = 10.0 * (PI * y[0]).sin().powi(2);
    for i in 0..n - 1 {
        inner += (y[i] - 1.0).powi(2) * (1.0 + 10.0 * (PI * y[i + 1]).sin().powi(2));
    }
    inner += (y[n - 1] - 1.0).powi(2);
    let pen: f64 = z.iter().map(|&v| penalty_u(v, 10.0, 100.0, 4)).sum();
    PI / n as f64 * inner + pen
}

/// Generalized penalized function 2; minimum 0 at z = (1, ..., 1).
pub fn penalized_2(z: &[f64]) -> f64 {
    let n = z.len();
    let mut inner = (3.0 * PI * z[0]).sin().powi(2);
    for v in z {
        inner += (v - 1.0).powi(2) * (1.0 + (3.0 * PI * v + 1.0).sin().powi(2));
    }
    inner += (z[n - 1] - 1.0).powi(2) * (1.0 + (2.0 * PI * z[n - 1]).sin().powi(2));
    let pen: f64 = z.iter().map(|&v| penalty_u(v, 5.0, 100.0, 4)).sum();
    0.1 * inner + pen
}

/// The thirteen non-composite classical functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassicalFn {
    Tf1,
    Tf2,
    Tf3,
    Tf4,
    Tf5,
    Tf6,
    Tf7,
    Tf8,
    Tf9,
    Tf10,
    Tf11,
    Tf12,
    Tf13,
}

impl ClassicalFn {
    pub const ALL: [ClassicalFn; 13] = [
        ClassicalFn::Tf1,
        ClassicalFn::Tf2,
        ClassicalFn::Tf3,
        ClassicalFn::Tf4,
        ClassicalFn::Tf5,
        ClassicalFn::Tf6,
        ClassicalFn::Tf7,
        ClassicalFn::Tf8,
        ClassicalFn::Tf9,
        ClassicalFn::Tf10,
        ClassicalFn::Tf11,
        ClassicalFn::Tf12,
        ClassicalFn::Tf13,
    ];

    pub fn number(self) -> u8 {
        self as u8 + 1
    }

    /// Minimizer of the base function, added back after shifting so that the
    /// shifted optimum sits exactly at the shift vector.
    pub fn base_minimizer(self) -> f64 {
        match self {
            ClassicalFn::Tf5 | ClassicalFn::Tf13 => 1.0,
            ClassicalFn::Tf12 => -1.0,
            _ => 0.0,
        }
    }

    /// (half-width of the symmetric box, shift component); TF12 shifts its first
    /// coordinate by -30 and the rest by +30.
    pub(crate) fn table_row(self) -> (f64, f64) {
        match self {
            ClassicalFn::Tf1 | ClassicalFn::Tf3 | ClassicalFn::Tf4 => (100.0, -30.0),
            ClassicalFn::Tf2 => (10.0, -3.0),
            ClassicalFn::Tf5 => (30.0, -15.0),
            ClassicalFn::Tf6 => (100.0, -750.0),
            ClassicalFn::Tf7 => (1.28, -0.25),
            ClassicalFn::Tf8 => (500.0, -300.0),
            ClassicalFn::Tf9 => (5.12, -2.0),
            ClassicalFn::Tf10 => (32.0, 0.0),
            ClassicalFn::Tf11 => (600.0, -400.0),
            ClassicalFn::Tf12 => (50.0, 30.0),
            ClassicalFn::Tf13 => (50.0, -100.0),
        }
    }

    /// Evaluates the base function on an already shifted argument.
    pub fn eval(self, z: &[f64], noise: &mut dyn RngCore) -> f64 {
        match self {
            ClassicalFn::Tf1 => sphere(z),
            ClassicalFn::Tf2 => schwefel_2_22(z),
            ClassicalFn::Tf3 => schwefel_1_2(z),
            ClassicalFn::Tf4 => schwefel_2_21(z),
            ClassicalFn::Tf5 => rosenbrock(z),
            ClassicalFn::Tf6 => step(z),
            ClassicalFn::Tf7 => quartic_noisy(z, noise),
            ClassicalFn::Tf8 => schwefel_squared(z),
            ClassicalFn::Tf9 => rastrigin(z),
            ClassicalFn::Tf10 => ackley(z),
            ClassicalFn::Tf11 => griewank(z),
            ClassicalFn::Tf12 => penalized_1(z),
            ClassicalFn::Tf13 => penalized_2(z),
        }
    }
}
