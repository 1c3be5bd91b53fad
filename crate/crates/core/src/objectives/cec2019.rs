//! The ten CEC-C06 2019 "100-digit challenge" functions in their raw form:
//! no shift, no rotation, no per-function input scaling and no +1 bias.

use std::f64::consts::{E, PI};

use super::classical;

/// Chebyshev fitting threshold for the degree-8 polynomial at 1.2.
const CHEBYSHEV_D: f64 = 72.661;
/// Offset that lifts the 6-atom Lennard-Jones minimum to roughly zero.
const LENNARD_JONES_OFFSET: f64 = 12.712_062_256_8;
/// Schwefel offset `z = x + 420.968...`.
const SCHWEFEL_SHIFT: f64 = 420.968_746_227_503_6;
const SCHWEFEL_CONST: f64 = 418.982_9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CecFn {
    Chebyshev,
    InverseHilbert,
    LennardJones,
    Rastrigin,
    Griewank,
    Weierstrass,
    ModifiedSchwefel,
    ExpandedSchafferF6,
    HappyCat,
    Ackley,
}

impl CecFn {
    pub const ALL: [CecFn; 10] = [
        CecFn::Chebyshev,
        CecFn::InverseHilbert,
        CecFn::LennardJones,
        CecFn::Rastrigin,
        CecFn::Griewank,
        CecFn::Weierstrass,
        CecFn::ModifiedSchwefel,
        CecFn::ExpandedSchafferF6,
        CecFn::HappyCat,
        CecFn::Ackley,
    ];

    pub fn number(self) -> u8 {
        self as u8 + 1
    }

    pub fn from_number(n: u8) -> Option<CecFn> {
        CecFn::ALL.get(n.checked_sub(1)? as usize).copied()
    }

    pub fn name(self) -> &'static str {
        match self {
            CecFn::Chebyshev => "Storn's Chebyshev polynomial fitting",
            CecFn::InverseHilbert => "Inverse Hilbert matrix",
            CecFn::LennardJones => "Lennard-Jones minimum energy cluster",
            CecFn::Rastrigin => "Rastrigin",
            CecFn::Griewank => "Griewank",
            CecFn::Weierstrass => "Weierstrass",
            CecFn::ModifiedSchwefel => "Modified Schwefel",
            CecFn::ExpandedSchafferF6 => "Expanded Schaffer F6",
            CecFn::HappyCat => "Happy Cat",
            CecFn::Ackley => "Ackley",
        }
    }

    /// (dimension, half-width of the symmetric box).
    pub fn table_row(self) -> (usize, f64) {
        match self {
            CecFn::Chebyshev => (9, 8192.0),
            CecFn::InverseHilbert => (16, 16384.0),
            CecFn::LennardJones => (18, 4.0),
            _ => (10, 100.0),
        }
    }

    pub fn eval(self, x: &[f64]) -> f64 {
        match self {
            CecFn::Chebyshev => chebyshev(x),
            CecFn::InverseHilbert => inverse_hilbert(x),
            CecFn::LennardJones => lennard_jones(x),
            CecFn::Rastrigin => classical::rastrigin(x),
            CecFn::Griewank => classical::griewank(x),
            CecFn::Weierstrass => classical::weierstrass(x),
            CecFn::ModifiedSchwefel => modified_schwefel(x),
            CecFn::ExpandedSchafferF6 => expanded_schaffer_f6(x),
            CecFn::HappyCat => happy_cat(x),
            CecFn::Ackley => ackley(x),
        }
    }

    /// A known minimizer of the raw function, used to establish its floor.
    pub fn minimizer(self) -> Vec<f64> {
        let (dim, _) = self.table_row();
        match self {
            CecFn::Chebyshev => chebyshev_t8_coefficients().to_vec(),
            CecFn::InverseHilbert => inverse_hilbert_4(),
            CecFn::LennardJones => lennard_jones_octahedron(),
            CecFn::ModifiedSchwefel => vec![0.0; dim],
            CecFn::HappyCat => vec![-1.0; dim],
            _ => vec![0.0; dim],
        }
    }

    /// Lowest value of the raw function, evaluated at [`CecFn::minimizer`].
    pub fn floor(self) -> f64 {
        self.eval(&self.minimizer())
    }
}

/// Horner evaluation of `Σ x_j t^(D-1-j)`, highest power first.
fn horner(x: &[f64], t: f64) -> f64 {
    x.iter().fold(0.0, |acc, c| acc * t + c)
}

pub fn chebyshev(x: &[f64]) -> f64 {
    let dim = x.len();
    let m = 32 * dim;
    let u = horner(x, 1.2);
    let v = horner(x, -1.2);
    let p1 = if u < CHEBYSHEV_D {
        (u - CHEBYSHEV_D).powi(2)
    } else {
        0.0
    };
    let p2 = if v < CHEBYSHEV_D {
        (v - CHEBYSHEV_D).powi(2)
    } else {
        0.0
    };
    let p3: f64 = (0..=m)
        .map(|k| {
            let w = horner(x, 2.0 * k as f64 / m as f64 - 1.0);
            if w > 1.0 {
                (w - 1.0).powi(2)
            } else if w < -1.0 {
                (w + 1.0).powi(2)
            } else {
                0.0
            }
        })
        .sum();
    p1 + p2 + p3
}

/// Coefficients of T8, highest power first.
pub fn chebyshev_t8_coefficients() -> [f64; 9] {
    [128.0, 0.0, -256.0, 0.0, 160.0, 0.0, -32.0, 0.0, 1.0]
}

/// `Σ |(H·Z - I)_ik|` where Z is x read row-major as an n×n matrix.
pub fn inverse_hilbert(x: &[f64]) -> f64 {
    let n = (x.len() as f64).sqrt().round() as usize;
    let mut total = 0.0;
    for i in 0..n {
        for k in 0..n {
            let hz: f64 = (0..n).map(|j| x[j * n + k] / (i + j + 1) as f64).sum();
            let target = if i == k { 1.0 } else { 0.0 };
            total += (hz - target).abs();
        }
    }
    total
}

fn inverse_hilbert_4() -> Vec<f64> {
    vec![
        16.0, -120.0, 240.0, -140.0, //
        -120.0, 1200.0, -2700.0, 1680.0, //
        240.0, -2700.0, 6480.0, -4200.0, //
        -140.0, 1680.0, -4200.0, 2800.0,
    ]
}

pub fn lennard_jones(x: &[f64]) -> f64 {
    let atoms = x.len() / 3;
    let mut energy = 0.0;
    for i in 0..atoms {
        for j in i + 1..atoms {
            let (a, b) = (3 * i, 3 * j);
            let d2 = (x[a] - x[b]).powi(2)
                + (x[a + 1] - x[b + 1]).powi(2)
                + (x[a + 2] - x[b + 2]).powi(2);
            let d6 = d2 * d2 * d2;
            energy += if d6 > 1e-10 {
                (1.0 / d6 - 2.0) / d6
            } else {
                1e20
            };
        }
    }
    energy + LENNARD_JONES_OFFSET
}

/// Octahedral 6-atom cluster at its energy-minimizing scale.
fn lennard_jones_octahedron() -> Vec<f64> {
    let place = |a: f64| -> Vec<f64> {
        let mut p = Vec::with_capacity(18);
        for axis in 0..3 {
            for sign in [1.0, -1.0] {
                let mut atom = [0.0; 3];
                atom[axis] = sign * a;
                p.extend_from_slice(&atom);
            }
        }
        p
    };
    // golden-section search on the half-diagonal; energy is unimodal around 0.79
    let (mut lo, mut hi) = (0.6_f64, 1.0_f64);
    let g = (5.0_f64.sqrt() - 1.0) / 2.0;
    for _ in 0..200 {
        let c = hi - g * (hi - lo);
        let d = lo + g * (hi - lo);
        if lennard_jones(&place(c)) < lennard_jones(&place(d)) {
            hi = d;
        } else {
            lo = c;
        }
    }
    place(0.5 * (lo + hi))
}

fn schwefel_term(z: f64, dim: f64) -> f64 {
    if z.abs() <= 500.0 {
        z * z.abs().sqrt().sin()
    } else if z > 500.0 {
        let r = 500.0 - z % 500.0;
        r * r.abs().sqrt().sin() - (z - 500.0).powi(2) / (10_000.0 * dim)
    } else {
        let r = z.abs() % 500.0 - 500.0;
        r * r.abs().sqrt().sin() - (z + 500.0).powi(2) / (10_000.0 * dim)
    }
}

pub fn modified_schwefel(x: &[f64]) -> f64 {
    let dim = x.len() as f64;
    let s: f64 = x
        .iter()
        .map(|v| schwefel_term(v + SCHWEFEL_SHIFT, dim))
        .sum();
    SCHWEFEL_CONST * dim - s
}

fn schaffer_pair(a: f64, b: f64) -> f64 {
    let r2 = a * a + b * b;
    0.5 + (r2.sqrt().sin().powi(2) - 0.5) / (1.0 + 0.001 * r2).powi(2)
}

pub fn expanded_schaffer_f6(x: &[f64]) -> f64 {
    let n = x.len();
    (0..n).map(|i| schaffer_pair(x[i], x[(i + 1) % n])).sum()
}

pub fn happy_cat(x: &[f64]) -> f64 {
    let dim = x.len() as f64;
    let sq: f64 = x.iter().map(|v| v * v).sum();
    let sum: f64 = x.iter().sum();
    (sq - dim).abs().powf(0.25) + (0.5 * sq + sum) / dim + 0.5
}

pub fn ackley(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let sq: f64 = x.iter().map(|v| v * v).sum();
    let cs: f64 = x.iter().map(|v| (2.0 * PI * v).cos()).sum();
    E - 20.0 * (-0.2 * (sq / n).sqrt()).exp() - (cs / n).exp() + 20.0
}
