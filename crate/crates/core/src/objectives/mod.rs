//! Objective catalog: classical TF1–TF19, CEC-C06 2019 CEC01–CEC10 and the two
//! application objectives, all behind one [`ObjectiveSpec`] type.

pub mod cec2019;
pub mod classical;
pub mod composite;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::RngCore;

use crate::applications::{antenna, evac, AntennaProblem, EvacScenario};
use crate::bounds::Bounds;
use crate::error::{Error, Result};

pub use cec2019::CecFn;
pub use classical::ClassicalFn;
pub use composite::{BasicFn, CompositeSpec};

/// Stable identifier used by the CLI and in result files.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ObjectiveId {
    Tf(u8),
    Cec(u8),
    Antenna,
    Evac,
    Custom(String),
}

impl fmt::Display for ObjectiveId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObjectiveId::Tf(n) => write!(f, "TF{n}"),
            ObjectiveId::Cec(n) => write!(f, "CEC{n:02}"),
            ObjectiveId::Antenna => f.write_str("ANTENNA"),
            ObjectiveId::Evac => f.write_str("EVAC"),
            ObjectiveId::Custom(name) => f.write_str(name),
        }
    }
}

impl FromStr for ObjectiveId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let upper = s.trim().to_ascii_uppercase();
        let unknown = || Error::UnknownObjective(s.to_string());
        let parse_num = |digits: &str| digits.parse::<u8>().map_err(|_| unknown());
        if let Some(rest) = upper.strip_prefix("TF") {
            let n = parse_num(rest)?;
            if (1..=19).contains(&n) {
                return Ok(ObjectiveId::Tf(n));
            }
        } else if let Some(rest) = upper.strip_prefix("CEC") {
            let n = parse_num(rest)?;
            if (1..=10).contains(&n) {
                return Ok(ObjectiveId::Cec(n));
            }
        } else if upper == "ANTENNA" {
            return Ok(ObjectiveId::Antenna);
        } else if upper == "EVAC" {
            return Ok(ObjectiveId::Evac);
        }
        Err(unknown())
    }
}

type CustomFn = dyn Fn(&[f64]) -> f64 + Send + Sync;

/// Evaluation rule behind an [`ObjectiveSpec`].
#[derive(Clone)]
pub enum Evaluator {
    Classical(ClassicalFn),
    Composite(Arc<CompositeSpec>),
    Cec(CecFn),
    Antenna(Arc<AntennaProblem>),
    Evac(Arc<EvacScenario>),
    Custom(Arc<CustomFn>),
}

impl fmt::Debug for Evaluator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Evaluator::Classical(c) => write!(f, "Classical({c:?})"),
            Evaluator::Composite(_) => f.write_str("Composite(..)"),
            Evaluator::Cec(c) => write!(f, "Cec({c:?})"),
            Evaluator::Antenna(_) => f.write_str("Antenna(..)"),
            Evaluator::Evac(_) => f.write_str("Evac(..)"),
            Evaluator::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ObjectiveSpec {
    pub id: ObjectiveId,
    pub bounds: Bounds,
    /// The optimum of a shifted function sits at `x = shift`.
    pub shift: Vec<f64>,
    /// Floor used for acceptance, if known.
    pub known_fmin: Option<f64>,
    /// Alternative tabulated minimum, kept as metadata when it disagrees with
    /// `known_fmin`.
    pub tabulated_fmin: Option<f64>,
    pub evaluator: Evaluator,
}

impl ObjectiveSpec {
    pub fn dimension(&self) -> usize {
        self.bounds.dimension()
    }

    /// Wraps a plain closure as an unshifted objective.
    pub fn custom<F>(name: &str, bounds: Bounds, known_fmin: Option<f64>, f: F) -> Self
    where
        F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        ObjectiveSpec {
            id: ObjectiveId::Custom(name.to_string()),
            shift: vec![0.0; bounds.dimension()],
            bounds,
            known_fmin,
            tabulated_fmin: None,
            evaluator: Evaluator::Custom(Arc::new(f)),
        }
    }

    /// Evaluates at `x`. Only TF7 draws from `noise`.
    pub fn evaluate(&self, x: &[f64], noise: &mut dyn RngCore) -> Result<f64> {
        if x.len() != self.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.dimension(),
                got: x.len(),
            });
        }
        Ok(self.evaluate_unchecked(x, noise))
    }

    pub(crate) fn evaluate_unchecked(&self, x: &[f64], noise: &mut dyn RngCore) -> f64 {
        match &self.evaluator {
            Evaluator::Classical(f) => {
                let recentre = f.base_minimizer();
                let z: Vec<f64> = x
                    .iter()
                    .zip(&self.shift)
                    .map(|(v, s)| v - s + recentre)
                    .collect();
                f.eval(&z, noise)
            }
            Evaluator::Composite(c) => c.evaluate_unchecked(x),
            Evaluator::Cec(f) => f.eval(x),
            Evaluator::Antenna(p) => antenna::antenna_fitness(x, p),
            Evaluator::Evac(s) => evac::evac_fitness(x[0], s),
            Evaluator::Custom(f) => f(x),
        }
    }

    /// True for objectives whose value depends on the noise stream.
    pub fn is_noisy(&self) -> bool {
        matches!(self.evaluator, Evaluator::Classical(ClassicalFn::Tf7))
    }
}

pub const CLASSICAL_DIM: usize = 10;
const TF8_RUNTIME_FMIN: f64 = -2_917_375.293_802_09;
const TF8_TABULATED_FMIN: f64 = -418.9829;
const CEC_TABULATED_FMIN: f64 = 1.0;

fn classical_spec(f: ClassicalFn) -> ObjectiveSpec {
    let (half, s) = f.table_row();
    let mut shift = vec![s; CLASSICAL_DIM];
    if f == ClassicalFn::Tf12 {
        shift[0] = -30.0;
    }
    let (known_fmin, tabulated_fmin) = match f {
        ClassicalFn::Tf8 => (Some(TF8_RUNTIME_FMIN), Some(TF8_TABULATED_FMIN)),
        _ => (Some(0.0), None),
    };
    ObjectiveSpec {
        id: ObjectiveId::Tf(f.number()),
        bounds: Bounds::uniform(CLASSICAL_DIM, -half, half).expect("table bounds are valid"),
        shift,
        known_fmin,
        tabulated_fmin,
        evaluator: Evaluator::Classical(f),
    }
}

fn composite_spec(number: u8) -> ObjectiveSpec {
    let dim = composite::COMPOSITE_DIM;
    let b = composite::COMPOSITE_BOUND;
    ObjectiveSpec {
        id: ObjectiveId::Tf(number),
        bounds: Bounds::uniform(dim, -b, b).expect("table bounds are valid"),
        shift: vec![0.0; dim],
        known_fmin: Some(0.0),
        tabulated_fmin: None,
        evaluator: Evaluator::Composite(Arc::new(composite::table_5(number))),
    }
}

/// All nineteen classical functions, TF1..=TF19, in order.
pub fn catalog() -> Vec<ObjectiveSpec> {
    ClassicalFn::ALL
        .iter()
        .map(|&f| classical_spec(f))
        .chain((14..=19).map(composite_spec))
        .collect()
}

pub fn cec_spec(f: CecFn) -> ObjectiveSpec {
    let (dim, half) = f.table_row();
    ObjectiveSpec {
        id: ObjectiveId::Cec(f.number()),
        bounds: Bounds::uniform(dim, -half, half).expect("table bounds are valid"),
        shift: vec![0.0; dim],
        known_fmin: Some(f.floor()),
        tabulated_fmin: Some(CEC_TABULATED_FMIN),
        evaluator: Evaluator::Cec(f),
    }
}

/// CEC01..=CEC10, in order.
pub fn cec_catalog() -> Vec<ObjectiveSpec> {
    CecFn::ALL.iter().map(|&f| cec_spec(f)).collect()
}

/// Evaluates a CEC function by id with the dimensional gate applied.
pub fn cec_evaluate(f: CecFn, x: &[f64]) -> Result<f64> {
    let (dim, _) = f.table_row();
    if x.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: x.len(),
        });
    }
    Ok(f.eval(x))
}

pub fn antenna_spec(problem: AntennaProblem) -> ObjectiveSpec {
    let bounds = Bounds::uniform(
        antenna::FREE_ELEMENTS,
        problem.lower_bound(),
        problem.upper_bound(),
    )
    .expect("antenna bounds are valid");
    ObjectiveSpec {
        id: ObjectiveId::Antenna,
        shift: vec![0.0; bounds.dimension()],
        bounds,
        known_fmin: None,
        tabulated_fmin: None,
        evaluator: Evaluator::Antenna(Arc::new(problem)),
    }
}

pub fn evac_spec(scenario: EvacScenario) -> ObjectiveSpec {
    let bounds = Bounds::uniform(1, 0.0, scenario.perimeter()).expect("perimeter is positive");
    ObjectiveSpec {
        id: ObjectiveId::Evac,
        shift: vec![0.0],
        bounds,
        known_fmin: None,
        tabulated_fmin: None,
        evaluator: Evaluator::Evac(Arc::new(scenario)),
    }
}

pub const DEFAULT_EVAC_WIDTH: f64 = 50.0;
pub const DEFAULT_EVAC_HEIGHT: f64 = 50.0;
pub const DEFAULT_EVAC_COUNT: usize = 200;

/// Resolves an id to its spec. Application objectives use their default
/// problem (the evacuation scenario is built from seed 0).
pub fn resolve(id: &ObjectiveId) -> Result<ObjectiveSpec> {
    match id {
        ObjectiveId::Tf(n @ 1..=13) => Ok(classical_spec(ClassicalFn::ALL[*n as usize - 1])),
        ObjectiveId::Tf(n @ 14..=19) => Ok(composite_spec(*n)),
        ObjectiveId::Cec(n) => CecFn::from_number(*n)
            .map(cec_spec)
            .ok_or_else(|| Error::UnknownObjective(id.to_string())),
        ObjectiveId::Antenna => Ok(antenna_spec(AntennaProblem::default())),
        ObjectiveId::Evac => Ok(evac_spec(evac::build_scenario(
            DEFAULT_EVAC_WIDTH,
            DEFAULT_EVAC_HEIGHT,
            DEFAULT_EVAC_COUNT,
            0,
        )?)),
        _ => Err(Error::UnknownObjective(id.to_string())),
    }
}
