//! Exit placement on the wall of a rectangular open area.
//!
//! The decision variable is an arclength `s` along the perimeter, starting at
//! the origin corner and running counter-clockwise (bottom, right, top, left).
//! The objective is the mean evacuation time over all pedestrians.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

pub const MIN_DESIRED_SPEED: f64 = 0.6;
pub const MAX_DESIRED_SPEED: f64 = 1.4;

/// How distance and desired speed combine into an evacuation time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TimeFormula {
    /// `(dist / 2) * speed`, the default.
    #[default]
    HalfDistanceTimesSpeed,
    /// `dist / speed`.
    DistanceOverSpeed,
}

impl FromStr for TimeFormula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "paper" => Ok(TimeFormula::HalfDistanceTimesSpeed),
            "physical" => Ok(TimeFormula::DistanceOverSpeed),
            other => Err(Error::Argument(format!(
                "unknown time formula `{other}` (expected paper|physical)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pedestrian {
    pub position: (f64, f64),
    pub desired_speed: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvacScenario {
    width: f64,
    height: f64,
    pedestrians: Vec<Pedestrian>,
    pub formula: TimeFormula,
}

pub fn evac_distance(p1: (f64, f64), p2: (f64, f64)) -> f64 {
    ((p2.0 - p1.0).powi(2) + (p2.1 - p1.1).powi(2)).sqrt()
}

pub fn evac_time(dist: f64, desired_speed: f64, formula: TimeFormula) -> Result<f64> {
    if !(desired_speed > 0.0) {
        return Err(Error::Argument(format!(
            "desired speed must be positive, got {desired_speed}"
        )));
    }
    Ok(time_unchecked(dist, desired_speed, formula))
}

fn time_unchecked(dist: f64, speed: f64, formula: TimeFormula) -> f64 {
    match formula {
        TimeFormula::HalfDistanceTimesSpeed => (dist / 2.0) * speed,
        TimeFormula::DistanceOverSpeed => dist / speed,
    }
}

impl EvacScenario {
    pub fn new(
        width: f64,
        height: f64,
        pedestrians: Vec<Pedestrian>,
        formula: TimeFormula,
    ) -> Result<Self> {
        if !(width > 0.0 && height > 0.0) || !width.is_finite() || !height.is_finite() {
            return Err(Error::Argument(format!(
                "area must have positive finite sides, got {width} x {height}"
            )));
        }
        if pedestrians.is_empty() {
            return Err(Error::Argument(
                "scenario needs at least one pedestrian".into(),
            ));
        }
        for (i, p) in pedestrians.iter().enumerate() {
            let (x, y) = p.position;
            if !(0.0..=width).contains(&x) || !(0.0..=height).contains(&y) {
                return Err(Error::Argument(format!(
                    "pedestrian {i} at ({x}, {y}) lies outside the area"
                )));
            }
            if !(p.desired_speed > 0.0) || !p.desired_speed.is_finite() {
                return Err(Error::Argument(format!(
                    "pedestrian {i} has non-positive desired speed {}",
                    p.desired_speed
                )));
            }
        }
        Ok(EvacScenario {
            width,
            height,
            pedestrians,
            formula,
        })
    }

    pub fn width(&self) -> f64 {
        self.width
    }

    pub fn height(&self) -> f64 {
        self.height
    }

    pub fn pedestrians(&self) -> &[Pedestrian] {
        &self.pedestrians
    }

    pub fn perimeter(&self) -> f64 {
        2.0 * (self.width + self.height)
    }

    /// Wall point for arclength `s`; values outside `[0, perimeter)` wrap.
    pub fn exit_point(&self, s: f64) -> (f64, f64) {
        let (w, h) = (self.width, self.height);
        let s = s.rem_euclid(self.perimeter());
        if s < w {
            (s, 0.0)
        } else if s < w + h {
            (w, s - w)
        } else if s < 2.0 * w + h {
            (w - (s - w - h), h)
        } else {
            (0.0, h - (s - 2.0 * w - h))
        }
    }

    /// Parses the flat text format: `area W H` followed by one `x y speed` per line.
    pub fn parse(text: &str, formula: TimeFormula, origin: &Path) -> Result<Self> {
        let perr = |line: usize, msg: String| Error::Parse {
            path: origin.to_path_buf(),
            line,
            msg,
        };
        let mut area = None;
        let mut pedestrians = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let num = |s: &str| {
                s.parse::<f64>()
                    .map_err(|e| perr(line_no, format!("bad number `{s}`: {e}")))
            };
            if area.is_none() {
                if fields.len() != 3 || fields[0] != "area" {
                    return Err(perr(line_no, "expected header `area W H`".into()));
                }
                area = Some((num(fields[1])?, num(fields[2])?));
                continue;
            }
            if fields.len() != 3 {
                return Err(perr(line_no, "expected `x y speed`".into()));
            }
            pedestrians.push(Pedestrian {
                position: (num(fields[0])?, num(fields[1])?),
                desired_speed: num(fields[2])?,
            });
        }
        let (w, h) = area.ok_or_else(|| perr(0, "missing `area W H` header".into()))?;
        EvacScenario::new(w, h, pedestrians, formula)
    }

    pub fn read(path: &Path, formula: TimeFormula) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        EvacScenario::parse(&text, formula, path)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("area {:.16e} {:.16e}\n", self.width, self.height);
        for p in &self.pedestrians {
            let _ = writeln!(
                out,
                "{:.16e} {:.16e} {:.16e}",
                p.position.0, p.position.1, p.desired_speed
            );
        }
        out
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_text()).map_err(|e| Error::io(path, e))
    }
}

/// Mean evacuation time with the exit at arclength `exit_parameter`.
pub fn evac_fitness(exit_parameter: f64, scenario: &EvacScenario) -> f64 {
    let exit = scenario.exit_point(exit_parameter);
    let total: f64 = scenario
        .pedestrians
        .iter()
        .map(|p| {
            time_unchecked(
                evac_distance(p.position, exit),
                p.desired_speed,
                scenario.formula,
            )
        })
        .sum();
    total / scenario.pedestrians.len() as f64
}

/// Uniformly scattered pedestrians with desired speeds in [0.6, 1.4] m/s.
pub fn build_scenario(width: f64, height: f64, count: usize, seed: u64) -> Result<EvacScenario> {
    if count == 0 {
        return Err(Error::Argument(
            "pedestrian count must be at least 1".into(),
        ));
    }
    if !(width > 0.0 && height > 0.0) {
        return Err(Error::Argument(format!(
            "area must have positive sides, got {width} x {height}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pedestrians = (0..count)
        .map(|_| Pedestrian {
            position: (
                rng.random_range(0.0..=width),
                rng.random_range(0.0..=height),
            ),
            desired_speed: rng.random_range(MIN_DESIRED_SPEED..=MAX_DESIRED_SPEED),
        })
        .collect();
    EvacScenario::new(width, height, pedestrians, TimeFormula::default())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distances() {
        assert_eq!(evac_distance((0.0, 0.0), (3.0, 4.0)), 5.0);
        assert_eq!(evac_distance((1.0, 1.0), (4.0, 5.0)), 5.0);
        assert_eq!(evac_distance((2.5, -1.0), (2.5, -1.0)), 0.0);
    }

    #[test]
    fn time_formulas() {
        let half = TimeFormula::HalfDistanceTimesSpeed;
        let phys = TimeFormula::DistanceOverSpeed;
        assert!((evac_time(5.0, 1.2, half).unwrap() - 3.0).abs() < 1e-12);
        assert!((evac_time(5.0, 1.25, phys).unwrap() - 4.0).abs() < 1e-12);
        assert_eq!(evac_time(0.0, 0.9, half).unwrap(), 0.0);
        assert_eq!(evac_time(0.0, 0.9, phys).unwrap(), 0.0);
        assert!(evac_time(1.0, 0.0, half).is_err());
        assert!(evac_time(1.0, -1.0, phys).is_err());
    }

    #[test]
    fn formula_names() {
        assert_eq!(
            "paper".parse::<TimeFormula>().unwrap(),
            TimeFormula::HalfDistanceTimesSpeed
        );
        assert_eq!(
            "physical".parse::<TimeFormula>().unwrap(),
            TimeFormula::DistanceOverSpeed
        );
        assert!("fuzzy".parse::<TimeFormula>().is_err());
    }

    #[test]
    fn perimeter_walk() {
        let s = EvacScenario::new(
            4.0,
            2.0,
            vec![Pedestrian {
                position: (1.0, 1.0),
                desired_speed: 1.0,
            }],
            TimeFormula::default(),
        )
        .unwrap();
        assert_eq!(s.perimeter(), 12.0);
        assert_eq!(s.exit_point(0.0), (0.0, 0.0));
        assert_eq!(s.exit_point(3.0), (3.0, 0.0));
        assert_eq!(s.exit_point(5.0), (4.0, 1.0));
        assert_eq!(s.exit_point(7.0), (3.0, 2.0));
        assert_eq!(s.exit_point(11.0), (0.0, 1.0));
        assert_eq!(s.exit_point(12.0), (0.0, 0.0));
    }

    #[test]
    fn single_pedestrian_at_exit() {
        let s = EvacScenario::new(
            10.0,
            10.0,
            vec![Pedestrian {
                position: (3.0, 0.0),
                desired_speed: 1.1,
            }],
            TimeFormula::default(),
        )
        .unwrap();
        assert_eq!(evac_fitness(3.0, &s), 0.0);
    }

    #[test]
    fn symmetric_pair_matches_individual() {
        let peds = vec![
            Pedestrian {
                position: (2.0, 3.0),
                desired_speed: 1.0,
            },
            Pedestrian {
                position: (8.0, 3.0),
                desired_speed: 1.0,
            },
        ];
        let s = EvacScenario::new(10.0, 10.0, peds, TimeFormula::default()).unwrap();
        let single = evac_time(evac_distance((2.0, 3.0), (5.0, 0.0)), 1.0, s.formula).unwrap();
        assert!((evac_fitness(5.0, &s) - single).abs() < 1e-12);
    }

    #[test]
    fn builder_is_deterministic_and_in_box() {
        let a = build_scenario(50.0, 50.0, 200, 9).unwrap();
        let b = build_scenario(50.0, 50.0, 200, 9).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.pedestrians().len(), 200);
        for p in a.pedestrians() {
            assert!((0.0..=50.0).contains(&p.position.0));
            assert!((0.0..=50.0).contains(&p.position.1));
            assert!((MIN_DESIRED_SPEED..=MAX_DESIRED_SPEED).contains(&p.desired_speed));
        }
        assert_eq!(
            build_scenario(5.0, 5.0, 1, 0).unwrap().pedestrians().len(),
            1
        );
        assert!(build_scenario(5.0, 5.0, 0, 0).is_err());
    }

    #[test]
    fn text_format_round_trips() {
        let a = build_scenario(30.0, 20.0, 15, 4).unwrap();
        let b = EvacScenario::parse(&a.to_text(), a.formula, Path::new("mem")).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn parse_errors_carry_line() {
        let err = EvacScenario::parse("area 10 10\n1 2\n", TimeFormula::default(), Path::new("f"))
            .unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(EvacScenario::parse("1 2 3\n", TimeFormula::default(), Path::new("f")).is_err());
        assert!(EvacScenario::parse(
            "area 10 10\n11 2 1\n",
            TimeFormula::default(),
            Path::new("f")
        )
        .is_err());
    }
}
