//! Symmetric 10-element isotropic linear array with four free element
//! positions per side and the outermost element pinned at 2.25 wavelengths.

use std::f64::consts::PI;

pub const FREE_ELEMENTS: usize = 4;
pub const INFEASIBLE_SCALE: f64 = 1e6;
pub const INFEASIBLE_OFFSET: f64 = 1e3;

#[derive(Debug, Clone, PartialEq)]
pub struct AntennaProblem {
    /// Outermost element, in wavelengths.
    pub fixed_position: f64,
    pub steering_deg: f64,
    pub min_position: f64,
    pub max_position: f64,
    pub min_gap: f64,
    /// Average element spacing the fixed element was derived from.
    pub d_avg: f64,
    /// Sample spacing of the angular grid over [0°, 180°].
    pub grid_step_deg: f64,
    /// Angles with `|cos θ - cos θ_s|` below this are main lobe and skipped.
    pub main_lobe_cos: f64,
    sidelobe_thetas: Vec<f64>,
}

impl Default for AntennaProblem {
    fn default() -> Self {
        AntennaProblem::new(0.25, 1.0 / 4.5)
    }
}

impl AntennaProblem {
    pub fn new(grid_step_deg: f64, main_lobe_cos: f64) -> Self {
        let mut p = AntennaProblem {
            fixed_position: 2.25,
            steering_deg: 90.0,
            min_position: 0.125,
            max_position: 2.0,
            min_gap: 0.25,
            d_avg: 0.5,
            grid_step_deg,
            main_lobe_cos,
            sidelobe_thetas: Vec::new(),
        };
        p.sidelobe_thetas = p.build_sidelobe_grid();
        p
    }

    fn build_sidelobe_grid(&self) -> Vec<f64> {
        let steps = (180.0 / self.grid_step_deg).round() as usize;
        let cos_s = self.steering_deg.to_radians().cos();
        (0..=steps)
            .map(|k| k as f64 * self.grid_step_deg)
            .filter(|t| (t.to_radians().cos() - cos_s).abs() >= self.main_lobe_cos)
            .collect()
    }

    /// Angles (degrees) the sidelobe maximum is taken over.
    pub fn sidelobe_thetas(&self) -> &[f64] {
        &self.sidelobe_thetas
    }

    pub fn lower_bound(&self) -> f64 {
        self.min_position
    }

    pub fn upper_bound(&self) -> f64 {
        self.max_position
    }
}

/// Array factor at `theta_deg` for the given free element positions.
pub fn array_factor(theta_deg: f64, problem: &AntennaProblem, positions: &[f64]) -> f64 {
    let u = (theta_deg.to_radians().cos() - problem.steering_deg.to_radians().cos()) * 2.0 * PI;
    positions.iter().map(|x| (u * x).cos()).sum::<f64>() + (u * problem.fixed_position).cos()
}

/// Total amount by which `candidate` violates the placement constraints.
/// Zero exactly when the layout is feasible.
pub fn constraint_violation(candidate: &[f64], problem: &AntennaProblem) -> f64 {
    let mut v = 0.0;
    for &x in candidate {
        v += (problem.min_position - x).max(0.0);
        v += (x - problem.max_position).max(0.0);
        v += (problem.min_gap - (problem.fixed_position - x).abs()).max(0.0);
    }
    for i in 0..candidate.len() {
        for j in i + 1..candidate.len() {
            v += (problem.min_gap - (candidate[i] - candidate[j]).abs()).max(0.0);
        }
    }
    v
}

pub fn is_feasible(candidate: &[f64], problem: &AntennaProblem) -> bool {
    constraint_violation(candidate, problem) == 0.0
}

/// Peak sidelobe level in dB, or a static penalty for infeasible layouts.
pub fn antenna_fitness(candidate: &[f64], problem: &AntennaProblem) -> f64 {
    let violation = constraint_violation(candidate, problem);
    if violation > 0.0 {
        return INFEASIBLE_SCALE * violation + INFEASIBLE_OFFSET;
    }
    problem
        .sidelobe_thetas
        .iter()
        .map(|&t| 20.0 * array_factor(t, problem, candidate).abs().log10())
        .fold(f64::NEG_INFINITY, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn broadside_sums_all_elements() {
        let p = AntennaProblem::default();
        let af = array_factor(90.0, &p, &[0.3, 0.9, 1.4, 1.9]);
        assert!((af - 5.0).abs() < 1e-12);
        assert!((20.0 * af.log10() - 13.979_400_086_720_376).abs() < 1e-9);
    }

    #[test]
    fn grid_excludes_main_lobe() {
        let p = AntennaProblem::default();
        let thetas = p.sidelobe_thetas();
        assert!(thetas
            .iter()
            .all(|t| t.to_radians().cos().abs() >= 1.0 / 4.5));
        assert!(thetas.contains(&0.0) && thetas.contains(&180.0));
        assert!(!thetas.contains(&90.0));
        // 721 samples on a 0.25° grid; the excluded band is symmetric about 90°
        let excluded = 721 - thetas.len();
        assert!(excluded > 0 && excluded % 2 == 1);
    }

    #[test]
    fn feasibility_and_penalty_agree() {
        let p = AntennaProblem::default();
        let ok = [0.713, 1.595, 0.433, 0.130];
        assert!(is_feasible(&ok, &p));
        assert!(antenna_fitness(&ok, &p) < INFEASIBLE_OFFSET);

        let below_min = [0.701, 1.552, 0.402, 0.103];
        let v = constraint_violation(&below_min, &p);
        assert!((v - 0.022).abs() < 1e-12);
        let f = antenna_fitness(&below_min, &p);
        assert!((f - (INFEASIBLE_SCALE * v + INFEASIBLE_OFFSET)).abs() < 1e-6);
    }

    #[test]
    fn gap_violations_count_pairs() {
        let p = AntennaProblem::default();
        let v = constraint_violation(&[0.5, 0.6, 1.2, 1.8], &p);
        assert!((v - 0.15).abs() < 1e-12);
        // too close to the fixed outer element
        let v = constraint_violation(&[0.5, 1.0, 1.5, 2.1], &p);
        assert!((v - (0.1 + 0.1)).abs() < 1e-12);
    }
}
