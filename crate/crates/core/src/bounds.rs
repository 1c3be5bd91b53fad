use crate::error::{Error, Result};

/// Axis-aligned search box.
#[derive(Debug, Clone, PartialEq)]
pub struct Bounds {
    lower: Vec<f64>,
    upper: Vec<f64>,
    landscape_boundary: f64,
}

impl Bounds {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.len() != upper.len() {
            return Err(Error::Config(format!(
                "bounds length mismatch: {} lower vs {} upper",
                lower.len(),
                upper.len()
            )));
        }
        if lower.is_empty() {
            return Err(Error::Config(
                "bounds must have at least one dimension".into(),
            ));
        }
        for (j, (lo, hi)) in lower.iter().zip(&upper).enumerate() {
            if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
                return Err(Error::Config(format!(
                    "invalid bounds in dimension {j}: [{lo}, {hi}]"
                )));
            }
        }
        // lB: the widest extent of the box
        let landscape_boundary = lower
            .iter()
            .zip(&upper)
            .map(|(lo, hi)| hi - lo)
            .fold(0.0, f64::max);
        Ok(Bounds {
            lower,
            upper,
            landscape_boundary,
        })
    }

    /// Same `[lo, hi]` interval in every dimension.
    pub fn uniform(dim: usize, lo: f64, hi: f64) -> Result<Self> {
        Bounds::new(vec![lo; dim], vec![hi; dim])
    }

    pub fn dimension(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn landscape_boundary(&self) -> f64 {
        self.landscape_boundary
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dimension()
            && x.iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(v, (lo, hi))| lo <= v && v <= hi)
    }
}
