//! Admissible functions: monotone maps from symbol lengths to `[0, 1]`
//! weighting how much each symbol counts in the estimate.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lz::ReferenceExtent;

/// Step function given by `(length, weight)` breakpoints. A length takes the
/// weight of the largest breakpoint not above it, and 0 below the first one.
#[derive(Debug, Clone, PartialEq)]
pub struct CustomTable {
    steps: Vec<(usize, f64)>,
}

impl CustomTable {
    pub fn new(mut steps: Vec<(usize, f64)>) -> Result<Self> {
        steps.sort_by_key(|&(l, _)| l);
        let mut last = 0.0;
        for (i, &(l, w)) in steps.iter().enumerate() {
            if l == 0 {
                return Err(Error::InvalidFunction("length 0 in table".into()));
            }
            if i > 0 && steps[i - 1].0 == l {
                return Err(Error::InvalidFunction(format!("length {l} listed twice")));
            }
            if !(0.0..=1.0).contains(&w) {
                return Err(Error::InvalidFunction(format!("weight {w} outside [0, 1]")));
            }
            if w < last {
                return Err(Error::InvalidFunction(format!("weight decreases at length {l}")));
            }
            last = w;
        }
        Ok(Self { steps })
    }

    pub fn steps(&self) -> &[(usize, f64)] {
        &self.steps
    }

    fn eval(&self, l: usize) -> f64 {
        match self.steps.partition_point(|&(k, _)| k <= l) {
            0 => 0.0,
            i => self.steps[i - 1].1,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum AdmissibleFunction {
    /// 1 strictly above the cutoff, 0 otherwise.
    Threshold { cutoff: f64 },
    /// Logistic curve centered on the cutoff.
    Sigmoid { cutoff: f64 },
    Custom(CustomTable),
}

impl AdmissibleFunction {
    pub fn threshold(cutoff: f64) -> Self {
        Self::Threshold { cutoff }
    }

    pub fn sigmoid(cutoff: f64) -> Self {
        Self::Sigmoid { cutoff }
    }

    pub fn eval(&self, l: usize) -> f64 {
        match self {
            Self::Threshold { cutoff } => {
                if l as f64 > *cutoff {
                    1.0
                } else {
                    0.0
                }
            }
            Self::Sigmoid { cutoff } => 1.0 / (1.0 + libm::exp(cutoff - l as f64)),
            Self::Custom(table) => table.eval(l),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    Sigmoid,
    Threshold,
}

/// How estimators pick their admissible function.
#[derive(Debug, Clone, PartialEq)]
pub enum Weighting {
    /// The given shape centered on the meaningful-length cutoff of the
    /// reference region actually in use.
    Adaptive(Shape),
    Fixed(AdmissibleFunction),
}

impl Default for Weighting {
    fn default() -> Self {
        Weighting::Adaptive(Shape::Sigmoid)
    }
}

impl Weighting {
    pub fn resolve(&self, extent: &ReferenceExtent) -> Result<AdmissibleFunction> {
        Ok(match self {
            Weighting::Adaptive(shape) => {
                let cutoff = crate::complexity::meaningful_cutoff(extent.length, extent.alphabet.len())?;
                match shape {
                    Shape::Sigmoid => AdmissibleFunction::sigmoid(cutoff),
                    Shape::Threshold => AdmissibleFunction::threshold(cutoff),
                }
            }
            Weighting::Fixed(f) => f.clone(),
        })
    }
}
