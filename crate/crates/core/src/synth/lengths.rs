use alloc::vec::Vec;

use rand::Rng;
use rand_distr::{Distribution, Poisson};

use super::seeded_rng;
use crate::admissible::AdmissibleFunction;
use crate::complexity::estimate_from_lengths;
use crate::error::{Error, Result};

/// Symbol lengths drawn from a Poisson law instead of a factorization.
#[derive(Debug, Clone, PartialEq)]
pub struct LengthSimSpec {
    pub mu: f64,
    pub l0: f64,
    pub target_length: usize,
    pub trials: usize,
    pub seed: u64,
}

/// Trial averages of the estimate terms under both admissible shapes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LengthProfile {
    pub mu: f64,
    pub target_length: usize,
    pub l0: f64,
    pub size: f64,
    pub spread_threshold: f64,
    pub value_threshold: f64,
    pub spread_sigmoid: f64,
    pub value_sigmoid: f64,
}

/// Poisson lengths, zeros redrawn, until they cover `total`; the last one
/// is clipped.
fn draw_lengths(poisson: &Poisson<f64>, total: usize, rng: &mut impl Rng, out: &mut Vec<usize>) {
    out.clear();
    let mut covered = 0;
    while covered < total {
        let l = loop {
            let v = poisson.sample(rng) as usize;
            if v >= 1 {
                break v;
            }
        };
        let l = l.min(total - covered);
        out.push(l);
        covered += l;
    }
}

pub fn simulate_length_profile(spec: &LengthSimSpec) -> Result<LengthProfile> {
    if !spec.mu.is_finite() || spec.mu <= 0.0 {
        return Err(Error::InvalidSpec("mu must be positive".into()));
    }
    if spec.trials == 0 || spec.target_length == 0 {
        return Err(Error::InvalidSpec("trials and target length must be positive".into()));
    }
    if spec.l0.is_nan() || spec.l0 < 0.0 {
        return Err(Error::InvalidSpec("l0 must be non-negative".into()));
    }
    let poisson = Poisson::new(spec.mu).map_err(|e| Error::InvalidSpec(alloc::format!("{e}")))?;
    let threshold = AdmissibleFunction::threshold(spec.l0);
    let sigmoid = AdmissibleFunction::sigmoid(spec.l0);
    let mut rng = seeded_rng(spec.seed);
    let mut lengths = Vec::new();
    let mut acc = [0.0f64; 5];
    for _ in 0..spec.trials {
        draw_lengths(&poisson, spec.target_length, &mut rng, &mut lengths);
        let t = estimate_from_lengths(&lengths, spec.target_length, &threshold);
        let s = estimate_from_lengths(&lengths, spec.target_length, &sigmoid);
        for (a, v) in acc.iter_mut().zip([t.size, t.spread, t.value, s.spread, s.value]) {
            *a += v;
        }
    }
    let k = spec.trials as f64;
    Ok(LengthProfile {
        mu: spec.mu,
        target_length: spec.target_length,
        l0: spec.l0,
        size: acc[0] / k,
        spread_threshold: acc[1] / k,
        value_threshold: acc[2] / k,
        spread_sigmoid: acc[3] / k,
        value_sigmoid: acc[4] / k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synth::seeded_rng;

    #[test]
    fn lengths_cover_the_target_exactly() {
        let p = Poisson::new(4.0).unwrap();
        let mut rng = seeded_rng(0);
        let mut out = Vec::new();
        for total in [1, 7, 1000] {
            draw_lengths(&p, total, &mut rng, &mut out);
            assert_eq!(out.iter().sum::<usize>(), total);
            assert!(out.iter().all(|&l| l >= 1));
        }
    }

    #[test]
    fn deterministic_and_bounded() {
        let spec = LengthSimSpec { mu: 3.0, l0: 2.0, target_length: 4096, trials: 10, seed: 5 };
        let a = simulate_length_profile(&spec).unwrap();
        assert_eq!(a, simulate_length_profile(&spec).unwrap());
        for v in [a.size, a.spread_threshold, a.value_threshold, a.spread_sigmoid, a.value_sigmoid] {
            assert!((0.0..1.0).contains(&v));
        }
    }

    #[test]
    fn invalid_specs() {
        let ok = LengthSimSpec { mu: 3.0, l0: 2.0, target_length: 100, trials: 1, seed: 0 };
        assert!(simulate_length_profile(&LengthSimSpec { mu: 0.0, ..ok.clone() }).is_err());
        assert!(simulate_length_profile(&LengthSimSpec { trials: 0, ..ok.clone() }).is_err());
        assert!(simulate_length_profile(&LengthSimSpec { l0: -1.0, ..ok }).is_err());
    }
}
