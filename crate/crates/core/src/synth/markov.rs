use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use super::{check_stochastic, pick, seeded_rng};
use crate::error::{Error, Result};

/// First-order Markov chain over `alphabet_size` symbols, emitted as bytes
/// `0..alphabet_size`.
#[derive(Debug, Clone, PartialEq)]
pub struct MarkovSpec {
    pub alphabet_size: usize,
    /// Row-major, `alphabet_size` squared entries; row `a` is the
    /// distribution of the symbol following `a`.
    pub transition: Vec<f64>,
    pub length: usize,
    pub seed: u64,
}

impl MarkovSpec {
    pub fn validate(&self) -> Result<()> {
        let a = self.alphabet_size;
        if !(2..=256).contains(&a) {
            return Err(Error::InvalidSpec(alloc::format!("alphabet size {a} outside 2..=256")));
        }
        if self.length == 0 {
            return Err(Error::InvalidSpec("length must be at least 1".into()));
        }
        if self.transition.len() != a * a {
            return Err(Error::InvalidSpec(alloc::format!(
                "transition matrix has {} entries, expected {}",
                self.transition.len(),
                a * a
            )));
        }
        check_stochastic(&self.transition, a).map_err(Error::InvalidSpec)
    }
}

/// One realization: uniform initial state, then `length - 1` transitions.
pub fn gen_markov(spec: &MarkovSpec) -> Result<Vec<u8>> {
    spec.validate()?;
    let a = spec.alphabet_size;
    let mut rng = seeded_rng(spec.seed);
    let mut out = Vec::with_capacity(spec.length);
    let mut state = rng.random_range(0..a);
    out.push(state as u8);
    while out.len() < spec.length {
        let row = &spec.transition[state * a..(state + 1) * a];
        state = pick(row, rng.random::<f64>());
        out.push(state as u8);
    }
    Ok(out)
}

/// Random transition matrix where every row spreads random weights over
/// `support` distinct successors.
pub fn random_transition(alphabet_size: usize, support: usize, rng: &mut impl Rng) -> Vec<f64> {
    let support = support.clamp(1, alphabet_size);
    let mut m = vec![0.0; alphabet_size * alphabet_size];
    for row in m.chunks_mut(alphabet_size) {
        let picks = rand::seq::index::sample(rng, alphabet_size, support);
        let weights: Vec<f64> = (0..support).map(|_| 1.0 - rng.random::<f64>()).collect();
        let total: f64 = weights.iter().sum();
        for (k, w) in picks.iter().zip(weights) {
            row[k] = w / total;
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn identity(a: usize) -> Vec<f64> {
        let mut m = vec![0.0; a * a];
        for i in 0..a {
            m[i * a + i] = 1.0;
        }
        m
    }

    #[test]
    fn identity_chain_is_constant() {
        let spec = MarkovSpec { alphabet_size: 8, transition: identity(8), length: 500, seed: 3 };
        let x = gen_markov(&spec).unwrap();
        assert_eq!(x.len(), 500);
        assert!(x.iter().all(|&b| b == x[0]));
    }

    #[test]
    fn same_seed_same_output() {
        let mut rng = seeded_rng(1);
        let t = random_transition(16, 4, &mut rng);
        let spec = MarkovSpec { alphabet_size: 16, transition: t, length: 2000, seed: 99 };
        assert_eq!(gen_markov(&spec).unwrap(), gen_markov(&spec).unwrap());
        let other = MarkovSpec { seed: 100, ..spec.clone() };
        assert_ne!(gen_markov(&spec).unwrap(), gen_markov(&other).unwrap());
    }

    #[test]
    fn rejects_bad_specs() {
        let bad_rows = MarkovSpec { alphabet_size: 2, transition: vec![0.5, 0.4, 0.0, 1.0], length: 4, seed: 0 };
        assert!(matches!(gen_markov(&bad_rows), Err(Error::InvalidSpec(_))));
        let empty = MarkovSpec { alphabet_size: 2, transition: identity(2), length: 0, seed: 0 };
        assert!(gen_markov(&empty).is_err());
        let unary = MarkovSpec { alphabet_size: 1, transition: vec![1.0], length: 3, seed: 0 };
        assert!(gen_markov(&unary).is_err());
    }

    #[test]
    fn random_rows_are_stochastic_with_given_support() {
        let mut rng = seeded_rng(5);
        let m = random_transition(64, 6, &mut rng);
        for row in m.chunks(64) {
            assert_eq!(row.iter().filter(|&&p| p > 0.0).count(), 6);
            assert!((row.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        }
    }
}
