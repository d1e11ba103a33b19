//! Seeded synthetic data: Markov realizations, DAGs of copying processes
//! and the symbol-length study of the conditional estimate.
//!
//! Every generator is a pure function of its spec. Randomness comes from
//! xoshiro256++ seeded through SplitMix64 (`seed_from_u64`), so a seed
//! reproduces the same bytes on every platform.

mod dag;
mod lengths;
mod markov;

pub use dag::{gen_dag_processes, DagSpec};
pub use lengths::{simulate_length_profile, LengthProfile, LengthSimSpec};
pub use markov::{gen_markov, random_transition, MarkovSpec};

use rand::SeedableRng;

pub type SeededRng = rand_xoshiro::Xoshiro256PlusPlus;

pub fn seeded_rng(seed: u64) -> SeededRng {
    SeededRng::seed_from_u64(seed)
}

/// Checks each row of a row-major matrix sums to 1 within 1e-9 with no
/// negative entries.
fn check_stochastic(values: &[f64], cols: usize) -> Result<(), alloc::string::String> {
    for (i, row) in values.chunks(cols).enumerate() {
        if row.iter().any(|&p| !p.is_finite() || p < 0.0) {
            return Err(alloc::format!("row {i} has a negative or non-finite entry"));
        }
        let sum: f64 = row.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(alloc::format!("row {i} sums to {sum}"));
        }
    }
    Ok(())
}

/// Index drawn from the distribution `row`; `u` is uniform in [0, 1).
fn pick(row: &[f64], u: f64) -> usize {
    let mut acc = 0.0;
    let mut last = 0;
    for (k, &p) in row.iter().enumerate() {
        if p > 0.0 {
            acc += p;
            last = k;
            if u < acc {
                return k;
            }
        }
    }
    last
}
