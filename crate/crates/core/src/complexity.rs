//! Conditional, simple and joint complexity estimates and the normalized
//! semi-distance built from them.
//!
//! For a factorization of `x` with symbol lengths `L` and an admissible
//! function `f`, the conditional estimate is the product of
//!
//! ```text
//! spread S = 1 - (Σ l·f(l) - (Σ f(l) - 1)) / |x|
//! size   Z = (|L| - 1) / |x|
//! ```
//!
//! Both terms vanish when `x` is one copy from the reference region and
//! approach 1 when nothing can be copied.

use alloc::vec;

use crate::admissible::{AdmissibleFunction, Weighting};
use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::lz::{factorize, ConditioningMode, Context, MIN_MATCH};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConditionalEstimate {
    /// `spread * size`.
    pub value: f64,
    pub spread: f64,
    pub size: f64,
}

/// Minimal length of a meaningful reference in a region of `length` bytes
/// over `alphabet_size` symbols: `log_{|A|} |R|`.
///
/// A unary alphabet repeats everything trivially, so the cutoff is then the
/// whole region length.
pub fn meaningful_cutoff(length: usize, alphabet_size: usize) -> Result<f64> {
    if length == 0 {
        return Err(Error::EmptyReference);
    }
    if alphabet_size < 2 {
        return Ok(length as f64);
    }
    Ok(libm::log2(length as f64) / libm::log2(alphabet_size as f64))
}

/// Evaluates the estimate from symbol lengths alone.
pub fn estimate_from_lengths(lengths: &[usize], target_len: usize, f: &AdmissibleFunction) -> ConditionalEstimate {
    let n = target_len as f64;
    // Σ l·f(l) − Σ f(l) rearranged as Σ f(l)(l − 1); each term is at most
    // l − 1, which keeps the spread term inside [0, 1] under rounding.
    let weighted: f64 = lengths.iter().map(|&l| f.eval(l) * (l - 1) as f64).sum();
    let spread = 1.0 - (weighted + 1.0) / n;
    let size = (lengths.len() as f64 - 1.0) / n;
    ConditionalEstimate { value: spread * size, spread, size }
}

pub fn conditional_complexity(x: &[u8], context: &Context<'_>, weighting: &Weighting) -> Result<ConditionalEstimate> {
    let fact = factorize(x, context)?;
    let f = weighting.resolve(&context.extent(x))?;
    Ok(estimate_from_lengths(&fact.reference_lengths(), x.len(), &f))
}

/// Complexity of `x` from its own LZ77 self-factorization.
pub fn simple_complexity(x: &[u8], weighting: &Weighting) -> Result<ConditionalEstimate> {
    conditional_complexity(x, &Context::own_past(), weighting)
}

/// Joint complexity: `y` factorized against its past and all of `x`, plus
/// the simple complexity of `x`, plus `log_{|A_x|}(|x| / |y|)`.
pub fn joint_complexity(x: &[u8], y: &[u8], weighting: &Weighting) -> Result<f64> {
    if x.is_empty() || y.is_empty() {
        return Err(Error::EmptyInput);
    }
    let ax = Alphabet::of(x).len();
    if ax < 2 {
        return Err(Error::UndefinedLogBase(ax));
    }
    let ctx = Context::new(ConditioningMode::PastOfYAllOfX, vec![x])?;
    let cross = conditional_complexity(y, &ctx, weighting)?;
    let own = simple_complexity(x, weighting)?;
    let ratio = libm::log2(x.len() as f64 / y.len() as f64) / libm::log2(ax as f64);
    Ok(cross.value + own.value + ratio)
}

/// Normalized semi-distance: the larger of the two cross-parsing estimates.
pub fn nsd(x: &[u8], y: &[u8], weighting: &Weighting) -> Result<f64> {
    if x.len() < MIN_MATCH || y.len() < MIN_MATCH {
        log::warn!("inputs shorter than {MIN_MATCH} bytes cannot be matched; the distance is not zero even for equal inputs");
    }
    let xy = conditional_complexity(x, &Context::new(ConditioningMode::AllOfX, vec![y])?, weighting)?;
    let yx = conditional_complexity(y, &Context::new(ConditioningMode::AllOfX, vec![x])?, weighting)?;
    Ok(xy.value.max(yx.value))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::admissible::Shape;

    fn threshold(l0: f64) -> Weighting {
        Weighting::Fixed(AdmissibleFunction::threshold(l0))
    }

    #[test]
    fn cutoff_examples() {
        assert_eq!(meaningful_cutoff(4096, 256).unwrap(), 1.5);
        assert_eq!(meaningful_cutoff(256, 256).unwrap(), 1.0);
        assert_eq!(meaningful_cutoff(16, 4).unwrap(), 2.0);
        assert_eq!(meaningful_cutoff(37, 1).unwrap(), 37.0);
        assert_eq!(meaningful_cutoff(0, 4), Err(Error::EmptyReference));
    }

    #[test]
    fn identical_strings_estimate_zero() {
        let x = b"some string of bytes";
        let ctx = Context::new(ConditioningMode::AllOfX, vec![&x[..]]).unwrap();
        let e = conditional_complexity(x, &ctx, &Weighting::default()).unwrap();
        assert_eq!(e.size, 0.0);
        assert_eq!(e.value, 0.0);
    }

    #[test]
    fn all_literals_closed_form() {
        let x = b"abababbbaabbabaa";
        let y = b"xyzzyxzyxzyzxyxz";
        let n = x.len() as f64;
        let ctx = Context::new(ConditioningMode::AllOfX, vec![&y[..]]).unwrap();
        for w in [Weighting::default(), threshold(1.5), Weighting::Adaptive(Shape::Threshold)] {
            let e = conditional_complexity(x, &ctx, &w).unwrap();
            assert!((e.spread - (1.0 - 1.0 / n)).abs() < 1e-15);
            assert!((e.size - (n - 1.0) / n).abs() < 1e-15);
            assert!((e.value - ((n - 1.0) / n).powi(2)).abs() < 1e-15);
        }
    }

    #[test]
    fn hand_evaluated_self_factorization() {
        // Lengths {1, 1, 1, 5, 1}: Σ f(l)(l−1) = 4, S = 1 − 5/9, Z = 4/9.
        let e = simple_complexity(b"abcabcabd", &threshold(1.5)).unwrap();
        assert!((e.spread - 4.0 / 9.0).abs() < 1e-15);
        assert!((e.size - 4.0 / 9.0).abs() < 1e-15);
        assert!((e.value - 16.0 / 81.0).abs() < 1e-15);

        // Lengths {1, 5}: S = 1 − (4 + 1)/6 = 1/6, Z = 1/6.
        let e = simple_complexity(b"aaaaaa", &threshold(1.5)).unwrap();
        assert!((e.spread - 1.0 / 6.0).abs() < 1e-15);
        assert!((e.size - 1.0 / 6.0).abs() < 1e-15);
        assert!((e.value - 1.0 / 36.0).abs() < 1e-15);
    }

    #[test]
    fn distinct_bytes_simple_complexity() {
        let x: alloc::vec::Vec<u8> = (0..40).collect();
        let n = 40.0;
        let e = simple_complexity(&x, &Weighting::default()).unwrap();
        assert!((e.value - ((n - 1.0) / n) * ((n - 1.0) / n)).abs() < 1e-15);
    }

    #[test]
    fn joint_with_itself_is_simple() {
        let x = b"abracadabra abracadabra cadabra";
        for w in [Weighting::default(), threshold(2.0)] {
            let j = joint_complexity(x, x, &w).unwrap();
            assert_eq!(j, simple_complexity(x, &w).unwrap().value);
        }
    }

    #[test]
    fn joint_needs_two_symbol_alphabet() {
        assert_eq!(
            joint_complexity(b"aaaa", b"abab", &Weighting::default()),
            Err(Error::UndefinedLogBase(1))
        );
    }

    #[test]
    fn nsd_identity_and_symmetry() {
        let x = b"the cat sat on the mat";
        let y = b"the dog sat on the log";
        let w = Weighting::default();
        assert_eq!(nsd(x, x, &w).unwrap(), 0.0);
        let (a, b) = (nsd(x, y, &w).unwrap(), nsd(y, x, &w).unwrap());
        assert_eq!(a, b);
        assert!(a > 0.0);
    }

    #[test]
    fn short_equal_inputs_are_not_at_distance_zero() {
        let d = nsd(b"ab", b"ab", &Weighting::default()).unwrap();
        assert!((d - 0.25).abs() < 1e-15);
    }
}
