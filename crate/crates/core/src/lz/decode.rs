use alloc::vec::Vec;

use super::{Context, Factorization, Region, Symbol};
use crate::error::{Error, Result};

/// Rebuilds the target from its symbols, checking every copy stays inside
/// the region the context permits at the symbol's position.
pub fn decode(f: &Factorization, context: &Context<'_>) -> Result<Vec<u8>> {
    if f.mode != context.mode() {
        return Err(Error::CorruptFactorization("mode mismatch"));
    }
    let mut out: Vec<u8> = Vec::with_capacity(f.target_len);
    for sym in &f.symbols {
        let t = out.len();
        match *sym {
            Symbol::Literal(b) => out.push(b),
            Symbol::Reference { length, offset } => {
                if length == 0 {
                    return Err(Error::CorruptFactorization("zero-length reference"));
                }
                match offset.region {
                    Region::Own => {
                        if !context.mode().uses_own_past() || offset.position >= t {
                            return Err(Error::CorruptFactorization("offset outside own past"));
                        }
                        // Byte by byte: the copy may overlap what it produces.
                        for k in 0..length {
                            let b = out[offset.position + k];
                            out.push(b);
                        }
                    }
                    Region::Source(i) => {
                        let src = context
                            .sources()
                            .get(i)
                            .ok_or(Error::CorruptFactorization("unknown source"))?;
                        let limit = context.source_limit(i, t);
                        let end = offset
                            .position
                            .checked_add(length)
                            .filter(|&e| e <= limit)
                            .ok_or(Error::CorruptFactorization("offset outside permitted region"))?;
                        out.extend_from_slice(&src[offset.position..end]);
                    }
                }
            }
        }
    }
    if out.len() != f.target_len {
        return Err(Error::CorruptFactorization("length mismatch"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lz::{factorize, ConditioningMode, Offset};
    use alloc::vec;

    fn own(symbols: Vec<Symbol>, len: usize) -> Factorization {
        Factorization {
            symbols,
            target_len: len,
            mode: ConditioningMode::PastOfBoth,
            source_lengths: vec![],
        }
    }

    #[test]
    fn single_literal() {
        let f = own(vec![Symbol::Literal(b'q')], 1);
        assert_eq!(decode(&f, &Context::own_past()).unwrap(), b"q");
    }

    #[test]
    fn overlapped_copy() {
        let f = own(
            vec![
                Symbol::Literal(b'a'),
                Symbol::Reference { length: 5, offset: Offset { region: Region::Own, position: 0 } },
            ],
            6,
        );
        assert_eq!(decode(&f, &Context::own_past()).unwrap(), b"aaaaaa");
    }

    #[test]
    fn rejects_reference_into_the_future() {
        let f = own(
            vec![Symbol::Reference { length: 3, offset: Offset { region: Region::Own, position: 0 } }],
            3,
        );
        assert!(matches!(decode(&f, &Context::own_past()), Err(Error::CorruptFactorization(_))));

        let src = b"abcdef";
        let ctx = Context::new(ConditioningMode::PastOfX, vec![&src[..]]).unwrap();
        let f = Factorization {
            symbols: vec![
                Symbol::Literal(b'a'),
                Symbol::Reference { length: 3, offset: Offset { region: Region::Source(0), position: 0 } },
            ],
            target_len: 4,
            mode: ConditioningMode::PastOfX,
            source_lengths: vec![6],
        };
        assert!(matches!(decode(&f, &ctx), Err(Error::CorruptFactorization(_))));
    }

    #[test]
    fn round_trip_with_two_sources() {
        let (a, b) = (b"one two three four", b"five six seven");
        let target = b"six two three four seven one two";
        for mode in [ConditioningMode::AllOfX, ConditioningMode::PastOfBoth, ConditioningMode::PastOfYAllOfX] {
            let ctx = Context::new(mode, vec![&a[..], &b[..]]).unwrap();
            let f = factorize(target, &ctx).unwrap();
            assert_eq!(decode(&f, &ctx).unwrap(), target);
        }
    }
}
