//! Longest-match Lempel-Ziv factorization against configurable reference regions.
//!
//! A target is parsed greedily from left to right. At each lookahead
//! position `t` the factorizer looks for the longest string, at least
//! [`MIN_MATCH`] bytes long, that can be copied from the regions the
//! [`ConditioningMode`] permits at `t`; when none exists a literal is
//! emitted. There is no lazy matching and no window: the whole permitted
//! region is searchable.
//!
//! | mode              | own past of the target | sources                        |
//! |-------------------|------------------------|--------------------------------|
//! | `PastOfX`         | no                     | `source[0][..min(t, len)]`     |
//! | `AllOfX`          | no                     | all of every source            |
//! | `PastOfBoth`      | yes                    | `source[i][..min(t, len)]`     |
//! | `PastOfYAllOfX`   | yes                    | all of every source            |
//!
//! Copies from the target's own past may overlap the lookahead (match
//! length greater than distance). A reference never spans two sources.
//! Ties between equally long matches go to the own past, then to sources
//! in list order, then to the smallest start position.

mod decode;
mod index;

use alloc::vec::Vec;
use core::fmt;

pub use decode::decode;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use index::ChainIndex;

/// Shortest reference the factorizer emits.
pub const MIN_MATCH: usize = 3;

/// Which regions references may be drawn from, relative to the lookahead position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConditioningMode {
    /// Only the aligned past of a single source.
    PastOfX,
    /// All of every source (Ziv-Merhav cross parsing).
    AllOfX,
    /// The target's own past and the aligned past of every source.
    PastOfBoth,
    /// The target's own past and all of every source.
    PastOfYAllOfX,
}

impl ConditioningMode {
    pub const ALL: [ConditioningMode; 4] = [
        ConditioningMode::PastOfX,
        ConditioningMode::AllOfX,
        ConditioningMode::PastOfBoth,
        ConditioningMode::PastOfYAllOfX,
    ];

    pub fn uses_own_past(self) -> bool {
        matches!(self, Self::PastOfBoth | Self::PastOfYAllOfX)
    }

    /// True when sources are only visible up to the lookahead position.
    pub fn causal_sources(self) -> bool {
        matches!(self, Self::PastOfX | Self::PastOfBoth)
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::PastOfX => "past-of-x",
            Self::AllOfX => "all-of-x",
            Self::PastOfBoth => "past-of-both",
            Self::PastOfYAllOfX => "past-of-y-all-of-x",
        }
    }
}

impl fmt::Display for ConditioningMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl core::str::FromStr for ConditioningMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidSpec(alloc::format!("unknown conditioning mode `{s}`")))
    }
}

/// Sources and mode defining the reference string R.
#[derive(Debug, Clone)]
pub struct Context<'a> {
    sources: Vec<&'a [u8]>,
    mode: ConditioningMode,
}

/// Total referenceable length |R| and alphabet of R once the whole target is encoded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReferenceExtent {
    pub length: usize,
    pub alphabet: Alphabet,
}

impl<'a> Context<'a> {
    pub fn new(mode: ConditioningMode, sources: Vec<&'a [u8]>) -> Result<Self> {
        if mode == ConditioningMode::PastOfX && sources.len() > 1 {
            return Err(Error::SingleSourceExpected);
        }
        if sources.iter().any(|s| s.is_empty()) {
            return Err(Error::EmptyInput);
        }
        Ok(Self { sources, mode })
    }

    /// Plain LZ77 self-factorization: the target's own past and nothing else.
    pub fn own_past() -> Self {
        Self {
            sources: Vec::new(),
            mode: ConditioningMode::PastOfBoth,
        }
    }

    pub fn mode(&self) -> ConditioningMode {
        self.mode
    }

    pub fn sources(&self) -> &[&'a [u8]] {
        &self.sources
    }

    /// End of the part of `source` visible from lookahead position `t`.
    pub fn source_limit(&self, source: usize, t: usize) -> usize {
        let len = self.sources[source].len();
        if self.mode.causal_sources() {
            t.min(len)
        } else {
            len
        }
    }

    pub fn extent(&self, target: &[u8]) -> ReferenceExtent {
        let end = target.len();
        let mut length = 0;
        let mut alphabet = Alphabet::default();
        if self.mode.uses_own_past() {
            length += end;
            alphabet = Alphabet::of(target);
        }
        for (i, s) in self.sources.iter().enumerate() {
            length += self.source_limit(i, end);
            alphabet = alphabet.union(&Alphabet::of(s));
        }
        ReferenceExtent { length, alphabet }
    }
}

/// Where a reference starts copying from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Region {
    /// The target's own past.
    Own,
    /// A source, by its index in the context.
    Source(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Offset {
    pub region: Region,
    pub position: usize,
}

/// One factorizer output: a literal byte or a copy of `length` bytes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symbol {
    Literal(u8),
    Reference { length: usize, offset: Offset },
}

#[allow(clippy::len_without_is_empty)]
impl Symbol {
    pub fn len(&self) -> usize {
        match *self {
            Symbol::Literal(_) => 1,
            Symbol::Reference { length, .. } => length,
        }
    }

    pub fn is_literal(&self) -> bool {
        matches!(self, Symbol::Literal(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub symbols: Vec<Symbol>,
    pub target_len: usize,
    pub mode: ConditioningMode,
    pub source_lengths: Vec<usize>,
}

impl Factorization {
    /// Lengths of every symbol, literals included.
    pub fn reference_lengths(&self) -> Vec<usize> {
        self.symbols.iter().map(Symbol::len).collect()
    }

    /// Symbol starts, in target coordinates.
    pub fn positions(&self) -> impl Iterator<Item = (usize, &Symbol)> {
        self.symbols.iter().scan(0, |pos, s| {
            let at = *pos;
            *pos += s.len();
            Some((at, s))
        })
    }
}

pub fn reference_lengths(f: &Factorization) -> Vec<usize> {
    f.reference_lengths()
}

/// Greedy longest-match factorization of `target` against `context`.
pub fn factorize(target: &[u8], context: &Context<'_>) -> Result<Factorization> {
    if target.is_empty() {
        return Err(Error::EmptyInput);
    }
    let n = target.len();
    let mode = context.mode;
    let mut own = mode.uses_own_past().then(|| ChainIndex::new(n));
    let mut indexes: Vec<ChainIndex> = context
        .sources
        .iter()
        .map(|s| {
            let mut idx = ChainIndex::new(s.len());
            if !mode.causal_sources() {
                idx.insert_until(s, s.len());
            }
            idx
        })
        .collect();

    let mut symbols = Vec::new();
    let mut t = 0;
    while t < n {
        let needle = &target[t..];
        let mut best: Option<(usize, Offset)> = None;
        let mut min_accept = MIN_MATCH;

        if let Some(idx) = own.as_mut() {
            idx.insert_until(target, t);
            if let Some((len, pos)) = idx.longest(target, n, needle, min_accept) {
                best = Some((len, Offset { region: Region::Own, position: pos }));
                min_accept = len + 1;
            }
        }
        for (i, idx) in indexes.iter_mut().enumerate() {
            let src = context.sources[i];
            let limit = context.source_limit(i, t);
            if mode.causal_sources() {
                idx.insert_until(src, limit.saturating_sub(MIN_MATCH - 1));
            }
            if let Some((len, pos)) = idx.longest(src, limit, needle, min_accept) {
                best = Some((len, Offset { region: Region::Source(i), position: pos }));
                min_accept = len + 1;
            }
        }

        match best {
            Some((length, offset)) => {
                symbols.push(Symbol::Reference { length, offset });
                t += length;
            }
            None => {
                symbols.push(Symbol::Literal(target[t]));
                t += 1;
            }
        }
    }

    Ok(Factorization {
        symbols,
        target_len: n,
        mode,
        source_lengths: context.sources.iter().map(|s| s.len()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn lit(b: u8) -> Symbol {
        Symbol::Literal(b)
    }

    fn own_ref(length: usize, position: usize) -> Symbol {
        Symbol::Reference { length, offset: Offset { region: Region::Own, position } }
    }

    #[test]
    fn whole_string_against_itself_is_one_symbol() {
        let x = b"the quick brown fox";
        let ctx = Context::new(ConditioningMode::AllOfX, vec![&x[..]]).unwrap();
        let f = factorize(x, &ctx).unwrap();
        assert_eq!(
            f.symbols,
            vec![Symbol::Reference {
                length: x.len(),
                offset: Offset { region: Region::Source(0), position: 0 }
            }]
        );
        assert_eq!(f.reference_lengths(), vec![x.len()]);
    }

    #[test]
    fn disjoint_alphabets_give_only_literals() {
        let x = b"abbaabababbbaaab";
        let y = b"cdcdccddcdcdcdcc";
        let ctx = Context::new(ConditioningMode::AllOfX, vec![&y[..]]).unwrap();
        let f = factorize(x, &ctx).unwrap();
        assert_eq!(f.symbols.len(), x.len());
        assert!(f.symbols.iter().all(Symbol::is_literal));
    }

    #[test]
    fn overlapping_self_copy() {
        let f = factorize(b"aaaaaa", &Context::own_past()).unwrap();
        assert_eq!(f.symbols, vec![lit(b'a'), own_ref(5, 0)]);
    }

    #[test]
    fn repeated_prefix_then_mismatch() {
        let f = factorize(b"abcabcabd", &Context::own_past()).unwrap();
        assert_eq!(f.symbols, vec![lit(b'a'), lit(b'b'), lit(b'c'), own_ref(5, 0), lit(b'd')]);
        assert_eq!(f.reference_lengths(), vec![1, 1, 1, 5, 1]);
    }

    #[test]
    fn all_literal_lengths() {
        let f = factorize(b"abcdefg", &Context::own_past()).unwrap();
        assert_eq!(f.reference_lengths(), vec![1; 7]);
    }

    #[test]
    fn errors() {
        assert_eq!(factorize(b"", &Context::own_past()), Err(Error::EmptyInput));
        let (a, b) = (b"abc", b"def");
        assert_eq!(
            Context::new(ConditioningMode::PastOfX, vec![&a[..], &b[..]]).unwrap_err(),
            Error::SingleSourceExpected
        );
        assert_eq!(
            Context::new(ConditioningMode::AllOfX, vec![&a[..], &b""[..]]).unwrap_err(),
            Error::EmptyInput
        );
    }

    #[test]
    fn causal_sources_only_expose_aligned_past() {
        // The source holds "xyz" at 3..6; at target position 3 the aligned
        // past is source[..3], so the copy must wait until t >= 6.
        let src = b"qqqxyzqqqqqq";
        let tgt = b"abcxyzxyzabc";
        let ctx = Context::new(ConditioningMode::PastOfX, vec![&src[..]]).unwrap();
        let f = factorize(tgt, &ctx).unwrap();
        let expect = vec![
            lit(b'a'),
            lit(b'b'),
            lit(b'c'),
            lit(b'x'),
            lit(b'y'),
            lit(b'z'),
            Symbol::Reference { length: 3, offset: Offset { region: Region::Source(0), position: 3 } },
            lit(b'a'),
            lit(b'b'),
            lit(b'c'),
        ];
        assert_eq!(f.symbols, expect);

        let ctx = Context::new(ConditioningMode::AllOfX, vec![&src[..]]).unwrap();
        let f = factorize(tgt, &ctx).unwrap();
        assert_eq!(f.reference_lengths(), vec![1, 1, 1, 3, 3, 1, 1, 1]);
    }

    #[test]
    fn references_do_not_span_sources() {
        let (a, b) = (b"hello ", b"world");
        let ctx = Context::new(ConditioningMode::AllOfX, vec![&a[..], &b[..]]).unwrap();
        let f = factorize(b"hello world", &ctx).unwrap();
        assert_eq!(f.reference_lengths(), vec![6, 5]);
    }

    #[test]
    fn ties_prefer_own_past_then_source_order() {
        let s0 = b"zzabczz";
        let s1 = b"abc";
        let ctx = Context::new(ConditioningMode::PastOfYAllOfX, vec![&s0[..], &s1[..]]).unwrap();
        let f = factorize(b"abcabc", &ctx).unwrap();
        assert_eq!(
            f.symbols[0],
            Symbol::Reference { length: 3, offset: Offset { region: Region::Source(0), position: 2 } }
        );
        assert_eq!(f.symbols[1], own_ref(3, 0));
    }

    #[test]
    fn extent_follows_mode() {
        let (x, y) = (b"aab", b"cccdd");
        let all = Context::new(ConditioningMode::AllOfX, vec![&y[..]]).unwrap();
        assert_eq!(all.extent(x).length, 5);
        assert_eq!(all.extent(x).alphabet.len(), 2);
        let past = Context::new(ConditioningMode::PastOfBoth, vec![&y[..]]).unwrap();
        let e = past.extent(x);
        assert_eq!((e.length, e.alphabet.len()), (6, 4));
    }

    #[test]
    fn mode_names_round_trip() {
        for m in ConditioningMode::ALL {
            assert_eq!(m.name().parse::<ConditioningMode>().unwrap(), m);
        }
        assert!("sideways".parse::<ConditioningMode>().is_err());
    }
}
