//! Chained-bucket dictionary keyed by 3-byte prefixes.
//!
//! Every indexed position is kept: there is no window, so a reference can
//! reach any point of its region regardless of distance.

use alloc::vec;
use alloc::vec::Vec;

use super::MIN_MATCH;

const NIL: u32 = u32::MAX;

pub(crate) struct ChainIndex {
    head: Vec<u32>,
    prev: Vec<u32>,
    shift: u32,
    inserted: usize,
}

impl ChainIndex {
    pub(crate) fn new(len: usize) -> Self {
        let bits = len.next_power_of_two().trailing_zeros().clamp(10, 22);
        Self {
            head: vec![NIL; 1 << bits],
            prev: vec![NIL; len.saturating_sub(MIN_MATCH - 1)],
            shift: 32 - bits,
            inserted: 0,
        }
    }

    #[inline]
    fn bucket(&self, data: &[u8], pos: usize) -> usize {
        let v = u32::from(data[pos]) << 16 | u32::from(data[pos + 1]) << 8 | u32::from(data[pos + 2]);
        (v.wrapping_mul(0x9E37_79B1) >> self.shift) as usize
    }

    /// Indexes every start position below `end` not yet indexed.
    /// `end` is clipped to the positions that have a full 3-byte prefix.
    pub(crate) fn insert_until(&mut self, data: &[u8], end: usize) {
        let end = end.min(self.prev.len());
        while self.inserted < end {
            let p = self.inserted;
            let b = self.bucket(data, p);
            self.prev[p] = self.head[b];
            self.head[b] = p as u32;
            self.inserted += 1;
        }
    }

    /// Longest match of `needle` against `hay[p..hay_end]` over the indexed
    /// positions sharing the needle's bucket. Only matches of at least
    /// `min_accept` bytes are considered; among equally long matches the
    /// smallest position wins.
    pub(crate) fn longest(
        &self,
        hay: &[u8],
        hay_end: usize,
        needle: &[u8],
        min_accept: usize,
    ) -> Option<(usize, usize)> {
        if needle.len() < MIN_MATCH || min_accept > needle.len() {
            return None;
        }
        let mut need = min_accept.max(MIN_MATCH);
        let mut best = None;
        let mut cand = self.head[self.bucket(needle, 0)];
        // Chains run from the most recent position backwards.
        while cand != NIL {
            let p = cand as usize;
            cand = self.prev[p];
            if p + need > hay_end || hay[p + need - 1] != needle[need - 1] {
                continue;
            }
            let max = (hay_end - p).min(needle.len());
            let len = common_prefix(&hay[p..p + max], &needle[..max]);
            if len >= need {
                need = len;
                best = Some((len, p));
            }
        }
        best
    }
}

#[inline]
fn common_prefix(a: &[u8], b: &[u8]) -> usize {
    const CHUNK: usize = 8;
    let mut i = 0;
    while i + CHUNK <= a.len() {
        let x = u64::from_le_bytes(a[i..i + CHUNK].try_into().unwrap());
        let y = u64::from_le_bytes(b[i..i + CHUNK].try_into().unwrap());
        let diff = x ^ y;
        if diff != 0 {
            return i + (diff.trailing_zeros() / 8) as usize;
        }
        i += CHUNK;
    }
    while i < a.len() && a[i] == b[i] {
        i += 1;
    }
    i
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn common_prefix_crosses_word_boundaries() {
        let a = b"0123456789abcdefXYZ";
        let mut b = *a;
        assert_eq!(common_prefix(a, &b), a.len());
        b[11] = b'!';
        assert_eq!(common_prefix(a, &b), 11);
        b[3] = b'!';
        assert_eq!(common_prefix(a, &b), 3);
    }

    #[test]
    fn prefers_longest_then_smallest_position() {
        let hay = b"abcXabcdYabcdZ";
        let mut idx = ChainIndex::new(hay.len());
        idx.insert_until(hay, hay.len());
        assert_eq!(idx.longest(hay, hay.len(), b"abcd!", 0), Some((4, 4)));
        assert_eq!(idx.longest(hay, hay.len(), b"abc!", 0), Some((3, 0)));
        assert_eq!(idx.longest(hay, hay.len(), b"abcd!", 5), None);
        assert_eq!(idx.longest(hay, 7, b"abcd!", 0), Some((3, 0)));
    }
}
