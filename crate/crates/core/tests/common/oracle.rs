//! Quadratic longest-match scanner, written without any index.

use salza_core::lz::{ConditioningMode, Offset, Region, Symbol};

fn prefix(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Symbol stream expected from the factorizer: at every position the
/// longest match of at least 3 bytes, searched own past first, then each
/// source in order, earliest position first; a later candidate must be
/// strictly longer to win.
pub fn naive_factorize(target: &[u8], mode: ConditioningMode, sources: &[&[u8]]) -> Vec<Symbol> {
    let n = target.len();
    let own = matches!(mode, ConditioningMode::PastOfBoth | ConditioningMode::PastOfYAllOfX);
    let causal = matches!(mode, ConditioningMode::PastOfX | ConditioningMode::PastOfBoth);
    let mut out = Vec::new();
    let mut t = 0;
    while t < n {
        let mut best = (0, Offset { region: Region::Own, position: 0 });
        if own {
            for p in 0..t {
                // Overlapping copy: the source bytes run into the lookahead.
                let mut l = 0;
                while t + l < n && target[p + l] == target[t + l] {
                    l += 1;
                }
                if l > best.0 {
                    best = (l, Offset { region: Region::Own, position: p });
                }
            }
        }
        for (i, s) in sources.iter().enumerate() {
            let limit = if causal { t.min(s.len()) } else { s.len() };
            for p in 0..limit {
                let l = prefix(&s[p..limit], &target[t..]);
                if l > best.0 {
                    best = (l, Offset { region: Region::Source(i), position: p });
                }
            }
        }
        if best.0 >= 3 {
            out.push(Symbol::Reference { length: best.0, offset: best.1 });
            t += best.0;
        } else {
            out.push(Symbol::Literal(target[t]));
            t += 1;
        }
    }
    out
}

