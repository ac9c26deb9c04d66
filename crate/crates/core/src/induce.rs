//! Attractors induced by compressed representations.
//!
//! Each inducer returns a full attractor (`k = n`) whose size is bounded by
//! the size of the representation: `z` for LZ77, `r` for the RLBWT, `2b` for
//! a macro scheme and `c` for a collage system.

use std::collections::{BTreeMap, BTreeSet};

use crate::attractor::Attractor;
use crate::compress::{
    macro_decode, CollageSystem, Directive, Lz77Parse, MacroScheme, Rule, RuleId,
};
use crate::error::{Error, Result};
use crate::suffix::SuffixIndex;
use crate::text::Text;

/// The last position of every phrase.
pub fn attractor_from_lz77(parse: &Lz77Parse) -> Result<Attractor> {
    let n = parse.text_len();
    Attractor::new(n, n, parse.phrase_ends())
}

/// Text positions whose BWT symbol starts a run.
///
/// The symbol in BWT row `j` is `T[sa[j] - 1]`, or `T[n]` when `sa[j] = 1`.
pub fn attractor_from_rlbwt(text: &Text) -> Result<Attractor> {
    if !text.has_sentinel() {
        return Err(Error::MalformedBwt(
            "text must end with the sentinel".into(),
        ));
    }
    let n = text.len();
    let index = SuffixIndex::build(text)?;
    let bwt = index.bwt();
    let positions = (0..n).filter(|&j| j == 0 || bwt[j - 1] != bwt[j]).map(|j| {
        if index.sa()[j] == 1 {
            n
        } else {
            index.sa()[j] - 1
        }
    });
    Attractor::full(n, positions)
}

/// Both endpoints of every copy destination plus every literal position.
pub fn attractor_from_macro(scheme: &MacroScheme) -> Result<Attractor> {
    let text = macro_decode(scheme)?;
    let positions = scheme.directives.iter().flat_map(|d| match *d {
        Directive::Copy { dst, .. } => vec![dst.0, dst.1],
        Directive::Literal { pos, .. } => vec![pos],
    });
    Attractor::full(text.len(), positions)
}

/// One position per terminal, pair and power rule, taken at the leftmost
/// place where the rule is realized while expanding the start symbol.
///
/// A terminal contributes the position of its symbol, a pair `Y -> AB` the
/// last position of `A`, a power `Z -> R^l` the last position of the first
/// `R`. Slice rules contribute nothing. A rule that only ever appears
/// partially (cut by a slice) contributes its split point at the leftmost
/// realization where both sides of the split are visible.
pub fn attractor_from_collage(system: &CollageSystem) -> Result<Attractor> {
    let lens = system.lengths()?;
    let n = lens[&system.start];
    let mut full: BTreeMap<RuleId, usize> = BTreeMap::new();
    let mut partial: BTreeMap<RuleId, usize> = BTreeMap::new();

    // (rule, window [lo, hi) inside its expansion, 0-based text offset of lo)
    let mut stack: Vec<(RuleId, usize, usize, usize)> = vec![(system.start, 0, n, 0)];
    while let Some((id, lo, hi, offset)) = stack.pop() {
        let len = lens[&id];
        let is_full = lo == 0 && hi == len;
        if is_full && full.contains_key(&id) {
            continue;
        }
        let rule = system.rules[&id];
        // expansion index of the last symbol before the split
        let split = match rule {
            Rule::Terminal(_) => Some(0),
            Rule::Pair(a, _) => Some(lens[&a] - 1),
            Rule::Power(r, _) => Some(lens[&r] - 1),
            Rule::Slice(..) => None,
        };
        if let Some(s) = split {
            let visible = lo <= s && (matches!(rule, Rule::Terminal(_)) || s + 1 < hi);
            if visible {
                let pos = offset + (s - lo) + 1;
                if is_full {
                    full.insert(id, pos);
                } else {
                    partial.entry(id).or_insert(pos);
                }
            }
        }
        match rule {
            Rule::Terminal(_) => {}
            Rule::Pair(a, b) => {
                let la = lens[&a];
                if hi > la {
                    let blo = lo.max(la);
                    stack.push((b, blo - la, hi - la, offset + (blo - lo)));
                }
                if lo < la {
                    stack.push((a, lo, hi.min(la), offset));
                }
            }
            Rule::Power(r, _) => {
                let lr = lens[&r];
                let first = lo / lr;
                let last = (hi - 1) / lr;
                let mut pushed_whole = false;
                let mut pending = Vec::new();
                for copy in first..=last {
                    let base = copy * lr;
                    let (clo, chi) = (lo.max(base) - base, hi.min(base + lr) - base);
                    let whole = clo == 0 && chi == lr;
                    if whole && pushed_whole {
                        continue;
                    }
                    pushed_whole |= whole;
                    pending.push((r, clo, chi, offset + (base + clo - lo)));
                }
                stack.extend(pending.into_iter().rev());
            }
            Rule::Slice(k, l, _) => stack.push((k, l - 1 + lo, l - 1 + hi, offset)),
        }
    }

    let mut chosen: BTreeSet<usize> = full.values().copied().collect();
    for (id, pos) in partial {
        if !full.contains_key(&id) {
            chosen.insert(pos);
        }
    }
    Attractor::full(n, chosen)
}
