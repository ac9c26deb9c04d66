//! From an attractor back to decodable representations: a bidirectional
//! parse with phrases laid out concentrically around attractor positions,
//! and a collage system built on top of it.

use std::collections::BTreeMap;

use crate::attractor::Attractor;
use crate::compress::{CollageSystem, Directive, MacroScheme, Rule, RuleId};
use crate::error::{Error, Result};
use crate::text::Text;
use crate::validate::{require_attractor, CrossingFinder};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhraseKind {
    Explicit(u32),
    /// Copy of the equally long substring starting at `src`.
    Copy {
        src: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParsePhrase {
    pub start: usize,
    pub len: usize,
    pub kind: PhraseKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BidirectionalParse {
    pub n: usize,
    pub phrases: Vec<ParsePhrase>,
    /// Longest chain of copies from a position down to an explicit symbol.
    pub height: usize,
}

impl BidirectionalParse {
    /// b, the number of phrases.
    pub fn b(&self) -> usize {
        self.phrases.len()
    }

    pub fn explicit_count(&self) -> usize {
        self.phrases
            .iter()
            .filter(|p| matches!(p.kind, PhraseKind::Explicit(_)))
            .count()
    }

    pub fn to_macro_scheme(&self) -> MacroScheme {
        let directives = self
            .phrases
            .iter()
            .map(|p| match p.kind {
                PhraseKind::Explicit(symbol) => Directive::Literal {
                    pos: p.start,
                    symbol,
                },
                PhraseKind::Copy { src } => Directive::Copy {
                    dst: (p.start, p.start + p.len - 1),
                    src: (src, src + p.len - 1),
                },
            })
            .collect();
        MacroScheme {
            n: self.n,
            directives,
        }
    }

    /// Reads a macro scheme whose destinations tile `[1..n]`. The height is
    /// unknown and taken as `n`, the budget that still rejects cycles.
    pub fn from_macro_scheme(scheme: &MacroScheme) -> Result<Self> {
        let mut phrases: Vec<ParsePhrase> = scheme
            .directives
            .iter()
            .map(|d| match *d {
                Directive::Literal { pos, symbol } => ParsePhrase {
                    start: pos,
                    len: 1,
                    kind: PhraseKind::Explicit(symbol),
                },
                Directive::Copy { dst, src } => ParsePhrase {
                    start: dst.0,
                    len: dst.1 + 1 - dst.0,
                    kind: PhraseKind::Copy { src: src.0 },
                },
            })
            .collect();
        phrases.sort_by_key(|p| p.start);
        let parse = BidirectionalParse {
            n: scheme.n,
            phrases,
            height: scheme.n,
        };
        parse.check_tiling()?;
        Ok(parse)
    }

    fn check_tiling(&self) -> Result<()> {
        let mut next = 1;
        for p in &self.phrases {
            if p.start != next || p.len == 0 {
                return Err(Error::MalformedScheme(format!(
                    "phrases do not tile [1..{}] at {next}",
                    self.n
                )));
            }
            match p.kind {
                PhraseKind::Explicit(_) if p.len != 1 => {
                    return Err(Error::MalformedScheme(format!(
                        "explicit phrase of length {} at {}",
                        p.len, p.start
                    )));
                }
                PhraseKind::Copy { src } if src == 0 || src + p.len - 1 > self.n => {
                    return Err(Error::MalformedScheme(format!(
                        "copy source out of range at {}",
                        p.start
                    )));
                }
                _ => {}
            }
            next += p.len;
        }
        if next != self.n + 1 || self.n == 0 {
            return Err(Error::MalformedScheme(format!(
                "phrases do not tile [1..{}]",
                self.n
            )));
        }
        Ok(())
    }
}

/// Phrase intervals for one gap `(a, b)` between consecutive attractor
/// elements: doubling lengths rightward from `a + 1` up to the midpoint and
/// mirrored leftward from `b - 1`.
fn gap_layout(a: usize, b: usize, out: &mut Vec<(usize, usize)>) {
    if b <= a + 1 {
        return;
    }
    let m = (a + b) / 2;
    let mut at = a + 1;
    let mut len = 1;
    while at <= m {
        let end = (at + len - 1).min(m);
        out.push((at, end + 1 - at));
        at = end + 1;
        len *= 2;
    }
    let mut left = Vec::new();
    let mut at = b - 1;
    let mut len = 1;
    while at > m {
        let begin = (at + 1).saturating_sub(len).max(m + 1);
        left.push((begin, at + 1 - begin));
        at = begin - 1;
        len *= 2;
    }
    out.extend(left.into_iter().rev());
}

/// Builds the bidirectional parse induced by `gamma` after adding `γ`
/// equally spaced positions. Positions `0` and `n + 1` act as virtual
/// elements for the layout of the leading and trailing gaps.
pub fn bidirectional_parse_from_attractor(
    text: &Text,
    gamma: &Attractor,
) -> Result<BidirectionalParse> {
    require_attractor(text, gamma, text.len())?;
    let n = text.len();
    let closed = gamma.equally_spaced_closure();
    let finder = CrossingFinder::new(text, closed.positions())?;

    let mut layout: Vec<(usize, usize)> = Vec::new();
    let mut prev = 0;
    for &g in closed.positions().iter().chain(std::iter::once(&(n + 1))) {
        gap_layout(prev, g, &mut layout);
        if g <= n {
            layout.push((g, 1));
        }
        prev = g;
    }

    let mut phrases = Vec::with_capacity(layout.len());
    for (start, len) in layout {
        let kind = if closed.contains(start) {
            PhraseKind::Explicit(text.at(start))
        } else {
            let (src, _) = finder.find(start, len).ok_or_else(|| {
                Error::Internal(format!(
                    "no crossing occurrence for phrase at {start} of length {len}"
                ))
            })?;
            PhraseKind::Copy { src }
        };
        phrases.push(ParsePhrase { start, len, kind });
    }

    // sources of a phrase lie in strictly shorter phrases, so depths can be
    // filled in order of phrase length
    let mut depth = vec![0usize; n + 1];
    let mut order: Vec<&ParsePhrase> = phrases.iter().collect();
    order.sort_by_key(|p| (p.len, p.start));
    for p in order {
        if let PhraseKind::Copy { src } = p.kind {
            for o in 0..p.len {
                depth[p.start + o] = 1 + depth[src + o];
            }
        }
    }
    let height = depth.iter().copied().max().unwrap_or(0);
    Ok(BidirectionalParse { n, phrases, height })
}

/// Decodes by following copy chains, rejecting any chain longer than the
/// parse height.
pub fn parse_decode(parse: &BidirectionalParse) -> Result<Text> {
    parse.check_tiling()?;
    let n = parse.n;
    // origin[p]: explicit symbol or the position p copies from
    let mut origin: Vec<std::result::Result<u32, usize>> = vec![Ok(0); n + 1];
    for ph in &parse.phrases {
        match ph.kind {
            PhraseKind::Explicit(c) => origin[ph.start] = Ok(c),
            PhraseKind::Copy { src } => {
                for o in 0..ph.len {
                    origin[ph.start + o] = Err(src + o);
                }
            }
        }
    }
    let mut resolved: Vec<Option<(u32, usize)>> = vec![None; n + 1];
    let mut path = Vec::new();
    for p in 1..=n {
        path.clear();
        let mut q = p;
        let (symbol, mut d) = loop {
            if let Some(hit) = resolved[q] {
                break hit;
            }
            match origin[q] {
                Ok(c) => break (c, 0),
                Err(next) => {
                    path.push(q);
                    if path.len() > parse.height {
                        return Err(Error::NonTerminating { pos: p });
                    }
                    q = next;
                }
            }
        };
        resolved[q] = Some((symbol, d));
        while let Some(x) = path.pop() {
            d += 1;
            if d > parse.height {
                return Err(Error::NonTerminating { pos: p });
            }
            resolved[x] = Some((symbol, d));
        }
    }
    Text::from_symbols(resolved[1..].iter().map(|r| r.unwrap().0).collect())
}

struct CollageBuilder {
    system: CollageSystem,
    next_id: RuleId,
    terminals: BTreeMap<u32, RuleId>,
}

impl CollageBuilder {
    fn add(&mut self, rule: Rule) -> RuleId {
        let id = self.next_id;
        self.next_id += 1;
        self.system.insert(id, rule);
        id
    }

    fn terminal(&mut self, c: u32) -> RuleId {
        if let Some(&id) = self.terminals.get(&c) {
            return id;
        }
        let id = self.add(Rule::Terminal(c));
        self.terminals.insert(c, id);
        id
    }

    /// Groups a run into pairs (a trailing triple when odd) until one
    /// nonterminal remains.
    fn block(&mut self, mut run: Vec<RuleId>) -> RuleId {
        while run.len() > 1 {
            let mut next = Vec::with_capacity(run.len() / 2 + 1);
            let mut i = 0;
            while i < run.len() {
                if run.len() - i == 3 {
                    let tail = self.add(Rule::Pair(run[i + 1], run[i + 2]));
                    next.push(self.add(Rule::Pair(run[i], tail)));
                    i += 3;
                } else {
                    next.push(self.add(Rule::Pair(run[i], run[i + 1])));
                    i += 2;
                }
            }
            run = next;
        }
        run[0]
    }
}

/// Collage system of the bidirectional parse: phrases are processed by
/// increasing length and every maximal processed region is kept as a single
/// nonterminal. A phrase becomes a slice of the region holding its source,
/// merged with its processed neighbours.
pub fn collage_from_attractor(text: &Text, gamma: &Attractor) -> Result<CollageSystem> {
    let parse = bidirectional_parse_from_attractor(text, gamma)?;
    let mut b = CollageBuilder {
        system: CollageSystem::new(0),
        next_id: 1,
        terminals: BTreeMap::new(),
    };
    // region start -> (region end, nonterminal)
    let mut regions: BTreeMap<usize, (usize, RuleId)> = BTreeMap::new();

    let singles: Vec<usize> = parse
        .phrases
        .iter()
        .filter(|p| p.len == 1)
        .map(|p| p.start)
        .collect();
    let mut i = 0;
    while i < singles.len() {
        let mut j = i;
        while j + 1 < singles.len() && singles[j + 1] == singles[j] + 1 {
            j += 1;
        }
        let run: Vec<RuleId> = singles[i..=j]
            .iter()
            .map(|&p| b.terminal(text.at(p)))
            .collect();
        let nt = b.block(run);
        regions.insert(singles[i], (singles[j], nt));
        i = j + 1;
    }

    let mut longer: Vec<&ParsePhrase> = parse.phrases.iter().filter(|p| p.len > 1).collect();
    longer.sort_by_key(|p| (p.len, p.start));
    for p in longer {
        let PhraseKind::Copy { src } = p.kind else {
            return Err(Error::Internal(
                "explicit phrase longer than one symbol".into(),
            ));
        };
        let (&rs, &(re, k)) = regions
            .range(..=src)
            .next_back()
            .filter(|(_, &(re, _))| re >= src + p.len - 1)
            .ok_or_else(|| {
                Error::Internal(format!("source of phrase at {} is not processed", p.start))
            })?;
        let w = if rs == src && re == src + p.len - 1 {
            k
        } else {
            b.add(Rule::Slice(k, src - rs + 1, src - rs + p.len))
        };
        let (mut start, mut end, mut nt) = (p.start, p.start + p.len - 1, w);
        if let Some(&(x2_end, x2)) = regions.get(&(end + 1)) {
            regions.remove(&(end + 1));
            nt = b.add(Rule::Pair(nt, x2));
            end = x2_end;
        }
        if let Some((&x1_start, &(x1_end, x1))) = regions.range(..start).next_back() {
            if x1_end + 1 == start {
                regions.remove(&x1_start);
                nt = b.add(Rule::Pair(x1, nt));
                start = x1_start;
            }
        }
        regions.insert(start, (end, nt));
    }

    match regions.into_iter().collect::<Vec<_>>()[..] {
        [(1, (end, nt))] if end == text.len() => b.system.start = nt,
        _ => {
            return Err(Error::Internal(
                "phrases did not collapse into one region".into(),
            ))
        }
    }
    Ok(b.system)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compress::{collage_expand, lz77_parse, macro_decode};
    use crate::induce::attractor_from_lz77;
    use proptest::prelude::*;

    fn log_bound(n: usize, gamma: usize) -> f64 {
        ((n as f64 / gamma as f64).log2().ceil().max(0.0)) + 1.0
    }

    fn check_parse(text: &Text, gamma: &Attractor) -> BidirectionalParse {
        let parse = bidirectional_parse_from_attractor(text, gamma).unwrap();
        assert_eq!(parse_decode(&parse).unwrap(), *text);
        assert_eq!(macro_decode(&parse.to_macro_scheme()).unwrap(), *text);
        let closed = gamma.equally_spaced_closure();
        for p in &parse.phrases {
            match p.kind {
                PhraseKind::Explicit(c) => {
                    assert!(closed.contains(p.start));
                    assert_eq!(c, text.at(p.start));
                }
                PhraseKind::Copy { src } => {
                    assert_eq!(text.slice(src, p.len), text.slice(p.start, p.len));
                    assert!(
                        (src..src + p.len).any(|q| closed.contains(q)),
                        "source of {p:?} misses the attractor"
                    );
                    assert!((p.start..p.start + p.len).all(|q| !closed.contains(q)));
                }
            }
        }
        let bound = log_bound(text.len(), closed.len());
        assert!(parse.b() as f64 <= 4.0 * closed.len() as f64 * bound);
        assert!(
            parse.height as f64 <= bound + 1.0,
            "height {} for bound {bound}",
            parse.height
        );
        parse
    }

    fn check_collage(text: &Text, gamma: &Attractor) -> CollageSystem {
        let c = collage_from_attractor(text, gamma).unwrap();
        assert_eq!(collage_expand(&c).unwrap(), *text);
        c
    }

    #[test]
    fn example_two() {
        let t = Text::from_ascii("CDABCCDABCCA");
        let g = Attractor::full(12, [4, 7, 11, 12]).unwrap();
        check_parse(&t, &g);
        check_collage(&t, &g);
    }

    #[test]
    fn everything_is_explicit() {
        let t = Text::from_ascii("abcabcab");
        let p = check_parse(&t, &Attractor::everything(8));
        assert_eq!(p.explicit_count(), 8);
        assert_eq!(p.height, 0);
        let c = check_collage(&t, &Attractor::everything(8));
        assert!(c
            .rules
            .values()
            .all(|r| matches!(r, Rule::Terminal(_) | Rule::Pair(..))));
        let heights = c.heights().unwrap();
        assert_eq!(heights[&c.start], 4, "three pair levels over the terminals");
    }

    #[test]
    fn unary() {
        let t = Text::from_symbols(vec![1; 8]).unwrap();
        let g = Attractor::full(8, [1]).unwrap();
        let p = check_parse(&t, &g);
        assert!(p.b() <= 8);
        let t = Text::from_symbols(vec![1; 16]).unwrap();
        let c = check_collage(&t, &Attractor::full(16, [1]).unwrap());
        assert!(c.c() as f64 <= 6.0 * log_bound(16, 1));
    }

    #[test]
    fn gap_layout_is_concentric() {
        let mut v = Vec::new();
        gap_layout(0, 17, &mut v);
        assert_eq!(
            v,
            vec![
                (1, 1),
                (2, 2),
                (4, 4),
                (8, 1),
                (9, 1),
                (10, 4),
                (14, 2),
                (16, 1)
            ]
        );
        v.clear();
        gap_layout(3, 4, &mut v);
        assert!(v.is_empty());
        v.clear();
        gap_layout(3, 5, &mut v);
        assert_eq!(v, vec![(4, 1)]);
    }

    #[test]
    fn rejects_non_attractor_and_corrupt_parse() {
        let t = Text::from_ascii("CDABCCDABCCA");
        let g = Attractor::full(12, [7, 11, 12]).unwrap();
        assert!(matches!(
            bidirectional_parse_from_attractor(&t, &g),
            Err(Error::InvalidAttractor(_))
        ));
        assert!(matches!(
            collage_from_attractor(&t, &g),
            Err(Error::InvalidAttractor(_))
        ));

        let cyclic = BidirectionalParse {
            n: 3,
            phrases: vec![
                ParsePhrase {
                    start: 1,
                    len: 2,
                    kind: PhraseKind::Copy { src: 2 },
                },
                ParsePhrase {
                    start: 3,
                    len: 1,
                    kind: PhraseKind::Copy { src: 1 },
                },
            ],
            height: 3,
        };
        assert!(matches!(
            parse_decode(&cyclic),
            Err(Error::NonTerminating { .. })
        ));
        let gap = BidirectionalParse {
            n: 3,
            phrases: vec![ParsePhrase {
                start: 1,
                len: 1,
                kind: PhraseKind::Explicit(1),
            }],
            height: 0,
        };
        assert!(matches!(parse_decode(&gap), Err(Error::MalformedScheme(_))));
    }

    #[test]
    fn macro_scheme_round_trip() {
        let t = Text::from_ascii("abracadabra");
        let g = attractor_from_lz77(&lz77_parse(&t)).unwrap();
        let p = check_parse(&t, &g);
        let back = BidirectionalParse::from_macro_scheme(&p.to_macro_scheme()).unwrap();
        assert_eq!(parse_decode(&back).unwrap(), t);
    }

    #[test]
    fn fibonacci_sizes_stay_logarithmic() {
        let mut a = vec![1u32];
        let mut b = vec![1u32, 2];
        while b.len() < 4000 {
            let next = [b.clone(), a].concat();
            a = b;
            b = next;
        }
        let t = Text::from_symbols(b).unwrap();
        let g = attractor_from_lz77(&lz77_parse(&t)).unwrap();
        check_parse(&t, &g);
        let c = check_collage(&t, &g);
        let closed = g.equally_spaced_closure().len();
        assert!(c.c() as f64 <= 12.0 * closed as f64 * log_bound(t.len(), closed));
    }

    proptest! {
        #[test]
        fn round_trips_with_induced_attractors(s in prop::collection::vec(1u32..4, 1..120)) {
            let t = Text::from_symbols(s).unwrap();
            let g = attractor_from_lz77(&lz77_parse(&t)).unwrap();
            check_parse(&t, &g);
            check_collage(&t, &g);
        }
    }
}
