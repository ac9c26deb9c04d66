//! Greedy non-overlapping LZ77.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::rmq::SparseTable;
use crate::suffix::SuffixIndex;
use crate::text::Text;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Phrase {
    Literal(u32),
    /// Copies `len` symbols from 1-based `src`; the source must end before
    /// the phrase starts.
    Copy {
        src: usize,
        len: usize,
    },
}

impl Phrase {
    pub fn len(&self) -> usize {
        match *self {
            Phrase::Literal(_) => 1,
            Phrase::Copy { len, .. } => len,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lz77Parse {
    pub phrases: Vec<Phrase>,
}

impl Lz77Parse {
    /// z, the number of phrases.
    pub fn z(&self) -> usize {
        self.phrases.len()
    }

    pub fn text_len(&self) -> usize {
        self.phrases.iter().map(Phrase::len).sum()
    }

    /// 1-based position of the last symbol of every phrase.
    pub fn phrase_ends(&self) -> Vec<usize> {
        self.phrases
            .iter()
            .scan(0usize, |end, p| {
                *end += p.len();
                Some(*end)
            })
            .collect()
    }

    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        for p in &self.phrases {
            match p {
                Phrase::Literal(c) => writeln!(out, "L {c}").unwrap(),
                Phrase::Copy { src, len } => writeln!(out, "C {src} {len}").unwrap(),
            }
        }
        out
    }

    pub fn parse(input: &str) -> Result<Self> {
        let mut phrases = Vec::new();
        for (lineno, line) in input.lines().enumerate() {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let num = |i: usize| -> Result<usize> {
                fields
                    .get(i)
                    .and_then(|f| f.parse().ok())
                    .ok_or_else(|| Error::parse(lineno + 1, "expected integer"))
            };
            match fields.first() {
                None => continue,
                Some(&"L") if fields.len() == 2 => phrases.push(Phrase::Literal(num(1)? as u32)),
                Some(&"C") if fields.len() == 3 => {
                    let (src, len) = (num(1)?, num(2)?);
                    if src == 0 || len == 0 {
                        return Err(Error::parse(lineno + 1, "copy needs src >= 1 and len >= 1"));
                    }
                    phrases.push(Phrase::Copy { src, len })
                }
                _ => {
                    return Err(Error::parse(
                        lineno + 1,
                        format!("bad LZ77 record {line:?}"),
                    ))
                }
            }
        }
        Ok(Lz77Parse { phrases })
    }
}

/// Greedy left-to-right parse into longest previous non-overlapping factors.
///
/// At position `i` the factor length `l` is valid iff the leftmost occurrence
/// of `T[i..i+l-1]` starts at or before `i - l`; this predicate is monotone
/// in `l`, so the longest one is found by binary search over SA intervals.
/// Among equally long candidates the leftmost source is chosen.
pub fn lz77_parse(text: &Text) -> Lz77Parse {
    let n = text.len();
    let index = SuffixIndex::build(text).expect("non-empty text");
    let min_sa = SparseTable::new(index.sa());
    let leftmost = |pos: usize, len: usize| {
        let iv = index.interval_of(pos, len);
        min_sa.min(iv.start, iv.end - 1)
    };
    let mut phrases = Vec::new();
    let mut i = 1;
    while i <= n {
        let fits = |len: usize| len < i && leftmost(i, len) + len <= i;
        let (mut lo, mut hi) = (0usize, n + 1 - i);
        while lo < hi {
            let mid = (lo + hi).div_ceil(2);
            if fits(mid) {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        if lo == 0 {
            phrases.push(Phrase::Literal(text.at(i)));
            i += 1;
        } else {
            phrases.push(Phrase::Copy {
                src: leftmost(i, lo),
                len: lo,
            });
            i += lo;
        }
    }
    Lz77Parse { phrases }
}

pub fn lz77_decode(parse: &Lz77Parse) -> Result<Text> {
    let mut out: Vec<u32> = Vec::with_capacity(parse.text_len());
    for (index, phrase) in parse.phrases.iter().enumerate() {
        match *phrase {
            Phrase::Literal(c) => out.push(c),
            Phrase::Copy { src, len } => {
                if src == 0 || len == 0 || src + len - 1 > out.len() {
                    return Err(Error::ForwardReference { index });
                }
                out.extend_from_within(src - 1..src - 1 + len);
            }
        }
    }
    Text::from_symbols(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Scans every earlier start for the longest non-overlapping match.
    fn greedy_oracle(s: &[u32]) -> Vec<Phrase> {
        let n = s.len();
        let mut out = Vec::new();
        let mut i = 0;
        while i < n {
            let mut best = (0, 0);
            for j in 0..i {
                let mut l = 0;
                while i + l < n && j + l < i && s[j + l] == s[i + l] {
                    l += 1;
                }
                if l > best.1 {
                    best = (j, l);
                }
            }
            if best.1 == 0 {
                out.push(Phrase::Literal(s[i]));
                i += 1;
            } else {
                out.push(Phrase::Copy {
                    src: best.0 + 1,
                    len: best.1,
                });
                i += best.1;
            }
        }
        out
    }

    #[test]
    fn example_two() {
        let t = Text::from_ascii("CDABCCDABCCA");
        let p = lz77_parse(&t);
        assert_eq!(p.phrases, greedy_oracle(t.symbols()));
        assert_eq!(p.z(), 8);
        assert_eq!(p.phrase_ends(), vec![1, 2, 3, 4, 5, 10, 11, 12]);
        assert_eq!(lz77_decode(&p).unwrap(), t);
    }

    #[test]
    fn single_and_unary() {
        let p = lz77_parse(&Text::from_ascii("a"));
        assert_eq!(p.phrases, vec![Phrase::Literal(1)]);
        assert_eq!(lz77_decode(&p).unwrap().symbols(), &[1]);

        let p = lz77_parse(&Text::from_ascii("aaaa"));
        assert_eq!(
            p.phrases,
            vec![
                Phrase::Literal(1),
                Phrase::Copy { src: 1, len: 1 },
                Phrase::Copy { src: 1, len: 2 }
            ]
        );
        assert_eq!(lz77_decode(&p).unwrap().symbols(), &[1, 1, 1, 1]);
    }

    #[test]
    fn rejects_overlap() {
        let p = Lz77Parse {
            phrases: vec![Phrase::Literal(1), Phrase::Copy { src: 1, len: 2 }],
        };
        assert_eq!(lz77_decode(&p), Err(Error::ForwardReference { index: 1 }));
    }

    #[test]
    fn file_round_trip() {
        let p = lz77_parse(&Text::from_ascii("abababbbab"));
        assert_eq!(Lz77Parse::parse(&p.to_file_string()).unwrap(), p);
        assert!(Lz77Parse::parse("X 1\n").is_err());
    }

    /// Minimum phrase count over all unidirectional non-overlapping parses.
    fn optimal_phrase_count(s: &[u32]) -> usize {
        let n = s.len();
        let mut best = vec![usize::MAX; n + 1];
        best[0] = 0;
        for i in 0..n {
            if best[i] == usize::MAX {
                continue;
            }
            // a literal is always allowed
            best[i + 1] = best[i + 1].min(best[i] + 1);
            for l in 1..=n - i {
                let found = (0..i).any(|j| j + l <= i && s[j..j + l] == s[i..i + l]);
                if found {
                    best[i + l] = best[i + l].min(best[i] + 1);
                }
            }
        }
        best[n]
    }

    #[test]
    fn greedy_is_optimal_on_small_binary_texts() {
        for n in 1..=12u32 {
            for bits in 0..(1u32 << n) {
                let s: Vec<u32> = (0..n).map(|i| 1 + ((bits >> i) & 1)).collect();
                let p = lz77_parse(&Text::from_symbols(s.clone()).unwrap());
                assert!(p.z() <= optimal_phrase_count(&s), "{s:?}");
            }
        }
    }

    proptest! {
        #[test]
        fn matches_oracle_and_round_trips(s in prop::collection::vec(1u32..4, 1..150)) {
            let t = Text::from_symbols(s.clone()).unwrap();
            let p = lz77_parse(&t);
            prop_assert_eq!(&p.phrases, &greedy_oracle(&s));
            prop_assert_eq!(lz77_decode(&p).unwrap(), t);
        }
    }
}
