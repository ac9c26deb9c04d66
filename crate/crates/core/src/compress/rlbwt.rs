//! Run-length Burrows-Wheeler transform.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::suffix::SuffixIndex;
use crate::text::{Text, SENTINEL};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Run {
    pub len: usize,
    pub symbol: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rlbwt {
    pub runs: Vec<Run>,
}

impl Rlbwt {
    /// r, the number of maximal runs.
    pub fn r(&self) -> usize {
        self.runs.len()
    }

    pub fn expand(&self) -> Vec<u32> {
        self.runs
            .iter()
            .flat_map(|run| std::iter::repeat_n(run.symbol, run.len))
            .collect()
    }

    /// 0-based BWT indices at which a run starts.
    pub fn run_starts(&self) -> Vec<usize> {
        self.runs
            .iter()
            .scan(0usize, |at, run| {
                let start = *at;
                *at += run.len;
                Some(start)
            })
            .collect()
    }

    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        for run in &self.runs {
            writeln!(out, "{} {}", run.len, run.symbol).unwrap();
        }
        out
    }

    pub fn parse(input: &str) -> Result<Self> {
        let mut runs: Vec<Run> = Vec::new();
        for (lineno, line) in input.lines().enumerate() {
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.is_empty() {
                continue;
            }
            let parsed = match fields[..] {
                [len, symbol] => len.parse::<usize>().ok().zip(symbol.parse::<u32>().ok()),
                _ => None,
            };
            let (len, symbol) =
                parsed.ok_or_else(|| Error::parse(lineno + 1, format!("bad run {line:?}")))?;
            if len == 0 {
                return Err(Error::parse(lineno + 1, "run length must be >= 1"));
            }
            if runs.last().is_some_and(|r| r.symbol == symbol) {
                return Err(Error::parse(lineno + 1, "adjacent runs share a symbol"));
            }
            runs.push(Run { len, symbol });
        }
        Ok(Rlbwt { runs })
    }
}

pub(crate) fn runs_of(bwt: &[u32]) -> Vec<Run> {
    let mut runs: Vec<Run> = Vec::new();
    for &c in bwt {
        match runs.last_mut() {
            Some(run) if run.symbol == c => run.len += 1,
            _ => runs.push(Run { len: 1, symbol: c }),
        }
    }
    runs
}

/// Run-length encodes the BWT of a sentinel-terminated text.
pub fn rlbwt_build(text: &Text) -> Result<Rlbwt> {
    if !text.has_sentinel() {
        return Err(Error::MalformedBwt(
            "text must end with the sentinel".into(),
        ));
    }
    let index = SuffixIndex::build(text)?;
    Ok(Rlbwt {
        runs: runs_of(index.bwt()),
    })
}

/// LF mapping of a BWT given as a symbol sequence: `LF[i] = C[L[i]] + rank_{L[i]}(L, i)`.
pub(crate) fn lf_mapping(bwt: &[u32]) -> Vec<usize> {
    let mut sorted: Vec<u32> = bwt.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let code = |c: u32| sorted.binary_search(&c).unwrap();
    let mut counts = vec![0usize; sorted.len() + 1];
    for &c in bwt {
        counts[code(c) + 1] += 1;
    }
    for i in 1..counts.len() {
        counts[i] += counts[i - 1];
    }
    let mut seen = vec![0usize; sorted.len()];
    bwt.iter()
        .map(|&c| {
            let x = code(c);
            seen[x] += 1;
            counts[x] + seen[x] - 1
        })
        .collect()
}

/// Inverts the BWT by iterating LF from the row holding the sentinel:
/// `T[n-k] = L[LF^k[p0]]`.
pub fn rlbwt_invert(rlbwt: &Rlbwt) -> Result<Text> {
    let bwt = rlbwt.expand();
    let n = bwt.len();
    let sentinels: Vec<usize> = (0..n).filter(|&i| bwt[i] == SENTINEL).collect();
    if sentinels.len() != 1 {
        return Err(Error::MalformedBwt(format!(
            "expected one sentinel, found {}",
            sentinels.len()
        )));
    }
    let lf = lf_mapping(&bwt);
    let mut out = vec![0u32; n];
    let mut visited = vec![false; n];
    let mut p = sentinels[0];
    for k in 0..n {
        if visited[p] {
            return Err(Error::MalformedBwt(
                "LF does not form a single cycle".into(),
            ));
        }
        visited[p] = true;
        out[n - 1 - k] = bwt[p];
        p = lf[p];
    }
    if out[n - 1] != SENTINEL {
        return Err(Error::MalformedBwt("sentinel not last".into()));
    }
    let sigma = out.iter().copied().max().unwrap_or(1).max(1);
    Text::new(out, sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_bwt(s: &[u32]) -> Vec<u32> {
        let n = s.len();
        let mut rot: Vec<Vec<u32>> = (0..n).map(|i| [&s[i..], &s[..i]].concat()).collect();
        rot.sort();
        rot.into_iter().map(|r| r[n - 1]).collect()
    }

    #[test]
    fn banana() {
        let (t, a) = Text::from_bytes(b"banana").unwrap();
        let t = t.with_sentinel();
        let r = rlbwt_build(&t).unwrap();
        assert_eq!(r.expand(), brute_bwt(t.symbols()));
        assert_eq!(a.decode(&r.expand()), b"annb$aa");
        assert_eq!(r.r(), 5);
        assert_eq!(rlbwt_invert(&r).unwrap(), t);
    }

    #[test]
    fn tiny() {
        let t = Text::from_ascii("a").with_sentinel();
        let r = rlbwt_build(&t).unwrap();
        assert_eq!(r.r(), 2);
        assert_eq!(rlbwt_invert(&r).unwrap(), t);
    }

    #[test]
    fn unary_has_two_runs() {
        for n in 2..40 {
            let t = Text::from_symbols(vec![1; n]).unwrap().with_sentinel();
            let r = rlbwt_build(&t).unwrap();
            assert_eq!(r.expand(), brute_bwt(t.symbols()));
            // sorted rotations end in a, a, ..., a, $
            assert_eq!(r.r(), 2, "n = {n}");
            assert_eq!(rlbwt_invert(&r).unwrap(), t);
        }
    }

    #[test]
    fn requires_sentinel() {
        assert!(rlbwt_build(&Text::from_ascii("ab")).is_err());
    }

    #[test]
    fn malformed_inputs() {
        let two = Rlbwt {
            runs: vec![Run { len: 2, symbol: 0 }],
        };
        assert!(matches!(rlbwt_invert(&two), Err(Error::MalformedBwt(_))));
        let none = Rlbwt {
            runs: vec![Run { len: 2, symbol: 1 }],
        };
        assert!(matches!(rlbwt_invert(&none), Err(Error::MalformedBwt(_))));
        // "a$a" style: LF splits into two cycles
        let split = Rlbwt {
            runs: vec![
                Run { len: 1, symbol: 1 },
                Run { len: 1, symbol: 0 },
                Run { len: 1, symbol: 2 },
            ],
        };
        assert!(rlbwt_invert(&split).is_err());
    }

    #[test]
    fn file_round_trip() {
        let r = rlbwt_build(&Text::from_ascii("mississippi").with_sentinel()).unwrap();
        assert_eq!(Rlbwt::parse(&r.to_file_string()).unwrap(), r);
        assert!(Rlbwt::parse("1 2\n3 2\n").is_err());
    }

    proptest! {
        #[test]
        fn round_trip(s in prop::collection::vec(1u32..5, 1..200)) {
            let t = Text::from_symbols(s).unwrap().with_sentinel();
            let r = rlbwt_build(&t).unwrap();
            for w in r.runs.windows(2) {
                prop_assert_ne!(w[0].symbol, w[1].symbol);
            }
            prop_assert_eq!(r.runs.iter().map(|r| r.len).sum::<usize>(), t.len());
            let back = rlbwt_invert(&r).unwrap();
            prop_assert_eq!(back.symbols(), t.symbols());
        }
    }
}
