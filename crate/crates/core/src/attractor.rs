//! The [`Attractor`] type and its file format.

use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A sorted set of 1-based positions of a length-`n` text, together with the
/// substring length `k` it claims to cover (`k == n` is a full attractor).
///
/// Construction only checks the positional invariants; whether the set
/// really is a k-attractor is decided by [`crate::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Attractor {
    positions: Vec<usize>,
    k: usize,
    n: usize,
}

impl Attractor {
    /// Positions must be strictly increasing and inside `[1..n]`.
    pub fn new(n: usize, k: usize, positions: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyText);
        }
        if k == 0 || k > n {
            return Err(Error::BadK { k, n });
        }
        for (i, &p) in positions.iter().enumerate() {
            if p == 0 || p > n {
                return Err(Error::PositionOutOfRange { pos: p, n });
            }
            if i > 0 && positions[i - 1] >= p {
                return Err(Error::UnsortedPositions { pos: p });
            }
        }
        Ok(Attractor { positions, k, n })
    }

    /// Sorts and deduplicates before checking range.
    pub fn from_unsorted(
        n: usize,
        k: usize,
        positions: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let mut v: Vec<usize> = positions.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self::new(n, k, v)
    }

    pub fn full(n: usize, positions: impl IntoIterator<Item = usize>) -> Result<Self> {
        Self::from_unsorted(n, n, positions)
    }

    /// `{1..n}`, always an attractor.
    pub fn everything(n: usize) -> Self {
        Attractor {
            positions: (1..=n).collect(),
            k: n,
            n,
        }
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn into_positions(self) -> Vec<usize> {
        self.positions
    }

    /// γ, the number of positions.
    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_full(&self) -> bool {
        self.k == self.n
    }

    pub fn contains(&self, pos: usize) -> bool {
        self.positions.binary_search(&pos).is_ok()
    }

    /// Same positions, different claimed coverage.
    pub fn with_k(&self, k: usize) -> Result<Self> {
        Self::new(self.n, k, self.positions.clone())
    }

    /// Union with `extra`. Any superset of an attractor is an attractor.
    pub fn superset_close(&self, extra: impl IntoIterator<Item = usize>) -> Result<Self> {
        let extra: Vec<usize> = extra.into_iter().collect();
        if let Some(&p) = extra.iter().find(|&&p| p == 0 || p > self.n) {
            return Err(Error::PositionOutOfRange { pos: p, n: self.n });
        }
        Self::from_unsorted(self.n, self.k, self.positions.iter().copied().chain(extra))
    }

    /// Adds `γ` equally spaced positions `⌈n/γ⌉·i`, `i = 1..γ`, clamped to `n`.
    ///
    /// Afterwards consecutive positions are at most `⌈n/γ⌉` apart and the
    /// first one is at most `⌈n/γ⌉`.
    pub fn equally_spaced_closure(&self) -> Self {
        let gamma = self.len().max(1);
        let step = self.n.div_ceil(gamma);
        let spaced = (1..=gamma).map(|i| (step * i).min(self.n));
        self.superset_close(spaced)
            .expect("spaced positions are in range")
    }

    /// Restricts an attractor of `T$` to the text `T` of length `n - 1`.
    ///
    /// Occurrences of substrings of `T` never contain the sentinel, so the
    /// positions inside `[1..n-1]` still form an attractor; when nothing
    /// remains, position `n - 1` is used.
    pub fn drop_sentinel_position(&self) -> Result<Self> {
        let n = self.n - 1;
        if n == 0 {
            return Err(Error::EmptyText);
        }
        let mut v: Vec<usize> = self.positions.iter().copied().filter(|&p| p <= n).collect();
        if v.is_empty() {
            v.push(n);
        }
        Self::new(n, self.k.min(n), v)
    }

    /// Parses the attractor file format: an optional `# n=<n> k=<k>` header,
    /// then one strictly increasing 1-based position per line.
    ///
    /// Without a header, `n` and `k` must come from `default_n`.
    pub fn parse(input: &str, default_n: Option<usize>) -> Result<Self> {
        let mut n = default_n;
        let mut k = None;
        let mut positions = Vec::new();
        for (lineno, line) in input.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(header) = line.strip_prefix('#') {
                for field in header.split_whitespace() {
                    if let Some(v) = field.strip_prefix("n=") {
                        n = Some(v.parse().map_err(|_| Error::parse(lineno + 1, "bad n"))?);
                    } else if let Some(v) = field.strip_prefix("k=") {
                        k = Some(v.parse().map_err(|_| Error::parse(lineno + 1, "bad k"))?);
                    }
                }
                continue;
            }
            let p: usize = line
                .parse()
                .map_err(|_| Error::parse(lineno + 1, format!("bad position {line:?}")))?;
            positions.push(p);
        }
        let n = n.ok_or_else(|| Error::parse(0, "missing n (no header and no text given)"))?;
        Self::new(n, k.unwrap_or(n), positions)
    }

    pub fn to_file_string(&self) -> String {
        let mut out = format!("# n={} k={}\n", self.n, self.k);
        for p in &self.positions {
            writeln!(out, "{p}").unwrap();
        }
        out
    }
}
