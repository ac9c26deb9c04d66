//! Texts over a dense integer alphabet.
//!
//! Symbols live in `[1..σ]`. A text may carry a trailing sentinel, encoded as
//! symbol `0`, which is then the unique smallest symbol. Positions exposed by
//! the public API are 1-based.

use crate::error::{Error, Result};

/// Code used for the end-of-text sentinel.
pub const SENTINEL: u32 = 0;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Text {
    symbols: Vec<u32>,
    sigma: u32,
    has_sentinel: bool,
}

impl std::fmt::Debug for Text {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Text")
            .field("n", &self.len())
            .field("sigma", &self.sigma)
            .field("has_sentinel", &self.has_sentinel)
            .field("symbols", &self.symbols)
            .finish()
    }
}

impl Text {
    /// Builds a text over `[1..sigma]`, optionally terminated by [`SENTINEL`].
    pub fn new(symbols: Vec<u32>, sigma: u32) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::EmptyText);
        }
        let has_sentinel = symbols.contains(&SENTINEL);
        if has_sentinel {
            let first = symbols.iter().position(|&c| c == SENTINEL).unwrap();
            if first != symbols.len() - 1 {
                return Err(Error::BadSentinel);
            }
        }
        for (i, &c) in symbols.iter().enumerate() {
            if c != SENTINEL && c > sigma {
                return Err(Error::SymbolOutOfRange {
                    pos: i + 1,
                    symbol: c,
                    sigma,
                });
            }
        }
        Ok(Text {
            symbols,
            sigma,
            has_sentinel,
        })
    }

    /// Builds a text whose alphabet size is the largest symbol present.
    pub fn from_symbols(symbols: Vec<u32>) -> Result<Self> {
        let sigma = symbols.iter().copied().max().unwrap_or(0).max(1);
        Self::new(symbols, sigma)
    }

    /// Remaps raw bytes onto the dense alphabet `[1..σ]`, preserving byte order.
    pub fn from_bytes(bytes: &[u8]) -> Result<(Self, Alphabet)> {
        let alphabet = Alphabet::of(bytes);
        let symbols = bytes.iter().map(|&b| alphabet.code(b).unwrap()).collect();
        let text = Text::new(symbols, alphabet.len().max(1) as u32)?;
        Ok((text, alphabet))
    }

    /// Convenience for tests and examples: dense remap of an ASCII string.
    pub fn from_ascii(s: &str) -> Self {
        Self::from_bytes(s.as_bytes()).expect("non-empty string").0
    }

    /// Parses the integer-token format: one decimal token per line, blank lines ignored.
    pub fn parse_tokens(input: &str) -> Result<Self> {
        let mut symbols = Vec::new();
        for (lineno, line) in input.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let c: u32 = line
                .parse()
                .map_err(|_| Error::parse(lineno + 1, format!("bad token {line:?}")))?;
            symbols.push(c);
        }
        Self::from_symbols(symbols)
    }

    pub fn to_tokens(&self) -> String {
        let mut out = String::with_capacity(self.len() * 3);
        for c in &self.symbols {
            out.push_str(&c.to_string());
            out.push('\n');
        }
        out
    }

    /// Returns a copy terminated by the sentinel (no-op if already terminated).
    pub fn with_sentinel(&self) -> Text {
        if self.has_sentinel {
            return self.clone();
        }
        let mut symbols = self.symbols.clone();
        symbols.push(SENTINEL);
        Text {
            symbols,
            sigma: self.sigma,
            has_sentinel: true,
        }
    }

    /// Drops the sentinel if present.
    pub fn without_sentinel(&self) -> Result<Text> {
        if !self.has_sentinel {
            return Ok(self.clone());
        }
        let symbols = self.symbols[..self.len() - 1].to_vec();
        Text::new(symbols, self.sigma)
    }

    /// Concatenation of the text with itself (sentinel dropped).
    pub fn squared(&self) -> Text {
        let body = if self.has_sentinel {
            &self.symbols[..self.len() - 1]
        } else {
            &self.symbols[..]
        };
        let mut symbols = Vec::with_capacity(2 * body.len());
        symbols.extend_from_slice(body);
        symbols.extend_from_slice(body);
        Text {
            symbols,
            sigma: self.sigma,
            has_sentinel: false,
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    #[inline]
    pub fn sigma(&self) -> u32 {
        self.sigma
    }

    #[inline]
    pub fn has_sentinel(&self) -> bool {
        self.has_sentinel
    }

    /// 0-based view of the symbols.
    #[inline]
    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    /// Symbol at 1-based position `pos`.
    #[inline]
    pub fn at(&self, pos: usize) -> u32 {
        self.symbols[pos - 1]
    }

    /// `T[i..i+len-1]`, 1-based.
    pub fn slice(&self, i: usize, len: usize) -> &[u32] {
        &self.symbols[i - 1..i - 1 + len]
    }

    /// Number of distinct symbols actually occurring (sentinel included).
    pub fn distinct_symbols(&self) -> usize {
        let mut seen: Vec<u32> = self.symbols.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }
}

/// Byte alphabet used when a text is read from raw bytes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    bytes: Vec<u8>,
}

impl Alphabet {
    pub fn of(data: &[u8]) -> Self {
        let mut present = [false; 256];
        for &b in data {
            present[b as usize] = true;
        }
        let bytes = (0..=255u8).filter(|&b| present[b as usize]).collect();
        Alphabet { bytes }
    }

    pub fn from_bytes(bytes: Vec<u8>) -> Self {
        Alphabet { bytes }
    }

    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bytes.is_empty()
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn code(&self, byte: u8) -> Option<u32> {
        self.bytes.binary_search(&byte).ok().map(|i| i as u32 + 1)
    }

    pub fn byte(&self, code: u32) -> Option<u8> {
        if code == 0 {
            return None;
        }
        self.bytes.get(code as usize - 1).copied()
    }

    pub fn decode(&self, symbols: &[u32]) -> Vec<u8> {
        symbols
            .iter()
            .map(|&c| self.byte(c).unwrap_or(b'$'))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dense_remap_preserves_order() {
        let (t, a) = Text::from_bytes(b"banana").unwrap();
        assert_eq!(t.symbols(), &[2, 1, 3, 1, 3, 1]);
        assert_eq!(t.sigma(), 3);
        assert_eq!(a.decode(t.symbols()), b"banana");
    }

    #[test]
    fn sentinel_rules() {
        assert!(Text::new(vec![1, 0, 1], 1).is_err());
        let t = Text::new(vec![1, 2, 0], 2).unwrap();
        assert!(t.has_sentinel());
        assert_eq!(t.with_sentinel(), t);
        assert_eq!(t.without_sentinel().unwrap().symbols(), &[1, 2]);
        assert_eq!(Text::new(vec![], 1), Err(Error::EmptyText));
        assert!(matches!(
            Text::new(vec![3], 2),
            Err(Error::SymbolOutOfRange { .. })
        ));
    }

    #[test]
    fn tokens_round_trip() {
        let t = Text::from_symbols(vec![5, 1, 70000, 2]).unwrap();
        assert_eq!(Text::parse_tokens(&t.to_tokens()).unwrap(), t);
        assert!(Text::parse_tokens("1\nx\n").is_err());
    }

    #[test]
    fn squared_drops_sentinel() {
        let t = Text::from_ascii("ab").with_sentinel();
        assert_eq!(t.squared().symbols(), &[1, 2, 1, 2]);
    }
}
