//! Random access to a text through an attractor.
//!
//! Level 0 cuts the text into blocks of length `s_1`. Every level `i >= 1`
//! keeps, for each attractor element `j`, the context `[j - s_i + 1, j + s_i]`
//! cut into `2τ` aligned and `2τ - 1` half-shifted blocks of length
//! `s_{i+1} = s_i / τ`. A block stores where an equal substring crosses some
//! element `j'`, which places it inside the next-level context of `j'`. The
//! last level keeps its contexts as packed symbols.

use std::io::{Read, Write};

use crate::attractor::Attractor;
use crate::error::{Error, Result};
use crate::text::Text;
use crate::validate::{require_attractor, CrossingFinder};

pub const DEFAULT_WORD_BITS: u32 = 64;
const MAGIC: &[u8; 4] = b"ATRX";
const VERSION: u16 = 1;
const FLAG_PRESENT: u8 = 1;
const FLAG_PARTIAL: u8 = 2;
const FLAG_FINAL: u8 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexParams {
    pub tau: usize,
    pub word_bits: u32,
}

impl IndexParams {
    pub fn new(tau: usize) -> Self {
        IndexParams {
            tau,
            word_bits: DEFAULT_WORD_BITS,
        }
    }
}

/// Fixed-width packed integers.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Packed {
    width: u32,
    len: usize,
    words: Vec<u64>,
}

impl Packed {
    fn new(width: u32) -> Self {
        Packed {
            width,
            len: 0,
            words: Vec::new(),
        }
    }

    fn bits(&self) -> usize {
        self.len * self.width as usize
    }

    fn push(&mut self, v: u32) {
        let bit = self.bits();
        let (w, o) = (bit / 64, bit % 64);
        if w == self.words.len() {
            self.words.push(0);
        }
        self.words[w] |= (v as u64) << o;
        if o + self.width as usize > 64 {
            self.words.push((v as u64) >> (64 - o));
        }
        self.len += 1;
    }

    fn get(&self, i: usize) -> u32 {
        let bit = i * self.width as usize;
        let (w, o) = (bit / 64, bit % 64);
        let mut v = self.words[w] >> o;
        if o + self.width as usize > 64 {
            v |= self.words[w + 1] << (64 - o);
        }
        (v & ((1u64 << self.width) - 1)) as u32
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Block {
    off: usize,
    /// index into `gamma_closed`
    elem: u32,
    partial: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttractorIndex {
    n: usize,
    sigma: u32,
    tau: usize,
    word_bits: u32,
    alpha: usize,
    gamma_closed: Vec<usize>,
    /// `s_1, …, s_{i*}`; empty for the degenerate index
    sizes: Vec<usize>,
    istar: usize,
    /// levels `0..i*`; level 0 is aligned blocks of length `s_1`
    levels: Vec<Vec<Option<Block>>>,
    /// per final context: (first position, offset into the store)
    finals: Vec<(usize, usize)>,
    store: Packed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceReport {
    pub levels: usize,
    pub blocks_per_level: Vec<usize>,
    pub pointer_words: usize,
    pub explicit_symbols: usize,
    pub explicit_words: usize,
    pub total_words: usize,
}

fn symbol_bits(sigma: u32) -> u32 {
    (u32::BITS - sigma.leading_zeros()).max(1)
}

/// `(α, s_1, i*)`, with `i* = 0` for the degenerate all-explicit index.
fn geometry(n: usize, gamma: usize, sigma: u32, params: IndexParams) -> (usize, usize, usize) {
    let tau = params.tau;
    let ratio = n as f64 / gamma as f64;
    let log_tau = if ratio > 1.0 {
        ratio.ln() / (tau as f64).ln()
    } else {
        0.0
    };
    let alpha =
        ((params.word_bits as f64 * log_tau / symbol_bits(sigma) as f64).ceil() as usize).max(1);
    let mut s1 = 1;
    while s1 < n.div_ceil(gamma) {
        s1 *= tau;
    }
    if n <= 2 * alpha || s1 < 2 * alpha {
        return (alpha, s1, 0);
    }
    let mut istar = 1;
    let mut s = s1 / tau;
    while s >= 2 * alpha {
        istar += 1;
        s /= tau;
    }
    (alpha, s1, istar)
}

/// Builds the index with the default word width.
pub fn build_index(text: &Text, gamma: &Attractor, tau: usize) -> Result<AttractorIndex> {
    build_index_with(text, gamma, IndexParams::new(tau))
}

pub fn build_index_with(
    text: &Text,
    gamma: &Attractor,
    params: IndexParams,
) -> Result<AttractorIndex> {
    if params.tau < 2 {
        return Err(Error::BadInstance(format!(
            "tau must be >= 2, got {}",
            params.tau
        )));
    }
    if params.word_bits == 0 {
        return Err(Error::BadInstance("word width must be positive".into()));
    }
    require_attractor(text, gamma, text.len())?;
    let n = text.len();
    let sigma = text.sigma();
    let closed = gamma.equally_spaced_closure().into_positions();
    let (alpha, s1, istar) = geometry(n, closed.len(), sigma, params);
    let mut index = AttractorIndex {
        n,
        sigma,
        tau: params.tau,
        word_bits: params.word_bits,
        alpha,
        gamma_closed: closed,
        sizes: Vec::new(),
        istar,
        levels: Vec::new(),
        finals: Vec::new(),
        store: Packed::new(symbol_bits(sigma)),
    };
    if istar == 0 {
        index.finals.push((1, 0));
        for &c in text.symbols() {
            index.store.push(c);
        }
        return Ok(index);
    }
    index.sizes = std::iter::successors(Some(s1), |s| Some(s / params.tau))
        .take(istar)
        .collect();
    let finder = CrossingFinder::new(text, &index.gamma_closed)?;
    let pointer = |start: isize, len: usize| -> Result<Option<Block>> {
        let lo = start.max(1) as usize;
        let hi = (start + len as isize - 1).min(n as isize);
        if hi < lo as isize {
            return Ok(None);
        }
        let hi = hi as usize;
        let (p, off) = finder.find(lo, hi + 1 - lo).ok_or_else(|| {
            Error::Internal(format!("block [{lo}, {hi}] has no crossing occurrence"))
        })?;
        let elem = index
            .gamma_closed
            .binary_search(&(p + off))
            .expect("crossing position is an element");
        if text.slice(p, hi + 1 - lo) != text.slice(lo, hi + 1 - lo) {
            return Err(Error::Internal(format!(
                "pointer for block [{lo}, {hi}] does not match"
            )));
        }
        Ok(Some(Block {
            off,
            elem: elem as u32,
            partial: hi + 1 - lo < len,
        }))
    };

    let level0: Vec<Option<Block>> = (0..n.div_ceil(s1))
        .map(|b| pointer((b * s1 + 1) as isize, s1))
        .collect::<Result<_>>()?;
    index.levels.push(level0);
    for i in 1..istar {
        let (s, sub) = (index.sizes[i - 1], index.sizes[i]);
        let half = sub / 2;
        let mut level = Vec::with_capacity(index.gamma_closed.len() * (4 * params.tau - 1));
        for &j in &index.gamma_closed {
            let ctx = j as isize - s as isize + 1;
            for k in 0..2 * params.tau {
                level.push(pointer(ctx + (k * sub) as isize, sub)?);
            }
            for k in 0..2 * params.tau - 1 {
                level.push(pointer(ctx + (half + k * sub) as isize, sub)?);
            }
        }
        index.levels.push(level);
    }
    let last = index.sizes[istar - 1];
    for &j in &index.gamma_closed {
        let lo = (j + 1).saturating_sub(last).max(1);
        let hi = (j + last).min(n);
        index.finals.push((lo, index.store.len));
        for p in lo..=hi {
            index.store.push(text.at(p));
        }
    }
    Ok(index)
}

impl AttractorIndex {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tau(&self) -> usize {
        self.tau
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    /// i*, the number of pointers every unit query follows.
    pub fn final_level(&self) -> usize {
        self.istar
    }

    pub fn is_degenerate(&self) -> bool {
        self.istar == 0
    }

    pub fn gamma_closed(&self) -> &[usize] {
        &self.gamma_closed
    }

    /// `T[i..i+l-1]`.
    pub fn extract(&self, i: usize, l: usize) -> Result<Vec<u32>> {
        let mut out = Vec::with_capacity(l);
        self.extract_into(i, l, &mut out)?;
        Ok(out)
    }

    pub fn extract_into(&self, i: usize, l: usize, out: &mut Vec<u32>) -> Result<()> {
        if i == 0 || i + l > self.n + 1 {
            return Err(Error::BadQuery {
                pos: i,
                len: l,
                n: self.n,
            });
        }
        let end = i + l - 1;
        let mut x = i;
        while x <= end {
            let mut unit_end = (x + self.alpha - 1).min(end);
            if let Some(&s1) = self.sizes.first() {
                unit_end = unit_end.min((x - 1) / s1 * s1 + s1);
            }
            self.unit(x, unit_end + 1 - x, out)?;
            x = unit_end + 1;
        }
        Ok(())
    }

    /// Extracts one unit lying inside a level-0 block; returns the number of
    /// pointers followed.
    fn unit(&self, x: usize, len: usize, out: &mut Vec<u32>) -> Result<usize> {
        let corrupt = || Error::Format("index pointer leads outside the text".into());
        if self.istar == 0 {
            for p in x..x + len {
                out.push(self.store.get(p - 1));
            }
            return Ok(0);
        }
        let s1 = self.sizes[0];
        let b = (x - 1) / s1;
        let block = self.levels[0][b].ok_or_else(corrupt)?;
        let mut x = self.follow(block, b * s1 + 1, x).ok_or_else(corrupt)?;
        let mut elem = block.elem as usize;
        let mut hops = 1;
        for i in 1..self.istar {
            let (sub, half) = (self.sizes[i], self.sizes[i] / 2);
            let ctx = self.gamma_closed[elem] as isize - self.sizes[i - 1] as isize + 1;
            let rel = (x as isize - ctx) as usize;
            let k = rel / sub;
            let (slot, start) = if rel + len <= (k + 1) * sub {
                (k, ctx + (k * sub) as isize)
            } else {
                let k = rel.checked_sub(half).ok_or_else(corrupt)? / sub;
                (2 * self.tau + k, ctx + (half + k * sub) as isize)
            };
            let row = elem * (4 * self.tau - 1) + slot;
            let block = self.levels[i]
                .get(row)
                .copied()
                .flatten()
                .ok_or_else(corrupt)?;
            x = self
                .follow(block, start.max(1) as usize, x)
                .ok_or_else(corrupt)?;
            elem = block.elem as usize;
            hops += 1;
        }
        let (lo, at) = self.finals[elem];
        let last = self.sizes[self.istar - 1];
        let hi = (self.gamma_closed[elem] + last).min(self.n);
        if x < lo || x + len - 1 > hi {
            return Err(corrupt());
        }
        for p in x..x + len {
            out.push(self.store.get(at + p - lo));
        }
        Ok(hops)
    }

    fn follow(&self, block: Block, content_start: usize, x: usize) -> Option<usize> {
        let j = *self.gamma_closed.get(block.elem as usize)?;
        let y = (j + x).checked_sub(block.off + content_start)?;
        (y >= 1 && y <= self.n).then_some(y)
    }

    pub fn space_report(&self) -> SpaceReport {
        let blocks_per_level: Vec<usize> = self
            .levels
            .iter()
            .map(|l| l.iter().flatten().count())
            .collect();
        let pointer_words = 2 * blocks_per_level.iter().sum::<usize>();
        let explicit_words = self.store.bits().div_ceil(self.word_bits as usize);
        SpaceReport {
            levels: self.istar,
            blocks_per_level,
            pointer_words,
            explicit_symbols: self.store.len,
            explicit_words,
            total_words: pointer_words + explicit_words,
        }
    }

    pub fn write_to(&self, w: &mut impl Write) -> std::io::Result<()> {
        w.write_all(MAGIC)?;
        w.write_all(&VERSION.to_le_bytes())?;
        w.write_all(&(self.n as u64).to_le_bytes())?;
        w.write_all(&self.sigma.to_le_bytes())?;
        w.write_all(&(self.tau as u32).to_le_bytes())?;
        w.write_all(&(self.gamma_closed.len() as u64).to_le_bytes())?;
        w.write_all(&(self.istar as u32).to_le_bytes())?;
        w.write_all(&self.word_bits.to_le_bytes())?;
        for &g in &self.gamma_closed {
            w.write_all(&(g as u64).to_le_bytes())?;
        }
        let entry = |w: &mut dyn Write, flags: u8, a: usize, b: usize| -> std::io::Result<()> {
            w.write_all(&[flags])?;
            w.write_all(&(a as u64).to_le_bytes())?;
            w.write_all(&(b as u64).to_le_bytes())
        };
        for level in &self.levels {
            w.write_all(&(level.len() as u64).to_le_bytes())?;
            for slot in level {
                match slot {
                    Some(b) => {
                        let flags = FLAG_PRESENT | if b.partial { FLAG_PARTIAL } else { 0 };
                        entry(w, flags, b.off, self.gamma_closed[b.elem as usize])?
                    }
                    None => entry(w, 0, 0, 0)?,
                }
            }
        }
        w.write_all(&(self.finals.len() as u64).to_le_bytes())?;
        for (t, &(lo, at)) in self.finals.iter().enumerate() {
            let full = match self.sizes.last() {
                Some(&s) => self.gamma_closed[t] >= s && self.gamma_closed[t] + s <= self.n,
                None => true,
            };
            entry(
                w,
                FLAG_PRESENT | FLAG_FINAL | if full { 0 } else { FLAG_PARTIAL },
                lo,
                at,
            )?;
        }
        let bits = self.store.bits();
        w.write_all(&(bits as u64).to_le_bytes())?;
        let bytes: Vec<u8> = self
            .store
            .words
            .iter()
            .flat_map(|x| x.to_le_bytes())
            .take(bits.div_ceil(8))
            .collect();
        w.write_all(&bytes)
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut v = Vec::new();
        self.write_to(&mut v)
            .expect("writing to a vector cannot fail");
        v
    }

    pub fn read_from(r: &mut impl Read) -> Result<Self> {
        let mut bytes = Vec::new();
        r.read_to_end(&mut bytes)
            .map_err(|e| Error::Format(e.to_string()))?;
        Self::from_bytes(&bytes)
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let mut cur = Cursor { bytes, at: 0 };
        if cur.take(4)? != MAGIC {
            return Err(Error::Format("bad magic".into()));
        }
        let version = u16::from_le_bytes(cur.take(2)?.try_into().unwrap());
        if version != VERSION {
            return Err(Error::Format(format!("unsupported version {version}")));
        }
        let n = cur.u64()? as usize;
        let sigma = cur.u32()?;
        let tau = cur.u32()? as usize;
        let gamma = cur.u64()? as usize;
        let istar = cur.u32()? as usize;
        let word_bits = cur.u32()?;
        if n == 0 || tau < 2 || word_bits == 0 || gamma == 0 || gamma > n {
            return Err(Error::Format("bad header".into()));
        }
        let gamma_closed: Vec<usize> = (0..gamma)
            .map(|_| cur.u64().map(|g| g as usize))
            .collect::<Result<_>>()?;
        if gamma_closed.windows(2).any(|w| w[0] >= w[1])
            || gamma_closed[0] == 0
            || gamma_closed[gamma - 1] > n
        {
            return Err(Error::Format(
                "attractor positions not increasing within [1..n]".into(),
            ));
        }
        let params = IndexParams { tau, word_bits };
        let (alpha, s1, expected) = geometry(n, gamma, sigma, params);
        if expected != istar {
            return Err(Error::Format(format!(
                "final level {istar} does not match the geometry ({expected})"
            )));
        }
        let sizes: Vec<usize> = std::iter::successors(Some(s1), |s| Some(s / tau))
            .take(istar)
            .collect();
        let mut levels = Vec::with_capacity(istar);
        #[allow(clippy::needless_range_loop)]
        for i in 0..istar {
            let count = cur.u64()? as usize;
            let want = if i == 0 {
                n.div_ceil(s1)
            } else {
                gamma * (4 * tau - 1)
            };
            if count != want {
                return Err(Error::Format(format!(
                    "level {i} has {count} blocks, expected {want}"
                )));
            }
            // blocks at level i have length s_{i+1}
            let bound = sizes[i];
            let mut level = Vec::with_capacity(count);
            for _ in 0..count {
                let (flags, off, j) = (cur.take(1)?[0], cur.u64()? as usize, cur.u64()? as usize);
                if flags & FLAG_PRESENT == 0 {
                    level.push(None);
                    continue;
                }
                let elem = gamma_closed
                    .binary_search(&j)
                    .map_err(|_| Error::Format(format!("{j} is not an element")))?;
                if off >= bound {
                    return Err(Error::Format(format!("offset {off} exceeds block length")));
                }
                level.push(Some(Block {
                    off,
                    elem: elem as u32,
                    partial: flags & FLAG_PARTIAL != 0,
                }));
            }
            levels.push(level);
        }
        let count = cur.u64()? as usize;
        let want = if istar == 0 { 1 } else { gamma };
        if count != want {
            return Err(Error::Format(format!(
                "{count} final contexts, expected {want}"
            )));
        }
        let finals: Vec<(usize, usize)> = (0..count)
            .map(|_| {
                cur.take(1)?;
                Ok((cur.u64()? as usize, cur.u64()? as usize))
            })
            .collect::<Result<_>>()?;
        let width = symbol_bits(sigma);
        let bits = cur.u64()? as usize;
        if !bits.is_multiple_of(width as usize) {
            return Err(Error::Format(
                "store length is not a whole number of symbols".into(),
            ));
        }
        let raw = cur.take(bits.div_ceil(8))?;
        let words: Vec<u64> = raw
            .chunks(8)
            .map(|c| {
                let mut b = [0u8; 8];
                b[..c.len()].copy_from_slice(c);
                u64::from_le_bytes(b)
            })
            .collect();
        let store = Packed {
            width,
            len: bits / width as usize,
            words,
        };
        // every final context must lie inside the store
        let last = sizes.last().copied();
        for (t, &(lo, at)) in finals.iter().enumerate() {
            let hi = match last {
                Some(s) => (gamma_closed[t] + s).min(n),
                None => n,
            };
            if lo == 0 || lo > hi || at + (hi + 1 - lo) > store.len {
                return Err(Error::Format("final context outside the store".into()));
            }
        }
        if cur.at != bytes.len() {
            return Err(Error::Format("trailing bytes".into()));
        }
        Ok(AttractorIndex {
            n,
            sigma,
            tau,
            word_bits,
            alpha,
            gamma_closed,
            sizes,
            istar,
            levels,
            finals,
            store,
        })
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    at: usize,
}

impl<'a> Cursor<'a> {
    fn take(&mut self, k: usize) -> Result<&'a [u8]> {
        let s = self
            .bytes
            .get(self.at..self.at + k)
            .ok_or_else(|| Error::Format("truncated index".into()))?;
        self.at += k;
        Ok(s)
    }

    fn u64(&mut self) -> Result<u64> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }

    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compress::lz77_parse;
    use crate::induce::{attractor_from_lz77, attractor_from_rlbwt};
    use proptest::prelude::*;

    fn small(tau: usize) -> IndexParams {
        IndexParams { tau, word_bits: 1 }
    }

    fn exhaustive(text: &Text, index: &AttractorIndex) {
        let n = text.len();
        for i in 1..=n {
            for l in 0..=n + 1 - i {
                assert_eq!(index.extract(i, l).unwrap(), text.slice(i, l), "({i}, {l})");
            }
        }
    }

    fn hops_all(index: &AttractorIndex) {
        for x in 1..=index.n() {
            let mut out = Vec::new();
            assert_eq!(index.unit(x, 1, &mut out).unwrap(), index.final_level());
        }
    }

    #[test]
    fn packed_round_trip() {
        for width in [1, 3, 7, 17, 32] {
            let mut p = Packed::new(width);
            let vals: Vec<u32> = (0..300u64)
                .map(|i| ((i * 2654435761) % (1u64 << width)) as u32)
                .collect();
            for &v in &vals {
                p.push(v);
            }
            assert!(vals.iter().enumerate().all(|(i, &v)| p.get(i) == v));
        }
    }

    #[test]
    fn example_two() {
        let t = Text::from_ascii("CDABCCDABCCA");
        let g = Attractor::full(12, [4, 7, 11, 12]).unwrap();
        let idx = build_index(&t, &g, 2).unwrap();
        assert!(idx.is_degenerate());
        assert_eq!(
            idx.extract(6, 5).unwrap(),
            Text::from_ascii("CDABC").symbols()
        );
        exhaustive(&t, &idx);
        let deep = build_index_with(&t, &g, small(2)).unwrap();
        assert!(deep.final_level() >= 1);
        assert_eq!(
            deep.extract(6, 5).unwrap(),
            Text::from_ascii("CDABC").symbols()
        );
        exhaustive(&t, &deep);
        hops_all(&deep);
    }

    #[test]
    fn degenerate_report() {
        let t = Text::from_ascii("abcab");
        let idx = build_index(&t, &Attractor::everything(5), 2).unwrap();
        let r = idx.space_report();
        assert_eq!(r.pointer_words, 0);
        assert_eq!(r.explicit_symbols, 5);
        assert_eq!(idx.extract(1, 5).unwrap(), t.symbols());
    }

    #[test]
    fn unary_levels() {
        let t = Text::from_symbols(vec![1; 64]).unwrap();
        let g = Attractor::full(64, [1]).unwrap();
        for tau in [2, 3, 4, 8] {
            let idx = build_index_with(&t, &g, small(tau)).unwrap();
            let bound = (64f64 / idx.gamma_closed().len() as f64)
                .log(tau as f64)
                .ceil() as usize
                + 1;
            assert!(idx.final_level() <= bound);
            exhaustive(&t, &idx);
            hops_all(&idx);
            assert_eq!(AttractorIndex::from_bytes(&idx.to_bytes()).unwrap(), idx);
        }
    }

    #[test]
    fn rejects_bad_input() {
        let t = Text::from_ascii("CDABCCDABCCA");
        let bad = Attractor::full(12, [7, 11, 12]).unwrap();
        assert!(matches!(
            build_index(&t, &bad, 2),
            Err(Error::InvalidAttractor(_))
        ));
        let g = Attractor::everything(12);
        assert!(build_index(&t, &g, 1).is_err());
        let idx = build_index(&t, &g, 2).unwrap();
        assert!(matches!(idx.extract(0, 1), Err(Error::BadQuery { .. })));
        assert!(matches!(idx.extract(12, 2), Err(Error::BadQuery { .. })));
        assert!(idx.extract(13, 0).unwrap().is_empty());
    }

    #[test]
    fn serialization_round_trip_and_corruption() {
        let t = Text::from_ascii("abracadabra-abracadabra-cadabra");
        let g = attractor_from_lz77(&lz77_parse(&t)).unwrap();
        let idx = build_index_with(&t, &g, small(3)).unwrap();
        let bytes = idx.to_bytes();
        let back = AttractorIndex::from_bytes(&bytes).unwrap();
        assert_eq!(back, idx);
        exhaustive(&t, &back);
        for cut in [0, 5, 30, bytes.len() - 1] {
            assert!(AttractorIndex::from_bytes(&bytes[..cut]).is_err());
        }
        let mut wrong = bytes.clone();
        wrong[0] = b'X';
        assert!(AttractorIndex::from_bytes(&wrong).is_err());
        // arbitrary byte flips must never panic
        for at in 0..bytes.len() {
            let mut b = bytes.clone();
            b[at] ^= 0x5a;
            if let Ok(ix) = AttractorIndex::from_bytes(&b) {
                let _ = ix.extract(1, ix.n());
            }
        }
    }

    #[test]
    fn rlbwt_attractor_without_sentinel() {
        let t = Text::from_ascii("mississippimississippi");
        let g = attractor_from_rlbwt(&t.with_sentinel())
            .unwrap()
            .drop_sentinel_position()
            .unwrap();
        for tau in [2, 3, 8] {
            let idx = build_index_with(&t, &g, small(tau)).unwrap();
            exhaustive(&t, &idx);
        }
    }

    proptest! {
        #[test]
        fn extraction_matches_slices(s in prop::collection::vec(1u32..4, 1..80), tau in 2usize..5, w in 1u32..4) {
            let t = Text::from_symbols(s).unwrap();
            let g = attractor_from_lz77(&lz77_parse(&t)).unwrap();
            let idx = build_index_with(&t, &g, IndexParams { tau, word_bits: w }).unwrap();
            let n = t.len();
            for i in 1..=n {
                for l in [1, 2, 5, n + 1 - i] {
                    if i + l <= n + 1 {
                        prop_assert_eq!(idx.extract(i, l).unwrap(), t.slice(i, l).to_vec());
                    }
                }
            }
            prop_assert_eq!(AttractorIndex::from_bytes(&idx.to_bytes()).unwrap(), idx);
        }
    }
}
