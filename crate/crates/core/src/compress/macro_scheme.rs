//! Macro schemes: copy and literal directives, possibly bidirectional.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::text::Text;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Directive {
    /// `T[dst.0..dst.1] <- T[src.0..src.1]`, inclusive 1-based intervals of equal length.
    Copy {
        dst: (usize, usize),
        src: (usize, usize),
    },
    /// `T[pos] <- symbol`.
    Literal { pos: usize, symbol: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacroScheme {
    pub n: usize,
    pub directives: Vec<Directive>,
}

impl MacroScheme {
    /// b, the number of directives.
    pub fn b(&self) -> usize {
        self.directives.len()
    }

    fn check_shape(&self) -> Result<()> {
        let in_range = |a: usize, b: usize| a >= 1 && a <= b && b <= self.n;
        for d in &self.directives {
            match *d {
                Directive::Copy { dst, src } => {
                    if !in_range(dst.0, dst.1) || !in_range(src.0, src.1) {
                        return Err(Error::MalformedScheme(format!(
                            "interval out of range in {d:?}"
                        )));
                    }
                    if dst.1 - dst.0 != src.1 - src.0 {
                        return Err(Error::MalformedScheme(format!("unequal lengths in {d:?}")));
                    }
                }
                Directive::Literal { pos, .. } => {
                    if pos == 0 || pos > self.n {
                        return Err(Error::PositionOutOfRange { pos, n: self.n });
                    }
                }
            }
        }
        Ok(())
    }

    /// `C <i> <j> <i'> <j'>` and `L <i> <symbol>` records. The target length
    /// is the largest destination position unless `n` is given.
    pub fn parse(input: &str, n: Option<usize>) -> Result<Self> {
        let mut directives = Vec::new();
        for (lineno, line) in input.lines().enumerate() {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let nums: Option<Vec<usize>> = fields.iter().skip(1).map(|f| f.parse().ok()).collect();
            let bad = || Error::parse(lineno + 1, format!("bad directive {line:?}"));
            match (fields.first(), nums) {
                (None, _) => continue,
                (Some(&"C"), Some(v)) if v.len() == 4 => directives.push(Directive::Copy {
                    dst: (v[0], v[1]),
                    src: (v[2], v[3]),
                }),
                (Some(&"L"), Some(v)) if v.len() == 2 => directives.push(Directive::Literal {
                    pos: v[0],
                    symbol: v[1] as u32,
                }),
                _ => return Err(bad()),
            }
        }
        let n = n.unwrap_or_else(|| {
            directives
                .iter()
                .map(|d| match *d {
                    Directive::Copy { dst, .. } => dst.1,
                    Directive::Literal { pos, .. } => pos,
                })
                .max()
                .unwrap_or(0)
        });
        Ok(MacroScheme { n, directives })
    }

    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        for d in &self.directives {
            match d {
                Directive::Copy { dst, src } => {
                    writeln!(out, "C {} {} {} {}", dst.0, dst.1, src.0, src.1).unwrap()
                }
                Directive::Literal { pos, symbol } => writeln!(out, "L {pos} {symbol}").unwrap(),
            }
        }
        out
    }
}

/// Decodes by worklist propagation at single-position granularity.
///
/// Each copy directive contributes edges `src + o -> dst + o`; literals seed
/// the worklist. Decoding fails if some position stays unassigned (the
/// smallest such position is reported) or receives two different symbols.
pub fn macro_decode(scheme: &MacroScheme) -> Result<Text> {
    scheme.check_shape()?;
    let n = scheme.n;
    if n == 0 {
        return Err(Error::EmptyText);
    }
    // CSR adjacency: source position -> destination positions
    let mut degree = vec![0usize; n + 2];
    for d in &scheme.directives {
        if let Directive::Copy { dst, src } = *d {
            for o in 0..=dst.1 - dst.0 {
                degree[src.0 + o + 1] += 1;
            }
        }
    }
    for p in 1..degree.len() {
        degree[p] += degree[p - 1];
    }
    let mut targets = vec![0usize; degree[n + 1]];
    let mut fill = degree.clone();
    for d in &scheme.directives {
        if let Directive::Copy { dst, src } = *d {
            for o in 0..=dst.1 - dst.0 {
                targets[fill[src.0 + o]] = dst.0 + o;
                fill[src.0 + o] += 1;
            }
        }
    }

    fn assign(
        value: &mut [Option<u32>],
        queue: &mut VecDeque<usize>,
        pos: usize,
        c: u32,
    ) -> Result<()> {
        match value[pos] {
            Some(old) if old != c => Err(Error::ConflictingAssignment { pos }),
            Some(_) => Ok(()),
            None => {
                value[pos] = Some(c);
                queue.push_back(pos);
                Ok(())
            }
        }
    }
    let mut value: Vec<Option<u32>> = vec![None; n + 1];
    let mut queue = VecDeque::new();
    for d in &scheme.directives {
        if let Directive::Literal { pos, symbol } = *d {
            assign(&mut value, &mut queue, pos, symbol)?;
        }
    }
    while let Some(p) = queue.pop_front() {
        let c = value[p].unwrap();
        for &q in &targets[degree[p]..degree[p + 1]] {
            assign(&mut value, &mut queue, q, c)?;
        }
    }
    let mut out = Vec::with_capacity(n);
    for (pos, v) in value.iter().enumerate().skip(1) {
        match v {
            Some(c) => out.push(*c),
            None => return Err(Error::Undecodable { pos }),
        }
    }
    Text::from_symbols(out)
}
