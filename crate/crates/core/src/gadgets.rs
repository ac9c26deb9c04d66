//! Hardness gadgets: the string `T_C` built from a k-set-cover instance, the
//! attractors induced by its covers, and the vertex-cover adapter.
//!
//! `T_C = P_1 ⋯ P_u · R_1 S_1 ⋯ R_m S_m`. A cover `C'` yields a k-attractor
//! of size `4u(k−1) + |C'| + 6t − 3m`, where `t` is the total set size.

use std::fmt::Write as _;

use crate::approx::SetCoverInstance;
use crate::attractor::Attractor;
use crate::error::{Error, Result};
use crate::text::Text;

/// Named symbols of the gadget alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GadgetSymbol {
    /// `x_i^{(j)}`
    X(u32, u32),
    /// `$_{i,j}`
    Dollar(u32, u32),
    /// `$'_{i,j}`
    Prime(u32, u32),
    /// `$''_{i,j}`
    DoublePrime(u32, u32),
    /// `$'''_{i,j}`
    TriplePrime(u32, u32),
    /// `$^{(4)}_{i,j}`
    Fourth(u32, u32),
    Hash,
}

impl std::fmt::Display for GadgetSymbol {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            GadgetSymbol::X(i, j) => write!(f, "x_{i}^({j})"),
            GadgetSymbol::Dollar(i, j) => write!(f, "$_{i},{j}"),
            GadgetSymbol::Prime(i, j) => write!(f, "$'_{i},{j}"),
            GadgetSymbol::DoublePrime(i, j) => write!(f, "$''_{i},{j}"),
            GadgetSymbol::TriplePrime(i, j) => write!(f, "$'''_{i},{j}"),
            GadgetSymbol::Fourth(i, j) => write!(f, "$^(4)_{i},{j}"),
            GadgetSymbol::Hash => write!(f, "#"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetString {
    pub text: Text,
    /// `symbol_table[c - 1]` is the symbol with code `c`
    pub symbol_table: Vec<GadgetSymbol>,
    pub k: usize,
    pub instance: SetCoverInstance,
    pub u: usize,
    pub m: usize,
    pub t: usize,
    pub t_squared: usize,
    gamma_p: Vec<usize>,
    gamma_r: Vec<usize>,
    /// per set, in instance order: (minimum set, nearly-universal set)
    gamma_s: Vec<(Vec<usize>, Vec<usize>)>,
    /// per set, the span of `S_i`
    s_spans: Vec<(usize, usize)>,
}

impl GadgetString {
    pub fn n(&self) -> usize {
        self.text.len()
    }

    pub fn name(&self, code: u32) -> Option<GadgetSymbol> {
        self.symbol_table
            .get((code as usize).checked_sub(1)?)
            .copied()
    }

    /// `4u(k−1) + p + 6t − 3m`.
    pub fn attractor_size_for(&self, cover_size: usize) -> usize {
        4 * self.u * (self.k - 1) + cover_size + 6 * self.t - 3 * self.m
    }

    /// The minimum set `Γ_{S,i}` of the `idx`-th set (0-based, instance order).
    pub fn minimum_s_positions(&self, idx: usize) -> &[usize] {
        &self.gamma_s[idx].0
    }

    /// `[first, last]` positions of `S_i` for the `idx`-th set.
    pub fn s_span(&self, idx: usize) -> (usize, usize) {
        self.s_spans[idx]
    }

    /// Lines `<code> <name>`.
    pub fn symbol_table_string(&self) -> String {
        let mut out = String::new();
        for (c, s) in self.symbol_table.iter().enumerate() {
            writeln!(out, "{} {s}", c + 1).unwrap();
        }
        out
    }
}

struct Emitter {
    out: Vec<GadgetSymbol>,
}

impl Emitter {
    /// Appends a symbol and returns its 1-based position.
    fn put(&mut self, s: GadgetSymbol) -> usize {
        self.out.push(s);
        self.out.len()
    }

    fn hashes(&mut self, k: usize) -> usize {
        for _ in 0..k - 1 {
            self.put(GadgetSymbol::Hash);
        }
        self.out.len()
    }

    /// One row of `P_i` (or `R_i`): `#^{k−1} a b_2⋯b_j c #^{k−1} a b_2⋯b_j a a c`.
    /// Records the four positions of the universal set.
    fn universal_row(
        &mut self,
        k: usize,
        a: GadgetSymbol,
        body: &[GadgetSymbol],
        c: GadgetSymbol,
        first_row: bool,
        rec: &mut Vec<usize>,
    ) {
        self.hashes(k);
        self.put(a);
        let mut last = 0;
        for &b in body {
            last = self.put(b);
        }
        rec.push(last);
        self.put(c);
        let before = self.hashes(k);
        let second = self.put(a);
        rec.push(if first_row { before } else { second });
        for &b in body {
            self.put(b);
        }
        rec.push(self.put(a));
        self.put(a);
        rec.push(self.put(c));
    }
}

/// Builds `T_C` for a k-set-cover instance with `k >= 3`.
pub fn build_tc(instance: &SetCoverInstance, k: usize) -> Result<GadgetString> {
    if k < 3 {
        return Err(Error::BadK { k, n: 0 });
    }
    let u = instance.universe_size as usize;
    for (id, set) in &instance.sets {
        if set.is_empty() {
            return Err(Error::BadInstance(format!("set {id} is empty")));
        }
        if set.len() > k {
            return Err(Error::BadInstance(format!(
                "set {id} has {} > k = {k} elements",
                set.len()
            )));
        }
        let mut s = set.clone();
        s.sort_unstable();
        if s.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::BadInstance(format!("set {id} repeats an element")));
        }
    }
    let sizes: Vec<usize> = instance.sets.iter().map(|s| s.1.len()).collect();
    let (m, t) = (sizes.len(), sizes.iter().sum::<usize>());
    let t_squared = sizes.iter().map(|n| n * n).sum();

    use GadgetSymbol::*;
    let mut table: Vec<GadgetSymbol> = Vec::new();
    for i in 1..=u as u32 {
        table.extend((1..=k as u32).map(|j| X(i, j)));
    }
    for (i, &ni) in (1u32..).zip(&sizes) {
        table.extend((1..=ni as u32 + 1).map(|j| Dollar(i, j)));
    }
    for i in 1..=u as u32 {
        table.extend((2..=k as u32).map(|j| Prime(i, j)));
    }
    for i in 1..=u as u32 {
        table.extend((2..=k as u32).map(|j| DoublePrime(i, j)));
    }
    for (i, &ni) in (1u32..).zip(&sizes) {
        table.extend((2..=ni as u32).map(|j| TriplePrime(i, j)));
    }
    for (i, &ni) in (1u32..).zip(&sizes) {
        table.extend((2..=ni as u32).map(|j| Fourth(i, j)));
    }
    table.push(Hash);

    let mut e = Emitter { out: Vec::new() };
    let mut gamma_p = Vec::new();
    for i in 1..=u as u32 {
        for j in 2..=k as u32 {
            let body: Vec<GadgetSymbol> = (2..=j).map(|l| X(i, l)).collect();
            e.universal_row(
                k,
                Prime(i, j),
                &body,
                DoublePrime(i, j),
                j == 2,
                &mut gamma_p,
            );
        }
    }
    let mut gamma_r = Vec::new();
    let mut gamma_s = Vec::new();
    let mut s_spans = Vec::new();
    for (i, (_, set)) in (1u32..).zip(&instance.sets) {
        let ni = set.len() as u32;
        for j in 2..=ni {
            let body: Vec<GadgetSymbol> = (2..=j).map(|l| Dollar(i, l)).collect();
            e.universal_row(
                k,
                TriplePrime(i, j),
                &body,
                Fourth(i, j),
                j == 2,
                &mut gamma_r,
            );
        }
        let first = e.out.len() + 1;
        let (mut minimum, mut nearly) = (Vec::new(), Vec::new());
        for (j, &c) in (1u32..).zip(set) {
            e.hashes(k);
            for l in 1..j {
                e.put(Dollar(i, l));
            }
            minimum.push(e.put(Dollar(i, j)));
            nearly.push(e.put(X(c, 1)));
            for l in 2..=k as u32 {
                e.put(X(c, l));
            }
            let trailing = e.put(Dollar(i, j));
            minimum.push(trailing);
            nearly.push(trailing);
        }
        e.hashes(k);
        nearly.push(e.put(Dollar(i, 1)));
        for l in 2..=ni {
            e.put(Dollar(i, l));
        }
        let last = e.put(Dollar(i, ni + 1));
        minimum.push(last);
        nearly.push(last);
        minimum.sort_unstable();
        nearly.sort_unstable();
        gamma_s.push((minimum, nearly));
        s_spans.push((first, last));
    }

    let code_of = |s: &GadgetSymbol| table.binary_search(s).map(|c| c as u32 + 1);
    // the table is sorted by construction: families in declaration order
    debug_assert!(table.windows(2).all(|w| w[0] < w[1]));
    let symbols: Vec<u32> = e
        .out
        .iter()
        .map(|s| code_of(s).expect("symbol in table"))
        .collect();
    let text = Text::new(symbols, table.len() as u32)?;
    Ok(GadgetString {
        text,
        symbol_table: table,
        k,
        instance: instance.clone(),
        u,
        m,
        t,
        t_squared,
        gamma_p,
        gamma_r,
        gamma_s,
        s_spans,
    })
}

/// `Γ_{C'}`: the universal sets of every `P_i` and `R_i`, the
/// nearly-universal set of `S_i` for sets in the cover and the minimum set
/// for the others.
pub fn known_attractor(gadget: &GadgetString, cover: &[u32]) -> Result<Attractor> {
    if let Some(e) = gadget.instance.uncovered_by(cover)? {
        return Err(Error::NotACover { element: e });
    }
    let mut positions: Vec<usize> = gadget
        .gamma_p
        .iter()
        .chain(&gadget.gamma_r)
        .copied()
        .collect();
    for ((id, _), (minimum, nearly)) in gadget.instance.sets.iter().zip(&gadget.gamma_s) {
        positions.extend(if cover.contains(id) { nearly } else { minimum });
    }
    Attractor::from_unsorted(gadget.n(), gadget.k, positions)
}

/// Set cover over the edges (numbered `1..=|E|` in input order) with one set
/// per vertex holding its incident edges. Vertices are `1..=vertices`.
pub fn vertex_cover_to_set_cover(
    vertices: usize,
    edges: &[(usize, usize)],
    k: usize,
) -> Result<SetCoverInstance> {
    let mut incident: Vec<Vec<u32>> = vec![Vec::new(); vertices + 1];
    let mut seen = std::collections::HashSet::new();
    for (e, &(a, b)) in (1u32..).zip(edges) {
        if a == 0 || b == 0 || a > vertices || b > vertices {
            return Err(Error::BadGraph(format!(
                "edge ({a}, {b}) has a vertex outside [1..{vertices}]"
            )));
        }
        if a == b {
            return Err(Error::BadGraph(format!("self loop at {a}")));
        }
        if !seen.insert((a.min(b), a.max(b))) {
            return Err(Error::BadGraph(format!("edge ({a}, {b}) repeated")));
        }
        incident[a].push(e);
        incident[b].push(e);
    }
    if let Some(v) = (1..=vertices).find(|&v| incident[v].is_empty()) {
        return Err(Error::BadGraph(format!("vertex {v} is isolated")));
    }
    if let Some(v) = (1..=vertices).find(|&v| incident[v].len() > k) {
        return Err(Error::BadGraph(format!(
            "vertex {v} has degree {} > {k}",
            incident[v].len()
        )));
    }
    let sets = (1..=vertices)
        .map(|v| (v as u32, std::mem::take(&mut incident[v])))
        .collect();
    SetCoverInstance::new(edges.len() as u32, sets, Some(k))
}
