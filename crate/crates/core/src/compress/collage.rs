//! Collage systems: terminal, pair, power and slice rules.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::text::Text;

pub type RuleId = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    Terminal(u32),
    Pair(RuleId, RuleId),
    /// `R` repeated `count >= 2` times.
    Power(RuleId, usize),
    /// `K[l..r]`, 1-based inclusive.
    Slice(RuleId, usize, usize),
}

impl Rule {
    fn children(&self) -> impl Iterator<Item = RuleId> {
        let (a, b) = match *self {
            Rule::Terminal(_) => (None, None),
            Rule::Pair(a, b) => (Some(a), Some(b)),
            Rule::Power(r, _) => (Some(r), None),
            Rule::Slice(k, _, _) => (Some(k), None),
        };
        a.into_iter().chain(b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CollageSystem {
    pub rules: BTreeMap<RuleId, Rule>,
    pub start: RuleId,
}

impl CollageSystem {
    pub fn new(start: RuleId) -> Self {
        CollageSystem {
            rules: BTreeMap::new(),
            start,
        }
    }

    /// c, the number of rules.
    pub fn c(&self) -> usize {
        self.rules.len()
    }

    pub fn insert(&mut self, id: RuleId, rule: Rule) {
        self.rules.insert(id, rule);
    }

    fn rule(&self, id: RuleId) -> Result<&Rule> {
        self.rules.get(&id).ok_or_else(|| Error::BadRule {
            id,
            reason: "undefined nonterminal".into(),
        })
    }

    /// Children-first order of every rule reachable from `start`; fails on cycles.
    fn topological(&self) -> Result<Vec<RuleId>> {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            Open,
            Done,
        }
        let mut mark: BTreeMap<RuleId, Mark> = BTreeMap::new();
        let mut order = Vec::new();
        let mut stack: Vec<(RuleId, bool)> = vec![(self.start, false)];
        while let Some((id, expanded)) = stack.pop() {
            if expanded {
                mark.insert(id, Mark::Done);
                order.push(id);
                continue;
            }
            match mark.get(&id) {
                Some(Mark::Done) => continue,
                Some(Mark::Open) => return Err(Error::CollageCycle { id }),
                None => {}
            }
            let rule = self.rule(id)?;
            mark.insert(id, Mark::Open);
            stack.push((id, true));
            for child in rule.children() {
                match mark.get(&child) {
                    Some(Mark::Open) => return Err(Error::CollageCycle { id: child }),
                    Some(Mark::Done) => {}
                    None => stack.push((child, false)),
                }
            }
        }
        Ok(order)
    }

    /// Expansion length of every reachable rule, with all rule constraints checked.
    pub fn lengths(&self) -> Result<BTreeMap<RuleId, usize>> {
        let mut len: BTreeMap<RuleId, usize> = BTreeMap::new();
        let overflow = |id| Error::BadRule {
            id,
            reason: "expansion length overflows".into(),
        };
        for id in self.topological()? {
            let l = match *self.rule(id)? {
                Rule::Terminal(_) => 1,
                Rule::Pair(a, b) => len[&a].checked_add(len[&b]).ok_or_else(|| overflow(id))?,
                Rule::Power(r, count) => {
                    if count < 2 {
                        return Err(Error::BadRule {
                            id,
                            reason: format!("power exponent {count} < 2"),
                        });
                    }
                    len[&r].checked_mul(count).ok_or_else(|| overflow(id))?
                }
                Rule::Slice(k, l, r) => {
                    if l == 0 || l > r || r > len[&k] {
                        return Err(Error::BadRule {
                            id,
                            reason: format!("slice [{l}..{r}] of length {}", len[&k]),
                        });
                    }
                    r - l + 1
                }
            };
            len.insert(id, l);
        }
        Ok(len)
    }

    /// Height: 1 for terminals, 1 + the tallest child otherwise.
    pub fn heights(&self) -> Result<BTreeMap<RuleId, usize>> {
        let mut h: BTreeMap<RuleId, usize> = BTreeMap::new();
        for id in self.topological()? {
            let rule = self.rule(id)?;
            let tallest = rule.children().map(|c| h[&c]).max().unwrap_or(0);
            h.insert(id, tallest + 1);
        }
        Ok(h)
    }

    /// Appends the 0-based half-open range `[lo, hi)` of `id`'s expansion to `out`.
    pub(crate) fn extract_into(
        &self,
        lens: &BTreeMap<RuleId, usize>,
        id: RuleId,
        lo: usize,
        hi: usize,
        out: &mut Vec<u32>,
    ) -> Result<()> {
        let mut stack = vec![(id, lo, hi)];
        while let Some((id, lo, hi)) = stack.pop() {
            if lo >= hi {
                continue;
            }
            match *self.rule(id)? {
                Rule::Terminal(c) => out.push(c),
                Rule::Pair(a, b) => {
                    let la = lens[&a];
                    if hi > la {
                        stack.push((b, lo.max(la) - la, hi - la));
                    }
                    if lo < la {
                        stack.push((a, lo, hi.min(la)));
                    }
                }
                Rule::Power(r, _) => {
                    let lr = lens[&r];
                    for copy in (lo / lr..=(hi - 1) / lr).rev() {
                        let base = copy * lr;
                        stack.push((r, lo.max(base) - base, hi.min(base + lr) - base));
                    }
                }
                Rule::Slice(k, l, _) => stack.push((k, l - 1 + lo, l - 1 + hi)),
            }
        }
        Ok(())
    }

    /// Expansion of `id`.
    pub fn expand_rule(&self, id: RuleId) -> Result<Vec<u32>> {
        let lens = self.lengths()?;
        let len = *lens.get(&id).ok_or_else(|| Error::BadRule {
            id,
            reason: "not reachable from start".into(),
        })?;
        let mut out = Vec::with_capacity(len);
        self.extract_into(&lens, id, 0, len, &mut out)?;
        Ok(out)
    }

    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        for (id, rule) in &self.rules {
            match *rule {
                Rule::Terminal(c) => writeln!(out, "T {id} {c}"),
                Rule::Pair(a, b) => writeln!(out, "P {id} {a} {b}"),
                Rule::Power(r, l) => writeln!(out, "R {id} {r} {l}"),
                Rule::Slice(k, l, r) => writeln!(out, "S {id} {k} {l} {r}"),
            }
            .unwrap();
        }
        writeln!(out, "START {}", self.start).unwrap();
        out
    }

    pub fn parse(input: &str) -> Result<Self> {
        let mut rules = BTreeMap::new();
        let mut start = None;
        for (lineno, line) in input.lines().enumerate() {
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.is_empty() {
                continue;
            }
            let bad = || Error::parse(lineno + 1, format!("bad collage record {line:?}"));
            let nums: Vec<usize> = fields[1..]
                .iter()
                .map(|f| f.parse().map_err(|_| bad()))
                .collect::<Result<_>>()?;
            let id = |i: usize| nums[i] as RuleId;
            let rule = match (fields[0], nums.len()) {
                ("START", 1) => {
                    start = Some(id(0));
                    continue;
                }
                ("T", 2) => Rule::Terminal(nums[1] as u32),
                ("P", 3) => Rule::Pair(id(1), id(2)),
                ("R", 3) => Rule::Power(id(1), nums[2]),
                ("S", 4) => Rule::Slice(id(1), nums[2], nums[3]),
                _ => return Err(bad()),
            };
            if rules.insert(id(0), rule).is_some() {
                return Err(Error::parse(
                    lineno + 1,
                    format!("rule {} defined twice", id(0)),
                ));
            }
        }
        let start = start.ok_or_else(|| Error::parse(0, "missing START line"))?;
        Ok(CollageSystem { rules, start })
    }
}

/// Expansion of the start symbol.
pub fn collage_expand(system: &CollageSystem) -> Result<Text> {
    Text::from_symbols(system.expand_rule(system.start)?)
}
