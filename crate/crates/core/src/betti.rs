//! Bigraded Betti tables.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::matrix::Deg;

/// One nonzero entry `β_{i,(jx,jt)}` of a Betti table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: i32,
    pub jx: i32,
    pub jt: i32,
    pub count: usize,
}

/// Counts `β_{i,(jx,jt)}` of free summands `R(-jx,-jt)` in homological degree `i`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, Deg), usize>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Table of a free complex given the basis degrees of each module.
    pub fn from_degrees(modules: &[Vec<Deg>]) -> Self {
        let mut t = Self::new();
        for (i, degs) in modules.iter().enumerate() {
            for &d in degs {
                t.add(i, d, 1);
            }
        }
        t
    }

    pub fn add(&mut self, i: usize, deg: Deg, count: usize) {
        if count == 0 {
            return;
        }
        *self.entries.entry((i, deg)).or_insert(0) += count;
    }

    pub fn get(&self, i: usize, deg: Deg) -> usize {
        self.entries.get(&(i, deg)).copied().unwrap_or(0)
    }

    /// `β_{i,j}` with respect to total degree `j = jx + jt`.
    pub fn get_total(&self, i: usize, j: i32) -> usize {
        self.entries.iter().filter(|((a, d), _)| *a == i && d.0 + d.1 == j).map(|(_, c)| c).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest homological index with a nonzero entry.
    pub fn length(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    /// Total ranks `β_0, β_1, ...` up to the length.
    pub fn totals(&self) -> Vec<usize> {
        let Some(len) = self.length() else {
            return Vec::new();
        };
        let mut out = vec![0; len + 1];
        for ((i, _), c) in &self.entries {
            out[*i] += c;
        }
        out
    }

    /// Nonzero entries sorted by `(i, jx, jt)`.
    pub fn entries(&self) -> Vec<BettiEntry> {
        self.entries
            .iter()
            .map(|((i, d), c)| BettiEntry { i: *i, j: d.0 + d.1, jx: d.0, jt: d.1, count: *c })
            .collect()
    }

    /// Entries collapsed to total degree: `(i, j) -> β_{i,j}`.
    pub fn total_degree_entries(&self) -> BTreeMap<(usize, i32), usize> {
        let mut out = BTreeMap::new();
        for ((i, d), c) in &self.entries {
            *out.entry((*i, d.0 + d.1)).or_insert(0) += c;
        }
        out
    }

    /// The table with the bigrading forgotten (all degree put in `jx`).
    pub fn singly_graded(&self) -> BettiTable {
        let mut t = BettiTable::new();
        for ((i, j), c) in self.total_degree_entries() {
            t.add(i, (j, 0), c);
        }
        t
    }

    /// Aligned text in the usual layout: column `i`, row `j - i`.
    pub fn render(&self) -> String {
        let totals = self.totals();
        let collapsed = self.total_degree_entries();
        if totals.is_empty() {
            return "total: (zero)\n".to_string();
        }
        let rows: Vec<i32> = {
            let mut r: Vec<i32> = collapsed.keys().map(|(i, j)| j - *i as i32).collect();
            r.sort_unstable();
            r.dedup();
            r
        };
        let width = totals.iter().map(|c| c.to_string().len()).max().unwrap_or(1).max(2);
        let mut out = String::new();
        let _ = write!(out, "{:>7}", "");
        for i in 0..totals.len() {
            let _ = write!(out, " {:>width$}", i);
        }
        out.push('\n');
        let _ = write!(out, "{:>7}", "total:");
        for c in &totals {
            let _ = write!(out, " {:>width$}", c);
        }
        out.push('\n');
        for r in rows {
            let _ = write!(out, "{:>7}", format!("{r}:"));
            for i in 0..totals.len() {
                let c = collapsed.get(&(i, r + i as i32)).copied().unwrap_or(0);
                let cell = if c == 0 { ".".to_string() } else { c.to_string() };
                let _ = write!(out, " {:>width$}", cell);
            }
            out.push('\n');
        }
        out
    }

    /// Checks `β_{i,j} = β_{c-i, σ-j}` (total degrees) with `c` the length
    /// and `σ` forced by matching the first and last columns. Returns `(c, σ)`.
    pub fn palindrome(&self) -> Option<(usize, i32)> {
        let c = self.length()?;
        let collapsed = self.total_degree_entries();
        let min0 = collapsed.keys().filter(|(i, _)| *i == 0).map(|(_, j)| *j).min()?;
        let maxc = collapsed.keys().filter(|(i, _)| *i == c).map(|(_, j)| *j).max()?;
        let sigma = min0 + maxc;
        let ok = collapsed.iter().all(|((i, j), n)| collapsed.get(&(c - i, sigma - j)) == Some(n));
        ok.then_some((c, sigma))
    }
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.entries().serialize(s)
    }
}

impl<'de> Deserialize<'de> for BettiTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let entries = Vec::<BettiEntry>::deserialize(d)?;
        let mut t = BettiTable::new();
        for e in entries {
            t.add(e.i, (e.jx, e.jt), e.count);
        }
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gorenstein_codim3() -> BettiTable {
        let mut t = BettiTable::new();
        t.add(0, (0, 0), 1);
        t.add(1, (2, 0), 5);
        t.add(2, (3, 0), 5);
        t.add(3, (5, 0), 1);
        t
    }

    #[test]
    fn totals_and_palindrome() {
        let t = gorenstein_codim3();
        assert_eq!(t.totals(), vec![1, 5, 5, 1]);
        assert_eq!(t.palindrome(), Some((3, 5)));
    }

    #[test]
    fn lopsided_table_is_not_palindromic() {
        let mut t = gorenstein_codim3();
        t.add(1, (3, 0), 1);
        assert_eq!(t.palindrome(), None);
    }

    #[test]
    fn render_layout() {
        let text = gorenstein_codim3().render();
        assert!(text.contains("total:  1  5  5  1"), "{text}");
        assert!(text.contains("     1:  .  5  5  ."), "{text}");
    }

    #[test]
    fn json_round_trip() {
        let t = gorenstein_codim3();
        let s = serde_json::to_string(&t).unwrap();
        let back: BettiTable = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
    }
}
