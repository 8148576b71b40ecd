//! Integer partitions, the `b` / `b̄` statistics and strip relations.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Ordering is descending lexicographic, so a `BTreeMap` keyed by partitions
/// iterates `(3), (2,1), (1,1,1)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Self { parts })
    }

    /// Sorts and drops zero parts.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Single row `(n)`; empty when `n = 0`.
    pub fn row(n: usize) -> Self {
        Self::from_unsorted(vec![n])
    }

    /// Single column `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `b(λ) = Σ λ_i (i - 1)`.
    pub fn b(&self) -> i64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| (p * i) as i64)
            .sum()
    }

    /// `b̄(λ) = Σ (λ_i - 1)(i - 1)`.
    pub fn bbar(&self) -> i64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| ((p - 1) * i) as i64)
            .sum()
    }

    /// Nonzero part multiplicities `m_i(λ)`, ordered by part value.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        let mut prev = None;
        for &p in self.parts.iter().rev() {
            if prev == Some(p) {
                *out.last_mut().unwrap() += 1;
            } else {
                out.push(1);
                prev = Some(p);
            }
        }
        out
    }

    pub fn conjugate(&self) -> Self {
        let width = self.part(0);
        let parts = (0..width)
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
            .collect();
        Self { parts }
    }

    /// Young diagram containment.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| self.parts[i] >= other.parts[i])
    }

    /// Dominance order on partitions of the same size.
    pub fn dominates(&self, other: &Partition) -> bool {
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..n {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// All `μ ⊆ λ` with `λ/μ` a vertical strip of `j` cells.
    pub fn vertical_strip_removals(&self, j: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = self.parts.clone();
        remove_vertical(&self.parts, self.len(), j, &mut cur, &mut out);
        out.sort();
        out
    }

    /// All `λ ⊇ μ` with `λ/μ` a vertical strip of `j` cells.
    pub fn vertical_strip_additions(&self, j: usize) -> Vec<Partition> {
        let mut padded = self.parts.clone();
        padded.resize(self.len() + j, 0);
        let mut out = Vec::new();
        let mut cur = padded.clone();
        add_vertical(&padded, 0, j, &mut cur, &mut out);
        out.sort();
        out
    }

    /// All `ρ` (of any size, including `ν` itself) with `ν/ρ` a horizontal strip.
    pub fn horizontal_strip_removals(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = vec![0; self.len()];
        remove_horizontal(&self.parts, 0, &mut cur, &mut out);
        out.sort();
        out
    }
}

fn remove_vertical(
    lam: &[usize],
    rows: usize,
    left: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    // Rows are decided bottom-up; `rows` counts the rows still undecided.
    if rows == 0 {
        if left == 0 {
            out.push(Partition::from_unsorted(cur.clone()));
        }
        return;
    }
    if rows < left {
        return;
    }
    let i = rows - 1;
    remove_vertical(lam, i, left, cur, out);
    if left > 0 && cur.get(i + 1).is_none_or(|&below| below < lam[i]) {
        cur[i] -= 1;
        remove_vertical(lam, i, left - 1, cur, out);
        cur[i] += 1;
    }
}

fn add_vertical(
    mu: &[usize],
    i: usize,
    left: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if i == mu.len() {
        if left == 0 {
            out.push(Partition::from_unsorted(cur.clone()));
        }
        return;
    }
    if mu.len() - i < left {
        return;
    }
    add_vertical(mu, i + 1, left, cur, out);
    if left > 0 && (i == 0 || cur[i - 1] > mu[i]) {
        cur[i] += 1;
        add_vertical(mu, i + 1, left - 1, cur, out);
        cur[i] -= 1;
    }
}

fn remove_horizontal(nu: &[usize], i: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if i == nu.len() {
        out.push(Partition::from_unsorted(cur.clone()));
        return;
    }
    let lo = nu.get(i + 1).copied().unwrap_or(0);
    for v in lo..=nu[i] {
        cur[i] = v;
        remove_horizontal(nu, i + 1, cur, out);
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts, e.g. `3,2,2`; the empty string is `()`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n`, optionally with exactly `length` parts, in
/// descending lexicographic order.
pub fn enumerate_partitions(n: usize, length: Option<usize>) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    gen_partitions(n, n, &mut cur, length, &mut out);
    out
}

fn gen_partitions(
    left: usize,
    max: usize,
    cur: &mut Vec<usize>,
    length: Option<usize>,
    out: &mut Vec<Partition>,
) {
    if left == 0 {
        if length.is_none_or(|l| l == cur.len()) {
            out.push(Partition { parts: cur.clone() });
        }
        return;
    }
    if let Some(l) = length {
        let slots = l.saturating_sub(cur.len());
        if slots == 0 || slots * max < left {
            return;
        }
    }
    for p in (1..=max.min(left)).rev() {
        cur.push(p);
        gen_partitions(left - p, p, cur, length, out);
        cur.pop();
    }
}
