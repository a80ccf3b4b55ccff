use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::Error;

/// An element of `Λ(n, d)`: `n` nonnegative parts summing to `d`.
pub type Composition = Vec<usize>;

/// A partition, stored without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, Error> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("{parts:?} is not weakly decreasing")));
        }
        if parts.contains(&0) {
            return Err(Error::Parse(format!("{parts:?} has interior zeros")));
        }
        Ok(Partition(parts))
    }

    /// Sorts the nonzero parts of a composition.
    pub fn from_composition(c: &[usize]) -> Self {
        let mut parts: Vec<usize> = c.iter().copied().filter(|&x| x > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// The one-row partition `(d)`; empty when `d = 0`.
    pub fn row(d: usize) -> Self {
        Partition(if d == 0 { vec![] } else { vec![d] })
    }

    /// The one-column partition `(1, …, 1)`.
    pub fn column(d: usize) -> Self {
        Partition(vec![1; d])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        Partition((1..=first).map(|i| self.0.iter().filter(|&&p| p >= i).count()).collect())
    }

    /// The partition as an element of `Λ(n, d)`, if it has at most `n` parts.
    pub fn padded(&self, n: usize) -> Option<Composition> {
        if self.len() > n {
            return None;
        }
        let mut v = self.0.clone();
        v.resize(n, 0);
        Some(v)
    }

    /// Boxes `(row, column)`, 0-based, in row reading order.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        self.0.iter().enumerate().flat_map(|(i, &p)| (0..p).map(move |j| (i, j))).collect()
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self, Error> {
        Partition::new(v)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `3,2,1`, `(3,2,1)` and the JSON form `[3,2,1]`.
    fn from_str(s: &str) -> Result<Self, Error> {
        Partition::new(parse_composition(s)?)
    }
}

/// Parses a comma separated list of nonnegative integers, optionally
/// wrapped in parentheses or brackets.
pub fn parse_composition(s: &str) -> Result<Composition, Error> {
    let t = s.trim();
    let t = t
        .strip_prefix('[')
        .and_then(|x| x.strip_suffix(']'))
        .or_else(|| t.strip_prefix('(').and_then(|x| x.strip_suffix(')')))
        .unwrap_or(t);
    if t.trim().is_empty() {
        return Ok(vec![]);
    }
    t.split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part '{x}' in '{s}'"))))
        .collect()
}

/// `σ_λ` as a list of images of `1..=d`: the box in row `i`, column `j`
/// (row reading position `r`) is sent to its column reading position.
pub fn sigma_perm(lambda: &Partition) -> Vec<usize> {
    let conj = lambda.conjugate();
    let mut col_start = vec![0; conj.len() + 1];
    for j in 0..conj.len() {
        col_start[j + 1] = col_start[j] + conj.part(j);
    }
    lambda.boxes().iter().map(|&(i, j)| col_start[j] + i + 1).collect()
}

/// Dominance `μ ≤ λ`: every prefix sum of `μ` is at most that of `λ`.
pub fn dominance_leq(mu: &[usize], lambda: &[usize]) -> Result<bool, Error> {
    let (wm, wl): (usize, usize) = (mu.iter().sum(), lambda.iter().sum());
    if wm != wl {
        return Err(Error::WeightMismatch(format!("{mu:?} has weight {wm}, {lambda:?} has weight {wl}")));
    }
    let len = mu.len().max(lambda.len());
    let (mut a, mut b) = (0, 0);
    for r in 0..len {
        a += mu.get(r).copied().unwrap_or(0);
        b += lambda.get(r).copied().unwrap_or(0);
        if a > b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Lexicographic comparison, padding with zeros.
pub fn lex_cmp(mu: &[usize], lambda: &[usize]) -> Ordering {
    let len = mu.len().max(lambda.len());
    for r in 0..len {
        let (a, b) = (mu.get(r).copied().unwrap_or(0), lambda.get(r).copied().unwrap_or(0));
        match a.cmp(&b) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

/// All partitions of `d`, lexicographically descending: `(d)` first.
pub fn partitions(d: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, &mut Vec::new(), &mut out);
    out
}

/// Immediate lexicographic successor; `None` stands for `+∞`.
pub fn lex_successor(lambda: &Partition) -> Option<Partition> {
    let all = partitions(lambda.weight());
    let i = all.iter().position(|p| p == lambda)?;
    (i > 0).then(|| all[i - 1].clone())
}

/// Immediate lexicographic predecessor; `None` stands for `-∞`.
pub fn lex_predecessor(lambda: &Partition) -> Option<Partition> {
    let all = partitions(lambda.weight());
    let i = all.iter().position(|p| p == lambda)?;
    all.get(i + 1).cloned()
}

/// `Λ(n, d)` in lexicographically descending order: `(d,0,…,0)` first.
pub fn compositions(n: usize, d: usize) -> Vec<Composition> {
    fn rec(i: usize, n: usize, rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if i + 1 == n {
            cur.push(rest);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for a in (0..=rest).rev() {
            cur.push(a);
            rec(i + 1, n, rest - a, cur, out);
            cur.pop();
        }
    }
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(0, n, d, &mut Vec::with_capacity(n), &mut out);
    out
}
