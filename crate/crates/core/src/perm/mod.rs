//! Permutations of `{1..n}` and the symmetric group `S_n`.
//!
//! Points are 1-based in every public method. Composition is right-to-left:
//! `a.compose(&b)` maps `x` to `a(b(x))`.

mod cayley;
mod iso;

use std::fmt;
use std::str::FromStr;

pub use cayley::{cayley_graph, involutions, transpositions, ConnectionSet};
pub use iso::{find_isomorphism, verify_isomorphism};

use crate::error::{Error, Result};

/// A permutation in one-line notation. Ordering is lexicographic on the
/// one-line images, which is the vertex order used for Cayley graphs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Self { img: (0..n).collect() }
    }

    /// From 1-based one-line notation.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut img = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n || std::mem::replace(&mut seen[x - 1], true) {
                return Err(Error::InvalidPerm(format!("{images:?} is not a bijection of 1..={n}")));
            }
            img.push(x - 1);
        }
        Ok(Self { img })
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a == b || a == 0 || b == 0 || a > n || b > n {
            return Err(Error::InvalidPerm(format!("({a}{b}) in S_{n}")));
        }
        let mut p = Self::identity(n);
        p.img.swap(a - 1, b - 1);
        Ok(p)
    }

    /// Parses disjoint-cycle notation such as `(12)(34)`, `(1,5)` or `()`.
    /// Single-digit points may be written without separators.
    pub fn parse_cycles(s: &str, n: usize) -> Result<Self> {
        let bad = || Error::InvalidPerm(format!("cannot parse {s:?} in S_{n}"));
        let mut img: Vec<usize> = (0..n).collect();
        let mut moved = vec![false; n];
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body_end = rest.find(')').ok_or_else(bad)?;
            if !rest.starts_with('(') {
                return Err(bad());
            }
            let body = &rest[1..body_end];
            rest = rest[body_end + 1..].trim_start();
            let points: Vec<usize> = if body.contains(',') || body.contains(' ') {
                body.split([',', ' '])
                    .filter(|t| !t.is_empty())
                    .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                    .collect::<Result<_>>()?
            } else {
                body.chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                    .collect::<Result<_>>()?
            };
            if points.len() <= 1 {
                if points.first().is_some_and(|&p| p == 0 || p > n) {
                    return Err(bad());
                }
                continue;
            }
            for &p in &points {
                if p == 0 || p > n || std::mem::replace(&mut moved[p - 1], true) {
                    return Err(bad());
                }
            }
            for w in 0..points.len() {
                img[points[w] - 1] = points[(w + 1) % points.len()] - 1;
            }
        }
        Ok(Self { img })
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.img[x - 1] + 1
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.img.iter().map(|x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Perm) -> Perm {
        Perm {
            img: other.img.iter().map(|&x| self.img[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0; self.degree()];
        for (i, &x) in self.img.iter().enumerate() {
            img[x] = i;
        }
        Perm { img }
    }

    /// Nontrivial cycles, each starting at its least point, in ascending
    /// order of least points.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut cyc = vec![s + 1];
            seen[s] = true;
            let mut x = self.img[s];
            while x != s {
                seen[x] = true;
                cyc.push(x + 1);
                x = self.img[x];
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .map(Vec::len)
            .fold(1, num_integer::lcm)
    }

    pub fn is_involution(&self) -> bool {
        !self.is_identity() && self.compose_unchecked(self).is_identity()
    }

    /// Points moved by a transposition, or `None` for anything else.
    pub fn as_transposition(&self) -> Option<(usize, usize)> {
        match self.cycles().as_slice() {
            [c] if c.len() == 2 => Some((c[0], c[1])),
            _ => None,
        }
    }

    /// All of `S_n` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut cur: Vec<usize> = (0..n).collect();
        let mut out = vec![Perm { img: cur.clone() }];
        while next_permutation(&mut cur) {
            out.push(Perm { img: cur.clone() });
        }
        out
    }
}

fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let Some(i) = (0..a.len() - 1).rev().find(|&i| a[i] < a[i + 1]) else {
        return false;
    };
    let j = (i + 1..a.len()).rev().find(|&j| a[j] > a[i]).expect("successor exists");
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        let sep = if self.degree() >= 10 { "," } else { "" };
        for c in cycles {
            let pts: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", pts.join(sep))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{}", self)
    }
}

/// Parses `"<degree>:<cycles>"`, e.g. `"4:(12)(34)"`.
impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Perm> {
        let (n, cyc) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidPerm(format!("expected <degree>:<cycles>, got {s:?}")))?;
        let n = n
            .trim()
            .parse()
            .map_err(|_| Error::InvalidPerm(format!("bad degree in {s:?}")))?;
        Perm::parse_cycles(cyc, n)
    }
}
