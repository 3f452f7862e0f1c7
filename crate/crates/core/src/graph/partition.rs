use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// A partition of the vertex set into cliques of a common size `d`.
///
/// Construction only checks the shape (non-empty parts of equal size);
/// whether the parts are disjoint cliques covering a particular graph is
/// the job of [`verify_clique_partition`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliquePartition {
    pub d: usize,
    pub parts: Vec<Vec<usize>>,
}

impl CliquePartition {
    pub fn new(parts: Vec<Vec<usize>>) -> Result<Self> {
        let d = parts.first().map_or(0, Vec::len);
        if d == 0 {
            return Err(Error::InvalidPartition("empty part list or empty part".into()));
        }
        if let Some((i, p)) = parts.iter().enumerate().find(|(_, p)| p.len() != d) {
            return Err(Error::InvalidPartition(format!(
                "part {i} has {} vertices, expected {d}",
                p.len()
            )));
        }
        Ok(Self { d, parts })
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `part_of[v]` is the index of the part containing `v`.
    pub fn part_index(&self, n: usize) -> Vec<Option<usize>> {
        let mut idx = vec![None; n];
        for (i, p) in self.parts.iter().enumerate() {
            for &v in p {
                if v < n {
                    idx[v] = Some(i);
                }
            }
        }
        idx
    }
}

/// True iff the parts disjointly cover `V(g)` and each is a `d`-clique.
pub fn verify_clique_partition(g: &Graph, cp: &CliquePartition) -> bool {
    let mut seen = vec![false; g.n()];
    for p in &cp.parts {
        if p.len() != cp.d || !g.is_clique(p) {
            return false;
        }
        for &v in p {
            if v >= g.n() || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// A transversal takes exactly one vertex from every part.
pub fn is_transversal(parts: &[Vec<usize>], set: &[usize]) -> bool {
    set.len() == parts.len()
        && parts
            .iter()
            .all(|p| p.iter().filter(|v| set.contains(v)).count() == 1)
}

pub fn is_coclique_transversal(g: &Graph, parts: &[Vec<usize>], set: &[usize]) -> bool {
    is_transversal(parts, set) && g.is_coclique(set)
}
