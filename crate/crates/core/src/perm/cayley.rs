use std::collections::HashMap;

use super::Perm;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Inverse-closed, identity-free subset of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionSet {
    degree: usize,
    elems: Vec<Perm>,
}

impl ConnectionSet {
    pub fn new(degree: usize, mut elems: Vec<Perm>) -> Result<Self> {
        elems.sort();
        elems.dedup();
        for g in &elems {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
            if g.is_identity() {
                return Err(Error::InvalidConnectionSet("contains the identity".into()));
            }
            if elems.binary_search(&g.inverse()).is_err() {
                return Err(Error::InvalidConnectionSet(format!("inverse of {g} missing")));
            }
        }
        Ok(Self { degree, elems })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn elems(&self) -> &[Perm] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.elems.binary_search(g).is_ok()
    }
}

/// All non-identity `g` in `S_n` with `g² = ()`.
pub fn involutions(n: usize) -> ConnectionSet {
    let elems = Perm::all(n).into_iter().filter(Perm::is_involution).collect();
    ConnectionSet::new(n, elems).expect("involutions are self-inverse")
}

pub fn transpositions(n: usize) -> ConnectionSet {
    let elems = Perm::all(n)
        .into_iter()
        .filter(|g| g.as_transposition().is_some())
        .collect();
    ConnectionSet::new(n, elems).expect("transpositions are self-inverse")
}

/// `Cay(S_n, c)`: vertices are the permutations in lexicographic order and
/// `g ~ h` iff `h g⁻¹ ∈ c`.
pub fn cayley_graph(n: usize, c: &ConnectionSet) -> Result<Graph> {
    if c.degree() != n {
        return Err(Error::DegreeMismatch(n, c.degree()));
    }
    let elems = Perm::all(n);
    let index: HashMap<&Perm, usize> = elems.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let mut g = Graph::empty(elems.len());
    for (i, x) in elems.iter().enumerate() {
        for s in c.elems() {
            let j = index[&s.compose_unchecked(x)];
            g.link(i, j);
        }
    }
    g.with_labels(elems.iter().map(Perm::to_string).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn involution_counts() {
        assert_eq!(involutions(3).len(), 3);
        assert_eq!(involutions(4).len(), 9);
        assert_eq!(involutions(5).len(), 25);
        let double = involutions(5)
            .elems()
            .iter()
            .filter(|g| g.cycles().len() == 2)
            .count();
        assert_eq!(double, 15);
    }

    #[test]
    fn connection_set_validation() {
        let c3 = Perm::parse_cycles("(123)", 3).unwrap();
        assert!(ConnectionSet::new(3, vec![c3.clone()]).is_err());
        assert!(ConnectionSet::new(3, vec![c3.clone(), c3.inverse()]).is_ok());
        assert!(ConnectionSet::new(3, vec![Perm::identity(3)]).is_err());
    }

    #[test]
    fn s3_transpositions_is_k33() {
        let g = cayley_graph(3, &transpositions(3)).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.regular_degree(), Some(3));
        // brute-force listing: even perms in lex order are 0, 3, 4; odd are 1, 2, 5
        let even = [0, 3, 4];
        let odd = [1, 2, 5];
        for &u in &even {
            for &v in &odd {
                assert!(g.has_edge(u, v));
            }
        }
        assert!(g.is_coclique(&even) && g.is_coclique(&odd));
    }

    #[test]
    fn s4_and_s5_regularity() {
        assert_eq!(cayley_graph(4, &involutions(4)).unwrap().regular_degree(), Some(9));
        let g = cayley_graph(5, &involutions(5)).unwrap();
        assert_eq!(g.n(), 120);
        assert_eq!(g.regular_degree(), Some(25));
    }
}
