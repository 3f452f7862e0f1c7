//! Projective points of `F_p^3` and the Erdős–Rényi orthogonality graphs.

use crate::error::{Error, Result};
use crate::graph::{orthogonality_graph, Graph, InnerProduct, VectorSet};

pub fn is_odd_prime(p: u64) -> bool {
    p >= 3 && p % 2 == 1 && (3..).step_by(2).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn check_prime(p: u64) -> Result<()> {
    if is_odd_prime(p) {
        Ok(())
    } else {
        Err(Error::NotOddPrime(p))
    }
}

/// A nonzero vector of `F_p^3` with residues in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpVec {
    pub p: u64,
    pub coords: [u64; 3],
}

impl FpVec {
    pub fn new(p: u64, coords: [i64; 3]) -> Result<Self> {
        check_prime(p)?;
        let coords = coords.map(|x| x.rem_euclid(p as i64) as u64);
        if coords == [0; 3] {
            return Err(Error::ZeroVector(0));
        }
        Ok(Self { p, coords })
    }

    /// The scalar multiple whose first nonzero coordinate is 1.
    pub fn normalized(self) -> Self {
        let lead = *self.coords.iter().find(|&&x| x != 0).expect("nonzero vector");
        let inv = mod_pow(lead, self.p - 2, self.p);
        Self {
            p: self.p,
            coords: self.coords.map(|x| x * inv % self.p),
        }
    }

    pub fn dot(&self, other: &FpVec) -> u64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .fold(0, |acc, (a, b)| (acc + a * b) % self.p)
    }
}

fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// Integer representative with entries in `-(p-1)/2 ..= (p-1)/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LiftedVec {
    pub coords: [i64; 3],
}

/// `{[0,0,1]} ∪ {[0,1,a]} ∪ {[1,a,b]}` in lexicographic order.
pub fn projective_points(p: u64) -> Result<Vec<FpVec>> {
    check_prime(p)?;
    let mut pts = vec![FpVec { p, coords: [0, 0, 1] }];
    pts.extend((0..p).map(|a| FpVec { p, coords: [0, 1, a] }));
    for a in 0..p {
        pts.extend((0..p).map(|b| FpVec { p, coords: [1, a, b] }));
    }
    Ok(pts)
}

/// Replaces every residue above `(p-1)/2` by its negative representative.
pub fn symmetric_lift(v: &FpVec) -> LiftedVec {
    let half = (v.p - 1) / 2;
    LiftedVec {
        coords: v.coords.map(|e| if e > half { e as i64 - v.p as i64 } else { e as i64 }),
    }
}

fn point_vectors(p: u64, lift: bool) -> Result<VectorSet> {
    let pts = projective_points(p)?;
    let vectors = pts
        .iter()
        .map(|v| {
            if lift {
                symmetric_lift(v).coords.to_vec()
            } else {
                v.coords.iter().map(|&x| x as i64).collect()
            }
        })
        .collect();
    VectorSet::new(3, vectors)
}

/// Representatives as residues `0..p`.
pub fn er_vectors(p: u64) -> Result<VectorSet> {
    point_vectors(p, false)
}

/// Representatives after [`symmetric_lift`].
pub fn er_prime_vectors(p: u64) -> Result<VectorSet> {
    point_vectors(p, true)
}

/// `ER(p)`: projective points adjacent when orthogonal mod `p`.
pub fn er_graph(p: u64) -> Result<Graph> {
    orthogonality_graph(&er_vectors(p)?, InnerProduct::ModP(p))
}

/// Vertices of `ER(p)` whose point is orthogonal to itself. They carry no
/// loop in [`er_graph`].
pub fn absolute_points(p: u64) -> Result<Vec<usize>> {
    Ok(er_vectors(p)?.self_orthogonal(InnerProduct::ModP(p)))
}

/// `ER'(p)`: lifted representatives adjacent when orthogonal over the reals.
pub fn er_prime_graph(p: u64) -> Result<Graph> {
    orthogonality_graph(&er_prime_vectors(p)?, InnerProduct::Rational)
}

/// Indices of the `ER'(p)` vertices whose lifted entries all lie in `{0, ±1}`.
pub fn small_entry_vertices(p: u64) -> Result<Vec<usize>> {
    Ok(er_prime_vectors(p)?
        .vectors()
        .iter()
        .enumerate()
        .filter(|(_, v)| v.iter().all(|x| x.abs() <= 1))
        .map(|(i, _)| i)
        .collect())
}

/// The component of `ER'(p)` containing the small-entry vertices, as an
/// induced subgraph. Equal to the whole graph when it is connected.
pub fn er_prime_main_component(p: u64) -> Result<Graph> {
    let g = er_prime_graph(p)?;
    let comp = g.component_of(0)?;
    g.induced_subgraph(&comp)
}

pub fn g13() -> Graph {
    er_prime_graph(3).expect("3 is an odd prime")
}

pub fn g14() -> Graph {
    g13().cone()
}
