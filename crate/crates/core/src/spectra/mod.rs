//! Exact inertia of symmetric integer matrices.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cert::{rat, Rational};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Counts of negative, zero and positive eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Inertia {
    pub n_minus: usize,
    pub n_zero: usize,
    pub n_plus: usize,
}

impl Inertia {
    pub fn dim(&self) -> usize {
        self.n_minus + self.n_zero + self.n_plus
    }

    /// `min(n_0 + n_-, n_0 + n_+)`.
    pub fn bound(&self) -> usize {
        self.n_zero + self.n_minus.min(self.n_plus)
    }
}

/// Inertia by symmetric Gaussian elimination over the rationals.
///
/// Each step pivots on the diagonal entry of largest absolute value. When
/// the remaining diagonal is all zero but some `a_ij != 0`, the 2x2 block on
/// `{i, j}` is eliminated at once; it has one eigenvalue of each sign.
pub fn inertia(m: &[Vec<i64>]) -> Result<Inertia> {
    let n = m.len();
    for (i, row) in m.iter().enumerate() {
        if row.len() != n {
            return Err(Error::DimensionMismatch {
                index: i,
                expected: n,
                found: row.len(),
            });
        }
    }
    if let Some((i, j)) = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| m[i][j] != m[j][i]) {
        return Err(Error::NotSymmetric(i, j));
    }
    let mut a: Vec<Vec<Rational>> = m.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut out = Inertia {
        n_minus: 0,
        n_zero: 0,
        n_plus: 0,
    };

    while !active.is_empty() {
        let pivot = active
            .iter()
            .copied()
            .filter(|&i| !a[i][i].is_zero())
            .max_by(|&i, &j| a[i][i].abs().cmp(&a[j][j].abs()).then(j.cmp(&i)));
        if let Some(i) = pivot {
            if a[i][i].is_positive() {
                out.n_plus += 1;
            } else {
                out.n_minus += 1;
            }
            active.retain(|&k| k != i);
            let inv = a[i][i].recip();
            for &k in &active {
                if a[k][i].is_zero() {
                    continue;
                }
                let f = &a[k][i] * &inv;
                for &l in &active {
                    if !a[i][l].is_zero() {
                        let d = &f * &a[i][l];
                        a[k][l] -= d;
                    }
                }
            }
            continue;
        }

        let off = active.iter().enumerate().find_map(|(x, &i)| {
            active[x + 1..].iter().find(|&&j| !a[i][j].is_zero()).map(|&j| (i, j))
        });
        let Some((i, j)) = off else {
            out.n_zero += active.len();
            break;
        };
        out.n_plus += 1;
        out.n_minus += 1;
        active.retain(|&k| k != i && k != j);
        // Schur complement of [[0, b], [b, 0]]: A_kl -= (a_ki a_jl + a_kj a_il) / b
        let inv = a[i][j].recip();
        for &k in &active {
            for &l in &active {
                let t = &a[k][i] * &a[j][l] + &a[k][j] * &a[i][l];
                if !t.is_zero() {
                    a[k][l] -= t * &inv;
                }
            }
        }
    }
    Ok(out)
}

/// Inertia bound of the adjacency matrix.
pub fn inertia_bound(g: &Graph) -> usize {
    graph_inertia(g).bound()
}

pub fn graph_inertia(g: &Graph) -> Inertia {
    inertia(&g.adjacency_matrix()).expect("adjacency matrices are symmetric")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inr(n_minus: usize, n_zero: usize, n_plus: usize) -> Inertia {
        Inertia { n_minus, n_zero, n_plus }
    }

    #[test]
    fn complete_graphs() {
        for n in 2..=10 {
            let g = Graph::complete(n);
            assert_eq!(graph_inertia(&g), inr(n - 1, 0, 1));
            assert_eq!(inertia_bound(&g), 1);
        }
    }

    #[test]
    fn zero_and_empty() {
        assert_eq!(inertia(&vec![vec![0; 4]; 4]).unwrap(), inr(0, 4, 0));
        assert_eq!(inertia_bound(&Graph::empty(6)), 6);
        assert_eq!(inertia(&[]).unwrap(), inr(0, 0, 0));
    }

    #[test]
    fn five_cycle() {
        assert_eq!(graph_inertia(&Graph::cycle(5)), inr(2, 0, 3));
        assert_eq!(inertia_bound(&Graph::cycle(5)), 2);
    }

    #[test]
    fn block_pivot_cases() {
        assert_eq!(inertia(&[vec![0, 3], vec![3, 0]]).unwrap(), inr(1, 0, 1));
        // P3: eigenvalues ±√2 and 0
        assert_eq!(graph_inertia(&Graph::path(3)), inr(1, 1, 1));
        // K_{2,2} = C4: eigenvalues 2, 0, 0, -2
        assert_eq!(graph_inertia(&Graph::cycle(4)), inr(1, 2, 1));
    }

    #[test]
    fn rejects_asymmetric() {
        assert_eq!(inertia(&[vec![0, 1], vec![2, 0]]), Err(Error::NotSymmetric(0, 1)));
        assert!(inertia(&[vec![0, 1], vec![1]]).is_err());
    }
}
