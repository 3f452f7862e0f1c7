//! Brute-force oracles shared by the integration tests. None of these reuse
//! solver code: they enumerate subsets, colourings and permutations directly.

#![allow(dead_code)]

use qgraph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Adjacency rows as bitmasks.
fn masks(g: &Graph) -> Vec<u32> {
    assert!(g.n() <= 32);
    (0..g.n())
        .map(|v| (0..g.n()).filter(|&u| g.has_edge(u, v)).fold(0, |m, u| m | 1 << u))
        .collect()
}

/// Independence number by checking every vertex subset.
pub fn brute_alpha(g: &Graph) -> usize {
    let adj = masks(g);
    let n = g.n();
    (0u32..1 << n)
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 0 || adj[v] & s == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Chromatic number by enumerating all `k^n` colourings for increasing `k`.
pub fn brute_chi(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let edges = g.edges();
    for k in 1..=n {
        let mut colors = vec![0usize; n];
        loop {
            if edges.iter().all(|&(u, v)| colors[u] != colors[v]) {
                return k;
            }
            let mut i = 0;
            while i < n && colors[i] == k - 1 {
                colors[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            colors[i] += 1;
        }
    }
    n
}

/// Whether some vertex bijection maps `g` onto `h`, trying all of them.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let n = g.n();
    let edges = g.edges();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if edges.iter().all(|&(u, v)| h.has_edge(perm[u], perm[v])) {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Eigenvalue signs of a symmetric integer matrix in floating point.
pub fn float_inertia(m: &[Vec<i64>]) -> (usize, usize, usize) {
    let n = m.len();
    let a = nalgebra::DMatrix::from_fn(n, n, |i, j| m[i][j] as f64);
    let eig = a.symmetric_eigen().eigenvalues;
    let scale = m.iter().flatten().map(|x| x.abs()).max().unwrap_or(1).max(1) as f64;
    let tol = 1e-8 * scale * n.max(1) as f64;
    let neg = eig.iter().filter(|&&x| x < -tol).count();
    let pos = eig.iter().filter(|&&x| x > tol).count();
    (neg, n - neg - pos, pos)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Random nonzero integer vector with entries in `-r..=r`.
pub fn random_vector(rng: &mut impl Rng, dim: usize, r: i64) -> Vec<i64> {
    loop {
        let v: Vec<i64> = (0..dim).map(|_| rng.random_range(-r..=r)).collect();
        if v.iter().any(|&x| x != 0) {
            return v;
        }
    }
}
