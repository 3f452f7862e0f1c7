//! Isomorphism classes of small graphs.
//!
//! Classes on `n` vertices are grown from the classes on `n - 1` vertices by
//! adding a vertex with every possible neighbourhood and keeping one graph
//! per canonical code. The canonical code is the least adjacency bit string
//! over the leaves of an individualisation-refinement search.

use std::collections::BTreeSet;

use crate::graph::Graph;
use crate::par::{self, Exec};

/// Largest order whose upper triangle fits in a `u64` code.
pub const MAX_ORDER: usize = 11;

fn pair_bit(i: usize, j: usize) -> u32 {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    (b * (b - 1) / 2 + a) as u32
}

/// Graph on `n` vertices with the edges whose bits are set in `code`.
pub fn from_code(n: usize, code: u64) -> Graph {
    let mut g = Graph::empty(n);
    for b in 1..n {
        for a in 0..b {
            if code >> pair_bit(a, b) & 1 == 1 {
                g.link(a, b);
            }
        }
    }
    g
}

fn code_under(g: &Graph, pos: &[usize]) -> u64 {
    g.edges()
        .iter()
        .fold(0, |acc, &(u, v)| acc | 1 << pair_bit(pos[u], pos[v]))
}

/// Equitable refinement of an ordered colouring. Colours stay ordered: a
/// vertex's new colour ranks (old colour, sorted neighbour colours).
fn refine(g: &Graph, mut colors: Vec<usize>) -> Vec<usize> {
    let n = g.n();
    let mut classes = colors.iter().collect::<BTreeSet<_>>().len();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let ranks: Vec<&(usize, Vec<usize>)> = sigs.iter().collect::<BTreeSet<_>>().into_iter().collect();
        colors = sigs
            .iter()
            .map(|s| ranks.binary_search(&s).expect("signature present"))
            .collect();
        if ranks.len() == classes {
            return colors;
        }
        classes = ranks.len();
    }
}

fn search(g: &Graph, colors: Vec<usize>, best: &mut u64) {
    let n = g.n();
    let mut size = vec![0usize; n];
    for &c in &colors {
        size[c] += 1;
    }
    let Some(target) = (0..n).find(|&c| size[c] > 1) else {
        *best = (*best).min(code_under(g, &colors));
        return;
    };
    for v in (0..n).filter(|&v| colors[v] == target) {
        let split: Vec<usize> = (0..n)
            .map(|u| 2 * colors[u] + usize::from(colors[u] == target && u != v))
            .collect();
        search(g, refine(g, split), best);
    }
}

/// Isomorphism-invariant code; equal for two graphs iff they are isomorphic.
pub fn canonical_code(g: &Graph) -> u64 {
    assert!(g.n() <= MAX_ORDER, "canonical codes are limited to {MAX_ORDER} vertices");
    let mut best = u64::MAX;
    search(g, refine(g, vec![0; g.n()]), &mut best);
    best
}

/// One graph per isomorphism class on `n` vertices, ordered by canonical
/// code. Each representative is the decoded canonical form.
pub fn nonisomorphic_graphs(n: usize, exec: Exec) -> Vec<Graph> {
    assert!(n <= MAX_ORDER, "census is limited to {MAX_ORDER} vertices");
    let mut codes: BTreeSet<u64> = BTreeSet::from([0]);
    for k in 1..n {
        let prev: Vec<u64> = codes.into_iter().collect();
        let batches = par::map(exec, &prev, |&c| {
            let base = from_code(k, c);
            (0u64..1 << k)
                .map(|mask| {
                    let mut g = Graph::empty(k + 1);
                    for (u, v) in base.edges() {
                        g.link(u, v);
                    }
                    for u in (0..k).filter(|u| mask >> u & 1 == 1) {
                        g.link(u, k);
                    }
                    canonical_code(&g)
                })
                .collect::<Vec<_>>()
        });
        codes = batches.into_iter().flatten().collect();
    }
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    codes.into_iter().map(|c| from_code(n, c)).collect()
}

/// All classes on `1..=n` vertices, smallest first.
pub fn graphs_up_to(n: usize, exec: Exec) -> Vec<Graph> {
    (1..=n).flat_map(|k| nonisomorphic_graphs(k, exec)).collect()
}
