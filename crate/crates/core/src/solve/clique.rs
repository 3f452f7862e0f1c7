use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use super::{Meter, SolveOptions, SolveReport, Witness};
use crate::bitset::VertexSet;
use crate::error::Result;
use crate::graph::Graph;
use crate::par;

/// Maximum coclique of `g`, as a maximum clique of the complement.
pub fn max_independent_set(g: &Graph, opts: &SolveOptions) -> Result<SolveReport> {
    max_clique(&g.complement(), opts)
}

/// Maximum clique by bitset branch and bound.
///
/// Vertices are renumbered by non-increasing degree. At every node the
/// candidate set is greedily coloured and the colour classes bound the
/// clique that can still be added. With `Exec::Parallel` the root branches
/// run concurrently and share the incumbent; the size is exact either way
/// but which maximum clique is reported may vary between parallel runs.
pub fn max_clique(g: &Graph, opts: &SolveOptions) -> Result<SolveReport> {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let adj: Vec<VertexSet> = order
        .iter()
        .map(|&v| VertexSet::from_indices(n, g.neighbors(v).iter().map(|u| pos[u])))
        .collect();

    let search = Search {
        adj,
        meter: Meter::new(opts.budget),
        best: AtomicUsize::new(0),
        witness: Mutex::new(Vec::new()),
    };

    let all = VertexSet::full(n);
    let (cands, colors) = search.color_sort(&all, 1);
    let upper = colors.last().copied().unwrap_or(0);
    let roots: Vec<usize> = (0..cands.len()).rev().collect();
    let finished = par::map(opts.exec, &roots, |&k| {
        if colors[k] < search.best.load(Ordering::Acquire) {
            return true;
        }
        let v = cands[k];
        let mut p = VertexSet::from_indices(n, cands[..k].iter().copied());
        p.intersect_with(&search.adj[v]);
        let mut c = vec![v];
        if p.is_empty() {
            search.offer(&c);
            true
        } else {
            search.expand(&mut c, p)
        }
    });

    let best = search.best.load(Ordering::Acquire);
    if !finished.iter().all(|&f| f) {
        return Err(search.meter.exhausted(best, upper));
    }
    let mut witness: Vec<usize> = search
        .witness
        .into_inner()
        .expect("no panics while holding the lock")
        .into_iter()
        .map(|v| order[v])
        .collect();
    witness.sort_unstable();
    Ok(SolveReport {
        value: best,
        witness: Witness::Vertices(witness),
        nodes_explored: search.meter.nodes(),
        elapsed: search.meter.elapsed(),
    })
}

struct Search {
    adj: Vec<VertexSet>,
    meter: Meter,
    best: AtomicUsize,
    witness: Mutex<Vec<usize>>,
}

impl Search {
    /// Greedy sequential colouring of `p`. Returns the vertices whose colour
    /// is at least `kmin`, in non-decreasing colour order, with their colours.
    fn color_sort(&self, p: &VertexSet, kmin: usize) -> (Vec<usize>, Vec<usize>) {
        let mut uncolored = p.clone();
        let mut verts = Vec::new();
        let mut colors = Vec::new();
        let mut k = 0;
        while !uncolored.is_empty() {
            k += 1;
            let mut q = uncolored.clone();
            while let Some(v) = q.first() {
                q.remove(v);
                q.difference_with(&self.adj[v]);
                uncolored.remove(v);
                if k >= kmin {
                    verts.push(v);
                    colors.push(k);
                }
            }
        }
        (verts, colors)
    }

    fn offer(&self, c: &[usize]) {
        let mut w = self.witness.lock().expect("no panics while holding the lock");
        if c.len() > self.best.load(Ordering::Acquire) {
            self.best.store(c.len(), Ordering::Release);
            *w = c.to_vec();
        }
    }

    /// False if the budget ran out.
    fn expand(&self, c: &mut Vec<usize>, mut p: VertexSet) -> bool {
        if !self.meter.tick() {
            return false;
        }
        let kmin = (self.best.load(Ordering::Acquire) + 1).saturating_sub(c.len()).max(1);
        let (verts, colors) = self.color_sort(&p, kmin);
        for k in (0..verts.len()).rev() {
            if c.len() + colors[k] <= self.best.load(Ordering::Acquire) {
                return true;
            }
            let v = verts[k];
            c.push(v);
            let np = p.intersection(&self.adj[v]);
            let ok = if np.is_empty() {
                self.offer(c);
                true
            } else {
                self.expand(c, np)
            };
            c.pop();
            if !ok {
                return false;
            }
            p.remove(v);
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::par::Exec;
    use crate::solve::Budget;
    use crate::Error;

    fn alpha(g: &Graph) -> usize {
        max_independent_set(g, &SolveOptions::default()).unwrap().value
    }

    #[test]
    fn small_families() {
        for n in 1..8 {
            assert_eq!(alpha(&Graph::complete(n)), 1);
            assert_eq!(alpha(&Graph::empty(n)), n);
        }
        assert_eq!(alpha(&Graph::cycle(5)), 2);
        assert_eq!(alpha(&Graph::cycle(8)), 4);
        assert_eq!(alpha(&Graph::path(7)), 4);
        assert_eq!(alpha(&Graph::empty(0)), 0);
    }

    #[test]
    fn witness_is_a_coclique() {
        let g = Graph::cycle(9);
        let r = max_independent_set(&g, &SolveOptions::default()).unwrap();
        assert_eq!(r.value, 4);
        assert_eq!(r.vertices().len(), 4);
        assert!(g.is_coclique(r.vertices()));
    }

    #[test]
    fn parallel_value_matches() {
        let g = crate::embed::gp_graph();
        let s = max_independent_set(&g, &SolveOptions::with_exec(Exec::Sequential)).unwrap();
        let p = max_independent_set(&g, &SolveOptions::with_exec(Exec::Parallel)).unwrap();
        assert_eq!(s.value, 5);
        assert_eq!(p.value, 5);
        assert!(g.is_coclique(p.vertices()));
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let g = crate::embed::gp_graph();
        let err = max_independent_set(&g, &SolveOptions::with_budget(Budget::nodes(2))).unwrap_err();
        assert!(matches!(err, Error::BudgetExhausted { upper, .. } if upper >= 5));
    }
}
