use super::{Meter, SolveOptions};
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{verify_clique_partition, CliquePartition, Graph};
use crate::par;

/// All cliques of exactly `d` vertices, each sorted, in lexicographic order.
pub fn d_cliques(g: &Graph, d: usize) -> Vec<Vec<usize>> {
    fn grow(g: &Graph, d: usize, cur: &mut Vec<usize>, cand: VertexSet, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        if cur.len() + cand.len() < d {
            return;
        }
        for v in cand.iter() {
            let mut next = cand.intersection(g.neighbors(v));
            for u in 0..=v {
                next.remove(u);
            }
            cur.push(v);
            grow(g, d, cur, next, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if d > 0 {
        grow(g, d, &mut Vec::new(), g.all_vertices(), &mut out);
    }
    out
}

/// Partition of `V(g)` into `d`-cliques by exact-cover backtracking.
///
/// The uncovered vertex lying in the fewest still-available cliques is
/// branched on first (ties to the least index), and its cliques are tried
/// in lexicographic order, so the result is deterministic.
pub fn clique_partition(g: &Graph, d: usize, opts: &SolveOptions) -> Result<Option<CliquePartition>> {
    let n = g.n();
    if d == 0 || n == 0 || !n.is_multiple_of(d) {
        return Err(Error::PartSizeMismatch { d, n });
    }
    let cliques = d_cliques(g, d);
    let sets: Vec<VertexSet> = cliques
        .iter()
        .map(|c| VertexSet::from_indices(n, c.iter().copied()))
        .collect();
    let mut containing = vec![Vec::new(); n];
    for (i, c) in cliques.iter().enumerate() {
        for &v in c {
            containing[v].push(i);
        }
    }
    let meter = Meter::new(opts.budget);
    let mut chosen = Vec::new();
    let found = exact_cover(&sets, &containing, VertexSet::full(n), &mut chosen, &meter)
        .ok_or_else(|| meter.exhausted(0, n / d))?;
    Ok(found.then(|| {
        CliquePartition::new(chosen.iter().map(|&i| cliques[i].clone()).collect())
            .expect("parts are nonempty d-cliques")
    }))
}

fn exact_cover(
    sets: &[VertexSet],
    containing: &[Vec<usize>],
    uncovered: VertexSet,
    chosen: &mut Vec<usize>,
    meter: &Meter,
) -> Option<bool> {
    if !meter.tick() {
        return None;
    }
    let mut best: Option<(usize, Vec<usize>)> = None;
    for v in uncovered.iter() {
        let avail: Vec<usize> = containing[v]
            .iter()
            .copied()
            .filter(|&i| sets[i].is_subset(&uncovered))
            .collect();
        if best.as_ref().is_none_or(|(_, b)| avail.len() < b.len()) {
            let empty = avail.is_empty();
            best = Some((v, avail));
            if empty {
                break;
            }
        }
    }
    let Some((_, avail)) = best else {
        return Some(true);
    };
    for i in avail {
        chosen.push(i);
        match exact_cover(sets, containing, uncovered.difference(&sets[i]), chosen, meter) {
            Some(false) => {
                chosen.pop();
            }
            other => return other,
        }
    }
    Some(false)
}

/// One vertex from each of `parts`, pairwise nonadjacent in `g`, listed in
/// part order; `None` if no such choice exists.
///
/// Backtracks over the parts in order, carrying the union of the chosen
/// vertices' neighbourhoods. In parallel mode the first part's choices are
/// searched concurrently and the earliest successful branch wins, so the
/// result equals the sequential one.
pub fn coclique_transversal(
    g: &Graph,
    parts: &[Vec<usize>],
    opts: &SolveOptions,
) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    let mut seen = VertexSet::new(n);
    for p in parts {
        for &v in p {
            if v >= n {
                return Err(Error::VertexOutOfRange { index: v, n });
            }
            if seen.contains(v) {
                return Err(Error::InvalidPartition(format!("vertex {v} lies in two parts")));
            }
            seen.insert(v);
        }
    }
    let Some(first) = parts.first() else {
        return Ok(Some(Vec::new()));
    };
    let meter = Meter::new(opts.budget);
    let res = par::find_map_first(opts.exec, first, |&v| {
        let mut chosen = vec![v];
        match pick_rest(g, &parts[1..], g.neighbors(v).clone(), &mut chosen, &meter) {
            Some(true) => Some(Some(chosen)),
            Some(false) => None,
            None => Some(None),
        }
    });
    match res {
        Some(Some(t)) => Ok(Some(t)),
        Some(None) => Err(meter.exhausted(0, parts.len())),
        None if meter.stop.load(std::sync::atomic::Ordering::Relaxed) => {
            Err(meter.exhausted(0, parts.len()))
        }
        None => Ok(None),
    }
}

fn pick_rest(
    g: &Graph,
    parts: &[Vec<usize>],
    blocked: VertexSet,
    chosen: &mut Vec<usize>,
    meter: &Meter,
) -> Option<bool> {
    if !meter.tick() {
        return None;
    }
    let Some((part, rest)) = parts.split_first() else {
        return Some(true);
    };
    for &v in part {
        if blocked.contains(v) {
            continue;
        }
        chosen.push(v);
        let mut next = blocked.clone();
        next.union_with(g.neighbors(v));
        match pick_rest(g, rest, next, chosen, meter) {
            Some(false) => {
                chosen.pop();
            }
            other => return other,
        }
    }
    Some(false)
}

/// A coclique transversal of a clique partition, or `None` when every
/// transversal contains an edge, i.e. `(g, cp)` is Kochen–Specker.
pub fn ks_transversal_search(
    g: &Graph,
    cp: &CliquePartition,
    opts: &SolveOptions,
) -> Result<Option<Vec<usize>>> {
    if !verify_clique_partition(g, cp) {
        return Err(Error::InvalidPartition("not a clique partition of the graph".into()));
    }
    coclique_transversal(g, &cp.parts, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::{gp_graph, gp_table_partition};
    use crate::graph::is_coclique_transversal;
    use crate::par::Exec;

    #[test]
    fn cliques_of_k4() {
        let g = Graph::complete(4);
        assert_eq!(d_cliques(&g, 3).len(), 4);
        assert_eq!(d_cliques(&g, 4), vec![vec![0, 1, 2, 3]]);
        assert!(d_cliques(&g, 5).is_empty());
    }

    #[test]
    fn k4_into_matchings() {
        let g = Graph::complete(4);
        let cp = clique_partition(&g, 2, &SolveOptions::default()).unwrap().unwrap();
        assert_eq!(cp.parts, vec![vec![0, 1], vec![2, 3]]);
        assert!(verify_clique_partition(&g, &cp));
    }

    #[test]
    fn infeasible_and_bad_sizes() {
        let g = Graph::path(4);
        assert_eq!(clique_partition(&g, 2, &SolveOptions::default()).unwrap().map(|c| c.parts), Some(vec![vec![0, 1], vec![2, 3]]));
        assert!(clique_partition(&Graph::path(3).cone(), 2, &SolveOptions::default()).unwrap().is_some());
        assert_eq!(clique_partition(&Graph::empty(4), 2, &SolveOptions::default()).unwrap(), None);
        assert!(matches!(
            clique_partition(&g, 3, &SolveOptions::default()),
            Err(Error::PartSizeMismatch { d: 3, n: 4 })
        ));
    }

    #[test]
    fn gp_partition_and_ks() {
        let g = gp_graph();
        let cp = clique_partition(&g, 4, &SolveOptions::default()).unwrap().unwrap();
        assert_eq!(cp.len(), 6);
        assert!(verify_clique_partition(&g, &cp));
        for exec in [Exec::Sequential, Exec::Parallel] {
            let opts = SolveOptions::with_exec(exec);
            assert_eq!(ks_transversal_search(&g, &gp_table_partition(), &opts).unwrap(), None);
        }
    }

    #[test]
    fn trivial_transversals() {
        let k4 = Graph::complete(4);
        let cp = CliquePartition::new(vec![vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(ks_transversal_search(&k4, &cp, &SolveOptions::default()).unwrap(), Some(vec![0]));

        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let cp = CliquePartition::new(vec![vec![0, 1], vec![2, 3]]).unwrap();
        let t = ks_transversal_search(&two, &cp, &SolveOptions::with_exec(Exec::Parallel))
            .unwrap()
            .unwrap();
        assert!(is_coclique_transversal(&two, &cp.parts, &t));
        assert_eq!(t, vec![0, 2]);
    }

    #[test]
    fn rejects_bad_partition() {
        let cp = CliquePartition::new(vec![vec![0, 1, 2]]).unwrap();
        assert!(ks_transversal_search(&Graph::path(3), &cp, &SolveOptions::default()).is_err());
    }
}
