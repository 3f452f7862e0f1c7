use std::collections::BTreeMap;

use crate::error::Result;
use crate::graph::{check_bijection, Graph};

/// Checks that `u ~ v` in `g` iff `map[u] ~ map[v]` in `h`.
///
/// Errors if `map` is not a bijection of `0..|V(g)|`; graphs of different
/// order are simply not isomorphic.
pub fn verify_isomorphism(g: &Graph, h: &Graph, map: &[usize]) -> Result<bool> {
    check_bijection(map, g.n())?;
    if g.n() != h.n() {
        return Ok(false);
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.has_edge(u, v) != h.has_edge(map[u], map[v]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Stable colouring by iterated neighbour-colour multisets (1-dimensional
/// Weisfeiler–Leman), computed jointly so colour ids are comparable across
/// the input graphs. Initial colours are degrees.
pub(crate) fn color_refinement(graphs: &[&Graph]) -> Vec<Vec<usize>> {
    let mut colors: Vec<Vec<usize>> = graphs.iter().map(|g| g.degrees()).collect();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<Vec<(usize, Vec<usize>)>> = graphs
            .iter()
            .zip(&colors)
            .map(|(g, col)| {
                (0..g.n())
                    .map(|v| {
                        let mut nb: Vec<usize> = g.neighbors(v).iter().map(|u| col[u]).collect();
                        nb.sort_unstable();
                        (col[v], nb)
                    })
                    .collect()
            })
            .collect();
        let mut ids: BTreeMap<&(usize, Vec<usize>), usize> = BTreeMap::new();
        for s in sigs.iter().flatten() {
            ids.insert(s, 0);
        }
        for (i, v) in ids.values_mut().enumerate() {
            *v = i;
        }
        let next: Vec<Vec<usize>> = sigs
            .iter()
            .map(|gs| gs.iter().map(|s| ids[s]).collect())
            .collect();
        let count = ids.len();
        colors = next;
        if count == classes {
            return colors;
        }
        classes = count;
    }
}

/// Some isomorphism `g -> h` as an index map, or `None`.
///
/// Colour refinement prunes candidate images, then a backtracking search
/// extends partial maps vertex by vertex in a connectivity-first order.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let cols = color_refinement(&[g, h]);
    let (cg, ch) = (&cols[0], &cols[1]);
    let mut hist_g = cg.clone();
    let mut hist_h = ch.clone();
    hist_g.sort_unstable();
    hist_h.sort_unstable();
    if hist_g != hist_h {
        return None;
    }
    let mut class_size: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in cg {
        *class_size.entry(c).or_default() += 1;
    }

    // Next vertex: most already-ordered neighbours, then smallest class.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    for _ in 0..n {
        let u = (0..n)
            .filter(|&u| !placed[u])
            .min_by_key(|&u| (std::cmp::Reverse(links[u]), class_size[&cg[u]], u))
            .expect("unplaced vertex remains");
        placed[u] = true;
        order.push(u);
        for w in g.neighbors(u).iter() {
            links[w] += 1;
        }
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(g, h, cg, ch, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    h: &Graph,
    cg: &[usize],
    ch: &[usize],
    order: &[usize],
    k: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if k == order.len() {
        return true;
    }
    let u = order[k];
    for w in 0..h.n() {
        if used[w] || ch[w] != cg[u] {
            continue;
        }
        let consistent = order[..k]
            .iter()
            .all(|&x| g.has_edge(u, x) == h.has_edge(w, map[x]));
        if !consistent {
            continue;
        }
        map[u] = w;
        used[w] = true;
        if extend(g, h, cg, ch, order, k + 1, map, used) {
            return true;
        }
        used[w] = false;
        map[u] = usize::MAX;
    }
    false
}
