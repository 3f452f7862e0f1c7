use super::{max_clique, Meter, SolveOptions, SolveReport, Witness};
use crate::error::Result;
use crate::graph::Graph;

pub fn is_proper_coloring(g: &Graph, colors: &[usize]) -> bool {
    colors.len() == g.n() && g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
}

/// Exact chromatic number.
///
/// Starts from the clique number and tests `k`-colourability for increasing
/// `k` by backtracking in saturation-degree order, stopping at the first
/// success or at the greedy DSATUR upper bound, whichever comes first.
/// A `ub_hint` is tested first and splits the range; it never changes the
/// answer.
pub fn chromatic_number(g: &Graph, ub_hint: Option<usize>, opts: &SolveOptions) -> Result<SolveReport> {
    let meter = Meter::new(opts.budget);
    let n = g.n();
    if n == 0 {
        return Ok(SolveReport {
            value: 0,
            witness: Witness::Coloring(Vec::new()),
            nodes_explored: 0,
            elapsed: meter.elapsed(),
        });
    }
    let clique = max_clique(g, opts)?;
    let mut lower = clique.value;
    let greedy = dsatur_greedy(g);
    let mut upper = greedy.iter().max().map_or(0, |c| c + 1);
    let mut best = greedy;

    let colorable = |k: usize, upper: usize| -> Result<Option<Vec<usize>>> {
        let mut colors = vec![usize::MAX; n];
        match try_color(g, k, &mut colors, 0, &meter) {
            Some(true) => Ok(Some(colors)),
            Some(false) => Ok(None),
            None => Err(meter.exhausted(k, upper)),
        }
    };
    if let Some(h) = ub_hint.filter(|&h| lower <= h && h < upper) {
        match colorable(h, upper)? {
            Some(colors) => {
                upper = h;
                best = colors;
            }
            None => lower = h + 1,
        }
    }
    let mut found = None;
    for k in lower..upper {
        if let Some(colors) = colorable(k, upper)? {
            found = Some((k, colors));
            break;
        }
    }
    let (value, colors) = found.unwrap_or((upper, best));
    Ok(SolveReport {
        value,
        witness: Witness::Coloring(colors),
        nodes_explored: meter.nodes() + clique.nodes_explored,
        elapsed: meter.elapsed(),
    })
}

fn saturation(g: &Graph, colors: &[usize], v: usize) -> (u64, usize) {
    let mut mask = 0u64;
    let mut free = 0;
    for u in g.neighbors(v).iter() {
        match colors[u] {
            usize::MAX => free += 1,
            c => mask |= 1 << (c % 64),
        }
    }
    (mask, free)
}

/// Uncoloured vertex of maximum saturation, then most uncoloured neighbours,
/// then least index.
fn pick(g: &Graph, colors: &[usize]) -> Option<(usize, u64)> {
    (0..g.n())
        .filter(|&v| colors[v] == usize::MAX)
        .map(|v| {
            let (mask, free) = saturation(g, colors, v);
            (v, mask, mask.count_ones(), free)
        })
        .max_by(|a, b| (a.2, a.3, b.0).cmp(&(b.2, b.3, a.0)))
        .map(|(v, mask, _, _)| (v, mask))
}

fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let mut colors = vec![usize::MAX; g.n()];
    while let Some((v, mask)) = pick(g, &colors) {
        let c = (0..).find(|&c| c >= 64 || mask & (1 << c) == 0).expect("unbounded range");
        colors[v] = if c < 64 { c } else { first_free(g, &colors, v) };
    }
    colors
}

fn first_free(g: &Graph, colors: &[usize], v: usize) -> usize {
    let used: Vec<usize> = g.neighbors(v).iter().map(|u| colors[u]).collect();
    (0..).find(|c| !used.contains(c)).expect("unbounded range")
}

/// `Some(true)` if the uncoloured vertices admit a colouring with `k`
/// colours extending `colors`, `None` if the budget ran out.
fn try_color(g: &Graph, k: usize, colors: &mut [usize], used: usize, meter: &Meter) -> Option<bool> {
    if !meter.tick() {
        return None;
    }
    let Some((v, _)) = pick(g, colors) else {
        return Some(true);
    };
    let limit = (used + 1).min(k);
    for c in 0..limit {
        if g.neighbors(v).iter().any(|u| colors[u] == c) {
            continue;
        }
        colors[v] = c;
        match try_color(g, k, colors, used.max(c + 1), meter) {
            Some(false) => {}
            other => return other,
        }
    }
    colors[v] = usize::MAX;
    Some(false)
}
