use num_traits::Zero;
use serde::Serialize;

use super::{projector_from_vector, verify, CertKind, Certificate, RatMat, Rational};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solve::{coclique_transversal, SolveOptions};

/// Orthogonality graph of the nonzero entries of a certificate.
#[derive(Clone, Debug)]
pub struct EntriesGraph {
    pub graph: Graph,
    /// Grid position `(v, i)` of each vertex.
    pub entries: Vec<(usize, usize)>,
    /// Vertex groups forming the natural clique cover: the columns of a
    /// coclique certificate, the rows of a colouring certificate.
    pub groups: Vec<Vec<usize>>,
}

/// One vertex per nonzero entry, adjacent when `tr(PQ) = 0`.
pub fn entries_orthogonality_graph(c: &Certificate) -> EntriesGraph {
    let entries = c.nonzero_entries();
    let mut graph = Graph::empty(entries.len());
    for a in 0..entries.len() {
        let (u, i) = entries[a];
        for (b, &(v, j)) in entries.iter().enumerate().skip(a + 1) {
            if c.entry(u, i).trace_product(c.entry(v, j)).is_zero() {
                graph.link(a, b);
            }
        }
    }
    let key = |&(v, i): &(usize, usize)| match c.kind() {
        CertKind::Coclique => i,
        CertKind::Coloring => v,
    };
    let count = match c.kind() {
        CertKind::Coclique => c.s(),
        CertKind::Coloring => c.n(),
    };
    let mut groups = vec![Vec::new(); count];
    for (x, e) in entries.iter().enumerate() {
        groups[key(e)].push(x);
    }
    let labels = entries.iter().map(|(v, i)| format!("P[{v},{i}]")).collect();
    EntriesGraph {
        graph: graph.with_labels(labels).expect("one label per entry"),
        entries,
        groups,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "witness", rename_all = "snake_case")]
pub enum GapWitness {
    /// Every transversal of the entry cliques contains two orthogonal
    /// entries: the entries form a projective Kochen–Specker graph.
    KochenSpecker,
    /// A classical coclique of size `s`, sorted.
    Coclique(Vec<usize>),
    /// A coclique transversal exists but every one repeats a row, so it
    /// only yields this smaller classical coclique.
    Partial(Vec<usize>),
    /// A proper classical colouring with at most `s` colours.
    Coloring(Vec<usize>),
}

fn check(g: &Graph, c: &Certificate, kind: CertKind) -> Result<()> {
    if c.kind() != kind {
        return Err(Error::InvalidCertificate(format!("expected a {kind:?} certificate")));
    }
    let verdict = verify(c, g)?;
    if !verdict.valid {
        return Err(Error::InvalidCertificate(format!(
            "{} violated conditions",
            verdict.violations.len()
        )));
    }
    Ok(())
}

/// Classical coclique recovered from a coclique certificate, or the
/// Kochen–Specker verdict.
///
/// A transversal of the column cliques that is a coclique of the entries
/// graph maps back to the vertex set `{v : P_vi in T}`, which is a coclique
/// of `g`. When the first transversal found repeats a row, the search is
/// repeated with entries of one row made mutually exclusive.
pub fn alpha_gap_witness(g: &Graph, c: &Certificate, opts: &SolveOptions) -> Result<GapWitness> {
    check(g, c, CertKind::Coclique)?;
    let eg = entries_orthogonality_graph(c);
    let Some(t) = coclique_transversal(&eg.graph, &eg.groups, opts)? else {
        return Ok(GapWitness::KochenSpecker);
    };
    let rows = |t: &[usize]| {
        let mut k: Vec<usize> = t.iter().map(|&x| eg.entries[x].0).collect();
        k.sort_unstable();
        k.dedup();
        k
    };
    let k = rows(&t);
    if k.len() == c.s() {
        debug_assert!(g.is_coclique(&k));
        return Ok(GapWitness::Coclique(k));
    }

    let mut strict = eg.graph.clone();
    for a in 0..eg.entries.len() {
        for b in a + 1..eg.entries.len() {
            if eg.entries[a].0 == eg.entries[b].0 {
                strict.link(a, b);
            }
        }
    }
    Ok(match coclique_transversal(&strict, &eg.groups, opts)? {
        Some(t) => GapWitness::Coclique(rows(&t)),
        None => GapWitness::Partial(k),
    })
}

/// Classical colouring recovered from a colouring certificate, or the
/// Kochen–Specker verdict. A coclique transversal of the row cliques picks
/// one colour per vertex, and orthogonality across edges makes it proper.
pub fn chi_gap_witness(g: &Graph, c: &Certificate, opts: &SolveOptions) -> Result<GapWitness> {
    check(g, c, CertKind::Coloring)?;
    let eg = entries_orthogonality_graph(c);
    Ok(match coclique_transversal(&eg.graph, &eg.groups, opts)? {
        Some(t) => {
            let mut colors = vec![0; c.n()];
            for x in t {
                let (v, i) = eg.entries[x];
                colors[v] = i;
            }
            GapWitness::Coloring(colors)
        }
        None => GapWitness::KochenSpecker,
    })
}

/// `v v^T / <v, v>`.
pub fn g_map(v: &[i64]) -> Result<RatMat> {
    projector_from_vector(v)
}

/// `P e_k` for the first standard basis vector with `P e_k != 0`.
pub fn h_map(p: &RatMat) -> Result<Vec<Rational>> {
    (0..p.cols())
        .find(|&k| (0..p.rows()).any(|i| !p.get(i, k).is_zero()))
        .map(|k| (0..p.rows()).map(|i| p.get(i, k).clone()).collect())
        .ok_or(Error::ZeroVector(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cert::{certificate_from_clique_partition, classical_certificate, classical_coloring_certificate, rat};
    use crate::embed::{gp_graph, gp_table_partition, piovesan_vectors};

    #[test]
    fn gp_entries_graph() {
        let c = certificate_from_clique_partition(&piovesan_vectors(), &gp_table_partition()).unwrap();
        let eg = entries_orthogonality_graph(&c);
        assert_eq!(eg.graph.n(), 24);
        assert_eq!(eg.groups.len(), 6);
        for grp in &eg.groups {
            assert_eq!(grp.len(), 4);
            assert!(eg.graph.is_clique(grp));
        }
        assert_eq!(
            alpha_gap_witness(&gp_graph(), &c, &SolveOptions::default()).unwrap(),
            GapWitness::KochenSpecker
        );
    }

    #[test]
    fn classical_round_trip() {
        let c5 = Graph::cycle(5);
        let c = classical_certificate(&c5, &[0, 2]).unwrap();
        let eg = entries_orthogonality_graph(&c);
        assert_eq!(eg.graph.n(), 2);
        assert_eq!(eg.graph.edge_count(), 0);
        assert_eq!(
            alpha_gap_witness(&c5, &c, &SolveOptions::default()).unwrap(),
            GapWitness::Coclique(vec![0, 2])
        );
    }

    #[test]
    fn single_identity_entry() {
        let g = Graph::empty(1);
        let c = classical_certificate(&g, &[0]).unwrap();
        let eg = entries_orthogonality_graph(&c);
        assert_eq!((eg.graph.n(), eg.graph.edge_count()), (1, 0));
    }

    #[test]
    fn coloring_side() {
        let c5 = Graph::cycle(5);
        let c = classical_coloring_certificate(&c5, &[0, 1, 0, 1, 2]).unwrap();
        assert_eq!(
            chi_gap_witness(&c5, &c, &SolveOptions::default()).unwrap(),
            GapWitness::Coloring(vec![0, 1, 0, 1, 2])
        );
        assert!(alpha_gap_witness(&c5, &c, &SolveOptions::default()).is_err());
    }

    #[test]
    fn invalid_certificate_rejected() {
        let c = classical_certificate(&Graph::empty(2), &[0, 1]).unwrap();
        assert!(alpha_gap_witness(&Graph::complete(2), &c, &SolveOptions::default()).is_err());
    }

    #[test]
    fn maps() {
        assert_eq!(g_map(&[1, 0]).unwrap(), RatMat::from_i64(&[vec![1, 0], vec![0, 0]]));
        let p = RatMat::from_i64(&[vec![0, 0], vec![0, 1]]);
        assert_eq!(h_map(&p).unwrap(), vec![rat(0), rat(1)]);
        assert!(h_map(&RatMat::zeros(2, 2)).is_err());
        assert!(g_map(&[0, 0, 0]).is_err());
    }
}
