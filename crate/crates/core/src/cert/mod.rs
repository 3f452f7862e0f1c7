//! Quantum coclique and quantum colouring certificates.
//!
//! A certificate is a `|V| x s` grid of `d x d` rational projectors. Only
//! real symmetric rational entries are supported; every construction used
//! here (rank-one projectors of integer vectors, `0`, `I`) is of that form.

mod json;
pub mod matrix;
mod witness;

use serde::{Deserialize, Serialize};

pub use matrix::{rat, ratio, RatMat, Rational};
pub use witness::{
    alpha_gap_witness, chi_gap_witness, entries_orthogonality_graph, g_map, h_map, EntriesGraph,
    GapWitness,
};

use crate::error::{Error, Result};
use crate::graph::{dot, CliquePartition, Graph, VectorSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CertKind {
    Coclique,
    Coloring,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    kind: CertKind,
    d: usize,
    grid: Vec<Vec<RatMat>>,
}

/// `v v^T / <v, v>`.
pub fn projector_from_vector(v: &[i64]) -> Result<RatMat> {
    let norm = dot(v, v);
    if norm == 0 {
        return Err(Error::ZeroVector(0));
    }
    let u: Vec<Rational> = v.iter().map(|&x| rat(x)).collect();
    Ok(RatMat::outer(&u, &u).scale(&ratio(1, norm)))
}

impl Certificate {
    /// Checks only the shape: a rectangular grid of `d x d` matrices.
    pub fn new(kind: CertKind, d: usize, grid: Vec<Vec<RatMat>>) -> Result<Self> {
        let s = grid.first().map_or(0, Vec::len);
        for (v, row) in grid.iter().enumerate() {
            if row.len() != s {
                return Err(Error::InvalidCertificate(format!(
                    "row {v} has {} entries, expected {s}",
                    row.len()
                )));
            }
            if let Some(i) = row.iter().position(|m| m.rows() != d || m.cols() != d) {
                return Err(Error::InvalidCertificate(format!("entry ({v}, {i}) is not {d}x{d}")));
            }
        }
        Ok(Self { kind, d, grid })
    }

    pub fn kind(&self) -> CertKind {
        self.kind
    }

    /// Dimension of the projectors.
    pub fn d(&self) -> usize {
        self.d
    }

    /// Number of vertices (grid rows).
    pub fn n(&self) -> usize {
        self.grid.len()
    }

    /// Number of columns.
    pub fn s(&self) -> usize {
        self.grid.first().map_or(0, Vec::len)
    }

    pub fn entry(&self, v: usize, i: usize) -> &RatMat {
        &self.grid[v][i]
    }

    pub fn grid(&self) -> &[Vec<RatMat>] {
        &self.grid
    }

    /// Positions `(v, i)` of the nonzero entries, row by row.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (v, row) in self.grid.iter().enumerate() {
            for (i, m) in row.iter().enumerate() {
                if !m.is_zero() {
                    out.push((v, i));
                }
            }
        }
        out
    }
}

/// Coclique certificate with column `j` holding the projectors of part `j`.
pub fn certificate_from_clique_partition(vs: &VectorSet, cp: &CliquePartition) -> Result<Certificate> {
    let n = vs.len();
    let d = vs.dim();
    let owner = cp.part_index(n);
    let mut seen = 0;
    for (j, part) in cp.parts.iter().enumerate() {
        if part.len() != d {
            return Err(Error::InvalidCertificate(format!(
                "part {j} has {} vectors in dimension {d}",
                part.len()
            )));
        }
        for (a, &u) in part.iter().enumerate() {
            if u >= n || owner[u] != Some(j) {
                return Err(Error::InvalidPartition(format!("vertex {u} of part {j}")));
            }
            for &w in &part[a + 1..] {
                if dot(vs.get(u), vs.get(w)) != 0 {
                    return Err(Error::InvalidCertificate(format!(
                        "part {j}: vectors {u} and {w} are not orthogonal"
                    )));
                }
            }
        }
        seen += part.len();
    }
    if seen != n {
        return Err(Error::InvalidPartition(format!("covers {seen} of {n} vertices")));
    }
    let zero = RatMat::zeros(d, d);
    let mut grid = vec![vec![zero; cp.len()]; n];
    for (v, row) in grid.iter_mut().enumerate() {
        let j = owner[v].expect("checked above");
        row[j] = projector_from_vector(vs.get(v))?;
    }
    Certificate::new(CertKind::Coclique, d, grid)
}

/// The `d = 1` certificate of a classical coclique: vertex `K[t]` has `1`
/// in column `t`, every other entry is `0`.
pub fn classical_certificate(g: &Graph, coclique: &[usize]) -> Result<Certificate> {
    let mut k = coclique.to_vec();
    k.sort_unstable();
    k.dedup();
    for &v in &k {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { index: v, n: g.n() });
        }
    }
    if let Some((u, v)) = g.first_edge_within(&k) {
        return Err(Error::NotCoclique(u, v));
    }
    let mut grid = vec![vec![RatMat::zeros(1, 1); k.len()]; g.n()];
    for (t, &v) in k.iter().enumerate() {
        grid[v][t] = RatMat::identity(1);
    }
    Certificate::new(CertKind::Coclique, 1, grid)
}

/// The `d = 1` colouring certificate of a classical colouring.
pub fn classical_coloring_certificate(g: &Graph, colors: &[usize]) -> Result<Certificate> {
    if colors.len() != g.n() {
        return Err(Error::InvalidCertificate(format!(
            "{} colours for {} vertices",
            colors.len(),
            g.n()
        )));
    }
    if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| colors[u] == colors[v]) {
        return Err(Error::InvalidCertificate(format!("edge {u}-{v} is monochromatic")));
    }
    let s = colors.iter().max().map_or(0, |c| c + 1);
    let mut grid = vec![vec![RatMat::zeros(1, 1); s]; g.n()];
    for (v, &c) in colors.iter().enumerate() {
        grid[v][c] = RatMat::identity(1);
    }
    Certificate::new(CertKind::Coloring, 1, grid)
}

/// Removes column `j` of a coclique certificate.
pub fn drop_column(c: &Certificate, j: usize) -> Result<Certificate> {
    if c.kind != CertKind::Coclique {
        return Err(Error::InvalidCertificate("columns can only be dropped from coclique certificates".into()));
    }
    if j >= c.s() {
        return Err(Error::ColumnOutOfRange { index: j, cols: c.s() });
    }
    if c.s() < 2 {
        return Err(Error::InvalidCertificate("cannot drop the only column".into()));
    }
    let grid = c
        .grid
        .iter()
        .map(|row| {
            let mut r = row.clone();
            r.remove(j);
            r
        })
        .collect();
    Certificate::new(c.kind, c.d, grid)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum Violation {
    /// Entry is not symmetric and idempotent.
    NotProjector { v: usize, i: usize },
    /// Column `i` does not sum to the identity (coclique certificates).
    ColumnSum { i: usize },
    /// Row `v` does not sum to the identity (colouring certificates).
    RowSum { v: usize },
    /// `P_vi P_vj != 0` for `i != j`.
    RowOrthogonality { v: usize, i: usize, j: usize },
    /// `P_ui P_vj != 0` for adjacent `u, v` and `i != j`.
    CrossOrthogonality { u: usize, v: usize, i: usize, j: usize },
    /// `P_ui P_vi != 0` for adjacent `u, v`.
    EdgeOrthogonality { u: usize, v: usize, i: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

/// Checks every defining condition of the certificate's kind exactly and
/// reports all violations.
pub fn verify(c: &Certificate, g: &Graph) -> Result<Verdict> {
    if c.n() != g.n() {
        return Err(Error::InvalidCertificate(format!(
            "certificate has {} rows for a graph on {} vertices",
            c.n(),
            g.n()
        )));
    }
    let n = c.n();
    let s = c.s();
    let d = c.d;
    let mut out = Vec::new();
    let nz: Vec<Vec<usize>> = c
        .grid
        .iter()
        .map(|row| (0..s).filter(|&i| !row[i].is_zero()).collect())
        .collect();
    let is_nz = |v: usize, i: usize| nz[v].binary_search(&i).is_ok();

    for (v, row) in nz.iter().enumerate() {
        for &i in row {
            if !c.grid[v][i].is_projector() {
                out.push(Violation::NotProjector { v, i });
            }
        }
    }

    let identity = RatMat::identity(d);
    match c.kind {
        CertKind::Coclique => {
            for i in 0..s {
                let mut sum = RatMat::zeros(d, d);
                for v in (0..n).filter(|&v| is_nz(v, i)) {
                    sum = &sum + &c.grid[v][i];
                }
                if sum != identity {
                    out.push(Violation::ColumnSum { i });
                }
            }
        }
        CertKind::Coloring => {
            for (v, row) in nz.iter().enumerate() {
                let mut sum = RatMat::zeros(d, d);
                for &i in row {
                    sum = &sum + &c.grid[v][i];
                }
                if sum != identity {
                    out.push(Violation::RowSum { v });
                }
            }
        }
    }

    for (v, row) in nz.iter().enumerate() {
        for (a, &i) in row.iter().enumerate() {
            for &j in &row[a + 1..] {
                if !(&c.grid[v][i] * &c.grid[v][j]).is_zero() {
                    out.push(Violation::RowOrthogonality { v, i, j });
                }
            }
        }
    }

    for (u, v) in g.edges() {
        for &i in &nz[u] {
            for &j in &nz[v] {
                let clash = match c.kind {
                    CertKind::Coclique => i != j,
                    CertKind::Coloring => i == j,
                };
                if !clash {
                    continue;
                }
                if !(&c.grid[u][i] * &c.grid[v][j]).is_zero() {
                    out.push(match c.kind {
                        CertKind::Coclique => Violation::CrossOrthogonality { u, v, i, j },
                        CertKind::Coloring => Violation::EdgeOrthogonality { u, v, i },
                    });
                }
            }
        }
    }

    Ok(Verdict {
        valid: out.is_empty(),
        violations: out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::{gp_graph, gp_table_partition, piovesan_vectors};

    fn gp_cert() -> Certificate {
        certificate_from_clique_partition(&piovesan_vectors(), &gp_table_partition()).unwrap()
    }

    #[test]
    fn projector_examples() {
        assert_eq!(projector_from_vector(&[1, 0]).unwrap(), RatMat::from_i64(&[vec![1, 0], vec![0, 0]]));
        let h = ratio(1, 2);
        assert_eq!(
            projector_from_vector(&[1, 1]).unwrap(),
            RatMat::from_rows(vec![vec![h.clone(), h.clone()], vec![h.clone(), h]])
        );
        let q = projector_from_vector(&[1, 1, 1, 1]).unwrap();
        assert!(q.to_rows().iter().flatten().all(|x| *x == ratio(1, 4)));
        assert_eq!(projector_from_vector(&[0, 0]), Err(Error::ZeroVector(0)));
    }

    #[test]
    fn gp_certificate_is_valid() {
        let c = gp_cert();
        assert_eq!((c.n(), c.s(), c.d()), (24, 6, 4));
        let v = verify(&c, &gp_graph()).unwrap();
        assert!(v.valid, "{:?}", v.violations);
    }

    #[test]
    fn swapped_entries_are_caught() {
        let g = gp_graph();
        let mut c = gp_cert();
        // move vertex 0 into column 1 and vertex 4 into column 0
        assert!(g.has_edge(0, 4));
        let p0 = c.grid[0][0].clone();
        let p4 = c.grid[4][1].clone();
        c.grid[0][0] = RatMat::zeros(4, 4);
        c.grid[0][1] = p0;
        c.grid[4][1] = RatMat::zeros(4, 4);
        c.grid[4][0] = p4;
        let v = verify(&c, &g).unwrap();
        assert!(!v.valid);
        assert_eq!(v.violations, vec![Violation::ColumnSum { i: 0 }, Violation::ColumnSum { i: 1 }]);
    }

    #[test]
    fn cross_condition_is_checked() {
        // K2 with both vertices carrying the same line in different columns
        let g = Graph::complete(2);
        let p = projector_from_vector(&[1, 0]).unwrap();
        let q = projector_from_vector(&[0, 1]).unwrap();
        let c = Certificate::new(
            CertKind::Coclique,
            2,
            vec![vec![p.clone(), q.clone()], vec![q, p]],
        )
        .unwrap();
        let v = verify(&c, &g).unwrap();
        assert!(v.violations.contains(&Violation::CrossOrthogonality { u: 0, v: 1, i: 0, j: 1 }));
        assert!(!v.violations.iter().any(|x| matches!(x, Violation::ColumnSum { .. })));
    }

    #[test]
    fn two_isolated_vertices() {
        let vs = VectorSet::new(2, vec![vec![1, 0], vec![0, 1]]).unwrap();
        let cp = CliquePartition::new(vec![vec![0, 1]]).unwrap();
        let c = certificate_from_clique_partition(&vs, &cp).unwrap();
        assert_eq!(c.s(), 1);
        assert!(verify(&c, &Graph::empty(2)).unwrap().valid);
    }

    #[test]
    fn non_orthogonal_part_rejected() {
        let vs = VectorSet::new(2, vec![vec![1, 0], vec![1, 1]]).unwrap();
        let cp = CliquePartition::new(vec![vec![0, 1]]).unwrap();
        assert!(certificate_from_clique_partition(&vs, &cp).is_err());
    }

    #[test]
    fn classical_certificates() {
        let c5 = Graph::cycle(5);
        let c = classical_certificate(&c5, &[0, 2]).unwrap();
        assert_eq!((c.n(), c.s(), c.d()), (5, 2, 1));
        assert!(verify(&c, &c5).unwrap().valid);
        assert!(verify(&classical_certificate(&Graph::complete(3), &[0]).unwrap(), &Graph::complete(3))
            .unwrap()
            .valid);
        assert_eq!(classical_certificate(&c5, &[0, 1]), Err(Error::NotCoclique(0, 1)));
    }

    #[test]
    fn classical_coloring() {
        let c5 = Graph::cycle(5);
        let c = classical_coloring_certificate(&c5, &[0, 1, 0, 1, 2]).unwrap();
        assert!(verify(&c, &c5).unwrap().valid);
        assert!(classical_coloring_certificate(&c5, &[0, 0, 1, 0, 1]).is_err());
    }

    #[test]
    fn dropping_columns_keeps_validity() {
        let g = gp_graph();
        let mut c = gp_cert();
        while c.s() > 1 {
            c = drop_column(&c, 0).unwrap();
            assert!(verify(&c, &g).unwrap().valid);
        }
        assert!(drop_column(&c, 0).is_err());
        assert_eq!(drop_column(&gp_cert(), 6), Err(Error::ColumnOutOfRange { index: 6, cols: 6 }));
    }

    #[test]
    fn row_count_must_match() {
        assert!(verify(&gp_cert(), &Graph::complete(3)).is_err());
    }
}
