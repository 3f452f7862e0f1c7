//! Integer quaternions and the vector embeddings of `S_4` and `S_5` in `R^4`.
//!
//! A permutation is written as a canonical product of transpositions, each
//! transposition is replaced by a fixed integer quaternion, and the product
//! (taken left to right) gives the coordinates of the permutation's vector.
//! On `S_4` this realises the Cayley graph of the involutions as an
//! orthogonality graph; on `S_5` it produces the 120-vector set.

mod quat;

use std::collections::BTreeMap;

pub use quat::Quat;

use crate::cert::{RatMat, Rational};
use crate::error::{Error, Result};
use crate::graph::{orthogonality_graph, CliquePartition, Graph, InnerProduct, VectorSet};
use crate::perm::Perm;

/// The 24 vectors of the 4-dimensional Kochen–Specker orthogonality graph,
/// in table order. Consecutive runs of four are orthogonal bases.
pub const PIOVESAN_TABLE: [[i64; 4]; 24] = [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [0, 1, 1, 0],
    [1, 0, 0, -1],
    [1, 0, 0, 1],
    [0, 1, -1, 0],
    [1, 1, 1, 1],
    [1, -1, 1, -1],
    [1, -1, -1, 1],
    [1, 1, -1, -1],
    [1, -1, 0, 0],
    [1, 1, 0, 0],
    [0, 0, 1, 1],
    [0, 0, 1, -1],
    [-1, 1, 1, 1],
    [1, 1, 1, -1],
    [1, -1, 1, 1],
    [1, 1, -1, 1],
    [1, 0, 1, 0],
    [0, 1, 0, 1],
    [1, 0, -1, 0],
    [0, 1, 0, -1],
];

/// Image in `S_4` of each table vector under the explicit isomorphism onto
/// `Cay(S_4, involutions)`.
pub const CAYLEY_TABLE: [&str; 24] = [
    "(1)", "(12)(34)", "(13)(24)", "(14)(23)",
    "(23)", "(1243)", "(1342)", "(14)",
    "(124)", "(234)", "(143)", "(132)",
    "(1324)", "(1423)", "(34)", "(12)",
    "(142)", "(134)", "(123)", "(243)",
    "(1432)", "(13)", "(1234)", "(24)",
];

/// 1-based table positions whose vector is negated in the sign-flipped copy.
pub const FLIPPED_ROWS: [usize; 9] = [7, 10, 11, 13, 14, 17, 18, 20, 23];

/// Integer 4-vector assigned to each transposition of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TranspositionImages {
    degree: usize,
    images: BTreeMap<(usize, usize), [i64; 4]>,
}

impl TranspositionImages {
    /// Pairs are 1-based `(a, b)` in either order.
    pub fn new(degree: usize, pairs: &[((usize, usize), [i64; 4])]) -> Result<Self> {
        let mut images = BTreeMap::new();
        for &((a, b), v) in pairs {
            let t = Perm::transposition(degree, a, b)?;
            if v == [0; 4] {
                return Err(Error::ZeroVector(images.len()));
            }
            images.insert(t.as_transposition().expect("is a transposition"), v);
        }
        Ok(Self { degree, images })
    }

    /// The six transpositions of `S_4`.
    pub fn s4() -> Self {
        Self::new(4, &S4_IMAGES).expect("static table is valid")
    }

    /// `S_4` images plus `(15), (25), (35), (45)`.
    pub fn s5() -> Self {
        let mut pairs = S4_IMAGES.to_vec();
        pairs.extend_from_slice(&S5_EXTRA_IMAGES);
        Self::new(5, &pairs).expect("static table is valid")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn get(&self, a: usize, b: usize) -> Option<[i64; 4]> {
        self.images.get(&(a.min(b), a.max(b))).copied()
    }
}

const S4_IMAGES: [((usize, usize), [i64; 4]); 6] = [
    ((1, 4), [0, 1, -1, 0]),
    ((2, 3), [0, 1, 1, 0]),
    ((1, 3), [0, 1, 0, 1]),
    ((2, 4), [0, 1, 0, -1]),
    ((1, 2), [0, 0, 1, -1]),
    ((3, 4), [0, 0, 1, 1]),
];

const S5_EXTRA_IMAGES: [((usize, usize), [i64; 4]); 4] = [
    ((1, 5), [0, 1, -1, 1]),
    ((2, 5), [0, 1, 1, -1]),
    ((3, 5), [0, 1, 1, 1]),
    ((4, 5), [0, -1, 1, 1]),
];

/// Canonical product of transpositions: each cycle `(a1 a2 … am)` becomes
/// `(a1 am)(a1 a(m-1))…(a1 a2)`, cycles in ascending order of least point.
/// Composing the output right to left gives back `p`.
pub fn transposition_decomposition(p: &Perm) -> Vec<Perm> {
    let n = p.degree();
    p.cycles()
        .iter()
        .flat_map(|c| {
            c[1..]
                .iter()
                .rev()
                .map(|&x| Perm::transposition(n, c[0], x).expect("valid points"))
                .collect::<Vec<_>>()
        })
        .collect()
}

pub fn perm_to_quat(p: &Perm, imgs: &TranspositionImages) -> Result<Quat> {
    if p.degree() != imgs.degree() {
        return Err(Error::DegreeMismatch(p.degree(), imgs.degree()));
    }
    transposition_decomposition(p)
        .iter()
        .try_fold(Quat::ONE, |acc, t| {
            let (a, b) = t.as_transposition().expect("decomposition yields transpositions");
            imgs.get(a, b)
                .map(|v| acc * Quat::from_coeffs(v))
                .ok_or_else(|| Error::MissingTransposition(t.to_string()))
        })
}

/// Coefficients of the quaternion product of the canonical decomposition.
pub fn perm_to_vector(p: &Perm, imgs: &TranspositionImages) -> Result<[i64; 4]> {
    perm_to_quat(p, imgs).map(Quat::coeffs)
}

fn group_vectors(n: usize, imgs: &TranspositionImages) -> VectorSet {
    let elems = Perm::all(n);
    let vectors = elems
        .iter()
        .map(|p| perm_to_vector(p, imgs).map(|v| v.to_vec()))
        .collect::<Result<Vec<_>>>()
        .expect("every transposition has an image");
    VectorSet::new(4, vectors)
        .and_then(|vs| vs.with_tags(elems.iter().map(Perm::to_string).collect()))
        .expect("embedding produced a zero vector")
}

/// One vector per element of `S_4`, in lexicographic permutation order.
pub fn s4_vectors() -> VectorSet {
    group_vectors(4, &TranspositionImages::s4())
}

/// One vector per element of `S_5`, in lexicographic permutation order.
pub fn s5_vectors() -> VectorSet {
    group_vectors(5, &TranspositionImages::s5())
}

pub fn g120_graph() -> Graph {
    orthogonality_graph(&s5_vectors(), InnerProduct::Rational).expect("rational form")
}

pub fn piovesan_vectors() -> VectorSet {
    VectorSet::new(4, PIOVESAN_TABLE.iter().map(|v| v.to_vec()).collect())
        .and_then(|vs| vs.with_tags((1..=24).map(|i| i.to_string()).collect()))
        .expect("static table is valid")
}

pub fn gp_graph() -> Graph {
    orthogonality_graph(&piovesan_vectors(), InnerProduct::Rational).expect("rational form")
}

/// The six table rows as a partition into 4-cliques.
pub fn gp_table_partition() -> CliquePartition {
    CliquePartition::new((0..6).map(|r| (4 * r..4 * r + 4).collect()).collect())
        .expect("six parts of four")
}

/// Table position `i` mapped to the index of its permutation in
/// `Perm::all(4)` (the vertex order of `cayley_graph(4, …)`).
pub fn gp_cayley_map() -> Vec<usize> {
    let elems = Perm::all(4);
    CAYLEY_TABLE
        .iter()
        .map(|s| {
            let p = Perm::parse_cycles(s, 4).expect("static table parses");
            elems.binary_search(&p).expect("element of S_4")
        })
        .collect()
}

/// Scales vector `i` by `signs[i]` (any nonzero integer).
pub fn sign_flip(vs: &VectorSet, signs: &[i64]) -> Result<VectorSet> {
    if signs.len() != vs.len() {
        return Err(Error::SignLength {
            expected: vs.len(),
            found: signs.len(),
        });
    }
    if let Some(i) = signs.iter().position(|&s| s == 0) {
        return Err(Error::ZeroSign(i));
    }
    let vectors = vs
        .vectors()
        .iter()
        .zip(signs)
        .map(|(v, s)| v.iter().map(|x| x * s).collect())
        .collect();
    let out = VectorSet::new(vs.dim(), vectors)?;
    match vs.tags() {
        Some(t) => out.with_tags(t.to_vec()),
        None => Ok(out),
    }
}

/// Per-row signs producing the sign-flipped copy of the table.
pub fn piovesan_flip_signs() -> Vec<i64> {
    (1..=24)
        .map(|i| if FLIPPED_ROWS.contains(&i) { -1 } else { 1 })
        .collect()
}

/// Basis of the rational vectors orthogonal to every constraint. An empty
/// basis means only the zero vector qualifies.
pub fn extension_nullspace(constraints: &[[i64; 4]]) -> Vec<Vec<Rational>> {
    if constraints.is_empty() {
        return RatMat::identity(4).to_rows();
    }
    let rows: Vec<Vec<i64>> = constraints.iter().map(|c| c.to_vec()).collect();
    RatMat::from_i64(&rows).nullspace()
}

/// Images of the transpositions a vector for `(16)` would have to be
/// orthogonal to: `(23), (34), (24), (15), (25), (35), (45)`.
pub fn s6_extension_constraints() -> Vec<[i64; 4]> {
    let imgs = TranspositionImages::s5();
    [(2, 3), (3, 4), (2, 4), (1, 5), (2, 5), (3, 5), (4, 5)]
        .iter()
        .map(|&(a, b)| imgs.get(a, b).expect("image present"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cert::rat;
    use crate::graph::dot;
    use crate::perm::involutions;

    fn p(s: &str, n: usize) -> Perm {
        Perm::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn canonical_decomposition() {
        assert_eq!(transposition_decomposition(&p("(123)", 3)), vec![p("(13)", 3), p("(12)", 3)]);
        assert!(transposition_decomposition(&Perm::identity(4)).is_empty());
        assert_eq!(
            transposition_decomposition(&p("(12)(34)", 4)),
            vec![p("(12)", 4), p("(34)", 4)]
        );
    }

    #[test]
    fn decomposition_multiplies_back() {
        for g in Perm::all(5) {
            let prod = transposition_decomposition(&g)
                .iter()
                .fold(Perm::identity(5), |acc, t| acc.compose(t).unwrap());
            assert_eq!(prod, g);
        }
    }

    #[test]
    fn anchor_vectors() {
        let s4 = TranspositionImages::s4();
        assert_eq!(perm_to_vector(&Perm::identity(4), &s4).unwrap(), [1, 0, 0, 0]);
        assert_eq!(perm_to_vector(&p("(12)(34)", 4), &s4).unwrap(), [0, 2, 0, 0]);
        assert_eq!(perm_to_vector(&p("(14)", 4), &s4).unwrap(), [0, 1, -1, 0]);
        let s5 = TranspositionImages::s5();
        assert_eq!(perm_to_vector(&p("(15)", 5), &s5).unwrap(), [0, 1, -1, 1]);
        assert_eq!(perm_to_vector(&p("(25)", 5), &s5).unwrap(), [0, 1, 1, -1]);
        assert_eq!(perm_to_vector(&p("(35)", 5), &s5).unwrap(), [0, 1, 1, 1]);
        assert_eq!(perm_to_vector(&p("(45)", 5), &s5).unwrap(), [0, -1, 1, 1]);
    }

    #[test]
    fn missing_image_is_reported() {
        let partial = TranspositionImages::new(4, &[((1, 2), [0, 0, 1, -1])]).unwrap();
        assert!(matches!(
            perm_to_vector(&p("(34)", 4), &partial),
            Err(Error::MissingTransposition(_))
        ));
        assert!(TranspositionImages::new(4, &[((1, 2), [0; 4])]).is_err());
    }

    #[test]
    fn s4_orthogonality_is_the_involution_relation() {
        let imgs = TranspositionImages::s4();
        let c = involutions(4);
        let elems = Perm::all(4);
        for a in &elems {
            for b in &elems {
                let va = perm_to_vector(a, &imgs).unwrap();
                let vb = perm_to_vector(b, &imgs).unwrap();
                let rel = c.contains(&a.compose(&b.inverse()).unwrap());
                assert_eq!(dot(&va, &vb) == 0, rel, "{a} {b}");
            }
        }
    }

    #[test]
    fn piovesan_table() {
        let vs = piovesan_vectors();
        assert_eq!(vs.get(8), [1, 1, 1, 1]);
        assert!(!vs.has_parallel_pair());
        let g = gp_graph();
        assert_eq!(g.regular_degree(), Some(9));
        assert!(crate::graph::verify_clique_partition(&g, &gp_table_partition()));
    }

    #[test]
    fn sign_flip_keeps_graph() {
        let vs = piovesan_vectors();
        let flipped = sign_flip(&vs, &piovesan_flip_signs()).unwrap();
        assert_eq!(flipped.get(6), [-1, 0, 0, -1]);
        assert_eq!(orthogonality_graph(&flipped, InnerProduct::Rational).unwrap(), gp_graph());
        assert_eq!(sign_flip(&vs, &[1; 24]).unwrap(), vs);
        assert!(matches!(sign_flip(&vs, &[1; 3]), Err(Error::SignLength { .. })));
        let mut zero = vec![1; 24];
        zero[5] = 0;
        assert_eq!(sign_flip(&vs, &zero), Err(Error::ZeroSign(5)));
    }

    #[test]
    fn nullspace_for_15() {
        let imgs = TranspositionImages::s4();
        let cons: Vec<[i64; 4]> = [(2, 3), (2, 4), (3, 4)]
            .iter()
            .map(|&(a, b)| imgs.get(a, b).unwrap())
            .collect();
        let basis = extension_nullspace(&cons);
        let expect = |v: [i64; 4]| v.iter().map(|&x| rat(x)).collect::<Vec<_>>();
        assert_eq!(basis, vec![expect([1, 0, 0, 0]), expect([0, 1, -1, 1])]);
    }

    #[test]
    fn nullspace_edge_cases() {
        assert_eq!(extension_nullspace(&[]).len(), 4);
        // every transposition image is a pure quaternion, so the real unit
        // survives the seven constraints
        let basis = extension_nullspace(&s6_extension_constraints());
        assert_eq!(basis, vec![vec![rat(1), rat(0), rat(0), rat(0)]]);
        let mut with_identity = s6_extension_constraints();
        with_identity.push([1, 0, 0, 0]);
        assert!(extension_nullspace(&with_identity).is_empty());
    }

    #[test]
    fn s5_vectors_are_distinct_lines() {
        let vs = s5_vectors();
        assert_eq!(vs.len(), 120);
        assert!(!vs.has_parallel_pair());
    }
}
