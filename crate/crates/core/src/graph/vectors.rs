use super::Graph;
use crate::error::{Error, Result};
use crate::field::is_odd_prime;

/// Which bilinear form decides orthogonality.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InnerProduct {
    /// The ordinary dot product over the rationals.
    Rational,
    /// The dot product reduced modulo an odd prime.
    ModP(u64),
}

/// Nonzero integer vectors of a common dimension. Duplicates are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorSet {
    dim: usize,
    vectors: Vec<Vec<i64>>,
    tags: Option<Vec<String>>,
}

impl VectorSet {
    pub fn new(dim: usize, vectors: Vec<Vec<i64>>) -> Result<Self> {
        for (i, v) in vectors.iter().enumerate() {
            if v.len() != dim {
                return Err(Error::DimensionMismatch {
                    index: i,
                    expected: dim,
                    found: v.len(),
                });
            }
            if v.iter().all(|&x| x == 0) {
                return Err(Error::ZeroVector(i));
            }
        }
        Ok(Self {
            dim,
            vectors,
            tags: None,
        })
    }

    pub fn with_tags(mut self, tags: Vec<String>) -> Result<Self> {
        if tags.len() != self.vectors.len() {
            return Err(Error::Parse(format!(
                "{} tags for {} vectors",
                tags.len(),
                self.vectors.len()
            )));
        }
        self.tags = Some(tags);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<i64>] {
        &self.vectors
    }

    pub fn get(&self, i: usize) -> &[i64] {
        &self.vectors[i]
    }

    pub fn tags(&self) -> Option<&[String]> {
        self.tags.as_deref()
    }

    fn display_label(&self, i: usize) -> String {
        match &self.tags {
            Some(t) => t[i].clone(),
            None => {
                let coords: Vec<String> = self.vectors[i].iter().map(i64::to_string).collect();
                format!("({})", coords.join(","))
            }
        }
    }

    /// Indices of vectors orthogonal to themselves under `form`.
    pub fn self_orthogonal(&self, form: InnerProduct) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| is_zero_under(form, dot(&self.vectors[i], &self.vectors[i])))
            .collect()
    }

    /// True if some pair of vectors spans a single line.
    pub fn has_parallel_pair(&self) -> bool {
        (0..self.len()).any(|i| (0..i).any(|j| parallel(&self.vectors[i], &self.vectors[j])))
    }
}

pub fn dot(u: &[i64], v: &[i64]) -> i64 {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

pub(crate) fn parallel(u: &[i64], v: &[i64]) -> bool {
    (0..u.len()).all(|i| (0..u.len()).all(|j| u[i] * v[j] == u[j] * v[i]))
}

fn is_zero_under(form: InnerProduct, x: i64) -> bool {
    match form {
        InnerProduct::Rational => x == 0,
        InnerProduct::ModP(p) => x.rem_euclid(p as i64) == 0,
    }
}

/// Graph on the vectors of `vs`, adjacent when orthogonal under `form`.
/// Self-orthogonal vectors get no loop.
pub fn orthogonality_graph(vs: &VectorSet, form: InnerProduct) -> Result<Graph> {
    if let InnerProduct::ModP(p) = form {
        if !is_odd_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
    }
    let n = vs.len();
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            if is_zero_under(form, dot(&vs.vectors[i], &vs.vectors[j])) {
                g.link(i, j);
            }
        }
    }
    g.with_labels((0..n).map(|i| vs.display_label(i)).collect())
}
