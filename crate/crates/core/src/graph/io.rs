//! JSON and DOT encodings for graphs and vector sets.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{Graph, VectorSet};
use crate::error::{Error, Result};

/// `{"n": int, "edges": [[i,j],...], "labels": [str,...]}`; labels optional.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

/// `{"dim": int, "vectors": [[int,...],...]}` with optional `tags`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VectorSetJson {
    pub dim: usize,
    pub vectors: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tags: Option<Vec<String>>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            labels: g.labels().map(<[String]>::to_vec),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = j.edges.iter().map(|e| (e[0], e[1])).collect();
        let g = Graph::from_edges(j.n, &edges)?;
        match j.labels {
            Some(l) => g.with_labels(l),
            None => Ok(g),
        }
    }
}

impl From<&VectorSet> for VectorSetJson {
    fn from(vs: &VectorSet) -> Self {
        VectorSetJson {
            dim: vs.dim(),
            vectors: vs.vectors().to_vec(),
            tags: vs.tags().map(<[String]>::to_vec),
        }
    }
}

impl TryFrom<VectorSetJson> for VectorSet {
    type Error = Error;

    fn try_from(j: VectorSetJson) -> Result<VectorSet> {
        let vs = VectorSet::new(j.dim, j.vectors)?;
        match j.tags {
            Some(t) => vs.with_tags(t),
            None => Ok(vs),
        }
    }
}

impl Graph {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphJson::from(self)).expect("graph serializes")
    }

    pub fn from_json(s: &str) -> Result<Graph> {
        let j: GraphJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Graph::try_from(j)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n() {
            let _ = writeln!(out, "  {v} [label=\"{}\"];", self.label(v).replace('"', "\\\""));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

impl VectorSet {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&VectorSetJson::from(self)).expect("vector set serializes")
    }

    pub fn from_json(s: &str) -> Result<VectorSet> {
        let j: VectorSetJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        VectorSet::try_from(j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_json_shape() {
        let g = Graph::path(3);
        assert_eq!(g.to_json(), r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
        assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g);
    }

    #[test]
    fn labels_survive() {
        let g = Graph::path(2).with_labels(vec!["a".into(), "b".into()]).unwrap();
        let h = Graph::from_json(&g.to_json()).unwrap();
        assert_eq!(h.labels().unwrap(), ["a", "b"]);
    }

    #[test]
    fn malformed_json_is_a_parse_error() {
        assert!(matches!(Graph::from_json("{\"n\": 2"), Err(Error::Parse(_))));
        assert!(matches!(
            Graph::from_json(r#"{"n":2,"edges":[[0,5]]}"#),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn vector_set_json() {
        let vs = VectorSet::from_json(r#"{"dim":2,"vectors":[[1,0],[0,1]]}"#).unwrap();
        assert_eq!(vs.len(), 2);
        assert!(VectorSet::from_json(r#"{"dim":2,"vectors":[[0,0]]}"#).is_err());
    }

    #[test]
    fn dot_output() {
        let dot = Graph::path(2).to_dot();
        assert!(dot.contains("0 -- 1;"));
        assert!(dot.starts_with("graph G {"));
    }
}
