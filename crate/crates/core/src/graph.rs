//! Graphs, vertex potentials, and the Hamiltonian H = A + Q.
//!
//! Vertices are 1-indexed in every I/O surface and 0-indexed internally;
//! the conversion happens at the JSON boundary only.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::involution::InvolutionInfo;
use crate::value::AffineQ;

/// Undirected simple graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    /// Normalized (u < v), deduplicated, 0-indexed.
    edges: Vec<(usize, usize)>,
    labels: Option<Vec<String>>,
}

impl Graph {
    pub fn new(vertex_count: usize, raw_edges: &[(usize, usize)]) -> Result<Graph> {
        if vertex_count == 0 {
            return Err(Error::Parse {
                field: "n".into(),
                message: "vertex count must be at least 1".into(),
            });
        }
        let mut edges = Vec::new();
        for &(a, b) in raw_edges {
            if a == b {
                return Err(Error::Parse {
                    field: "edges".into(),
                    message: format!("self-loop at vertex v{a}"),
                });
            }
            for v in [a, b] {
                if v < 1 || v > vertex_count {
                    return Err(Error::Parse {
                        field: "edges".into(),
                        message: format!("endpoint v{v} outside 1..={vertex_count}"),
                    });
                }
            }
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            edges.push((lo - 1, hi - 1));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Graph {
            vertex_count,
            edges,
            labels: None,
        })
    }

    /// Path graph 1-2-...-n.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges).expect("path construction")
    }

    /// Cycle graph with vertices labeled cyclically.
    pub fn cycle(n: usize) -> Graph {
        let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
        edges.push((n, 1));
        Graph::new(n, &edges).expect("cycle construction")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// 0-indexed normalized edge list.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v {
            return false;
        }
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count;
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.edges {
                let w = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn to_json(&self, potential: Option<&Potential>) -> serde_json::Value {
        let edges: Vec<[usize; 2]> = self.edges.iter().map(|&(a, b)| [a + 1, b + 1]).collect();
        let mut doc = serde_json::json!({
            "n": self.vertex_count,
            "edges": edges,
        });
        if let Some(labels) = &self.labels {
            doc["labels"] = serde_json::json!(labels);
        }
        if let Some(q) = potential {
            let mut map = serde_json::Map::new();
            for (i, v) in q.values.iter().enumerate() {
                if !v.is_zero() {
                    map.insert((i + 1).to_string(), v.to_string_canonical().into());
                }
            }
            doc["potential"] = serde_json::Value::Object(map);
        }
        doc
    }
}

/// Potential on the vertex set; entry i is the value at vertex i+1.
/// At most the single indeterminate Q may appear.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Potential {
    values: Vec<AffineQ>,
}

impl Potential {
    pub fn zero(n: usize) -> Potential {
        Potential {
            values: vec![AffineQ::zero(); n],
        }
    }

    pub fn from_values(values: Vec<AffineQ>) -> Potential {
        Potential { values }
    }

    /// 1-indexed assignment.
    pub fn set(&mut self, vertex: usize, value: AffineQ) -> Result<()> {
        if vertex < 1 || vertex > self.values.len() {
            return Err(Error::VertexOutOfRange {
                vertex,
                n: self.values.len(),
            });
        }
        self.values[vertex - 1] = value;
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// 0-indexed access.
    pub fn value(&self, v: usize) -> &AffineQ {
        &self.values[v]
    }

    pub fn values(&self) -> &[AffineQ] {
        &self.values
    }

    pub fn has_symbolic(&self) -> bool {
        self.values.iter().any(|v| !v.is_constant())
    }

    /// Substitutes a concrete rational for Q everywhere.
    pub fn substitute(&self, q: &crate::value::Rat) -> Potential {
        Potential {
            values: self
                .values
                .iter()
                .map(|v| AffineQ::from_rat(v.eval(q)))
                .collect(),
        }
    }
}

#[derive(Deserialize)]
struct GraphDoc {
    n: usize,
    edges: Vec<Vec<usize>>,
    #[serde(default)]
    potential: Option<BTreeMap<String, String>>,
    #[serde(default)]
    labels: Option<Vec<String>>,
}

/// Parses the graph JSON document, returning the graph and its potential
/// (all-zero when the document has none).
pub fn parse_graph(text: &str) -> Result<(Graph, Potential)> {
    let doc: GraphDoc = serde_json::from_str(text).map_err(|e| Error::Parse {
        field: "document".into(),
        message: e.to_string(),
    })?;
    let mut pairs = Vec::with_capacity(doc.edges.len());
    for (i, e) in doc.edges.iter().enumerate() {
        if e.len() != 2 {
            return Err(Error::Parse {
                field: "edges".into(),
                message: format!("edge #{} must be a pair", i + 1),
            });
        }
        pairs.push((e[0], e[1]));
    }
    let mut graph = Graph::new(doc.n, &pairs)?;
    if let Some(labels) = doc.labels {
        if labels.len() != doc.n {
            return Err(Error::Parse {
                field: "labels".into(),
                message: format!("expected {} labels, got {}", doc.n, labels.len()),
            });
        }
        graph.labels = Some(labels);
    }
    let mut potential = Potential::zero(doc.n);
    if let Some(map) = doc.potential {
        for (k, v) in map {
            let vertex: usize = k.parse().map_err(|_| Error::Parse {
                field: "potential".into(),
                message: format!("bad vertex key `{k}`"),
            })?;
            if vertex < 1 || vertex > doc.n {
                return Err(Error::Parse {
                    field: "potential".into(),
                    message: format!("vertex key {vertex} outside 1..={}", doc.n),
                });
            }
            potential.values[vertex - 1] = AffineQ::parse(&v)?;
        }
    }
    Ok((graph, potential))
}

/// Symmetric matrix with exact entries, diagonal carrying the potential.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hamiltonian {
    entries: Vec<Vec<AffineQ>>,
    graph: Graph,
    potential: Potential,
}

impl Hamiltonian {
    pub fn dimension(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<AffineQ>] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> &AffineQ {
        &self.entries[i][j]
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn potential(&self) -> &Potential {
        &self.potential
    }

    pub fn has_symbolic(&self) -> bool {
        self.potential.has_symbolic()
    }

    /// Concrete rational matrix; errors when Q is still free.
    pub fn to_rational(&self) -> Result<Vec<Vec<crate::value::Rat>>> {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| e.as_rat().cloned().ok_or(Error::SymbolicEntries))
                    .collect()
            })
            .collect()
    }
}

pub fn build_hamiltonian(g: &Graph, q: &Potential) -> Result<Hamiltonian> {
    let n = g.vertex_count();
    if q.len() != n {
        return Err(Error::MissingPotential(q.len().min(n) + 1));
    }
    let mut entries = vec![vec![AffineQ::zero(); n]; n];
    for &(a, b) in g.edges() {
        entries[a][b] = AffineQ::one();
        entries[b][a] = AffineQ::one();
    }
    for (i, row) in entries.iter_mut().enumerate() {
        row[i] = q.value(i).clone();
    }
    Ok(Hamiltonian {
        entries,
        graph: g.clone(),
        potential: q.clone(),
    })
}

/// True iff q(x) = q(sigma x) for every vertex, compared exactly.
pub fn check_symmetric_potential(q: &Potential, inv: &InvolutionInfo) -> bool {
    (0..q.len()).all(|v| q.value(v) == q.value(inv.image(v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::involution::verify_involution;
    use crate::value::{rat, rat_int};
    use proptest::prelude::*;

    #[test]
    fn parse_k2() {
        let (g, q) = parse_graph(r#"{"n":2,"edges":[[1,2]]}"#).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges(), &[(0, 1)]);
        assert!(!q.has_symbolic());
    }

    #[test]
    fn parse_figure1() {
        let text = r#"{"n":7,"edges":[[1,2],[1,5],[2,3],[2,4],[3,6],[3,7],[4,5],[5,6],[6,7]]}"#;
        let (g, _) = parse_graph(text).unwrap();
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(g.edges().len(), 9);
        assert!(g.is_connected());
        assert!(g.has_edge(2, 5)); // v3-v6 0-indexed
    }

    #[test]
    fn parse_rejects_self_loop() {
        let err = parse_graph(r#"{"n":2,"edges":[[1,1]]}"#).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("edges") && msg.contains("self-loop"), "{msg}");
    }

    #[test]
    fn parse_rejects_out_of_range() {
        assert!(parse_graph(r#"{"n":2,"edges":[[1,3]]}"#).is_err());
        assert!(parse_graph(r#"{"n":0,"edges":[]}"#).is_err());
    }

    #[test]
    fn parse_potential_values() {
        let text = r#"{"n":3,"edges":[[1,2],[2,3]],"potential":{"1":"1/2","3":"Q"}}"#;
        let (_, q) = parse_graph(text).unwrap();
        assert_eq!(q.value(0).as_rat().unwrap(), &rat(1, 2));
        assert!(q.value(1).is_zero());
        assert!(!q.value(2).is_constant());
        assert!(q.has_symbolic());
    }

    #[test]
    fn hamiltonian_k2() {
        let g = Graph::path(2);
        let h = build_hamiltonian(&g, &Potential::zero(2)).unwrap();
        assert_eq!(h.entry(0, 1).as_rat().unwrap(), &rat_int(1));
        assert_eq!(h.entry(0, 0).as_rat().unwrap(), &rat_int(0));
        let m = h.to_rational().unwrap();
        assert_eq!(m[0][1], rat_int(1));
    }

    #[test]
    fn hamiltonian_endpoint_potential() {
        let g = Graph::path(4);
        let mut q = Potential::zero(4);
        q.set(1, AffineQ::symbolic_q()).unwrap();
        q.set(4, AffineQ::symbolic_q()).unwrap();
        let h = build_hamiltonian(&g, &q).unwrap();
        assert!(!h.entry(0, 0).is_constant());
        assert!(h.entry(1, 1).is_zero());
        assert!(h.to_rational().is_err());
    }

    #[test]
    fn symmetric_potential_checks() {
        let g = Graph::cycle(6);
        let antipodal = verify_involution(&g, &[4, 5, 6, 1, 2, 3]).unwrap();
        let mut q = Potential::zero(6);
        for (v, val) in [(1, rat_int(1)), (2, rat(1, 2)), (3, rat(1, 3))] {
            q.set(v, AffineQ::from_rat(val.clone())).unwrap();
            q.set(v + 3, AffineQ::from_rat(val)).unwrap();
        }
        assert!(check_symmetric_potential(&q, &antipodal));
        let mut bad = Potential::zero(6);
        bad.set(1, AffineQ::from_int(1)).unwrap();
        assert!(!check_symmetric_potential(&bad, &antipodal));
    }

    #[test]
    fn row_sums_equal_degrees() {
        let g = Graph::cycle(5);
        let h = build_hamiltonian(&g, &Potential::zero(5)).unwrap();
        for v in 0..5 {
            let sum: usize = (0..5)
                .filter(|&w| w != v && !h.entry(v, w).is_zero())
                .count();
            assert_eq!(sum, g.degree(v));
        }
    }

    proptest! {
        #[test]
        fn parse_serialize_roundtrip(n in 1usize..8, seed in 0u64..1000) {
            // deterministic pseudo-random edge set from the seed
            let mut edges = Vec::new();
            let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1);
            for a in 1..=n {
                for b in (a + 1)..=n {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    if state % 3 == 0 {
                        edges.push((a, b));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            let doc = g.to_json(None).to_string();
            let (g2, _) = parse_graph(&doc).unwrap();
            prop_assert_eq!(g, g2);
        }
    }
}
