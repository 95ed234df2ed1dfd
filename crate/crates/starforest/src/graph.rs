//! Finite simple undirected graphs with a canonical edge order, plus the
//! generators used throughout: hypercubes, cartesian products, and the
//! small fixed families needed by tests and constructions.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type VertexId = u32;

/// Largest hypercube dimension any operation will touch. Edge lists beyond
/// this (~200M edges) are refused loudly rather than thrashing memory.
pub const MAX_DIMENSION: u32 = 24;

/// Largest vertex count a product may produce.
pub const MAX_VERTICES: usize = 1 << MAX_DIMENSION;

/// An undirected edge stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: VertexId,
    v: VertexId,
}

impl Edge {
    /// Canonicalizes endpoint order. Panics on a loop; loops cannot arise
    /// from any generator in this crate.
    pub fn new(a: VertexId, b: VertexId) -> Edge {
        assert_ne!(a, b, "loops are not representable");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn try_new(a: VertexId, b: VertexId) -> Result<Edge> {
        if a == b {
            return Err(Error::InvalidArgument(format!("loop edge at vertex {a}")));
        }
        Ok(Edge::new(a, b))
    }

    pub fn u(&self) -> VertexId {
        self.u
    }

    pub fn v(&self) -> VertexId {
        self.v
    }

    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (self.u, self.v).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Edge {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Edge, D::Error> {
        let (a, b) = <(VertexId, VertexId)>::deserialize(d)?;
        Edge::try_new(a, b).map_err(|e| D::Error::custom(e.to_string()))
    }
}

impl std::fmt::Display for Edge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

/// Immutable simple graph. Edges are kept sorted lexicographically, which
/// makes edge lists comparable byte-for-byte and lets membership tests
/// binary-search.
#[derive(Debug, Clone)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<Edge>,
    /// Set when the graph is known to be the hypercube of this dimension
    /// under the standard bit encoding.
    dimension: Option<u32>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        // The dimension tag is advisory; equality is structural.
        self.vertex_count == other.vertex_count && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn new(vertex_count: usize, mut edges: Vec<Edge>) -> Result<Graph> {
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(Error::Structure(format!("duplicate edge {}", w[0])));
            }
        }
        if let Some(e) = edges.last() {
            if e.v as usize >= vertex_count {
                return Err(Error::Structure(format!(
                    "edge {} exceeds vertex count {}",
                    e, vertex_count
                )));
            }
        }
        Ok(Graph {
            vertex_count,
            edges,
            dimension: None,
        })
    }

    /// The hypercube Q_n: vertices are n-bit vectors, adjacent iff they
    /// differ in exactly one coordinate.
    pub fn hypercube(n: u32) -> Result<Graph> {
        if !(1..=MAX_DIMENSION).contains(&n) {
            return Err(Error::Capacity(format!(
                "hypercube dimension {n} outside 1..={MAX_DIMENSION}"
            )));
        }
        let nv: usize = 1 << n;
        let mut edges = Vec::with_capacity(n as usize * (nv >> 1));
        for v in 0..nv as VertexId {
            for i in 0..n {
                let w = v ^ (1 << i);
                if w > v {
                    edges.push(Edge { u: v, v: w });
                }
            }
        }
        // Generation order is already lexicographic.
        Ok(Graph {
            vertex_count: nv,
            edges,
            dimension: Some(n),
        })
    }

    /// Cartesian product. Vertex (a, b) is encoded as a + b*|V(self)|, so
    /// the left factor varies fastest and Q_{n-1} x Q_1 is literally equal
    /// to Q_n's encoding.
    pub fn cartesian_product(&self, other: &Graph) -> Result<Graph> {
        if self.vertex_count == 0 || other.vertex_count == 0 {
            return Err(Error::Structure("product of an empty graph".into()));
        }
        let nv = self
            .vertex_count
            .checked_mul(other.vertex_count)
            .filter(|&n| n <= MAX_VERTICES)
            .ok_or_else(|| {
                Error::Capacity(format!(
                    "product vertex count {}*{} exceeds {}",
                    self.vertex_count, other.vertex_count, MAX_VERTICES
                ))
            })?;
        let n = self.vertex_count as VertexId;
        let mut edges =
            Vec::with_capacity(other.vertex_count * self.edges.len() + self.vertex_count * other.edges.len());
        for b in 0..other.vertex_count as VertexId {
            for e in &self.edges {
                edges.push(Edge {
                    u: e.u + b * n,
                    v: e.v + b * n,
                });
            }
        }
        for e in &other.edges {
            for a in 0..n {
                edges.push(Edge {
                    u: a + e.u * n,
                    v: a + e.v * n,
                });
            }
        }
        edges.sort_unstable();
        let dimension = match (self.dimension, other.dimension) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        };
        Ok(Graph {
            vertex_count: nv,
            edges,
            dimension,
        })
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Result<Graph> {
        if n > 4096 {
            return Err(Error::Capacity(format!("complete graph on {n} vertices")));
        }
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n as VertexId {
            for v in u + 1..n as VertexId {
                edges.push(Edge { u, v });
            }
        }
        Ok(Graph {
            vertex_count: n,
            edges,
            dimension: None,
        })
    }

    /// Cycle C_n, n >= 3.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidArgument("cycle needs at least 3 vertices".into()));
        }
        let mut edges: Vec<Edge> = (0..n - 1)
            .map(|i| Edge::new(i as VertexId, i as VertexId + 1))
            .collect();
        edges.push(Edge::new(0, n as VertexId - 1));
        Graph::new(n, edges)
    }

    /// Path P_n on n vertices.
    pub fn path(n: usize) -> Result<Graph> {
        let edges = (0..n.saturating_sub(1))
            .map(|i| Edge::new(i as VertexId, i as VertexId + 1))
            .collect();
        Graph::new(n, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn dimension(&self) -> Option<u32> {
        self.dimension
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn degrees(&self) -> Vec<u32> {
        let mut deg = vec![0u32; self.vertex_count];
        for e in &self.edges {
            deg[e.u as usize] += 1;
            deg[e.v as usize] += 1;
        }
        deg
    }

    /// Common degree if the graph is regular.
    pub fn regularity(&self) -> Option<u32> {
        let deg = self.degrees();
        match deg.first() {
            None => None,
            Some(&d) if deg.iter().all(|&x| x == d) => Some(d),
            _ => None,
        }
    }

    pub fn adjacency(&self) -> Vec<Vec<VertexId>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for e in &self.edges {
            adj[e.u as usize].push(e.v);
            adj[e.v as usize].push(e.u);
        }
        adj
    }
}
