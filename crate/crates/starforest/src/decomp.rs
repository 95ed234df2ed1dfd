//! Galaxy-decomposition data model and the verifier every construction in
//! this crate is certified against.
//!
//! A galaxy (star forest) is a graph whose components are stars K_{1,s};
//! equivalently each component has at most one vertex of degree >= 2.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};
use crate::graph6;

/// An ordered partition of a graph's edge set into candidate galaxies.
/// Validity is not an invariant of the type; it is established by
/// [`verify_decomposition`].
#[derive(Debug, Clone)]
pub struct GalaxyDecomposition {
    pub graph: Graph,
    pub classes: Vec<Vec<Edge>>,
    /// Name of the construction step that produced this decomposition.
    pub provenance: String,
}

impl GalaxyDecomposition {
    /// Sorts every class, giving the canonical on-disk order.
    pub fn new(graph: Graph, mut classes: Vec<Vec<Edge>>, provenance: impl Into<String>) -> Self {
        for c in &mut classes {
            c.sort_unstable();
        }
        GalaxyDecomposition {
            graph,
            classes,
            provenance: provenance.into(),
        }
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn to_doc(&self) -> Result<DecompositionDoc> {
        let (n, graph6) = match self.graph.dimension() {
            Some(n) => (Some(n), None),
            None => (None, Some(graph6::write_graph6(&self.graph)?)),
        };
        Ok(DecompositionDoc {
            n,
            graph6,
            classes: self.classes.clone(),
            provenance: self.provenance.clone(),
        })
    }

    pub fn from_doc(doc: DecompositionDoc) -> Result<GalaxyDecomposition> {
        let graph = match (doc.n, &doc.graph6) {
            (Some(n), _) => Graph::hypercube(n)?,
            (None, Some(g6)) => graph6::parse_graph6(g6)?,
            (None, None) => {
                return Err(Error::InvalidArgument(
                    "decomposition document needs either \"n\" or \"graph6\"".into(),
                ))
            }
        };
        Ok(GalaxyDecomposition::new(graph, doc.classes, doc.provenance))
    }
}

/// The JSON wire form: `{ "n" or "graph6": ..., "classes": [[[u,v],...],...],
/// "provenance": ... }` with classes sorted canonically.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DecompositionDoc {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub graph6: Option<String>,
    pub classes: Vec<Vec<Edge>>,
    #[serde(default)]
    pub provenance: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// An edge of a class does not exist in the host graph.
    Foreign { class: usize, edge: Edge },
    /// An edge appears in more than one class (or twice in one).
    Duplicate {
        class: usize,
        other_class: usize,
        edge: Edge,
    },
    /// A graph edge is covered by no class.
    Missing { edge: Edge },
    /// A class has a component with two vertices of degree >= 2.
    NotStar {
        class: usize,
        first: VertexId,
        second: VertexId,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub valid: bool,
    pub class_count: usize,
    pub violations: Vec<Violation>,
    /// Per class: (star center, leaf count) pairs, sorted by center.
    /// Empty for classes that fail the star-forest test.
    pub centers: Vec<Vec<(VertexId, u32)>>,
}

/// A star component of an edge class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarComponent {
    pub center: VertexId,
    pub leaves: Vec<VertexId>,
}

/// Two distinct vertices of degree >= 2 found in one component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StarViolation {
    pub first: VertexId,
    pub second: VertexId,
}

/// Splits an edge set into connected components and reports each as a star,
/// or the first non-star witness. For a single-edge component the smaller
/// endpoint is reported as the center.
pub fn star_components(edges: &[Edge]) -> std::result::Result<Vec<StarComponent>, StarViolation> {
    let mut adj: HashMap<VertexId, Vec<VertexId>> = HashMap::new();
    for e in edges {
        adj.entry(e.u()).or_default().push(e.v());
        adj.entry(e.v()).or_default().push(e.u());
    }
    let mut seen: HashMap<VertexId, bool> = HashMap::new();
    let mut out = Vec::new();
    let mut roots: Vec<VertexId> = adj.keys().copied().collect();
    roots.sort_unstable();
    for root in roots {
        if seen.contains_key(&root) {
            continue;
        }
        let mut stack = vec![root];
        let mut comp = Vec::new();
        seen.insert(root, true);
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &w in &adj[&v] {
                if seen.insert(w, true).is_none() {
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        let mut heavy = comp.iter().copied().filter(|v| adj[v].len() >= 2);
        match (heavy.next(), heavy.next()) {
            (Some(a), Some(b)) => return Err(StarViolation { first: a, second: b }),
            (Some(center), None) => {
                let mut leaves = adj[&center].clone();
                leaves.sort_unstable();
                out.push(StarComponent { center, leaves });
            }
            (None, _) => {
                // Single edge; tie-break the center to the smaller id.
                debug_assert_eq!(comp.len(), 2);
                out.push(StarComponent {
                    center: comp[0],
                    leaves: vec![comp[1]],
                });
            }
        }
    }
    Ok(out)
}

/// Certifies a decomposition: every edge of `g` in exactly one class, and
/// every class a star forest. Violations are collected, never thrown.
pub fn verify_decomposition(g: &Graph, d: &GalaxyDecomposition) -> VerificationReport {
    let mut violations = Vec::new();
    let mut assigned: HashMap<Edge, usize> = HashMap::with_capacity(g.edge_count());
    for (ci, class) in d.classes.iter().enumerate() {
        for &e in class {
            if !g.has_edge(e) {
                violations.push(Violation::Foreign { class: ci, edge: e });
                continue;
            }
            if let Some(&prev) = assigned.get(&e) {
                violations.push(Violation::Duplicate {
                    class: ci,
                    other_class: prev,
                    edge: e,
                });
            } else {
                assigned.insert(e, ci);
            }
        }
    }
    for &e in g.edges() {
        if !assigned.contains_key(&e) {
            violations.push(Violation::Missing { edge: e });
        }
    }
    let mut centers = Vec::with_capacity(d.classes.len());
    for (ci, class) in d.classes.iter().enumerate() {
        match star_components(class) {
            Ok(stars) => centers.push(
                stars
                    .into_iter()
                    .map(|s| (s.center, s.leaves.len() as u32))
                    .collect(),
            ),
            Err(w) => {
                violations.push(Violation::NotStar {
                    class: ci,
                    first: w.first,
                    second: w.second,
                });
                centers.push(Vec::new());
            }
        }
    }
    VerificationReport {
        valid: violations.is_empty(),
        class_count: d.classes.len(),
        violations,
        centers,
    }
}
