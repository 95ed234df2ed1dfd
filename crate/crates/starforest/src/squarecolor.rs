//! From a proper coloring of the square of a graph to a galaxy
//! decomposition: k colors with k >= 4 yield ceil(k/2) + 1 galaxies, by
//! pulling back a galaxy decomposition of K_k along the coloring.

use std::collections::HashMap;

use crate::decomp::{verify_decomposition, GalaxyDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};

/// Square of a graph: edges between distinct vertices at distance <= 2.
pub fn square(g: &Graph) -> Result<Graph> {
    let adj = g.adjacency();
    let mut edges: Vec<Edge> = g.edges().to_vec();
    for nbrs in &adj {
        for i in 0..nbrs.len() {
            for j in i + 1..nbrs.len() {
                edges.push(Edge::new(nbrs[i], nbrs[j]));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::new(g.vertex_count(), edges)
}

#[derive(Debug, Clone)]
pub struct SquareColoring {
    /// Number of colors; colors[v] < k for every vertex.
    pub k: usize,
    pub colors: Vec<u32>,
}

/// Colors the square of Q_{2^t-1} with 2^t colors: coordinate i carries the
/// label i+1 (all nonzero t-bit vectors) and a vertex's color is the XOR of
/// its set coordinates' labels. Vertices at distance 1 differ by one label,
/// at distance 2 by two distinct labels; either way the XOR is nonzero.
pub fn hamming_square_coloring(t: u32) -> Result<(Graph, SquareColoring)> {
    if !(2..=4).contains(&t) {
        return Err(Error::InvalidArgument(format!(
            "perfect-code coloring needs t in 2..=4, got {t}"
        )));
    }
    let n = (1u32 << t) - 1;
    let g = Graph::hypercube(n)?;
    let colors: Vec<u32> = (0..g.vertex_count() as u32)
        .map(|v| {
            let mut c = 0u32;
            for i in 0..n {
                if v & (1 << i) != 0 {
                    c ^= i + 1;
                }
            }
            c
        })
        .collect();
    Ok((g, SquareColoring { k: 1 << t, colors }))
}

/// K_n into ceil(n/2) + 1 galaxies (n >= 2), via an explicit pairing: with
/// vertices paired {2i, 2i+1}, class i holds the "straight" edges from pair
/// i to later pairs and the "crossed" edges into pair i from earlier pairs,
/// which makes two stars centered at 2i and 2i+1. The final class is the
/// matching inside the pairs; an odd vertex contributes one full star.
pub fn complete_galaxy_decomposition(n: usize) -> Result<GalaxyDecomposition> {
    if !(1..=12).contains(&n) {
        return Err(Error::Capacity(format!(
            "complete-graph decomposition supported for 1..=12 vertices, got {n}"
        )));
    }
    let g = Graph::complete(n)?;
    let classes: Vec<Vec<Edge>> = match n {
        1 => vec![vec![]],
        2 => vec![vec![Edge::new(0, 1)]],
        3 => vec![
            vec![Edge::new(0, 1), Edge::new(0, 2)],
            vec![Edge::new(1, 2)],
        ],
        _ => {
            let m = n / 2;
            let mut classes = vec![Vec::new(); m + 1];
            for i in 0..m as VertexId {
                for j in i + 1..m as VertexId {
                    classes[i as usize].push(Edge::new(2 * i, 2 * j));
                    classes[i as usize].push(Edge::new(2 * i + 1, 2 * j + 1));
                    classes[j as usize].push(Edge::new(2 * i, 2 * j + 1));
                    classes[j as usize].push(Edge::new(2 * i + 1, 2 * j));
                }
                classes[m].push(Edge::new(2 * i, 2 * i + 1));
            }
            if n % 2 == 1 {
                let z = (n - 1) as VertexId;
                classes.push((0..z).map(|v| Edge::new(v, z)).collect());
            }
            classes
        }
    };
    let d = GalaxyDecomposition::new(g.clone(), classes, format!("complete({n})"));
    let report = verify_decomposition(&g, &d);
    if !report.valid {
        return Err(Error::ConstructionBug(format!(
            "complete({n}) pairing produced an invalid decomposition"
        )));
    }
    Ok(d)
}

/// Pulls a galaxy decomposition of `g` back from a proper coloring of its
/// square with k >= 4 colors: each edge inherits the class of its color
/// pair in the K_k decomposition. Empty classes are dropped, so the result
/// has at most ceil(k/2) + 1 classes.
pub fn sa_from_square_coloring(g: &Graph, col: &SquareColoring) -> Result<GalaxyDecomposition> {
    if col.k < 4 {
        return Err(Error::InvalidArgument(format!(
            "square-coloring route needs k >= 4 colors, got {}",
            col.k
        )));
    }
    if col.k > 12 {
        return Err(Error::Capacity(format!(
            "square-coloring route supports at most 12 colors, got {}",
            col.k
        )));
    }
    if col.colors.len() != g.vertex_count() {
        return Err(Error::InvalidArgument(format!(
            "coloring covers {} vertices, graph has {}",
            col.colors.len(),
            g.vertex_count()
        )));
    }
    if let Some(v) = (0..g.vertex_count()).find(|&v| col.colors[v] as usize >= col.k) {
        return Err(Error::InvalidArgument(format!(
            "vertex {v} has color {} out of range 0..{}",
            col.colors[v], col.k
        )));
    }
    for e in g.edges() {
        if col.colors[e.u() as usize] == col.colors[e.v() as usize] {
            return Err(Error::Coloring(e.u(), e.v()));
        }
    }
    // Distance-2 properness, phrased locally: no vertex may see one color
    // on two different neighbors, so each color-pair subgraph is a matching.
    let mut seen: HashMap<(VertexId, u32), VertexId> = HashMap::new();
    for e in g.edges() {
        for (x, y) in [(e.u(), e.v()), (e.v(), e.u())] {
            if let Some(&other) = seen.get(&(x, col.colors[y as usize])) {
                return Err(Error::Coloring(other.min(y), other.max(y)));
            }
            seen.insert((x, col.colors[y as usize]), y);
        }
    }

    let quotient = complete_galaxy_decomposition(col.k)?;
    let mut class_of_pair: HashMap<Edge, usize> = HashMap::new();
    for (i, class) in quotient.classes.iter().enumerate() {
        for e in class {
            class_of_pair.insert(*e, i);
        }
    }
    let mut classes = vec![Vec::new(); quotient.class_count()];
    for e in g.edges() {
        let pair = Edge::new(col.colors[e.u() as usize], col.colors[e.v() as usize]);
        classes[class_of_pair[&pair]].push(*e);
    }
    classes.retain(|c| !c.is_empty());
    let d = GalaxyDecomposition::new(
        g.clone(),
        classes,
        format!("square_coloring(k={})", col.k),
    );
    let report = verify_decomposition(g, &d);
    if !report.valid {
        return Err(Error::ConstructionBug(
            "square-coloring pullback produced an invalid decomposition".into(),
        ));
    }
    Ok(d)
}
