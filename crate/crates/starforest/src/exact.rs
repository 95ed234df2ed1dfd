//! Exhaustive search for the minimum number of galaxies partitioning the
//! edge set of a small graph. Feasible for graphs up to 64 edges; intended
//! as an independent check on the constructions, not as a scalable solver.

use crate::decomp::GalaxyDecomposition;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};

pub const MAX_SOLVER_EDGES: usize = 64;

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub max_classes: usize,
    pub node_budget: u64,
    pub symmetry_breaking: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_classes: 16,
            node_budget: 100_000_000,
            symmetry_breaking: true,
        }
    }
}

/// Per-class state of a vertex during the search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Role {
    /// Not incident to any edge of the class.
    Free,
    /// Incident to exactly one class edge, whose other endpoint is also
    /// degree 1; either endpoint may still become the star's center.
    Pendant(VertexId),
    /// Committed center: may gain more leaves.
    Center,
    /// Committed leaf: saturated.
    Leaf,
}

struct Search<'a> {
    edges: &'a [Edge],
    t: usize,
    // roles[c * vn + v]
    roles: Vec<Role>,
    vn: usize,
    class_used: Vec<bool>,
    assignment: Vec<usize>,
    nodes: u64,
    budget: u64,
    symmetry: bool,
}

enum Outcome {
    Found,
    Infeasible,
    Budget,
}

/// Endpoint roles before an edge insertion, plus the pendant partner the
/// insertion may have demoted to a leaf.
type SavedRoles = (Role, Role, Option<(VertexId, Role)>);

impl Search<'_> {
    fn role(&self, c: usize, v: VertexId) -> Role {
        self.roles[c * self.vn + v as usize]
    }

    fn set_role(&mut self, c: usize, v: VertexId, r: Role) {
        self.roles[c * self.vn + v as usize] = r;
    }

    /// Tries to add edge (u, v) to class c; returns the saved roles for
    /// undo, or None if the class would stop being a star forest.
    fn try_add(&mut self, c: usize, u: VertexId, v: VertexId) -> Option<SavedRoles> {
        let (ru, rv) = (self.role(c, u), self.role(c, v));
        // One endpoint becomes (or stays) the center, the other must be a
        // fresh leaf; a Pendant endpoint can still be promoted to center.
        let (center, leaf) = match (ru, rv) {
            (Role::Free, Role::Free) => {
                self.set_role(c, u, Role::Pendant(v));
                self.set_role(c, v, Role::Pendant(u));
                return Some((ru, rv, None));
            }
            (Role::Center | Role::Pendant(_), Role::Free) => (u, v),
            (Role::Free, Role::Center | Role::Pendant(_)) => (v, u),
            _ => return None,
        };
        let prev_center = self.role(c, center);
        self.set_role(c, center, Role::Center);
        self.set_role(c, leaf, Role::Leaf);
        // When the center was a pendant, its old partner becomes a leaf.
        let demoted = if let Role::Pendant(p) = prev_center {
            let saved = self.role(c, p);
            self.set_role(c, p, Role::Leaf);
            Some((p, saved))
        } else {
            None
        };
        Some((ru, rv, demoted))
    }

    fn undo(&mut self, c: usize, u: VertexId, v: VertexId, saved: SavedRoles) {
        let (ru, rv, demoted) = saved;
        if let Some((p, rp)) = demoted {
            self.set_role(c, p, rp);
        }
        self.set_role(c, u, ru);
        self.set_role(c, v, rv);
    }

    fn dfs(&mut self, idx: usize) -> Outcome {
        if idx == self.edges.len() {
            return Outcome::Found;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Outcome::Budget;
        }
        let (u, v) = self.edges[idx].endpoints();
        let mut opened_new = false;
        for c in 0..self.t {
            if self.symmetry && !self.class_used[c] {
                // At most one empty class is worth trying at each level.
                if opened_new {
                    break;
                }
                opened_new = true;
            }
            if let Some(saved) = self.try_add(c, u, v) {
                let was_used = self.class_used[c];
                self.class_used[c] = true;
                self.assignment[idx] = c;
                match self.dfs(idx + 1) {
                    Outcome::Found => return Outcome::Found,
                    Outcome::Budget => return Outcome::Budget,
                    Outcome::Infeasible => {}
                }
                self.class_used[c] = was_used;
                self.undo(c, u, v, saved);
            }
        }
        Outcome::Infeasible
    }
}

/// Decides whether the edges of `g` partition into at most `t` galaxies; on
/// success returns a witness decomposition.
pub fn sa_decide(g: &Graph, t: usize, cfg: &SearchConfig) -> Result<Option<GalaxyDecomposition>> {
    if g.edge_count() > MAX_SOLVER_EDGES {
        return Err(Error::Capacity(format!(
            "exact search limited to {MAX_SOLVER_EDGES} edges, graph has {}",
            g.edge_count()
        )));
    }
    if t > cfg.max_classes {
        return Err(Error::InvalidArgument(format!(
            "t={t} exceeds configured max_classes={}",
            cfg.max_classes
        )));
    }
    if g.edge_count() == 0 {
        return Ok(Some(GalaxyDecomposition::new(g.clone(), vec![], "exact")));
    }
    if t == 0 {
        return Ok(None);
    }
    let mut s = Search {
        edges: g.edges(),
        t,
        roles: vec![Role::Free; t * g.vertex_count()],
        vn: g.vertex_count(),
        class_used: vec![false; t],
        assignment: vec![0; g.edge_count()],
        nodes: 0,
        budget: cfg.node_budget,
        symmetry: cfg.symmetry_breaking,
    };
    match s.dfs(0) {
        Outcome::Found => {
            let mut classes = vec![Vec::new(); t];
            for (i, e) in g.edges().iter().enumerate() {
                classes[s.assignment[i]].push(*e);
            }
            classes.retain(|c| !c.is_empty());
            Ok(Some(GalaxyDecomposition::new(g.clone(), classes, "exact")))
        }
        Outcome::Infeasible => Ok(None),
        Outcome::Budget => Err(Error::BudgetExhausted),
    }
}

/// Minimum number of galaxies, found by increasing t from the regular-graph
/// lower bound (ceil(r/2) + 1 for r-regular graphs with r >= 2).
pub fn exact_sa(g: &Graph, cfg: &SearchConfig) -> Result<(usize, GalaxyDecomposition)> {
    if g.edge_count() == 0 {
        return Ok((0, GalaxyDecomposition::new(g.clone(), vec![], "exact")));
    }
    let mut t = match g.regularity() {
        Some(r) if r >= 2 => (r as usize).div_ceil(2) + 1,
        _ => 1,
    };
    loop {
        if t > cfg.max_classes {
            return Err(Error::Capacity(format!(
                "no decomposition within max_classes={}",
                cfg.max_classes
            )));
        }
        if let Some(d) = sa_decide(g, t, cfg)? {
            return Ok((d.class_count(), d));
        }
        t += 1;
    }
}
