//! The Truszczynski vertex partition of Q_{2^k-2} and the matching
//! machinery built on it: splitting pairwise-induced 2-regular graphs into
//! directed perfect matchings, and lifting classes into Q_{2^k+1} by a
//! 3-bit suffix.
//!
//! The partition is realized by a syndrome construction: the 2^k-2
//! coordinates are labelled by the nonzero vectors of F_2^k other than a
//! fixed vector a = (0,...,0,1), and the class of a vertex is the coset of
//! its label sum in F_2^k / {0, a}. Flipping a coordinate shifts the
//! syndrome by a label, which lies in no trivial coset, so classes are
//! independent; every nontrivial coset contains exactly two labels, so any
//! two classes induce a 2-regular subgraph. The result is checked before
//! being returned.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};

/// A partition of V(Q_{2^k-2}) into 2^{k-1} independent classes, any two
/// of which induce a 2-regular subgraph.
#[derive(Debug, Clone)]
pub struct ClassPartition {
    pub k: u32,
    /// classes[i] is sorted ascending; indices are 0-based.
    pub classes: Vec<Vec<VertexId>>,
}

impl ClassPartition {
    /// Dimension of the underlying hypercube.
    pub fn dimension(&self) -> u32 {
        (1 << self.k) - 2
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }
}

/// Class index of a vertex under the syndrome construction: coordinate i
/// carries label i+2, and cosets of {0,1} are identified by syndrome >> 1.
fn syndrome_class(v: VertexId, m: u32) -> usize {
    let mut s: u32 = 0;
    for i in 0..m {
        if v >> i & 1 == 1 {
            s ^= i + 2;
        }
    }
    (s >> 1) as usize
}

pub fn truszczynski_partition(k: u32) -> Result<ClassPartition> {
    if !(2..=5).contains(&k) {
        return Err(Error::InvalidArgument(format!(
            "partition parameter k={k} outside 2..=5"
        )));
    }
    let m = (1u32 << k) - 2;
    let nc = 1usize << (k - 1);
    let mut classes = vec![Vec::with_capacity((1usize << m) / nc); nc];
    for v in 0..(1u32 << m) {
        classes[syndrome_class(v, m)].push(v);
    }
    let p = ClassPartition { k, classes };
    check_partition(&p)?;
    Ok(p)
}

/// Internal post-construction check of the partition invariants. A failure is
/// a construction bug, never an input error.
fn check_partition(p: &ClassPartition) -> Result<()> {
    let m = p.dimension();
    let nc = p.class_count();
    let mut class_of = vec![usize::MAX; 1usize << m];
    for (i, c) in p.classes.iter().enumerate() {
        for &v in c {
            class_of[v as usize] = i;
        }
    }
    if class_of.contains(&usize::MAX) {
        return Err(Error::ConstructionBug("classes do not cover V".into()));
    }
    let expected = (1usize << m) / nc;
    if p.classes.iter().any(|c| c.len() != expected) {
        return Err(Error::ConstructionBug("classes are not equal-sized".into()));
    }
    let mut counts = vec![0u32; nc];
    for v in 0..(1u32 << m) {
        counts.iter_mut().for_each(|c| *c = 0);
        let cv = class_of[v as usize];
        for i in 0..m {
            counts[class_of[(v ^ (1 << i)) as usize]] += 1;
        }
        if counts[cv] != 0 {
            return Err(Error::ConstructionBug(format!(
                "class {cv} is not independent at vertex {v}"
            )));
        }
        for (j, &c) in counts.iter().enumerate() {
            if j != cv && c != 2 {
                return Err(Error::ConstructionBug(format!(
                    "induced subgraph on classes {cv},{j} is not 2-regular at vertex {v}"
                )));
            }
        }
    }
    Ok(())
}

/// Splits the 2-regular bipartite graph induced on `a` union `b` into its
/// two perfect matchings, deterministically.
///
/// Each induced cycle is walked from its minimum vertex toward that
/// vertex's smaller neighbor, assigning edges alternately; the matching
/// holding the start vertex's first edge goes to `m_ab` when the start
/// vertex lies in `a`, otherwise to `m_ba`. Swapping `a` and `b` therefore
/// swaps the outputs.
pub fn split_two_regular(
    g: &Graph,
    a: &[VertexId],
    b: &[VertexId],
) -> Result<(Vec<Edge>, Vec<Edge>)> {
    const SIDE_A: u8 = 1;
    const SIDE_B: u8 = 2;
    let mut side = vec![0u8; g.vertex_count()];
    for &v in a {
        side[v as usize] = SIDE_A;
    }
    for &v in b {
        if side[v as usize] == SIDE_A {
            return Err(Error::Structure(format!("vertex {v} is in both sides")));
        }
        side[v as usize] = SIDE_B;
    }

    // Collect induced edges and neighbor pairs in one scan.
    let mut nbrs: HashMap<VertexId, Vec<VertexId>> = HashMap::new();
    for e in g.edges() {
        let su = side[e.u() as usize];
        let sv = side[e.v() as usize];
        if su == 0 || sv == 0 {
            continue;
        }
        if su == sv {
            return Err(Error::Structure(format!(
                "induced edge {} does not cross the bipartition",
                e
            )));
        }
        nbrs.entry(e.u()).or_default().push(e.v());
        nbrs.entry(e.v()).or_default().push(e.u());
    }
    for &v in a.iter().chain(b.iter()) {
        match nbrs.get(&v) {
            Some(n) if n.len() == 2 => {}
            _ => {
                return Err(Error::Structure(format!(
                    "vertex {v} has induced degree != 2"
                )))
            }
        }
    }

    let mut starts: Vec<VertexId> = nbrs.keys().copied().collect();
    starts.sort_unstable();
    let mut visited: HashMap<VertexId, bool> = HashMap::with_capacity(nbrs.len());
    let mut m_ab = Vec::new();
    let mut m_ba = Vec::new();
    for &start in &starts {
        if visited.contains_key(&start) {
            continue;
        }
        let (first, second) = if side[start as usize] == SIDE_A {
            (&mut m_ab, &mut m_ba)
        } else {
            (&mut m_ba, &mut m_ab)
        };
        let mut prev = start;
        let mut cur = *nbrs[&start].iter().min().unwrap();
        visited.insert(start, true);
        let mut parity = 0usize;
        loop {
            if parity == 0 {
                first.push(Edge::new(prev, cur));
            } else {
                second.push(Edge::new(prev, cur));
            }
            parity ^= 1;
            if cur == start {
                break;
            }
            visited.insert(cur, true);
            let n = &nbrs[&cur];
            let next = if n[0] == prev { n[1] } else { n[0] };
            prev = cur;
            cur = next;
        }
    }
    m_ab.sort_unstable();
    m_ba.sort_unstable();
    Ok((m_ab, m_ba))
}

/// A class of the partition lifted into Q_{2^k+1} by appending a 3-bit
/// suffix as the top coordinates.
#[derive(Debug, Clone)]
pub struct ExtendedClass {
    /// 0-based index of the base class.
    pub base: usize,
    pub suffix: u8,
    pub vertices: Vec<VertexId>,
}

pub fn extend_class(p: &ClassPartition, i: usize, c: u8) -> ExtendedClass {
    assert!(i < p.class_count(), "class index out of range");
    assert!(c < 8, "suffix must be a 3-bit codeword");
    let shift = p.dimension();
    ExtendedClass {
        base: i,
        suffix: c,
        vertices: p.classes[i]
            .iter()
            .map(|&v| v + ((c as VertexId) << shift))
            .collect(),
    }
}
