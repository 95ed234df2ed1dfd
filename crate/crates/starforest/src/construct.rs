//! Galaxy constructions for hypercubes and the planner that composes them
//! into the best upper-bound decomposition of Q_n this toolkit knows.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::decomp::{verify_decomposition, GalaxyDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};
use crate::partition::{extend_class, split_two_regular, truszczynski_partition};

/// Largest dimension a plan may target.
pub const MAX_PLAN_DIMENSION: u32 = 24;
/// Largest dimension a decomposition may materialize.
pub const MAX_DECOMPOSE_DIMENSION: u32 = 17;

// ---------------------------------------------------------------------------
// Plans

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlanStep {
    Base(u32),
    PowerMinus2(u32),
    PowerPlus1(u32),
    Product(Box<PlanStep>, Box<PlanStep>),
    PlusOne(Box<PlanStep>),
    MinusOne(Box<PlanStep>),
}

impl PlanStep {
    pub fn dimension(&self) -> u32 {
        match self {
            PlanStep::Base(n) => *n,
            PlanStep::PowerMinus2(k) => (1 << k) - 2,
            PlanStep::PowerPlus1(k) => (1 << k) + 1,
            PlanStep::Product(a, b) => a.dimension() + b.dimension(),
            PlanStep::PlusOne(c) => c.dimension() + 1,
            PlanStep::MinusOne(c) => c.dimension() - 1,
        }
    }

    pub fn predicted_count(&self) -> usize {
        match self {
            PlanStep::Base(n) => *n as usize,
            PlanStep::PowerMinus2(k) => 1 << (k - 1),
            PlanStep::PowerPlus1(k) => (1 << (k - 1)) + 2,
            PlanStep::Product(a, b) => a.predicted_count() + b.predicted_count(),
            PlanStep::PlusOne(c) => c.predicted_count() + 1,
            PlanStep::MinusOne(c) => c.predicted_count(),
        }
    }
}

impl fmt::Display for PlanStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlanStep::Base(n) => write!(f, "Base({n})"),
            PlanStep::PowerMinus2(k) => write!(f, "PowerMinus2({k})"),
            PlanStep::PowerPlus1(k) => write!(f, "PowerPlus1({k})"),
            PlanStep::Product(a, b) => write!(f, "Product({a}, {b})"),
            PlanStep::PlusOne(c) => write!(f, "PlusOne({c})"),
            PlanStep::MinusOne(c) => write!(f, "MinusOne({c})"),
        }
    }
}

impl FromStr for PlanStep {
    type Err = Error;

    fn from_str(s: &str) -> Result<PlanStep> {
        let mut p = PlanParser { s: s.as_bytes(), pos: 0 };
        let step = p.step()?;
        p.skip_ws();
        if p.pos != p.s.len() {
            return Err(Error::InvalidArgument(format!(
                "trailing input at byte {} of plan expression",
                p.pos
            )));
        }
        Ok(step)
    }
}

struct PlanParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl PlanParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        self.skip_ws();
        if self.pos < self.s.len() && self.s[self.pos] == b {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "expected '{}' at byte {} of plan expression",
                b as char, self.pos
            )))
        }
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.s[start..self.pos]).into_owned()
    }

    fn number(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| {
                Error::InvalidArgument(format!("expected a number at byte {start} of plan expression"))
            })
    }

    fn step(&mut self) -> Result<PlanStep> {
        let name = self.ident();
        self.expect(b'(')?;
        let step = match name.as_str() {
            "Base" => PlanStep::Base(self.number()?),
            "PowerMinus2" => PlanStep::PowerMinus2(self.number()?),
            "PowerPlus1" => PlanStep::PowerPlus1(self.number()?),
            "Product" => {
                let a = self.step()?;
                self.expect(b',')?;
                let b = self.step()?;
                PlanStep::Product(Box::new(a), Box::new(b))
            }
            "PlusOne" => PlanStep::PlusOne(Box::new(self.step()?)),
            "MinusOne" => PlanStep::MinusOne(Box::new(self.step()?)),
            other => {
                return Err(Error::InvalidArgument(format!(
                    "unknown plan constructor '{other}'"
                )))
            }
        };
        self.expect(b')')?;
        Ok(step)
    }
}

#[derive(Debug, Clone)]
pub struct DecompositionPlan {
    pub n: u32,
    pub root: PlanStep,
    pub predicted_count: usize,
}

fn power_minus2_k(n: u32) -> Option<u32> {
    (2..=5).find(|&k| (1u32 << k) - 2 == n)
}

fn power_plus1_k(n: u32) -> Option<u32> {
    (2..=4).find(|&k| (1u32 << k) + 1 == n)
}

/// Best class counts achievable for 1..=MAX_PLAN_DIMENSION, by relaxation
/// over all construction rules until a fixed point.
fn best_counts() -> [usize; (MAX_PLAN_DIMENSION + 1) as usize] {
    const NONE: usize = usize::MAX;
    let top = MAX_PLAN_DIMENSION as usize;
    let mut best = [NONE; (MAX_PLAN_DIMENSION + 1) as usize];
    loop {
        let mut changed = false;
        for n in 1..=top as u32 {
            let i = n as usize;
            let mut relax = |cand: usize, best: &mut [usize]| {
                if cand < best[i] {
                    best[i] = cand;
                    changed = true;
                }
            };
            if n <= 3 {
                relax(n as usize, &mut best);
            }
            if let Some(k) = power_minus2_k(n) {
                relax(1usize << (k - 1), &mut best);
            }
            if let Some(k) = power_plus1_k(n) {
                relax((1usize << (k - 1)) + 2, &mut best);
            }
            for a in 2..=n.saturating_sub(2) {
                let (x, y) = (best[a as usize], best[(n - a) as usize]);
                if x != NONE && y != NONE {
                    relax(x + y, &mut best);
                }
            }
            if n >= 2 && best[i - 1] != NONE {
                relax(best[i - 1] + 1, &mut best);
            }
            if (n as usize) < top && best[i + 1] != NONE {
                relax(best[i + 1], &mut best);
            }
        }
        if !changed {
            break;
        }
    }
    best
}

/// First construction achieving the optimal count, in the deterministic
/// priority order Base < PowerMinus2 < PowerPlus1 < Product < PlusOne <
/// MinusOne. Product factors are both at least 2-dimensional; a Q_1 factor
/// is the PlusOne step.
fn reconstruct(n: u32, best: &[usize]) -> PlanStep {
    let target = best[n as usize];
    if n <= 3 && n as usize == target {
        return PlanStep::Base(n);
    }
    if let Some(k) = power_minus2_k(n) {
        if 1usize << (k - 1) == target {
            return PlanStep::PowerMinus2(k);
        }
    }
    if let Some(k) = power_plus1_k(n) {
        if (1usize << (k - 1)) + 2 == target {
            return PlanStep::PowerPlus1(k);
        }
    }
    for a in (n.div_ceil(2)..=n.saturating_sub(2)).rev() {
        let b = n - a;
        if b < 2 {
            continue;
        }
        if best[a as usize] != usize::MAX
            && best[b as usize] != usize::MAX
            && best[a as usize] + best[b as usize] == target
        {
            return PlanStep::Product(
                Box::new(reconstruct(a, best)),
                Box::new(reconstruct(b, best)),
            );
        }
    }
    if n >= 2 && best[(n - 1) as usize] != usize::MAX && best[(n - 1) as usize] + 1 == target {
        return PlanStep::PlusOne(Box::new(reconstruct(n - 1, best)));
    }
    if n < MAX_PLAN_DIMENSION && best[(n + 1) as usize] == target {
        return PlanStep::MinusOne(Box::new(reconstruct(n + 1, best)));
    }
    unreachable!("best count {target} for n={n} not realized by any rule");
}

pub fn plan(n: u32) -> Result<DecompositionPlan> {
    if !(1..=MAX_PLAN_DIMENSION).contains(&n) {
        return Err(Error::Capacity(format!(
            "plan dimension {n} outside 1..={MAX_PLAN_DIMENSION}"
        )));
    }
    let best = best_counts();
    let root = reconstruct(n, &best);
    debug_assert_eq!(root.dimension(), n);
    Ok(DecompositionPlan {
        n,
        predicted_count: root.predicted_count(),
        root,
    })
}

/// Minimal number of terms l in the representation n = sum of distinct
/// (2^{i_j} - 2) plus a remainder in R = {2^k+2, 2^s+2^t-4}, for even n.
/// Returns None when no such representation exists (n = 2 only, within
/// range).
pub fn min_terms_representation(n: u32) -> Option<u32> {
    fn in_r(r: u32) -> bool {
        (2..=5).any(|k| (1u32 << k) + 2 == r)
            || (2..=5).any(|s| (2..=s).any(|t| (1u32 << s) + (1u32 << t) - 4 == r))
    }
    fn rec(n: u32, max_i: u32) -> Option<u32> {
        if in_r(n) {
            return Some(0);
        }
        let mut best = None;
        for i in (2..=max_i).rev() {
            let term = (1u32 << i) - 2;
            if term + 4 <= n {
                if let Some(sub) = rec(n - term, i - 1) {
                    best = Some(best.map_or(sub + 1, |b: u32| b.min(sub + 1)));
                }
            }
        }
        best
    }
    if !n.is_multiple_of(2) {
        return None;
    }
    rec(n, 5)
}

// ---------------------------------------------------------------------------
// Base and composed constructions

pub fn decompose_base(n: u32) -> Result<GalaxyDecomposition> {
    match n {
        1 => Ok(GalaxyDecomposition::new(
            Graph::hypercube(1)?,
            vec![vec![Edge::new(0, 1)]],
            "Base(1)",
        )),
        2 => Ok(GalaxyDecomposition::new(
            Graph::hypercube(2)?,
            vec![
                vec![Edge::new(0, 1), Edge::new(2, 3)],
                vec![Edge::new(0, 2), Edge::new(1, 3)],
            ],
            "Base(2)",
        )),
        3 => {
            let mut d = product_compose(&decompose_base(2)?, &decompose_base(1)?)?;
            d.provenance = "Base(3)".into();
            Ok(d)
        }
        _ => Err(Error::InvalidArgument(format!(
            "base decomposition exists only for n in 1..=3, got {n}"
        ))),
    }
}

fn certify(d: GalaxyDecomposition) -> Result<GalaxyDecomposition> {
    let report = verify_decomposition(&d.graph, &d);
    if report.valid {
        Ok(d)
    } else {
        Err(Error::ConstructionBug(format!(
            "{} produced an invalid decomposition: {:?}",
            d.provenance,
            report.violations.first()
        )))
    }
}

/// Q_{2^k-2} into 2^{k-1} galaxies: class G_i is the union over j != i of
/// the directed matchings A_i -> A_j, so every star of G_i is centered in
/// A_i with 2^{k-1}-1 leaves.
pub fn decompose_power_minus2(k: u32) -> Result<GalaxyDecomposition> {
    if !(2..=4).contains(&k) {
        return Err(Error::InvalidArgument(format!(
            "power-minus-2 construction needs k in 2..=4, got {k}"
        )));
    }
    let g = Graph::hypercube((1 << k) - 2)?;
    let p = truszczynski_partition(k)?;
    let nc = p.class_count();
    let mut classes = vec![Vec::new(); nc];
    for i in 0..nc {
        for j in i + 1..nc {
            let (m_ij, m_ji) = split_two_regular(&g, &p.classes[i], &p.classes[j])?;
            classes[i].extend(m_ij);
            classes[j].extend(m_ji);
        }
    }
    certify(GalaxyDecomposition::new(
        g,
        classes,
        format!("PowerMinus2({k})"),
    ))
}

// ---------------------------------------------------------------------------
// Q_{2^k+1}

/// Witness that a residual graph splits into two galaxies: tripartite, where
/// V_1/V_2 vertices have degree 4 with exactly two neighbors in V_3, and
/// V_3 vertices have degree 2 touching both sides.
#[derive(Debug, Clone)]
pub struct TripartiteWitness {
    pub v1: Vec<VertexId>,
    pub v2: Vec<VertexId>,
    pub v3: Vec<VertexId>,
}

/// The intermediate state of the Q_{2^k+1} construction: the 2^{k-1} main
/// galaxies, the residual graph, and the tripartite witness for finishing
/// it in two more classes.
#[derive(Debug, Clone)]
pub struct PowerPlus1Parts {
    pub k: u32,
    pub graph: Graph,
    pub galaxies: Vec<Vec<Edge>>,
    pub residual: Graph,
    pub witness: TripartiteWitness,
}

/// 3-bit codewords of even weight.
const EVEN_SUFFIXES: [u8; 4] = [0b000, 0b011, 0b101, 0b110];

pub fn power_plus1_parts(k: u32) -> Result<PowerPlus1Parts> {
    if !(2..=4).contains(&k) {
        return Err(Error::InvalidArgument(format!(
            "power-plus-1 construction needs k in 2..=4, got {k}"
        )));
    }
    let m = (1u32 << k) - 2;
    let n = (1u32 << k) + 1;
    let g = Graph::hypercube(n)?;
    let p = truszczynski_partition(k)?;
    let nc = p.class_count();

    // Lifted classes for all eight suffix layers.
    let ext: Vec<Vec<Vec<VertexId>>> = (0..8u8)
        .map(|c| (0..nc).map(|i| extend_class(&p, i, c).vertices).collect())
        .collect();

    // Directed in-layer matchings, computed once per unordered pair.
    let mut matchings: HashMap<(u8, usize, usize), Vec<Edge>> = HashMap::new();
    let directed = |layer: u8, from: usize, to: usize, mats: &mut HashMap<(u8, usize, usize), Vec<Edge>>| -> Result<Vec<Edge>> {
        if let Some(m) = mats.get(&(layer, from, to)) {
            return Ok(m.clone());
        }
        let (ab, ba) = split_two_regular(&g, &ext[layer as usize][from], &ext[layer as usize][to])?;
        mats.insert((layer, from, to), ab.clone());
        mats.insert((layer, to, from), ba);
        Ok(ab)
    };

    let mut galaxies = vec![Vec::new(); nc];
    for i in 0..nc {
        let succ = (i + 1) % nc;
        for &c in &EVEN_SUFFIXES {
            let c1 = c ^ 1;
            // Stars centered in A_i(c): one directed matching toward every
            // other class, plus the parallel matching to A_i(c^1).
            for j in 0..nc {
                if j != i {
                    galaxies[i].extend(directed(c, i, j, &mut matchings)?);
                }
            }
            for &v in &ext[c as usize][i] {
                galaxies[i].push(Edge::new(v, v ^ (1 << m)));
            }
            // Stars centered in A_{i+1}(c^1), avoiding classes i and i+1.
            for kappa in 0..nc {
                if kappa != i && kappa != succ {
                    galaxies[i].extend(directed(c1, succ, kappa, &mut matchings)?);
                }
            }
        }
    }

    // Residual graph: everything not placed in the main galaxies.
    let mut used: HashSet<Edge> = HashSet::with_capacity(g.edge_count());
    for gal in &galaxies {
        used.extend(gal.iter().copied());
    }
    let residual_edges: Vec<Edge> = g.edges().iter().copied().filter(|e| !used.contains(e)).collect();
    let residual = Graph::new(g.vertex_count(), residual_edges)?;

    // Tripartite witness. V_3 is every even-suffix vertex; an odd-suffix
    // class goes to V_1 when (class parity, suffix) matches the fixed
    // pattern below, otherwise to V_2. Suffix bits are (c_1, c_2, c_3) =
    // (bit0, bit1, bit2), so the codewords 001/100/010/111 read as the
    // integers 4, 1, 2, 7.
    let mut v1 = Vec::new();
    let mut v2 = Vec::new();
    let mut v3 = Vec::new();
    for &c in &EVEN_SUFFIXES {
        for class in &ext[c as usize] {
            v3.extend_from_slice(class);
        }
    }
    for c in [1u8, 2, 4, 7] {
        for (i, class) in ext[c as usize].iter().enumerate() {
            let first_side = match c {
                1 | 4 => i % 2 == 1,
                _ => i % 2 == 0,
            };
            if first_side {
                v1.extend_from_slice(class);
            } else {
                v2.extend_from_slice(class);
            }
        }
    }
    v1.sort_unstable();
    v2.sort_unstable();
    v3.sort_unstable();

    Ok(PowerPlus1Parts {
        k,
        graph: g,
        galaxies,
        residual,
        witness: TripartiteWitness { v1, v2, v3 },
    })
}

/// Decomposes a graph satisfying the tripartite witness conditions into
/// exactly two galaxies, all of whose stars are K_{1,3}.
pub fn lg1_decompose(g: &Graph, w: &TripartiteWitness) -> Result<(Vec<Edge>, Vec<Edge>)> {
    let mut part = vec![0u8; g.vertex_count()];
    for (side, set) in [(1u8, &w.v1), (2, &w.v2), (3, &w.v3)] {
        for &v in set {
            if part[v as usize] != 0 {
                return Err(Error::Witness { condition: 1, vertex: v });
            }
            part[v as usize] = side;
        }
    }
    let mut deg = vec![0u32; g.vertex_count()];
    let mut deg_to_v3 = vec![0u32; g.vertex_count()];
    let mut v3_sides: Vec<u8> = vec![0; g.vertex_count()];
    for e in g.edges() {
        let (u, v) = e.endpoints();
        let (pu, pv) = (part[u as usize], part[v as usize]);
        if pu == 0 {
            return Err(Error::Witness { condition: 1, vertex: u });
        }
        if pv == 0 {
            return Err(Error::Witness { condition: 1, vertex: v });
        }
        if pu == pv {
            // An edge inside one part breaks tripartiteness.
            return Err(Error::Witness { condition: 1, vertex: u });
        }
        deg[u as usize] += 1;
        deg[v as usize] += 1;
        if pv == 3 {
            deg_to_v3[u as usize] += 1;
            v3_sides[v as usize] |= pu;
        }
        if pu == 3 {
            deg_to_v3[v as usize] += 1;
            v3_sides[u as usize] |= pv;
        }
    }
    for &v in w.v1.iter().chain(w.v2.iter()) {
        if deg[v as usize] != 4 {
            return Err(Error::Witness { condition: 2, vertex: v });
        }
        if deg_to_v3[v as usize] != 2 {
            return Err(Error::Witness { condition: 3, vertex: v });
        }
    }
    for &v in &w.v3 {
        if deg[v as usize] != 2 {
            return Err(Error::Witness { condition: 2, vertex: v });
        }
        if v3_sides[v as usize] != 3 {
            return Err(Error::Witness { condition: 3, vertex: v });
        }
    }

    // The induced graph H on V_1 u V_2 is 2-regular and bipartite, hence a
    // disjoint union of even cycles; walk each into two perfect matchings.
    let mut h_nbrs: HashMap<VertexId, Vec<VertexId>> = HashMap::new();
    let mut class1 = Vec::new();
    let mut class2 = Vec::new();
    for e in g.edges() {
        let (u, v) = e.endpoints();
        let (pu, pv) = (part[u as usize], part[v as usize]);
        match (pu, pv) {
            (3, 1) | (1, 3) => class1.push(*e),
            (3, 2) | (2, 3) => class2.push(*e),
            _ => {
                h_nbrs.entry(u).or_default().push(v);
                h_nbrs.entry(v).or_default().push(u);
            }
        }
    }
    let mut starts: Vec<VertexId> = h_nbrs.keys().copied().collect();
    starts.sort_unstable();
    let mut visited: HashSet<VertexId> = HashSet::with_capacity(h_nbrs.len());
    for &start in &starts {
        if visited.contains(&start) {
            continue;
        }
        let start_in_v1 = part[start as usize] == 1;
        let mut prev = start;
        let mut cur = *h_nbrs[&start].iter().min().unwrap();
        visited.insert(start);
        let mut parity = 0usize;
        loop {
            let to_first = (parity == 0) == start_in_v1;
            if to_first {
                class1.push(Edge::new(prev, cur));
            } else {
                class2.push(Edge::new(prev, cur));
            }
            parity ^= 1;
            if cur == start {
                break;
            }
            visited.insert(cur);
            let n = &h_nbrs[&cur];
            let next = if n[0] == prev { n[1] } else { n[0] };
            prev = cur;
            cur = next;
        }
    }
    class1.sort_unstable();
    class2.sort_unstable();
    Ok((class1, class2))
}

/// Q_{2^k+1} into 2^{k-1}+2 galaxies.
pub fn decompose_power_plus1(k: u32) -> Result<GalaxyDecomposition> {
    let parts = power_plus1_parts(k)?;
    let (c1, c2) = lg1_decompose(&parts.residual, &parts.witness)?;
    let mut classes = parts.galaxies;
    classes.push(c1);
    classes.push(c2);
    certify(GalaxyDecomposition::new(
        parts.graph,
        classes,
        format!("PowerPlus1({k})"),
    ))
}

// ---------------------------------------------------------------------------
// Composition steps

/// Decomposition of the cartesian product with |dg| + |dh| classes: each
/// factor class is replicated across all fibers of the other factor.
pub fn product_compose(
    dg: &GalaxyDecomposition,
    dh: &GalaxyDecomposition,
) -> Result<GalaxyDecomposition> {
    let graph = dg.graph.cartesian_product(&dh.graph)?;
    let n = dg.graph.vertex_count() as VertexId;
    let mut classes = Vec::with_capacity(dg.class_count() + dh.class_count());
    for class in &dg.classes {
        let mut out = Vec::with_capacity(class.len() * dh.graph.vertex_count());
        for b in 0..dh.graph.vertex_count() as VertexId {
            for e in class {
                out.push(Edge::new(e.u() + b * n, e.v() + b * n));
            }
        }
        classes.push(out);
    }
    for class in &dh.classes {
        let mut out = Vec::with_capacity(class.len() * dg.graph.vertex_count());
        for e in class {
            for a in 0..n {
                out.push(Edge::new(a + e.u() * n, a + e.v() * n));
            }
        }
        classes.push(out);
    }
    certify(GalaxyDecomposition::new(
        graph,
        classes,
        format!("Product({}, {})", dg.provenance, dh.provenance),
    ))
}

/// Q_n to Q_{n+1}: class i becomes its union over both fibers, and the
/// cross perfect matching forms one extra class.
pub fn extend_plus_one(d: &GalaxyDecomposition) -> Result<GalaxyDecomposition> {
    let n = d.graph.dimension().ok_or_else(|| {
        Error::InvalidArgument("extend_plus_one needs a hypercube decomposition".into())
    })?;
    let graph = Graph::hypercube(n + 1)?;
    let shift: VertexId = 1 << n;
    let mut classes: Vec<Vec<Edge>> = d
        .classes
        .iter()
        .map(|class| {
            let mut out = Vec::with_capacity(class.len() * 2);
            for e in class {
                out.push(*e);
                out.push(Edge::new(e.u() + shift, e.v() + shift));
            }
            out
        })
        .collect();
    classes.push((0..shift).map(|v| Edge::new(v, v + shift)).collect());
    certify(GalaxyDecomposition::new(
        graph,
        classes,
        format!("PlusOne({})", d.provenance),
    ))
}

/// Q_n to Q_{n-1}: every class restricted to the sub-hypercube of vertices
/// with top bit 0; empty classes are dropped.
pub fn restrict_minus_one(d: &GalaxyDecomposition) -> Result<GalaxyDecomposition> {
    let n = d.graph.dimension().ok_or_else(|| {
        Error::InvalidArgument("restrict_minus_one needs a hypercube decomposition".into())
    })?;
    if n < 2 {
        return Err(Error::InvalidArgument(
            "cannot restrict below dimension 1".into(),
        ));
    }
    let graph = Graph::hypercube(n - 1)?;
    let half: VertexId = 1 << (n - 1);
    let classes: Vec<Vec<Edge>> = d
        .classes
        .iter()
        .map(|class| class.iter().copied().filter(|e| e.v() < half).collect::<Vec<_>>())
        .filter(|c: &Vec<Edge>| !c.is_empty())
        .collect();
    certify(GalaxyDecomposition::new(
        graph,
        classes,
        format!("MinusOne({})", d.provenance),
    ))
}

// ---------------------------------------------------------------------------
// Executor

pub fn execute_plan(step: &PlanStep) -> Result<GalaxyDecomposition> {
    match step {
        PlanStep::Base(n) => decompose_base(*n),
        PlanStep::PowerMinus2(k) => decompose_power_minus2(*k),
        PlanStep::PowerPlus1(k) => decompose_power_plus1(*k),
        PlanStep::Product(a, b) => product_compose(&execute_plan(a)?, &execute_plan(b)?),
        PlanStep::PlusOne(c) => extend_plus_one(&execute_plan(c)?),
        PlanStep::MinusOne(c) => restrict_minus_one(&execute_plan(c)?),
    }
}

/// Plans and materializes a verified decomposition of Q_n with exactly the
/// planner's predicted class count.
pub fn decompose(n: u32) -> Result<GalaxyDecomposition> {
    if !(1..=MAX_DECOMPOSE_DIMENSION).contains(&n) {
        return Err(Error::Capacity(format!(
            "decompose dimension {n} outside 1..={MAX_DECOMPOSE_DIMENSION}"
        )));
    }
    let p = plan(n)?;
    let mut d = execute_plan(&p.root)?;
    if d.class_count() != p.predicted_count {
        return Err(Error::ConstructionBug(format!(
            "plan for n={n} predicted {} classes but produced {}",
            p.predicted_count,
            d.class_count()
        )));
    }
    d.provenance = p.root.to_string();
    Ok(d)
}
