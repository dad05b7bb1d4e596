//! `M`-alternating cycles: enumeration through the orientation digraph, and
//! the geometric data attached to each cycle (orientation, interior cells).

use crate::error::{Error, Result};
use crate::hexcore::{is_linear_chain_cells, signed_area2, Cell, HexSystem, SubGraph};
use crate::matchings::{alternating_digraph, Matching};
use fixedbitset::FixedBitSet;
use serde::Serialize;

/// Default limit on the number of alternating cycles enumerated for a single
/// matching.
pub const DEFAULT_CYCLE_CAP: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// Matched edges run white to black along the clockwise traversal.
    Proper,
    Improper,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltCycle {
    vertices: Vec<usize>,
    edges: Vec<usize>,
    vertex_mask: FixedBitSet,
    edge_mask: FixedBitSet,
    matched: FixedBitSet,
    orientation: Orientation,
    interior: FixedBitSet,
}

impl AltCycle {
    /// Builds a cycle from its vertex sequence (either direction, any start)
    /// and checks that it alternates with respect to `matching`.
    pub fn from_vertices(system: &HexSystem, matching: &Matching, vertices: &[usize]) -> Result<Self> {
        let k = vertices.len();
        if k < 6 || k % 2 == 1 {
            return Err(Error::NotAlternating);
        }
        let mut seq = vertices.to_vec();
        if signed_area2(system.points(), &seq) > 0 {
            seq.reverse();
        }
        let start = (0..k).min_by_key(|&i| seq[i]).unwrap();
        seq.rotate_left(start);

        let mut edges = Vec::with_capacity(k);
        for i in 0..k {
            let e = system
                .edge_between(seq[i], seq[(i + 1) % k])
                .ok_or(Error::NotAlternating)?;
            edges.push(e);
        }
        if (0..k).any(|i| matching.contains(edges[i]) == matching.contains(edges[(i + 1) % k])) {
            return Err(Error::NotAlternating);
        }
        let mut vertex_mask = FixedBitSet::with_capacity(system.vertex_count());
        for &v in &seq {
            if vertex_mask.put(v) {
                return Err(Error::NotAlternating);
            }
        }
        let mut edge_mask = FixedBitSet::with_capacity(system.edge_count());
        let mut matched = FixedBitSet::with_capacity(system.edge_count());
        for &e in &edges {
            edge_mask.insert(e);
            if matching.contains(e) {
                matched.insert(e);
            }
        }
        let first_matched = if matching.contains(edges[0]) { 0 } else { 1 };
        let (tail, head) = (seq[first_matched], seq[(first_matched + 1) % k]);
        let orientation = if !system.is_black(tail) && system.is_black(head) {
            Orientation::Proper
        } else {
            Orientation::Improper
        };
        let interior = interior_cells(system, &seq);
        Ok(AltCycle {
            vertices: seq,
            edges,
            vertex_mask,
            edge_mask,
            matched,
            orientation,
            interior,
        })
    }

    pub fn from_hexagon(system: &HexSystem, matching: &Matching, hexagon: usize) -> Result<Self> {
        Self::from_vertices(system, matching, &system.hexagon(hexagon).vertices)
    }

    /// Vertex ids, clockwise, starting from the smallest id.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// `edges()[i]` joins `vertices()[i]` and `vertices()[i + 1]`.
    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertex_mask(&self) -> &FixedBitSet {
        &self.vertex_mask
    }

    pub fn edge_mask(&self) -> &FixedBitSet {
        &self.edge_mask
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// Indices (into `HexSystem::cells`) of the cells enclosed by the cycle.
    pub fn interior(&self) -> &FixedBitSet {
        &self.interior
    }

    pub fn interior_cells(&self, system: &HexSystem) -> Vec<Cell> {
        self.interior.ones().map(|i| system.cells()[i]).collect()
    }

    /// Number of hexagons in the cycle together with its interior.
    pub fn h(&self) -> usize {
        self.interior.count_ones(..)
    }

    /// The hexagon index when the cycle is the boundary of a single hexagon.
    pub fn as_hexagon(&self) -> Option<usize> {
        (self.len() == 6).then(|| self.interior.ones().next()).flatten()
    }

    pub fn record(&self) -> CycleRecord {
        CycleRecord {
            vertices: self.vertices.clone(),
            orientation: self.orientation,
            h: self.h(),
        }
    }
}

/// Serialized form of a cycle.
#[derive(Clone, Debug, Serialize)]
pub struct CycleRecord {
    pub vertices: Vec<usize>,
    pub orientation: Orientation,
    pub h: usize,
}

/// Cells whose centers lie strictly inside the closed vertex sequence.
///
/// A horizontal ray from a cell center never meets a lattice vertex and only
/// crosses vertical edges, so counting the vertical cycle edges to the right of
/// the center on the same row decides membership exactly.
fn interior_cells(system: &HexSystem, cycle: &[usize]) -> FixedBitSet {
    let k = cycle.len();
    let verticals: Vec<(i32, i32)> = (0..k)
        .filter_map(|i| {
            let a = system.point(cycle[i]);
            let b = system.point(cycle[(i + 1) % k]);
            (a.x == b.x).then_some((a.x, a.y.min(b.y) + 1))
        })
        .collect();
    let mut inside = FixedBitSet::with_capacity(system.hexagon_count());
    for (i, cell) in system.cells().iter().enumerate() {
        let c = cell.center();
        let crossings = verticals.iter().filter(|&&(x, y)| y == c.y && x > c.x).count();
        if crossings % 2 == 1 {
            inside.insert(i);
        }
    }
    inside
}

/// All `M`-alternating cycles of `system`, each exactly once, sorted by length
/// and then by vertex sequence.
///
/// Fails with [`Error::CycleCapExceeded`] instead of truncating when more than
/// `cap` cycles exist.
pub fn enumerate_alt_cycles(system: &HexSystem, matching: &Matching, cap: usize) -> Result<Vec<AltCycle>> {
    let succ = alternating_digraph(&SubGraph::full(system), matching.mask());
    let mut raw = Vec::new();
    simple_cycles(&succ, cap, &mut raw)?;
    let mut cycles = raw
        .iter()
        .map(|vs| AltCycle::from_vertices(system, matching, vs))
        .collect::<Result<Vec<_>>>()?;
    cycles.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.vertices.cmp(&b.vertices)));
    Ok(cycles)
}

/// Johnson's elementary-circuit enumeration: for each start vertex `s`, search
/// the strongly connected component of `s` within the vertices `>= s`.
fn simple_cycles(succ: &[Vec<(usize, usize)>], cap: usize, out: &mut Vec<Vec<usize>>) -> Result<()> {
    let n = succ.len();
    let mut pred = vec![Vec::new(); n];
    for (v, list) in succ.iter().enumerate() {
        for &(w, _) in list {
            pred[w].push(v);
        }
    }
    let mut state = Johnson {
        succ,
        allowed: FixedBitSet::with_capacity(n),
        blocked: FixedBitSet::with_capacity(n),
        block_map: vec![Vec::new(); n],
        stack: Vec::new(),
        start: 0,
        cap,
        out,
    };
    for s in 0..n {
        let comp = component_of(succ, &pred, s);
        if comp.count_ones(..) < 2 {
            continue;
        }
        state.allowed = comp;
        state.blocked.clear();
        for list in &mut state.block_map {
            list.clear();
        }
        state.start = s;
        state.circuit(s)?;
    }
    Ok(())
}

fn component_of(succ: &[Vec<(usize, usize)>], pred: &[Vec<usize>], s: usize) -> FixedBitSet {
    let n = succ.len();
    let reach = |forward: bool| {
        let mut seen = FixedBitSet::with_capacity(n);
        seen.insert(s);
        let mut todo = vec![s];
        while let Some(v) = todo.pop() {
            let next: Vec<usize> = if forward {
                succ[v].iter().map(|&(w, _)| w).collect()
            } else {
                pred[v].clone()
            };
            for w in next {
                if w >= s && !seen.put(w) {
                    todo.push(w);
                }
            }
        }
        seen
    };
    let mut comp = reach(true);
    comp.intersect_with(&reach(false));
    comp
}

struct Johnson<'a> {
    succ: &'a [Vec<(usize, usize)>],
    allowed: FixedBitSet,
    blocked: FixedBitSet,
    block_map: Vec<Vec<usize>>,
    stack: Vec<usize>,
    start: usize,
    cap: usize,
    out: &'a mut Vec<Vec<usize>>,
}

impl Johnson<'_> {
    fn circuit(&mut self, v: usize) -> Result<bool> {
        let mut found = false;
        self.stack.push(v);
        self.blocked.insert(v);
        for &(w, _) in self.succ[v].iter() {
            if !self.allowed.contains(w) {
                continue;
            }
            if w == self.start {
                if self.out.len() >= self.cap {
                    return Err(Error::CycleCapExceeded { cap: self.cap });
                }
                self.out.push(self.stack.clone());
                found = true;
            } else if !self.blocked.contains(w) && self.circuit(w)? {
                found = true;
            }
        }
        if found {
            self.unblock(v);
        } else {
            for &(w, _) in self.succ[v].iter() {
                if self.allowed.contains(w) && !self.block_map[w].contains(&v) {
                    self.block_map[w].push(v);
                }
            }
        }
        self.stack.pop();
        Ok(found)
    }

    fn unblock(&mut self, v: usize) {
        let mut todo = vec![v];
        while let Some(u) = todo.pop() {
            if self.blocked.contains(u) {
                self.blocked.set(u, false);
                todo.append(&mut self.block_map[u]);
            }
        }
    }
}

/// Hexagons whose six edges alternate in `matching`; `fr(H, M)` is the count.
pub fn alternating_hexagons(system: &HexSystem, matching: &Matching) -> Vec<usize> {
    system
        .hexagons()
        .iter()
        .enumerate()
        .filter(|(_, hex)| (0..6).all(|i| matching.contains(hex.edges[i]) != matching.contains(hex.edges[(i + 1) % 6])))
        .map(|(i, _)| i)
        .collect()
}

/// Disjoint, or meeting only in matched edges (and their endpoints).
pub fn compatible(a: &AltCycle, b: &AltCycle) -> bool {
    let mut shared = a.edge_mask.clone();
    shared.intersect_with(&b.edge_mask);
    if !shared.is_subset(&a.matched) {
        return false;
    }
    a.vertex_mask.intersection_count(&b.vertex_mask) == 2 * shared.count_ones(..)
}

pub fn vertex_disjoint(a: &AltCycle, b: &AltCycle) -> bool {
    a.vertex_mask.is_disjoint(&b.vertex_mask)
}

/// Interiors disjoint or nested.
pub fn non_crossing(a: &AltCycle, b: &AltCycle) -> bool {
    a.interior.is_disjoint(&b.interior) || a.interior.is_subset(&b.interior) || b.interior.is_subset(&a.interior)
}

/// Whether the hexagons of `I[C]` form a linear chain.
pub fn is_linear_chain_interior(system: &HexSystem, cycle: &AltCycle) -> bool {
    is_linear_chain_cells(&cycle.interior_cells(system))
}

/// An `M`-alternating hexagon among the cells enclosed by `cycle`, if any.
pub fn interior_alternating_hexagon(system: &HexSystem, matching: &Matching, cycle: &AltCycle) -> Option<usize> {
    alternating_hexagons(system, matching)
        .into_iter()
        .find(|&h| cycle.interior.contains(h))
}
