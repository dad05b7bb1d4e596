use super::cell::{Cell, Point};
use crate::error::{Error, Result};
use fixedbitset::FixedBitSet;
use std::collections::{HashMap, HashSet, VecDeque};

/// An undirected edge between vertex ids `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn other(self, w: usize) -> usize {
        if w == self.u {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Clone, Debug)]
pub struct Hexagon {
    pub cell: Cell,
    /// Corner vertex ids, clockwise from the top corner.
    pub vertices: [usize; 6],
    /// `edges[i]` joins `vertices[i]` and `vertices[i + 1]`.
    pub edges: [usize; 6],
    pub external: bool,
}

/// A validated hexagonal system: a simply connected, edge-connected set of
/// lattice cells together with its plane bipartite graph.
///
/// Vertices are numbered top to bottom, left to right; edges are numbered by
/// their sorted `(u, v)` pairs. Immutable after [`HexSystem::build`].
#[derive(Clone, Debug)]
pub struct HexSystem {
    cells: Vec<Cell>,
    cell_index: HashMap<Cell, usize>,
    points: Vec<Point>,
    edges: Vec<Edge>,
    edge_lookup: HashMap<(usize, usize), usize>,
    adjacency: Vec<Vec<(usize, usize)>>,
    black: Vec<bool>,
    hexagons: Vec<Hexagon>,
    boundary: Vec<usize>,
    boundary_edges: FixedBitSet,
}

impl HexSystem {
    pub fn build(cells: &[Cell]) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::Empty);
        }
        let mut sorted = cells.to_vec();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateCell(w[0]));
        }
        let cell_index: HashMap<Cell, usize> = sorted.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        if !cells_connected(&sorted, &cell_index) {
            return Err(Error::Disconnected);
        }

        let mut points: Vec<Point> = sorted
            .iter()
            .flat_map(|c| c.corners())
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        points.sort_by_key(|p| (-p.y, p.x));
        let point_index: HashMap<Point, usize> = points.iter().enumerate().map(|(i, &p)| (p, i)).collect();

        let mut pairs: Vec<(usize, usize)> = Vec::new();
        let mut hex_vertices = Vec::with_capacity(sorted.len());
        for c in &sorted {
            let ids = c.corners().map(|p| point_index[&p]);
            for i in 0..6 {
                let (a, b) = (ids[i], ids[(i + 1) % 6]);
                pairs.push((a.min(b), a.max(b)));
            }
            hex_vertices.push(ids);
        }
        let mut face_count: HashMap<(usize, usize), usize> = HashMap::new();
        for &p in &pairs {
            *face_count.entry(p).or_default() += 1;
        }
        let mut unique: Vec<(usize, usize)> = face_count.keys().copied().collect();
        unique.sort();
        let edges: Vec<Edge> = unique.iter().map(|&(u, v)| Edge { u, v }).collect();
        let edge_lookup: HashMap<(usize, usize), usize> = unique.iter().enumerate().map(|(i, &p)| (p, i)).collect();

        let (n, m, h) = (points.len(), edges.len(), sorted.len());
        if m != n + h - 1 {
            return Err(Error::Hole {
                vertices: n,
                edges: m,
                cells: h,
                expected: n + h - 1,
            });
        }

        let mut adjacency = vec![Vec::new(); n];
        for (id, e) in edges.iter().enumerate() {
            adjacency[e.u].push((e.v, id));
            adjacency[e.v].push((e.u, id));
        }
        for list in &mut adjacency {
            list.sort();
        }
        if has_cut_vertex(&adjacency) {
            return Err(Error::NotBiconnected);
        }

        let mut boundary_edges = FixedBitSet::with_capacity(m);
        for (&pair, &count) in &face_count {
            if count == 1 {
                boundary_edges.insert(edge_lookup[&pair]);
            }
        }

        let hexagons = sorted
            .iter()
            .zip(hex_vertices)
            .map(|(&cell, vertices)| {
                let edges = std::array::from_fn(|i| {
                    let (a, b) = (vertices[i], vertices[(i + 1) % 6]);
                    edge_lookup[&(a.min(b), a.max(b))]
                });
                let external = edges.iter().any(|&e| boundary_edges.contains(e));
                Hexagon {
                    cell,
                    vertices,
                    edges,
                    external,
                }
            })
            .collect();

        let black = peak_coloring(&points, &adjacency);
        let boundary = trace_boundary(&points, &edges, &adjacency, &boundary_edges);

        Ok(HexSystem {
            cells: sorted,
            cell_index,
            points,
            edges,
            edge_lookup,
            adjacency,
            black,
            hexagons,
            boundary,
            boundary_edges,
        })
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell_id(&self, cell: Cell) -> Option<usize> {
        self.cell_index.get(&cell).copied()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        self.cell_index.contains_key(&cell)
    }

    pub fn vertex_count(&self) -> usize {
        self.points.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn hexagon_count(&self) -> usize {
        self.cells.len()
    }

    pub fn point(&self, v: usize) -> Point {
        self.points[v]
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn edge(&self, e: usize) -> Edge {
        self.edges[e]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_between(&self, a: usize, b: usize) -> Option<usize> {
        self.edge_lookup.get(&(a.min(b), a.max(b))).copied()
    }

    /// `(neighbor, edge id)` pairs, sorted by neighbor.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn is_black(&self, v: usize) -> bool {
        self.black[v]
    }

    pub fn hexagons(&self) -> &[Hexagon] {
        &self.hexagons
    }

    pub fn hexagon(&self, i: usize) -> &Hexagon {
        &self.hexagons[i]
    }

    /// The boundary cycle as vertex ids in clockwise order.
    pub fn boundary(&self) -> &[usize] {
        &self.boundary
    }

    pub fn is_boundary_edge(&self, e: usize) -> bool {
        self.boundary_edges.contains(e)
    }

    /// Black and white class sizes; equal sizes are necessary for a perfect
    /// matching.
    pub fn color_classes(&self) -> (usize, usize) {
        let b = self.black.iter().filter(|&&x| x).count();
        (b, self.black.len() - b)
    }

    pub fn all_vertices(&self) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.vertex_count());
        s.insert_range(..);
        s
    }

    pub fn all_edges(&self) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.edge_count());
        s.insert_range(..);
        s
    }

    /// Vertex ids of the listed hexagons.
    pub fn hexagon_vertex_set(&self, hexes: &[usize]) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.vertex_count());
        for &h in hexes {
            for &v in &self.hexagons[h].vertices {
                s.insert(v);
            }
        }
        s
    }
}

fn cells_connected(cells: &[Cell], index: &HashMap<Cell, usize>) -> bool {
    let mut seen = vec![false; cells.len()];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut count = 1;
    while let Some(i) = queue.pop_front() {
        for n in cells[i].neighbors() {
            if let Some(&j) = index.get(&n) {
                if !seen[j] {
                    seen[j] = true;
                    count += 1;
                    queue.push_back(j);
                }
            }
        }
    }
    count == cells.len()
}

fn has_cut_vertex(adjacency: &[Vec<(usize, usize)>]) -> bool {
    let n = adjacency.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    // (vertex, parent, next neighbor position)
    let mut stack = vec![(0usize, usize::MAX, 0usize)];
    disc[0] = 0;
    low[0] = 0;
    let mut root_children = 0;
    while let Some(top) = stack.last_mut() {
        let (v, parent, pos) = *top;
        if let Some(&(w, _)) = adjacency[v].get(pos) {
            top.2 += 1;
            if disc[w] == usize::MAX {
                timer += 1;
                disc[w] = timer;
                low[w] = timer;
                if v == 0 {
                    root_children += 1;
                }
                stack.push((w, v, 0));
            } else if w != parent {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if parent != usize::MAX {
                low[parent] = low[parent].min(low[v]);
                if parent != 0 && low[v] >= disc[parent] {
                    return true;
                }
            }
        }
    }
    root_children > 1 || disc.contains(&usize::MAX)
}

/// Proper 2-coloring with every peak black. In the lattice the vertex kind
/// already separates the two classes, and the topmost vertex of any system is
/// a peak of the upper kind.
fn peak_coloring(points: &[Point], adjacency: &[Vec<(usize, usize)>]) -> Vec<bool> {
    let mut black: Vec<bool> = points.iter().map(|p| p.is_upper_kind()).collect();
    let is_peak = |v: usize| adjacency[v].iter().all(|&(w, _)| points[w].y < points[v].y);
    if let Some(v) = (0..points.len()).find(|&v| is_peak(v)) {
        if !black[v] {
            black.iter_mut().for_each(|b| *b = !*b);
        }
    }
    black
}

pub(crate) fn signed_area2(points: &[Point], cycle: &[usize]) -> i64 {
    let k = cycle.len();
    (0..k)
        .map(|i| {
            let a = points[cycle[i]];
            let b = points[cycle[(i + 1) % k]];
            i64::from(a.x) * i64::from(b.y) - i64::from(b.x) * i64::from(a.y)
        })
        .sum()
}

fn trace_boundary(
    points: &[Point],
    edges: &[Edge],
    adjacency: &[Vec<(usize, usize)>],
    boundary_edges: &FixedBitSet,
) -> Vec<usize> {
    let start = edges[boundary_edges.ones().next().expect("system has a boundary")].u;
    let mut cycle = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = adjacency[cur]
            .iter()
            .find(|&&(w, e)| boundary_edges.contains(e) && w != prev)
            .map(|&(w, _)| w)
            .expect("boundary is a cycle");
        if next == start {
            break;
        }
        cycle.push(next);
        prev = cur;
        cur = next;
    }
    if signed_area2(points, &cycle) > 0 {
        cycle[1..].reverse();
    }
    cycle
}

/// A subgraph of a system given by vertex and edge masks. Edges are only
/// considered present when both endpoints are.
#[derive(Clone, Debug)]
pub struct SubGraph<'a> {
    pub system: &'a HexSystem,
    pub vertices: FixedBitSet,
    pub edges: FixedBitSet,
}

impl<'a> SubGraph<'a> {
    pub fn full(system: &'a HexSystem) -> Self {
        SubGraph {
            system,
            vertices: system.all_vertices(),
            edges: system.all_edges(),
        }
    }

    pub fn without_edges(system: &'a HexSystem, removed: &[usize]) -> Self {
        let mut g = Self::full(system);
        for &e in removed {
            g.edges.set(e, false);
        }
        g
    }

    pub fn without_vertices(system: &'a HexSystem, removed: &FixedBitSet) -> Self {
        let mut g = Self::full(system);
        g.vertices.difference_with(removed);
        g
    }

    pub fn has_edge(&self, e: usize) -> bool {
        let edge = self.system.edge(e);
        self.edges.contains(e) && self.vertices.contains(edge.u) && self.vertices.contains(edge.v)
    }

    /// Present `(neighbor, edge)` pairs of a present vertex.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.system
            .neighbors(v)
            .iter()
            .copied()
            .filter(move |&(w, e)| self.edges.contains(e) && self.vertices.contains(w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring_with_hole() -> Vec<Cell> {
        Cell::new(0, 0).neighbors().collect()
    }

    #[test]
    fn benzene_counts() {
        let h = HexSystem::build(&[Cell::new(0, 0)]).unwrap();
        assert_eq!((h.vertex_count(), h.edge_count(), h.hexagon_count()), (6, 6, 1));
        assert_eq!(h.boundary().len(), 6);
        assert!(h.hexagon(0).external);
        assert_eq!(h.color_classes(), (3, 3));
    }

    #[test]
    fn coronene_counts_and_internal_center() {
        let mut cells = ring_with_hole();
        cells.push(Cell::new(0, 0));
        let h = HexSystem::build(&cells).unwrap();
        assert_eq!((h.vertex_count(), h.edge_count(), h.hexagon_count()), (24, 30, 7));
        let center = h.cell_id(Cell::new(0, 0)).unwrap();
        assert!(!h.hexagon(center).external);
        assert_eq!(h.hexagons().iter().filter(|x| x.external).count(), 6);
        assert_eq!(h.boundary().len(), 18);
    }

    #[test]
    fn ring_is_rejected_as_holed() {
        match HexSystem::build(&ring_with_hole()) {
            Err(Error::Hole { edges, vertices, cells, .. }) => {
                assert_eq!(cells, 6);
                assert_ne!(edges, vertices + cells - 1);
            }
            other => panic!("expected hole error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_disconnected_duplicate_and_empty() {
        assert!(matches!(HexSystem::build(&[]), Err(Error::Empty)));
        assert!(matches!(
            HexSystem::build(&[Cell::new(0, 0), Cell::new(2, 0)]),
            Err(Error::Disconnected)
        ));
        assert!(matches!(
            HexSystem::build(&[Cell::new(0, 0), Cell::new(0, 0)]),
            Err(Error::DuplicateCell(_))
        ));
    }

    #[test]
    fn cut_vertex_detection() {
        // two triangles sharing vertex 2
        let adj = vec![
            vec![(1, 0), (2, 1)],
            vec![(0, 0), (2, 2)],
            vec![(0, 1), (1, 2), (3, 3), (4, 4)],
            vec![(2, 3), (4, 5)],
            vec![(2, 4), (3, 5)],
        ];
        assert!(has_cut_vertex(&adj));
        let cycle = vec![vec![(1, 0), (2, 1)], vec![(0, 0), (2, 2)], vec![(0, 1), (1, 2)]];
        assert!(!has_cut_vertex(&cycle));
    }

    #[test]
    fn coloring_is_proper_and_peaks_are_black() {
        let cells = [Cell::new(0, 0), Cell::new(1, 0), Cell::new(-1, 1), Cell::new(0, -1)];
        let h = HexSystem::build(&cells).unwrap();
        for e in h.edges() {
            assert_ne!(h.is_black(e.u), h.is_black(e.v));
        }
        for v in 0..h.vertex_count() {
            let p = h.point(v);
            if h.neighbors(v).iter().all(|&(w, _)| h.point(w).y < p.y) {
                assert!(h.is_black(v));
            }
        }
    }

    #[test]
    fn boundary_runs_clockwise() {
        let h = HexSystem::build(&[Cell::new(0, 0), Cell::new(1, 0)]).unwrap();
        assert!(signed_area2(h.points(), h.boundary()) < 0);
        assert_eq!(h.boundary().len(), 10);
    }
}
