//! Perfect matchings (Kekulé structures): enumeration, counting, uniqueness
//! and rotation along alternating cycles.

use crate::altcycles::AltCycle;
use crate::error::{Error, Result};
use crate::hexcore::{HexSystem, SubGraph};
use fixedbitset::FixedBitSet;
use num_bigint::BigUint;
use serde::Serialize;

/// A perfect matching of a fixed system, stored as sorted edge ids.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matching {
    edges: Vec<usize>,
    mask: FixedBitSet,
}

impl Matching {
    /// Validates that `edges` cover every vertex of `system` exactly once.
    pub fn new(system: &HexSystem, edges: Vec<usize>) -> Result<Self> {
        Self::on(&SubGraph::full(system), edges)
    }

    /// Validates against a subgraph instead of the whole system.
    pub fn on(graph: &SubGraph<'_>, mut edges: Vec<usize>) -> Result<Self> {
        edges.sort_unstable();
        edges.dedup();
        let system = graph.system;
        let mut covered = FixedBitSet::with_capacity(system.vertex_count());
        for &e in &edges {
            if e >= system.edge_count() || !graph.has_edge(e) {
                return Err(Error::NotPerfectMatching);
            }
            let edge = system.edge(e);
            if covered.put(edge.u) || covered.put(edge.v) {
                return Err(Error::NotPerfectMatching);
            }
        }
        if covered != graph.vertices {
            return Err(Error::NotPerfectMatching);
        }
        Ok(Self::from_sorted_unchecked(system.edge_count(), edges))
    }

    fn from_sorted_unchecked(edge_count: usize, edges: Vec<usize>) -> Self {
        let mut mask = FixedBitSet::with_capacity(edge_count);
        for &e in &edges {
            mask.insert(e);
        }
        Matching { edges, mask }
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn mask(&self) -> &FixedBitSet {
        &self.mask
    }

    pub fn contains(&self, e: usize) -> bool {
        self.mask.contains(e)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Edges as `[u, v]` vertex pairs, the serialized form.
    pub fn vertex_pairs(&self, system: &HexSystem) -> Vec<[usize; 2]> {
        self.edges
            .iter()
            .map(|&e| {
                let edge = system.edge(e);
                [edge.u, edge.v]
            })
            .collect()
    }
}

#[derive(Serialize)]
pub struct MatchingRecord {
    pub edges: Vec<[usize; 2]>,
}

/// All perfect matchings of `system`, in lexicographic order of their sorted
/// edge lists. Empty when none exists.
pub fn enumerate_matchings(system: &HexSystem) -> Vec<Matching> {
    enumerate_matchings_in(&SubGraph::full(system))
}

pub fn enumerate_matchings_in(graph: &SubGraph<'_>) -> Vec<Matching> {
    let mut out = Vec::new();
    let mut search = Search::new(graph);
    let covered = complement(&graph.vertices);
    search.run(covered, &mut Vec::new(), &mut |edges| {
        let mut sorted = edges.to_vec();
        sorted.sort_unstable();
        out.push(Matching::from_sorted_unchecked(graph.system.edge_count(), sorted));
    });
    out.sort();
    out
}

/// Number of perfect matchings, `k(H)`.
pub fn count_matchings(graph: &SubGraph<'_>) -> BigUint {
    let mut count = BigUint::from(0u8);
    let mut search = Search::new(graph);
    search.run(complement(&graph.vertices), &mut Vec::new(), &mut |_| count += 1u8);
    count
}

fn complement(set: &FixedBitSet) -> FixedBitSet {
    let mut c = set.clone();
    c.toggle_range(..);
    c
}

/// Branches on the lowest uncovered vertex after forcing every vertex that
/// has a single available partner.
struct Search<'g, 'a> {
    graph: &'g SubGraph<'a>,
}

impl<'g, 'a> Search<'g, 'a> {
    fn new(graph: &'g SubGraph<'a>) -> Self {
        Search { graph }
    }

    fn options(&self, covered: &FixedBitSet, v: usize) -> Vec<(usize, usize)> {
        self.graph.neighbors(v).filter(|&(w, _)| !covered.contains(w)).collect()
    }

    fn run(&mut self, mut covered: FixedBitSet, chosen: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
        let mark = chosen.len();
        loop {
            let mut progress = false;
            for v in complement(&covered).ones() {
                if covered.contains(v) {
                    continue;
                }
                match self.options(&covered, v)[..] {
                    [] => {
                        chosen.truncate(mark);
                        return;
                    }
                    [(w, e)] => {
                        covered.insert(v);
                        covered.insert(w);
                        chosen.push(e);
                        progress = true;
                    }
                    _ => {}
                }
            }
            if !progress {
                break;
            }
        }
        match complement(&covered).ones().next() {
            None => emit(chosen),
            Some(v) => {
                for (w, e) in self.options(&covered, v) {
                    let mut next = covered.clone();
                    next.insert(v);
                    next.insert(w);
                    chosen.push(e);
                    self.run(next, chosen, emit);
                    chosen.pop();
                }
            }
        }
        chosen.truncate(mark);
    }
}

/// Some perfect matching of the subgraph, found by augmenting paths from the
/// black side.
pub fn find_perfect_matching(graph: &SubGraph<'_>) -> Option<Vec<usize>> {
    let system = graph.system;
    let n = system.vertex_count();
    let present: Vec<usize> = graph.vertices.ones().collect();
    let blacks: Vec<usize> = present.iter().copied().filter(|&v| system.is_black(v)).collect();
    if blacks.len() * 2 != present.len() {
        return None;
    }
    // mate[white] = (black, edge)
    let mut mate: Vec<Option<(usize, usize)>> = vec![None; n];
    for &b in &blacks {
        let mut seen = FixedBitSet::with_capacity(n);
        if !augment(graph, b, &mut mate, &mut seen) {
            return None;
        }
    }
    let mut edges: Vec<usize> = mate.iter().flatten().map(|&(_, e)| e).collect();
    edges.sort_unstable();
    Some(edges)
}

fn augment(graph: &SubGraph<'_>, b: usize, mate: &mut [Option<(usize, usize)>], seen: &mut FixedBitSet) -> bool {
    let options: Vec<(usize, usize)> = graph.neighbors(b).collect();
    for (w, e) in options {
        if seen.put(w) {
            continue;
        }
        let free = match mate[w] {
            None => true,
            Some((other, _)) => augment(graph, other, mate, seen),
        };
        if free {
            mate[w] = Some((b, e));
            return true;
        }
    }
    false
}

pub fn has_perfect_matching(graph: &SubGraph<'_>) -> bool {
    find_perfect_matching(graph).is_some()
}

/// True iff `system - removed` has a perfect matching (an empty remainder
/// counts as matched).
pub fn is_nice(system: &HexSystem, removed: &FixedBitSet) -> bool {
    has_perfect_matching(&SubGraph::without_vertices(system, removed))
}

/// Successor lists `(head, edge)` of the digraph that orients matched edges
/// black to white and unmatched edges white to black. Its directed cycles are
/// exactly the alternating cycles of the matching.
pub(crate) fn alternating_digraph(graph: &SubGraph<'_>, matching: &FixedBitSet) -> Vec<Vec<(usize, usize)>> {
    let system = graph.system;
    let mut succ = vec![Vec::new(); system.vertex_count()];
    for e in graph.edges.ones() {
        if !graph.has_edge(e) {
            continue;
        }
        let edge = system.edge(e);
        let (black, white) = if system.is_black(edge.u) { (edge.u, edge.v) } else { (edge.v, edge.u) };
        if matching.contains(e) {
            succ[black].push((white, e));
        } else {
            succ[white].push((black, e));
        }
    }
    succ
}

fn has_directed_cycle(succ: &[Vec<(usize, usize)>]) -> bool {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Active,
        Done,
    }
    let mut mark = vec![Mark::New; succ.len()];
    for root in 0..succ.len() {
        if mark[root] != Mark::New {
            continue;
        }
        let mut stack = vec![(root, 0usize)];
        mark[root] = Mark::Active;
        while let Some(top) = stack.last_mut() {
            let (v, i) = *top;
            if let Some(&(w, _)) = succ[v].get(i) {
                top.1 += 1;
                match mark[w] {
                    Mark::Active => return true,
                    Mark::New => {
                        mark[w] = Mark::Active;
                        stack.push((w, 0));
                    }
                    Mark::Done => {}
                }
            } else {
                mark[v] = Mark::Done;
                stack.pop();
            }
        }
    }
    false
}

/// Whether `matching` is the only perfect matching of `graph`, decided by the
/// absence of alternating cycles.
pub fn has_unique_pm(graph: &SubGraph<'_>, matching: &Matching) -> Result<bool> {
    Matching::on(graph, matching.edges.clone())?;
    Ok(!has_directed_cycle(&alternating_digraph(graph, matching.mask())))
}

/// `M ⊕ C` for an `M`-alternating cycle `C`.
pub fn rotate(system: &HexSystem, matching: &Matching, cycle: &AltCycle) -> Result<Matching> {
    rotate_edges(system, matching, cycle.edges())
}

/// `M ⊕ C` where `cycle` lists the edges of a cycle in cyclic order.
pub fn rotate_edges(system: &HexSystem, matching: &Matching, cycle: &[usize]) -> Result<Matching> {
    if cycle.len() < 4 || cycle.len() % 2 == 1 {
        return Err(Error::NotAlternating);
    }
    let alternates = (0..cycle.len()).all(|i| matching.contains(cycle[i]) != matching.contains(cycle[(i + 1) % cycle.len()]));
    if !alternates {
        return Err(Error::NotAlternating);
    }
    let mut mask = matching.mask.clone();
    for &e in cycle {
        mask.toggle(e);
    }
    Matching::new(system, mask.ones().collect()).map_err(|_| Error::NotAlternating)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hexcore::{linear_chain, Named};

    #[test]
    fn benzene_has_two() {
        let h = Named::Benzene.system();
        let ms = enumerate_matchings(&h);
        assert_eq!(ms.len(), 2);
        assert!(ms[0] < ms[1]);
        assert_eq!(count_matchings(&SubGraph::full(&h)), BigUint::from(2u8));
    }

    #[test]
    fn linear_chains_have_n_plus_one() {
        for n in 1..=6 {
            assert_eq!(enumerate_matchings(&linear_chain(n).unwrap()).len(), n + 1);
        }
    }

    #[test]
    fn coronene_has_twenty() {
        assert_eq!(enumerate_matchings(&Named::Coronene.system()).len(), 20);
    }

    #[test]
    fn uniqueness_of_benzene() {
        let h = Named::Benzene.system();
        let m = &enumerate_matchings(&h)[0];
        assert!(!has_unique_pm(&SubGraph::full(&h), m).unwrap());
        let single = (0..h.edge_count()).find(|&e| !m.contains(e)).unwrap();
        assert!(has_unique_pm(&SubGraph::without_edges(&h, &[single]), m).unwrap());
        // a matched edge removed: M is no longer perfect on the subgraph
        let matched = m.edges()[0];
        assert!(matches!(
            has_unique_pm(&SubGraph::without_edges(&h, &[matched]), m),
            Err(Error::NotPerfectMatching)
        ));
    }

    #[test]
    fn rotating_the_benzene_ring() {
        let h = Named::Benzene.system();
        let ms = enumerate_matchings(&h);
        let ring = h.hexagon(0).edges;
        let other = rotate_edges(&h, &ms[0], &ring).unwrap();
        assert_eq!(other, ms[1]);
        assert_eq!(rotate_edges(&h, &other, &ring).unwrap(), ms[0]);
    }

    #[test]
    fn rotate_accepts_exactly_the_alternating_hexagons() {
        let h = Named::Naphthalene.system();
        for m in enumerate_matchings(&h) {
            for hex in h.hexagons() {
                let alternates = (0..6).all(|i| m.contains(hex.edges[i]) != m.contains(hex.edges[(i + 1) % 6]));
                assert_eq!(rotate_edges(&h, &m, &hex.edges).is_ok(), alternates);
            }
            assert!(matches!(rotate_edges(&h, &m, &h.hexagon(0).edges[..3]), Err(Error::NotAlternating)));
        }
    }

    #[test]
    fn niceness() {
        let h = Named::Coronene.system();
        let center = h.cell_id(crate::hexcore::Cell::new(0, 0)).unwrap();
        assert!(is_nice(&h, &h.hexagon_vertex_set(&[center])));
        assert!(is_nice(&h, &h.all_vertices()));
        let b = Named::Benzene.system();
        assert!(is_nice(&b, &b.hexagon_vertex_set(&[0])));
        // a single vertex leaves an odd remainder
        let mut one = FixedBitSet::with_capacity(b.vertex_count());
        one.insert(0);
        assert!(!is_nice(&b, &one));
    }

    #[test]
    fn matching_validation() {
        let h = Named::Benzene.system();
        assert!(Matching::new(&h, vec![0]).is_err());
        assert!(Matching::new(&h, vec![]).is_err());
        let m = &enumerate_matchings(&h)[0];
        assert!(Matching::new(&h, m.edges().to_vec()).is_ok());
    }
}
