//! Brute-force reference implementations. Nothing here calls the library's
//! matching, cycle or solver code; only the derived graph is shared.

#![allow(dead_code)]

use benzenoid::hexcore::HexSystem;
use std::collections::BTreeSet;

/// Edge list `(u, v)` of the system's graph.
pub fn edge_list(h: &HexSystem) -> Vec<(usize, usize)> {
    h.edges().iter().map(|e| (e.u, e.v)).collect()
}

fn covers_exactly_once(n: usize, edges: &[(usize, usize)], chosen: &[usize], skip: &[bool]) -> bool {
    let mut seen = vec![false; n];
    for &e in chosen {
        let (u, v) = edges[e];
        if seen[u] || seen[v] {
            return false;
        }
        seen[u] = true;
        seen[v] = true;
    }
    (0..n).all(|v| seen[v] || skip[v])
}

/// Every perfect matching, as sorted edge-id lists, by scanning all edge
/// subsets of the right size. Only sensible for a couple of dozen edges.
pub fn brute_matchings(h: &HexSystem) -> Vec<Vec<usize>> {
    let edges = edge_list(h);
    let n = h.vertex_count();
    assert!(edges.len() <= 24, "subset scan too large");
    let skip = vec![false; n];
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << edges.len()) {
        if mask.count_ones() as usize * 2 != n {
            continue;
        }
        let chosen: Vec<usize> = (0..edges.len()).filter(|&e| mask >> e & 1 == 1).collect();
        if covers_exactly_once(n, &edges, &chosen, &skip) {
            out.push(chosen);
        }
    }
    out.sort();
    out
}

/// Whether the graph minus `removed` vertices has a perfect matching, by plain
/// recursion on the lowest uncovered vertex.
pub fn brute_has_pm(h: &HexSystem, removed: &[bool]) -> bool {
    fn go(adj: &[Vec<usize>], used: &mut Vec<bool>) -> bool {
        let Some(v) = (0..used.len()).find(|&v| !used[v]) else {
            return true;
        };
        used[v] = true;
        for &w in &adj[v] {
            if !used[w] {
                used[w] = true;
                if go(adj, used) {
                    return true;
                }
                used[w] = false;
            }
        }
        used[v] = false;
        false
    }
    let mut adj = vec![Vec::new(); h.vertex_count()];
    for (u, v) in edge_list(h) {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut used = removed.to_vec();
    go(&adj, &mut used)
}

/// Every simple cycle of the undirected graph, as sorted edge-id lists, with
/// the vertex order of one traversal.
pub fn brute_simple_cycles(h: &HexSystem) -> Vec<(Vec<usize>, Vec<usize>)> {
    let edges = edge_list(h);
    let n = h.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        adj[u].push((v, i));
        adj[v].push((u, i));
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for s in 0..n {
        // cycles whose smallest vertex is s
        let mut path = vec![s];
        let mut path_edges = Vec::new();
        let mut on = vec![false; n];
        on[s] = true;
        fn dfs(
            s: usize,
            adj: &[Vec<(usize, usize)>],
            path: &mut Vec<usize>,
            path_edges: &mut Vec<usize>,
            on: &mut Vec<bool>,
            seen: &mut BTreeSet<Vec<usize>>,
            out: &mut Vec<(Vec<usize>, Vec<usize>)>,
        ) {
            let v = *path.last().unwrap();
            for &(w, e) in &adj[v] {
                if w == s && path.len() >= 3 {
                    let mut key = path_edges.clone();
                    key.push(e);
                    key.sort();
                    if seen.insert(key.clone()) {
                        out.push((key, path.clone()));
                    }
                } else if w > s && !on[w] {
                    on[w] = true;
                    path.push(w);
                    path_edges.push(e);
                    dfs(s, adj, path, path_edges, on, seen, out);
                    path.pop();
                    path_edges.pop();
                    on[w] = false;
                }
            }
        }
        dfs(s, &adj, &mut path, &mut path_edges, &mut on, &mut seen, &mut out);
    }
    out
}

/// A cycle given by its edge set and vertex order.
#[derive(Clone, Debug)]
pub struct RefCycle {
    pub edges: Vec<usize>,
    pub vertices: BTreeSet<usize>,
}

/// The simple cycles that alternate with respect to `m`.
pub fn brute_alt_cycles(h: &HexSystem, m: &[usize]) -> Vec<RefCycle> {
    let edges = edge_list(h);
    let in_m = |e: usize| m.contains(&e);
    brute_simple_cycles(h)
        .into_iter()
        .filter(|(key, order)| {
            let k = order.len();
            if k % 2 == 1 {
                return false;
            }
            let seq: Vec<usize> = (0..k)
                .map(|i| {
                    let (a, b) = (order[i], order[(i + 1) % k]);
                    *key.iter()
                        .find(|&&e| edges[e] == (a, b) || edges[e] == (b, a))
                        .unwrap()
                })
                .collect();
            (0..k).all(|i| in_m(seq[i]) != in_m(seq[(i + 1) % k]))
        })
        .map(|(key, order)| RefCycle {
            edges: key,
            vertices: order.into_iter().collect(),
        })
        .collect()
}

/// Largest subfamily of `items` satisfying the pairwise predicate.
pub fn max_pairwise<T>(items: &[T], ok: impl Fn(&T, &T) -> bool) -> usize {
    assert!(items.len() <= 22, "subset scan too large");
    let mut best = 0;
    for mask in 0u32..(1u32 << items.len()) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let idx: Vec<usize> = (0..items.len()).filter(|&i| mask >> i & 1 == 1).collect();
        if idx
            .iter()
            .enumerate()
            .all(|(a, &i)| idx[a + 1..].iter().all(|&j| ok(&items[i], &items[j])))
        {
            best = size;
        }
    }
    best
}

pub fn ref_vertex_disjoint(a: &RefCycle, b: &RefCycle) -> bool {
    a.vertices.is_disjoint(&b.vertices)
}

/// Disjoint, or every common edge matched and every common vertex on a
/// common edge.
pub fn ref_compatible(edges: &[(usize, usize)], m: &[usize], a: &RefCycle, b: &RefCycle) -> bool {
    let common: Vec<usize> = a.edges.iter().copied().filter(|e| b.edges.contains(e)).collect();
    if !common.iter().all(|e| m.contains(e)) {
        return false;
    }
    a.vertices.intersection(&b.vertices).all(|&v| {
        common.iter().any(|&e| edges[e].0 == v || edges[e].1 == v)
    })
}

/// Smallest subset of `pool` passing `good`, by increasing size.
fn smallest_subset(pool: &[usize], good: impl Fn(&[usize]) -> bool) -> usize {
    assert!(pool.len() <= 22);
    (0..=pool.len())
        .find(|&size| {
            (0u32..(1u32 << pool.len()))
                .filter(|mask| mask.count_ones() as usize == size)
                .any(|mask| {
                    let s: Vec<usize> = (0..pool.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pool[i]).collect();
                    good(&s)
                })
        })
        .unwrap()
}

/// f(H, M) from the definition: fewest edges of `m` contained in no other
/// perfect matching.
pub fn forcing_by_definition(all: &[Vec<usize>], m: &[usize]) -> usize {
    smallest_subset(m, |s| {
        all.iter()
            .filter(|other| other.as_slice() != m)
            .all(|other| !s.iter().all(|e| other.contains(e)))
    })
}

/// af(H, M) from the definition: fewest edges outside `m` whose deletion
/// leaves `m` as the only perfect matching.
pub fn anti_forcing_by_definition(all: &[Vec<usize>], m: &[usize], edge_count: usize) -> usize {
    let pool: Vec<usize> = (0..edge_count).filter(|e| !m.contains(e)).collect();
    smallest_subset(&pool, |s| {
        all.iter()
            .filter(|other| other.as_slice() != m)
            .all(|other| s.iter().any(|e| other.contains(e)))
    })
}

/// Vertex sets of hexagon subsets that are pairwise disjoint and leave a
/// perfectly matchable remainder; the empty set included when `h` itself
/// is matchable.
pub fn brute_sextet_patterns(h: &HexSystem) -> Vec<Vec<usize>> {
    let count = h.hexagon_count();
    assert!(count <= 16);
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << count) {
        let hexes: Vec<usize> = (0..count).filter(|&i| mask >> i & 1 == 1).collect();
        let mut removed = vec![false; h.vertex_count()];
        let mut clash = false;
        for &x in &hexes {
            for &v in &h.hexagon(x).vertices {
                clash |= removed[v];
                removed[v] = true;
            }
        }
        if !clash && brute_has_pm(h, &removed) {
            out.push(hexes);
        }
    }
    out
}

/// Permanent of a 0/1 square matrix by Ryser's formula.
pub fn ryser_permanent(a: &[Vec<u8>]) -> i128 {
    let n = a.len();
    let mut total: i128 = 0;
    for mask in 1u64..(1u64 << n) {
        let mut prod: i128 = 1;
        for row in a {
            let s: i128 = (0..n).filter(|&j| mask >> j & 1 == 1).map(|j| row[j] as i128).sum();
            prod *= s;
            if prod == 0 {
                break;
            }
        }
        let sign = if (n - mask.count_ones() as usize).is_multiple_of(2) { 1 } else { -1 };
        total += sign * prod;
    }
    total
}

/// Kekulé count as the permanent of the black-by-white biadjacency matrix.
pub fn kekule_by_permanent(h: &HexSystem) -> i128 {
    let black: Vec<usize> = (0..h.vertex_count()).filter(|&v| h.is_black(v)).collect();
    let white: Vec<usize> = (0..h.vertex_count()).filter(|&v| !h.is_black(v)).collect();
    if black.len() != white.len() {
        return 0;
    }
    let edges = edge_list(h);
    let a: Vec<Vec<u8>> = black
        .iter()
        .map(|&b| {
            white
                .iter()
                .map(|&w| edges.iter().any(|&(u, v)| (u, v) == (b, w) || (u, v) == (w, b)) as u8)
                .collect()
        })
        .collect();
    ryser_permanent(&a)
}
