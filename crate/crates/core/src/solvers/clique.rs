//! Maximum clique by branch and bound with greedy-coloring bounds.

use fixedbitset::FixedBitSet;

/// Undirected graph on `0..n` as adjacency bitsets.
#[derive(Clone, Debug)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    /// Graph whose edges are the pairs for which `related` holds.
    pub fn from_relation(n: usize, related: impl Fn(usize, usize) -> bool) -> Self {
        let mut g = Graph::new(n);
        for i in 0..n {
            for j in i + 1..n {
                if related(i, j) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        self.adj[a].insert(b);
        self.adj[b].insert(a);
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| self.adj[a].contains(b)))
    }

    /// Upper bound on the clique number of the subgraph induced by `cand`.
    fn color_bound(&self, cand: &FixedBitSet) -> usize {
        let mut left = cand.clone();
        let mut colors = 0;
        while !left.is_clear() {
            colors += 1;
            let mut class = left.clone();
            while let Some(v) = class.ones().next() {
                class.set(v, false);
                left.set(v, false);
                class.difference_with(&self.adj[v]);
            }
        }
        colors
    }

    /// The lexicographically smallest maximum clique.
    pub fn max_clique(&self) -> Vec<usize> {
        let mut cand = FixedBitSet::with_capacity(self.len());
        cand.insert_range(..);
        let mut best = Vec::new();
        self.expand(&mut Vec::new(), cand, &mut best);
        best
    }

    // Include-first in index order: the first clique reaching a new size is
    // the lexicographically smallest of that size.
    fn expand(&self, current: &mut Vec<usize>, mut cand: FixedBitSet, best: &mut Vec<usize>) {
        if current.len() > best.len() {
            *best = current.clone();
        }
        while let Some(v) = cand.ones().next() {
            if current.len() + self.color_bound(&cand) <= best.len() {
                return;
            }
            cand.set(v, false);
            let mut next = cand.clone();
            next.intersect_with(&self.adj[v]);
            current.push(v);
            self.expand(current, next, best);
            current.pop();
        }
    }

    /// Every clique of exactly `size` vertices, in lexicographic order, up to
    /// `cap` of them. The flag reports whether the list was cut short.
    pub fn cliques_of_size(&self, size: usize, cap: usize) -> (Vec<Vec<usize>>, bool) {
        let mut cand = FixedBitSet::with_capacity(self.len());
        cand.insert_range(..);
        let mut out = Vec::new();
        let truncated = !self.collect(&mut Vec::new(), cand, size, cap, &mut out);
        (out, truncated)
    }

    fn collect(
        &self,
        current: &mut Vec<usize>,
        mut cand: FixedBitSet,
        size: usize,
        cap: usize,
        out: &mut Vec<Vec<usize>>,
    ) -> bool {
        if current.len() == size {
            if out.len() == cap {
                return false;
            }
            out.push(current.clone());
            return true;
        }
        while let Some(v) = cand.ones().next() {
            if current.len() + self.color_bound(&cand) < size {
                return true;
            }
            cand.set(v, false);
            let mut next = cand.clone();
            next.intersect_with(&self.adj[v]);
            current.push(v);
            let ok = self.collect(current, next, size, cap, out);
            current.pop();
            if !ok {
                return false;
            }
        }
        true
    }
}
