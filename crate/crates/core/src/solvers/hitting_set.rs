//! Exact minimum hitting set by iterative deepening with a packing bound.

use fixedbitset::FixedBitSet;

/// A hitting-set instance over candidates `0..candidates`; each set lists the
/// candidates that hit it.
#[derive(Clone, Debug)]
pub struct HittingSet {
    candidates: usize,
    sets: Vec<FixedBitSet>,
    /// For each candidate, the sets it hits.
    hits: Vec<FixedBitSet>,
    /// Largest candidate index in each set.
    last: Vec<usize>,
}

impl HittingSet {
    /// Returns `None` when some set is empty (nothing can hit it).
    pub fn new(candidates: usize, sets: Vec<FixedBitSet>) -> Option<Self> {
        let mut hits = vec![FixedBitSet::with_capacity(sets.len()); candidates];
        let mut last = Vec::with_capacity(sets.len());
        for (i, s) in sets.iter().enumerate() {
            for c in s.ones() {
                hits[c].insert(i);
            }
            last.push(s.ones().next_back()?);
        }
        Some(HittingSet {
            candidates,
            sets,
            hits,
            last,
        })
    }

    /// The lexicographically smallest minimum hitting set, as sorted
    /// candidate indices.
    pub fn solve(&self) -> Vec<usize> {
        let all_unhit = {
            let mut s = FixedBitSet::with_capacity(self.sets.len());
            s.insert_range(..);
            s
        };
        let mut budget = self.packing_bound(&all_unhit, 0);
        loop {
            let mut chosen = Vec::with_capacity(budget);
            if self.search(&all_unhit, 0, budget, &mut chosen) {
                return chosen;
            }
            budget += 1;
        }
    }

    /// Greedy count of unhit sets that pairwise share no candidate `>= from`;
    /// any completion needs at least that many more picks.
    fn packing_bound(&self, unhit: &FixedBitSet, from: usize) -> usize {
        let mut used = FixedBitSet::with_capacity(self.candidates);
        let mut order: Vec<usize> = unhit.ones().collect();
        order.sort_by_key(|&i| self.sets[i].count_ones(from..));
        let mut count = 0;
        for i in order {
            let mut avail = self.sets[i].clone();
            avail.set_range(..from, false);
            if avail.is_disjoint(&used) {
                used.union_with(&avail);
                count += 1;
            }
        }
        count
    }

    /// Include-first search over candidates in index order, so the first
    /// solution found at a given size is the lexicographically smallest.
    fn search(&self, unhit: &FixedBitSet, from: usize, budget: usize, chosen: &mut Vec<usize>) -> bool {
        if unhit.is_clear() {
            return true;
        }
        if budget == 0 {
            return false;
        }
        // Every unhit set not covered by the next pick needs a later candidate.
        let Some(limit) = unhit.ones().map(|i| self.last[i]).min() else {
            return true;
        };
        if limit < from || self.packing_bound(unhit, from) > budget {
            return false;
        }
        for c in from..=limit {
            if self.hits[c].is_disjoint(unhit) {
                continue;
            }
            let mut rest = unhit.clone();
            rest.difference_with(&self.hits[c]);
            chosen.push(c);
            if self.search(&rest, c + 1, budget - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    pub fn is_hitting(&self, chosen: &[usize]) -> bool {
        self.sets.iter().all(|s| chosen.iter().any(|&c| s.contains(c)))
    }
}
