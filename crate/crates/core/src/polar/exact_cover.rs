//! Algorithm X over bitmask rows, for universes of at most 64 items.
//!
//! Column choice is by fewest remaining candidates, ties to the lowest item index;
//! candidates are tried in row order. Output order is therefore fixed for a given
//! instance, and the parallel path merges branch results in the same order.

use rayon::prelude::*;

/// An exact cover instance: pick rows whose bitmasks partition `0..universe`.
#[derive(Debug, Clone)]
pub struct ExactCover {
    full: u64,
    rows: Vec<u64>,
    /// Row indices containing each item, ascending.
    by_item: Vec<Vec<usize>>,
}

impl ExactCover {
    /// Panics if `universe > 64` or a row mentions an item outside the universe.
    pub fn new(universe: usize, rows: Vec<u64>) -> Self {
        assert!(universe <= 64, "bitmask exact cover supports at most 64 items");
        let full = if universe == 64 { u64::MAX } else { (1u64 << universe) - 1 };
        let mut by_item = vec![Vec::new(); universe];
        for (r, &mask) in rows.iter().enumerate() {
            assert_eq!(mask & !full, 0, "row {r} lies outside the universe");
            for (item, list) in by_item.iter_mut().enumerate() {
                if (mask >> item) & 1 == 1 {
                    list.push(r);
                }
            }
        }
        Self { full, rows, by_item }
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// Sequential search; each solution lists row indices in the order chosen.
    pub fn solve(&self, limit: Option<usize>) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.search(0, &mut Vec::new(), limit, &mut out);
        out
    }

    /// Same result as [`solve`](Self::solve), with the first branching level spread
    /// across the rayon pool.
    pub fn solve_parallel(&self, limit: Option<usize>) -> Vec<Vec<usize>> {
        let Some((_, candidates)) = self.choose(0) else {
            return self.solve(limit);
        };
        let branches: Vec<Vec<Vec<usize>>> = candidates
            .par_iter()
            .map(|&r| {
                let mut out = Vec::new();
                self.search(self.rows[r], &mut vec![r], limit, &mut out);
                out
            })
            .collect();
        let all = branches.into_iter().flatten();
        match limit {
            Some(k) => all.take(k).collect(),
            None => all.collect(),
        }
    }

    /// Most constrained uncovered item and its live candidate rows; `None` once covered.
    fn choose(&self, covered: u64) -> Option<(usize, Vec<usize>)> {
        let mut best: Option<(usize, usize)> = None;
        let mut open = self.full & !covered;
        while open != 0 {
            let item = open.trailing_zeros() as usize;
            open &= open - 1;
            let live = self.by_item[item]
                .iter()
                .filter(|&&r| self.rows[r] & covered == 0)
                .count();
            if best.is_none_or(|(_, c)| live < c) {
                best = Some((item, live));
                if live == 0 {
                    break;
                }
            }
        }
        let (item, _) = best?;
        let candidates = self.by_item[item]
            .iter()
            .copied()
            .filter(|&r| self.rows[r] & covered == 0)
            .collect();
        Some((item, candidates))
    }

    fn search(&self, covered: u64, chosen: &mut Vec<usize>, limit: Option<usize>, out: &mut Vec<Vec<usize>>) {
        if limit.is_some_and(|k| out.len() >= k) {
            return;
        }
        let Some((_, candidates)) = self.choose(covered) else {
            out.push(chosen.clone());
            return;
        };
        for r in candidates {
            chosen.push(r);
            self.search(covered | self.rows[r], chosen, limit, out);
            chosen.pop();
            if limit.is_some_and(|k| out.len() >= k) {
                return;
            }
        }
    }
}
