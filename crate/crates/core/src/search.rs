//! Bitmask subset search over candidate 2-sets.
//!
//! A labeling's 2-set `S` fixes its cheapest completion: every other vertex
//! gets 0 when the domination condition holds for it and 1 otherwise. The
//! search therefore walks subsets `S` by increasing cardinality, in
//! lexicographic order within a cardinality, and scores each with its forced
//! completion weight.

use crate::graph::Graph;
use crate::roman::Variant;

pub(crate) struct MaskGraph {
    order: usize,
    open: Vec<u64>,
    full: u64,
    /// `reach[i]`: union of the open neighborhoods of vertices `i..order`.
    reach: Vec<u64>,
}

#[derive(Clone, Copy, Default)]
struct State {
    chosen: u64,
    /// Closed neighborhood of `chosen`.
    covered: u64,
    /// Vertices with exactly one neighbor in `chosen`.
    once: u64,
    /// Vertices with two or more neighbors in `chosen`.
    twice: u64,
}

impl State {
    fn add(self, v: usize, open: u64) -> State {
        let twice = self.twice | (self.once & open);
        State {
            chosen: self.chosen | 1 << v,
            covered: self.covered | open | 1 << v,
            once: (self.once ^ open) & !twice,
            twice,
        }
    }
}

trait Sink {
    fn admits(&self, lower_bound: usize) -> bool;
    fn leaf(&mut self, chosen: u64, weight: usize);
}

struct Best {
    weight: usize,
    chosen: u64,
}

impl Sink for Best {
    fn admits(&self, lower_bound: usize) -> bool {
        lower_bound < self.weight
    }

    fn leaf(&mut self, chosen: u64, weight: usize) {
        if weight < self.weight {
            self.weight = weight;
            self.chosen = chosen;
        }
    }
}

struct AllAt {
    weight: usize,
    found: Vec<u64>,
}

impl Sink for AllAt {
    fn admits(&self, lower_bound: usize) -> bool {
        lower_bound <= self.weight
    }

    fn leaf(&mut self, chosen: u64, weight: usize) {
        if weight == self.weight {
            self.found.push(chosen);
        }
    }
}

impl MaskGraph {
    /// Callers guarantee `g.order() <= 64`.
    pub(crate) fn new(g: &Graph) -> Self {
        let order = g.order();
        debug_assert!(order <= 64);
        let open: Vec<u64> = g
            .vertices()
            .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
            .collect();
        let mut reach = vec![0u64; order + 1];
        for v in (0..order).rev() {
            reach[v] = reach[v + 1] | open[v];
        }
        Self {
            order,
            open,
            full: low_bits(order),
            reach,
        }
    }

    pub(crate) fn order(&self) -> usize {
        self.order
    }

    #[cfg(test)]
    pub(crate) fn completion_weight(&self, chosen: u64, variant: Variant) -> usize {
        let state = self.state_of(chosen);
        2 * chosen.count_ones() as usize + self.exceptions(&state, variant).count_ones() as usize
    }

    /// Vertices labeled 1 by the forced completion of `chosen`.
    pub(crate) fn completion_ones(&self, chosen: u64, variant: Variant) -> u64 {
        self.exceptions(&self.state_of(chosen), variant)
    }

    fn state_of(&self, chosen: u64) -> State {
        (0..self.order)
            .filter(|&v| chosen >> v & 1 == 1)
            .fold(State::default(), |s, v| s.add(v, self.open[v]))
    }

    fn exceptions(&self, s: &State, variant: Variant) -> u64 {
        match variant {
            Variant::Roman => self.full & !s.covered,
            Variant::Perfect => self.full & !s.chosen & !s.once,
        }
    }

    /// Vertices that pay at least 1 however the remaining picks are made
    /// from `start..order`.
    fn doomed(&self, s: &State, start: usize, variant: Variant) -> u64 {
        let settled = self.full & !s.chosen & low_bits(start);
        match variant {
            Variant::Roman => settled & !s.covered & !self.reach[start],
            Variant::Perfect => settled & (s.twice | (!s.once & !self.reach[start])),
        }
    }

    fn descend(
        &self,
        state: State,
        start: usize,
        remaining: usize,
        base: usize,
        variant: Variant,
        sink: &mut impl Sink,
    ) {
        if remaining == 0 {
            let weight = base + self.exceptions(&state, variant).count_ones() as usize;
            if sink.admits(weight) {
                sink.leaf(state.chosen, weight);
            }
            return;
        }
        let bound = base + self.doomed(&state, start, variant).count_ones() as usize;
        if !sink.admits(bound) {
            return;
        }
        for v in start..=self.order - remaining {
            self.descend(
                state.add(v, self.open[v]),
                v + 1,
                remaining - 1,
                base,
                variant,
                sink,
            );
        }
    }

    fn level(&self, k: usize, variant: Variant, sink: &mut impl Sink) {
        self.descend(State::default(), 0, k, 2 * k, variant, sink);
    }

    /// Minimum completion weight and its 2-set, ties broken by smallest
    /// cardinality then lexicographically smallest sorted index list.
    pub(crate) fn minimize(&self, variant: Variant) -> (usize, u64) {
        // S = {} completes to all ones
        let mut best = Best {
            weight: self.order,
            chosen: 0,
        };
        for k in 1..=self.order {
            if 2 * k >= best.weight {
                break;
            }
            self.level(k, variant, &mut best);
        }
        (best.weight, best.chosen)
    }

    /// Every 2-set whose forced completion weighs exactly `weight`, in
    /// tie-break order.
    pub(crate) fn all_at(&self, weight: usize, variant: Variant) -> Vec<u64> {
        let mut sink = AllAt {
            weight,
            found: Vec::new(),
        };
        for k in 0..=self.order {
            if 2 * k > weight {
                break;
            }
            self.level(k, variant, &mut sink);
        }
        sink.found
    }
}

fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn mask_to_vec(mask: u64) -> Vec<usize> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}
