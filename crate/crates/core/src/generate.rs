//! Seeded random graph generators.
//!
//! All generators draw from a caller-supplied RNG; [`rng`] builds the
//! ChaCha8 stream used throughout the crate so a seed pins a corpus exactly.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// Edge probabilities cycled through by [`random_corpus`].
pub const CORPUS_PROBABILITIES: [f64; 3] = [0.2, 0.5, 0.8];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`: each of the `n(n-1)/2` pairs independently.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    assert!((0.0..=1.0).contains(&p), "edge probability out of range");
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("pairs are distinct")
}

/// Uniform random labeled tree on `n` vertices via a Prüfer sequence.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    if n <= 1 {
        return Graph::empty(n);
    }
    if n == 2 {
        return Graph::new(2, [(0, 1)]).unwrap();
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges).expect("Prüfer decoding yields a tree")
}

/// `count` graphs `G(n, p)` with `n` uniform in `min_order..=max_order` and
/// `p` cycling through [`CORPUS_PROBABILITIES`].
pub fn random_corpus(count: usize, min_order: usize, max_order: usize, seed: u64) -> Vec<Graph> {
    assert!(min_order <= max_order);
    let mut rng = rng(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(min_order..=max_order);
            gnp(n, CORPUS_PROBABILITIES[i % CORPUS_PROBABILITIES.len()], &mut rng)
        })
        .collect()
}

/// A graph with at least two components: a disjoint union of 2 or 3 random
/// parts of order `1..=max_part`, with vertices shuffled.
pub fn random_disconnected<R: Rng + ?Sized>(max_part: usize, rng: &mut R) -> Graph {
    assert!(max_part >= 1);
    let parts = rng.gen_range(2..=3);
    let mut g = Graph::empty(0);
    for _ in 0..parts {
        let n = rng.gen_range(1..=max_part);
        let p = *CORPUS_PROBABILITIES.choose(rng).unwrap();
        g = g.disjoint_union(&gnp(n, p, rng));
    }
    let mut perm: Vec<usize> = g.vertices().collect();
    perm.shuffle(rng);
    g.relabel(&perm).expect("shuffle is a permutation")
}
