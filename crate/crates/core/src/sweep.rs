//! Enumeration helpers for exhaustive small-n sweeps: every labeled graph
//! on `n` vertices, and every permutation of `0..n`.

use crate::exec::Execution;
use crate::graph::Graph;

/// Number of vertex pairs, i.e. bits in a graph mask.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Graph whose edges are the set bits of `mask`, pairs `(u, v)` with `u < v`
/// taken in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, edges).expect("pairs are in range")
}

/// All `2^(n(n-1)/2)` labeled graphs on `n` vertices, `n <= 11`.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 11, "2^{} graphs is too many to enumerate", pair_count(n));
    (0..1u64 << pair_count(n)).map(move |m| graph_from_mask(n, m))
}

/// Applies `f` to every labeled graph on `n` vertices; results come back in
/// mask order regardless of `exec`.
pub fn map_all_graphs<T, F>(n: usize, exec: Execution, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(&Graph) -> T + Sync + Send,
{
    assert!(n <= 11);
    exec.map_range(1usize << pair_count(n), |m| f(&graph_from_mask(n, m as u64)))
}

/// Permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Permutations {
    Permutations {
        next: Some((0..n).collect()),
    }
}

pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(current)
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
