use itertools::Itertools;

use crate::complex::{FacetHypergraph, Vertex};

fn hits_all(h: &FacetHypergraph, t: &[Vertex]) -> bool {
    h.edges()
        .iter()
        .all(|e| e.iter().any(|v| t.binary_search(v).is_ok()))
}

/// Smallest transversal size up to `max_size`, by trying subsets in increasing size
/// (lexicographic within a size). `None` means nothing of size `<= max_size` works.
pub fn brute_force_tau(h: &FacetHypergraph, max_size: usize) -> Option<usize> {
    let limit = max_size.min(h.vertex_count());
    (0..=limit).find(|&k| {
        h.vertices()
            .iter()
            .copied()
            .combinations(k)
            .any(|t| hits_all(h, &t))
    })
}

/// Every transversal with exactly `size` vertices, in lexicographic order.
pub fn brute_force_transversals(h: &FacetHypergraph, size: usize) -> Vec<Vec<Vertex>> {
    h.vertices()
        .iter()
        .copied()
        .combinations(size)
        .filter(|t| hits_all(h, t))
        .collect()
}
