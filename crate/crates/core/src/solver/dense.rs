//! Flat bitset representation of a hypergraph used by the branch and bound.

use crate::complex::{FacetHypergraph, Vertex};

/// Edges stored as `words`-wide bitsets over dense vertex indices, back to back.
#[derive(Debug, Clone)]
pub(crate) struct Dense {
    pub labels: Vec<Vertex>,
    pub words: usize,
    pub edges: Vec<u64>,
}

impl Dense {
    pub fn new(h: &FacetHypergraph) -> Dense {
        let labels = h.vertices().to_vec();
        let words = labels.len().div_ceil(64).max(1);
        let mut edges = vec![0u64; words * h.edge_count()];
        for (e, chunk) in h.edges().iter().zip(edges.chunks_mut(words)) {
            for v in e {
                let idx = labels.binary_search(v).expect("edge vertex in vertex set");
                chunk[idx / 64] |= 1 << (idx % 64);
            }
        }
        Dense {
            labels,
            words,
            edges,
        }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }
}

#[inline]
pub(crate) fn popcount(e: &[u64]) -> u32 {
    e.iter().map(|w| w.count_ones()).sum()
}

#[inline]
pub(crate) fn has(e: &[u64], v: usize) -> bool {
    e[v / 64] >> (v % 64) & 1 == 1
}

#[inline]
pub(crate) fn first_bit(e: &[u64]) -> Option<usize> {
    e.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

#[inline]
pub(crate) fn is_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

#[inline]
pub(crate) fn disjoint(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & y == 0)
}

/// Iterates the set bits of a bitset.
pub(crate) fn bits(e: &[u64]) -> impl Iterator<Item = usize> + '_ {
    e.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            }
        })
    })
}

/// Drops every edge containing `v`.
pub(crate) fn remove_hit(edges: &mut Vec<u64>, words: usize, v: usize) {
    let mut write = 0;
    for read in 0..edges.len() / words {
        let (r, w) = (read * words, write * words);
        if !has(&edges[r..r + words], v) {
            edges.copy_within(r..r + words, w);
            write += 1;
        }
    }
    edges.truncate(write * words);
}

/// Deletes vertex `v` from every edge.
pub(crate) fn delete_vertex(edges: &mut [u64], words: usize, v: usize) {
    let mask = !(1u64 << (v % 64));
    for chunk in edges.chunks_mut(words) {
        chunk[v / 64] &= mask;
    }
}

/// Degree of each dense vertex.
pub(crate) fn degrees(edges: &[u64], words: usize, n: usize) -> Vec<u32> {
    let mut deg = vec![0u32; n];
    for chunk in edges.chunks(words) {
        for v in bits(chunk) {
            deg[v] += 1;
        }
    }
    deg
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bit_helpers() {
        let e = [0b1011u64, 1];
        assert_eq!(popcount(&e), 4);
        assert_eq!(bits(&e).collect::<Vec<_>>(), vec![0, 1, 3, 64]);
        assert_eq!(first_bit(&[0, 4]), Some(66));
        assert!(is_subset(&[0b10, 0], &[0b11, 0]));
        assert!(!disjoint(&[0b10, 0], &[0b11, 0]));

        let mut edges = vec![0b011, 0b110, 0b100];
        remove_hit(&mut edges, 1, 1);
        assert_eq!(edges, vec![0b100]);
        let mut edges = vec![0b011, 0b110];
        delete_vertex(&mut edges, 1, 1);
        assert_eq!(edges, vec![0b001, 0b100]);
    }
}
