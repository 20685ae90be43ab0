//! Minimum transversals (hitting sets) of facet hypergraphs.
//!
//! [`min_transversal`] is the exact branch and bound; [`greedy_transversal`] seeds it
//! with an incumbent and [`matching_lower_bound`] is the packing bound it prunes with.
//! [`brute_force_tau`] enumerates subsets directly and shares no code with the
//! branch and bound, so it can serve as an oracle.

mod branch;
mod brute;
mod dense;

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::complex::{FacetHypergraph, Vertex};
use crate::error::{Error, Result};

pub use brute::{brute_force_tau, brute_force_transversals};

/// Environment variable read by the CLI for a default node cap.
pub const NODE_CAP_ENV: &str = "STACKSPHERE_NODE_CAP";

/// A vertex set claimed to hit every edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransversalCertificate {
    pub vertices: Vec<Vertex>,
    /// Set only when an exhausted search proved no smaller transversal exists.
    pub optimal: bool,
}

impl TransversalCertificate {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct SolveStats {
    pub nodes_explored: u64,
    pub reductions_applied: u64,
    pub root_lower_bound: usize,
    pub greedy_size: usize,
    /// The node cap was reached; the certificate is then only an upper bound.
    pub limit_hit: bool,
    #[serde(serialize_with = "millis")]
    pub wall_time: Duration,
}

fn millis<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SolveOptions {
    /// Stop after this many search nodes. The returned certificate is not optimal then.
    pub node_limit: Option<u64>,
    /// Split the top of the search tree across the rayon pool. The size of the
    /// result matches the sequential search; the vertex set may differ.
    pub parallel: bool,
}

/// Checks that `t` meets every edge.
pub fn is_transversal(h: &FacetHypergraph, t: &[Vertex]) -> bool {
    h.edges().iter().all(|e| e.iter().any(|v| t.contains(v)))
}

/// Size of a greedily built family of pairwise disjoint edges (smallest edges first,
/// then lexicographic). Any transversal needs a distinct vertex for each of them.
pub fn matching_lower_bound(h: &FacetHypergraph) -> usize {
    let mut edges: Vec<_> = h.edges().iter().collect();
    edges.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let mut used: Vec<Vertex> = Vec::new();
    let mut size = 0;
    for e in edges {
        if !e.is_empty() && e.iter().all(|v| !used.contains(v)) {
            used.extend(e.iter().copied());
            size += 1;
        }
    }
    size
}

/// Repeatedly takes a vertex meeting the most unhit edges, smallest id on ties.
pub fn greedy_transversal(h: &FacetHypergraph) -> Result<TransversalCertificate> {
    if h.has_empty_edge() {
        return Err(Error::EmptyEdge);
    }
    let mut unhit: Vec<&[Vertex]> = h.edges().iter().map(|e| e.vertices()).collect();
    let mut chosen = Vec::new();
    while !unhit.is_empty() {
        let mut best: Option<(usize, Vertex)> = None;
        for &v in h.vertices() {
            let deg = unhit.iter().filter(|e| e.contains(&v)).count();
            if deg > best.map_or(0, |b| b.0) {
                best = Some((deg, v));
            }
        }
        let (_, v) = best.expect("an unhit non-empty edge has a vertex");
        chosen.push(v);
        unhit.retain(|e| !e.contains(&v));
    }
    chosen.sort_unstable();
    Ok(TransversalCertificate {
        vertices: chosen,
        optimal: false,
    })
}

/// Exact minimum transversal, single-threaded and without a node cap.
pub fn min_transversal(h: &FacetHypergraph) -> Result<(TransversalCertificate, SolveStats)> {
    min_transversal_with(h, &SolveOptions::default())
}

pub fn min_transversal_with(
    h: &FacetHypergraph,
    options: &SolveOptions,
) -> Result<(TransversalCertificate, SolveStats)> {
    let start = Instant::now();
    let greedy = greedy_transversal(h)?;
    let dense = dense::Dense::new(h);
    let to_index = |v: &Vertex| dense.labels.binary_search(v).expect("vertex of h");
    let incumbent: Vec<usize> = greedy.vertices.iter().map(to_index).collect();
    let root_lower_bound = branch::packing_bound(&dense.edges, dense.words);

    let search = branch::Search::new(&dense, incumbent, options.node_limit, options.parallel);
    search.run();
    let limit_hit = search.aborted.load(std::sync::atomic::Ordering::SeqCst);
    let nodes_explored = search.nodes.load(std::sync::atomic::Ordering::SeqCst);
    let reductions_applied = search.reductions.load(std::sync::atomic::Ordering::SeqCst);
    let mut vertices: Vec<Vertex> = search
        .into_best()
        .into_iter()
        .map(|i| dense.labels[i])
        .collect();
    vertices.sort_unstable();

    let cert = TransversalCertificate {
        vertices,
        optimal: !limit_hit,
    };
    if !is_transversal(h, &cert.vertices) {
        return Err(Error::InternalContradiction(
            "branch and bound returned a set missing an edge".into(),
        ));
    }
    let stats = SolveStats {
        nodes_explored,
        reductions_applied,
        root_lower_bound,
        greedy_size: greedy.size(),
        limit_hit,
        wall_time: start.elapsed(),
    };
    Ok((cert, stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{Simplex, StackedBall};
    use crate::simplex;

    fn tetra() -> FacetHypergraph {
        StackedBall::from_lists(2, &[&[1, 2, 3, 4]])
            .unwrap()
            .boundary()
            .to_hypergraph()
    }

    #[test]
    fn tetra_needs_two() {
        let h = tetra();
        let (cert, stats) = min_transversal(&h).unwrap();
        assert_eq!(cert.size(), 2);
        assert!(cert.optimal);
        assert!(stats.nodes_explored >= 1);
        assert_eq!(greedy_transversal(&h).unwrap().size(), 2);
        assert_eq!(brute_force_tau(&h, 4), Some(2));
    }

    #[test]
    fn greedy_tie_breaks_on_smallest_id() {
        let h = FacetHypergraph::from_edges(vec![simplex![5, 7]]);
        assert_eq!(greedy_transversal(&h).unwrap().vertices, vec![5]);
    }

    #[test]
    fn empty_edges() {
        let h = FacetHypergraph::new(vec![1, 2], vec![Simplex::new(vec![]).unwrap()]).unwrap();
        assert_eq!(min_transversal(&h).unwrap_err(), Error::EmptyEdge);
        assert_eq!(greedy_transversal(&h).unwrap_err(), Error::EmptyEdge);
        assert_eq!(brute_force_tau(&h, 2), None);
    }

    #[test]
    fn no_edges() {
        let h = FacetHypergraph::new(vec![1, 2], vec![]).unwrap();
        let (cert, _) = min_transversal(&h).unwrap();
        assert_eq!(cert.size(), 0);
        assert_eq!(brute_force_tau(&h, 0), Some(0));
        assert_eq!(matching_lower_bound(&h), 0);
    }

    #[test]
    fn is_transversal_extremes() {
        let h = tetra();
        assert!(is_transversal(&h, h.vertices()));
        assert!(!is_transversal(&h, &[]));
    }

    #[test]
    fn node_limit_gives_upper_bound_only() {
        let h = crate::constructions::linear_lower_bound(2, 2)
            .unwrap()
            .full_sphere()
            .to_hypergraph();
        let (cert, stats) = min_transversal_with(
            &h,
            &SolveOptions {
                node_limit: Some(1),
                parallel: false,
            },
        )
        .unwrap();
        assert!(stats.limit_hit);
        assert!(!cert.optimal);
        assert!(is_transversal(&h, &cert.vertices));
    }
}
