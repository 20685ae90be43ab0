use std::collections::BTreeSet;

use super::{Simplex, Vertex};
use crate::error::{Error, Result};

/// Boundary complex of a stacked ball, given by its facets. Facets taken out for
/// `S - {f}` style statements are kept in `removed` rather than dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StackedSphere {
    dim: usize,
    vertices: Vec<Vertex>,
    facets: BTreeSet<Simplex>,
    removed: BTreeSet<Simplex>,
}

impl StackedSphere {
    pub(crate) fn from_parts(
        dim: usize,
        vertices: Vec<Vertex>,
        facets: BTreeSet<Simplex>,
        removed: BTreeSet<Simplex>,
    ) -> Self {
        StackedSphere {
            dim,
            vertices,
            facets,
            removed,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Vertex count n of the underlying sphere (removing facets keeps all vertices).
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Facets still present.
    pub fn facets(&self) -> &BTreeSet<Simplex> {
        &self.facets
    }

    pub fn removed(&self) -> &BTreeSet<Simplex> {
        &self.removed
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn contains_facet(&self, f: &Simplex) -> bool {
        self.facets.contains(f)
    }

    /// Removes facets; removing an already removed facet is a no-op.
    pub fn remove_facets<'a, I>(&self, facets: I) -> Result<StackedSphere>
    where
        I: IntoIterator<Item = &'a Simplex>,
    {
        let mut out = self.clone();
        for f in facets {
            if out.facets.remove(f) {
                out.removed.insert(f.clone());
            } else if !out.removed.contains(f) {
                return Err(Error::FacetNotPresent(f.clone()));
            }
        }
        Ok(out)
    }

    /// The sphere with every removed facet put back.
    pub fn restored(&self) -> StackedSphere {
        let mut out = self.clone();
        out.facets.extend(std::mem::take(&mut out.removed));
        out
    }

    /// Facet hypergraph over the sphere's vertex set, excluding removed facets.
    pub fn to_hypergraph(&self) -> FacetHypergraph {
        FacetHypergraph {
            vertices: self.vertices.clone(),
            edges: self.facets.iter().cloned().collect(),
        }
    }
}

/// A hypergraph: sorted vertex list plus edges over those vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetHypergraph {
    vertices: Vec<Vertex>,
    edges: Vec<Simplex>,
}

impl FacetHypergraph {
    /// Every edge must lie inside `vertices`. Empty edges are accepted here and
    /// rejected by the solvers that cannot handle them.
    pub fn new(vertices: Vec<Vertex>, edges: Vec<Simplex>) -> Result<Self> {
        let vertices: Vec<Vertex> = vertices
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        for e in &edges {
            if let Some(&v) = e.iter().find(|v| vertices.binary_search(v).is_err()) {
                return Err(Error::UnknownVertex(v));
            }
        }
        Ok(FacetHypergraph { vertices, edges })
    }

    /// Vertex set taken as the union of the edges.
    pub fn from_edges(edges: Vec<Simplex>) -> Self {
        let vertices: BTreeSet<Vertex> = edges.iter().flatten().copied().collect();
        FacetHypergraph {
            vertices: vertices.into_iter().collect(),
            edges,
        }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> &[Simplex] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_empty_edge(&self) -> bool {
        self.edges.iter().any(Simplex::is_empty)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::StackedBall;
    use crate::simplex;

    fn tetra() -> StackedSphere {
        StackedBall::from_lists(2, &[&[1, 2, 3, 4]]).unwrap().boundary()
    }

    #[test]
    fn hypergraph_of_tetra() {
        let h = tetra().to_hypergraph();
        assert_eq!(h.vertex_count(), 4);
        assert_eq!(h.edge_count(), 4);
    }

    #[test]
    fn remove_facets_is_idempotent() {
        let s = tetra();
        let f = simplex![1, 2, 3];
        let once = s.remove_facets([&f]).unwrap();
        assert_eq!(once.to_hypergraph().edge_count(), 3);
        assert_eq!(once.vertex_count(), 4);
        let twice = once.remove_facets([&f]).unwrap();
        assert_eq!(once, twice);
        assert_eq!(once.restored(), s);
        assert_eq!(
            s.remove_facets([&simplex![1, 2, 5]]),
            Err(Error::FacetNotPresent(simplex![1, 2, 5]))
        );
    }

    #[test]
    fn hypergraph_rejects_unknown_vertex() {
        assert_eq!(
            FacetHypergraph::new(vec![1, 2], vec![simplex![1, 3]]),
            Err(Error::UnknownVertex(3))
        );
    }
}
