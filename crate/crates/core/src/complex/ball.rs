use std::collections::{BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use super::{DualTree, Simplex, StackedSphere, Vertex};
use crate::error::{Error, Result};

/// How simplex `i > 0` was glued onto the ball built from the simplices before it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Attachment {
    /// Index of the unique earlier simplex containing `face`.
    pub parent: usize,
    /// The shared codimension-one face (a free face at the time of gluing).
    pub face: Simplex,
    pub new_vertex: Vertex,
}

/// A stacked (d+1)-ball given by its construction sequence of (d+1)-simplices.
///
/// `dim` is the dimension of the boundary sphere, so every simplex has `dim + 2`
/// vertices and every boundary facet has `dim + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StackedBall {
    dim: usize,
    simplices: Vec<Simplex>,
    attachments: Vec<Option<Attachment>>,
}

impl StackedBall {
    /// Validates a construction sequence and resolves each gluing face.
    pub fn new(dim: usize, simplices: Vec<Simplex>) -> Result<Self> {
        if simplices.is_empty() {
            return Err(Error::EmptyBall);
        }
        let size = dim + 2;
        let mut holders: HashMap<Simplex, Vec<usize>> = HashMap::new();
        let mut seen: HashSet<Vertex> = HashSet::new();
        let mut attachments = Vec::with_capacity(simplices.len());

        for (index, sigma) in simplices.iter().enumerate() {
            if sigma.len() != size {
                return Err(Error::WrongSimplexSize {
                    index,
                    expected: size,
                    found: sigma.len(),
                });
            }
            if index == 0 {
                attachments.push(None);
            } else {
                if !sigma.facets().any(|face| holders.contains_key(&face)) {
                    return Err(Error::AttachmentNotFound { index });
                }
                let fresh: Vec<Vertex> =
                    sigma.iter().copied().filter(|v| !seen.contains(v)).collect();
                if fresh.len() != 1 {
                    return Err(Error::NoNewVertex {
                        index,
                        new_vertices: fresh.len(),
                    });
                }
                let new_vertex = fresh[0];
                let face = sigma.without(new_vertex);
                let owners = holders
                    .get(&face)
                    .ok_or(Error::AttachmentNotFound { index })?;
                if owners.len() != 1 {
                    return Err(Error::FaceNotFree { index, face });
                }
                attachments.push(Some(Attachment {
                    parent: owners[0],
                    face,
                    new_vertex,
                }));
            }
            for face in sigma.facets() {
                holders.entry(face).or_default().push(index);
            }
            seen.extend(sigma.iter().copied());
        }

        Ok(StackedBall {
            dim,
            simplices,
            attachments,
        })
    }

    /// Convenience constructor from raw vertex lists.
    pub fn from_lists(dim: usize, lists: &[&[Vertex]]) -> Result<Self> {
        let simplices = lists
            .iter()
            .map(|l| Simplex::new(l.to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(dim, simplices)
    }

    /// Dimension d of the boundary sphere.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of top simplices, m.
    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn simplex(&self, i: usize) -> &Simplex {
        &self.simplices[i]
    }

    pub fn attachment(&self, i: usize) -> Option<&Attachment> {
        self.attachments[i].as_ref()
    }

    /// The vertex a simplex introduces. For the first simplex there is none.
    pub fn new_vertex(&self, i: usize) -> Option<Vertex> {
        self.attachment(i).map(|a| a.new_vertex)
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        let set: BTreeSet<Vertex> = self.simplices.iter().flatten().copied().collect();
        set.into_iter().collect()
    }

    pub fn vertex_count(&self) -> usize {
        // first simplex contributes dim + 2, every later one exactly one more
        self.dim + 1 + self.simplices.len()
    }

    /// Index of the simplex that owns a boundary facet, if `facet` is one.
    pub fn facet_owner(&self, facet: &Simplex) -> Option<usize> {
        let mut owners = self
            .simplices
            .iter()
            .enumerate()
            .filter(|(_, s)| facet.is_subset(s))
            .map(|(i, _)| i);
        match (owners.next(), owners.next()) {
            (Some(i), None) if facet.len() == self.dim + 1 => Some(i),
            _ => None,
        }
    }

    /// The boundary sphere: all codimension-one faces lying in exactly one simplex.
    pub fn boundary(&self) -> StackedSphere {
        let mut count: HashMap<Simplex, usize> = HashMap::new();
        for sigma in &self.simplices {
            for face in sigma.facets() {
                *count.entry(face).or_default() += 1;
            }
        }
        let facets: BTreeSet<Simplex> = count
            .into_iter()
            .filter_map(|(face, c)| (c == 1).then_some(face))
            .collect();
        StackedSphere::from_parts(self.dim, self.vertices(), facets, BTreeSet::new())
    }

    /// The dual tree on simplex indices, read off the attachments.
    pub fn dual_graph(&self) -> DualTree {
        let edges = self
            .attachments
            .iter()
            .enumerate()
            .filter_map(|(i, a)| a.as_ref().map(|a| (a.parent, i)))
            .collect();
        DualTree::new(self.simplices.len(), edges)
    }

    pub fn is_linear(&self) -> bool {
        self.dual_graph().is_path()
    }

    /// End-to-end order of a linear ball, starting from the endpoint with the smaller index.
    pub fn path_order(&self) -> Result<Vec<usize>> {
        self.dual_graph().path_order().ok_or(Error::NotLinear)
    }

    /// Same ball rebuilt in the given simplex order. The order must itself be a valid stacking.
    pub fn reorder(&self, order: &[usize]) -> Result<StackedBall> {
        let simplices = order
            .iter()
            .map(|&i| {
                self.simplices
                    .get(i)
                    .cloned()
                    .ok_or(Error::IndexOutOfRange {
                        index: i,
                        len: self.len(),
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        StackedBall::new(self.dim, simplices)
    }

    /// Rebuilds the ball with simplex `root` first, in depth-first order of the dual tree
    /// (children visited in ascending index).
    pub fn reroot(&self, root: usize) -> Result<StackedBall> {
        if root >= self.len() {
            return Err(Error::IndexOutOfRange {
                index: root,
                len: self.len(),
            });
        }
        let order = self.dual_graph().dfs_order(root);
        self.reorder(&order)
    }

    /// The ball in path order, if linear. Returns a clone when already in path order.
    pub fn in_path_order(&self) -> Result<StackedBall> {
        let order = self.path_order()?;
        if order.iter().enumerate().all(|(i, &j)| i == j) {
            return Ok(self.clone());
        }
        self.reorder(&order)
    }

    /// Applies an injective relabeling to every vertex.
    pub fn relabel<F: FnMut(Vertex) -> Vertex>(&self, mut f: F) -> Result<StackedBall> {
        let simplices = self
            .simplices
            .iter()
            .map(|s| s.map(&mut f))
            .collect::<Result<Vec<_>>>()?;
        StackedBall::new(self.dim, simplices)
    }

    /// Prefix ball made of the first `count` simplices.
    pub fn prefix(&self, count: usize) -> Result<StackedBall> {
        if count == 0 || count > self.len() {
            return Err(Error::IndexOutOfRange {
                index: count,
                len: self.len(),
            });
        }
        Ok(StackedBall {
            dim: self.dim,
            simplices: self.simplices[..count].to_vec(),
            attachments: self.attachments[..count].to_vec(),
        })
    }
}
