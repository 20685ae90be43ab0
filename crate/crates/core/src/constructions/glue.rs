use std::collections::{BTreeMap, BTreeSet};

use crate::complex::{Simplex, StackedBall, Vertex};
use crate::error::{Error, Result};

use super::FamilyInstance;

/// Result of gluing two stacked balls through a chain of bridge simplices.
#[derive(Debug, Clone)]
pub struct GlueResult {
    pub ball: StackedBall,
    /// Indices (into `ball`) of the d+1 bridge simplices, in gluing order.
    pub bridge: Vec<usize>,
    /// The facet `h` of the glued sphere that plays the role of a removed facet.
    pub distinguished_facet: Simplex,
    /// Where each vertex of the right-hand ball ended up.
    pub right_labels: BTreeMap<Vertex, Vertex>,
}

/// Glues `right` onto `left` so that the two boundary facets `f` and `g` are joined
/// by d+1 bridge simplices.
///
/// With `f = {v_1 < ... < v_{d+1}}` and `g = {w_1 < ... < w_{d+1}}`, the i-th bridge
/// simplex is `{v_i, ..., v_{d+1}} ∪ {w_1, ..., w_i}`. The left ball keeps its order
/// (the first bridge simplex attaches directly on `f`); the right ball is rerooted so
/// the simplex holding `g` comes first. If the vertex sets overlap, the right ball is
/// shifted past the left one.
pub fn glue(left: &StackedBall, f: &Simplex, right: &StackedBall, g: &Simplex) -> Result<GlueResult> {
    let d = left.dim();
    if right.dim() != d {
        return Err(Error::DimensionMismatch {
            left: d,
            right: right.dim(),
        });
    }
    left.facet_owner(f)
        .ok_or_else(|| Error::NotABoundaryFacet(f.clone()))?;
    right
        .facet_owner(g)
        .ok_or_else(|| Error::NotABoundaryFacet(g.clone()))?;

    let left_vertices = left.vertices();
    let right_vertices = right.vertices();
    let left_set: BTreeSet<Vertex> = left_vertices.iter().copied().collect();
    let offset: i64 = if right_vertices.iter().any(|v| left_set.contains(v)) {
        i64::from(*left_vertices.last().unwrap()) + 1 - i64::from(right_vertices[0])
    } else {
        0
    };
    let shift = |v: Vertex| (i64::from(v) + offset) as Vertex;
    let right_labels: BTreeMap<Vertex, Vertex> =
        right_vertices.iter().map(|&v| (v, shift(v))).collect();
    let right = if offset == 0 {
        right.clone()
    } else {
        right.relabel(shift)?
    };
    let g = g.map(shift)?;
    let owner = right
        .facet_owner(&g)
        .ok_or_else(|| Error::NotABoundaryFacet(g.clone()))?;
    let right = right.reroot(owner)?;

    let v = f.vertices();
    let w = g.vertices();
    let bridge_simplices: Vec<Simplex> = (1..=d + 1)
        .map(|i| {
            let mut vs: Vec<Vertex> = v[i - 1..].to_vec();
            vs.extend_from_slice(&w[..i]);
            Simplex::new(vs)
        })
        .collect::<Result<_>>()?;
    let distinguished_facet = bridge_simplices[0].without(v[1]);

    let first_bridge = left.len();
    let mut simplices = left.simplices().to_vec();
    simplices.extend(bridge_simplices);
    simplices.extend(right.simplices().iter().cloned());
    let ball = StackedBall::new(d, simplices)?;

    Ok(GlueResult {
        ball,
        bridge: (first_bridge..first_bridge + d + 1).collect(),
        distinguished_facet,
        right_labels,
    })
}

fn label_span(ball: &StackedBall) -> Vertex {
    let vs = ball.vertices();
    vs[vs.len() - 1] - vs[0] + 1
}

fn shifted(ball: &StackedBall, by: Vertex) -> Result<StackedBall> {
    if by == 0 {
        Ok(ball.clone())
    } else {
        ball.relabel(|v| v + by)
    }
}

fn shift_simplex(s: &Simplex, by: Vertex) -> Simplex {
    s.map(|v| v + by).expect("shift is injective")
}

/// Glues `copies` disjoint copies in a chain: each new copy is attached at its `f`
/// to the distinguished facet left by the previous gluing.
///
/// The returned sphere has the final distinguished facet removed; with a single copy
/// that facet is `f` itself. Copy j is shifted by `j` times the label span of the input.
pub fn chain_glue_general(ball: &StackedBall, f: &Simplex, copies: usize) -> Result<FamilyInstance> {
    if copies == 0 {
        return Err(Error::InvalidParameter("need at least one copy".into()));
    }
    ball.facet_owner(f)
        .ok_or_else(|| Error::NotABoundaryFacet(f.clone()))?;
    let span = label_span(ball);
    let mut current = ball.clone();
    let mut h = f.clone();
    let mut offsets = vec![0];
    for j in 1..copies {
        let by = span * j as Vertex;
        let copy = shifted(ball, by)?;
        let glued = glue(&current, &h, &copy, &shift_simplex(f, by))?;
        current = glued.ball;
        h = glued.distinguished_facet;
        offsets.push(by);
    }
    let sphere = current.boundary().remove_facets([&h])?;
    Ok(FamilyInstance {
        family: "chain-general".into(),
        dim: ball.dim(),
        copies,
        claimed_n: copies * ball.vertex_count(),
        claimed_tau_lower: None,
        removed_facets: vec![h],
        copy_offsets: offsets,
        ball: current,
        sphere,
    })
}

/// Glues `copies` copies of a linear ball end to end so the result stays linear.
///
/// `f` must be a boundary facet of one end simplex and `g` of the other. Copy j's
/// `g` end is bridged to copy j+1's `f` end. The returned sphere has the outer `f`
/// (first copy) and `g` (last copy) removed.
pub fn chain_glue_linear(
    ball: &StackedBall,
    f: &Simplex,
    g: &Simplex,
    copies: usize,
) -> Result<FamilyInstance> {
    if copies == 0 {
        return Err(Error::InvalidParameter("need at least one copy".into()));
    }
    let mut order = ball.path_order()?;
    let (first, last) = (order[0], order[order.len() - 1]);
    let f_owner = ball.facet_owner(f);
    let g_owner = ball.facet_owner(g);
    if f_owner == Some(last) && g_owner == Some(first) && first != last {
        order.reverse();
    } else if f_owner != Some(first) {
        return Err(Error::NotEndFacet(f.clone()));
    } else if g_owner != Some(last) {
        return Err(Error::NotEndFacet(g.clone()));
    }
    let path = ball.reorder(&order)?;

    let span = label_span(&path);
    let mut current = path.clone();
    let mut offsets = vec![0];
    for j in 1..copies {
        let by = span * j as Vertex;
        let prev_g = shift_simplex(g, by - span);
        let copy = shifted(&path, by)?;
        current = glue(&current, &prev_g, &copy, &shift_simplex(f, by))?.ball;
        offsets.push(by);
    }
    if !current.is_linear() {
        return Err(Error::InternalContradiction(
            "end-to-end gluing produced a non-linear ball".into(),
        ));
    }
    let last_g = shift_simplex(g, span * (copies as Vertex - 1));
    let removed = vec![f.clone(), last_g];
    let sphere = current.boundary().remove_facets(&removed)?;
    Ok(FamilyInstance {
        family: "chain-linear".into(),
        dim: ball.dim(),
        copies,
        claimed_n: copies * ball.vertex_count(),
        claimed_tau_lower: None,
        removed_facets: removed,
        copy_offsets: offsets,
        ball: current,
        sphere,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplex;

    fn tetra(base: Vertex) -> StackedBall {
        StackedBall::from_lists(2, &[&[base, base + 1, base + 2, base + 3]]).unwrap()
    }

    #[test]
    fn two_tetrahedra() {
        let r = glue(&tetra(1), &simplex![1, 2, 3], &tetra(5), &simplex![5, 6, 7]).unwrap();
        assert_eq!(r.ball.vertex_count(), 8);
        assert_eq!(r.ball.len(), 5);
        assert_eq!(r.bridge, vec![1, 2, 3]);
        assert_eq!(r.ball.simplex(1), &simplex![1, 2, 3, 5]);
        assert_eq!(r.ball.simplex(2), &simplex![2, 3, 5, 6]);
        assert_eq!(r.ball.simplex(3), &simplex![3, 5, 6, 7]);
        assert_eq!(r.distinguished_facet, simplex![1, 3, 5]);
        assert!(r.ball.boundary().contains_facet(&r.distinguished_facet));
    }

    #[test]
    fn overlapping_labels_are_shifted() {
        let r = glue(&tetra(1), &simplex![1, 2, 3], &tetra(1), &simplex![2, 3, 4]).unwrap();
        assert_eq!(r.right_labels[&1], 5);
        assert_eq!(r.ball.vertex_count(), 8);
        assert_eq!(r.ball.vertices(), (1..=8).collect::<Vec<_>>());
    }

    #[test]
    fn glue_errors() {
        let b3 = StackedBall::from_lists(3, &[&[1, 2, 3, 4, 5]]).unwrap();
        assert!(matches!(
            glue(&tetra(1), &simplex![1, 2, 3], &b3, &simplex![1, 2, 3, 4]),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        ));
        let two = StackedBall::from_lists(2, &[&[1, 2, 3, 4], &[2, 3, 4, 5]]).unwrap();
        assert_eq!(
            glue(&two, &simplex![2, 3, 4], &tetra(10), &simplex![10, 11, 12]).unwrap_err(),
            Error::NotABoundaryFacet(simplex![2, 3, 4])
        );
    }

    #[test]
    fn single_copy_chains_are_the_input() {
        let b = tetra(1);
        let g = chain_glue_general(&b, &simplex![1, 2, 3], 1).unwrap();
        assert_eq!(g.ball, b);
        assert_eq!(g.removed_facets, vec![simplex![1, 2, 3]]);
        let l = chain_glue_linear(&b, &simplex![1, 2, 3], &simplex![2, 3, 4], 1).unwrap();
        assert_eq!(l.ball, b);
        assert_eq!(l.sphere.facet_count(), 2);
    }

    #[test]
    fn linear_chain_rejects_interior_facets() {
        let b = StackedBall::from_lists(
            2,
            &[&[1, 2, 3, 4], &[2, 3, 4, 5], &[3, 4, 5, 6]],
        )
        .unwrap();
        assert_eq!(
            chain_glue_linear(&b, &simplex![2, 3, 5], &simplex![3, 5, 6], 2).unwrap_err(),
            Error::NotEndFacet(simplex![2, 3, 5])
        );
        // f and g given from opposite ends are accepted and the path is reversed
        let r = chain_glue_linear(&b, &simplex![4, 5, 6], &simplex![1, 2, 3], 2).unwrap();
        assert!(r.ball.is_linear());
        assert_eq!(r.ball.vertex_count(), 12);
    }
}
