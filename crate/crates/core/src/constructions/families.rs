use std::collections::BTreeSet;

use crate::complex::{Simplex, StackedBall, StackedSphere, Vertex};
use crate::error::{Error, Result};

use super::{chain_glue_general, chain_glue_linear};

/// A generated sphere together with the bound its construction guarantees.
#[derive(Debug, Clone)]
pub struct FamilyInstance {
    pub family: String,
    pub dim: usize,
    pub copies: usize,
    /// The stacked ball whose boundary is the sphere.
    pub ball: StackedBall,
    /// Boundary of `ball` with `removed_facets` taken out.
    pub sphere: StackedSphere,
    pub removed_facets: Vec<Simplex>,
    pub claimed_n: usize,
    /// Guaranteed lower bound on the transversal number of `sphere`.
    pub claimed_tau_lower: Option<usize>,
    /// Label shift applied to each glued copy.
    pub copy_offsets: Vec<Vertex>,
}

impl FamilyInstance {
    /// The boundary sphere with nothing removed.
    pub fn full_sphere(&self) -> StackedSphere {
        self.sphere.restored()
    }
}

/// Linear ball of `m` simplices `{i, i+1, ..., i+d+1}` for `i = 1..=m`.
pub fn path_ball(d: usize, m: usize) -> Result<StackedBall> {
    if m == 0 || d == 0 {
        return Err(Error::InvalidParameter(format!(
            "path ball needs d >= 1 and m >= 1, got d={d}, m={m}"
        )));
    }
    let simplices = (1..=m as Vertex)
        .map(|i| Simplex::new((i..=i + d as Vertex + 1).collect()))
        .collect::<Result<Vec<_>>>()?;
    StackedBall::new(d, simplices)
}

/// Linear stacked d-spheres on `(3d+8)k` vertices with transversal number at least `6k`.
///
/// Base piece: the path ball with `2d+7` simplices on `[3d+8]`, with
/// `f = α_1 \ {d+1}` and `g = α_{2d+7} \ {2d+8}` taken out.
pub fn linear_lower_bound(d: usize, k: usize) -> Result<FamilyInstance> {
    check_params(d, k)?;
    let m = 2 * d + 7;
    let ball = path_ball(d, m)?;
    let f = ball.simplex(0).without(d as Vertex + 1);
    let g = ball.simplex(m - 1).without(2 * d as Vertex + 8);
    let mut inst = chain_glue_linear(&ball, &f, &g, k)?;
    inst.family = "linear-lb".into();
    inst.claimed_n = (3 * d + 8) * k;
    inst.claimed_tau_lower = Some(6 * k);
    Ok(inst)
}

/// `φ_i(j) = ((i + j - 1) mod (d+2)) + 1`, a cyclic shift on `[d+2]`.
pub fn general_phi(d: usize, i: usize, j: usize) -> Vertex {
    (((i + j - 1) % (d + 2)) + 1) as Vertex
}

/// Label of the leaf-chain vertex `a^(i)_j` in [`general_lower_bound`].
pub fn general_leaf_vertex(d: usize, i: usize, j: usize) -> Vertex {
    (i * (d + 2) + j) as Vertex
}

/// The simplex `τ^(i)_j` of [`general_lower_bound`], for `j` in `1..=d+2`.
pub fn general_block(d: usize, i: usize, j: usize) -> Simplex {
    let mut vs: Vec<Vertex> = (j + 1..=d + 2).map(|t| general_phi(d, i, t)).collect();
    vs.extend((1..=j).map(|t| general_leaf_vertex(d, i, t)));
    Simplex::new(vs).expect("labels are distinct")
}

/// Stacked d-spheres on `(d+2)^2 k` vertices with transversal number at least `(2d+3)k`.
///
/// The base ball is the simplex on `[d+2]` with d+1 chains `τ^(i)_1, ..., τ^(i)_{d+2}`
/// hanging off it; chain i leaves the root through the face `φ_i(2..=d+2)`.
pub fn general_lower_bound(d: usize, k: usize) -> Result<FamilyInstance> {
    check_params(d, k)?;
    let root = Simplex::new((1..=d as Vertex + 2).collect())?;
    let mut faces = BTreeSet::new();
    for i in 1..=d + 1 {
        let face = root.intersection(&general_block(d, i, 1));
        if face.len() != d + 1 || !faces.insert(face) {
            return Err(Error::InternalContradiction(format!(
                "chain {i} does not leave the root through its own face"
            )));
        }
    }
    let mut simplices = vec![root];
    for i in 1..=d + 1 {
        simplices.extend((1..=d + 2).map(|j| general_block(d, i, j)));
    }
    let ball = StackedBall::new(d, simplices)?;
    let mut f: Vec<Vertex> = vec![general_phi(d, 1, d + 1), general_phi(d, 1, d + 2)];
    f.extend((2..=d).map(|j| general_leaf_vertex(d, 1, j)));
    let f = Simplex::new(f)?;

    let mut inst = chain_glue_general(&ball, &f, k)?;
    inst.family = "general-lb".into();
    inst.claimed_n = (d + 2) * (d + 2) * k;
    inst.claimed_tau_lower = Some((2 * d + 3) * k);
    Ok(inst)
}

/// One-line permutations of `[4]` used by [`general_lower_bound_2`].
pub const GENERAL2_PHI: [[Vertex; 4]; 3] = [[1, 2, 3, 4], [4, 1, 2, 3], [3, 4, 2, 1]];

/// Label of `a^(i)_j` in [`general_lower_bound_2`], `i, j` in `1..=3`.
pub fn general2_leaf_vertex(i: usize, j: usize) -> Vertex {
    (4 + 3 * (i - 1) + j) as Vertex
}

/// The simplex `τ^(i)_j` of [`general_lower_bound_2`], for `j` in `1..=3`.
pub fn general2_block(i: usize, j: usize) -> Simplex {
    let phi = &GENERAL2_PHI[i - 1];
    let mut vs: Vec<Vertex> = phi[j..].to_vec();
    vs.extend((1..=j).map(|t| general2_leaf_vertex(i, t)));
    Simplex::new(vs).expect("labels are distinct")
}

/// Stacked 2-spheres on `13k` vertices with transversal number at least `6k`.
pub fn general_lower_bound_2(k: usize) -> Result<FamilyInstance> {
    check_params(2, k)?;
    let mut simplices = vec![Simplex::new(vec![1, 2, 3, 4])?];
    for i in 1..=3 {
        simplices.extend((1..=3).map(|j| general2_block(i, j)));
    }
    let ball = StackedBall::new(2, simplices)?;
    let f = Simplex::new(vec![1, 3, 4])?;
    let mut inst = chain_glue_general(&ball, &f, k)?;
    inst.family = "general-lb-2".into();
    inst.claimed_n = 13 * k;
    inst.claimed_tau_lower = Some(6 * k);
    Ok(inst)
}

fn check_params(d: usize, k: usize) -> Result<()> {
    if d < 2 || k == 0 {
        return Err(Error::InvalidParameter(format!(
            "need d >= 2 and k >= 1, got d={d}, k={k}"
        )));
    }
    Ok(())
}
