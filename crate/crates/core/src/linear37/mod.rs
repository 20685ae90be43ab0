//! Transversals of size at most `ceil(3n/7)` for linear stacked 2-spheres on `n` vertices.
//!
//! The induction carries a pair `T1, T2` of transversals whose union holds at least
//! three vertices of the last tetrahedron. Spheres on at most 10 vertices are handled
//! directly with `|T_i| <= floor(n/2)`. A larger sphere is split into the boundary of
//! its first `n - 10` tetrahedra and a 10-vertex block made of the last seven. The
//! block is relabeled so that the triangle it shares with the prefix is `{1,2,3}`,
//! and the prefix pair picks two shared vertices `L`. A block pair `W1, W2`, each of
//! size at most 4 and each meeting `L`, is then merged with the prefix pair:
//! `W_i ∪ T_j` for a `T_j` meeting `W_i` costs at most 3 new vertices per 7 new
//! vertices of the sphere.
//!
//! Both the small cases and the block are solved by exhaustive search in a fixed
//! order ([`Strategy::Search`]). [`Strategy::Constructive`] builds the same kind of
//! pair by a local case analysis instead. Either way every returned pair is checked
//! against the boundary before it leaves this module.

mod constructive;
mod search;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::complex::{canonical_block_labeling, Simplex, StackedBall, Vertex};
use crate::error::{Error, Result};
use crate::solver::is_transversal;

/// Two transversals of one sphere.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransversalPair {
    pub t1: Vec<Vertex>,
    pub t2: Vec<Vertex>,
    /// `|(T1 ∪ T2) ∩ σ_last|` for the last tetrahedron in path order.
    pub last_facet_hits: usize,
}

impl TransversalPair {
    fn new(t1: Vec<Vertex>, t2: Vec<Vertex>, last: &Simplex) -> Self {
        let last_facet_hits = last
            .iter()
            .filter(|v| t1.contains(v) || t2.contains(v))
            .count();
        TransversalPair {
            t1,
            t2,
            last_facet_hits,
        }
    }

    /// Size of the smaller transversal.
    pub fn best_size(&self) -> usize {
        self.t1.len().min(self.t2.len())
    }

    /// The smaller transversal, `t1` on ties.
    pub fn best(&self) -> &[Vertex] {
        if self.t2.len() < self.t1.len() {
            &self.t2
        } else {
            &self.t1
        }
    }
}

/// A canonical 10-vertex block: seven tetrahedra, the `i`-th adding vertex `i + 3`,
/// and a 2-set `l` of the first three labels.
#[derive(Debug, Clone)]
pub struct BlockInput {
    ball: StackedBall,
    l: [Vertex; 2],
}

impl BlockInput {
    pub fn new(ball: StackedBall, l: [Vertex; 2]) -> Result<Self> {
        if ball.dim() != 2 {
            return Err(Error::WrongDimension {
                expected: 2,
                found: ball.dim(),
            });
        }
        if ball.len() != 7 {
            return Err(Error::InvalidBlock(format!(
                "{} tetrahedra, expected 7",
                ball.len()
            )));
        }
        if ball.vertices() != (1..=10).collect::<Vec<Vertex>>() {
            return Err(Error::InvalidBlock("labels are not 1..=10".into()));
        }
        if ball.simplex(0).vertices() != [1, 2, 3, 4] {
            return Err(Error::InvalidBlock("first tetrahedron is not {1,2,3,4}".into()));
        }
        for i in 1..7 {
            if ball.new_vertex(i) != Some(i as Vertex + 4) {
                return Err(Error::InvalidBlock(format!(
                    "tetrahedron {} does not add vertex {}",
                    i + 1,
                    i + 4
                )));
            }
        }
        if !ball.is_linear() || ball.path_order()? != (0..7).collect::<Vec<_>>() {
            return Err(Error::InvalidBlock("tetrahedra are not a path in order".into()));
        }
        if l[0] == l[1] || !l.iter().all(|v| (1..=3).contains(v)) {
            return Err(Error::InvalidBlock(format!(
                "L = {{{},{}}} is not a 2-subset of {{1,2,3}}",
                l[0], l[1]
            )));
        }
        let mut l = l;
        l.sort_unstable();
        Ok(BlockInput { ball, l })
    }

    pub fn ball(&self) -> &StackedBall {
        &self.ball
    }

    pub fn l(&self) -> [Vertex; 2] {
        self.l
    }
}

/// How the small spheres and the blocks are solved.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Strategy {
    /// First valid pair in `(|T1|, |T2|, T1, T2)` order.
    #[default]
    Search,
    /// Local case analysis; no search.
    Constructive,
}

/// `ceil(3n/7)`.
pub fn bound_3n7(n: usize) -> usize {
    (3 * n).div_ceil(7)
}

/// Pair of transversals of a linear stacked 2-sphere, each of size at most `ceil(3n/7)`.
pub fn transversal_3n7(ball: &StackedBall) -> Result<TransversalPair> {
    transversal_3n7_with(ball, Strategy::Search)
}

pub fn transversal_3n7_with(ball: &StackedBall, strategy: Strategy) -> Result<TransversalPair> {
    check_linear_2(ball)?;
    let path = ball.in_path_order()?;
    let pair = solve(&path, strategy)?;

    let n = path.vertex_count();
    let h = path.boundary().to_hypergraph();
    let last = path.simplex(path.len() - 1);
    let bound = bound_3n7(n);
    for (name, t) in [("T1", &pair.t1), ("T2", &pair.t2)] {
        if !is_transversal(&h, t) {
            return Err(Error::InternalContradiction(format!(
                "{name} misses a facet of the {n}-vertex sphere"
            )));
        }
        if t.len() > bound {
            return Err(Error::InternalContradiction(format!(
                "{name} has {} vertices, above ceil(3n/7) = {bound}",
                t.len()
            )));
        }
    }
    if pair.last_facet_hits < 3 || pair != TransversalPair::new(pair.t1.clone(), pair.t2.clone(), last) {
        return Err(Error::InternalContradiction(
            "pair holds fewer than 3 vertices of the last tetrahedron".into(),
        ));
    }
    Ok(pair)
}

/// Pair for a linear stacked 2-ball on 4 to 10 vertices with `|T_i| <= floor(n/2)`.
pub fn base_case(ball: &StackedBall) -> Result<TransversalPair> {
    base_case_with(ball, Strategy::Search)
}

pub fn base_case_with(ball: &StackedBall, strategy: Strategy) -> Result<TransversalPair> {
    check_linear_2(ball)?;
    let n = ball.vertex_count();
    if !(4..=10).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "base case covers 4..=10 vertices, got {n}"
        )));
    }
    let path = ball.in_path_order()?;
    let last = path.simplex(path.len() - 1);
    let facets: Vec<Simplex> = path.boundary().facets().iter().cloned().collect();
    let (t1, t2) = match strategy {
        Strategy::Search => {
            search::first_pair(&path.vertices(), &facets, last, n / 2, None).ok_or_else(|| {
                Error::InternalContradiction(format!("no base pair on {n} vertices"))
            })?
        }
        Strategy::Constructive => constructive::base_pair(&path)?,
    };
    let pair = TransversalPair::new(t1, t2, last);
    let h = path.boundary().to_hypergraph();
    if pair.t1.len().max(pair.t2.len()) > n / 2
        || pair.last_facet_hits < 3
        || !is_transversal(&h, &pair.t1)
        || !is_transversal(&h, &pair.t2)
    {
        return Err(Error::InternalContradiction(format!(
            "base pair on {n} vertices fails its contract"
        )));
    }
    Ok(pair)
}

/// Pair of transversals of the whole block boundary, each of size at most 4 and
/// meeting `L`, together holding at least three vertices of the seventh tetrahedron.
pub fn lemma_block(input: &BlockInput) -> Result<TransversalPair> {
    lemma_block_with(input, Strategy::Search)
}

pub fn lemma_block_with(input: &BlockInput, strategy: Strategy) -> Result<TransversalPair> {
    let ball = &input.ball;
    let last = ball.simplex(6);
    let facets: Vec<Simplex> = ball.boundary().facets().iter().cloned().collect();
    let (t1, t2) = match strategy {
        Strategy::Search => {
            let vertices: Vec<Vertex> = (1..=10).collect();
            search::first_pair(&vertices, &facets, last, 4, Some(&input.l)).ok_or_else(|| {
                Error::InternalContradiction(format!(
                    "no block pair for L = {:?} on {:?}",
                    input.l,
                    ball.simplices()
                ))
            })?
        }
        Strategy::Constructive => constructive::block_pair(ball, input.l)?,
    };
    let pair = TransversalPair::new(t1, t2, last);
    let h = ball.boundary().to_hypergraph();
    let meets_l = |t: &[Vertex]| t.iter().any(|v| input.l.contains(v));
    if pair.t1.len().max(pair.t2.len()) > 4
        || pair.last_facet_hits < 3
        || !meets_l(&pair.t1)
        || !meets_l(&pair.t2)
        || !is_transversal(&h, &pair.t1)
        || !is_transversal(&h, &pair.t2)
    {
        return Err(Error::InternalContradiction(format!(
            "block pair {:?} / {:?} for L = {:?} fails its contract",
            pair.t1, pair.t2, input.l
        )));
    }
    Ok(pair)
}

/// A path-ordered ball on `n > 10` vertices cut into its first `n - 10` tetrahedra and a
/// canonical block of the last seven.
#[derive(Debug, Clone)]
pub struct Split {
    pub prefix: StackedBall,
    pub block: StackedBall,
    /// Original label to block label, for the ten block vertices.
    pub to_block: BTreeMap<Vertex, Vertex>,
    /// The triangle shared by the prefix and the block, in original labels.
    pub shared: Simplex,
}

impl Split {
    pub fn from_block(&self, v: Vertex) -> Vertex {
        *self
            .to_block
            .iter()
            .find(|(_, &b)| b == v)
            .map(|(o, _)| o)
            .expect("block label in range")
    }
}

pub fn recurse_split(path: &StackedBall) -> Result<Split> {
    let n = path.vertex_count();
    if n <= 10 {
        return Err(Error::TooSmall { n });
    }
    let m = path.len();
    let start = m - 7;
    let shared = path.simplex(start - 1).intersection(path.simplex(start));
    let prefix = path.prefix(start)?;
    let (block, to_block) = canonical_block_labeling(path, start, 7, shared.vertices())?;
    Ok(Split {
        prefix,
        block,
        to_block,
        shared,
    })
}

fn check_linear_2(ball: &StackedBall) -> Result<()> {
    if ball.dim() != 2 {
        return Err(Error::WrongDimension {
            expected: 2,
            found: ball.dim(),
        });
    }
    if !ball.is_linear() {
        return Err(Error::NotLinear);
    }
    Ok(())
}

fn solve(path: &StackedBall, strategy: Strategy) -> Result<TransversalPair> {
    if path.vertex_count() <= 10 {
        return base_case_with(path, strategy);
    }
    let split = recurse_split(path)?;
    let inner = solve(&split.prefix, strategy)?;

    let covered: Vec<Vertex> = split
        .shared
        .iter()
        .copied()
        .filter(|v| inner.t1.contains(v) || inner.t2.contains(v))
        .collect();
    if covered.len() < 2 {
        return Err(Error::InternalContradiction(
            "prefix pair holds fewer than two shared vertices".into(),
        ));
    }
    let l = [split.to_block[&covered[0]], split.to_block[&covered[1]]];
    let block = lemma_block_with(&BlockInput::new(split.block.clone(), l)?, strategy)?;

    let unmap = |w: &[Vertex]| -> Vec<Vertex> { w.iter().map(|&v| split.from_block(v)).collect() };
    let merge = |w: Vec<Vertex>| -> Result<Vec<Vertex>> {
        [&inner.t1, &inner.t2]
            .into_iter()
            .filter(|t| t.iter().any(|v| w.contains(v)))
            .map(|t| {
                let mut u = w.clone();
                u.extend(t.iter().copied());
                u.sort_unstable();
                u.dedup();
                u
            })
            .min_by_key(Vec::len)
            .ok_or_else(|| Error::InternalContradiction("block set meets neither prefix set".into()))
    };
    let t1 = merge(unmap(&block.t1))?;
    let t2 = merge(unmap(&block.t2))?;
    Ok(TransversalPair::new(t1, t2, path.simplex(path.len() - 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{enumerate_linear_balls, linear_lower_bound, path_ball};
    use crate::solver::min_transversal;

    #[test]
    fn single_tetrahedron() {
        let ball = path_ball(2, 1).unwrap();
        let pair = transversal_3n7(&ball).unwrap();
        assert_eq!(pair.t1, vec![1, 2]);
        assert_eq!(pair.t2, vec![1, 3]);
        let pair = transversal_3n7_with(&ball, Strategy::Constructive).unwrap();
        assert_eq!((pair.t1, pair.t2), (vec![1, 2], vec![3, 4]));
    }

    #[test]
    fn two_tetrahedra_use_the_shared_triangle() {
        let ball = StackedBall::from_lists(2, &[&[1, 2, 3, 4], &[2, 3, 4, 5]]).unwrap();
        let pair = transversal_3n7_with(&ball, Strategy::Constructive).unwrap();
        assert_eq!((pair.t1, pair.t2), (vec![2, 3], vec![3, 4]));
        let pair = transversal_3n7(&ball).unwrap();
        assert!(pair.t1.len() <= 2 && pair.t2.len() <= 2);
        assert!(pair.last_facet_hits >= 3);
    }

    #[test]
    fn fourteen_vertex_path_is_optimal() {
        let ball = path_ball(2, 11).unwrap();
        let pair = transversal_3n7(&ball).unwrap();
        let (cert, _) = min_transversal(&ball.boundary().to_hypergraph()).unwrap();
        assert_eq!(cert.size(), 6);
        assert!(pair.t1.len() <= 6 && pair.t2.len() <= 6);
        assert_eq!(pair.best_size(), 6);
    }

    #[test]
    fn base_case_sizes() {
        for m in 1..=7 {
            for ball in enumerate_linear_balls(2, m) {
                for strategy in [Strategy::Search, Strategy::Constructive] {
                    let pair = base_case_with(&ball, strategy).unwrap();
                    let n = ball.vertex_count();
                    assert!(pair.t1.len() <= n / 2 && pair.t2.len() <= n / 2);
                    assert!(pair.last_facet_hits >= 3);
                }
            }
        }
    }

    #[test]
    fn ten_vertex_path_fixture() {
        let pair = base_case(&path_ball(2, 7).unwrap()).unwrap();
        assert_eq!(pair.t1.len().max(pair.t2.len()), 4);
        assert!(pair.last_facet_hits >= 3);
    }

    #[test]
    fn split_shapes() {
        let split = recurse_split(&path_ball(2, 8).unwrap()).unwrap();
        assert_eq!(split.prefix.len(), 1);
        assert_eq!(split.block.len(), 7);

        let path = path_ball(2, 11).unwrap();
        let split = recurse_split(&path).unwrap();
        assert_eq!(split.prefix.simplices(), path_ball(2, 4).unwrap().simplices());
        assert_eq!(split.shared, Simplex::new(vec![5, 6, 7]).unwrap());
        let mut shared_labels: Vec<Vertex> = split.shared.iter().map(|v| split.to_block[v]).collect();
        shared_labels.sort_unstable();
        assert_eq!(shared_labels, vec![1, 2, 3]);

        // mapping the block back and adding the prefix gives the original tetrahedra
        let mut rebuilt: Vec<Simplex> = split.prefix.simplices().to_vec();
        rebuilt.extend(split.block.simplices().iter().map(|s| s.map(|v| split.from_block(v)).unwrap()));
        assert_eq!(rebuilt, path.simplices());

        assert_eq!(
            recurse_split(&path_ball(2, 7).unwrap()).unwrap_err(),
            Error::TooSmall { n: 10 }
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            transversal_3n7(&path_ball(3, 2).unwrap()).unwrap_err(),
            Error::WrongDimension {
                expected: 2,
                found: 3
            }
        );
        let star = StackedBall::from_lists(
            2,
            &[&[1, 2, 3, 4], &[1, 2, 3, 5], &[1, 2, 4, 6], &[1, 3, 4, 7]],
        )
        .unwrap();
        assert_eq!(transversal_3n7(&star).unwrap_err(), Error::NotLinear);

        let block = path_ball(2, 7).unwrap();
        assert!(BlockInput::new(block.clone(), [1, 4]).is_err());
        assert!(BlockInput::new(block.clone(), [2, 2]).is_err());
        assert!(BlockInput::new(block, [3, 1]).is_ok());
    }

    #[test]
    fn extremal_family_is_tight() {
        let inst = linear_lower_bound(2, 1).unwrap();
        let pair = transversal_3n7(&inst.ball).unwrap();
        assert_eq!(pair.best_size(), 6);
        assert_eq!(bound_3n7(14), 6);
    }
}
