use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{Simplex, StackedBall, Vertex};
use crate::error::{Error, Result};

/// Faces of the newest simplex that are still free: every face for the first
/// simplex, otherwise the faces containing its new vertex (dropped vertex ascending).
fn free_faces_of_last(simplices: &[Simplex], new_vertex: Option<Vertex>) -> Vec<Simplex> {
    let last = simplices.last().expect("non-empty");
    last.iter()
        .filter(|&&v| Some(v) != new_vertex)
        .map(|&v| last.without(v))
        .collect()
}

/// Builds the linear ball whose step `i` glues onto the `choices[i-1]`-th free face
/// of the previous simplex. Labels: first simplex `[d+2]`, step i adds `d+2+i`.
pub fn linear_ball_from_choices(d: usize, choices: &[usize]) -> Result<StackedBall> {
    let mut simplices = vec![Simplex::new((1..=d as Vertex + 2).collect())?];
    let mut new_vertex = None;
    for (step, &c) in choices.iter().enumerate() {
        let faces = free_faces_of_last(&simplices, new_vertex);
        let face = faces.get(c).ok_or_else(|| {
            Error::InvalidParameter(format!("choice {c} at step {} out of range", step + 1))
        })?;
        let v = (d + 3 + step) as Vertex;
        simplices.push(face.with(v));
        new_vertex = Some(v);
    }
    StackedBall::new(d, simplices)
}

/// Random linear ball: every simplex is glued on a uniformly chosen free face of
/// the previous one. Deterministic per seed.
pub fn random_linear_ball(d: usize, m: usize, seed: u64) -> Result<StackedBall> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let choices: Vec<usize> = (1..m)
        .map(|step| rng.gen_range(0..if step == 1 { d + 2 } else { d + 1 }))
        .collect();
    linear_ball_from_choices(d, &choices)
}

/// Random stacked ball: every simplex is glued on a uniformly chosen free face of
/// the whole ball built so far.
pub fn random_ball(d: usize, m: usize, seed: u64) -> Result<StackedBall> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let first = Simplex::new((1..=d as Vertex + 2).collect())?;
    let mut free: Vec<Simplex> = first.facets().collect();
    let mut simplices = vec![first];
    for step in 1..m {
        let face = free.swap_remove(rng.gen_range(0..free.len()));
        let v = (d + 2 + step) as Vertex;
        let sigma = face.with(v);
        free.extend(face.iter().map(|&u| sigma.without(u)));
        simplices.push(sigma);
    }
    StackedBall::new(d, simplices)
}

/// All labeled attachment sequences of linear balls with `m` simplices,
/// `(d+2)(d+1)^(m-2)` of them for `m >= 2`. No isomorphism reduction.
pub fn enumerate_linear_balls(d: usize, m: usize) -> LinearBalls {
    let radices: Vec<usize> = (1..m.max(1))
        .map(|step| if step == 1 { d + 2 } else { d + 1 })
        .collect();
    LinearBalls {
        d,
        choices: vec![0; radices.len()],
        radices,
        done: m == 0,
    }
}

/// Iterator returned by [`enumerate_linear_balls`].
#[derive(Debug, Clone)]
pub struct LinearBalls {
    d: usize,
    radices: Vec<usize>,
    choices: Vec<usize>,
    done: bool,
}

impl LinearBalls {
    /// Total number of balls the iterator yields from the start.
    pub fn total(&self) -> usize {
        self.radices.iter().product()
    }
}

impl Iterator for LinearBalls {
    type Item = StackedBall;

    fn next(&mut self) -> Option<StackedBall> {
        if self.done {
            return None;
        }
        let ball = linear_ball_from_choices(self.d, &self.choices)
            .expect("enumerated choices are in range");
        // odometer, last step varies fastest
        self.done = true;
        for pos in (0..self.choices.len()).rev() {
            self.choices[pos] += 1;
            if self.choices[pos] < self.radices[pos] {
                self.done = false;
                break;
            }
            self.choices[pos] = 0;
        }
        Some(ball)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_linear_balls(2, 1).count(), 1);
        assert_eq!(enumerate_linear_balls(2, 2).count(), 4);
        assert_eq!(enumerate_linear_balls(2, 3).count(), 12);
        assert_eq!(enumerate_linear_balls(2, 7).total(), 972);
        assert_eq!(enumerate_linear_balls(3, 3).count(), 5 * 4);
    }

    #[test]
    fn enumerated_balls_are_distinct_and_linear() {
        let balls: Vec<_> = enumerate_linear_balls(2, 4).collect();
        assert_eq!(balls.len(), 36);
        let set: std::collections::BTreeSet<_> =
            balls.iter().map(|b| b.simplices().to_vec()).collect();
        assert_eq!(set.len(), 36);
        assert!(balls.iter().all(StackedBall::is_linear));
    }

    #[test]
    fn random_linear_is_linear_and_seeded() {
        for seed in 0..20 {
            let b = random_linear_ball(2, 50, seed).unwrap();
            assert!(b.is_linear());
            assert_eq!(b.vertex_count(), 53);
        }
        assert_eq!(
            random_linear_ball(3, 30, 7).unwrap(),
            random_linear_ball(3, 30, 7).unwrap()
        );
    }

    #[test]
    fn random_ball_validates() {
        for seed in 0..20 {
            let b = random_ball(3, 25, seed).unwrap();
            assert!(b.dual_graph().is_tree());
        }
    }
}
