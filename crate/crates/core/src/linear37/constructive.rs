//! Direct constructions of transversal pairs by case analysis on the local
//! structure of a linear stacked 2-ball. Used as an alternative to the exhaustive
//! search; every output is checked by the caller.

use crate::complex::{Simplex, StackedBall, Vertex};
use crate::error::{Error, Result};

fn only(s: Simplex, what: &str) -> Result<Vertex> {
    match s.vertices() {
        [v] => Ok(*v),
        _ => Err(Error::InternalContradiction(format!(
            "expected a single vertex for {what}, found {s}"
        ))),
    }
}

fn minus(a: &Simplex, b: &Simplex) -> Simplex {
    Simplex::from_sorted(a.iter().copied().filter(|&v| !b.contains(v)).collect())
}

fn set(vs: &[Vertex]) -> Vec<Vertex> {
    let mut out = vs.to_vec();
    out.sort_unstable();
    out.dedup();
    out
}

fn union(a: &[Vertex], b: &[Vertex]) -> Vec<Vertex> {
    let mut out = a.to_vec();
    out.extend_from_slice(b);
    set(&out)
}

/// Pair for a path-ordered linear 2-ball on at most 10 vertices, built up two
/// simplices at a time from the 4- and 5-vertex cases.
pub(crate) fn base_pair(path: &StackedBall) -> Result<(Vec<Vertex>, Vec<Vertex>)> {
    let m = path.len();
    match m {
        1 => {
            let v = path.simplex(0).vertices();
            Ok((vec![v[0], v[1]], vec![v[2], v[3]]))
        }
        2 => {
            let shared = path.simplex(0).intersection(path.simplex(1));
            let a = shared.vertices();
            Ok((vec![a[0], a[1]], vec![a[1], a[2]]))
        }
        _ => {
            let (t1, t2) = base_pair(&path.prefix(m - 2)?)?;
            let before = path.simplex(m - 3);
            let sigma = path.simplex(m - 2);
            let last = path.simplex(m - 1);
            let v1 = only(minus(sigma, last), "v1")?;
            let v4 = only(minus(sigma, before), "v4")?;
            let v5 = only(minus(last, sigma), "v5")?;
            let mid: Vec<Vertex> = sigma
                .iter()
                .copied()
                .filter(|&v| v != v1 && v != v4)
                .collect();
            let meets_mid = |t: &[Vertex]| t.iter().any(|v| mid.contains(v));

            if t1.contains(&v1) && meets_mid(&t2) {
                Ok((union(&t1, &[v5]), union(&t2, &[v4])))
            } else if t2.contains(&v1) && meets_mid(&t1) {
                Ok((union(&t1, &[v4]), union(&t2, &[v5])))
            } else if !t1.contains(&v1) && !t2.contains(&v1) && meets_mid(&t1) && meets_mid(&t2) {
                Ok((union(&t1, &[v4]), union(&t2, &[v4])))
            } else {
                Err(Error::InternalContradiction(format!(
                    "base induction hypothesis fails at {m} simplices"
                )))
            }
        }
    }
}

/// Labels of three consecutive simplices `far, mid, end` of a path, named so that
/// `end = {v1,v2,v3,v4}`, `mid = {v2,v3,v4,v5}` and `far = {v2,v3,v5,v6}`.
#[derive(Clone, Copy)]
struct ThreeChain {
    v1: Vertex,
    v2: Vertex,
    v3: Vertex,
    v4: Vertex,
    v5: Vertex,
}

impl ThreeChain {
    fn new(far: &Simplex, mid: &Simplex, end: &Simplex) -> Result<Self> {
        let v1 = only(minus(end, mid), "v1")?;
        let v5 = only(minus(mid, end), "v5")?;
        let v4 = only(minus(mid, far), "v4")?;
        let rest: Vec<Vertex> = mid
            .intersection(end)
            .iter()
            .copied()
            .filter(|&v| v != v4)
            .collect();
        if rest.len() != 2 {
            return Err(Error::InternalContradiction(
                "three consecutive simplices do not share two vertices".into(),
            ));
        }
        Ok(ThreeChain {
            v1,
            v2: rest[0],
            v3: rest[1],
            v4,
            v5,
        })
    }

    /// Two 2-sets inside `mid ∪ end`, together holding three vertices of `end`,
    /// each meeting every boundary facet of the three simplices except `excluded`
    /// (a face of `far` other than the one shared with `mid`).
    fn cover_except(&self, far: &Simplex, excluded: &Simplex) -> Result<[Vec<Vertex>; 2]> {
        if excluded.len() != 3 || !excluded.is_subset(far) {
            return Err(Error::InternalContradiction(format!(
                "{excluded} is not a face of {far}"
            )));
        }
        let missing = only(minus(far, excluded), "excluded vertex")?;
        let ThreeChain { v1, v2, v3, v4, v5 } = *self;
        if missing == v5 {
            Ok([set(&[v1, v5]), set(&[v2, v3])])
        } else if missing == v3 {
            Ok([set(&[v2, v3]), set(&[v3, v4])])
        } else if missing == v2 {
            Ok([set(&[v2, v3]), set(&[v2, v4])])
        } else {
            Err(Error::InternalContradiction(format!(
                "excluded face {excluded} is the face shared with the next simplex"
            )))
        }
    }
}

/// Pair for a canonical 7-simplex block and a 2-set `l` inside its first simplex.
///
/// The middle simplex `σ4` splits as `σ3 ∩ σ4 = {w1,w2,w3}`, `σ4 ∩ σ5 = {w2,w3,w4}`;
/// the edge `e0 = {w2,w3}` meets every facet of `σ3, σ4, σ5`. In the generic case
/// each transversal is `e0` plus one vertex from `σ1 ∪ σ2` and one from `σ6 ∪ σ7`.
/// Two degenerate configurations (`e0` meets `σ2` or `σ6` only in that simplex's
/// outer vertex) are handled with a 2-set that covers four consecutive simplices
/// except one interior face, paired with a [`ThreeChain`] cover of the other end.
pub(crate) fn block_pair(block: &StackedBall, l: [Vertex; 2]) -> Result<(Vec<Vertex>, Vec<Vertex>)> {
    if block.len() != 7 {
        return Err(Error::InvalidBlock(format!(
            "block has {} simplices, expected 7",
            block.len()
        )));
    }
    let s = |i: usize| block.simplex(i - 1);
    let l_set = Simplex::new(l.to_vec())?;
    if !l_set.is_subset(s(1)) {
        return Err(Error::InvalidBlock(format!("{l_set} is not inside {}", s(1))));
    }

    let e0 = s(3).intersection(s(4)).intersection(s(5));
    if e0.len() != 2 {
        return Err(Error::InternalContradiction(format!(
            "middle edge {e0} does not have two vertices"
        )));
    }

    // σ1 = {u1,u2,u3,u4}, σ2 = {u2,u3,u4,u5}, with l ⊆ {u1,u2,u3}
    let u1 = only(minus(s(1), s(2)), "u1")?;
    let u5 = only(minus(s(2), s(1)), "u5")?;
    let shared12 = s(1).intersection(s(2));
    let (u2, u3, u4) = if l.contains(&u1) {
        let x = if l[0] == u1 { l[1] } else { l[0] };
        let rest: Vec<Vertex> = shared12.iter().copied().filter(|&v| v != x).collect();
        (x, rest[0], rest[1])
    } else {
        let u4 = only(minus(&shared12, &l_set), "u4")?;
        (l_set.vertices()[0], l_set.vertices()[1], u4)
    };
    let l_is_u2u3 = l_set.vertices() == set(&[u2, u3]).as_slice();
    let e0_sigma2 = e0.intersection(s(2));

    if e0_sigma2.vertices() == [u5] && l_is_u2u3 {
        let p = minus(&s(2).intersection(s(3)), &Simplex::from_sorted(vec![u5]));
        let chain = ThreeChain::new(s(5), s(6), s(7))?;
        let [a, b] = chain.cover_except(s(5), &s(4).intersection(s(5)))?;
        return Ok((union(p.vertices(), &a), union(p.vertices(), &b)));
    }

    let u = if e0_sigma2.contains(u2) {
        u3
    } else if e0_sigma2.contains(u3) {
        u2
    } else if e0_sigma2.contains(u4) {
        *l.iter()
            .filter(|&&x| x == u2 || x == u3)
            .min()
            .ok_or_else(|| Error::InternalContradiction("l misses {u2,u3}".into()))?
    } else if e0_sigma2.contains(u5) {
        u1
    } else {
        return Err(Error::InternalContradiction(
            "middle edge misses the second simplex".into(),
        ));
    };
    let head = union(e0.vertices(), &[u]);

    let chain = ThreeChain::new(s(5), s(6), s(7))?;
    let e0_sigma6 = e0.intersection(s(6));
    if e0_sigma6.vertices() == [chain.v5] {
        let t1 = union(&head, &[chain.v1]);
        let p = minus(&s(5).intersection(s(6)), &Simplex::from_sorted(vec![chain.v5]));
        let mirrored = ThreeChain::new(s(3), s(2), s(1))?;
        let covers = mirrored.cover_except(s(3), &s(3).intersection(s(4)))?;
        let pick = covers
            .iter()
            .find(|c| c.iter().any(|v| l.contains(v)))
            .ok_or_else(|| Error::InternalContradiction("no cover meets l".into()))?;
        return Ok((t1, union(p.vertices(), pick)));
    }

    let mid = [chain.v2, chain.v3, chain.v4];
    let hit = mid
        .iter()
        .position(|&v| e0_sigma6.contains(v))
        .ok_or_else(|| Error::InternalContradiction("middle edge misses σ6 ∩ σ7".into()))?;
    let others: Vec<Vertex> = (0..3).filter(|&i| i != hit).map(|i| mid[i]).collect();
    Ok((union(&head, &[others[0]]), union(&head, &[others[1]])))
}
