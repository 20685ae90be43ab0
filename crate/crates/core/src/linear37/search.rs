//! Exhaustive search for transversal pairs on spheres with at most a few dozen vertices.

use itertools::Itertools;

use crate::complex::{Simplex, Vertex};

/// First pair `(T1, T2)` in the order `(|T1|, |T2|, T1, T2)` (sets compared
/// lexicographically) such that both are transversals of size at most `max_size`,
/// both meet `must_meet` when given, and together they contain at least three
/// vertices of `last`.
pub(crate) fn first_pair(
    vertices: &[Vertex],
    facets: &[Simplex],
    last: &Simplex,
    max_size: usize,
    must_meet: Option<&[Vertex]>,
) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
    assert!(vertices.len() <= 64, "exhaustive pair search is for small spheres");
    let mask_of = |vs: &mut dyn Iterator<Item = &Vertex>| -> u64 {
        vs.filter_map(|v| vertices.binary_search(v).ok())
            .fold(0, |m, i| m | 1 << i)
    };
    let facet_masks: Vec<u64> = facets.iter().map(|f| mask_of(&mut f.iter())).collect();
    let last_mask = mask_of(&mut last.iter());
    let meet_mask = must_meet.map(|m| mask_of(&mut m.iter()));

    let by_size: Vec<Vec<u64>> = (0..=max_size.min(vertices.len()))
        .map(|k| {
            (0..vertices.len())
                .combinations(k)
                .map(|idx| idx.iter().fold(0u64, |m, &i| m | 1 << i))
                .filter(|&t| facet_masks.iter().all(|&f| f & t != 0))
                .filter(|&t| meet_mask.is_none_or(|m| m & t != 0))
                .collect()
        })
        .collect();

    for s1 in &by_size {
        for s2 in &by_size {
            for &t1 in s1 {
                for &t2 in s2 {
                    if ((t1 | t2) & last_mask).count_ones() >= 3 {
                        let unmask = |t: u64| {
                            (0..vertices.len())
                                .filter(|&i| t >> i & 1 == 1)
                                .map(|i| vertices[i])
                                .collect::<Vec<_>>()
                        };
                        return Some((unmask(t1), unmask(t2)));
                    }
                }
            }
        }
    }
    None
}
