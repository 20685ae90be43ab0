use std::collections::BTreeMap;

use super::{Simplex, StackedBall, Vertex};
use crate::error::{Error, Result};

/// Relabels a run of consecutive simplices (in path order) into canonical form.
///
/// The run starts at simplex `start` and continues for `len` simplices along the
/// path order of `ball`. The first simplex of the run becomes `{1, ..., d+2}` with
/// the `pinned` vertices taking the smallest labels, and the k-th simplex (1-based)
/// introduces label `k + d + 1`. Within each class labels preserve the original order.
///
/// Returns the relabeled block and the map from original to canonical labels.
pub fn canonical_block_labeling(
    ball: &StackedBall,
    start: usize,
    len: usize,
    pinned: &[Vertex],
) -> Result<(StackedBall, BTreeMap<Vertex, Vertex>)> {
    let d = ball.dim();
    let order = ball.path_order()?;
    let pos = order
        .iter()
        .position(|&i| i == start)
        .ok_or(Error::IndexOutOfRange {
            index: start,
            len: ball.len(),
        })?;
    if len == 0 || pos + len > order.len() {
        return Err(Error::NotConsecutive { start, len });
    }
    if pinned.len() > d + 1 {
        return Err(Error::PinnedTooLarge {
            pinned: pinned.len(),
            facet_size: d + 1,
        });
    }
    let block: Vec<&Simplex> = order[pos..pos + len]
        .iter()
        .map(|&i| ball.simplex(i))
        .collect();
    let first = block[0];
    if let Some(&v) = pinned.iter().find(|&&v| !first.contains(v)) {
        return Err(Error::PinnedOutsideSimplex(v));
    }

    let mut pinned_sorted = pinned.to_vec();
    pinned_sorted.sort_unstable();
    pinned_sorted.dedup();

    let mut map = BTreeMap::new();
    let mut next: Vertex = 1;
    for &v in pinned_sorted
        .iter()
        .chain(first.iter().filter(|v| !pinned_sorted.contains(v)))
    {
        map.insert(v, next);
        next += 1;
    }
    for sigma in &block[1..] {
        let fresh: Vec<Vertex> = sigma
            .iter()
            .copied()
            .filter(|v| !map.contains_key(v))
            .collect();
        if fresh.len() != 1 {
            return Err(Error::NotConsecutive { start, len });
        }
        map.insert(fresh[0], next);
        next += 1;
    }

    let simplices = block
        .iter()
        .map(|s| s.map(|v| map[&v]))
        .collect::<Result<Vec<_>>>()?;
    Ok((StackedBall::new(d, simplices)?, map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplex;

    #[test]
    fn single_tetra_with_pins() {
        let ball = StackedBall::from_lists(2, &[&[10, 20, 30, 40]]).unwrap();
        let (relabeled, map) = canonical_block_labeling(&ball, 0, 1, &[40, 20]).unwrap();
        assert_eq!(map[&20], 1);
        assert_eq!(map[&40], 2);
        assert_eq!(map[&10], 3);
        assert_eq!(map[&30], 4);
        assert_eq!(relabeled.simplex(0), &simplex![1, 2, 3, 4]);
    }

    #[test]
    fn pinned_too_large() {
        let ball = StackedBall::from_lists(2, &[&[1, 2, 3, 4]]).unwrap();
        assert_eq!(
            canonical_block_labeling(&ball, 0, 1, &[1, 2, 3, 4]).unwrap_err(),
            Error::PinnedTooLarge {
                pinned: 4,
                facet_size: 3
            }
        );
        assert_eq!(
            canonical_block_labeling(&ball, 0, 1, &[7]).unwrap_err(),
            Error::PinnedOutsideSimplex(7)
        );
    }

    #[test]
    fn run_past_the_end() {
        let ball = StackedBall::from_lists(2, &[&[1, 2, 3, 4], &[2, 3, 4, 5]]).unwrap();
        assert_eq!(
            canonical_block_labeling(&ball, 1, 2, &[]).unwrap_err(),
            Error::NotConsecutive { start: 1, len: 2 }
        );
    }
}
