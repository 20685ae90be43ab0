//! Exact minimum transversal by branch and bound.
//!
//! Each node first applies reductions until none fires:
//! * an edge with one vertex forces that vertex into the solution;
//! * an edge containing another edge is dropped;
//! * a vertex whose edge set is contained in another vertex's edge set is deleted
//!   (for equal edge sets the larger index goes).
//!
//! The node is then pruned against the incumbent using the larger of a greedy
//! disjoint-edge packing and the fractional degree bound `sum_e 1 / max_{v in e} deg(v)`,
//! and otherwise branches on a maximum-degree vertex (smallest index on ties):
//! first taking it, then deleting it.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

use super::dense::{self, Dense};

pub(crate) struct Search<'a> {
    dense: &'a Dense,
    best_size: AtomicUsize,
    best: Mutex<Vec<usize>>,
    pub nodes: AtomicU64,
    pub reductions: AtomicU64,
    node_limit: Option<u64>,
    pub aborted: AtomicBool,
    parallel_depth: usize,
}

enum Reduced {
    Infeasible,
    Covered,
    Open,
}

impl<'a> Search<'a> {
    pub fn new(
        dense: &'a Dense,
        incumbent: Vec<usize>,
        node_limit: Option<u64>,
        parallel: bool,
    ) -> Self {
        Search {
            dense,
            best_size: AtomicUsize::new(incumbent.len()),
            best: Mutex::new(incumbent),
            nodes: AtomicU64::new(0),
            reductions: AtomicU64::new(0),
            node_limit,
            aborted: AtomicBool::new(false),
            parallel_depth: if parallel { 12 } else { 0 },
        }
    }

    pub fn run(&self) {
        self.node(self.dense.edges.clone(), Vec::new(), 0);
    }

    pub fn into_best(self) -> Vec<usize> {
        self.best.into_inner().expect("no panics while holding the lock")
    }

    fn record(&self, chosen: &[usize]) {
        let mut best = self.best.lock().expect("no panics while holding the lock");
        if chosen.len() < best.len() {
            *best = chosen.to_vec();
            self.best_size.store(chosen.len(), Ordering::SeqCst);
        }
    }

    fn node(&self, mut edges: Vec<u64>, mut chosen: Vec<usize>, depth: usize) {
        if self.aborted.load(Ordering::Relaxed) {
            return;
        }
        let explored = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if self.node_limit.is_some_and(|limit| explored > limit) {
            self.aborted.store(true, Ordering::Relaxed);
            return;
        }
        let best = self.best_size.load(Ordering::Relaxed);
        if chosen.len() >= best {
            return;
        }

        let w = self.dense.words;
        let n = self.dense.n();
        match self.reduce(&mut edges, &mut chosen) {
            Reduced::Infeasible => return,
            Reduced::Covered => {
                self.record(&chosen);
                return;
            }
            Reduced::Open => {}
        }
        let best = self.best_size.load(Ordering::Relaxed);
        let deg = dense::degrees(&edges, w, n);
        if chosen.len() + lower_bound(&edges, w, &deg) >= best {
            return;
        }

        let mut branch = 0;
        for v in 1..n {
            if deg[v] > deg[branch] {
                branch = v;
            }
        }

        let mut take_edges = edges.clone();
        dense::remove_hit(&mut take_edges, w, branch);
        let mut take_chosen = chosen.clone();
        take_chosen.push(branch);
        dense::delete_vertex(&mut edges, w, branch);

        if depth < self.parallel_depth {
            rayon::join(
                || self.node(take_edges, take_chosen, depth + 1),
                || self.node(edges, chosen, depth + 1),
            );
        } else {
            self.node(take_edges, take_chosen, depth + 1);
            self.node(edges, chosen, depth + 1);
        }
    }

    fn reduce(&self, edges: &mut Vec<u64>, chosen: &mut Vec<usize>) -> Reduced {
        let w = self.dense.words;
        let n = self.dense.n();
        let mut applied = 0u64;
        let outcome = loop {
            if edges.is_empty() {
                break Reduced::Covered;
            }
            let mut forced = None;
            let mut empty = false;
            for e in edges.chunks(w) {
                match dense::popcount(e) {
                    0 => {
                        empty = true;
                        break;
                    }
                    1 => {
                        forced = dense::first_bit(e);
                        break;
                    }
                    _ => {}
                }
            }
            if empty {
                break Reduced::Infeasible;
            }
            if let Some(v) = forced {
                chosen.push(v);
                dense::remove_hit(edges, w, v);
                applied += 1;
                continue;
            }
            let dropped = remove_supersets(edges, w);
            let deleted = remove_dominated(edges, w, n);
            applied += (dropped + deleted) as u64;
            if deleted == 0 {
                break Reduced::Open;
            }
        };
        if applied > 0 {
            self.reductions.fetch_add(applied, Ordering::Relaxed);
        }
        outcome
    }
}

/// Keeps only inclusion-minimal edges (one copy of duplicates). Returns how many went.
fn remove_supersets(edges: &mut Vec<u64>, w: usize) -> usize {
    let count = edges.len() / w;
    let mut order: Vec<usize> = (0..count).collect();
    order.sort_by_key(|&i| dense::popcount(&edges[i * w..(i + 1) * w]));
    let mut kept: Vec<usize> = Vec::with_capacity(count);
    for &i in &order {
        let e = &edges[i * w..(i + 1) * w];
        if !kept
            .iter()
            .any(|&k| dense::is_subset(&edges[k * w..(k + 1) * w], e))
        {
            kept.push(i);
        }
    }
    let removed = count - kept.len();
    if removed > 0 {
        kept.sort_unstable();
        let mut out = Vec::with_capacity(kept.len() * w);
        for k in kept {
            out.extend_from_slice(&edges[k * w..(k + 1) * w]);
        }
        *edges = out;
    }
    removed
}

/// Deletes every vertex dominated by another one. Returns how many were deleted.
fn remove_dominated(edges: &mut [u64], w: usize, n: usize) -> usize {
    let count = edges.len() / w;
    let ew = count.div_ceil(64).max(1);
    let mut incidence = vec![0u64; n * ew];
    let mut present = vec![false; n];
    for (ei, e) in edges.chunks(w).enumerate() {
        for v in dense::bits(e) {
            incidence[v * ew + ei / 64] |= 1 << (ei % 64);
            present[v] = true;
        }
    }
    let inc = |v: usize| &incidence[v * ew..(v + 1) * ew];
    let live: Vec<usize> = (0..n).filter(|&v| present[v]).collect();
    let dominated: Vec<usize> = live
        .iter()
        .copied()
        .filter(|&u| {
            live.iter().any(|&v| {
                v != u
                    && dense::is_subset(inc(u), inc(v))
                    && (v < u || !dense::is_subset(inc(v), inc(u)))
            })
        })
        .collect();
    for &u in &dominated {
        dense::delete_vertex(edges, w, u);
    }
    dominated.len()
}

/// Greedy packing of pairwise disjoint edges, smallest edges first.
pub(crate) fn packing_bound(edges: &[u64], w: usize) -> usize {
    let count = edges.len() / w;
    let mut order: Vec<usize> = (0..count).collect();
    order.sort_by_key(|&i| dense::popcount(&edges[i * w..(i + 1) * w]));
    let mut used = vec![0u64; w];
    let mut size = 0;
    for i in order {
        let e = &edges[i * w..(i + 1) * w];
        if dense::disjoint(e, &used) {
            for (u, x) in used.iter_mut().zip(e) {
                *u |= x;
            }
            size += 1;
        }
    }
    size
}

fn lower_bound(edges: &[u64], w: usize, deg: &[u32]) -> usize {
    let packing = packing_bound(edges, w);
    let fractional: f64 = edges
        .chunks(w)
        .map(|e| {
            let max = dense::bits(e).map(|v| deg[v]).max().unwrap_or(1);
            1.0 / f64::from(max)
        })
        .sum();
    // the epsilon absorbs rounding in sums that are exact integers
    packing.max((fractional - 1e-9).ceil() as usize)
}
