//! Exhaustive search over all k-colorings of a small `K_{c×s}` for one with no
//! monochromatic `K_{2,m}`.
//!
//! Edges are colored in canonical order with colors tried in increasing order,
//! so the first coloring found is the lexicographically smallest one. The first
//! edge always gets color 1. Common-neighbor counts per color are maintained
//! incrementally and a branch is cut as soon as any pair reaches `m`.

use alloc::vec;
use alloc::vec::Vec;

use super::{canonical_edges, MultipartiteColoring};
use crate::bits::BitIter;
use crate::error::{invalid, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RamseyOutcome {
    /// A coloring with no monochromatic `K_{2,m}` in any color.
    Avoiding(MultipartiteColoring),
    /// Every coloring contains a monochromatic `K_{2,m}`.
    Forced,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamseySearch {
    pub outcome: RamseyOutcome,
    /// Color assignments tried.
    pub nodes: u64,
}

struct State {
    n: usize,
    m: u16,
    k: u8,
    edges: Vec<(usize, usize)>,
    // nbr[w * n + x]: vertices joined to x in color w.
    nbr: Vec<u64>,
    // cnt[(w * n + x) * n + y]: common w-neighbors of x and y.
    cnt: Vec<u16>,
    assigned: Vec<u8>,
    nodes: u64,
}

impl State {
    fn new(n: usize, m: usize, k: u8, edges: Vec<(usize, usize)>) -> Self {
        let kn = k as usize * n;
        Self {
            n,
            m: m.min(u16::MAX as usize) as u16,
            k,
            assigned: Vec::with_capacity(edges.len()),
            edges,
            nbr: vec![0; kn],
            cnt: vec![0; kn * n],
            nodes: 0,
        }
    }

    fn bump(&mut self, w: usize, x: usize, y: usize, up: bool) -> bool {
        let n = self.n;
        let mut hit = false;
        for z in BitIter(self.nbr[w * n + x]) {
            for (a, b) in [(y, z), (z, y)] {
                let c = &mut self.cnt[(w * n + a) * n + b];
                if up {
                    *c += 1;
                    hit |= *c >= self.m;
                } else {
                    *c -= 1;
                }
            }
        }
        hit
    }

    /// Colors the next edge; returns false (and leaves no trace) if that creates
    /// a pair with `m` common neighbors in color `w`.
    fn push(&mut self, color: u8) -> bool {
        self.nodes += 1;
        let (x, y) = self.edges[self.assigned.len()];
        let w = color as usize - 1;
        let hit_x = self.bump(w, x, y, true);
        let hit_y = self.bump(w, y, x, true);
        self.nbr[w * self.n + x] |= 1 << y;
        self.nbr[w * self.n + y] |= 1 << x;
        self.assigned.push(color);
        if hit_x || hit_y {
            self.pop();
            return false;
        }
        true
    }

    fn pop(&mut self) {
        let color = self.assigned.pop().expect("pop on empty assignment");
        let (x, y) = self.edges[self.assigned.len()];
        let w = color as usize - 1;
        self.nbr[w * self.n + x] &= !(1 << y);
        self.nbr[w * self.n + y] &= !(1 << x);
        self.bump(w, x, y, false);
        self.bump(w, y, x, false);
    }

    fn colors_for(&self, depth: usize) -> core::ops::RangeInclusive<u8> {
        if depth == 0 {
            1..=1
        } else {
            1..=self.k
        }
    }

    /// Depth-first completion of the current assignment. `check` is called with
    /// the running node count and may abort the search.
    fn complete(&mut self, check: &mut dyn FnMut(u64) -> Result<()>) -> Result<bool> {
        let depth = self.assigned.len();
        if depth == self.edges.len() {
            return Ok(true);
        }
        for color in self.colors_for(depth) {
            if self.push(color) {
                if self.complete(check)? {
                    return Ok(true);
                }
                self.pop();
            }
            if self.nodes.is_multiple_of(1024) {
                check(self.nodes)?;
            }
        }
        Ok(false)
    }
}

/// Searches every k-coloring of `K_{c×s}` (first edge fixed to color 1) for one
/// avoiding a monochromatic `K_{2,m}`. Needs `c·s ≤ 64`.
pub fn exhaustive_ramsey(parts: usize, part_size: usize, m: usize, colors: u8, budget: u64) -> Result<RamseySearch> {
    if parts < 2 || part_size < 1 {
        return Err(invalid!("K_(c x s) needs c >= 2 and s >= 1"));
    }
    let n = parts * part_size;
    if n > 64 {
        return Err(invalid!("exhaustive search supports at most 64 vertices, got {n}"));
    }
    if m == 0 {
        return Err(invalid!("target K_(2,m) needs m >= 1"));
    }
    if !(2..=16).contains(&colors) {
        return Err(invalid!("color count {colors} outside 2..=16"));
    }
    let edges: Vec<(usize, usize)> = canonical_edges(parts, part_size).collect();
    let found = run(n, m, colors, &edges, budget)?;
    let outcome = match found.colors {
        Some(c) => RamseyOutcome::Avoiding(MultipartiteColoring::from_edge_colors(parts, part_size, colors, &c)?),
        None => RamseyOutcome::Forced,
    };
    Ok(RamseySearch { outcome, nodes: found.nodes })
}

struct Found {
    colors: Option<Vec<u8>>,
    nodes: u64,
}

#[cfg(not(feature = "parallel"))]
fn run(n: usize, m: usize, k: u8, edges: &[(usize, usize)], budget: u64) -> Result<Found> {
    let mut state = State::new(n, m, k, edges.to_vec());
    let mut check = |nodes: u64| if nodes > budget { Err(Error::BudgetExceeded { budget }) } else { Ok(()) };
    let ok = state.complete(&mut check)?;
    check(state.nodes)?;
    Ok(Found { colors: ok.then(|| state.assigned.clone()), nodes: state.nodes })
}

/// Splits on the colors of the first few edges and searches each prefix on
/// the rayon pool. Every prefix is searched to its own first solution, so the
/// reported coloring and node count do not depend on scheduling.
#[cfg(feature = "parallel")]
fn run(n: usize, m: usize, k: u8, edges: &[(usize, usize)], budget: u64) -> Result<Found> {
    use core::sync::atomic::{AtomicU64, Ordering};
    use rayon::prelude::*;

    let mut prefix_len = 1;
    while prefix_len < edges.len() && (k as u64).pow(prefix_len as u32 - 1) < 256 {
        prefix_len += 1;
    }
    prefix_len = prefix_len.min(edges.len());

    // Enumerate surviving prefixes in lexicographic order.
    let mut prefixes = Vec::new();
    let mut state = State::new(n, m, k, edges.to_vec());
    fn collect(state: &mut State, len: usize, out: &mut Vec<Vec<u8>>) {
        if state.assigned.len() == len {
            out.push(state.assigned.clone());
            return;
        }
        for color in state.colors_for(state.assigned.len()) {
            if state.push(color) {
                collect(state, len, out);
                state.pop();
            }
        }
    }
    collect(&mut state, prefix_len, &mut prefixes);
    let total = AtomicU64::new(state.nodes);

    let results: Vec<Result<(Option<Vec<u8>>, u64)>> = prefixes
        .par_iter()
        .map(|prefix| {
            let mut s = State::new(n, m, k, edges.to_vec());
            for &c in prefix {
                let ok = s.push(c);
                debug_assert!(ok);
            }
            s.nodes = 0;
            let mut flushed = 0;
            let mut check = |nodes: u64| {
                let seen = total.fetch_add(nodes - flushed, Ordering::Relaxed) + nodes - flushed;
                flushed = nodes;
                if seen > budget {
                    Err(Error::BudgetExceeded { budget })
                } else {
                    Ok(())
                }
            };
            let ok = s.complete(&mut check)?;
            check(s.nodes)?;
            Ok((ok.then(|| s.assigned.clone()), s.nodes))
        })
        .collect();
    let mut colors = None;
    let mut nodes = state.nodes;
    for r in results {
        let (found, used) = r?;
        nodes += used;
        if colors.is_none() {
            colors = found;
        }
    }
    if nodes > budget {
        return Err(Error::BudgetExceeded { budget });
    }
    Ok(Found { colors, nodes })
}
