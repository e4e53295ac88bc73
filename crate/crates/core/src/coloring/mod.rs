//! Edge colorings of complete multipartite graphs `K_{c×s}` and exact checks
//! for monochromatic complete bipartite subgraphs.
//!
//! Vertex `(a, i)` (part `a`, slot `i`, both 0-based) has flat index `a·s + i`.
//! A monochromatic `K_{2,m}` in color `w` exists iff two vertices have at least
//! `m` common `w`-neighbors, so the δ-scan in [`certify_avoidance`] is exact.

mod search;

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::BitMatrix;
use crate::error::{invalid, Error, Result};
use crate::hadamard::SignMatrix;
use crate::srg::{srg_params, Graph, SrgCheck};

pub use search::{exhaustive_ramsey, RamseyOutcome, RamseySearch};

/// Default node budget for the exhaustive searches.
pub const DEFAULT_BUDGET: u64 = 1 << 26;

/// Color used for `ψ = +1`; `ψ = -1` is color 2.
pub const PSI_PLUS: u8 = 1;
pub const PSI_MINUS: u8 = 2;

/// A `k`-coloring of the cross-part pairs of `K_{c×s}`, colors `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultipartiteColoring {
    parts: usize,
    part_size: usize,
    num_colors: u8,
    // N×N, 0 on the diagonal and on same-part pairs.
    colors: Vec<u8>,
    // One bit matrix per color: row u holds the w-colored neighbors of u.
    classes: Vec<BitMatrix>,
}

impl MultipartiteColoring {
    /// Colors every cross-part pair `u < v` with `color(u, v)`.
    pub fn from_fn(
        parts: usize,
        part_size: usize,
        num_colors: u8,
        mut color: impl FnMut(usize, usize) -> u8,
    ) -> Result<Self> {
        if parts < 2 || part_size < 1 {
            return Err(invalid!("K_(c x s) needs c >= 2 and s >= 1, got c = {parts}, s = {part_size}"));
        }
        if num_colors < 2 {
            return Err(invalid!("need at least 2 colors, got {num_colors}"));
        }
        let n = parts * part_size;
        let mut colors = vec![0u8; n * n];
        let mut classes = vec![BitMatrix::new(n, n); num_colors as usize];
        for u in 0..n {
            for v in u + 1..n {
                if u / part_size == v / part_size {
                    continue;
                }
                let w = color(u, v);
                if w == 0 || w > num_colors {
                    return Err(invalid!("color {w} of pair ({u}, {v}) outside 1..={num_colors}"));
                }
                colors[u * n + v] = w;
                colors[v * n + u] = w;
                let class = &mut classes[w as usize - 1];
                class.set(u, v, true);
                class.set(v, u, true);
            }
        }
        Ok(Self { parts, part_size, num_colors, colors, classes })
    }

    /// Builds a coloring from colors listed in canonical edge order.
    pub fn from_edge_colors(parts: usize, part_size: usize, num_colors: u8, edge_colors: &[u8]) -> Result<Self> {
        let expected = cross_pair_count(parts, part_size);
        if edge_colors.len() != expected {
            return Err(invalid!("expected {expected} edge colors, got {}", edge_colors.len()));
        }
        let mut it = edge_colors.iter();
        Self::from_fn(parts, part_size, num_colors, |_, _| *it.next().expect("length checked"))
    }

    pub fn parts(&self) -> usize {
        self.parts
    }

    pub fn part_size(&self) -> usize {
        self.part_size
    }

    pub fn num_colors(&self) -> u8 {
        self.num_colors
    }

    pub fn vertex_count(&self) -> usize {
        self.parts * self.part_size
    }

    /// Flat index of `(part, slot)`.
    pub fn vertex(&self, part: usize, slot: usize) -> usize {
        part * self.part_size + slot
    }

    /// `(part, slot)` of a flat index.
    pub fn label(&self, v: usize) -> (usize, usize) {
        (v / self.part_size, v % self.part_size)
    }

    /// Color of the pair, or `None` for a same-part pair.
    pub fn color(&self, u: usize, v: usize) -> Option<u8> {
        let w = self.colors[u * self.vertex_count() + v];
        (w != 0).then_some(w)
    }

    /// Cross-part pairs `(u, v)`, `u < v`, in lexicographic order.
    pub fn canonical_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        canonical_edges(self.parts, self.part_size)
    }

    /// Colors in canonical edge order.
    pub fn edge_colors(&self) -> Vec<u8> {
        let n = self.vertex_count();
        self.canonical_edges().map(|(u, v)| self.colors[u * n + v]).collect()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.vertex_count() {
            return Err(invalid!("vertex {v} outside 0..{}", self.vertex_count()));
        }
        Ok(())
    }

    fn check_color(&self, w: u8) -> Result<()> {
        if w == 0 || w > self.num_colors {
            return Err(invalid!("color {w} outside 1..={}", self.num_colors));
        }
        Ok(())
    }

    fn class(&self, w: u8) -> &BitMatrix {
        &self.classes[w as usize - 1]
    }

    fn delta_unchecked(&self, u: usize, v: usize, w: u8) -> usize {
        self.class(w).count_and(u, v)
    }
}

pub(crate) fn cross_pair_count(parts: usize, part_size: usize) -> usize {
    parts * (parts - 1) / 2 * part_size * part_size
}

pub(crate) fn canonical_edges(parts: usize, part_size: usize) -> impl Iterator<Item = (usize, usize)> {
    let n = parts * part_size;
    (0..n).flat_map(move |u| (u + 1..n).filter(move |&v| u / part_size != v / part_size).map(move |v| (u, v)))
}

/// The ψ-coloring of `K_{n×ζ}` from a strongly regular graph on `n` vertices
/// and a symmetric ±1 matrix of order `ζ`: the pair `(a,i)(b,j)` gets sign
/// `h_ij` when `ab` is an edge and `-h_ij` otherwise ([`PSI_PLUS`] / [`PSI_MINUS`]).
pub fn build_psi(g: &Graph, h: &SignMatrix) -> Result<MultipartiteColoring> {
    if !h.is_symmetric() {
        return Err(Error::AsymmetricMatrix);
    }
    if h.order() < 2 {
        return Err(invalid!("matrix order must be at least 2"));
    }
    match srg_params(g)? {
        SrgCheck::Strong(_) => {}
        SrgCheck::NotStrong(v) => return Err(invalid!("graph is not strongly regular: {v:?}")),
    }
    let zeta = h.order();
    MultipartiteColoring::from_fn(g.n(), zeta, 2, |u, v| {
        let (a, i) = (u / zeta, u % zeta);
        let (b, j) = (v / zeta, v % zeta);
        let sign = if g.is_adjacent(a, b) { h.at(i, j) } else { -h.at(i, j) };
        if sign == 1 {
            PSI_PLUS
        } else {
            PSI_MINUS
        }
    })
}

/// Number of vertices joined to both `v1` and `v2` in color `w`.
pub fn delta(col: &MultipartiteColoring, v1: usize, v2: usize, w: u8) -> Result<usize> {
    col.check_vertex(v1)?;
    col.check_vertex(v2)?;
    col.check_color(w)?;
    if v1 == v2 {
        return Err(invalid!("delta needs distinct vertices, got {v1} twice"));
    }
    Ok(col.delta_unchecked(v1, v2, w))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Verdict {
    Avoided,
    Violated,
}

/// A vertex pair (0-based flat indices, `u < v`) and the color of its δ value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DeltaWitness {
    pub u: usize,
    pub v: usize,
    pub color: u8,
}

/// Outcome of the δ-scan against a `K_{2,m}` target.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AvoidanceCertificate {
    pub target: usize,
    pub max_delta: usize,
    /// Lexicographically first `(u, v, color)` attaining `max_delta`.
    pub witness: DeltaWitness,
    pub verdict: Verdict,
}

fn pair_best(col: &MultipartiteColoring, u: usize) -> Option<(usize, DeltaWitness)> {
    let mut best: Option<(usize, DeltaWitness)> = None;
    for v in u + 1..col.vertex_count() {
        for w in 1..=col.num_colors {
            let d = col.delta_unchecked(u, v, w);
            if best.is_none_or(|(b, _)| d > b) {
                best = Some((d, DeltaWitness { u, v, color: w }));
            }
        }
    }
    best
}

// Larger δ wins; ties go to the lexicographically smaller witness.
fn better(a: (usize, DeltaWitness), b: (usize, DeltaWitness)) -> (usize, DeltaWitness) {
    let key = |(d, w): (usize, DeltaWitness)| (core::cmp::Reverse(d), w.u, w.v, w.color);
    if key(a) <= key(b) {
        a
    } else {
        b
    }
}

/// Maximum δ over all vertex pairs and colors; the coloring avoids a
/// monochromatic `K_{2,m}` iff that maximum is at most `m - 1`.
pub fn certify_avoidance(col: &MultipartiteColoring, m: usize) -> Result<AvoidanceCertificate> {
    if m == 0 {
        return Err(invalid!("target K_(2,m) needs m >= 1"));
    }
    let rows = 0..col.vertex_count();
    #[cfg(feature = "parallel")]
    let best = {
        use rayon::prelude::*;
        rows.into_par_iter().filter_map(|u| pair_best(col, u)).reduce_with(better)
    };
    #[cfg(not(feature = "parallel"))]
    let best = rows.filter_map(|u| pair_best(col, u)).reduce(better);
    let (max_delta, witness) = best.expect("K_(c x s) with c >= 2 has at least two vertices");
    let verdict = if max_delta < m { Verdict::Avoided } else { Verdict::Violated };
    Ok(AvoidanceCertificate { target: m, max_delta, witness, verdict })
}

/// Two disjoint vertex sets with every cross pair colored alike.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Biclique {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

fn binomial_capped(n: usize, r: usize, cap: u64) -> u64 {
    let mut acc: u64 = 1;
    for i in 0..r as u64 {
        acc = acc.saturating_mul(n as u64 - i) / (i + 1);
        if acc > cap {
            return cap.saturating_add(1);
        }
    }
    acc
}

/// Exhaustive search for a `K_{a,b}` in color `w`.
///
/// Enumerates the smaller side's subsets in lexicographic order and returns the
/// first hit, with the other side taken as the smallest common neighbors.
/// Fails with `BudgetExceeded` when there are more than `budget` subsets.
pub fn find_mono_biclique(
    col: &MultipartiteColoring,
    a: usize,
    b: usize,
    w: u8,
    budget: u64,
) -> Result<Option<Biclique>> {
    col.check_color(w)?;
    if a == 0 || b == 0 {
        return Err(invalid!("K_(a,b) needs a, b >= 1"));
    }
    let n = col.vertex_count();
    let (small, large) = if a <= b { (a, b) } else { (b, a) };
    if small > n {
        return Ok(None);
    }
    if binomial_capped(n, small, budget) > budget {
        return Err(Error::BudgetExceeded { budget });
    }
    let class = col.class(w);
    let stride = n.div_ceil(64);
    let mut combo: Vec<usize> = (0..small).collect();
    let mut common = vec![0u64; stride];
    loop {
        common.fill(u64::MAX);
        for &v in &combo {
            for (c, r) in common.iter_mut().zip(class.row(v)) {
                *c &= r;
            }
        }
        let count: usize = common.iter().map(|x| x.count_ones() as usize).sum();
        if count >= large {
            let other: Vec<usize> = common
                .iter()
                .enumerate()
                .flat_map(|(wi, &x)| crate::bits::BitIter(x).map(move |bit| wi * 64 + bit))
                .take(large)
                .collect();
            let (left, right) = if a <= b { (combo, other) } else { (other, combo) };
            return Ok(Some(Biclique { left, right }));
        }
        // Next combination in lexicographic order.
        let mut i = small;
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            if combo[i] < n - small + i {
                combo[i] += 1;
                for j in i + 1..small {
                    combo[j] = combo[j - 1] + 1;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldSpec;
    use crate::hadamard::{paley_one_hadamard, sylvester};
    use crate::srg::{paley_graph, theta, SrgParams};

    fn mono(parts: usize, size: usize) -> MultipartiteColoring {
        MultipartiteColoring::from_fn(parts, size, 2, |_, _| 1).unwrap()
    }

    fn paley13_sylvester4() -> MultipartiteColoring {
        let g = paley_graph(&FieldSpec::new(13, 1).unwrap()).unwrap();
        build_psi(&g, &sylvester(2).unwrap()).unwrap()
    }

    #[test]
    fn psi_dimensions() {
        let col = paley13_sylvester4();
        assert_eq!((col.parts(), col.part_size()), (13, 4));
        assert_eq!(col.edge_colors().len(), 13 * 4 * 12 * 4 / 2);
        let g5 = paley_graph(&FieldSpec::new(5, 1).unwrap()).unwrap();
        let small = build_psi(&g5, &sylvester(1).unwrap()).unwrap();
        assert_eq!(small.edge_colors().len(), 40);
    }

    #[test]
    fn psi_rejects_bad_inputs() {
        let g = paley_graph(&FieldSpec::new(13, 1).unwrap()).unwrap();
        let asym = paley_one_hadamard(&FieldSpec::new(7, 1).unwrap()).unwrap();
        assert_eq!(build_psi(&g, &asym), Err(Error::AsymmetricMatrix));
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(matches!(build_psi(&p5, &sylvester(2).unwrap()), Err(Error::InvalidInput(_))));
        assert!(build_psi(&g, &sylvester(0).unwrap()).is_err());
    }

    #[test]
    fn psi_is_symmetric_and_follows_definition() {
        let col = paley13_sylvester4();
        let g = paley_graph(&FieldSpec::new(13, 1).unwrap()).unwrap();
        let h = sylvester(2).unwrap();
        for u in 0..52 {
            for v in 0..52 {
                assert_eq!(col.color(u, v), col.color(v, u));
                let ((a, i), (b, j)) = (col.label(u), col.label(v));
                if a == b {
                    assert_eq!(col.color(u, v), None);
                    continue;
                }
                let sign = h.entry(i + 1, j + 1) * if g.is_adjacent(a, b) { 1 } else { -1 };
                assert_eq!(col.color(u, v), Some(if sign == 1 { PSI_PLUS } else { PSI_MINUS }));
            }
        }
    }

    #[test]
    fn delta_on_single_color_bipartite() {
        let col = mono(2, 2);
        assert_eq!(delta(&col, 0, 1, 1).unwrap(), 2);
        assert_eq!(delta(&col, 0, 1, 2).unwrap(), 0);
        assert!(delta(&col, 0, 0, 1).is_err());
        assert!(delta(&col, 0, 9, 1).is_err());
        assert!(delta(&col, 0, 1, 3).is_err());
    }

    #[test]
    fn certificate_examples() {
        let col = paley13_sylvester4();
        let cert = certify_avoidance(&col, 13).unwrap();
        assert_eq!(cert.verdict, Verdict::Avoided);
        assert!(cert.max_delta <= 12);
        let bound = theta(&SrgParams::new(13, 6, 2, 3).unwrap()) as usize * 4;
        assert!(cert.max_delta <= bound);
        assert_eq!(certify_avoidance(&col, 1).unwrap().verdict, Verdict::Violated);
        let g5 = paley_graph(&FieldSpec::new(5, 1).unwrap()).unwrap();
        let small = build_psi(&g5, &sylvester(1).unwrap()).unwrap();
        assert_eq!(certify_avoidance(&small, 3).unwrap().verdict, Verdict::Avoided);
        assert!(certify_avoidance(&small, 0).is_err());
    }

    #[test]
    fn witness_attains_the_maximum() {
        let col = paley13_sylvester4();
        let cert = certify_avoidance(&col, 13).unwrap();
        let DeltaWitness { u, v, color } = cert.witness;
        assert_eq!(delta(&col, u, v, color).unwrap(), cert.max_delta);
        // No lexicographically smaller triple attains it.
        for a in 0..=u {
            for b in a + 1..col.vertex_count() {
                for w in 1..=2 {
                    if (a, b, w) < (u, v, color) {
                        assert!(delta(&col, a, b, w).unwrap() < cert.max_delta);
                    }
                }
            }
        }
    }

    #[test]
    fn biclique_examples() {
        let col = mono(2, 2);
        let hit = find_mono_biclique(&col, 2, 2, 1, DEFAULT_BUDGET).unwrap().unwrap();
        assert_eq!(hit, Biclique { left: vec![0, 1], right: vec![2, 3] });
        assert_eq!(find_mono_biclique(&col, 1, 1, 2, DEFAULT_BUDGET).unwrap(), None);
        assert!(find_mono_biclique(&col, 1, 1, 1, DEFAULT_BUDGET).unwrap().is_some());
        let psi = paley13_sylvester4();
        for w in [PSI_PLUS, PSI_MINUS] {
            assert_eq!(find_mono_biclique(&psi, 2, 13, w, DEFAULT_BUDGET).unwrap(), None);
        }
        assert_eq!(
            find_mono_biclique(&psi, 6, 2, 1, 10),
            Err(Error::BudgetExceeded { budget: 10 })
        );
    }

    #[test]
    fn biclique_swaps_sides_back() {
        let col = mono(3, 2);
        let hit = find_mono_biclique(&col, 3, 1, 1, DEFAULT_BUDGET).unwrap().unwrap();
        assert_eq!(hit.left.len(), 3);
        assert_eq!(hit.right.len(), 1);
        for &x in &hit.left {
            for &y in &hit.right {
                assert_eq!(col.color(x, y), Some(1));
            }
        }
    }

    #[test]
    fn edge_color_round_trip() {
        let col = paley13_sylvester4();
        let again = MultipartiteColoring::from_edge_colors(13, 4, 2, &col.edge_colors()).unwrap();
        assert_eq!(again, col);
        assert!(MultipartiteColoring::from_edge_colors(2, 2, 2, &[1, 2, 1]).is_err());
        assert!(MultipartiteColoring::from_edge_colors(2, 2, 2, &[1, 2, 1, 3]).is_err());
    }
}
