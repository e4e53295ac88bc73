//! Strongly regular graphs: generators, exhaustive parameter checks, the
//! four-way neighborhood split of a vertex pair, and the θ statistic.
//!
//! Vertices are 0-based here; the text format in the companion crate is 1-based.

use alloc::vec::Vec;

use num_rational::Ratio;

use crate::bits::BitMatrix;
use crate::error::{invalid, Error, Result};
use crate::gf::FieldSpec;

/// Simple undirected graph on vertices `0..n`, adjacency kept as bit rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: BitMatrix,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Self { adj: BitMatrix::new(n, n) }
    }

    /// Builds a graph from 0-based edges. Loops are rejected; repeated edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(invalid!("edge ({u}, {v}) outside 0..{n}"));
            }
            if u == v {
                return Err(invalid!("loop at vertex {u}"));
            }
            g.connect(u, v);
        }
        Ok(g)
    }

    fn connect(&mut self, u: usize, v: usize) {
        self.adj.set(u, v, true);
        self.adj.set(v, u, true);
    }

    pub fn n(&self) -> usize {
        self.adj.rows()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj.get(u, v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj.count_row(v)
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.adj.count_and(u, v)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n();
        (0..n).flat_map(move |u| (u + 1..n).filter(move |&v| self.is_adjacent(u, v)).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Self {
        let n = self.n();
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.is_adjacent(u, v) {
                    g.connect(u, v);
                }
            }
        }
        g
    }
}

/// Parameters `(n, k, λ, μ)` of a strongly regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SrgParams {
    n: u64,
    k: u64,
    lambda: u64,
    mu: u64,
}

/// Sizes of the common-neighbor, common-non-neighbor and two exclusive sets
/// of a vertex pair `(a, b)`: `g3` is adjacent to `b` only, `g4` to `a` only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NeighborhoodPartition {
    pub g1: usize,
    pub g2: usize,
    pub g3: usize,
    pub g4: usize,
}

impl NeighborhoodPartition {
    pub fn total(&self) -> usize {
        self.g1 + self.g2 + self.g3 + self.g4
    }
}

// Twice each term of θ, so every entry is an integer.
fn doubled_theta_terms(n: i64, k: i64, lambda: i64, mu: i64) -> [i64; 6] {
    [k, 2 * lambda, 2 * mu, n - k - 1, 2 * (n - 2 - 2 * k + mu), 2 * (n - 2 * k + lambda)]
}

impl SrgParams {
    /// Validates `0 ≤ λ < k < n`, `μ ≤ k`, `(n-k-1)μ = k(k-λ-1)` and integrality of θ.
    pub fn new(n: u64, k: u64, lambda: u64, mu: u64) -> Result<Self> {
        if !(lambda < k && k < n && mu <= k) {
            return Err(invalid!("({n}, {k}, {lambda}, {mu}) violates 0 <= lambda < k < n, mu <= k"));
        }
        if (n - k - 1) * mu != k * (k - lambda - 1) {
            return Err(invalid!("({n}, {k}, {lambda}, {mu}) violates (n-k-1)mu = k(k-lambda-1)"));
        }
        let p = Self { n, k, lambda, mu };
        let twice = p.doubled_theta();
        if twice % 2 != 0 {
            return Err(Error::InternalAssertion(alloc::format!(
                "theta = {twice}/2 is not an integer for ({n}, {k}, {lambda}, {mu})"
            )));
        }
        Ok(p)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn lambda(&self) -> u64 {
        self.lambda
    }

    pub fn mu(&self) -> u64 {
        self.mu
    }

    fn signed(&self) -> (i64, i64, i64, i64) {
        (self.n as i64, self.k as i64, self.lambda as i64, self.mu as i64)
    }

    fn doubled_theta(&self) -> i64 {
        let (n, k, l, m) = self.signed();
        doubled_theta_terms(n, k, l, m).into_iter().max().expect("six terms")
    }

    /// The closed-form partition sizes for an adjacent or non-adjacent pair,
    /// or `None` if a size would be negative.
    pub fn predicted_partition(&self, adjacent: bool) -> Option<NeighborhoodPartition> {
        let (n, k, l, m) = self.signed();
        let sizes = if adjacent {
            [l, n - 2 * k + l, k - l - 1, k - l - 1]
        } else {
            [m, n - 2 - 2 * k + m, k - m, k - m]
        };
        let [g1, g2, g3, g4] = sizes.map(|s| usize::try_from(s).ok());
        Some(NeighborhoodPartition { g1: g1?, g2: g2?, g3: g3?, g4: g4? })
    }
}

impl core::fmt::Display for SrgParams {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "({}, {}, {}, {})", self.n, self.k, self.lambda, self.mu)
    }
}

/// Why a graph failed the strong-regularity check (0-based vertices).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SrgViolation {
    Irregular { vertex: usize, degree: usize, expected: usize },
    Lambda { u: usize, v: usize, common: usize, expected: usize },
    Mu { u: usize, v: usize, common: usize, expected: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SrgCheck {
    Strong(SrgParams),
    NotStrong(SrgViolation),
}

impl SrgCheck {
    pub fn params(&self) -> Option<SrgParams> {
        match self {
            SrgCheck::Strong(p) => Some(*p),
            SrgCheck::NotStrong(_) => None,
        }
    }
}

/// Exhaustively checks regularity and the λ/μ counts of every vertex pair.
pub fn srg_params(g: &Graph) -> Result<SrgCheck> {
    let n = g.n();
    if n < 4 {
        return Err(invalid!("strong regularity check needs at least 4 vertices, got {n}"));
    }
    let edges = g.edge_count();
    if edges == 0 {
        return Err(Error::DegenerateInput("graph has no edges"));
    }
    if edges == n * (n - 1) / 2 {
        return Err(Error::DegenerateInput("graph is complete"));
    }
    let k = g.degree(0);
    if let Some(vertex) = (0..n).find(|&v| g.degree(v) != k) {
        let violation = SrgViolation::Irregular { vertex, degree: g.degree(vertex), expected: k };
        return Ok(SrgCheck::NotStrong(violation));
    }
    let mut lambda = None;
    let mut mu = None;
    for u in 0..n {
        for v in u + 1..n {
            let common = g.common_neighbors(u, v);
            let adjacent = g.is_adjacent(u, v);
            let slot = if adjacent { &mut lambda } else { &mut mu };
            let expected = *slot.get_or_insert(common);
            if common != expected {
                let violation = if adjacent {
                    SrgViolation::Lambda { u, v, common, expected }
                } else {
                    SrgViolation::Mu { u, v, common, expected }
                };
                return Ok(SrgCheck::NotStrong(violation));
            }
        }
    }
    let (lambda, mu) = (lambda.unwrap_or(0), mu.unwrap_or(0));
    SrgParams::new(n as u64, k as u64, lambda as u64, mu as u64).map(SrgCheck::Strong)
}

/// Paley graph on GF(q), `q ≡ 1 (mod 4)`: `a_i ~ a_j` iff `a_i - a_j` is a nonzero square.
pub fn paley_graph(spec: &FieldSpec) -> Result<Graph> {
    let q = spec.order();
    if q % 4 != 1 {
        return Err(Error::WrongResidue { q, expected: 1 });
    }
    let chi = spec.quad_char_table()?;
    let n = q as usize;
    let mut g = Graph::empty(n);
    for i in 0..q {
        for j in i + 1..q {
            if chi[spec.sub_index(i, j) as usize] == 1 {
                g.connect(i as usize, j as usize);
            }
        }
    }
    Ok(g)
}

/// Line-graph families with known strongly regular parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGraph {
    /// Line graph of `K_{n,n}`: `(n², 2n-2, n-2, 2)`.
    Rook,
    /// Line graph of `K_n`: `(n(n-1)/2, 2(n-2), n-2, 4)`.
    Triangular,
}

impl NamedGraph {
    /// Parameters the family is known to have at size `n`.
    pub fn expected_params(self, n: u64) -> Result<SrgParams> {
        match self {
            NamedGraph::Rook => SrgParams::new(n * n, 2 * n - 2, n - 2, 2),
            NamedGraph::Triangular => SrgParams::new(n * (n - 1) / 2, 2 * (n - 2), n - 2, 4),
        }
    }
}

/// Rook graph cells are numbered row-major; triangular vertices are the
/// 2-subsets of `0..n` in lexicographic order.
pub fn named_graph(kind: NamedGraph, n: usize) -> Result<Graph> {
    match kind {
        NamedGraph::Rook => {
            if n < 2 {
                return Err(invalid!("rook graph needs n >= 2, got {n}"));
            }
            let mut g = Graph::empty(n * n);
            for a in 0..n * n {
                for b in a + 1..n * n {
                    if a / n == b / n || a % n == b % n {
                        g.connect(a, b);
                    }
                }
            }
            Ok(g)
        }
        NamedGraph::Triangular => {
            if n < 4 {
                return Err(invalid!("triangular graph needs n >= 4, got {n}"));
            }
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
            let mut g = Graph::empty(pairs.len());
            for (x, &(a, b)) in pairs.iter().enumerate() {
                for (y, &(c, d)) in pairs.iter().enumerate().skip(x + 1) {
                    if a == c || a == d || b == c || b == d {
                        g.connect(x, y);
                    }
                }
            }
            Ok(g)
        }
    }
}

/// `(n, n-k-1, n-2-2k+μ, n-2k+λ)`.
pub fn complement_params(p: &SrgParams) -> Result<SrgParams> {
    let (n, k, l, m) = p.signed();
    let parts = [n - k - 1, n - 2 - 2 * k + m, n - 2 * k + l];
    if parts.iter().any(|&x| x < 0) {
        return Err(invalid!("complement of {p} has a negative parameter"));
    }
    SrgParams::new(n as u64, parts[0] as u64, parts[1] as u64, parts[2] as u64)
}

/// Direct count of the four neighborhood classes of `a ≠ b` over `V ∖ {a, b}`.
pub fn neighborhood_partition(g: &Graph, a: usize, b: usize) -> Result<NeighborhoodPartition> {
    let n = g.n();
    if a == b {
        return Err(invalid!("neighborhood partition needs distinct vertices, got {a} twice"));
    }
    if a >= n || b >= n {
        return Err(invalid!("vertices ({a}, {b}) outside 0..{n}"));
    }
    let mut part = NeighborhoodPartition { g1: 0, g2: 0, g3: 0, g4: 0 };
    for c in (0..n).filter(|&c| c != a && c != b) {
        match (g.is_adjacent(a, c), g.is_adjacent(b, c)) {
            (true, true) => part.g1 += 1,
            (false, false) => part.g2 += 1,
            (false, true) => part.g3 += 1,
            (true, false) => part.g4 += 1,
        }
    }
    Ok(part)
}

/// `max{k/2, λ, μ, (n-k-1)/2, n-2-2k+μ, n-2k+λ}`, integral for every valid parameter set.
pub fn theta(p: &SrgParams) -> u64 {
    (p.doubled_theta() / 2) as u64
}

/// `θ / n` in lowest terms.
pub fn theta_ratio(p: &SrgParams) -> Ratio<u64> {
    Ratio::new(theta(p), p.n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn params(n: u64, k: u64, l: u64, m: u64) -> SrgParams {
        SrgParams::new(n, k, l, m).unwrap()
    }

    #[test]
    fn pentagon_and_petersen() {
        assert_eq!(srg_params(&cycle(5)).unwrap(), SrgCheck::Strong(params(5, 2, 0, 1)));
        // Petersen graph as the complement of the triangular graph T(5).
        let tri5 = named_graph(NamedGraph::Triangular, 5).unwrap();
        assert_eq!(srg_params(&tri5.complement()).unwrap(), SrgCheck::Strong(params(10, 3, 0, 1)));
    }

    #[test]
    fn path_is_not_strongly_regular() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(
            srg_params(&p4).unwrap(),
            SrgCheck::NotStrong(SrgViolation::Irregular { vertex: 1, degree: 2, expected: 1 })
        );
        // Regular but not strongly regular: the 6-cycle.
        assert!(matches!(srg_params(&cycle(6)).unwrap(), SrgCheck::NotStrong(SrgViolation::Mu { .. })));
    }

    #[test]
    fn degenerate_graphs_rejected() {
        assert_eq!(srg_params(&Graph::empty(5)), Err(Error::DegenerateInput("graph has no edges")));
        let k5 = Graph::empty(5).complement();
        assert_eq!(srg_params(&k5), Err(Error::DegenerateInput("graph is complete")));
        assert!(matches!(srg_params(&cycle(3)), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn paley_examples() {
        let g13 = paley_graph(&FieldSpec::new(13, 1).unwrap()).unwrap();
        assert_eq!(srg_params(&g13).unwrap(), SrgCheck::Strong(params(13, 6, 2, 3)));
        let g9 = paley_graph(&FieldSpec::new(3, 2).unwrap()).unwrap();
        assert_eq!(srg_params(&g9).unwrap(), SrgCheck::Strong(params(9, 4, 1, 2)));
        assert_eq!(
            paley_graph(&FieldSpec::new(7, 1).unwrap()),
            Err(Error::WrongResidue { q: 7, expected: 1 })
        );
    }

    #[test]
    fn named_examples() {
        let rook = named_graph(NamedGraph::Rook, 4).unwrap();
        assert_eq!(srg_params(&rook).unwrap(), SrgCheck::Strong(params(16, 6, 2, 2)));
        let tri = named_graph(NamedGraph::Triangular, 6).unwrap();
        assert_eq!(srg_params(&tri).unwrap(), SrgCheck::Strong(params(15, 8, 4, 4)));
        let tri4 = named_graph(NamedGraph::Triangular, 4).unwrap();
        assert_eq!(srg_params(&tri4).unwrap(), SrgCheck::Strong(params(6, 4, 2, 4)));
        assert!(named_graph(NamedGraph::Rook, 1).is_err());
        assert!(named_graph(NamedGraph::Triangular, 3).is_err());
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement_params(&params(13, 6, 2, 3)).unwrap(), params(13, 6, 2, 3));
        let rook = params(16, 6, 2, 2);
        let comp = complement_params(&rook).unwrap();
        assert_eq!(comp, params(16, 9, 4, 6));
        assert_eq!(complement_params(&comp).unwrap(), rook);
        let g = named_graph(NamedGraph::Rook, 4).unwrap().complement();
        assert_eq!(srg_params(&g).unwrap(), SrgCheck::Strong(comp));
    }

    #[test]
    fn params_validation() {
        assert!(SrgParams::new(13, 6, 2, 4).is_err());
        assert!(SrgParams::new(5, 2, 2, 1).is_err());
        assert!(SrgParams::new(5, 5, 0, 1).is_err());
    }

    #[test]
    fn partition_examples() {
        let g13 = paley_graph(&FieldSpec::new(13, 1).unwrap()).unwrap();
        // 1 is a square mod 13, 2 is not.
        assert!(g13.is_adjacent(0, 1) && !g13.is_adjacent(0, 2));
        assert_eq!(
            neighborhood_partition(&g13, 0, 1).unwrap(),
            NeighborhoodPartition { g1: 2, g2: 3, g3: 3, g4: 3 }
        );
        assert_eq!(
            neighborhood_partition(&g13, 0, 2).unwrap(),
            NeighborhoodPartition { g1: 3, g2: 2, g3: 3, g4: 3 }
        );
        assert_eq!(
            neighborhood_partition(&cycle(5), 0, 1).unwrap(),
            NeighborhoodPartition { g1: 0, g2: 1, g3: 1, g4: 1 }
        );
        assert!(neighborhood_partition(&g13, 3, 3).is_err());
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta(&params(13, 6, 2, 3)), 3);
        assert_eq!(theta(&params(16, 6, 2, 2)), 6);
        assert_eq!(theta(&params(15, 8, 4, 4)), 4);
        assert_eq!(theta(&params(21, 10, 5, 4)), 6);
    }

    #[test]
    fn theta_ratio_examples() {
        assert_eq!(theta_ratio(&params(13, 6, 2, 3)), Ratio::new(3, 13));
        assert_eq!(theta_ratio(&params(16, 6, 2, 2)), Ratio::new(3, 8));
        // (4n-3, 2n-2, n-2, n-1): θ = n-1, so θ/|V| = (n-1)/(4n-3).
        for n in [4u64, 7, 13] {
            let p = params(4 * n - 3, 2 * n - 2, n - 2, n - 1);
            assert_eq!(theta_ratio(&p), Ratio::new(n - 1, 4 * n - 3));
        }
        let big = |n: u64| Ratio::new(n - 1, 4 * n - 3);
        assert!(Ratio::new(1u64, 4) - big(1000) < Ratio::new(1, 1000));
    }
}
