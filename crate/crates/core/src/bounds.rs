//! Exact evaluation of lower, upper and exact-value bounds for the set
//! (`M_s`) and size (`m_c`) multipartite Ramsey numbers of `K_{2,m}` targets.
//!
//! Everything is integer or rational arithmetic. The one irrational threshold,
//! `ζ > (√2 + 1)X`, is decided as `ζ > X ∧ (ζ - X)² > 2X²`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::Ratio;

use crate::error::{invalid, Error, Result};
use crate::gf::{prime_power, FieldSpec};
use crate::srg::{named_graph, paley_graph, srg_params, theta, NamedGraph, SrgCheck, SrgParams};

/// Which multipartite Ramsey number a report is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Quantity {
    /// `M_s`: least number of parts, part size `s` fixed.
    #[cfg_attr(feature = "serde", serde(rename = "M_s"))]
    SetRamsey,
    /// `m_c`: least part size, number of parts `c` fixed.
    #[cfg_attr(feature = "serde", serde(rename = "m_c"))]
    SizeRamsey,
}

/// An SRG parameter set together with a symmetric `[α]`-Hadamard order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Scenario {
    pub srg: SrgParams,
    pub zeta: u64,
    pub alpha: u64,
    pub theta: u64,
    /// `θ(ζ + α) + 1`, the width of the avoided `K_{2,m}`.
    pub target: u64,
}

impl Scenario {
    pub fn new(srg: SrgParams, zeta: u64, alpha: u64) -> Result<Self> {
        if zeta < 2 {
            return Err(invalid!("matrix order must be at least 2, got {zeta}"));
        }
        if alpha > zeta {
            return Err(invalid!("alpha {alpha} exceeds order {zeta}"));
        }
        let theta = theta(&srg);
        let target = theta * (zeta + alpha) + 1;
        Ok(Self { srg, zeta, alpha, theta, target })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct LowerBound {
    pub value: u64,
    pub provenance: String,
}

/// An upper bound together with its side condition. When `applicable` is
/// false the value is recorded for reference only.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct UpperBound {
    pub value: u64,
    pub provenance: String,
    pub condition: String,
    pub applicable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct BoundReport {
    pub quantity: Quantity,
    /// Part size for `M_s`, number of parts for `m_c`.
    pub fixed: u64,
    pub colors: u8,
    /// The target `K_{2,m}` as `(2, m)`.
    pub target: (u64, u64),
    pub lower: LowerBound,
    pub upper: Option<UpperBound>,
    pub exact: Option<u64>,
    pub notes: Vec<String>,
}

impl BoundReport {
    fn settle(&mut self) {
        if let Some(up) = self.upper.as_ref().filter(|u| u.applicable) {
            if up.value == self.lower.value {
                self.exact = Some(up.value);
            } else if up.value < self.lower.value {
                self.notes.push(format!(
                    "upper bound {} is below lower bound {}; left unresolved",
                    up.value, self.lower.value
                ));
            }
        }
    }
}

fn ceil_div(a: u128, b: u128) -> u128 {
    a.div_ceil(b)
}

fn to_u64(x: u128, what: &str) -> Result<u64> {
    u64::try_from(x).map_err(|_| invalid!("{what} overflows u64"))
}

/// Lower and conditional upper bounds obtained from the ψ-coloring of
/// `K_{n×ζ}`: first for `M_ζ`, then for `m_n`, both with target `K_{2,θ(ζ+α)+1}`.
pub fn psi_report(sc: &Scenario) -> Result<(BoundReport, BoundReport)> {
    let n = sc.srg.n() as u128;
    let (zeta, alpha, th) = (sc.zeta as u128, sc.alpha as u128, sc.theta as u128);
    let hyp = format!(
        "SRG {} with theta {}, symmetric [{}]-Hadamard matrix of order {}",
        sc.srg, sc.theta, sc.alpha, sc.zeta
    );

    let frac = ceil_div(4 * th * alpha + 1, zeta);
    let upper_set = 4 * th + 2 + frac;
    let set_ok = zeta.is_multiple_of(2) || (frac - 1).is_multiple_of(2);
    let mut set = BoundReport {
        quantity: Quantity::SetRamsey,
        fixed: sc.zeta,
        colors: 2,
        target: (2, sc.target),
        lower: LowerBound { value: sc.srg.n() + 1, provenance: format!("psi-coloring of K_(n x zeta): {hyp}") },
        upper: Some(UpperBound {
            value: to_u64(upper_set, "upper bound")?,
            provenance: format!("counting bound 4*theta + 2 + ceil((4*theta*alpha + 1)/zeta), {hyp}"),
            condition: format!("zeta = {zeta} even or ceil((4*theta*alpha+1)/zeta) - 1 = {} even", frac - 1),
            applicable: set_ok,
        }),
        exact: None,
        notes: Vec::new(),
    };
    set.settle();

    let nm1 = n - 1;
    let size_val = ceil_div(4 * n * th * (zeta + alpha) + 2 * nm1, nm1 * nm1);
    let size_ok = nm1.is_multiple_of(2) || size_val.is_multiple_of(2);
    let mut size = BoundReport {
        quantity: Quantity::SizeRamsey,
        fixed: sc.srg.n(),
        colors: 2,
        target: (2, sc.target),
        lower: LowerBound { value: sc.zeta + 1, provenance: format!("psi-coloring of K_(n x zeta): {hyp}") },
        upper: Some(UpperBound {
            value: to_u64(size_val, "upper bound")?,
            provenance: format!(
                "counting bound ceil(4*n*theta*(zeta+alpha)/(n-1)^2 + 2/(n-1)), {hyp}"
            ),
            condition: format!("n - 1 = {nm1} even or the bound {size_val} even"),
            applicable: size_ok,
        }),
        exact: None,
        notes: Vec::new(),
    };
    size.settle();
    Ok((set, size))
}

/// A bound that holds only when `gate` is divisible by `divisor`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct GatedBound {
    pub value: u64,
    pub gate: u64,
    pub divisor: u64,
    pub holds: bool,
}

impl GatedBound {
    fn new(value: u128, gate: u128, divisor: u128) -> Result<Self> {
        Ok(Self {
            value: to_u64(value, "bound")?,
            gate: to_u64(gate, "divisibility gate")?,
            divisor: to_u64(divisor, "divisor")?,
            holds: gate.is_multiple_of(divisor),
        })
    }

    /// The bound when its divisibility condition holds.
    pub fn bound(&self) -> Option<u64> {
        self.holds.then_some(self.value)
    }
}

/// `M_m(K_{2,n}; k) ≤ ⌈((n-1)k² + k + 2m - 1)/m⌉`, gated on `k | m(c* - 1)`.
pub fn upper_set_ramsey(m: u64, n: u64, k: u64) -> Result<GatedBound> {
    if m < 2 || k < 2 || n < 1 {
        return Err(invalid!("need m >= 2, k >= 2, n >= 1; got m = {m}, n = {n}, k = {k}"));
    }
    let (m, n, k) = (m as u128, n as u128, k as u128);
    let value = ceil_div((n - 1) * k * k + k + 2 * m - 1, m);
    GatedBound::new(value, m * (value - 1), k)
}

/// `m_c(K_{2,n_1}, .., K_{2,n_k}) ≤ ⌈(ck(S-k) + (c-1)k)/(c-1)²⌉` with `S = Σ n_i`,
/// gated on `k | (c-1)·bound`.
pub fn upper_size_ramsey(c: u64, widths: &[u64]) -> Result<GatedBound> {
    let k = widths.len() as u128;
    if c < 2 || k < 2 || widths[0] < 2 {
        return Err(invalid!("need c >= 2, at least two targets and n_1 >= 2"));
    }
    let c = c as u128;
    let s: u128 = widths.iter().map(|&w| w as u128).sum();
    if widths.contains(&0) {
        return Err(invalid!("target widths must be positive"));
    }
    let value = ceil_div(c * k * (s - k) + (c - 1) * k, (c - 1) * (c - 1));
    GatedBound::new(value, (c - 1) * value, k)
}

/// Both sides of the counting inequality
/// `k·c·s·B((c-1)s/k) > Σ (n_i - 1)·B(cs)`, `B(x) = x(x-1)/2` over the rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GateEvaluation {
    pub lhs: Ratio<i128>,
    pub rhs: Ratio<i128>,
    pub holds: bool,
}

fn binom2(x: Ratio<i128>) -> Ratio<i128> {
    x * (x - 1) / 2
}

/// When the inequality holds, `M_s(K_{2,n_1}, .., K_{2,n_k}) ≤ c`.
pub fn counting_gate(s: u64, widths: &[u64], c: u64) -> Result<GateEvaluation> {
    let k = widths.len() as u64;
    if s < 1 || c < 1 || k < 2 {
        return Err(invalid!("need s >= 1, c >= 1 and at least two targets"));
    }
    if widths.contains(&0) {
        return Err(invalid!("target widths must be positive"));
    }
    let excess: u128 = widths.iter().map(|&w| w as u128 - 1).sum();
    let cs = c as u128 * s as u128;
    if cs > 1 << 31 || excess > 1 << 40 || k > 1 << 16 {
        return Err(invalid!("counting gate arguments too large for exact 128-bit evaluation"));
    }
    let (s, c, k) = (s as i128, c as i128, k as i128);
    let x = Ratio::new((c - 1) * s, k);
    let lhs = Ratio::from_integer(k * c * s) * binom2(x);
    let rhs = Ratio::from_integer(excess as i128) * binom2(Ratio::from_integer(c * s));
    Ok(GateEvaluation { lhs, rhs, holds: lhs > rhs })
}

/// How the `(4n-3, 2n-2, n-2, n-1)` graph required by [`exact_value`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum SrgProvenance {
    /// Paley graph on GF(4n-3) built and checked exhaustively.
    Constructed,
    /// Existence taken on the caller's word.
    Assumed,
}

/// `ζ > (√2 + 1)·X` with `X = (2n-1)(4αn - 4α + 1)`, decided in integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ThresholdCheck {
    pub x: u128,
    /// `ζ - X`, possibly negative.
    pub margin: i128,
    /// `(ζ - X)²`, compared against `2X²` when the margin is positive.
    pub margin_squared: u128,
    pub twice_x_squared: u128,
    pub holds: bool,
}

pub fn order_threshold(n: u64, zeta: u64, alpha: u64) -> Result<ThresholdCheck> {
    let (n, zeta, alpha) = (n as u128, zeta as u128, alpha as u128);
    let x = (2 * n - 1) * (4 * alpha * n - 4 * alpha + 1);
    let twice_x_squared = x
        .checked_mul(x)
        .and_then(|v| v.checked_mul(2))
        .ok_or_else(|| invalid!("threshold arithmetic overflows"))?;
    let margin = zeta as i128 - x as i128;
    let margin_squared = margin.unsigned_abs() * margin.unsigned_abs();
    let holds = margin > 0 && margin_squared > twice_x_squared;
    Ok(ThresholdCheck { x, margin, margin_squared, twice_x_squared, holds })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactCertificate {
    pub n: u64,
    pub zeta: u64,
    pub alpha: u64,
    /// `4n - 2`.
    pub value: u64,
    /// `(ζ + α)(n - 1) + 1`.
    pub target: u64,
    pub threshold: ThresholdCheck,
    pub gate: GateEvaluation,
    pub srg: SrgProvenance,
    pub report: BoundReport,
}

fn hypothesis(clause: &'static str, detail: String) -> Error {
    Error::HypothesisFailed { clause, detail }
}

fn self_complementary_params(n: u64) -> Result<SrgParams> {
    SrgParams::new(4 * n - 3, 2 * n - 2, n - 2, n - 1)
}

fn build_self_complementary(n: u64) -> Result<Option<SrgParams>> {
    let q = 4 * n - 3;
    if prime_power(q).is_none() {
        return Ok(None);
    }
    let g = paley_graph(&FieldSpec::with_order(q)?)?;
    let expected = self_complementary_params(n)?;
    match srg_params(&g)? {
        SrgCheck::Strong(p) if p == expected => Ok(Some(p)),
        other => Err(Error::InternalAssertion(format!(
            "Paley graph on GF({q}) checked as {other:?}, expected {expected}"
        ))),
    }
}

/// `M_ζ(K_{2,(ζ+α)(n-1)+1}; 2) = 4n - 2` for even `ζ > (√2 + 1)(2n-1)(4αn - 4α + 1)`.
///
/// The graph hypothesis is met by constructing the Paley graph when `4n - 3`
/// is a prime power, and otherwise only if `assume_srg` is set. The upper
/// half is confirmed independently through [`counting_gate`] at `c = 4n - 2`.
pub fn exact_value(n: u64, zeta: u64, alpha: u64, assume_srg: bool) -> Result<ExactCertificate> {
    if n < 2 {
        return Err(invalid!("family parameter n must be at least 2, got {n}"));
    }
    if !zeta.is_multiple_of(2) {
        return Err(hypothesis("even-order", format!("zeta = {zeta} is odd")));
    }
    if alpha > zeta {
        return Err(invalid!("alpha {alpha} exceeds order {zeta}"));
    }
    let threshold = order_threshold(n, zeta, alpha)?;
    if !threshold.holds {
        return Err(hypothesis(
            "order-threshold",
            format!(
                "zeta = {zeta} does not exceed (sqrt 2 + 1) * {x}: margin zeta - X = {m}, (zeta - X)^2 = {ms} vs 2X^2 = {tx}",
                x = threshold.x,
                m = threshold.margin,
                ms = threshold.margin_squared,
                tx = threshold.twice_x_squared
            ),
        ));
    }
    let srg = match build_self_complementary(n)? {
        Some(_) => SrgProvenance::Constructed,
        None if assume_srg => SrgProvenance::Assumed,
        None => {
            return Err(hypothesis(
                "srg-existence",
                format!("4n - 3 = {} is not a prime power and the graph was not assumed", 4 * n - 3),
            ))
        }
    };
    let value = 4 * n - 2;
    let target = (zeta + alpha) * (n - 1) + 1;
    let gate = counting_gate(zeta, &[target, target], value)?;
    if !gate.holds {
        return Err(Error::InternalAssertion(format!(
            "counting inequality fails at c = {value} although the order threshold holds"
        )));
    }
    let params = self_complementary_params(n)?;
    let sc = Scenario::new(params, zeta, alpha)?;
    let (mut report, _) = psi_report(&sc)?;
    if report.lower.value != value || sc.target != target {
        return Err(Error::InternalAssertion(format!(
            "psi-coloring lower bound {} or target {} disagrees with 4n - 2 = {value}, {target}",
            report.lower.value, sc.target
        )));
    }
    let srg_word = match srg {
        SrgProvenance::Constructed => "constructed",
        SrgProvenance::Assumed => "assumed",
    };
    report.upper = Some(UpperBound {
        value,
        provenance: format!(
            "counting inequality at c = {value}: {} > {}",
            gate.lhs, gate.rhs
        ),
        condition: format!(
            "zeta even and (zeta - X)^2 = {} > 2X^2 = {} with X = {}",
            threshold.margin_squared, threshold.twice_x_squared, threshold.x
        ),
        applicable: true,
    });
    report.exact = None;
    report.notes.clear();
    report.notes.push(format!("SRG {params}: {srg_word}"));
    report.notes.push(format!("symmetric [{alpha}]-Hadamard matrix of order {zeta}: assumed"));
    report.settle();
    Ok(ExactCertificate { n, zeta, alpha, value, target, threshold, gate, srg, report })
}

/// Parameter families with closed-form bound statements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExampleSpec {
    /// SRG `(4n-3, 2n-2, n-2, n-1)` with a symmetric `[α]`-Hadamard matrix of order `ζ`.
    SelfComplementary { n: u64, zeta: u64, alpha: u64 },
    /// Rook graph `L(K_{n,n})`, `n ≥ 4`.
    Rook { n: u64, zeta: u64, alpha: u64 },
    /// Triangular graph `L(K_n)`, `n ≥ 6`.
    Triangular { n: u64, zeta: u64, alpha: u64 },
    /// Exact value `p^t + 1` at order `4r⁴ - α`, for `p^t ≡ 1 (mod 4)` and odd `r`.
    PaleyExact { prime_power: u64, r: u64, alpha: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ExampleReport {
    pub family: &'static str,
    pub reports: Vec<BoundReport>,
    pub flags: Vec<String>,
}

fn parity_clause(zeta: u64, theta: u64, alpha: u64) -> Result<()> {
    let frac = (4 * theta * alpha + 1).div_ceil(zeta);
    if zeta.is_multiple_of(2) || (frac - 1).is_multiple_of(2) {
        Ok(())
    } else {
        Err(hypothesis(
            "parity",
            format!("zeta = {zeta} is odd and ceil((4*theta*alpha+1)/zeta) - 1 = {} is odd", frac - 1),
        ))
    }
}

fn check_matrix(zeta: u64, alpha: u64) -> Result<()> {
    if zeta < 2 {
        return Err(hypothesis("matrix-order", format!("zeta = {zeta} < 2")));
    }
    if alpha > zeta {
        return Err(hypothesis("matrix-alpha", format!("alpha = {alpha} > zeta = {zeta}")));
    }
    Ok(())
}

fn family_reports(params: SrgParams, zeta: u64, alpha: u64) -> Result<(Scenario, BoundReport, BoundReport)> {
    let sc = Scenario::new(params, zeta, alpha)?;
    parity_clause(zeta, sc.theta, alpha)?;
    let (set, size) = psi_report(&sc)?;
    Ok((sc, set, size))
}

/// Instantiates one of the closed-form families and reports its bounds,
/// flagging any disagreement between the closed forms and direct evaluation.
pub fn example_reports(spec: ExampleSpec) -> Result<ExampleReport> {
    let mut flags = Vec::new();
    match spec {
        ExampleSpec::SelfComplementary { n, zeta, alpha } => {
            if n < 2 {
                return Err(hypothesis("family-size", format!("n = {n} < 2")));
            }
            check_matrix(zeta, alpha)?;
            let params = self_complementary_params(n)?;
            let (sc, set, size) = family_reports(params, zeta, alpha)?;
            if sc.theta != n - 1 {
                flags.push(format!("theta = {} differs from n - 1 = {}", sc.theta, n - 1));
            }
            let closed_upper = 4 * n - 2 + (4 * (n - 1) * alpha + 1).div_ceil(zeta);
            if set.upper.as_ref().map(|u| u.value) != Some(closed_upper) {
                flags.push(format!("closed-form upper bound {closed_upper} differs from the evaluated one"));
            }
            if alpha == 0 && 4 * n >= zeta + 6 && size.exact != Some(zeta + 1) {
                flags.push(format!(
                    "expected m_{}(K_(2,{})) = {} but the size report gives {:?}",
                    4 * n - 3,
                    sc.target,
                    zeta + 1,
                    size.exact
                ));
            }
            Ok(ExampleReport { family: "self-complementary", reports: vec![set, size], flags })
        }
        ExampleSpec::Rook { n, zeta, alpha } => {
            if n < 4 {
                return Err(hypothesis("family-size", format!("n = {n} < 4")));
            }
            check_matrix(zeta, alpha)?;
            let params = NamedGraph::Rook.expected_params(n)?;
            let (sc, set, size) = family_reports(params, zeta, alpha)?;
            let closed_theta = (n - 2) * (n - 1);
            if sc.theta != closed_theta {
                flags.push(format!("theta = {} differs from (n-2)(n-1) = {closed_theta}", sc.theta));
            }
            if alpha == 0 {
                let displayed = 4 * n * n + 10 - 12 * n;
                let evaluated = set.upper.as_ref().map(|u| u.value).unwrap_or(0);
                if displayed != evaluated {
                    flags.push(format!(
                        "closed form 4n^2 - 12n + 10 = {displayed} differs from evaluated upper bound {evaluated} \
                         (ceil(1/zeta) = 1 adds one to 4(n-2)(n-1) + 2)"
                    ));
                }
            }
            Ok(ExampleReport { family: "rook", reports: vec![set, size], flags })
        }
        ExampleSpec::Triangular { n, zeta, alpha } => {
            if n < 6 {
                return Err(hypothesis("family-size", format!("n = {n} < 6")));
            }
            check_matrix(zeta, alpha)?;
            let params = NamedGraph::Triangular.expected_params(n)?;
            let (sc, set, size) = family_reports(params, zeta, alpha)?;
            let closed_theta = (n - 3) * (n - 2) / 2;
            if sc.theta != closed_theta {
                flags.push(format!(
                    "theta computed from its definition is {} but the closed form (n-3)(n-2)/2 gives {closed_theta}; \
                     bounds use the computed value",
                    sc.theta
                ));
            }
            Ok(ExampleReport { family: "triangular", reports: vec![set, size], flags })
        }
        ExampleSpec::PaleyExact { prime_power: q, r, alpha } => {
            if prime_power(q).is_none() || q % 4 != 1 {
                return Err(hypothesis("residue", format!("{q} is not a prime power congruent to 1 mod 4")));
            }
            if r.is_multiple_of(2) {
                return Err(hypothesis("odd-r", format!("r = {r} is even")));
            }
            let r4 = r.checked_pow(4).ok_or_else(|| invalid!("r^4 overflows"))?;
            if alpha > 2 * r4 {
                return Err(hypothesis("alpha-range", format!("alpha = {alpha} > 2r^4 = {}", 2 * r4)));
            }
            let zeta = 4 * r4 - alpha;
            if !zeta.is_multiple_of(2) {
                return Err(hypothesis("even-order", format!("4r^4 - alpha = {zeta} is odd")));
            }
            let n = q.div_ceil(4);
            let cert = exact_value(n, zeta, alpha, false)?;
            if cert.target != r4 * (q - 1) + 1 || cert.value != q + 1 {
                return Err(Error::InternalAssertion(format!(
                    "family target {} / value {} disagree with r^4(q-1)+1 = {}, q+1 = {}",
                    cert.target,
                    cert.value,
                    r4 * (q - 1) + 1,
                    q + 1
                )));
            }
            flags.push(format!("symmetric Hadamard matrix of order 4r^4 = {}: assumed to exist", 4 * r4));
            Ok(ExampleReport { family: "paley-exact", reports: vec![cert.report], flags })
        }
    }
}

/// The graph behind a family, for callers that want to build and check it.
pub fn example_graph(spec: ExampleSpec) -> Result<crate::srg::Graph> {
    match spec {
        ExampleSpec::Rook { n, .. } => named_graph(NamedGraph::Rook, n as usize),
        ExampleSpec::Triangular { n, .. } => named_graph(NamedGraph::Triangular, n as usize),
        ExampleSpec::SelfComplementary { n, .. } => paley_graph(&FieldSpec::with_order(4 * n - 3)?),
        ExampleSpec::PaleyExact { prime_power, .. } => paley_graph(&FieldSpec::with_order(prime_power)?),
    }
}
