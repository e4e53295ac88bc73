//! The `ramsey-forge` command line.
//!
//! Exit status: 0 when the command succeeds and any checked property holds,
//! 1 when a property is violated or a hypothesis fails (a JSON report is
//! always written to stdout in that case), 2 for invalid input, unreadable
//! files, malformed flags or an exhausted search budget.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ramsey_forge_core::bounds::{
    counting_gate, example_reports, exact_value, psi_report, upper_set_ramsey, upper_size_ramsey, ExampleSpec,
    GateEvaluation, GatedBound, Scenario,
};
use ramsey_forge_core::coloring::{
    build_psi, exhaustive_ramsey, find_mono_biclique, RamseyOutcome, Verdict, DEFAULT_BUDGET,
};
use ramsey_forge_core::gf::FieldSpec;
use ramsey_forge_core::hadamard::{
    alpha_of, delete_general, delete_symmetric, is_alpha_hadamard, paley_double, paley_one_hadamard, sylvester,
    AlphaMode, SignMatrix,
};
use ramsey_forge_core::srg::{named_graph, paley_graph, srg_params, theta, NamedGraph, SrgCheck, SrgParams};
use ramsey_forge_core::Error;
use serde::Serialize;
use serde_json::{json, Value};

use crate::certificate::{sha256_hex, verify, Certificate, MatrixInfo, Provenance};
use crate::formats::{parse_graph, parse_sign_matrix, write_graph, write_sign_matrix};

pub const BUDGET_ENV: &str = "RAMSEY_FORGE_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "ramsey-forge", version, about = "Hadamard-type matrices, strongly regular graphs and multipartite Ramsey certificates")]
pub struct Cli {
    /// Emit structured JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for parallel scans (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate or check sign matrices.
    #[command(subcommand)]
    Hadamard(HadamardCmd),
    /// Generate or check strongly regular graphs.
    #[command(subcommand)]
    Srg(SrgCmd),
    /// Build or verify ψ-coloring certificates.
    #[command(subcommand)]
    Color(ColorCmd),
    /// Evaluate bound formulas exactly.
    #[command(subcommand)]
    Bounds(BoundsCmd),
    /// Exhaustive Ramsey searches.
    #[command(subcommand)]
    Ramsey(RamseyCmd),
    /// Re-check a certificate file from its body alone.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum HadamardKind {
    Sylvester,
    PaleyOne,
    PaleyDouble,
    DeleteGeneral,
    DeleteSymmetric,
}

#[derive(Debug, Subcommand)]
enum HadamardCmd {
    /// Write a sign matrix from one of the constructions.
    Gen {
        #[arg(long)]
        kind: HadamardKind,
        /// Matrix order (sylvester: a power of two).
        #[arg(long)]
        order: Option<usize>,
        /// Field order for the Paley constructions.
        #[arg(long)]
        q: Option<u64>,
        /// Source matrix for the deletion constructions.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Rows and columns to delete.
        #[arg(long)]
        alpha: Option<usize>,
        /// Explicit 1-based rows to delete (delete-general).
        #[arg(long)]
        rows: Option<IndexList>,
        /// Explicit 1-based columns to delete (delete-general).
        #[arg(long)]
        cols: Option<IndexList>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Report the α-profile of a sign matrix file.
    Check {
        file: PathBuf,
        #[arg(long)]
        alpha: Option<usize>,
        #[arg(long, value_enum, default_value = "upper")]
        mode: Mode,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Exact,
    Upper,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GraphKind {
    Paley,
    Rook,
    Triangular,
}

#[derive(Debug, Subcommand)]
enum SrgCmd {
    /// Write a named strongly regular graph.
    Gen {
        #[arg(long)]
        kind: GraphKind,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a graph file against SRG parameters.
    Check {
        file: PathBuf,
        /// Expected parameters `n,k,lambda,mu`.
        #[arg(long)]
        expect: Option<ParamList>,
    },
}

#[derive(Debug, Subcommand)]
enum ColorCmd {
    /// Build a ψ-coloring certificate from an SRG and a symmetric sign matrix.
    Build {
        #[arg(long)]
        srg: PathBuf,
        #[arg(long)]
        matrix: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Target `2,m`; defaults to `2,θ(ζ+α)+1`.
        #[arg(long)]
        target: Option<Target>,
    },
    /// Re-check a certificate against a target.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct VerifyArgs {
    certificate: PathBuf,
    /// Target `2,m`; defaults to the one recorded in the footer.
    #[arg(long)]
    target: Option<Target>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    #[value(name = "self-complementary")]
    SelfComplementary,
    Rook,
    Triangular,
    #[value(name = "paley-exact")]
    PaleyExact,
}

#[derive(Debug, Subcommand)]
enum BoundsCmd {
    /// Lower and conditional upper bounds from an SRG and a symmetric matrix.
    Psi {
        #[arg(long)]
        srg: ParamList,
        #[arg(long)]
        zeta: u64,
        #[arg(long, default_value_t = 0)]
        alpha: u64,
    },
    /// Gated upper bound on M_m(K_{2,n}; k).
    SetUpper {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 2)]
        k: u64,
    },
    /// Gated upper bound on m_c(K_{2,n_1}, ..).
    SizeUpper {
        #[arg(long)]
        c: u64,
        #[arg(long)]
        widths: IndexList,
    },
    /// The counting inequality certifying M_s(..) <= c.
    Gate {
        #[arg(long)]
        s: u64,
        #[arg(long)]
        widths: IndexList,
        #[arg(long)]
        c: u64,
    },
    /// Exact value 4n-2 above the order threshold.
    Exact {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        zeta: u64,
        #[arg(long, default_value_t = 0)]
        alpha: u64,
        /// Accept the (4n-3, 2n-2, n-2, n-1) graph without constructing it.
        #[arg(long)]
        assume_srg: bool,
    },
    /// Closed-form parameter families.
    Example {
        #[arg(long)]
        which: Family,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        zeta: Option<u64>,
        #[arg(long, default_value_t = 0)]
        alpha: u64,
        /// Prime power (paley-exact).
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        r: Option<u64>,
    },
}

#[derive(Debug, Subcommand)]
enum RamseyCmd {
    /// Search every coloring of K_{c x s} for one avoiding a monochromatic K_{2,m}.
    Exhaustive {
        #[arg(long)]
        c: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        target: Target,
        #[arg(long, default_value_t = 2)]
        colors: u8,
        #[arg(long)]
        budget: Option<u64>,
        /// Write the avoiding coloring as a certificate.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Search a certified coloring for a monochromatic K_{a,b}.
    Biclique {
        certificate: PathBuf,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        color: u8,
        #[arg(long)]
        budget: Option<u64>,
    },
}

/// Comma-separated positive integers.
#[derive(Debug, Clone)]
struct IndexList(Vec<u64>);

impl FromStr for IndexList {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        s.split(',')
            .map(|p| p.trim().parse::<u64>().map_err(|e| format!("{p:?}: {e}")))
            .collect::<Result<Vec<_>, _>>()
            .map(IndexList)
    }
}

#[derive(Debug, Clone, Copy)]
struct ParamList(u64, u64, u64, u64);

impl FromStr for ParamList {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match IndexList::from_str(s)?.0[..] {
            [n, k, l, m] => Ok(ParamList(n, k, l, m)),
            _ => Err("expected n,k,lambda,mu".to_string()),
        }
    }
}

/// `2,m`: the only target shape the δ-scan decides.
#[derive(Debug, Clone, Copy)]
struct Target(usize);

impl FromStr for Target {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match IndexList::from_str(s)?.0[..] {
            [2, m] if m >= 1 => Ok(Target(m as usize)),
            _ => Err("expected 2,m with m >= 1".to_string()),
        }
    }
}

#[derive(Debug)]
enum Failure {
    Invalid(String),
    Budget(u64),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { budget } => Failure::Budget(budget),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure::Invalid(msg.into())
}

/// What a command produced: an exit code, a text rendering and a JSON record.
struct Outcome {
    code: u8,
    text: String,
    json: Value,
}

impl Outcome {
    fn new(holds: bool, text: String, json: Value) -> Self {
        Self { code: if holds { 0 } else { 1 }, text, json }
    }
}

fn to_value(x: &impl Serialize) -> Value {
    serde_json::to_value(x).expect("report serializes")
}

fn hypothesis_outcome(e: Error) -> Result<Outcome, Failure> {
    match e {
        Error::HypothesisFailed { clause, detail } => Ok(Outcome {
            code: 1,
            text: format!("hypothesis failed ({clause}): {detail}\n"),
            json: json!({ "status": "hypothesis-failed", "clause": clause, "detail": detail }),
        }),
        other => Err(other.into()),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn load_matrix(path: &Path) -> Result<SignMatrix, Failure> {
    parse_sign_matrix(&read(path)?).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn load_certificate(path: &Path) -> Result<Certificate, Failure> {
    Certificate::from_json(&read(path)?).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn budget(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| invalid(format!("{BUDGET_ENV}={v:?} is not a node count"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T, Failure> {
    v.ok_or_else(|| invalid(format!("--{flag} is required here")))
}

fn usize_list(list: &IndexList) -> Vec<usize> {
    list.0.iter().map(|&x| x as usize).collect()
}

fn matrix_summary(h: &SignMatrix) -> Value {
    let profile = alpha_of(h);
    json!({
        "order": h.order(),
        "alpha": profile.alpha,
        "symmetric": h.is_symmetric(),
        "sha256": sha256_hex(write_sign_matrix(h).as_bytes()),
    })
}

fn hadamard(cmd: HadamardCmd) -> Result<Outcome, Failure> {
    match cmd {
        HadamardCmd::Gen { kind, order, q, input, alpha, rows, cols, output } => {
            let mut extra = json!({});
            let h = match kind {
                HadamardKind::Sylvester => {
                    let order = need(order, "order")?;
                    if !order.is_power_of_two() || order < 2 {
                        return Err(invalid(format!("sylvester order {order} is not a power of two >= 2")));
                    }
                    sylvester(order.trailing_zeros())?
                }
                HadamardKind::PaleyOne => paley_one_hadamard(&FieldSpec::with_order(need(q, "q")?)?)?,
                HadamardKind::PaleyDouble => {
                    let k = paley_double(&FieldSpec::with_order(need(q, "q")?)?)?;
                    extra = json!({ "displayed_gram_mismatches": k.displayed_gram_mismatches });
                    k.matrix
                }
                HadamardKind::DeleteGeneral => {
                    let src = load_matrix(&need(input, "input")?)?;
                    let (r, c) = match (rows, cols, alpha) {
                        (Some(r), Some(c), _) => (usize_list(&r), usize_list(&c)),
                        (None, None, Some(a)) => ((1..=a).collect(), (1..=a).collect()),
                        _ => return Err(invalid("give --rows and --cols, or --alpha")),
                    };
                    delete_general(&src, &r, &c)?
                }
                HadamardKind::DeleteSymmetric => {
                    delete_symmetric(&load_matrix(&need(input, "input")?)?, need(alpha, "alpha")?)?
                }
            };
            let text = write_sign_matrix(&h);
            let mut summary = matrix_summary(&h);
            if let (Value::Object(s), Value::Object(e)) = (&mut summary, extra) {
                s.extend(e);
            }
            match output {
                Some(path) => {
                    write(&path, &text)?;
                    let human = format!(
                        "wrote {}: order {}, alpha {}, symmetric {}\n",
                        path.display(),
                        summary["order"],
                        summary["alpha"],
                        summary["symmetric"]
                    );
                    Ok(Outcome::new(true, human, summary))
                }
                None => Ok(Outcome::new(true, text, summary)),
            }
        }
        HadamardCmd::Check { file, alpha, mode } => {
            let h = load_matrix(&file)?;
            let mut summary = matrix_summary(&h);
            let measured = summary["alpha"].as_u64().unwrap_or_default();
            let Some(alpha) = alpha else {
                let text = format!("order {}, alpha {measured}, symmetric {}\n", h.order(), h.is_symmetric());
                return Ok(Outcome::new(true, text, summary));
            };
            let mode = match mode {
                Mode::Exact => AlphaMode::Exact,
                Mode::Upper => AlphaMode::Upper,
            };
            let holds = is_alpha_hadamard(&h, alpha, mode)?;
            summary["holds"] = json!(holds);
            summary["mode"] = json!(if mode == AlphaMode::Exact { "exact" } else { "upper" });
            summary["claimed_alpha"] = json!(alpha);
            let rel = if mode == AlphaMode::Exact { "=" } else { "<=" };
            let text = format!("alpha {measured} {rel} {alpha}: {}\n", if holds { "holds" } else { "fails" });
            Ok(Outcome::new(holds, text, summary))
        }
    }
}

fn params_json(p: &SrgParams) -> Value {
    json!({ "n": p.n(), "k": p.k(), "lambda": p.lambda(), "mu": p.mu(), "theta": theta(p) })
}

fn srg(cmd: SrgCmd) -> Result<Outcome, Failure> {
    match cmd {
        SrgCmd::Gen { kind, q, n, output } => {
            let g = match kind {
                GraphKind::Paley => paley_graph(&FieldSpec::with_order(need(q, "q")?)?)?,
                GraphKind::Rook => named_graph(NamedGraph::Rook, need(n, "n")?)?,
                GraphKind::Triangular => named_graph(NamedGraph::Triangular, need(n, "n")?)?,
            };
            let text = write_graph(&g);
            let summary = json!({
                "vertices": g.n(),
                "edges": g.edge_count(),
                "sha256": sha256_hex(text.as_bytes()),
            });
            match output {
                Some(path) => {
                    write(&path, &text)?;
                    let human = format!("wrote {}: {} vertices, {} edges\n", path.display(), g.n(), g.edge_count());
                    Ok(Outcome::new(true, human, summary))
                }
                None => Ok(Outcome::new(true, text, summary)),
            }
        }
        SrgCmd::Check { file, expect } => {
            let g = parse_graph(&read(&file)?).map_err(|e| invalid(format!("{}: {e}", file.display())))?;
            match srg_params(&g)? {
                SrgCheck::Strong(p) => {
                    let mut out = json!({ "strongly_regular": true, "params": params_json(&p) });
                    let mut holds = true;
                    if let Some(ParamList(n, k, l, m)) = expect {
                        holds = (p.n(), p.k(), p.lambda(), p.mu()) == (n, k, l, m);
                        out["matches_expected"] = json!(holds);
                    }
                    let text = format!(
                        "strongly regular {p}, theta {}{}\n",
                        theta(&p),
                        if holds { "" } else { " (differs from --expect)" }
                    );
                    Ok(Outcome::new(holds, text, out))
                }
                SrgCheck::NotStrong(v) => {
                    let detail = format!("{v:?}");
                    Ok(Outcome::new(
                        false,
                        format!("not strongly regular: {detail}\n"),
                        json!({ "strongly_regular": false, "violation": detail }),
                    ))
                }
            }
        }
    }
}

fn verify_outcome(args: VerifyArgs) -> Result<Outcome, Failure> {
    let cert = load_certificate(&args.certificate)?;
    let report = verify(&cert, args.target.map(|t| t.0));
    let mut text = String::new();
    match (report.verdict, report.max_delta) {
        (Some(v), Some(d)) => {
            let _ = writeln!(text, "K_(2,{}): {} (max delta {d})", report.target, verdict_word(v));
        }
        _ => text.push_str("coloring could not be rechecked\n"),
    }
    for p in &report.problems {
        let _ = writeln!(text, "problem: {p}");
    }
    Ok(Outcome::new(report.passed(), text, to_value(&report)))
}

fn verdict_word(v: Verdict) -> &'static str {
    match v {
        Verdict::Avoided => "avoided",
        Verdict::Violated => "violated",
    }
}

fn color(cmd: ColorCmd) -> Result<Outcome, Failure> {
    match cmd {
        ColorCmd::Build { srg, matrix, output, target } => {
            let g = parse_graph(&read(&srg)?).map_err(|e| invalid(format!("{}: {e}", srg.display())))?;
            let h = load_matrix(&matrix)?;
            let params = match srg_params(&g)? {
                SrgCheck::Strong(p) => p,
                SrgCheck::NotStrong(v) => return Err(invalid(format!("{}: not strongly regular: {v:?}", srg.display()))),
            };
            let col = build_psi(&g, &h)?;
            let th = theta(&params);
            let profile = alpha_of(&h);
            let m = target.map_or(th as usize * (h.order() + profile.alpha) + 1, |t| t.0);
            let provenance = Provenance::Psi {
                srg: params,
                theta: th,
                graph_sha256: sha256_hex(write_graph(&g).as_bytes()),
                matrix: MatrixInfo {
                    order: h.order(),
                    alpha: profile.alpha,
                    symmetric: h.is_symmetric(),
                    sha256: sha256_hex(write_sign_matrix(&h).as_bytes()),
                },
            };
            let cert = Certificate::new(&col, provenance, m)?;
            write(&output, &cert.to_json())?;
            let avoided = cert.footer.verdict == Verdict::Avoided;
            let mut text = format!(
                "wrote {}: K_({} x {}) coloring, K_(2,{m}) {} (max delta {})\n",
                output.display(),
                col.parts(),
                col.part_size(),
                verdict_word(cert.footer.verdict),
                cert.footer.max_delta
            );
            if avoided {
                let _ = writeln!(text, "M_{}(K_(2,{m});2) >= {}", col.part_size(), col.parts() + 1);
                let _ = writeln!(text, "m_{}(K_(2,{m});2) >= {}", col.parts(), col.part_size() + 1);
            }
            let json = json!({
                "certificate": output.display().to_string(),
                "target": m,
                "max_delta": cert.footer.max_delta,
                "verdict": cert.footer.verdict,
                "body_sha256": cert.body.sha256,
            });
            Ok(Outcome::new(avoided, text, json))
        }
        ColorCmd::Verify(args) => verify_outcome(args),
    }
}

fn gated(g: GatedBound, what: &str) -> Outcome {
    let text = if g.holds {
        format!("{what} <= {}\n", g.value)
    } else {
        format!("condition failed: {} not divisible by {} (bound would be {})\n", g.gate, g.divisor, g.value)
    };
    Outcome::new(g.holds, text, to_value(&g))
}

fn gate_json(g: &GateEvaluation) -> Value {
    json!({ "lhs": g.lhs.to_string(), "rhs": g.rhs.to_string(), "holds": g.holds })
}

fn report_text(reports: &[ramsey_forge_core::bounds::BoundReport]) -> String {
    use ramsey_forge_core::bounds::Quantity;
    let mut text = String::new();
    for r in reports {
        let name = match r.quantity {
            Quantity::SetRamsey => format!("M_{}(K_(2,{});2)", r.fixed, r.target.1),
            Quantity::SizeRamsey => format!("m_{}(K_(2,{});2)", r.fixed, r.target.1),
        };
        let _ = write!(text, "{name}: lower {}", r.lower.value);
        if let Some(u) = &r.upper {
            let _ = write!(text, ", upper {}{}", u.value, if u.applicable { "" } else { " (condition not met)" });
        }
        if let Some(e) = r.exact {
            let _ = write!(text, ", exact {e}");
        }
        text.push('\n');
        for n in &r.notes {
            let _ = writeln!(text, "  note: {n}");
        }
    }
    text
}

fn bounds(cmd: BoundsCmd) -> Result<Outcome, Failure> {
    match cmd {
        BoundsCmd::Psi { srg: ParamList(n, k, l, m), zeta, alpha } => {
            let sc = Scenario::new(SrgParams::new(n, k, l, m)?, zeta, alpha)?;
            let (set, size) = psi_report(&sc)?;
            let text = report_text(&[set.clone(), size.clone()]);
            Ok(Outcome::new(true, text, json!({ "scenario": to_value(&sc), "reports": [set, size] })))
        }
        BoundsCmd::SetUpper { m, n, k } => {
            Ok(gated(upper_set_ramsey(m, n, k)?, &format!("M_{m}(K_(2,{n});{k})")))
        }
        BoundsCmd::SizeUpper { c, widths } => Ok(gated(upper_size_ramsey(c, &widths.0)?, &format!("m_{c}"))),
        BoundsCmd::Gate { s, widths, c } => {
            let g = counting_gate(s, &widths.0, c)?;
            let text = format!("{} {} {}: {}\n", g.lhs, if g.holds { ">" } else { "<=" }, g.rhs, if g.holds { "holds" } else { "fails" });
            Ok(Outcome::new(g.holds, text, gate_json(&g)))
        }
        BoundsCmd::Exact { n, zeta, alpha, assume_srg } => match exact_value(n, zeta, alpha, assume_srg) {
            Ok(cert) => {
                let t = &cert.threshold;
                let text = format!(
                    "M_{zeta}(K_(2,{});2) = {}\n  threshold: ({zeta} - {})^2 = {} > {} = 2X^2\n  counting gate at c = {}: {} > {}\n",
                    cert.target, cert.value, t.x, t.margin_squared, t.twice_x_squared, cert.value, cert.gate.lhs, cert.gate.rhs
                );
                let json = json!({
                    "value": cert.value,
                    "target": cert.target,
                    "threshold": to_value(&cert.threshold),
                    "gate": gate_json(&cert.gate),
                    "srg": cert.srg,
                    "report": cert.report,
                });
                Ok(Outcome::new(true, text, json))
            }
            Err(e) => hypothesis_outcome(e),
        },
        BoundsCmd::Example { which, n, zeta, alpha, q, r } => {
            let spec = match which {
                Family::SelfComplementary => {
                    ExampleSpec::SelfComplementary { n: need(n, "n")?, zeta: need(zeta, "zeta")?, alpha }
                }
                Family::Rook => ExampleSpec::Rook { n: need(n, "n")?, zeta: need(zeta, "zeta")?, alpha },
                Family::Triangular => ExampleSpec::Triangular { n: need(n, "n")?, zeta: need(zeta, "zeta")?, alpha },
                Family::PaleyExact => ExampleSpec::PaleyExact { prime_power: need(q, "q")?, r: need(r, "r")?, alpha },
            };
            match example_reports(spec) {
                Ok(rep) => {
                    let mut text = report_text(&rep.reports);
                    for f in &rep.flags {
                        let _ = writeln!(text, "flag: {f}");
                    }
                    Ok(Outcome::new(true, text, to_value(&rep)))
                }
                Err(e) => hypothesis_outcome(e),
            }
        }
    }
}

fn ramsey(cmd: RamseyCmd) -> Result<Outcome, Failure> {
    match cmd {
        RamseyCmd::Exhaustive { c, s, target, colors, budget: flag, output } => {
            let budget = budget(flag)?;
            let search = exhaustive_ramsey(c, s, target.0, colors, budget)?;
            let m = target.0;
            let (verdict, text) = match &search.outcome {
                RamseyOutcome::Forced => (
                    "forced",
                    format!("forced: every {colors}-coloring of K_({c} x {s}) has a monochromatic K_(2,{m})\n"),
                ),
                RamseyOutcome::Avoiding(_) => (
                    "avoiding",
                    format!("avoiding: some {colors}-coloring of K_({c} x {s}) has no monochromatic K_(2,{m})\n"),
                ),
            };
            let mut json = json!({
                "c": c, "s": s, "target": [2, m], "colors": colors,
                "verdict": verdict, "nodes": search.nodes, "budget": budget,
            });
            if let RamseyOutcome::Avoiding(col) = &search.outcome {
                json["edge_colors"] = json!(col.edge_colors());
                if let Some(path) = output {
                    let cert = Certificate::new(col, Provenance::Search { nodes: search.nodes }, m)?;
                    write(&path, &cert.to_json())?;
                    json["certificate"] = json!(path.display().to_string());
                }
            }
            Ok(Outcome::new(true, text, json))
        }
        RamseyCmd::Biclique { certificate, a, b, color, budget: flag } => {
            let budget = budget(flag)?;
            let cert = load_certificate(&certificate)?;
            let col = cert.coloring()?;
            let found = find_mono_biclique(&col, a, b, color, budget)?;
            let label = |v: &usize| {
                let (p, i) = col.label(*v);
                [p + 1, i + 1]
            };
            match found {
                None => Ok(Outcome::new(
                    true,
                    format!("no K_({a},{b}) in color {color}\n"),
                    json!({ "a": a, "b": b, "color": color, "found": false }),
                )),
                Some(bc) => {
                    let left: Vec<_> = bc.left.iter().map(label).collect();
                    let right: Vec<_> = bc.right.iter().map(label).collect();
                    Ok(Outcome::new(
                        false,
                        format!("K_({a},{b}) in color {color}: {left:?} x {right:?}\n"),
                        json!({ "a": a, "b": b, "color": color, "found": true, "left": left, "right": right }),
                    ))
                }
            }
        }
    }
}

fn dispatch(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Hadamard(c) => hadamard(c),
        Command::Srg(c) => srg(c),
        Command::Color(c) => color(c),
        Command::Bounds(c) => bounds(c),
        Command::Ramsey(c) => ramsey(c),
        Command::Verify(a) => verify_outcome(a),
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code() as u8;
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let result = match cli.threads {
        Some(0) => Err(invalid("--threads must be at least 1")),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| dispatch(cli.command)),
            Err(e) => Err(invalid(format!("thread pool: {e}"))),
        },
        None => dispatch(cli.command),
    };
    match result {
        Ok(outcome) => {
            if cli.json || outcome.code != 0 {
                let mut s = serde_json::to_string_pretty(&outcome.json).expect("json renders");
                s.push('\n');
                let _ = out.write_all(s.as_bytes());
                if !cli.json {
                    let _ = err.write_all(outcome.text.as_bytes());
                }
            } else {
                let _ = out.write_all(outcome.text.as_bytes());
            }
            outcome.code
        }
        Err(Failure::Invalid(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Budget(b)) => {
            let _ = writeln!(err, "error: search budget of {b} nodes exceeded (raise --budget or {BUDGET_ENV})");
            2
        }
    }
}
