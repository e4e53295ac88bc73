//! JSON certificates for multipartite colorings and their standalone checker.
//!
//! The body is the edge-color list in canonical edge order: vertices are
//! flattened row-major as `(part, slot)`, and pairs `u < v` in different parts
//! are listed lexicographically. The body hash is SHA-256 over the color bytes.

use ramsey_forge_core::coloring::{certify_avoidance, MultipartiteColoring, Verdict};
use ramsey_forge_core::srg::SrgParams;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const FORMAT: &str = "ramsey-forge-certificate/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Certificate {
    pub format: String,
    pub header: Header,
    pub body: Body,
    pub footer: Footer,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Header {
    pub c: usize,
    pub s: usize,
    pub num_colors: u8,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "generator", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Provenance {
    /// ψ-coloring from a strongly regular graph and a symmetric sign matrix.
    Psi {
        srg: SrgParams,
        theta: u64,
        graph_sha256: String,
        matrix: MatrixInfo,
    },
    /// Avoiding coloring returned by exhaustive search.
    Search { nodes: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixInfo {
    pub order: usize,
    pub alpha: usize,
    pub symmetric: bool,
    pub sha256: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Body {
    pub edge_colors: Vec<u8>,
    pub sha256: String,
}

/// A vertex pair as 1-based `(part, slot)` labels with the color of its δ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Witness {
    pub u: (usize, usize),
    pub v: (usize, usize),
    pub color: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Footer {
    pub target: usize,
    pub max_delta: usize,
    pub witness: Witness,
    pub verdict: Verdict,
    /// `θζ` and `θ(ζ + α)` for ψ-colorings; only the latter is checked.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub theta_zeta: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub theta_zeta_plus_alpha: Option<u64>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn witness(col: &MultipartiteColoring, w: ramsey_forge_core::coloring::DeltaWitness) -> Witness {
    let label = |v| {
        let (a, i) = col.label(v);
        (a + 1, i + 1)
    };
    Witness { u: label(w.u), v: label(w.v), color: w.color }
}

impl Certificate {
    /// Scans `col` against `K_{2,target}` and records the result.
    pub fn new(col: &MultipartiteColoring, provenance: Provenance, target: usize) -> ramsey_forge_core::Result<Self> {
        let cert = certify_avoidance(col, target)?;
        let edge_colors = col.edge_colors();
        let (theta_zeta, theta_zeta_plus_alpha) = match &provenance {
            Provenance::Psi { theta, matrix, .. } => (
                Some(theta * matrix.order as u64),
                Some(theta * (matrix.order + matrix.alpha) as u64),
            ),
            Provenance::Search { .. } => (None, None),
        };
        Ok(Self {
            format: FORMAT.to_string(),
            header: Header { c: col.parts(), s: col.part_size(), num_colors: col.num_colors(), provenance },
            body: Body { sha256: sha256_hex(&edge_colors), edge_colors },
            footer: Footer {
                target,
                max_delta: cert.max_delta,
                witness: witness(col, cert.witness),
                verdict: cert.verdict,
                theta_zeta,
                theta_zeta_plus_alpha,
            },
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn coloring(&self) -> ramsey_forge_core::Result<MultipartiteColoring> {
        MultipartiteColoring::from_edge_colors(self.header.c, self.header.s, self.header.num_colors, &self.body.edge_colors)
    }
}

/// Result of re-checking a certificate from its body alone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub target: usize,
    pub hash_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_delta: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
    pub problems: Vec<String>,
}

impl VerifyReport {
    /// Intact, consistent with its footer, and avoiding the target.
    pub fn passed(&self) -> bool {
        self.problems.is_empty() && self.verdict == Some(Verdict::Avoided)
    }
}

/// Recomputes every δ from the body; `target` overrides the footer's `m`.
pub fn verify(cert: &Certificate, target: Option<usize>) -> VerifyReport {
    let target = target.unwrap_or(cert.footer.target);
    let mut report =
        VerifyReport { target, hash_ok: false, max_delta: None, witness: None, verdict: None, problems: Vec::new() };
    if cert.format != FORMAT {
        report.problems.push(format!("unknown format {:?}", cert.format));
    }
    report.hash_ok = sha256_hex(&cert.body.edge_colors) == cert.body.sha256;
    if !report.hash_ok {
        report.problems.push("body hash does not match the edge colors".to_string());
    }
    let col = match cert.coloring() {
        Ok(c) => c,
        Err(e) => {
            report.problems.push(format!("body is not a valid coloring: {e}"));
            return report;
        }
    };
    let scan = match certify_avoidance(&col, target) {
        Ok(s) => s,
        Err(e) => {
            report.problems.push(e.to_string());
            return report;
        }
    };
    let w = witness(&col, scan.witness);
    if scan.max_delta != cert.footer.max_delta {
        report
            .problems
            .push(format!("footer max_delta {} but recomputed {}", cert.footer.max_delta, scan.max_delta));
    }
    if w != cert.footer.witness {
        report.problems.push("footer witness differs from the recomputed one".to_string());
    }
    if target == cert.footer.target && scan.verdict != cert.footer.verdict {
        report.problems.push(format!("footer verdict {:?} but recomputed {:?}", cert.footer.verdict, scan.verdict));
    }
    if let Provenance::Psi { theta, matrix, .. } = &cert.header.provenance {
        if cert.header.s != matrix.order {
            report.problems.push("part size differs from the recorded matrix order".to_string());
        }
        if cert.footer.theta_zeta_plus_alpha != Some(theta * (matrix.order + matrix.alpha) as u64) {
            report.problems.push("footer theta*(zeta+alpha) disagrees with the provenance".to_string());
        }
    }
    report.max_delta = Some(scan.max_delta);
    report.witness = Some(w);
    report.verdict = Some(scan.verdict);
    report
}
