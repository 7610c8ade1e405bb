//! Machine-readable and human-readable reports.
//!
//! The JSON shapes here are the interchange format of the CLI: one
//! self-describing top-level object per command, always echoing the input
//! partition. Field names are part of the contract and round-trip through
//! serde untouched.

use serde::{Deserialize, Serialize};

use ferrers_core::certificate::{SvCertificate, VerificationReport};
use ferrers_core::ideal::{
    edge_generators, full_decomposition, minimal_decomposition, PrimeComponent,
};
use ferrers_core::invariants::{invariant_report, InternalInconsistency, InvariantReport};
use ferrers_core::oracle::{MembershipComparison, VarietyComparison};
use ferrers_core::shape::Partition;
use ferrers_core::{diagonal_certificate, sv_sums};

/// The analysis object: every invariant plus the generator, diagonal, and
/// minimal-prime listings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MachineReport {
    pub lambda: Vec<u32>,
    pub n: u32,
    pub m: u32,
    pub mu: u64,
    pub k: u32,
    pub corners: Vec<u32>,
    pub ara: u64,
    pub pd: u64,
    pub cd: u64,
    pub height: u64,
    #[serde(rename = "isSTCI")]
    pub is_stci: bool,
    #[serde(rename = "generatorCount")]
    pub generator_count: u64,
    pub generators: Vec<String>,
    pub diagonals: Vec<Vec<String>>,
    #[serde(rename = "minimalPrimes")]
    pub minimal_primes: Vec<MachinePrime>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MachinePrime {
    #[serde(rename = "xPrefix")]
    pub x_prefix: u32,
    #[serde(rename = "yPrefix")]
    pub y_prefix: u32,
}

impl From<PrimeComponent> for MachinePrime {
    fn from(c: PrimeComponent) -> Self {
        MachinePrime {
            x_prefix: c.x_prefix(),
            y_prefix: c.y_prefix(),
        }
    }
}

impl MachineReport {
    pub fn build(p: &Partition) -> Result<Self, InternalInconsistency> {
        let report = invariant_report(p)?;
        let cert = diagonal_certificate(p);
        Ok(MachineReport {
            lambda: p.parts().to_vec(),
            n: p.row_count(),
            m: p.col_count(),
            mu: report.mu,
            k: report.k,
            corners: report.corners.clone(),
            ara: report.ara,
            pd: report.pd,
            cd: report.cd,
            height: report.height,
            is_stci: report.is_stci,
            generator_count: report.generator_count,
            generators: edge_generators(p).iter().map(|g| g.to_string()).collect(),
            diagonals: cert
                .blocks()
                .iter()
                .map(|block| block.iter().map(|m| m.to_string()).collect())
                .collect(),
            minimal_primes: minimal_decomposition(p)
                .into_iter()
                .map(MachinePrime::from)
                .collect(),
        })
    }
}

/// JSON form of a certificate verification run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MachineCertification {
    pub lambda: Vec<u32>,
    pub blocks: Vec<Vec<String>>,
    pub sums: Vec<String>,
    pub passed: bool,
    #[serde(rename = "condI")]
    pub cond_i: bool,
    #[serde(rename = "condII")]
    pub cond_ii: bool,
    #[serde(rename = "condIII")]
    pub cond_iii: bool,
    pub witnesses: Vec<MachineWitness>,
    pub failures: Vec<MachineFailure>,
    #[serde(rename = "emptyBlocks")]
    pub empty_blocks: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MachineWitness {
    pub block: usize,
    pub pair: [String; 2],
    #[serde(rename = "dividerBlock")]
    pub divider_block: usize,
    pub divider: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MachineFailure {
    pub block: usize,
    pub pair: [String; 2],
}

impl MachineCertification {
    pub fn build(p: &Partition, cert: &SvCertificate, report: &VerificationReport) -> Self {
        MachineCertification {
            lambda: p.parts().to_vec(),
            blocks: cert
                .blocks()
                .iter()
                .map(|block| block.iter().map(|m| m.to_string()).collect())
                .collect(),
            sums: sv_sums(cert).iter().map(|q| q.to_string()).collect(),
            passed: report.passed,
            cond_i: report.cond_i,
            cond_ii: report.cond_ii,
            cond_iii: report.cond_iii,
            witnesses: report
                .witnesses
                .iter()
                .map(|w| MachineWitness {
                    block: w.block,
                    pair: [w.left.to_string(), w.right.to_string()],
                    divider_block: w.divider_block,
                    divider: w.divider.to_string(),
                })
                .collect(),
            failures: report
                .failures
                .iter()
                .map(|f| MachineFailure {
                    block: f.block,
                    pair: [f.left.to_string(), f.right.to_string()],
                })
                .collect(),
            empty_blocks: report.empty_blocks.clone(),
        }
    }
}

/// JSON form of the oracle run: one variety comparison and two membership
/// comparisons, plus the evidence disclaimer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MachineOracle {
    pub lambda: Vec<u32>,
    pub field: u32,
    pub budget: u64,
    #[serde(rename = "varietyEqual")]
    pub variety_equal: MachineVarietyCheck,
    #[serde(rename = "membershipFull")]
    pub membership_full: MachineMembershipCheck,
    #[serde(rename = "membershipMinimal")]
    pub membership_minimal: MachineMembershipCheck,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MachineVarietyCheck {
    pub equal: bool,
    #[serde(rename = "leftPoints")]
    pub left_points: u64,
    #[serde(rename = "rightPoints")]
    pub right_points: u64,
    pub counterexample: Option<Vec<u32>>,
}

impl From<&VarietyComparison> for MachineVarietyCheck {
    fn from(cmp: &VarietyComparison) -> Self {
        MachineVarietyCheck {
            equal: cmp.equal,
            left_points: cmp.left_points,
            right_points: cmp.right_points,
            counterexample: cmp.counterexample.as_ref().map(|pt| pt.residues().to_vec()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MachineMembershipCheck {
    pub equal: bool,
    pub counterexample: Option<String>,
    #[serde(rename = "inEdgeIdeal")]
    pub in_edge_ideal: Option<bool>,
    #[serde(rename = "inIntersection")]
    pub in_intersection: Option<bool>,
}

impl From<&MembershipComparison> for MachineMembershipCheck {
    fn from(cmp: &MembershipComparison) -> Self {
        MachineMembershipCheck {
            equal: cmp.equal,
            counterexample: cmp
                .counterexample
                .as_ref()
                .map(|mm| mm.monomial.to_string()),
            in_edge_ideal: cmp.counterexample.as_ref().map(|mm| mm.in_edge_ideal),
            in_intersection: cmp.counterexample.as_ref().map(|mm| mm.in_intersection),
        }
    }
}

pub const EVIDENCE_NOTE: &str = "finite-field agreement is evidence, not proof; \
the verified certificate (see `certify`) is the proof";

/// The `analyze` text report. Every line is `name = value`.
pub fn human_analysis(report: &InvariantReport) -> String {
    let corners = report
        .corners
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",");
    format!(
        "lambda = {}\nn = {}\nm = {}\nmu = {}\nara = {}\npd = {}\ncd = {}\nheight = {}\nk = {}\ncorners = {}\nisSTCI = {}\ngeneratorCount = {}\n",
        report.lambda,
        report.lambda.row_count(),
        report.lambda.col_count(),
        report.mu,
        report.ara,
        report.pd,
        report.cd,
        report.height,
        report.k,
        corners,
        report.is_stci,
        report.generator_count,
    )
}

/// The `diagonals` text report: the echo line, then one diagonal sum per line.
pub fn human_diagonals(p: &Partition) -> String {
    let mut out = format!("lambda = {p}\n");
    for q in sv_sums(&diagonal_certificate(p)) {
        out.push_str(&q.to_string());
        out.push('\n');
    }
    out
}

/// The `certify` text report, witnesses and failures included.
pub fn human_certification(
    p: &Partition,
    cert: &SvCertificate,
    report: &VerificationReport,
) -> String {
    let mut out = format!("lambda = {p}\n");
    out.push_str(&format!("blocks = {}\n", cert.block_count()));
    out.push_str(&format!(
        "condI (blocks cover the generators) = {}\n",
        report.cond_i
    ));
    out.push_str(&format!(
        "condII (first block is a singleton) = {}\n",
        report.cond_ii
    ));
    out.push_str(&format!(
        "condIII (every pair has an earlier divider) = {}\n",
        report.cond_iii
    ));
    out.push_str(&format!("passed = {}\n", report.passed));
    if !report.empty_blocks.is_empty() {
        out.push_str(&format!(
            "warning: empty blocks {:?}\n",
            report.empty_blocks
        ));
    }
    out.push_str(&format!("witnesses = {}\n", report.witnesses.len()));
    for w in &report.witnesses {
        out.push_str(&format!("  {w}\n"));
    }
    for f in &report.failures {
        out.push_str(&format!("  FAILED {f}\n"));
    }
    out
}

/// The `decompose` text report: both decompositions, the full one with its
/// redundant components marked.
pub fn human_decomposition(p: &Partition) -> String {
    let full = full_decomposition(p);
    let minimal = minimal_decomposition(p);
    let mut out = format!("lambda = {p}\n");
    out.push_str(&format!(
        "full decomposition ({} components):\n",
        full.len()
    ));
    for c in &full {
        if minimal.contains(c) {
            out.push_str(&format!("  {c}\n"));
        } else {
            out.push_str(&format!("  {c}  [redundant]\n"));
        }
    }
    out.push_str(&format!(
        "minimal decomposition ({} components):\n",
        minimal.len()
    ));
    for c in &minimal {
        out.push_str(&format!("  {c}\n"));
    }
    out
}

/// The `oracle` text report.
pub fn human_oracle(p: &Partition, oracle: &MachineOracle) -> String {
    let mut out = format!("lambda = {p}\n");
    out.push_str(&format!("field = {}\n", oracle.field));
    out.push_str(&format!("budget = {}\n", oracle.budget));
    let v = &oracle.variety_equal;
    if v.equal {
        out.push_str(&format!(
            "variety: edge generators vs diagonal sums over F_{}: EQUAL ({} points each)\n",
            oracle.field, v.left_points
        ));
    } else {
        out.push_str(&format!(
            "variety: edge generators vs diagonal sums over F_{}: DIFFER ({} vs {} points, counterexample {:?})\n",
            oracle.field, v.left_points, v.right_points, v.counterexample
        ));
    }
    let monomials = 1u128 << (p.row_count() + p.col_count());
    for (name, check) in [
        ("full", &oracle.membership_full),
        ("minimal", &oracle.membership_minimal),
    ] {
        if check.equal {
            out.push_str(&format!(
                "membership: edge ideal vs {name} decomposition over all {monomials} squarefree monomials: EQUAL\n"
            ));
        } else {
            out.push_str(&format!(
                "membership: edge ideal vs {name} decomposition: DIFFER at {} (in ideal: {:?}, in intersection: {:?})\n",
                check.counterexample.as_deref().unwrap_or("?"),
                check.in_edge_ideal,
                check.in_intersection
            ));
        }
    }
    out.push_str(&format!("note: {EVIDENCE_NOTE}\n"));
    out
}
