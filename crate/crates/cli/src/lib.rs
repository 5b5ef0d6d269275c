//! Command-line frontend for the `takahashi` invariants library.
//!
//! Exit codes: 0 success, 1 at least one failed claim, 2 usage error.

pub mod report;

use std::io::{self, Write};

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;
use takahashi::claims::{all_pass, verify_paper, ClaimStatus};
use takahashi::exactalg::{AbelianGroup, Rational};
use takahashi::grouppres::{cyclic_presentation, takahashi_presentation, Presentation};
use takahashi::knotkit::{
    alexander_from_braid3, alexander_two_bridge, branched_cover_homology, branched_cover_order, normalize_two_bridge,
    two_bridge_equivalent, BraidWord3, TwoBridge,
};
use takahashi::manifolds::{
    branch_conway_form, branch_knot, conjecture_scan, conway_class, h1_takahashi, normalize_spec, TakahashiSpec,
};

use report::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CLAIM_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "takahashi", version, about = "Homology invariants of periodic Takahashi manifolds M_n(p/q, r/s)")]
pub struct Cli {
    /// Emit a single JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// First homology of M_n(p/q, r/s).
    H1 {
        n: usize,
        /// Coefficient p/q: `p/q`, an integer, or `inf`.
        #[arg(allow_hyphen_values = true)]
        pq: Rational,
        #[arg(allow_hyphen_values = true)]
        rs: Rational,
    },
    /// Print the 2n-generator presentation, or the cyclic one with --cyclic.
    Presentation {
        n: usize,
        #[arg(allow_hyphen_values = true)]
        pq: Rational,
        #[arg(allow_hyphen_values = true)]
        rs: Rational,
        /// Use the n-generator cyclic presentation (requires r/s = 1/s).
        #[arg(long)]
        cyclic: bool,
    },
    /// Branching knot b(|4sq-1|, 2s) of M_n(1/q, 1/s).
    BranchKnot {
        #[arg(allow_hyphen_values = true)]
        q: i64,
        #[arg(allow_hyphen_values = true)]
        s: i64,
    },
    /// H_1 of the n-fold cyclic branched cover of the two-bridge knot b(alpha, beta).
    CoverOrder {
        alpha: i64,
        #[arg(allow_hyphen_values = true)]
        beta: i64,
        n: usize,
    },
    /// Schubert equivalence of b(a1, b1) and b(a2, b2).
    TwoBridgeEquiv {
        a1: i64,
        #[arg(allow_hyphen_values = true)]
        b1: i64,
        a2: i64,
        #[arg(allow_hyphen_values = true)]
        b2: i64,
        /// Also accept mirror images.
        #[arg(long)]
        mirror: bool,
    },
    /// Alexander polynomial of the closure of a 3-braid, e.g. "1 1 1 -2".
    BraidAlexander {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Run the full claims harness.
    VerifyPaper,
    /// H_1 table over a coefficient grid, n = 2..=max-n.
    ConjectureScan {
        /// Bound on |p|, |q|, |r|, |s|.
        #[arg(long, default_value_t = 2)]
        grid_max: i64,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<takahashi::Error> for CliError {
    fn from(e: takahashi::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn emit_json<W: Write, T: Serialize>(out: &mut W, value: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn rows<W: Write>(out: &mut W, pairs: &[(&str, String)]) -> io::Result<()> {
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    for (k, v) in pairs {
        writeln!(out, "{k:<width$}  {v}")?;
    }
    Ok(())
}

fn group_rows(g: &AbelianGroup) -> Vec<(&'static str, String)> {
    let torsion: Vec<String> = g.torsion().iter().map(BigInt::to_string).collect();
    vec![
        ("H_1", g.to_string()),
        ("torsion", if torsion.is_empty() { "-".to_string() } else { torsion.join(" ") }),
        ("free rank", g.free_rank().to_string()),
        ("order", g.order().map_or_else(|| "infinite".to_string(), |o| o.to_string())),
    ]
}

fn knot_note(k: TwoBridge) -> String {
    match (k.alpha(), k.beta()) {
        (1, _) => "unknot; every cyclic branched cover is S^3".to_string(),
        (3, _) => "trefoil class".to_string(),
        (5, _) => "figure-eight knot".to_string(),
        _ => "genus-one two-bridge knot".to_string(),
    }
}

fn presentation_report(spec: &TakahashiSpec, route: &str, prefix: &str, p: &Presentation) -> PresentationReport {
    PresentationReport {
        n: spec.n,
        pq: spec.pq.to_string(),
        rs: spec.rs.to_string(),
        route: route.to_string(),
        generators: (1..=p.generator_count()).map(|i| format!("{prefix}{i}")).collect(),
        relators: p.relators().iter().map(|r| r.display_with(prefix).to_string()).collect(),
    }
}

/// Execute a parsed command, writing to `out`; returns the exit code.
pub fn run<W: Write>(cli: Cli, out: &mut W) -> Result<i32, CliError> {
    let json = cli.json;
    match cli.command {
        Command::H1 { n, pq, rs } => {
            let spec = normalize_spec(n, pq, rs)?;
            let g = h1_takahashi(&spec)?;
            if json {
                emit_json(out, &H1Report::new(n, spec.pq.to_string(), spec.rs.to_string(), &g))?;
            } else {
                writeln!(out, "{spec}")?;
                rows(out, &group_rows(&g))?;
            }
        }
        Command::Presentation { n, pq, rs, cyclic } => {
            let spec = normalize_spec(n, pq, rs)?;
            let report = if cyclic {
                if spec.rs.num() != 1 {
                    return Err(CliError::Usage(format!(
                        "--cyclic needs r/s = 1/s, got r/s = {}; the cyclic presentation exists only for r = 1",
                        spec.rs
                    )));
                }
                let p = cyclic_presentation(n, spec.pq.num(), spec.pq.den(), spec.rs.den())?;
                presentation_report(&spec, "cyclic", "z", &p)
            } else {
                presentation_report(&spec, "takahashi", "x", &takahashi_presentation(n, spec.pq, spec.rs)?)
            };
            if json {
                emit_json(out, &report)?;
            } else {
                writeln!(
                    out,
                    "{spec}: {} generators, {} relators ({} presentation)",
                    report.generators.len(),
                    report.relators.len(),
                    report.route
                )?;
                writeln!(out, "generators: {}", report.generators.join(", "))?;
                let width = report.relators.len().to_string().len();
                for (i, r) in report.relators.iter().enumerate() {
                    writeln!(out, "r{:<width$}  {r}", i + 1)?;
                }
            }
        }
        Command::BranchKnot { q, s } => {
            let knot = branch_knot(q, s);
            let alternate = normalize_two_bridge(knot.alpha().max(1), 2 * q)?;
            let conway = branch_conway_form(q, s);
            let fraction = takahashi::knotkit::conway_to_fraction(&conway)?;
            let report = BranchKnotReport {
                q,
                s,
                knot: knot.into(),
                conway_form: conway.0.clone(),
                conway_fraction: fraction.to_string(),
                conway_class: conway_class(q, s).into(),
                alternate: alternate.into(),
                alternate_equivalent: two_bridge_equivalent(knot, alternate, false),
                note: knot_note(knot),
            };
            if json {
                emit_json(out, &report)?;
            } else {
                rows(
                    out,
                    &[
                        ("knot", knot.to_string()),
                        ("conway form", format!("{conway} = {fraction} -> {}", conway_class(q, s))),
                        ("b(alpha, 2q)", format!("{alternate} (equivalent: {})", report.alternate_equivalent)),
                        ("note", report.note.clone()),
                    ],
                )?;
            }
        }
        Command::CoverOrder { alpha, beta, n } => {
            if n == 0 {
                return Err(CliError::Usage("n must be at least 1".to_string()));
            }
            let knot = normalize_two_bridge(alpha, beta)?;
            let delta = alexander_two_bridge(knot)?;
            let g = branched_cover_homology(&delta, n)?;
            let res = branched_cover_order(&delta, n)?;
            if json {
                emit_json(out, &CoverReport::new(knot, n, delta.to_string(), &g, &res))?;
            } else {
                writeln!(out, "{n}-fold cyclic branched cover of {knot}")?;
                let mut pairs = vec![("alexander", delta.to_string())];
                pairs.extend(group_rows(&g));
                pairs.push(("|resultant|", res.to_string()));
                rows(out, &pairs)?;
            }
        }
        Command::TwoBridgeEquiv { a1, b1, a2, b2, mirror } => {
            let k1 = normalize_two_bridge(a1, b1)?;
            let k2 = normalize_two_bridge(a2, b2)?;
            let equivalent = two_bridge_equivalent(k1, k2, mirror);
            if json {
                emit_json(
                    out,
                    &EquivalenceReport { first: k1.into(), second: k2.into(), allow_mirror: mirror, equivalent },
                )?;
            } else {
                let rel = if equivalent { "≅" } else { "≇" };
                let scope = if mirror { " (mirrors allowed)" } else { "" };
                writeln!(out, "{k1} {rel} {k2}{scope}")?;
            }
        }
        Command::BraidAlexander { word } => {
            let braid: BraidWord3 = word.parse()?;
            let delta = alexander_from_braid3(&braid)?;
            if json {
                emit_json(
                    out,
                    &BraidAlexanderReport {
                        word: braid.to_string(),
                        alexander: delta.to_string(),
                        coefficients: delta.poly().coeffs().iter().map(BigInt::to_string).collect(),
                    },
                )?;
            } else {
                writeln!(out, "{delta}")?;
            }
        }
        Command::VerifyPaper => {
            let claims = verify_paper();
            let ok = all_pass(&claims);
            if json {
                emit_json(out, &VerifyReport { all_pass: ok, claims })?;
            } else {
                let id_width = claims.iter().map(|c| c.claim_id.len()).max().unwrap_or(0);
                for c in &claims {
                    let status = match c.status {
                        ClaimStatus::Pass => "pass",
                        ClaimStatus::Fail => "FAIL",
                        ClaimStatus::UnverifiedByDesign => "unverified-by-design",
                    };
                    writeln!(out, "{:<id_width$}  {status:<20}  {}", c.claim_id, c.computed)?;
                }
                writeln!(out, "{}", if ok { "all claims hold" } else { "some claims FAILED" })?;
            }
            return Ok(if ok { EXIT_OK } else { EXIT_CLAIM_FAILURE });
        }
        Command::ConjectureScan { grid_max, max_n } => {
            if grid_max < 0 {
                return Err(CliError::Usage("--grid-max must be nonnegative".to_string()));
            }
            let table = conjecture_scan(grid_max, max_n)?;
            let rows_out: Vec<H1Report> =
                table.iter().map(|r| H1Report::new(r.spec.n, r.spec.pq.to_string(), r.spec.rs.to_string(), &r.h1)).collect();
            if json {
                emit_json(out, &ScanReport { grid_max, max_n, rows: rows_out })?;
            } else {
                let w_pq = rows_out.iter().map(|r| r.pq.len()).max().unwrap_or(2).max(2);
                let w_rs = rows_out.iter().map(|r| r.rs.len()).max().unwrap_or(2).max(2);
                writeln!(out, "{:>3}  {:>w_pq$}  {:>w_rs$}  {:>9}  H_1", "n", "pq", "rs", "order")?;
                for (r, row) in rows_out.iter().zip(&table) {
                    writeln!(out, "{:>3}  {:>w_pq$}  {:>w_rs$}  {:>9}  {}", r.n, r.pq, r.rs, r.order, row.h1)?;
                }
            }
        }
    }
    Ok(EXIT_OK)
}
