//! Command-line driver: verification subcommands and series expansion.
//!
//! Exit codes: 0 when every check passes, 1 on a verification failure (the
//! report is still written), 2 on a usage or configuration error.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::certificates::{verify_sylvester_certificate, verify_watson_certificate};
use crate::gauss::{gauss_closed_form, gauss_sum, gauss_verify_identity_range, GaussInstance};
use crate::report::{CellRecord, VerificationReport};
use crate::series::{
    rr_product, rr_sum, schur_bilateral, sylvester_lhs, watson_lhs, watson_rhs, AQSeries,
};
use crate::sylvester::{sylvester_verify_identity, SylvesterInstance};
use crate::telescoping::{
    build_involution, check_cell, check_telescoping, global_bijection_check, TelescopingInstance,
};
use crate::watson::{
    watson_verify_identity, watson_verify_rr, watson_verify_schur, WatsonInstance,
};

const DEFAULT_Q_ORDER: usize = 30;
const DEFAULT_A_ORDER: usize = 12;

#[derive(Parser)]
#[command(
    name = "qtelescope",
    version,
    about = "Exact verification of combinatorial telescoping proofs of q-series identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit the report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Identity {
    Gauss,
    Watson,
    Schur,
    Rr1,
    Rr2,
    Sylvester,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum InstanceName {
    Gauss,
    Watson,
    Sylvester,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Family {
    Watson,
    Sylvester,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum SeriesName {
    WatsonLhs,
    WatsonRhs,
    SylvesterLhs,
    SchurBilateral,
    Rr1Sum,
    Rr1Product,
    Rr2Sum,
    Rr2Product,
    GaussLhs,
    GaussRhs,
}

#[derive(Subcommand)]
enum Command {
    /// Check an identity coefficientwise at the given truncation orders.
    Verify {
        identity: Identity,
        #[arg(long, default_value_t = DEFAULT_Q_ORDER)]
        q_order: usize,
        /// Row truncation order (watson and sylvester only).
        #[arg(long)]
        a_order: Option<usize>,
        /// Check a single n (gauss only).
        #[arg(long)]
        n: Option<usize>,
        /// Check n = 0..=n_max (gauss only; default 10).
        #[arg(long)]
        n_max: Option<usize>,
    },
    /// Exhaustively check the cell maps on weight slices.
    CheckBijection {
        instance: InstanceName,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Largest k to check (default: every k the slice can reach).
        #[arg(long)]
        k_max: Option<usize>,
        #[arg(long, default_value_t = 14)]
        max_weight: usize,
    },
    /// Check the per-cell relation f(k) = g(k) + h(k) + h(k+1) by enumeration.
    CheckTelescoping {
        instance: InstanceName,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Row truncation order (watson and sylvester only).
        #[arg(long)]
        a_order: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_Q_ORDER)]
        q_order: usize,
    },
    /// Build the sign-reversing involution and check the complement bijection.
    CheckInvolution {
        instance: InstanceName,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = 14)]
        max_weight: usize,
    },
    /// Check the creative-telescoping certificate relations.
    CheckCertificate {
        family: Family,
        #[arg(long, default_value_t = 6)]
        k_max: usize,
        #[arg(long, default_value_t = DEFAULT_A_ORDER)]
        a_order: usize,
        #[arg(long, default_value_t = DEFAULT_Q_ORDER)]
        q_order: usize,
    },
    /// Print a named series' coefficient grid as JSON.
    Expand {
        name: SeriesName,
        #[arg(long, default_value_t = DEFAULT_Q_ORDER)]
        q_order: usize,
        /// Row truncation order (two-variable series only).
        #[arg(long)]
        a_order: Option<usize>,
        /// The index n (gauss series only).
        #[arg(long)]
        n: Option<usize>,
    },
}

/// Parses the arguments, runs the requested check, writes the report.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(Output::Report(report)) => {
            let rendered = if cli.json {
                serde_json::to_string_pretty(&report).expect("reports serialize")
            } else {
                report.to_string()
            };
            if write_output(&cli.output, &rendered).is_err() {
                return 2;
            }
            i32::from(!report.ok())
        }
        Ok(Output::Series(series)) => {
            let rendered = serde_json::to_string_pretty(&series).expect("series serialize");
            if write_output(&cli.output, &rendered).is_err() {
                return 2;
            }
            0
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

enum Output {
    Report(VerificationReport),
    Series(AQSeries),
}

fn write_output(path: &Option<PathBuf>, rendered: &str) -> Result<(), ()> {
    match path {
        Some(p) => std::fs::write(p, format!("{rendered}\n")).map_err(|e| {
            eprintln!("error: cannot write {}: {e}", p.display());
        }),
        None => {
            println!("{rendered}");
            Ok(())
        }
    }
}

fn execute(command: &Command) -> Result<Output, String> {
    match *command {
        Command::Verify { identity, q_order, a_order, n, n_max } => {
            if identity != Identity::Gauss && (n.is_some() || n_max.is_some()) {
                return Err("--n and --n-max apply only to gauss".into());
            }
            if a_order.is_some() && !matches!(identity, Identity::Watson | Identity::Sylvester) {
                return Err("--a-order applies only to watson and sylvester".into());
            }
            let report = match identity {
                Identity::Gauss => {
                    let range = match (n, n_max) {
                        (Some(_), Some(_)) => return Err("use either --n or --n-max".into()),
                        (Some(n), None) => n..=n,
                        (None, m) => 0..=m.unwrap_or(10),
                    };
                    gauss_verify_identity_range(range, q_order)
                }
                Identity::Watson => {
                    watson_verify_identity(a_order.unwrap_or(DEFAULT_A_ORDER), q_order)
                }
                Identity::Schur => watson_verify_schur(q_order),
                Identity::Rr1 => watson_verify_rr(1, q_order),
                Identity::Rr2 => watson_verify_rr(2, q_order),
                Identity::Sylvester => {
                    sylvester_verify_identity(a_order.unwrap_or(DEFAULT_A_ORDER), q_order)
                }
            };
            Ok(Output::Report(report))
        }
        Command::CheckBijection { instance, n_max, k_max, max_weight } => {
            let options = serde_json::json!({
                "n_max": n_max, "k_max": k_max, "max_weight": max_weight,
            });
            let cells = match instance {
                InstanceName::Gauss => bijection_cells(&GaussInstance, n_max, k_max, max_weight),
                InstanceName::Watson => bijection_cells(&WatsonInstance, n_max, k_max, max_weight),
                InstanceName::Sylvester => {
                    bijection_cells(&SylvesterInstance, n_max, k_max, max_weight)
                }
            };
            Ok(Output::Report(VerificationReport::new(
                "check-bijection",
                instance_name(instance),
                options,
                cells,
            )))
        }
        Command::CheckTelescoping { instance, n_max, a_order, q_order } => {
            if a_order.is_some() && instance == InstanceName::Gauss {
                return Err("--a-order applies only to watson and sylvester".into());
            }
            let a = a_order.unwrap_or(DEFAULT_A_ORDER);
            let options = serde_json::json!({
                "n_max": n_max, "a_order": a, "q_order": q_order,
            });
            let cells = match instance {
                InstanceName::Gauss => telescoping_cells(&GaussInstance, n_max, 0, q_order),
                InstanceName::Watson => telescoping_cells(&WatsonInstance, n_max, a, q_order),
                InstanceName::Sylvester => telescoping_cells(&SylvesterInstance, n_max, a, q_order),
            };
            Ok(Output::Report(VerificationReport::new(
                "check-telescoping",
                instance_name(instance),
                options,
                cells,
            )))
        }
        Command::CheckInvolution { instance, n_max, max_weight } => {
            let options = serde_json::json!({"n_max": n_max, "max_weight": max_weight});
            let cells = match instance {
                InstanceName::Gauss => involution_cells(&GaussInstance, n_max, max_weight),
                InstanceName::Watson => involution_cells(&WatsonInstance, n_max, max_weight),
                InstanceName::Sylvester => involution_cells(&SylvesterInstance, n_max, max_weight),
            };
            Ok(Output::Report(VerificationReport::new(
                "check-involution",
                instance_name(instance),
                options,
                cells,
            )))
        }
        Command::CheckCertificate { family, k_max, a_order, q_order } => {
            let check = match family {
                Family::Watson => verify_watson_certificate(k_max, a_order, q_order),
                Family::Sylvester => verify_sylvester_certificate(k_max, a_order, q_order),
            };
            Ok(Output::Report(check.into_report()))
        }
        Command::Expand { name, q_order, a_order, n } => {
            let gauss = matches!(name, SeriesName::GaussLhs | SeriesName::GaussRhs);
            if gauss && n.is_none() {
                return Err("gauss series need --n".into());
            }
            if !gauss && n.is_some() {
                return Err("--n applies only to the gauss series".into());
            }
            let bivariate = matches!(
                name,
                SeriesName::WatsonLhs | SeriesName::WatsonRhs | SeriesName::SylvesterLhs
            );
            if a_order.is_some() && !bivariate {
                return Err("--a-order applies only to two-variable series".into());
            }
            let a = a_order.unwrap_or(DEFAULT_A_ORDER);
            let series = match name {
                SeriesName::WatsonLhs => watson_lhs(a, q_order),
                SeriesName::WatsonRhs => watson_rhs(a, q_order),
                SeriesName::SylvesterLhs => sylvester_lhs(a, q_order),
                SeriesName::SchurBilateral => AQSeries::from_q(schur_bilateral(q_order), 0),
                SeriesName::Rr1Sum => AQSeries::from_q(rr_sum(1, q_order), 0),
                SeriesName::Rr1Product => AQSeries::from_q(rr_product(1, q_order), 0),
                SeriesName::Rr2Sum => AQSeries::from_q(rr_sum(2, q_order), 0),
                SeriesName::Rr2Product => AQSeries::from_q(rr_product(2, q_order), 0),
                SeriesName::GaussLhs => {
                    AQSeries::from_q(gauss_sum(n.expect("validated"), q_order), 0)
                }
                SeriesName::GaussRhs => {
                    AQSeries::from_q(gauss_closed_form(n.expect("validated"), q_order), 0)
                }
            };
            Ok(Output::Series(series))
        }
    }
}

fn instance_name(instance: InstanceName) -> &'static str {
    match instance {
        InstanceName::Gauss => "gauss",
        InstanceName::Watson => "watson",
        InstanceName::Sylvester => "sylvester",
    }
}

fn bijection_cells<I: TelescopingInstance>(
    inst: &I,
    n_max: usize,
    k_max: Option<usize>,
    max_weight: usize,
) -> Vec<CellRecord> {
    let mut cells = Vec::new();
    for n in 1..=n_max {
        let hi = inst.k_bound(n, max_weight).min(k_max.unwrap_or(usize::MAX));
        for k in 0..=hi {
            cells.push(check_cell(inst, n, k, max_weight));
        }
    }
    cells
}

fn telescoping_cells<I: TelescopingInstance>(
    inst: &I,
    n_max: usize,
    a_order: usize,
    q_order: usize,
) -> Vec<CellRecord> {
    (1..=n_max).flat_map(|n| check_telescoping(inst, n, a_order, q_order)).collect()
}

fn involution_cells<I: TelescopingInstance>(
    inst: &I,
    n_max: usize,
    max_weight: usize,
) -> Vec<CellRecord> {
    let mut cells = Vec::new();
    for n in 1..=n_max {
        let (_, pairing) = build_involution(inst, n, max_weight);
        let complement = global_bijection_check(inst, n, max_weight);
        // the two passes cover the same (n, k) grid; merge their findings
        let mut merged = pairing;
        for record in complement {
            if let Some(cell) = merged
                .iter_mut()
                .find(|c| c.n == record.n && c.k == record.k)
            {
                cell.failures.extend(record.failures);
            } else {
                merged.push(record);
            }
        }
        cells.extend(merged);
    }
    cells
}
