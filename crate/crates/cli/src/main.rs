//! `weylstab`: runs exact verification suites and prints a table of checks.
//!
//! Exit codes: 0 when every check passes, 1 when some check fails, 2 on a
//! usage error (bad flags, out-of-range parameters, unwritable JSON path).

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use weylstab::census::{levi_factor, pi_systems};
use weylstab::realforms::enumerate_real_forms;
use weylstab::roots::{CartanType, Family, RootSystem, Weight};
use weylstab::suite::{self, Check, Report, DEFAULT_MAX_N};
use weylstab::weyl::TensorKind;

#[derive(Parser, Debug)]
#[command(
    name = "weylstab",
    version,
    about = "Exact checks of stabilizers of Weyl-type curvature tensors"
)]
struct Cli {
    /// Also write the report as JSON (sorted keys, exact rationals as strings).
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Record wall time per check in milliseconds. Reports are no longer
    /// byte-reproducible.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Chain of checks behind the Riemannian or Lorentzian bound at dimension n.
    Report {
        #[arg(value_enum)]
        case: ReportCase,
        #[arg(long)]
        n: usize,
    },
    /// Enumerate subalgebras of a root system.
    Enumerate {
        #[command(subcommand)]
        what: Enumerate,
    },
    /// Levi factor of the maximal parabolic crossing one node.
    Levi {
        #[command(flatten)]
        ty: TypeArgs,
        /// Crossed node, 1-based.
        #[arg(long)]
        cross: usize,
    },
    /// Dimension of an irreducible representation.
    IrrepDim {
        #[command(flatten)]
        ty: TypeArgs,
        #[command(flatten)]
        weight: WeightArgs,
    },
    /// Orthogonal, symplectic or not self-dual.
    RepType {
        #[command(flatten)]
        ty: TypeArgs,
        #[command(flatten)]
        weight: WeightArgs,
    },
    /// Stabilizer up to scale of one of the model tensors.
    Stabilizer {
        #[arg(long, value_parser = parse_tensor)]
        tensor: TensorKind,
        #[arg(long)]
        n: usize,
        /// Signature as p,q; must be the one the tensor is defined in.
        #[arg(long, value_parser = parse_signature)]
        signature: Option<(usize, usize)>,
    },
    /// Real forms of so(2l, C) and gl(l, C) cut out by the involution families.
    Realforms {
        #[arg(long)]
        rank: usize,
    },
    /// Every acceptance criterion up to dimension max-n.
    All {
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
}

#[derive(Subcommand, Debug)]
enum Enumerate {
    /// Maximal regular reductive subalgebras via pi-systems.
    Regular {
        #[command(flatten)]
        ty: TypeArgs,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportCase {
    Riemannian,
    Lorentzian,
}

#[derive(Args, Debug)]
struct TypeArgs {
    /// Family letter (A-G); a rank suffix such as G2 must agree with --rank.
    #[arg(long = "type", value_name = "T")]
    family: String,
    #[arg(long)]
    rank: usize,
}

#[derive(Args, Debug)]
struct WeightArgs {
    /// Coordinates r1,...,rL in the fundamental weights.
    #[arg(
        long,
        value_delimiter = ',',
        allow_negative_numbers = true,
        required = true
    )]
    weight: Vec<i64>,
}

fn parse_tensor(s: &str) -> Result<TensorKind, String> {
    s.parse().map_err(|e: weylstab::Error| {
        let names: Vec<String> = TensorKind::ALL.iter().map(|k| k.to_string()).collect();
        format!("{e}; expected one of {}", names.join(", "))
    })
}

fn parse_signature(s: &str) -> Result<(usize, usize), String> {
    let bad = || format!("signature must look like p,q, got {s:?}");
    let (p, q) = s.split_once(',').ok_or_else(bad)?;
    Ok((
        p.trim().parse().map_err(|_| bad())?,
        q.trim().parse().map_err(|_| bad())?,
    ))
}

impl TypeArgs {
    fn cartan(&self) -> Result<CartanType, String> {
        let s = self.family.trim();
        let mut chars = s.chars();
        let letter = chars.next().ok_or("empty --type")?;
        let rest = chars.as_str();
        if !rest.is_empty() && rest.parse::<usize>().ok() != Some(self.rank) {
            return Err(format!("--type {s} disagrees with --rank {}", self.rank));
        }
        let family = match letter.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return Err(format!("unknown type {s:?}")),
        };
        CartanType::new(family, self.rank).map_err(|e| e.to_string())
    }
}

/// Checks plus any listing printed above the table.
struct Plan {
    preface: String,
    checks: Vec<Check>,
    /// Per-criterion (number, title, check count) for `all`.
    sections: Vec<(usize, &'static str, usize)>,
}

impl Plan {
    fn checks(checks: Vec<Check>) -> Plan {
        Plan {
            preface: String::new(),
            checks,
            sections: Vec::new(),
        }
    }
}

fn usage<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn plan(cmd: &Command) -> Result<Plan, String> {
    match cmd {
        Command::Report { case, n } => {
            warn_large(*n);
            let checks = match case {
                ReportCase::Riemannian => suite::riemannian_report(*n),
                ReportCase::Lorentzian => suite::lorentzian_report(*n),
            };
            Ok(Plan::checks(checks.map_err(usage)?))
        }
        Command::Enumerate {
            what: Enumerate::Regular { ty },
        } => {
            let ty = ty.cartan()?;
            let mut preface = String::new();
            for p in pi_systems(&RootSystem::new(ty)) {
                let _ = writeln!(
                    preface,
                    "k={}  type {:?}  mark {}  {}  dim {}",
                    p.k,
                    p.kind,
                    p.mark,
                    p.descriptor.label(),
                    p.descriptor.dim
                );
            }
            preface.push('\n');
            Ok(Plan {
                preface,
                checks: suite::enumerate_regular_checks(ty).map_err(usage)?,
                sections: Vec::new(),
            })
        }
        Command::Levi { ty, cross } => {
            let ty = ty.cartan()?;
            let d = levi_factor(ty, *cross).map_err(usage)?;
            let preface = format!("levi({ty}, k={cross}) = {}  dim {}\n\n", d.label(), d.dim);
            Ok(Plan {
                preface,
                checks: suite::levi_checks(ty, *cross).map_err(usage)?,
                sections: Vec::new(),
            })
        }
        Command::IrrepDim { ty, weight } => {
            let checks = suite::irrep_dim_checks(ty.cartan()?, Weight(weight.weight.clone()))
                .map_err(usage)?;
            Ok(Plan::checks(checks))
        }
        Command::RepType { ty, weight } => {
            let checks = suite::rep_type_checks(ty.cartan()?, Weight(weight.weight.clone()))
                .map_err(usage)?;
            Ok(Plan::checks(checks))
        }
        Command::Stabilizer {
            tensor,
            n,
            signature,
        } => {
            warn_large(*n);
            let form = tensor.natural_form(*n).map_err(usage)?;
            if let Some((p, q)) = *signature {
                let (fp, fq) = form.signature();
                if (p, q) != (fp, fq) && (q, p) != (fp, fq) {
                    return Err(format!(
                        "{tensor} at n={n} is defined in signature {fp},{fq}, not {p},{q}"
                    ));
                }
            }
            Ok(Plan::checks(
                suite::stabilizer_checks(*tensor, *n).map_err(usage)?,
            ))
        }
        Command::Realforms { rank } => {
            let table = enumerate_real_forms(*rank).map_err(usage)?;
            let mut preface = String::new();
            for p in &table.pairs {
                let _ = writeln!(
                    preface,
                    "{:<10} {:<18} {}",
                    p.ambient,
                    p.subalgebra,
                    p.families.join(" ")
                );
            }
            let _ = writeln!(preface, "lorentzian: {}\n", table.lorentzian);
            Ok(Plan {
                preface,
                checks: suite::realforms_checks(*rank).map_err(usage)?,
                sections: Vec::new(),
            })
        }
        Command::All { max_n } => {
            if *max_n > DEFAULT_MAX_N {
                eprintln!("warning: --max-n {max_n} exceeds {DEFAULT_MAX_N}; Weyl spaces grow like n^4 and runtime accordingly");
            }
            let mut checks = Vec::new();
            let mut sections = Vec::new();
            for c in suite::acceptance(*max_n).map_err(usage)? {
                sections.push((c.number, c.title, c.checks.len()));
                checks.extend(c.checks);
            }
            Ok(Plan {
                preface: String::new(),
                checks,
                sections,
            })
        }
    }
}

fn warn_large(n: usize) {
    if n > DEFAULT_MAX_N {
        eprintln!("warning: n = {n} exceeds {DEFAULT_MAX_N}; expect long runtimes");
    }
}

fn summary(report: &Report, sections: &[(usize, &str, usize)]) -> String {
    let mut out = String::from("\n");
    let mut start = 0;
    for &(number, title, count) in sections {
        let slice = &report.results[start..start + count];
        start += count;
        let passed = slice.iter().filter(|r| r.pass).count();
        let status = if passed == count { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "criterion {number:>2} {title:<32} {status} ({passed}/{count})"
        );
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let plan = match plan(&cli.command) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let report = match suite::run_checks(&plan.checks, cli.timings) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    print!("{}{}", plan.preface, report.to_table());
    if !plan.sections.is_empty() {
        print!("{}", summary(&report, &plan.sections));
    }
    if let Some(path) = &cli.json {
        if let Err(e) = std::fs::write(path, report.to_json()) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
