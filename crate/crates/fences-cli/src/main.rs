//! Command-line front end: rank sequences, shape classification, rowmotion
//! orbit tables and tilings, and the verification campaigns.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fences::closed::{crown_composition, matching_closed_forms, pattern_count};
use fences::extremal::{dominance_scan, extremal_check};
use fences::rank::{verify_identities_up_to, verify_oracle_up_to};
use fences::report::{Report, Severity};
use fences::rowmotion::{
    encode_tiling, orbit_reports, orbits, verify_homomesy_up_to, verify_kappa,
    verify_orbit_theorems, verify_tilings, OrbitFamily,
};
use fences::shape::{
    circular_unimodality_scan, is_log_concave, is_symmetric, is_unimodal, measure_shape,
    predict_shape, verify_circular_symmetry, verify_cyclic_invariance, verify_main_theorem,
    verify_statements_abc, verify_top_deletion,
};
use fences::{circular_fence, rank_poly, Composition, PosetKind};

#[derive(Parser)]
#[command(
    name = "fences",
    version,
    about = "Fence posets: rank polynomials, rowmotion, verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print the rank sequence of a fence (or circular fence) with shape flags
    Rank {
        /// Comma-separated parts, e.g. 2,1,1,3
        composition: String,
        /// Use the circular fence (needs an even number of parts)
        #[arg(long)]
        circular: bool,
        /// Allow a zero first or last part (fence starting with a down step)
        #[arg(long)]
        half_open: bool,
    },
    /// Predicted and measured shape class of a fence rank sequence
    Classify { composition: String },
    /// Rowmotion orbit table of a circular fence
    Orbits {
        composition: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// ASCII tiling of one rowmotion orbit (orbits indexed as in `orbits`)
    Tiling {
        composition: String,
        /// Orbit index, 0-based in (period, representative) order
        index: usize,
    },
    /// Run verification campaigns; exits nonzero on any theorem violation
    Verify {
        #[arg(long, default_value_t = 10)]
        max_size: usize,
        /// Comma-separated check names; defaults to every check
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        /// List available check names and exit
        #[arg(long)]
        list_checks: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads (defaults to all cores)
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Run the conjecture scans; counterexamples are reported, not fatal
    Scan {
        #[arg(long, default_value_t = 10)]
        max_size: usize,
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Closed-form and rowmotion summary tables
    Table {
        #[command(subcommand)]
        which: TableKind,
    },
}

#[derive(Subcommand)]
enum TableKind {
    /// Closed-form rank polynomials for the small patterns
    ClosedForms {
        #[arg(long, default_value_t = 3)]
        max: u32,
    },
    /// Orbit structure of the described rowmotion families
    Rowmotion {
        #[arg(long, default_value_t = 6)]
        max: u32,
    },
}

const THEOREM_CHECKS: &[&str] = &[
    "main-theorem",
    "circular-symmetry",
    "cyclic-invariance",
    "statements-abc",
    "method-identities",
    "oracle",
    "closed-forms",
    "crown-formula",
    "circular-unimodality",
    "top-deletion",
    "tilings",
    "homomesy",
    "kappa",
    "orbit-theorems",
    "extremal",
];

const CONJECTURE_CHECKS: &[&str] = &["circular-unimodality", "dominance"];

fn run_check(name: &str, max_size: usize) -> Option<Report> {
    Some(match name {
        "main-theorem" => verify_main_theorem(max_size),
        "circular-symmetry" => verify_circular_symmetry(max_size),
        "cyclic-invariance" => verify_cyclic_invariance(max_size),
        "statements-abc" => verify_statements_abc(max_size.min(14)),
        "method-identities" => verify_identities_up_to(max_size),
        "oracle" => verify_oracle_up_to(max_size.min(14)),
        "closed-forms" => fences::closed::verify_closed_forms((max_size as u32 / 2).max(2)),
        "crown-formula" => fences::closed::verify_crown((max_size as u32 / 2).max(2), 3),
        "circular-unimodality" => circular_unimodality_scan(max_size),
        "top-deletion" => verify_top_deletion(max_size),
        "tilings" => verify_tilings(max_size.min(14)),
        "homomesy" => verify_homomesy_up_to(max_size.min(12)),
        "kappa" => verify_kappa(max_size.min(14)),
        "orbit-theorems" => {
            let mut merged = Report::new("orbit-theorems");
            let families = [
                OrbitFamily::TwoParts {
                    max: (max_size as u32 / 2).max(1),
                },
                OrbitFamily::AltEqual {
                    lo: 2,
                    hi: ((max_size.saturating_sub(2)) as u32 / 2).max(2),
                },
                OrbitFamily::OneOneA {
                    lo: 1,
                    hi: (max_size.saturating_sub(3) as u32).max(1),
                },
                OrbitFamily::TwoOneA {
                    lo: 2,
                    hi: (max_size.saturating_sub(4) as u32).max(2),
                },
                OrbitFamily::EqualFour {
                    values: (2..=(max_size as u32 / 4).max(2)).collect(),
                },
            ];
            for family in families {
                merged.absorb(verify_orbit_theorems(&family));
            }
            merged.sort();
            merged
        }
        "extremal" => extremal_check(max_size),
        "dominance" => dominance_scan(max_size),
        _ => return None,
    })
}

fn parse_composition(text: &str, half_open: bool) -> Result<Composition, String> {
    let parsed = if half_open {
        Composition::parse_half_open(text)
    } else {
        text.parse()
    };
    parsed.map_err(|e| e.to_string())
}

fn shape_flags(seq: &[fences::BigInt]) -> String {
    let mut flags = Vec::new();
    if is_symmetric(seq) {
        flags.push("symmetric".to_string());
    } else if is_unimodal(seq) {
        flags.push(measure_shape(seq).to_string());
    }
    if !is_unimodal(seq) {
        flags.push("not-unimodal".to_string());
    }
    flags.join(", ")
}

fn emit(reports: &[Report], format: Format, out: Option<&PathBuf>) -> Result<(), String> {
    let text = match format {
        Format::Text => {
            let mut buf = String::new();
            for r in reports {
                write!(buf, "{r}").unwrap();
            }
            let violations: usize = reports.iter().map(|r| r.violations().count()).sum();
            writeln!(
                buf,
                "total: {} checks, {violations} violations",
                reports.len()
            )
            .unwrap();
            buf
        }
        Format::Json => serde_json::to_string_pretty(reports).map_err(|e| e.to_string())? + "\n",
        Format::Csv => {
            let mut buf = String::from("composition,size,kind,check,expected,measured,pass\n");
            for r in reports {
                for f in &r.findings {
                    let pass = f.severity != Severity::TheoremViolation;
                    let fields = [
                        f.composition.clone(),
                        f.size.to_string(),
                        f.kind.clone(),
                        f.check.clone(),
                        f.expected.clone(),
                        f.measured.clone(),
                        pass.to_string(),
                    ];
                    let quoted: Vec<String> = fields
                        .iter()
                        .map(|field| format!("\"{}\"", field.replace('"', "\"\"")))
                        .collect();
                    buf.push_str(&quoted.join(","));
                    buf.push('\n');
                }
            }
            buf
        }
    };
    match out {
        Some(path) => fs::write(path, text).map_err(|e| e.to_string()),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run_campaign(
    max_size: usize,
    requested: &[String],
    defaults: &[&str],
    format: Format,
    out: Option<&PathBuf>,
    jobs: Option<usize>,
) -> Result<bool, String> {
    if let Some(n) = jobs {
        // ignore failure if a pool is already installed
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    let names: Vec<String> = if requested.is_empty() {
        defaults.iter().map(|s| s.to_string()).collect()
    } else {
        requested.to_vec()
    };
    let mut reports = Vec::new();
    for name in &names {
        let report = run_check(name, max_size)
            .ok_or_else(|| format!("unknown check {name:?}; try --list-checks"))?;
        reports.push(report);
    }
    emit(&reports, format, out)?;
    Ok(reports.iter().all(Report::passed))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Rank {
            composition,
            circular,
            half_open,
        } => {
            let alpha = parse_composition(&composition, half_open)?;
            let kind = if circular {
                PosetKind::Circular
            } else {
                PosetKind::Fence
            };
            let poly = rank_poly(&alpha, kind).map_err(|e| e.to_string())?;
            let seq = poly.dense().expect("rank sequences start at q^0");
            let coeffs: Vec<String> = seq.iter().map(|c| c.to_string()).collect();
            println!("{} | {}", coeffs.join(" "), shape_flags(&seq));
            Ok(true)
        }
        Command::Classify { composition } => {
            let alpha = parse_composition(&composition, false)?;
            let poly = rank_poly(&alpha, PosetKind::Fence).map_err(|e| e.to_string())?;
            let seq = poly.dense().unwrap();
            let coeffs: Vec<String> = seq.iter().map(|c| c.to_string()).collect();
            println!(
                "composition {alpha}: predicted {}, measured {}, unimodal {}, log-concave {}",
                predict_shape(&alpha),
                measure_shape(&seq),
                is_unimodal(&seq),
                is_log_concave(&seq),
            );
            println!("rank sequence: {}", coeffs.join(" "));
            Ok(true)
        }
        Command::Orbits {
            composition,
            format,
            out,
        } => {
            let alpha = parse_composition(&composition, false)?;
            let table = orbit_reports(&alpha).map_err(|e| e.to_string())?;
            match format {
                Format::Json => {
                    let text =
                        serde_json::to_string_pretty(&table).map_err(|e| e.to_string())? + "\n";
                    match out {
                        Some(path) => fs::write(path, text).map_err(|e| e.to_string())?,
                        None => print!("{text}"),
                    }
                }
                _ => {
                    println!("orbits of the circular fence of ({alpha}):");
                    println!("{:>6} {:>6} {:>6}  per-row b/w/r", "period", "M", "chi");
                    for row in &table {
                        let rows: Vec<String> = row
                            .per_row
                            .iter()
                            .map(|c| format!("{}/{}/{}", c.b, c.w, c.r))
                            .collect();
                        println!(
                            "{:>6} {:>6} {:>6}  {}",
                            row.period,
                            row.max_total,
                            row.chi,
                            rows.join(" ")
                        );
                    }
                }
            }
            Ok(true)
        }
        Command::Tiling { composition, index } => {
            let alpha = parse_composition(&composition, false)?;
            let poset = circular_fence(&alpha).map_err(|e| e.to_string())?;
            let all = orbits(&poset).map_err(|e| e.to_string())?;
            let orbit = all.get(index).ok_or_else(|| {
                fences::Error::OrbitIndex {
                    index,
                    count: all.len(),
                }
                .to_string()
            })?;
            let tiling = encode_tiling(orbit, &poset).map_err(|e| e.to_string())?;
            print!("{}", tiling.render_ascii());
            Ok(true)
        }
        Command::Verify {
            max_size,
            checks,
            list_checks,
            format,
            out,
            jobs,
        } => {
            if list_checks {
                for name in THEOREM_CHECKS {
                    println!("{name}");
                }
                println!("dominance");
                return Ok(true);
            }
            run_campaign(
                max_size,
                &checks,
                THEOREM_CHECKS,
                format,
                out.as_ref(),
                jobs,
            )
        }
        Command::Scan {
            max_size,
            checks,
            format,
            out,
            jobs,
        } => run_campaign(
            max_size,
            &checks,
            CONJECTURE_CHECKS,
            format,
            out.as_ref(),
            jobs,
        ),
        Command::Table { which } => match which {
            TableKind::ClosedForms { max } => {
                println!("{:<12} {:>6}  rank polynomial", "pattern", "count");
                let mut shown = std::collections::HashSet::new();
                for a in 1..=max {
                    for b in 1..=max {
                        for alpha in [
                            Composition::new(vec![a, b]).ok(),
                            Composition::new(vec![a, 1, b, 1]).ok(),
                            (a == b).then(|| Composition::new(vec![a, a, a, a]).unwrap()),
                        ]
                        .into_iter()
                        .flatten()
                        {
                            if !shown.insert(alpha.to_string()) {
                                continue;
                            }
                            if let Some((pattern, poly)) =
                                matching_closed_forms(&alpha).into_iter().next()
                            {
                                let count = pattern_count(pattern, alpha.parts());
                                let matches = rank_poly(&alpha, PosetKind::Circular)
                                    .map(|r| r == poly)
                                    .unwrap_or(false);
                                println!(
                                    "({alpha:<10}) {count:>6}  {poly} [{}]",
                                    if matches { "ok" } else { "MISMATCH" }
                                );
                            }
                        }
                    }
                }
                let crown = crown_composition(2, 2);
                println!(
                    "crown ({crown}): {}",
                    rank_poly(&crown, PosetKind::Circular).unwrap()
                );
                Ok(true)
            }
            TableKind::Rowmotion { max } => {
                println!("rowmotion orbit structure by family:");
                for a in 1..=max.min(8) {
                    for b in a..=max.min(8) {
                        summarize_family(&Composition::new(vec![a, b]).unwrap())?;
                    }
                }
                for a in 2..=max {
                    summarize_family(&Composition::new(vec![a, 1, a, 1]).unwrap())?;
                }
                for a in 1..=max {
                    summarize_family(&Composition::new(vec![1, 1, a, 1]).unwrap())?;
                    summarize_family(&Composition::new(vec![2, 1, a, 1]).unwrap())?;
                }
                for a in 2..=max.min(3) {
                    summarize_family(&Composition::new(vec![a, a, a, a]).unwrap())?;
                }
                Ok(true)
            }
        },
    }
}

fn summarize_family(alpha: &Composition) -> Result<(), String> {
    let reports = orbit_reports(alpha).map_err(|e| e.to_string())?;
    let mut by_class: std::collections::BTreeMap<(usize, u64, u64), usize> =
        std::collections::BTreeMap::new();
    for r in &reports {
        *by_class.entry((r.period, r.max_total, r.chi)).or_insert(0) += 1;
    }
    let classes: Vec<String> = by_class
        .iter()
        .map(|((p, m, chi), count)| format!("{count} x (|O|={p}, M={m}, chi={chi})"))
        .collect();
    println!("({alpha}): {}", classes.join(", "));
    Ok(())
}
