//! Command line front end for the superalg library.
//!
//! Subcommands: `catalog` exports a ready-made algebra as a document,
//! `check` sweeps a graded identity over a documented algebra, `center`
//! computes the even/odd center basis, `simple` probes for proper nonzero
//! ideals, `verify-proofs` evaluates the registry of recorded identity
//! cases over a chosen field, and `discrepancies` lists the records that
//! only hold after a correction.
//!
//! Every command that checks something emits a JSON run report (to stdout,
//! or to the file given with `--report`) matching `schema/run-report.json`.
//! Exit codes: 0 all checks passed, 1 a check failed (the report carries
//! the witnesses), 2 usage or input error.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};

use superalg::catalog::{self, FamilyArgs};
use superalg::center;
use superalg::dsl;
use superalg::ideals::{self, SimplicityVerdict};
use superalg::identity::{self, IdentitySpec};
use superalg::proofs::{self, registry, RecordStatus};
use superalg::scalar::specialization_assignment;
use superalg::SuperAlgebra;

#[derive(Parser)]
#[command(
    name = "algdl",
    version,
    about = "Exact superalgebra toolbox: catalog exports, graded identity checks, \
             centers, simplicity probes, and verification of recorded identity cases"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Export a ready-made algebra as a document
    Catalog {
        /// Family name (for example b12, octonion, jordan-mnm)
        family: String,
        /// Size arguments, KEY=N (for example n=2); repeatable
        #[arg(long = "size", value_name = "K=N", value_parser = parse_size)]
        sizes: Vec<(String, usize)>,
        /// Integer values for otherwise symbolic parameters, KEY=V; repeatable
        #[arg(long = "param", value_name = "K=V", value_parser = parse_value)]
        params: Vec<(String, i64)>,
        /// Override the family's default coefficient characteristic
        #[arg(long = "char", value_name = "P")]
        characteristic: Option<u64>,
        /// Write the document here (otherwise it goes to stdout, with no report)
        #[arg(long, value_name = "FILE")]
        emit: Option<PathBuf>,
    },
    /// Sweep one graded identity over a documented algebra
    Check {
        /// Algebra document
        file: PathBuf,
        /// Identity name: assoc, alt-left, alt-right, supercomm, super-jordan
        #[arg(long)]
        identity: String,
    },
    /// Compute the even/odd basis of the center
    Center {
        /// Algebra document
        file: PathBuf,
        /// Specialize symbolic parameters at seeded nonzero values mod this prime
        #[arg(long, value_name = "PRIME")]
        specialize: Option<u64>,
        /// Seed for the specialization assignment
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Probe for proper nonzero ideals
    Simple {
        /// Algebra document
        file: PathBuf,
        /// Number of random generators to try
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// Seed for the random generators
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Verify the registry of recorded identity cases over a field
    VerifyProofs {
        /// Verify a single case instead of all compatible ones
        #[arg(long, value_name = "ID")]
        case: Option<String>,
        /// Coefficient field
        #[arg(long, value_enum)]
        field: Field,
        /// Write the JSON report here (case summaries then go to stdout)
        #[arg(long, value_name = "FILE")]
        report: Option<PathBuf>,
    },
    /// List every record that fails as quoted, with its correction
    Discrepancies {
        /// Write the JSON report here (the summary line then goes to stdout)
        #[arg(long, value_name = "FILE")]
        report: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Field {
    Gf2,
    Gf3,
    Gf5,
    Q,
}

impl Field {
    fn characteristic(self) -> u64 {
        match self {
            Field::Gf2 => 2,
            Field::Gf3 => 3,
            Field::Gf5 => 5,
            Field::Q => 0,
        }
    }
}

fn parse_size(s: &str) -> Result<(String, usize), String> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| format!("expected KEY=N, got {s:?}"))?;
    let n = v
        .parse()
        .map_err(|_| format!("size {k}: expected a nonnegative integer, got {v:?}"))?;
    Ok((k.to_string(), n))
}

fn parse_value(s: &str) -> Result<(String, i64), String> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| format!("expected KEY=V, got {s:?}"))?;
    let n = v
        .parse()
        .map_err(|_| format!("parameter {k}: expected an integer, got {v:?}"))?;
    Ok((k.to_string(), n))
}

// ---------------------------------------------------------------------------
// Report model (schema/run-report.json)
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct RunReport {
    tool: &'static str,
    version: &'static str,
    command: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    input_digest: Option<String>,
    results: Vec<Entry>,
    exit: u8,
}

impl RunReport {
    fn new(input_digest: Option<String>, results: Vec<Entry>, exit: u8) -> RunReport {
        RunReport {
            tool: "algdl",
            version: env!("CARGO_PKG_VERSION"),
            command: std::env::args().skip(1).collect(),
            input_digest,
            results,
            exit,
        }
    }
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
enum Entry {
    Catalog {
        family: String,
        algebra: String,
        characteristic: u64,
        dimension: usize,
        even: usize,
        odd: usize,
        parameters: Vec<String>,
        #[serde(skip_serializing_if = "Vec::is_empty")]
        notes: Vec<String>,
        emitted: String,
    },
    Identity {
        algebra: String,
        identity: String,
        tuples: u64,
        holds: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        witness: Option<Witness>,
    },
    Center {
        algebra: String,
        convention: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        specialization: Option<Specialization>,
        even: Vec<String>,
        odd: Vec<String>,
    },
    Simplicity {
        algebra: String,
        trials: usize,
        seed: u64,
        verdict: String,
        simple: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        ideal: Option<Ideal>,
        detail: String,
    },
    Case {
        case: String,
        title: String,
        characteristic: u64,
        verbatim: usize,
        emended: usize,
        open: usize,
        settled: bool,
        records: Vec<RecordEntry>,
    },
    Skipped {
        case: String,
        reason: String,
    },
    Discrepancies {
        total: usize,
        resolved: usize,
        open: usize,
        items: Vec<DiscrepancyEntry>,
    },
}

#[derive(Serialize)]
struct Witness {
    names: Vec<String>,
    residual: String,
}

#[derive(Serialize)]
struct Specialization {
    prime: u64,
    seed: u64,
    assignment: BTreeMap<String, u64>,
}

#[derive(Serialize)]
struct Ideal {
    generator: String,
    dimension: usize,
    proper: bool,
}

#[derive(Serialize)]
struct RecordEntry {
    id: String,
    status: &'static str,
    quote: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    residual: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

#[derive(Serialize)]
struct DiscrepancyEntry {
    case: String,
    record: String,
    quote: String,
    residual: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
    resolved: bool,
}

fn status_tag(s: RecordStatus) -> &'static str {
    match s {
        RecordStatus::Verbatim => "verbatim",
        RecordStatus::Emended => "emended",
        RecordStatus::Open => "open",
    }
}

fn sha256_hex(bytes: &[u8]) -> String {
    let mut h = Sha256::new();
    h.update(bytes);
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

fn write_report(report: &RunReport, dest: Option<&PathBuf>) -> Result<(), String> {
    let text = serde_json::to_string_pretty(report).expect("report serializes") + "\n";
    match dest {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

fn load_algebra(file: &PathBuf) -> Result<(SuperAlgebra, String), String> {
    let text = fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))?;
    let a = dsl::parse(&text).map_err(|e| format!("{}: {e}", file.display()))?;
    Ok((a, sha256_hex(text.as_bytes())))
}

fn cmd_catalog(
    family: String,
    sizes: Vec<(String, usize)>,
    params: Vec<(String, i64)>,
    characteristic: Option<u64>,
    emit: Option<PathBuf>,
) -> Result<u8, String> {
    let mut args = FamilyArgs::default();
    args.sizes.extend(sizes);
    args.values.extend(params);
    args.characteristic = characteristic;
    let a = catalog::build_family(&family, &args).map_err(|e| e.to_string())?;
    let text = dsl::serialize(&a);
    let Some(path) = emit else {
        print!("{text}");
        return Ok(0);
    };
    fs::write(&path, &text).map_err(|e| format!("{}: {e}", path.display()))?;
    let notes = if family.starts_with("octonion") {
        catalog::octonion::TABLE_NOTES
            .iter()
            .map(|s| s.to_string())
            .collect()
    } else {
        Vec::new()
    };
    let entry = Entry::Catalog {
        family,
        algebra: a.name().to_string(),
        characteristic: a.ring().characteristic(),
        dimension: a.dim(),
        even: a.even_indices().len(),
        odd: a.odd_indices().len(),
        parameters: a.ring().parameters().to_vec(),
        notes,
        emitted: path.display().to_string(),
    };
    let report = RunReport::new(Some(sha256_hex(text.as_bytes())), vec![entry], 0);
    write_report(&report, None)?;
    Ok(0)
}

fn cmd_check(file: PathBuf, identity: String) -> Result<u8, String> {
    let (a, digest) = load_algebra(&file)?;
    let spec = IdentitySpec::builtin(&identity).ok_or_else(|| {
        let names: Vec<String> = IdentitySpec::builtins()
            .into_iter()
            .map(|s| s.name)
            .collect();
        format!(
            "unknown identity {identity:?}; available: {}",
            names.join(", ")
        )
    })?;
    let sweep = identity::check_identity(&a, &spec).map_err(|e| e.to_string())?;
    let code = u8::from(!sweep.holds());
    let entry = Entry::Identity {
        algebra: sweep.algebra.clone(),
        identity: sweep.identity.clone(),
        tuples: sweep.tuples,
        holds: sweep.holds(),
        witness: sweep.witness.as_ref().map(|w| Witness {
            names: w.names.clone(),
            residual: w.residual.clone(),
        }),
    };
    let report = RunReport::new(Some(digest), vec![entry], code);
    write_report(&report, None)?;
    Ok(code)
}

fn cmd_center(file: PathBuf, specialize: Option<u64>, seed: u64) -> Result<u8, String> {
    let (a, digest) = load_algebra(&file)?;
    let (b, specialization) = match specialize {
        None => (a, None),
        Some(p) => {
            let asg = specialization_assignment(a.ring(), seed, p, true);
            let assignment: BTreeMap<String, u64> = a
                .ring()
                .parameters()
                .iter()
                .cloned()
                .zip(asg.iter().copied())
                .collect();
            let b = a.specialize(p, &asg).map_err(|e| e.to_string())?;
            (
                b,
                Some(Specialization {
                    prime: p,
                    seed,
                    assignment,
                }),
            )
        }
    };
    let basis = center::center(&b).map_err(|e| e.to_string())?;
    let entry = Entry::Center {
        algebra: b.name().to_string(),
        convention: "plain".to_string(),
        specialization,
        even: basis.even_part.iter().map(|e| e.to_string()).collect(),
        odd: basis.odd_part.iter().map(|e| e.to_string()).collect(),
    };
    let report = RunReport::new(Some(digest), vec![entry], 0);
    write_report(&report, None)?;
    Ok(0)
}

fn cmd_simple(file: PathBuf, trials: usize, seed: u64) -> Result<u8, String> {
    let (a, digest) = load_algebra(&file)?;
    let verdict = ideals::simplicity_probe(&a, trials, seed).map_err(|e| e.to_string())?;
    let (code, tag, ideal) = match &verdict {
        SimplicityVerdict::Simple { .. } => (0u8, "simple", None),
        SimplicityVerdict::IdealFound(r) => (
            1,
            "ideal-found",
            Some(Ideal {
                generator: r.generator.to_string(),
                dimension: r.dim(),
                proper: r.is_proper,
            }),
        ),
        SimplicityVerdict::Inconclusive { .. } => (1, "inconclusive", None),
    };
    let entry = Entry::Simplicity {
        algebra: a.name().to_string(),
        trials,
        seed,
        verdict: tag.to_string(),
        simple: verdict.is_simple(),
        ideal,
        detail: verdict.to_string(),
    };
    let report = RunReport::new(Some(digest), vec![entry], code);
    write_report(&report, None)?;
    Ok(code)
}

fn case_entry(run_char: u64, rep: &proofs::CaseReport) -> Entry {
    Entry::Case {
        case: rep.case_id.clone(),
        title: rep.title.clone(),
        characteristic: run_char,
        verbatim: rep.count(RecordStatus::Verbatim),
        emended: rep.count(RecordStatus::Emended),
        open: rep.count(RecordStatus::Open),
        settled: rep.settled(),
        records: rep
            .records
            .iter()
            .map(|r| RecordEntry {
                id: r.id.clone(),
                status: status_tag(r.status),
                quote: r.quote.clone(),
                residual: r.residual.clone(),
                note: r.note.clone(),
            })
            .collect(),
    }
}

fn cmd_verify_proofs(
    case: Option<String>,
    field: Field,
    report_to: Option<PathBuf>,
) -> Result<u8, String> {
    let all = registry::all_cases().map_err(|e| e.to_string())?;
    let selected: Vec<_> = match &case {
        None => all,
        Some(id) => {
            let ids: Vec<&str> = all.iter().map(|c| c.id.as_str()).collect();
            let found = all.iter().position(|c| &c.id == id).ok_or_else(|| {
                format!("unknown case {id:?}; available: {}", ids.join(", "))
            })?;
            vec![all[found].clone()]
        }
    };
    let want = field.characteristic();
    let mut digest_input = String::new();
    let mut entries = Vec::new();
    let mut failed = false;
    for spec in &selected {
        digest_input.push_str(registry::case_text(&spec.id).unwrap_or_default());
        let outcome =
            proofs::case_at_characteristic(spec, want).and_then(|s| proofs::verify_case(&s));
        match outcome {
            Ok(rep) => {
                if !rep.settled() {
                    failed = true;
                }
                if report_to.is_some() {
                    println!("{rep}");
                }
                entries.push(case_entry(want, &rep));
            }
            Err(e) if case.is_some() => {
                return Err(format!("case {}: {e}", spec.id));
            }
            Err(e) => {
                entries.push(Entry::Skipped {
                    case: spec.id.clone(),
                    reason: e.to_string(),
                });
            }
        }
    }
    let code = u8::from(failed);
    let report = RunReport::new(Some(sha256_hex(digest_input.as_bytes())), entries, code);
    write_report(&report, report_to.as_ref())?;
    Ok(code)
}

fn cmd_discrepancies(report_to: Option<PathBuf>) -> Result<u8, String> {
    let all = registry::all_cases().map_err(|e| e.to_string())?;
    let mut digest_input = String::new();
    let mut reports = Vec::new();
    for spec in &all {
        digest_input.push_str(registry::case_text(&spec.id).unwrap_or_default());
        reports.push(proofs::verify_case(spec).map_err(|e| format!("case {}: {e}", spec.id))?);
    }
    let summary = proofs::discrepancy_report(&reports);
    let open = summary.items.iter().filter(|i| !i.resolved).count();
    let code = u8::from(open > 0);
    if report_to.is_some() {
        println!("{summary}");
    }
    let entry = Entry::Discrepancies {
        total: summary.items.len(),
        resolved: summary.items.len() - open,
        open,
        items: summary
            .items
            .into_iter()
            .map(|i| DiscrepancyEntry {
                case: i.case_id,
                record: i.record_id,
                quote: i.quote,
                residual: i.residual,
                note: i.note,
                resolved: i.resolved,
            })
            .collect(),
    };
    let report = RunReport::new(Some(sha256_hex(digest_input.as_bytes())), vec![entry], code);
    write_report(&report, report_to.as_ref())?;
    Ok(code)
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.cmd {
        Cmd::Catalog {
            family,
            sizes,
            params,
            characteristic,
            emit,
        } => cmd_catalog(family, sizes, params, characteristic, emit),
        Cmd::Check { file, identity } => cmd_check(file, identity),
        Cmd::Center {
            file,
            specialize,
            seed,
        } => cmd_center(file, specialize, seed),
        Cmd::Simple { file, trials, seed } => cmd_simple(file, trials, seed),
        Cmd::VerifyProofs {
            case,
            field,
            report,
        } => cmd_verify_proofs(case, field, report),
        Cmd::Discrepancies { report } => cmd_discrepancies(report),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
