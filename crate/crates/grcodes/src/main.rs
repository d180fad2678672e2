//! Thin command-line front end over the library.
//!
//! Every subcommand prints machine-readable JSON on stdout (`search` prints
//! one JSON object per line) and a short human summary on stderr, which
//! `--json-only` suppresses. Exit codes: 0 on success, 2 for malformed input,
//! 3 when a self-orthogonality certificate fails, 4 when an enumeration
//! exceeds its budget.

use clap::{Args, Parser, Subcommand};
use grcodes::code::{DistanceOptions, LinearCode, Metric};
use grcodes::error::Error;
use grcodes::group::GroupTable;
use grcodes::ortho::{self, CertKind};
use grcodes::search::{run_search, SearchConfig, SearchKind, SearchMode};
use grcodes::{parse_bivar, parse_element, parse_field, parse_group, report};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

#[derive(Parser)]
#[command(
    name = "grcodes",
    version,
    about = "Linear and quantum error-correcting codes from group ring elements"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Output {
    /// Print only the JSON on stdout; no summary on stderr.
    #[arg(long)]
    json_only: bool,
}

#[derive(Args)]
struct DistanceArgs {
    /// Largest codeword count an exact minimum-distance scan may enumerate;
    /// also the sample count for the randomized fallback on larger codes.
    #[arg(long, default_value_t = 1 << 20)]
    distance_budget: u64,

    /// Seed for randomized distance estimation (and candidate sampling in
    /// `search --mode random`).
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl DistanceArgs {
    fn options(&self) -> DistanceOptions {
        DistanceOptions {
            budget: self.distance_budget as u128,
            fallback_samples: Some(self.distance_budget),
            seed: self.seed,
            early_stop: None,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Build the linear code generated by the matrix image of a group ring
    /// element and report its parameters.
    Code {
        /// Field, e.g. GF(2), GF(3), GF(3^2), GF(3^2;modulus=2,2,1).
        #[arg(long)]
        field: String,
        /// Group, e.g. C15, D5:form=f2, Q8, C5xC3:inner=2, C5sd2C4.
        #[arg(long)]
        group: String,
        /// Group ring element, e.g. "1 + a + w2*a2b".
        #[arg(long)]
        element: String,
        #[command(flatten)]
        dist: DistanceArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Check a self-orthogonality certificate and derive the stabilizer code
    /// it certifies.
    Qecc {
        /// Field, e.g. GF(2), GF(3), GF(3^2), GF(3^2;modulus=2,2,1).
        #[arg(long)]
        field: String,
        /// Group, e.g. C15, D5:form=f2, Q8, C5xC3:inner=2, C5sd2C4.
        #[arg(long)]
        group: String,
        /// euclidean | euclidean-corollary | hermitian | symplectic | symplectic-pair.
        #[arg(long)]
        kind: CertKind,
        #[arg(long)]
        element: String,
        /// Second element, required by (and only by) symplectic-pair.
        #[arg(long)]
        element_b: Option<String>,
        #[command(flatten)]
        dist: DistanceArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Analyze the two-dimensional cyclic code cut out by a bivariate divisor
    /// of (x^l - 1)(y^m - 1).
    Twod {
        /// Field size (a prime power).
        #[arg(long)]
        q: u64,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        m: u32,
        /// Bivariate generator polynomial, e.g. "x4y4 + x3 + y2 + 1".
        #[arg(long)]
        g: String,
        #[command(flatten)]
        dist: DistanceArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Enumerate or sample group ring elements, keep those whose certificate
    /// holds, and emit one JSON record per surviving code.
    Search {
        /// Field, e.g. GF(2), GF(3), GF(3^2), GF(3^2;modulus=2,2,1).
        #[arg(long)]
        field: String,
        /// Group, e.g. C15, D5:form=f2, Q8, C5xC3:inner=2, C5sd2C4.
        #[arg(long)]
        group: String,
        /// euclidean | hermitian | symplectic | symplectic-pair.
        #[arg(long)]
        kind: SearchKind,
        /// exhaustive-by-weight | random.
        #[arg(long, default_value = "exhaustive-by-weight")]
        mode: SearchMode,
        /// Largest support weight a candidate may have.
        #[arg(long, default_value_t = 4)]
        max_weight: usize,
        /// Candidate-count cap: exhaustive enumeration must fit under it,
        /// random mode draws exactly this many candidates.
        #[arg(long, default_value_t = 1 << 16)]
        budget: u64,
        #[command(flatten)]
        dist: DistanceArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Print the structure of a finite field: modulus, element literals, and
    /// (for small fields) full addition and multiplication tables.
    FieldTable {
        #[arg(long)]
        field: String,
        #[command(flatten)]
        out: Output,
    },
    /// Print the structure of a group listing: words, inverses, generator
    /// orders, and (for small groups) the full Cayley table.
    GroupTable {
        #[arg(long)]
        group: String,
        #[command(flatten)]
        out: Output,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::CertificateFailed { .. } => ExitCode::from(3),
                Error::BudgetExceeded { .. } => ExitCode::from(4),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(cmd: Cmd) -> Result<ExitCode, Error> {
    match cmd {
        Cmd::Code { field, group, element, dist, out } => {
            let f = parse_field(&field)?;
            let g = Arc::new(GroupTable::build(&parse_group(&group)?)?);
            let a = parse_element(&f, &g, &element)?;
            let code = LinearCode::from_group_ring(&a);
            let params = code.params(Metric::Hamming, &dist.options())?;
            emit(&report::code_report(&a, &params, code.generator()));
            if !out.json_only {
                eprintln!(
                    "[{}, {}, {}]{} over {} from {}",
                    params.length,
                    params.dimension,
                    params.distance,
                    if params.distance_exact { "" } else { " (distance is an upper bound)" },
                    f,
                    g.spec(),
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Qecc { field, group, kind, element, element_b, dist, out } => {
            let f = parse_field(&field)?;
            let g = Arc::new(GroupTable::build(&parse_group(&group)?)?);
            let a = parse_element(&f, &g, &element)?;
            let b = match (&element_b, kind) {
                (Some(s), CertKind::SymplecticPair) => Some(parse_element(&f, &g, s)?),
                (None, CertKind::SymplecticPair) => {
                    return Err(Error::Parse {
                        pos: 0,
                        message: "symplectic-pair needs --element-b".into(),
                    })
                }
                (Some(_), _) => {
                    return Err(Error::Parse {
                        pos: 0,
                        message: format!("--element-b is only meaningful with --kind symplectic-pair, not {kind}"),
                    })
                }
                (None, _) => None,
            };
            let cert = match kind {
                CertKind::Euclidean => ortho::check_euclidean(&a),
                CertKind::EuclideanCorollary => ortho::check_euclidean_corollary(&a),
                CertKind::Hermitian => ortho::check_hermitian(&a)?,
                CertKind::SymplecticMatrix => ortho::check_symplectic_matrix(&a)?,
                CertKind::SymplecticPair => {
                    ortho::check_symplectic_pair(&a, b.as_ref().expect("checked above"))?
                }
            };
            if !cert.holds {
                emit(&report::qecc_failure_report(&a, b.as_ref(), &cert));
                if !out.json_only {
                    eprintln!(
                        "certificate {} fails with {} nonzero residual entries",
                        cert.kind.name(),
                        cert.residual,
                    );
                }
                return Ok(ExitCode::from(3));
            }
            let derivation = ortho::derive(kind, &a, b.as_ref(), &dist.options())?;
            let q = &derivation.quantum;
            emit(&report::qecc_report(&a, b.as_ref(), &derivation));
            if !out.json_only {
                eprintln!(
                    "[[{}, {}, {}]]_{}{} via {} from [{}, {}, {}] over {}",
                    q.length,
                    q.dimension,
                    q.distance,
                    q.base,
                    if q.distance_exact { "" } else { " (distance is an upper bound)" },
                    q.construction.name(),
                    derivation.classical.length,
                    derivation.classical.dimension,
                    derivation.classical.distance,
                    f,
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Twod { q, l, m, g, dist, out } => {
            let f = parse_field(&format!("GF({q})"))?;
            let poly = parse_bivar(&f, &g)?;
            let value = report::twod_report(&f, l, m, &poly, &dist.options())?;
            emit(&value);
            if !out.json_only {
                if value["divides"] == serde_json::Value::Bool(false) {
                    eprintln!("{} does not divide {}", value["g"], value["F"]);
                } else {
                    eprintln!(
                        "C {} Cstar {} dual_containing {} self_orthogonal {}",
                        value["C"], value["Cstar"], value["dual_containing"], value["self_orthogonal"],
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Search { field, group, kind, mode, max_weight, budget, dist, out } => {
            let started = Instant::now();
            let config = SearchConfig {
                field,
                group,
                kind,
                mode,
                max_support_weight: max_weight,
                seed: dist.seed,
                budget,
                distance_budget: dist.distance_budget,
            };
            if !out.json_only {
                let stamp = SystemTime::now()
                    .duration_since(UNIX_EPOCH)
                    .map(|d| d.as_secs())
                    .unwrap_or(0);
                eprintln!("search {} started at unix:{stamp}", config.hash());
            }
            let records = run_search(&config)?;
            print!("{}", grcodes::to_jsonl(&records));
            if !out.json_only {
                eprintln!(
                    "{} record(s) in {} ms",
                    records.len(),
                    started.elapsed().as_millis(),
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::FieldTable { field, out } => {
            let f = parse_field(&field)?;
            emit(&report::field_table_report(&f));
            if !out.json_only {
                eprintln!("GF({}) = GF({}^{})", f.q(), f.p(), f.k());
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::GroupTable { group, out } => {
            let g = GroupTable::build(&parse_group(&group)?)?;
            emit(&report::group_table_report(&g));
            if !out.json_only {
                eprintln!("{} of order {}", g.spec(), g.order());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn emit(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("reports serialize"));
}
