//! Command line front end: Betti tables of complexes from JSON files, bound
//! reports, generation of the example families, and the linear-strand
//! domination scan.
//!
//! Exit codes: 0 success, 2 parse or invalid-parameter failure, 3
//! enumeration cap exceeded, 4 hypothesis verification failure, 5 empty
//! construction pool. IO failures exit 1.

mod report;
mod scan;

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use balbetti::complex::{
    clique_complex_multipartite, cone_points_join, cross_polytope_boundary,
    stacked_cross_polytopal, stacked_sphere, GluingPlan,
};
use balbetti::doc::DocMetadata;
use balbetti::hochster::graded_betti;
use balbetti::{BettiTable, ComplexDoc, FieldSpec, GradedBettiOptions, SimplicialComplex};

use report::{render_report, BoundsRequest, Hypothesis};
use scan::{run_scan, ScanParams};

#[derive(Parser)]
#[command(
    name = "balbetti",
    version,
    about = "Exact graded Betti tables of Stanley-Reisner rings, with closed-form bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the graded Betti table of a complex read from a JSON file.
    ///
    /// The table is printed as markdown; with -o PREFIX it is also written
    /// to PREFIX.csv and PREFIX.md. Set BETTI_CACHE_DIR to reuse tables
    /// across runs.
    Betti {
        input: PathBuf,
        /// Coefficient field: gf2, gf<p> for an odd prime p, or qq.
        #[arg(long, default_value = "gf2")]
        field: String,
        /// Compute only strands j <= MAX_J.
        #[arg(long)]
        max_j: Option<usize>,
        /// Cap on the worker threads of the enumeration engine.
        #[arg(long)]
        threads: Option<usize>,
        /// Refuse complexes with more vertices than this.
        #[arg(long, default_value_t = 16)]
        cap: usize,
        /// Artifact prefix: writes PREFIX.csv and PREFIX.md.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compare the actual Betti table against every bound the claimed
    /// hypotheses make applicable.
    Bounds {
        input: PathBuf,
        /// Comma-separated hypotheses to assume: balanced, cm, pseudomanifold.
        #[arg(long, value_delimiter = ',', required = true)]
        assume: Vec<String>,
        /// Record the hypotheses as trusted instead of verifying them.
        #[arg(long)]
        trust: bool,
        /// Coefficient field: gf2, gf<p> for an odd prime p, or qq.
        #[arg(long, default_value = "gf2")]
        field: String,
        /// Refuse complexes with more vertices than this.
        #[arg(long, default_value_t = 16)]
        cap: usize,
        /// Cap on the worker threads of the enumeration engine.
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Generate a member of one of the built-in families as a JSON document.
    ///
    /// Families: cross-stacked (--d, --k, optional --plan/--seed), stacked
    /// (--d, --n), clique (--sizes), cone-join (--n, --d), cross-polytope
    /// (--d).
    Generate {
        family: String,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Comma-separated color class sizes (clique family).
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        /// Gluing plan for cross-stacked: path, star or random.
        #[arg(long)]
        plan: Option<String>,
        /// Seed for randomized gluing; implies --plan random.
        #[arg(long)]
        seed: Option<u64>,
        /// Output file (stdout when omitted).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Sample balanced normal pseudomanifolds on k*d vertices and test
    /// whether the cross-polytopal stacked sphere dominates their linear
    /// Betti strand. A violation is reported verbatim, not treated as an
    /// error.
    ConjectureScan {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Refuse vertex counts above this.
        #[arg(long, default_value_t = 20)]
        cap: usize,
    },
}

pub(crate) enum Failure {
    Io(String),
    Parse(String),
    Cap(String),
    Hypothesis(String),
    EmptyPool(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Io(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Cap(_) => 3,
            Failure::Hypothesis(_) => 4,
            Failure::EmptyPool(_) => 5,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Io(m)
            | Failure::Parse(m)
            | Failure::Cap(m)
            | Failure::Hypothesis(m)
            | Failure::EmptyPool(m) => m,
        }
    }
}

pub(crate) fn core_err(e: balbetti::Error) -> Failure {
    match e {
        balbetti::Error::EnumerationCapExceeded { .. } => Failure::Cap(e.to_string()),
        other => Failure::Parse(other.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Betti {
            input,
            field,
            max_j,
            threads,
            cap,
            output,
        } => cmd_betti(&input, &field, max_j, threads, cap, output.as_deref()),
        Command::Bounds {
            input,
            assume,
            trust,
            field,
            cap,
            threads,
        } => cmd_bounds(&input, &assume, trust, &field, cap, threads),
        Command::Generate {
            family,
            d,
            k,
            n,
            sizes,
            plan,
            seed,
            output,
        } => cmd_generate(&family, d, k, n, &sizes, plan.as_deref(), seed, output.as_deref()),
        Command::ConjectureScan {
            d,
            k,
            samples,
            seed,
            cap,
        } => {
            let text = run_scan(&ScanParams {
                d,
                k,
                samples,
                seed,
                cap,
            })?;
            print!("{text}");
            Ok(())
        }
    }
}

fn load_complex(path: &Path) -> Result<SimplicialComplex, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    let doc = ComplexDoc::from_json(&text)
        .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    doc.to_complex()
        .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn parse_field(s: &str) -> Result<FieldSpec, Failure> {
    s.parse().map_err(|e: balbetti::Error| Failure::Parse(e.to_string()))
}

fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match threads {
        None => f(),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .expect("thread pool")
            .install(f),
    }
}

fn effective_max_j(cx: &SimplicialComplex, requested: Option<usize>) -> usize {
    let full = (cx.dim() + 1) as usize;
    requested.map_or(full, |m| m.min(full))
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h = 0xcbf29ce484222325u64;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

/// Betti table with an optional on-disk cache keyed by the canonical
/// document, the field and the strand range (`BETTI_CACHE_DIR`). A corrupt
/// cache entry is recomputed and overwritten.
pub(crate) fn betti_with_cache(
    cx: &SimplicialComplex,
    field: FieldSpec,
    opts: &GradedBettiOptions,
    threads: Option<usize>,
) -> Result<BettiTable, Failure> {
    let max_j = effective_max_j(cx, opts.max_j);
    let cache_path = std::env::var_os("BETTI_CACHE_DIR").map(|dir| {
        let canonical = ComplexDoc::from_complex(cx).to_json_string();
        let key = fnv1a(format!("{canonical}|{field}|{max_j}").as_bytes());
        PathBuf::from(dir).join(format!("betti-{key:016x}.csv"))
    });
    let full_table = max_j == (cx.dim() + 1) as usize;
    if let Some(path) = &cache_path {
        if let Ok(text) = fs::read_to_string(path) {
            if let Ok(table) = BettiTable::parse_csv(cx.num_vertices(), max_j, &text) {
                let intact = if full_table {
                    table.verify_hilbert_identity(&cx.f_vector())
                } else {
                    table.get(0, 0) == 1
                };
                if intact {
                    return Ok(table);
                }
            }
        }
    }
    let table = with_threads(threads, || graded_betti(cx, field, opts)).map_err(core_err)?;
    if let Some(path) = &cache_path {
        if let Some(parent) = path.parent() {
            let _ = fs::create_dir_all(parent);
        }
        let _ = fs::write(path, table.csv_string());
    }
    Ok(table)
}

fn cmd_betti(
    input: &Path,
    field: &str,
    max_j: Option<usize>,
    threads: Option<usize>,
    cap: usize,
    output: Option<&Path>,
) -> Result<(), Failure> {
    let cx = load_complex(input)?;
    let field = parse_field(field)?;
    let opts = GradedBettiOptions { max_j, cap };
    let table = betti_with_cache(&cx, field, &opts, threads)?;
    print!("{}", table.markdown_string());
    if let Some(prefix) = output {
        let csv_path = PathBuf::from(format!("{}.csv", prefix.display()));
        let md_path = PathBuf::from(format!("{}.md", prefix.display()));
        for path in [&csv_path, &md_path] {
            if let Some(parent) = path.parent() {
                if !parent.as_os_str().is_empty() {
                    fs::create_dir_all(parent)
                        .map_err(|e| Failure::Io(format!("{}: {e}", parent.display())))?;
                }
            }
        }
        fs::write(&csv_path, table.csv_string())
            .map_err(|e| Failure::Io(format!("{}: {e}", csv_path.display())))?;
        fs::write(&md_path, table.markdown_string())
            .map_err(|e| Failure::Io(format!("{}: {e}", md_path.display())))?;
        eprintln!("wrote {} and {}", csv_path.display(), md_path.display());
    }
    Ok(())
}

fn cmd_bounds(
    input: &Path,
    assume: &[String],
    trust: bool,
    field: &str,
    cap: usize,
    threads: Option<usize>,
) -> Result<(), Failure> {
    let cx = load_complex(input)?;
    let field = parse_field(field)?;
    let mut claimed = BTreeSet::new();
    for tag in assume {
        claimed.insert(Hypothesis::parse(tag)?);
    }
    let id = input
        .file_stem()
        .map_or_else(|| input.display().to_string(), |s| s.to_string_lossy().into_owned());
    let opts = GradedBettiOptions { max_j: None, cap };
    let table = betti_with_cache(&cx, field, &opts, threads)?;
    let request = BoundsRequest {
        cx: &cx,
        table: &table,
        id: &id,
        field,
        claimed: &claimed,
        trust,
    };
    match render_report(&request) {
        Ok(text) => {
            print!("{text}");
            Ok(())
        }
        Err(Failure::Hypothesis(msg)) => {
            print!("# bound report: {id}\n\nreport: inapplicable ({msg})\n");
            Err(Failure::Hypothesis(msg))
        }
        Err(other) => Err(other),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_generate(
    family: &str,
    d: Option<usize>,
    k: Option<usize>,
    n: Option<usize>,
    sizes: &[usize],
    plan: Option<&str>,
    seed: Option<u64>,
    output: Option<&Path>,
) -> Result<(), Failure> {
    let need = |flag: &str| Failure::Parse(format!("family '{family}' needs --{flag}"));
    let mut used_seed = None;
    let (cx, params) = match family {
        "clique" => {
            if sizes.is_empty() {
                return Err(need("sizes"));
            }
            let cx = clique_complex_multipartite(sizes).map_err(core_err)?;
            (cx, serde_json::json!({ "sizes": sizes }))
        }
        "cross-stacked" => {
            let d = d.ok_or_else(|| need("d"))?;
            let k = k.ok_or_else(|| need("k"))?;
            let (gluing, plan_name) = match plan {
                Some("path") => (GluingPlan::Path, "path"),
                Some("star") => (GluingPlan::Star, "star"),
                Some("random") | None if seed.is_some() => {
                    let s = seed.expect("checked");
                    used_seed = Some(s);
                    (GluingPlan::Random { seed: s }, "random")
                }
                Some("random") => {
                    return Err(Failure::Parse(
                        "plan 'random' needs --seed".into(),
                    ))
                }
                None => (GluingPlan::Path, "path"),
                Some(other) => {
                    return Err(Failure::Parse(format!(
                        "unknown plan '{other}'; expected path, star or random"
                    )))
                }
            };
            let cx = stacked_cross_polytopal(d, k, &gluing).map_err(core_err)?;
            (cx, serde_json::json!({ "d": d, "k": k, "plan": plan_name }))
        }
        "stacked" => {
            let d = d.ok_or_else(|| need("d"))?;
            let n = n.ok_or_else(|| need("n"))?;
            let cx = stacked_sphere(d, n).map_err(core_err)?;
            (cx, serde_json::json!({ "d": d, "n": n }))
        }
        "cone-join" => {
            let n = n.ok_or_else(|| need("n"))?;
            let d = d.ok_or_else(|| need("d"))?;
            let cx = cone_points_join(n, d).map_err(core_err)?;
            (cx, serde_json::json!({ "n": n, "d": d }))
        }
        "cross-polytope" => {
            let d = d.ok_or_else(|| need("d"))?;
            let cx = cross_polytope_boundary(d).map_err(core_err)?;
            (cx, serde_json::json!({ "d": d }))
        }
        other => {
            return Err(Failure::Parse(format!(
                "unknown family '{other}'; expected cross-stacked, stacked, clique, cone-join or cross-polytope"
            )))
        }
    };
    let doc = ComplexDoc::from_complex(&cx).with_metadata(DocMetadata {
        family: Some(family.to_string()),
        seed: used_seed,
        params: Some(params),
    });
    let text = doc.to_json_string();
    match output {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            eprintln!("wrote {}", path.display());
        }
        None => print!("{text}"),
    }
    Ok(())
}
