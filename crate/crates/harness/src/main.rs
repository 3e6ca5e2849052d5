use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use modlat_core::dimension::profile;
use modlat_core::endo::is_self_projective;
use modlat_core::lattice::{all_submodules, CoindependenceMode};
use modlat_core::ringclass::classify;
use modlat_core::spec::{ModuleSpec, RingSpec};
use modlat_core::supplements::is_weakly_supplemented;
use modlat_core::{Caps, Error, FiniteModule, FiniteRing};
use modlat_harness::corpus::CorpusInput;
use modlat_harness::runner::parse_filter;
use modlat_harness::theorems::{CheckConfig, THEOREMS};
use modlat_harness::{builtin_corpus, load_corpus, read_json, run_verification, HarnessError, RunConfig};
use serde_json::json;

#[derive(Parser)]
#[command(name = "modlat", version, about = "Exhaustive lattice computations on finite rings and modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Ring profile, or the dimension profile of one module.
    Analyze {
        ring: PathBuf,
        #[arg(long)]
        module: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run theorem verifiers over a corpus.
    Verify {
        /// `builtin` or a directory of entry files.
        #[arg(long, default_value = "builtin")]
        corpus: String,
        /// Comma-separated theorem ids, or `all`.
        #[arg(long, default_value = "all")]
        theorems: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Embed full witnesses in the report.
        #[arg(long)]
        witnesses: bool,
        /// Check coindependence over every subset instead of the binding one.
        #[arg(long)]
        audit: bool,
    },
    /// Write the submodule lattice as a DOT Hasse diagram.
    Lattice {
        ring: PathBuf,
        #[arg(long)]
        module: PathBuf,
        #[arg(long)]
        dot: PathBuf,
    },
    /// Version, caps and theorem ids.
    Info,
}

/// Exit 2 for bad input, 1 for failed internal cross-checks.
fn exit_code(err: &HarnessError) -> ExitCode {
    match err {
        HarnessError::Core(Error::Internal(_)) => ExitCode::from(1),
        _ => ExitCode::from(2),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze { ring, module, format } => analyze(&ring, module.as_deref(), format),
        Command::Verify {
            corpus,
            theorems,
            jobs,
            report,
            witnesses,
            audit,
        } => verify(&corpus, &theorems, jobs, report.as_deref(), witnesses, audit),
        Command::Lattice { ring, module, dot } => lattice(&ring, &module, &dot),
        Command::Info => {
            info();
            Ok(ExitCode::SUCCESS)
        }
    };
    result.unwrap_or_else(|err| {
        eprintln!("error: {err}");
        exit_code(&err)
    })
}

fn load(ring: &Path, module: Option<&Path>) -> Result<(FiniteRing, Option<FiniteModule>), HarnessError> {
    let ring: RingSpec = read_json(ring)?;
    let ring = ring.build()?;
    let module = match module {
        Some(path) => {
            let spec: ModuleSpec = read_json(path)?;
            Some(spec.build(&ring)?)
        }
        None => None,
    };
    Ok((ring, module))
}

fn set(members: &[usize]) -> String {
    let inner: Vec<String> = members.iter().map(|m| m.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

fn analyze(ring: &Path, module: Option<&Path>, format: Format) -> Result<ExitCode, HarnessError> {
    let (ring, module) = load(ring, module)?;
    let rp = classify(&ring)?;
    let Some(m) = module else {
        match format {
            Format::Json => println!("{}", serde_json::to_string_pretty(&json!({ "ring": rp })).expect("serializes")),
            Format::Text => {
                println!("ring {}", rp.name);
                println!("order {}", rp.order);
                println!("commutative {}", rp.commutative);
                println!("hdim {}", rp.hdim_left);
                println!("hdim right {}", rp.hdim_right);
                println!("Rad {}", set(&rp.jacobson.members()));
                println!("length(R/J) {}", rp.semisimple_quotient_length);
                println!("units {}", rp.units.len());
                println!("local {}", rp.local);
                println!("R/J von Neumann regular {}", rp.vnr_quotient);
            }
        }
        return Ok(ExitCode::SUCCESS);
    };
    let dp = profile(&m)?;
    let (weak, map) = is_weakly_supplemented(&m)?;
    let (projective, non_lifting) = is_self_projective(&m)?;
    match format {
        Format::Json => {
            let witnesses: Vec<_> = map
                .iter()
                .map(|(n, w)| json!({ "submodule": n, "weak_supplement": w.as_ref().map(|w| &w.supplement) }))
                .collect();
            let out = json!({
                "ring": rp,
                "module": { "name": m.name(), "profile": dp },
                "weakly_supplemented": weak,
                "weak_supplements": witnesses,
                "self_projective": projective,
                "non_lifting": non_lifting.map(|w| json!({ "kernel": w.kernel, "hom": w.hom.map() })),
            });
            println!("{}", serde_json::to_string_pretty(&out).expect("serializes"));
        }
        Format::Text => {
            println!("module {} over {}", m.name(), rp.name);
            println!("order {}", dp.order);
            println!("Rad {}", set(&dp.radical.members()));
            println!("Soc {}", set(&dp.socle.members()));
            println!("length {}", dp.length);
            println!("hdim {}", dp.hdim);
            println!("udim {}", dp.udim);
            println!("semisimple {}", dp.semisimple);
            println!("hollow {}", dp.hollow);
            println!("uniform {}", dp.uniform);
            println!("weakly supplemented {weak}");
            println!("self-projective {projective}");
            let family: Vec<String> = dp.hollow_decomposition.family.iter().map(|k| set(&k.members())).collect();
            println!("coindependent family {}", family.join(" "));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(
    corpus: &str,
    theorems: &str,
    jobs: usize,
    report: Option<&Path>,
    witnesses: bool,
    audit: bool,
) -> Result<ExitCode, HarnessError> {
    let input: CorpusInput = if corpus == "builtin" {
        builtin_corpus()?.into_iter().map(Ok).collect()
    } else {
        load_corpus(Path::new(corpus))?
    };
    let config = RunConfig {
        corpus: corpus.to_string(),
        theorems: parse_filter(theorems)?,
        jobs,
        check: CheckConfig {
            coindependence: if audit {
                CoindependenceMode::Exhaustive
            } else {
                CoindependenceMode::Binding
            },
        },
        witnesses,
    };
    let out = run_verification(&input, &config);
    if let Some(path) = report {
        std::fs::write(path, out.to_json()).map_err(|e| HarnessError::Io(path.display().to_string(), e))?;
    }
    print!("{}", out.to_text());
    Ok(if out.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn lattice(ring: &Path, module: &Path, dot: &Path) -> Result<ExitCode, HarnessError> {
    let (_, m) = load(ring, Some(module))?;
    let m = m.expect("module path given");
    let lattice = all_submodules(&m)?;
    std::fs::write(dot, lattice.to_dot(&m)).map_err(|e| HarnessError::Io(dot.display().to_string(), e))?;
    println!("{} submodules written to {}", lattice.len(), dot.display());
    Ok(ExitCode::SUCCESS)
}

fn info() {
    let caps = Caps::current();
    println!("modlat {}", env!("CARGO_PKG_VERSION"));
    println!("caps elements={} lattice={} homs={}", caps.elements, caps.lattice, caps.homs);
    println!("theorems:");
    for t in THEOREMS {
        println!("  {:<16} {}", t.id, t.statement);
    }
}
