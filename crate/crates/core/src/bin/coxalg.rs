use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use coxalg::cases::{self, CaseName};
use coxalg::coxring::{embedding_ideal, synthesize_cox_generators};
use coxalg::driver::{run_case, run_case_filtered, CaseConfig};
use coxalg::error::{Error, Result};
use coxalg::gitfan::{isotropy_trivial, parse_weight_file, semistable_supports};
use coxalg::groupfile::read_group_file;
use coxalg::invariants::invariant_generators;
use coxalg::matgroup::{group_closure, ActionConvention};
use coxalg::report::Report;

#[derive(Parser)]
#[command(name = "coxalg", version, about = "Cox rings of symplectic quotient singularities")]
struct Cli {
    /// Directory for persisted Gröbner bases (also COXALG_CACHE_DIR).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Polynomial action convention: direct or inverse.
    #[arg(long, global = true, default_value = "direct")]
    convention: String,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    Group {
        #[command(subcommand)]
        cmd: GroupCmd,
    },
    /// Generators of the invariant ring of the group or its commutator subgroup.
    Invariants {
        file: PathBuf,
        #[arg(long, default_value = "commutator")]
        subgroup: String,
        #[arg(long, default_value_t = 6)]
        bound: u32,
    },
    Cox {
        #[command(subcommand)]
        cmd: CoxCmd,
    },
    Verify {
        #[command(subcommand)]
        cmd: VerifyCmd,
    },
    Git {
        #[command(subcommand)]
        cmd: GitCmd,
    },
    Toric {
        #[command(subcommand)]
        cmd: ToricCmd,
    },
    Case {
        #[command(subcommand)]
        cmd: CaseCmd,
    },
}

#[derive(Subcommand)]
enum GroupCmd {
    /// Order, commutator subgroup, abelianization and reflection classes.
    Analyze { file: PathBuf },
}

#[derive(Subcommand)]
enum CoxCmd {
    /// Cox ring generators with their torus exponents.
    Synth { case: String },
    /// Relations among the Cox ring generators.
    Embed { case: String },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Bounded checks of the lifting condition.
    Lifting {
        case: String,
        #[arg(long, default_value_t = 3)]
        dmax: u32,
    },
}

#[derive(Subcommand)]
enum GitCmd {
    /// Minimal supports of semistable points and their isotropy.
    Semistable {
        #[arg(long)]
        weights: PathBuf,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        chi: Vec<i64>,
    },
    /// Stability and smoothness items of a case.
    Smooth { case: String },
}

#[derive(Subcommand)]
enum ToricCmd {
    /// The toric component, its faces and the quotient fan.
    QuotientFan { case: String },
}

#[derive(Subcommand)]
enum CaseCmd {
    /// Every check for a case; writes the JSON report to `--out`.
    Run {
        case: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        dmax: Option<u32>,
    },
}

fn config(cli: &Cli) -> Result<CaseConfig> {
    let mut c = CaseConfig { convention: ActionConvention::parse(&cli.convention)?, ..CaseConfig::default() };
    if cli.cache_dir.is_some() {
        c.cache_dir = cli.cache_dir.clone();
    }
    Ok(c)
}

fn print_report(r: &Report) -> ExitCode {
    print!("{}", r.summary());
    ExitCode::from(r.exit_code() as u8)
}

fn geometry_case(name: &str) -> Result<CaseName> {
    let c: CaseName = name.parse()?;
    if c != CaseName::D8Wreath {
        return Err(Error::Invalid(format!("{c} has no stability or toric items; use d8-wreath")));
    }
    Ok(c)
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let cfg = config(cli)?;
    cfg.apply();
    match &cli.cmd {
        Cmd::Group { cmd: GroupCmd::Analyze { file } } => {
            let f = read_group_file(file)?;
            let g = group_closure(&f.matrices(), cases::CLOSURE_BOUND)?;
            let facts = cases::group_facts(&g)?;
            println!("order: {}", facts.order);
            println!("commutator subgroup order: {}", facts.commutator_order);
            println!("abelianization: {}", g.abelianization()?.structure());
            println!("symplectic reflection classes: {:?}", facts.reflection_class_sizes);
        }
        Cmd::Invariants { file, subgroup, bound } => {
            let f = read_group_file(file)?;
            let g = group_closure(&f.matrices(), cases::CLOSURE_BOUND)?;
            let h = match subgroup.as_str() {
                "commutator" => g.commutator_subgroup(),
                "full" => g,
                s => return Err(Error::Invalid(format!("unknown subgroup `{s}` (expected commutator or full)"))),
            };
            for p in invariant_generators(&f.ring(), &h, *bound)? {
                println!("{p}");
            }
        }
        Cmd::Cox { cmd: CoxCmd::Synth { case } } => {
            let c = cases::load(case.parse()?, cfg.convention)?;
            for g in synthesize_cox_generators(&c)? {
                println!("{}", g.label(&c.t_names));
            }
        }
        Cmd::Cox { cmd: CoxCmd::Embed { case } } => {
            let c = cases::load(case.parse()?, cfg.convention)?;
            let gens = synthesize_cox_generators(&c)?;
            for g in embedding_ideal(&c, &gens)?.gens() {
                println!("{g}");
            }
        }
        Cmd::Verify { cmd: VerifyCmd::Lifting { case, dmax } } => {
            let cfg = CaseConfig { lifting_dmax: *dmax, ..cfg };
            return Ok(print_report(&run_case_filtered(case.parse()?, &cfg, &|id| id.starts_with("lifting/"))?));
        }
        Cmd::Git { cmd: GitCmd::Semistable { weights, chi } } => {
            let text = std::fs::read_to_string(weights).map_err(|e| Error::Io(format!("{}: {e}", weights.display())))?;
            let ws = parse_weight_file(&text, chi.clone())?;
            for s in semistable_supports(&ws)? {
                let trivial = isotropy_trivial(&ws, &s);
                println!("{{{}}}  isotropy {}", ws.names_of(&s).join(", "), if trivial { "trivial" } else { "nontrivial" });
            }
        }
        Cmd::Git { cmd: GitCmd::Smooth { case } } => {
            return Ok(print_report(&run_case_filtered(geometry_case(case)?, &cfg, &|id| id.starts_with("git/"))?));
        }
        Cmd::Toric { cmd: ToricCmd::QuotientFan { case } } => {
            return Ok(print_report(&run_case_filtered(geometry_case(case)?, &cfg, &|id| id.starts_with("toric/"))?));
        }
        Cmd::Case { cmd: CaseCmd::Run { case, out, dmax } } => {
            let cfg = CaseConfig { lifting_dmax: dmax.unwrap_or(cfg.lifting_dmax), ..cfg };
            let r = run_case(case.parse()?, &cfg)?;
            if let Some(path) = out {
                std::fs::write(path, r.to_json()).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            }
            return Ok(print_report(&r));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
