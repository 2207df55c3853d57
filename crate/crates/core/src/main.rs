use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cmtilt::report::{
    ainfty_suite, all_pass, analyze, dg_suite, golden_suite, semigroup_csv, semigroup_report, semigroup_sweep,
    sweep_csv, AnalyzeOptions, ReportError, Verdict,
};
use cmtilt::ring::{HypersurfaceSpec, SpecFile};

#[derive(Parser)]
#[command(name = "cmtilt", version, about = "Tilting and silting computations for graded curve singularities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Emit {
    Dot,
    Json,
    Text,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    Golden,
    SweepSemigroup,
    Ainfty,
    Dg,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one hypersurface given as a JSON spec file.
    Analyze {
        spec: PathBuf,
        /// Unit `(r, s)` with `rm + sn = 1`, as `R,S`.
        #[arg(long, value_parser = parse_rs, allow_hyphen_values = true)]
        rs: Option<(i64, i64)>,
        /// Ground field, `q` or `p:PRIME`; overrides the spec file.
        #[arg(long)]
        field: Option<String>,
        /// Bound on resolution length.
        #[arg(long, default_value_t = 12)]
        bound: usize,
        #[arg(long)]
        pmax: Option<u32>,
        #[arg(long, default_value_t = 12)]
        pcheck: u32,
        #[arg(long)]
        weight_bound: Option<u64>,
        /// Skip the brute-force Hom comparison.
        #[arg(long)]
        no_oracle: bool,
        #[arg(long, value_delimiter = ',', default_value = "dot,json,text")]
        emit: Vec<Emit>,
        /// Output directory for report.json and quiver.dot.
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Run a verification suite.
    Verify {
        suite: String,
        /// Run the suite's negative control instead (ainfty, dg).
        #[arg(long)]
        corrupt: bool,
        /// Largest `n` in the semigroup sweep.
        #[arg(long, default_value_t = 12)]
        max_n: u32,
        /// Directory for tables; nothing is written when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Hom poset and homological dimensions for a numerical semigroup.
    Semigroup {
        #[arg(required = true, value_delimiter = ',')]
        generators: Vec<u64>,
        #[arg(long, default_value_t = 12)]
        bound: usize,
        #[arg(long, value_delimiter = ',', default_value = "dot,json,text")]
        emit: Vec<Emit>,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
}

fn parse_rs(s: &str) -> Result<(i64, i64), String> {
    let (r, t) = s.split_once(',').ok_or("expected R,S")?;
    let r = r.trim().parse().map_err(|e| format!("bad R: {e}"))?;
    let t = t.trim().parse().map_err(|e| format!("bad S: {e}"))?;
    Ok((r, t))
}

enum Failure {
    Input(String),
    Verification,
}

impl From<ReportError> for Failure {
    fn from(e: ReportError) -> Failure {
        Failure::Input(e.to_string())
    }
}

fn write(dir: &Path, name: &str, contents: &str) -> Result<(), Failure> {
    fs::create_dir_all(dir).map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
    let path = dir.join(name);
    fs::write(&path, contents).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_spec(path: &Path, field: Option<&str>) -> Result<HypersurfaceSpec, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let mut file: SpecFile =
        serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    if let Some(f) = field {
        file.field = f.to_string();
    }
    HypersurfaceSpec::from_file(&file).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn print_verdicts(verdicts: &[Verdict]) {
    for v in verdicts {
        println!("{} {}: {}", v.status, v.name, v.reason);
    }
}

fn verdict_outcome(verdicts: &[Verdict]) -> Result<(), Failure> {
    if all_pass(verdicts) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze { spec, rs, field, bound, pmax, pcheck, weight_bound, no_oracle, emit, out } => {
            let spec = load_spec(&spec, field.as_deref())?;
            let opts = AnalyzeOptions { rs, bound, p_check: pcheck, p_max: pmax, weight_bound, oracle: !no_oracle };
            let analysis = analyze(&spec, &opts)?;
            if emit.contains(&Emit::Json) {
                write(&out, "report.json", &analysis.json())?;
            }
            if emit.contains(&Emit::Dot) {
                if let Some(dot) = &analysis.dot {
                    write(&out, "quiver.dot", dot)?;
                }
            }
            if emit.contains(&Emit::Text) {
                print!("{}", analysis.text());
            }
            verdict_outcome(&analysis.report.verdicts)
        }
        Command::Verify { suite, corrupt, max_n, out } => {
            let suite = Suite::from_str(&suite, true).map_err(|_| Failure::Input(ReportError::UnknownSuite(suite).to_string()))?;
            let opts = AnalyzeOptions::default();
            let verdicts = match suite {
                Suite::Golden => golden_suite(&opts)?,
                Suite::SweepSemigroup => {
                    let (rows, verdicts) = semigroup_sweep(max_n, opts.bound)?;
                    let csv = sweep_csv(&rows);
                    match &out {
                        Some(dir) => write(dir, "sweep.csv", &csv)?,
                        None => print!("{csv}"),
                    }
                    verdicts
                }
                Suite::Ainfty => ainfty_suite(corrupt),
                Suite::Dg => dg_suite(&opts, corrupt)?,
            };
            print_verdicts(&verdicts);
            verdict_outcome(&verdicts)
        }
        Command::Semigroup { generators, bound, emit, out } => {
            let (report, dot) = semigroup_report(&generators, bound)?;
            if emit.contains(&Emit::Json) {
                let json = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
                write(&out, "semigroup.json", &json)?;
            }
            if emit.contains(&Emit::Csv) {
                write(&out, "semigroup.csv", &semigroup_csv(&report))?;
            }
            if emit.contains(&Emit::Dot) {
                write(&out, "poset.dot", &dot)?;
            }
            if emit.contains(&Emit::Text) {
                let gens: Vec<String> = report.minimal_generators.iter().map(|g| g.to_string()).collect();
                println!(
                    "S = ⟨{}⟩: Frobenius {}, {} vertices, dim {}, gldim {} (over Γ^op), injdim {}/{}",
                    gens.join(", "),
                    report.frobenius,
                    report.vertices,
                    report.dim,
                    report.global_dimension,
                    report.injdim_right,
                    report.injdim_left
                );
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
