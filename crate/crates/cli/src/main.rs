use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use hfsurgery::cfk::{validate, CfkComplex, CfkData};
use hfsurgery::knots::{self, RandomSpec, StaircaseSpec};
use hfsurgery::obstructions::{self, ObstructionVerdict};
use hfsurgery::surgery::{Method, RankReport, Slope, SurgeryContext, TSV_HEADER};
use hfsurgery::Error;

/// Hat Heegaard Floer ranks of Dehn surgeries from knot Floer complexes.
///
/// COMPLEX arguments are either a path to a complex in JSON form or the name
/// of a built-in: unknot, trefoil_rh, trefoil_lh, figure_eight, t25, t27.
#[derive(Parser)]
#[command(name = "hfsurgery", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a complex and report every violated invariant.
    Validate {
        complex: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Genus, b, HFK-hat profile, nu and the image-containment verdict.
    Info {
        complex: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Rank of HF-hat of p/q surgery.
    Rank {
        complex: String,
        #[arg(short)]
        p: u64,
        #[arg(short)]
        q: u64,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Print computation times to stderr.
        #[arg(long)]
        timings: bool,
    },
    /// Ranks over every coprime p <= pmax, q <= qmax.
    Scan {
        complex: String,
        #[arg(long)]
        pmax: u64,
        #[arg(long)]
        qmax: u64,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
        /// Fail on any oracle/formula mismatch or inapplicable formula.
        #[arg(long)]
        check: bool,
    },
    /// Compare ranks at two slopes R and S.
    Cosmetic {
        complex: String,
        #[arg(value_parser = parse_slope)]
        r: Slope,
        #[arg(value_parser = parse_slope)]
        s: Slope,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compare the rank at 1/q with the rank of the ambient manifold.
    Complement {
        complex: String,
        #[arg(short)]
        q: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Write a complex as JSON to stdout.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// One of the built-in complexes.
    Builtin { name: String },
    /// Seeded direct sum of isolated generators and flip-paired boxes.
    Random(RandomArgs),
    /// Staircase with the given step lengths, e.g. `1,1,1,1`.
    Staircase {
        #[arg(value_delimiter = ',')]
        steps: Vec<u32>,
    },
    /// Mirror of a complex.
    Mirror { complex: String },
    /// Tensor product of two complexes.
    Tensor { first: String, second: String },
}

#[derive(Args)]
struct RandomArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    dots: usize,
    #[arg(long, default_value_t = 2)]
    boxes: usize,
    #[arg(long, default_value_t = 2)]
    max_side: u32,
    #[arg(long, default_value_t = 2)]
    max_offset: i64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Tsv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Oracle,
    Formula,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Oracle => Method::Oracle,
            MethodArg::Formula => Method::Formula,
            MethodArg::Both => Method::Both,
        }
    }
}

fn parse_slope(text: &str) -> Result<Slope, String> {
    text.parse().map_err(|e: Error| e.to_string())
}

/// Failures that end the run, with their exit status.
enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Check(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn load_data(arg: &str) -> Result<CfkData, Failure> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("{arg}: {e}")))?;
        return CfkData::from_json(&text).map_err(|e| Failure::Usage(format!("{arg}: {e}")));
    }
    match knots::builtin(arg) {
        Ok(c) => Ok(c.into_data()),
        Err(_) => Err(Failure::Usage(format!(
            "`{arg}` is neither a readable file nor a built-in ({})",
            knots::BUILTIN_NAMES.join(", ")
        ))),
    }
}

fn load(arg: &str) -> Result<CfkComplex, Failure> {
    Ok(CfkComplex::new(load_data(arg)?)?)
}

fn slope(p: u64, q: u64) -> Result<Slope, Failure> {
    Slope::new(p, q).map_err(|e| Failure::Usage(e.to_string()))
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("output serializes"));
}

fn run_validate(arg: &str, format: Format) -> Outcome {
    let report = validate(&load_data(arg)?);
    match format {
        Format::Json => print_json(&report),
        _ => println!("{report}"),
    }
    if report.is_valid() {
        Ok(())
    } else {
        Err(Failure::Check(String::new()))
    }
}

#[derive(Serialize)]
struct Info {
    name: String,
    generators: usize,
    genus: i64,
    b: usize,
    hfk: Vec<(i64, usize)>,
    nu: Option<i64>,
    hypothesis: Option<bool>,
}

fn run_info(arg: &str, format: Format) -> Outcome {
    let c = load(arg)?;
    let ctx = SurgeryContext::new(&c).ok();
    let info = Info {
        name: c.name().to_string(),
        generators: c.generator_count(),
        genus: c.genus(),
        b: c.b_rank(),
        hfk: c.hfk_profile(),
        nu: ctx.as_ref().and_then(|x| x.nu_surrogate().ok()),
        hypothesis: ctx.as_ref().map(|x| x.hypothesis().holds),
    };
    match format {
        Format::Json => print_json(&info),
        _ => {
            let hfk: Vec<String> = info.hfk.iter().map(|(s, n)| format!("{s}:{n}")).collect();
            let or_dash = |v: Option<String>| v.unwrap_or_else(|| "-".into());
            println!("name\t{}", info.name);
            println!("generators\t{}", info.generators);
            println!("genus\t{}", info.genus);
            println!("b\t{}", info.b);
            println!("hfk\t{}", hfk.join(" "));
            println!("nu\t{}", or_dash(info.nu.map(|n| n.to_string())));
            println!(
                "hypothesis\t{}",
                or_dash(info.hypothesis.map(|h| if h { "pass" } else { "fail" }.to_string()))
            );
        }
    }
    Ok(())
}

fn emit_reports(reports: &[RankReport], format: Format) {
    match format {
        Format::Json => {
            for r in reports {
                println!("{}", r.to_json());
            }
        }
        Format::Tsv => {
            println!("{TSV_HEADER}");
            for r in reports {
                println!("{}", r.to_tsv());
            }
        }
        Format::Text => {
            for r in reports {
                println!("{r}");
            }
        }
    }
}

fn run_rank(arg: &str, s: Slope, method: Method, format: Format, timings: bool) -> Outcome {
    let ctx = SurgeryContext::new(&load(arg)?)?;
    let report = RankReport::compute(&ctx, s, method);
    emit_reports(std::slice::from_ref(&report), format);
    if timings {
        let ms = |d: Option<std::time::Duration>| {
            d.map_or("-".to_string(), |d| format!("{:.3}ms", d.as_secs_f64() * 1e3))
        };
        eprintln!("oracle {} formula {}", ms(report.timings.oracle), ms(report.timings.formula));
    }
    if !report.agrees() {
        return Err(Failure::Check(format!("rank mismatch at {s}")));
    }
    Ok(())
}

fn run_scan(arg: &str, pmax: u64, qmax: u64, method: Method, format: Format, check: bool) -> Outcome {
    let ctx = SurgeryContext::new(&load(arg)?)?;
    let reports: Vec<RankReport> = Slope::grid(pmax, qmax)
        .into_par_iter()
        .map(|s| RankReport::compute(&ctx, s, method))
        .collect();
    emit_reports(&reports, format);
    if check {
        let wants_formula = method != Method::Oracle;
        let bad: Vec<String> = reports
            .iter()
            .filter(|r| !r.agrees() || (wants_formula && r.formula.is_none()))
            .map(|r| format!("{}/{}", r.p, r.q))
            .collect();
        if !bad.is_empty() {
            return Err(Failure::Check(format!("check failed at {}", bad.join(", "))));
        }
    }
    Ok(())
}

fn emit_verdict(v: &ObstructionVerdict, format: Format) {
    match format {
        Format::Json => println!("{}", v.to_json()),
        _ => {
            let verdict = serde_json::to_value(v.verdict).expect("verdict serializes");
            println!("{}\t{}", verdict.as_str().unwrap_or_default(), v.reason);
        }
    }
}

fn run_gen(kind: GenKind) -> Outcome {
    let c = match kind {
        GenKind::Builtin { name } => knots::builtin(&name).map_err(|e| Failure::Usage(e.to_string()))?,
        GenKind::Random(a) => knots::random_complex(&RandomSpec {
            seed: a.seed,
            dots: a.dots,
            boxes: a.boxes,
            max_side: a.max_side,
            max_offset: a.max_offset,
        }),
        GenKind::Staircase { steps } => {
            let spec = StaircaseSpec::new(steps).map_err(|e| Failure::Usage(e.to_string()))?;
            knots::staircase(&spec)?
        }
        GenKind::Mirror { complex } => {
            let c = load(&complex)?;
            let name = format!("mirror({})", c.name());
            knots::mirror(&c).renamed(name)
        }
        GenKind::Tensor { first, second } => knots::tensor(&load(&first)?, &load(&second)?),
    };
    print!("{}", c.to_json());
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Validate { complex, format } => run_validate(&complex, format),
        Command::Info { complex, format } => run_info(&complex, format),
        Command::Rank {
            complex,
            p,
            q,
            method,
            format,
            timings,
        } => run_rank(&complex, slope(p, q)?, method.into(), format, timings),
        Command::Scan {
            complex,
            pmax,
            qmax,
            method,
            format,
            check,
        } => run_scan(&complex, pmax, qmax, method.into(), format, check),
        Command::Cosmetic {
            complex,
            r,
            s,
            format,
        } => {
            let ctx = SurgeryContext::new(&load(&complex)?)?;
            emit_verdict(&obstructions::cosmetic_pair_check(&ctx, r, s), format);
            Ok(())
        }
        Command::Complement { complex, q, format } => {
            slope(1, q)?;
            let ctx = SurgeryContext::new(&load(&complex)?)?;
            emit_verdict(&obstructions::complement_check(&ctx, q)?, format);
            Ok(())
        }
        Command::Gen { kind } => run_gen(kind),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            if !msg.is_empty() {
                eprintln!("error: {msg}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
