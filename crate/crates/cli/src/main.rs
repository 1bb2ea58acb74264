use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use torse_core::json::{from_json, parse_plane_input, to_json, PlaneInput};
use torse_core::rat::parse_rat;
use torse_core::sample::{grid, CSV_HEADER};
use torse_core::synthesis::reduce_plane;
use torse_core::{
    analyze, canonical_representative, compose_family, equalize_degrees, sample, split_even_power,
    split_quadratic, synthesize_minimal, synthesize_with_cofactor, verify_trajectory, DualQuatPoly, Error,
    PlanePoly, RPoly, Rat,
};

mod demo;

const EXIT_FAILED: u8 = 1;
const EXIT_NOT_KINEMATIC: u8 = 2;
const EXIT_UNSUPPORTED: u8 = 3;
const EXIT_NO_SOLUTION: u8 = 4;
const EXIT_USAGE: u8 = 64;

/// Exact synthesis of rational motions with a prescribed plane trajectory.
#[derive(Parser)]
#[command(name = "torse", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide realizability and report degrees of a rational torse.
    Analyze {
        #[arg(long)]
        input: PathBuf,
        /// Reparametrize so that all nonzero components share one degree.
        #[arg(long)]
        equalize: bool,
    },
    /// Synthesize a motion whose moving plane follows the torse.
    Synthesize {
        #[arg(long)]
        input: PathBuf,
        /// Prescribed real cofactor of the trajectory.
        #[arg(long)]
        cofactor: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check that a motion's plane trajectory is the torse.
    Verify {
        #[arg(long)]
        motion: PathBuf,
        #[arg(long)]
        torse: PathBuf,
    },
    /// Split off a right factor that fixes the moving plane.
    Split {
        #[arg(long)]
        motion: PathBuf,
        #[arg(long)]
        factor: PathBuf,
        /// Split off the largest power of the factor instead of a linear factor.
        #[arg(long)]
        even_power: bool,
    },
    /// Compose with the plane-fixing motion e0 + e3 k + ε(e5 i + e6 j).
    Family {
        #[arg(long)]
        motion: PathBuf,
        #[arg(long, default_value = r#"["1"]"#)]
        e0: String,
        #[arg(long, default_value = "[]")]
        e3: String,
        #[arg(long, default_value = "[]")]
        e5: String,
        #[arg(long, default_value = "[]")]
        e6: String,
    },
    /// Sample the moving plane and a moving rectangle at rational parameters.
    Sample {
        #[arg(long)]
        motion: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
        #[arg(long)]
        count: usize,
        /// Rectangle width and height, e.g. `2,2`.
        #[arg(long, default_value = "2,2")]
        rect: String,
        #[arg(long)]
        csv: bool,
        #[arg(long, default_value_t = 12)]
        digits: usize,
    },
    /// Run a worked example end to end.
    Demo {
        #[arg(long, value_parser = demo::NAMES)]
        name: String,
    },
}

#[derive(Debug)]
struct Failure {
    code: u8,
    diagnostic: Value,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            diagnostic: json!({ "error": "MALFORMED_INPUT", "message": msg.into() }),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse(_) | Error::ZeroVectorPart | Error::NotAMotionPolynomial(_) => EXIT_USAGE,
            Error::NotKinematic => EXIT_NOT_KINEMATIC,
            Error::UnsupportedFieldExtension(_) => EXIT_UNSUPPORTED,
            Error::NoSolution { .. } => EXIT_NO_SOLUTION,
            _ => EXIT_FAILED,
        };
        let mut diagnostic = json!({ "error": e.code(), "message": e.to_string() });
        if let Error::NoSolution { reason } = e {
            diagnostic["reason"] = json!(reason);
        }
        Failure { code, diagnostic }
    }
}

type Outcome = Result<u8, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn read_plane(path: &Path) -> Result<PlanePoly, Failure> {
    match parse_plane_input(&read(path)?)? {
        PlaneInput::Poly(u) => Ok(u),
        PlaneInput::Rational(r) => Ok(canonical_representative(&r)?),
    }
}

fn read_motion(path: &Path) -> Result<DualQuatPoly, Failure> {
    let c: DualQuatPoly = from_json(&read(path)?)?;
    c.require_motion()?;
    Ok(c)
}

fn parse_poly_arg(name: &str, text: &str) -> Result<RPoly, Failure> {
    from_json(text).map_err(|e| Failure::usage(format!("--{name}: {e}")))
}

fn parse_rat_arg(name: &str, text: &str) -> Result<Rat, Failure> {
    parse_rat(text.trim()).map_err(|e| Failure::usage(format!("--{name}: {e}")))
}

fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}");
}

fn run_analyze(input: &Path, equalize: bool) -> Outcome {
    let u = read_plane(input)?;
    let (u, mobius) = if equalize {
        let (e, m) = equalize_degrees(&u)?;
        (e, Some(m))
    } else {
        (u, None)
    };
    let a = analyze(&u)?;
    match mobius {
        Some(m) => {
            let mut v = serde_json::to_value(&a).expect("serializable");
            v["mobius"] = json!(m.iter().map(torse_core::rat::format_rat).collect::<Vec<_>>());
            emit(&serde_json::to_string_pretty(&v).expect("serializable"));
        }
        None => emit(&to_json(&a)),
    }
    let code = match a.unsupported_reason.as_deref() {
        None => 0,
        Some("NOT_KINEMATIC") => EXIT_NOT_KINEMATIC,
        Some(_) => EXIT_UNSUPPORTED,
    };
    Ok(code)
}

fn run_synthesize(input: &Path, cofactor: Option<&Path>, seed: u64, output: Option<&Path>) -> Outcome {
    let (w, _) = reduce_plane(&read_plane(input)?)?;
    let result = match cofactor {
        Some(p) => {
            let h: RPoly = from_json(&read(p)?)?;
            synthesize_with_cofactor(&w, &h, seed)?
        }
        None => synthesize_minimal(&w, seed)?,
    };
    let text = to_json(&result);
    match output {
        Some(p) => fs::write(p, text + "\n").map_err(|e| Failure {
            code: EXIT_FAILED,
            diagnostic: json!({ "error": "IO_ERROR", "message": format!("{}: {e}", p.display()) }),
        })?,
        None => emit(&text),
    }
    Ok(0)
}

fn run_verify(motion: &Path, torse: &Path) -> Outcome {
    let c = read_motion(motion)?;
    let u = read_plane(torse)?;
    let v = verify_trajectory(&c, &u);
    emit(&to_json(&v));
    Ok(if v.ok { 0 } else { EXIT_FAILED })
}

fn run_split(motion: &Path, factor: &Path, even_power: bool) -> Outcome {
    let c = read_motion(motion)?;
    let f: RPoly = from_json(&read(factor)?)?;
    let s = if even_power {
        split_even_power(&c, &f)?
    } else {
        split_quadratic(&c, &f)?
    };
    emit(&to_json(&s));
    Ok(0)
}

fn run_family(motion: &Path, e: [(&str, &str); 4]) -> Outcome {
    let c = read_motion(motion)?;
    let [e0, e3, e5, e6] = e.map(|(name, text)| parse_poly_arg(name, text));
    let composed = compose_family(&c, &e0?, &e3?, &e5?, &e6?)?;
    emit(&to_json(&composed));
    Ok(0)
}

struct SampleArgs<'a> {
    motion: &'a Path,
    from: &'a str,
    to: &'a str,
    count: usize,
    rect: &'a str,
    csv: bool,
    digits: usize,
}

fn run_sample(a: SampleArgs) -> Outcome {
    let c = read_motion(a.motion)?;
    let from = parse_rat_arg("from", a.from)?;
    let to = parse_rat_arg("to", a.to)?;
    let (w, h) = a
        .rect
        .split_once(',')
        .ok_or_else(|| Failure::usage("--rect: expected WIDTH,HEIGHT"))?;
    let (w, h) = (parse_rat_arg("rect", w)?, parse_rat_arg("rect", h)?);
    let samples = sample(&c, &grid(&from, &to, a.count), &w, &h)?;
    if a.csv {
        let mut out = String::from(CSV_HEADER);
        for s in &samples {
            out.push('\n');
            out.push_str(&s.csv_row(a.digits));
        }
        emit(&out);
    } else {
        emit(&to_json(&samples));
    }
    Ok(0)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Analyze { input, equalize } => run_analyze(&input, equalize),
        Command::Synthesize {
            input,
            cofactor,
            seed,
            output,
        } => run_synthesize(&input, cofactor.as_deref(), seed, output.as_deref()),
        Command::Verify { motion, torse } => run_verify(&motion, &torse),
        Command::Split {
            motion,
            factor,
            even_power,
        } => run_split(&motion, &factor, even_power),
        Command::Family {
            motion,
            e0,
            e3,
            e5,
            e6,
        } => run_family(&motion, [("e0", &e0), ("e3", &e3), ("e5", &e5), ("e6", &e6)]),
        Command::Sample {
            motion,
            from,
            to,
            count,
            rect,
            csv,
            digits,
        } => run_sample(SampleArgs {
            motion: &motion,
            from: &from,
            to: &to,
            count,
            rect: &rect,
            csv,
            digits,
        }),
        Command::Demo { name } => Ok(if demo::run(&name)? { 0 } else { EXIT_FAILED }),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.kind().to_string();
            let detail = e.to_string();
            eprintln!(
                "{}",
                json!({ "error": "MALFORMED_INPUT", "message": msg, "detail": detail.trim_end() })
            );
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("{}", f.diagnostic);
            ExitCode::from(f.code)
        }
    }
}
