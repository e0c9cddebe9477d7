use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use spinorqc_core::checks::{run_checks, CheckOptions, Selector};
use spinorqc_core::lang::{eval_str, Session, Value};
use spinorqc_core::majorana::SusyMode;
use spinorqc_core::tensor::{decode_state, encode_state};
use spinorqc_core::{Coefficient, Error, Scalar, StateVector, TensorMultivector};

/// Largest qubit count accepted for dense amplitude files.
const MAX_QUBITS: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Float,
}

#[derive(Parser)]
#[command(name = "spinorqc", version, about = "Exact Cl(1,3) algebraic-spinor calculator and verifier")]
struct Cli {
    /// Coefficient arithmetic.
    #[arg(long, env = "SPINORQC_MODE", value_enum, default_value = "exact", global = true)]
    mode: Mode,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one expression and print its canonical form.
    Eval { expr: String },
    /// Read expressions from stdin; `let name = expr` binds a name.
    Repl,
    /// Run a verification suite: all, braid, teleport, majorana, susy, cstar, delta.
    Check {
        suite: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "1")]
        a: String,
        #[arg(long, default_value = "1")]
        b: String,
        #[arg(long, default_value = "1")]
        c: String,
        /// Quarter turns for the extra Majorana braid angle.
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        theta: i64,
    },
    /// Amplitude JSON file (`-` for stdin) to its ideal element.
    Encode { file: PathBuf },
    /// Expression of an ideal element to amplitude JSON.
    Decode { expr: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Check { suite, json, samples, seed, a, b, c, theta } => {
            return check(&suite, json, samples, seed, [a, b, c], theta, cli.mode);
        }
        Command::Eval { expr } => match cli.mode {
            Mode::Exact => eval_str::<Scalar>(&expr).map(|v| v.to_string()),
            Mode::Float => eval_str::<f64>(&expr).map(|v| v.to_string()),
        },
        Command::Repl => {
            return match cli.mode {
                Mode::Exact => repl::<Scalar>(),
                Mode::Float => repl::<f64>(),
            }
        }
        Command::Encode { file } => match cli.mode {
            Mode::Exact => encode::<Scalar>(&file),
            Mode::Float => encode::<f64>(&file),
        },
        Command::Decode { expr } => match cli.mode {
            Mode::Exact => decode::<Scalar>(&expr),
            Mode::Float => decode::<f64>(&expr),
        },
    };
    match outcome {
        Ok(text) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn check(suite: &str, json: bool, samples: Option<usize>, seed: u64, abc: [String; 3], theta: i64, mode: Mode) -> ExitCode {
    let parsed: Result<(Selector, [Scalar; 3]), Error> = (|| {
        let selector = suite.parse()?;
        let [a, b, c] = abc;
        Ok((selector, [a.parse()?, b.parse()?, c.parse()?]))
    })();
    let (selector, [a, b, c]) = match parsed {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let susy_mode = match mode {
        Mode::Exact => SusyMode::ExactIfPossible,
        Mode::Float => SusyMode::Float,
    };
    let opts = CheckOptions { samples, seed, a, b, c, theta, susy_mode };
    let report = run_checks(selector, &opts);
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn repl<C: Coefficient>() -> ExitCode {
    let mut session = Session::<C>::new();
    let stdin = io::stdin();
    let mut out = io::stdout();
    for line in stdin.lock().lines() {
        let Ok(line) = line else { return ExitCode::from(2) };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if line == ":q" || line == "quit" {
            break;
        }
        match session.run(line) {
            Ok(v) => {
                let _ = writeln!(out, "{v}");
            }
            Err(e) => eprintln!("error: {e}"),
        }
    }
    ExitCode::SUCCESS
}

fn read_input(file: &PathBuf) -> Result<String, Error> {
    let text = if file.as_os_str() == "-" {
        io::read_to_string(io::stdin())
    } else {
        std::fs::read_to_string(file)
    };
    text.map_err(|e| Error::Input(format!("{}: {e}", file.display())))
}

fn encode<C: Coefficient>(file: &PathBuf) -> Result<String, Error> {
    let json: serde_json::Value =
        serde_json::from_str(&read_input(file)?).map_err(|e| Error::Input(e.to_string()))?;
    let state = StateVector::<C>::from_json(&json)?;
    if state.qubits() > MAX_QUBITS {
        return Err(Error::Input(format!("at most {MAX_QUBITS} qubits")));
    }
    let t = encode_state(&state);
    Ok(match t.to_multivector() {
        Some(m) => m.to_string(),
        None => t.to_string(),
    })
}

fn decode<C: Coefficient>(expr: &str) -> Result<String, Error> {
    let t: TensorMultivector<C> = match eval_str::<C>(expr)? {
        Value::Mv(m) => TensorMultivector::from_multivector(&m),
        Value::Tensor(t) => t,
        Value::Scalar(_) => return Err(Error::NotInIdeal),
    };
    if t.slots() > MAX_QUBITS {
        return Err(Error::Input(format!("at most {MAX_QUBITS} qubits")));
    }
    let json = decode_state(&t)?.to_json();
    Ok(serde_json::to_string_pretty(&json).expect("json value"))
}
