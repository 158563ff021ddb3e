//! `complete`: evaluate complete-number expressions and run the law suite.
//!
//! Exit codes: 0 success, 1 law-suite failure or I/O error, 2 lex/parse
//! error (or bad arguments), 3 evaluation error.

use std::ffi::OsString;
use std::fs;
use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use complete_numbers::expr::{evaluate, format};
use complete_numbers::laws::{reports_to_json, run_suite, suite_passed, TrialConfig, PRNG_NAME};
use complete_numbers::{Complex, Error, EvalValue, Index, IndexedComplex, Mode};
use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_SYNTAX: i32 = 2;
pub const EXIT_EVAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "complete", version, about = "Exact arithmetic over complete numbers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct ModeArg {
    /// How `up(0)/up(z)` evaluates: `strict` gives void, `lenient` gives up(0).
    #[arg(long, default_value = "strict")]
    mode: Mode,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one expression.
    Eval {
        expr: String,
        #[command(flatten)]
        mode: ModeArg,
        /// Print a JSON object instead of plain text.
        #[arg(long)]
        json: bool,
    },
    /// Interactive read-eval-print loop (`:mode` toggles, `:quit` exits).
    Repl {
        #[command(flatten)]
        mode: ModeArg,
    },
    /// Evaluate a file with one expression per line.
    Batch {
        file: PathBuf,
        #[command(flatten)]
        mode: ModeArg,
    },
    /// Run the randomized law suite.
    Laws {
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Largest |numerator| and denominator of generated rationals.
        #[arg(long, default_value_t = 10)]
        bound: u32,
        #[command(flatten)]
        mode: ModeArg,
        #[arg(long)]
        json: bool,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the index multiplication, division and modulus tables.
    Table,
}

/// Runs the CLI against the given streams and returns the exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_SYNTAX } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(stderr, "{}", e.render())
            } else {
                write!(stdout, "{}", e.render())
            };
            return code;
        }
    };

    let result = match cli.command {
        Command::Eval { expr, mode, json } => eval_command(&expr, mode.mode, json, stdout, stderr),
        Command::Repl { mode } => repl(mode.mode, stdin, stdout, stderr),
        Command::Batch { file, mode } => batch(&file, mode.mode, stdout, stderr),
        Command::Laws {
            trials,
            seed,
            bound,
            mode,
            json,
            out,
        } => laws(trials, seed, bound, mode.mode, json, out, stdout, stderr),
        Command::Table => table(stdout).map(|_| EXIT_OK),
    };
    result.unwrap_or_else(|e| {
        let _ = writeln!(stderr, "error: {e}");
        EXIT_FAILURE
    })
}

fn exit_code(err: &Error) -> i32 {
    if err.is_syntax() {
        EXIT_SYNTAX
    } else {
        EXIT_EVAL
    }
}

fn describe_error(source: &str, err: &Error) -> String {
    match err.position() {
        Some(pos) => {
            let caret = " ".repeat(source[..pos.min(source.len())].chars().count());
            format!("error: {err}\n  {source}\n  {caret}^")
        }
        None => format!("error: {err}"),
    }
}

#[derive(Serialize)]
struct JsonError {
    kind: &'static str,
    position: Option<usize>,
    message: String,
}

#[derive(Serialize)]
struct JsonEval<'a> {
    input: &'a str,
    status: &'static str,
    value: Option<String>,
    error: Option<JsonError>,
}

impl<'a> JsonEval<'a> {
    fn new(input: &'a str, result: &complete_numbers::Result<EvalValue>) -> Self {
        match result {
            Ok(v) => JsonEval {
                input,
                status: if v.is_void() { "void" } else { "ok" },
                value: Some(format(v)),
                error: None,
            },
            Err(e) => JsonEval {
                input,
                status: "error",
                value: None,
                error: Some(JsonError {
                    kind: e.kind(),
                    position: e.position(),
                    message: e.to_string(),
                }),
            },
        }
    }
}

fn eval_command(
    source: &str,
    mode: Mode,
    json: bool,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> std::io::Result<i32> {
    let result = evaluate(source, mode);
    if json {
        let doc = serde_json::to_string(&JsonEval::new(source, &result))?;
        writeln!(stdout, "{doc}")?;
    } else {
        match &result {
            Ok(v) => writeln!(stdout, "{}", format(v))?,
            Err(e) => writeln!(stderr, "{}", describe_error(source, e))?,
        }
    }
    Ok(result.as_ref().map_or_else(exit_code, |_| EXIT_OK))
}

fn repl(
    mut mode: Mode,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> std::io::Result<i32> {
    let mut line = String::new();
    loop {
        write!(stdout, "> ")?;
        stdout.flush()?;
        line.clear();
        if stdin.read_line(&mut line)? == 0 {
            writeln!(stdout)?;
            return Ok(EXIT_OK);
        }
        let input = line.trim();
        match input {
            "" => continue,
            ":quit" | ":q" => return Ok(EXIT_OK),
            ":mode" => {
                mode = mode.toggled();
                writeln!(stdout, "mode: {mode}")?;
            }
            _ => match evaluate(input, mode) {
                Ok(v) => writeln!(stdout, "{}", format(&v))?,
                Err(e) => writeln!(stderr, "{}", describe_error(input, &e))?,
            },
        }
    }
}

fn batch(
    path: &PathBuf,
    mode: Mode,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> std::io::Result<i32> {
    let text = fs::read_to_string(path)?;
    let mut code = EXIT_OK;
    for (n, raw) in text.split('\n').enumerate() {
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        // no output line for the empty tail after a final newline
        if n > 0 && line.is_empty() && n == text.split('\n').count() - 1 {
            break;
        }
        let input = line.trim();
        if input.is_empty() || input.starts_with('#') {
            writeln!(stdout)?;
            continue;
        }
        match evaluate(input, mode) {
            Ok(v) => writeln!(stdout, "{}", format(&v))?,
            Err(e) => {
                writeln!(stdout)?;
                writeln!(stderr, "line {}: {}", n + 1, describe_error(input, &e))?;
                code = match (code, exit_code(&e)) {
                    (EXIT_SYNTAX, _) | (_, EXIT_SYNTAX) => EXIT_SYNTAX,
                    (_, c) => c,
                };
            }
        }
    }
    Ok(code)
}

#[allow(clippy::too_many_arguments)]
fn laws(
    trials: u64,
    seed: u64,
    bound: u32,
    mode: Mode,
    json: bool,
    out: Option<PathBuf>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> std::io::Result<i32> {
    let config = match TrialConfig::new(seed, trials, bound, mode) {
        Ok(c) => c,
        Err(e) => {
            writeln!(stderr, "error: {e}")?;
            return Ok(EXIT_SYNTAX);
        }
    };
    let reports = run_suite(&config);
    let passed = suite_passed(&reports);

    let rendered = if json {
        reports_to_json(&reports)
    } else {
        let mut text = format!(
            "prng: {PRNG_NAME}\nseed={seed} trials={trials} bound={bound} mode={mode}\n"
        );
        for r in &reports {
            text.push_str(&format!("{r}\n"));
        }
        text.push_str(if passed { "suite: pass\n" } else { "suite: FAIL\n" });
        text
    };

    match out {
        Some(path) => {
            fs::write(&path, rendered)?;
            writeln!(
                stdout,
                "wrote {} reports to {} (suite {})",
                reports.len(),
                path.display(),
                if passed { "pass" } else { "FAIL" }
            )?;
        }
        None => write!(stdout, "{rendered}")?,
    }
    Ok(if passed { EXIT_OK } else { EXIT_FAILURE })
}

fn table(stdout: &mut dyn Write) -> std::io::Result<()> {
    use Index::{Calpanic as Down, Vastavic as Up};

    let mul_note = |a: Index, b: Index| match (a, b) {
        (Up, Up) => "property 1",
        (Up, Down) => "mixed, from properties 4, 6 and 1",
        (Down, Up) => "mixed, from properties 8, 2 and 5",
        (Down, Down) => "property 5",
    };

    writeln!(stdout, "index multiplication (row * column)")?;
    for a in Index::ALL {
        for b in Index::ALL {
            writeln!(stdout, "  {:<4} * {:<4} = {:<4}  [{}]", a, b, a * b, mul_note(a, b))?;
        }
    }

    writeln!(stdout, "index division")?;
    for a in Index::ALL {
        for b in Index::ALL {
            match a.checked_div(b) {
                Ok(q) => {
                    let note = if a == Up { "property 2" } else { "property 6" };
                    writeln!(stdout, "  {a:<4} / {b:<4} = {q:<4}  [{note}]")?;
                }
                Err(_) => writeln!(stdout, "  {a:<4} / {b:<4} undefined for bare indices")?,
            }
        }
    }

    writeln!(stdout, "index modulus")?;
    for a in Index::ALL {
        let note = if a == Up { "property 3" } else { "property 7" };
        writeln!(stdout, "  {:<11} = {:<4}  [{note}]", format!("|{a}|"), a.abs())?;
    }

    writeln!(stdout, "zero-division transitions")?;
    let transitions = [
        (
            IndexedComplex::up(Complex::one()),
            IndexedComplex::up(Complex::zero()),
            "property 4",
        ),
        (
            IndexedComplex::down(Complex::zero()),
            IndexedComplex::down(Complex::one()),
            "property 8",
        ),
        (
            IndexedComplex::down(Complex::one()),
            IndexedComplex::down(Complex::zero()),
            "void quantity",
        ),
    ];
    for (n, d, note) in transitions {
        let q = n
            .special_div(&d, Mode::Strict)
            .map(|v| v.to_string())
            .unwrap_or_else(|e| e.to_string());
        writeln!(stdout, "  {:<17} = {:<8} [{note}]", format!("{n} / {d}"), q)?;
    }
    Ok(())
}
