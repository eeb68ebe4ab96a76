use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use coxcenter::cli::{dispatch, exit, load_system, Command, Flags, Format, Source};

/// Word problem, finite-type recognition and centers of Coxeter groups.
#[derive(Parser, Debug)]
#[command(name = "coxcenter", version)]
struct Args {
    /// validate | reduce | mul | inv | descents | components | spherical | longest |
    /// essential | center | enumerate | verify
    command: Command,
    /// JSON system document; reads standard input when omitted or `-`.
    input: Option<PathBuf>,
    /// Space-separated generator indices (twice for `mul`).
    #[arg(long = "word", allow_hyphen_values = true)]
    words: Vec<String>,
    /// Space-separated generator indices; defaults to all generators.
    #[arg(long)]
    subset: Option<String>,
    /// Element cap for enumeration.
    #[arg(long, default_value_t = coxcenter::oracle::DEFAULT_ENUMERATION_CAP)]
    cap: usize,
    /// Ball radius for infinite groups in `verify`.
    #[arg(long, default_value_t = coxcenter::oracle::DEFAULT_BALL_RADIUS)]
    radius: usize,
    /// text | json
    #[arg(long, default_value = "text")]
    format: Format,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let source = match &args.input {
        Some(p) if p.as_os_str() != "-" => Source::Path(p),
        _ => Source::Stdin,
    };
    let doc = match load_system(source) {
        Ok(doc) => doc,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit::INVALID_INPUT);
        }
    };
    let flags = Flags {
        words: args.words,
        subset: args.subset,
        cap: args.cap,
        radius: args.radius,
        format: args.format,
    };
    let outcome = dispatch(args.command, &doc, &flags);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(outcome.exit_code)
}
