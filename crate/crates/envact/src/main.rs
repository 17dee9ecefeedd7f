use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use envact::{run, CliError, Command, Document, Options};
use envact_core::BaseChoice;

#[derive(Parser, Debug)]
#[command(
    name = "envact",
    version,
    about = "Partial actions of finite groups on finite spaces"
)]
struct Args {
    #[arg(value_enum)]
    command: CommandArg,
    /// JSON action document; standard input when omitted
    #[arg(long)]
    input: Option<PathBuf>,
    /// Word length for shift-demo
    #[arg(long, default_value_t = 4)]
    n: usize,
    /// Open sets used by embed
    #[arg(long, value_enum, default_value_t = BaseArg::Full)]
    base: BaseArg,
    /// Write the class graph of the enveloping space to this file
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Print the report as JSON
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CommandArg {
    Validate,
    Globalize,
    Diagnose,
    Embed,
    ShiftDemo,
    ExportDot,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BaseArg {
    Full,
    Minimal,
}

impl From<CommandArg> for Command {
    fn from(c: CommandArg) -> Self {
        match c {
            CommandArg::Validate => Command::Validate,
            CommandArg::Globalize => Command::Globalize,
            CommandArg::Diagnose => Command::Diagnose,
            CommandArg::Embed => Command::Embed,
            CommandArg::ShiftDemo => Command::ShiftDemo,
            CommandArg::ExportDot => Command::ExportDot,
        }
    }
}

fn read_document(path: Option<&PathBuf>) -> Result<Document, CliError> {
    let text = match path {
        Some(p) => {
            std::fs::read_to_string(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?
        }
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::Io(e.to_string()))?;
            s
        }
    };
    Document::parse(&text)
}

fn main_inner(args: &Args) -> Result<(), CliError> {
    let command = Command::from(args.command);
    let doc = if command.needs_input() {
        Some(read_document(args.input.as_ref())?)
    } else {
        None
    };
    let opts = Options {
        n: args.n,
        base: match args.base {
            BaseArg::Full => BaseChoice::Full,
            BaseArg::Minimal => BaseChoice::Minimal,
        },
    };
    let out = run(command, doc.as_ref(), &opts)?;

    if let (Some(path), Some(dot)) = (&args.dot, &out.dot) {
        std::fs::write(path, dot).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    }
    if out.report.has_bug() {
        eprint!("{}", out.report.bug_banner());
    }
    if command == Command::ExportDot && args.dot.is_none() && !args.json {
        print!("{}", out.dot.unwrap_or_default());
    } else if args.json {
        print!("{}", out.report.render_json());
    } else {
        print!("{}", out.report.render_text());
    }
    Ok(())
}

fn main() -> ExitCode {
    let args = Args::parse();
    match main_inner(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("envact: {e}");
            e.exit_code()
        }
    }
}
