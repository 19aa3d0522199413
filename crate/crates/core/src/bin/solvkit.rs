use std::io::{self, BufRead, IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use solvkit::frontend::{self, Options, Session};

#[derive(Parser)]
#[command(
    name = "solvkit",
    version,
    about = "Groebner bases and elimination over solvable polynomial algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a .solv script and print its results.
    Run {
        script: PathBuf,
        #[command(flatten)]
        flags: Flags,
    },
    /// Read statements from standard input, one at a time.
    Repl {
        #[command(flatten)]
        flags: Flags,
    },
}

#[derive(Args)]
struct Flags {
    /// Print results as JSON lines.
    #[arg(long)]
    json: bool,
    /// Override the coefficient field of every algebra (QQ or GF <p>).
    #[arg(long, value_parser = frontend::parse_field)]
    field: Option<solvkit::Field>,
    /// Print every reduction step of nf/member to stderr.
    #[arg(long)]
    trace_reductions: bool,
}

impl Flags {
    fn options(&self) -> Options {
        Options {
            json: self.json,
            field: self.field,
            trace: self.trace_reductions,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Run { script, flags } => {
            let src = match std::fs::read_to_string(&script) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("error: cannot read {}: {e}", script.display());
                    return ExitCode::from(2);
                }
            };
            let t = frontend::run_script(&src, &flags.options());
            print!("{}", t.stdout);
            eprint!("{}", t.stderr);
            ExitCode::from(t.exit_code as u8)
        }
        Command::Repl { flags } => repl(flags.options()),
    }
}

fn repl(options: Options) -> ExitCode {
    let stdin = io::stdin();
    let interactive = stdin.is_terminal();
    let mut session = Session::new(options);
    let mut buffer = String::new();
    let mut failed = false;
    let prompt = |continued: bool| {
        if interactive {
            print!("{}", if continued { "... " } else { "solv> " });
            let _ = io::stdout().flush();
        }
    };
    prompt(false);
    for line in stdin.lock().lines() {
        let Ok(line) = line else { break };
        buffer.push_str(&line);
        buffer.push('\n');
        if !frontend::is_complete(&buffer) {
            prompt(true);
            continue;
        }
        match frontend::parse(&buffer) {
            Ok(stmts) => {
                for stmt in &stmts {
                    if let Err(e) = session.execute(stmt) {
                        session_error(&mut session, &e);
                        failed = true;
                        break;
                    }
                }
            }
            Err(e) => {
                eprintln!("error: {e}");
                failed = true;
            }
        }
        flush(&mut session);
        buffer.clear();
        prompt(false);
    }
    if let Err(e) = session.finish() {
        session_error(&mut session, &e);
        failed = true;
    }
    flush(&mut session);
    if interactive {
        println!();
    }
    if failed && !interactive {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn session_error(session: &mut Session, e: &frontend::ScriptError) {
    flush(session);
    eprintln!("error: {e}");
}

fn flush(session: &mut Session) {
    print!("{}", session.take_stdout());
    eprint!("{}", session.take_stderr());
    let _ = io::stdout().flush();
}
