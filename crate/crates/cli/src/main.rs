use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use sweedler_cli::{run_program, Config, Format, DEFAULT_CAP};

/// Evaluate a command file over the cofree cocommutative coalgebra !V.
#[derive(Debug, Parser)]
#[command(name = "bang", version)]
struct Args {
    /// Command file; reads stdin when omitted.
    #[arg(long)]
    input: Option<PathBuf>,

    /// Output format: text or machine (JSON Lines, schema bang/1).
    #[arg(long, default_value = "text")]
    format: Format,

    /// Largest ket degree whose set partitions may be enumerated.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    partition_cap: usize,

    /// Verify `# expect:` annotations instead of printing results.
    #[arg(long)]
    check: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let src = match &args.input {
        Some(path) => std::fs::read_to_string(path),
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map(|_| s)
        }
    };
    let src = match src {
        Ok(s) => s,
        Err(e) => {
            eprintln!("cannot read input: {e}");
            return ExitCode::from(2);
        }
    };
    let config = Config {
        partition_cap: args.partition_cap,
        format: args.format,
    };
    let outcome = run_program(&src, config, args.check);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    ExitCode::from(outcome.code as u8)
}
