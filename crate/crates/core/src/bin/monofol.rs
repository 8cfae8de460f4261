use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use monofol::cli::{run, Command, Job};
use monofol::{parse_rat, Rat};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Cmd {
    Validate,
    Perp,
    Blowup,
    Atlas,
    Localize,
    Verify,
    Freedirs,
}

impl From<Cmd> for Command {
    fn from(c: Cmd) -> Self {
        match c {
            Cmd::Validate => Command::Validate,
            Cmd::Perp => Command::Perp,
            Cmd::Blowup => Command::Blowup,
            Cmd::Atlas => Command::Atlas,
            Cmd::Localize => Command::Localize,
            Cmd::Verify => Command::Verify,
            Cmd::Freedirs => Command::Freedirs,
        }
    }
}

/// Locally monomial foliations: presentations, blow-up charts and localization.
#[derive(Parser, Debug)]
#[command(
    name = "monofol",
    version,
    after_help = "Exit codes: 0 ok, 2 parse error, 3 invalid center, 4 length mismatch, 5 verification failure.\n\
                  Indices are 1-based; rationals are written p or p/q."
)]
struct Args {
    command: Cmd,
    /// Presentation file (JSON).
    input: PathBuf,
    /// Center indices, e.g. 1,2.
    #[arg(long, value_delimiter = ',')]
    center: Option<Vec<usize>>,
    /// Chart index j, a member of the center.
    #[arg(long)]
    chart: Option<usize>,
    /// Point coordinates, e.g. 1,0 or 1/2,-3.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_point_coord)]
    point: Option<Vec<Rat>>,
    /// Seed for the randomized checks of `verify`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file; standard output when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

fn parse_point_coord(s: &str) -> Result<Rat, String> {
    parse_rat(s).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let job = Job {
        input: args.input,
        command: args.command.into(),
        center: args.center,
        chart: args.chart,
        point: args.point,
        seed: args.seed,
        output: args.output,
    };
    let outcome = run(&job);
    if outcome.is_error() {
        eprint!("{}", outcome.render());
    } else if job.output.is_none() {
        print!("{}", outcome.render());
    }
    ExitCode::from(outcome.code as u8)
}
