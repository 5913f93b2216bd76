use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use quartic_squares::cli::{
    cmd_fixed, cmd_mestre, cmd_paper_check, cmd_verify, Console, MestreInput,
};

#[derive(Parser)]
#[command(
    version,
    about = "Curves y^2 = ax^4 + bx^2 + c through six consecutive squares"
)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Curve through six squares with half-integer offsets
    #[command(group(ArgGroup::new("param").required(true).args(["t", "symbolic"])))]
    Mestre {
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
        #[arg(long)]
        symbolic: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Curves through (t+i)^2, i = -2..3, from multiples of a Jacobian point
    Fixed {
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Re-check every record in a JSON file
    Verify { path: PathBuf },
    /// Compare derived values with the reference constants
    PaperCheck {
        #[arg(long)]
        report: PathBuf,
    },
}

fn main() -> ExitCode {
    let args = Args::parse();
    let (mut out, mut err) = (std::io::stdout(), std::io::stderr());
    let mut console = Console {
        out: &mut out,
        err: &mut err,
    };
    let outcome = match args.command {
        Command::Mestre { t, symbolic, out } => {
            let input = match (symbolic, t) {
                (true, _) => MestreInput::Symbolic,
                (false, Some(t)) => MestreInput::At(t),
                (false, None) => unreachable!("clap requires --t or --symbolic"),
            };
            cmd_mestre(&input, &out, &mut console)
        }
        Command::Fixed { t, count, out } => cmd_fixed(&t, count, &out, &mut console),
        Command::Verify { path } => cmd_verify(&path, &mut console),
        Command::PaperCheck { report } => cmd_paper_check(&report, &mut console),
    };
    ExitCode::from(outcome.code())
}
