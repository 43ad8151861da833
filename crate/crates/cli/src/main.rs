use clap::{Parser, Subcommand};
use sutherland_cli::commands::{self, verify::VerifyArgs, EXIT_CONFIG};
use sutherland_cli::config::CommonArgs;

/// Wave functions of the hyperbolic Sutherland model by Mellin–Barnes
/// contour quadrature.
#[derive(Parser)]
#[command(name = "sutherland", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate Φ and Ψ at the given x points
    Eval {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run the coefficient and kernel identity suite
    Verify(VerifyArgs),
    /// Compare rank-2 quadrature against the closed form
    CompareN2 {
        #[command(flatten)]
        common: CommonArgs,
    },
}

fn main() {
    // clap's own usage failures exit with code 2, which this interface
    // reserves for coarse grids; map parse errors to the config-error code.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            let code = if e.use_stderr() { EXIT_CONFIG } else { 0 };
            std::process::exit(code);
        }
    };
    let code = match &cli.command {
        Command::Eval { common } => commands::eval::run(common),
        Command::Verify(args) => commands::verify::run(args),
        Command::CompareN2 { common } => commands::compare::run(common),
    };
    std::process::exit(code);
}
