//! lplab: lp-geometry experiments from the command line.

mod args;
mod commands;
mod output;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "lplab",
    version,
    about = "Projection norms, Birkhoff-James orthogonality, and shift-model certificates on lp spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Projection norms for regular representations of Z_n over (n, p) grids.
    Sweep(commands::sweep::SweepArgs),
    /// Norm of the block p-sum of mean complements over cyclic groups.
    Stack(commands::stack::StackArgs),
    /// Birkhoff-James orthogonality report for two dense vectors.
    Bj(commands::bj::BjArgs),
    /// Shift-model orthogonality certificate on a seeded random instance.
    Theorem1(commands::theorem1::TheoremArgs),
    /// Projection norms for one group (Cayley file or cyclic sizes).
    Opnorm(commands::opnorm::OpnormArgs),
    /// Closed-form Opial limits for a translated-bump sequence.
    Opial(commands::opial::OpialArgs),
}

fn main() {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Sweep(a) => commands::sweep::run(a),
        Command::Stack(a) => commands::stack::run(a),
        Command::Bj(a) => commands::bj::run(a),
        Command::Theorem1(a) => commands::theorem1::run(a),
        Command::Opnorm(a) => commands::opnorm::run(a),
        Command::Opial(a) => commands::opial::run(a),
    };
    if let Err(error) = result {
        // single machine-parseable line
        eprintln!("error: {error:#}");
        std::process::exit(1);
    }
}
