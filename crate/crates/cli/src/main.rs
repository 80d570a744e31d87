use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser, Debug)]
#[command(name = "lglaisher", version, about = "Bijections between k,l-regular and l,k-regular partitions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Map a k,l-regular partition to an l,k-regular one (Glaisher's map when --l is absent).
    Map(MapArgs),
    /// Undo `map` with the same --k, --l and strategy.
    Inverse(MapArgs),
    /// List partitions of n, optionally restricted to k,l-regular ones.
    Enumerate(EnumerateArgs),
    /// Print the truncated generating functions and check that their forms agree.
    Series(SeriesArgs),
    /// Run invariant sweeps.
    Verify(VerifyArgs),
    /// Tabulate the bijection on every k,l-regular partition of n with its grids.
    Table(TableArgs),
    /// Compare a Schur-type companion class with R_{k,2} counts.
    Companions(CompanionArgs),
    /// Show the prime and optimal factorizations used by the bijection.
    Factorize(FactorizeArgs),
    /// Check whether reordering prime factors changes any image.
    OrderReport(OrderReportArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, Default, PartialEq, Eq)]
enum Format {
    #[default]
    Human,
    Tsv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, Default, PartialEq, Eq)]
enum StrategyName {
    Prime,
    #[default]
    Optimal,
}

#[derive(Args, Debug, Clone)]
struct StrategyArgs {
    #[arg(long, value_enum, default_value_t = StrategyName::Optimal, conflicts_with = "factors")]
    strategy: StrategyName,
    /// Explicit factor lists, e.g. `2,2/2,3` for k=4, l=12.
    #[arg(long)]
    factors: Option<String>,
}

#[derive(Args, Debug)]
struct MapArgs {
    #[arg(long)]
    k: u64,
    #[arg(long)]
    l: Option<u64>,
    #[command(flatten)]
    strategy: StrategyArgs,
    /// Print the intermediate grids.
    #[arg(long)]
    show_grid: bool,
    /// Emit Glaisher merge steps as JSON lines (only without --l).
    #[arg(long)]
    trace: bool,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Partition such as `1^2 3^5 5^3`.
    partition: String,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    l: Option<u64>,
    /// Over-partitions instead of partitions.
    #[arg(long, conflicts_with_all = ["k", "l"])]
    over: bool,
    /// Print only the number of objects.
    #[arg(long)]
    count: bool,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args, Debug)]
struct SeriesArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    l: Option<usize>,
    /// Truncation order N (coefficients up to q^N).
    #[arg(long, env = "LGLAISHER_SERIES_ORDER", default_value_t = 20)]
    order: usize,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Bijectivity and inverse round-trips over R_{k,l}(n).
    #[arg(long)]
    bijection: bool,
    /// Agreement of the product, swapped product and eta-quotient forms.
    #[arg(long)]
    series: bool,
    /// Series coefficients against enumeration counts.
    #[arg(long)]
    counts: bool,
    /// Glaisher map properties under random merge orders.
    #[arg(long)]
    glaisher: bool,
    /// Mixed-radix digit and factor-form checks.
    #[arg(long)]
    mixed_radix: bool,
    /// Largest k and l for bijection and count sweeps (from 2).
    #[arg(long, default_value_t = 6)]
    kl_max: u64,
    #[arg(long, default_value_t = 20)]
    n_max: u64,
    /// Largest k and l for series sweeps (from 1).
    #[arg(long, default_value_t = 8)]
    series_kl_max: usize,
    #[arg(long, env = "LGLAISHER_SERIES_ORDER", default_value_t = 200)]
    order: usize,
    #[arg(long, default_value_t = 100)]
    policies: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 5040)]
    max_product: u64,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long)]
    k: u64,
    #[arg(long)]
    l: u64,
    #[arg(long)]
    n: u64,
    #[command(flatten)]
    strategy: StrategyArgs,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args, Debug)]
struct CompanionArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(3..=5))]
    k: u64,
    /// schur, alladi, aab-pair or companion; defaults to every variant for k.
    #[arg(long)]
    variant: Option<String>,
    #[arg(long, default_value_t = 40)]
    n_max: u64,
}

#[derive(Args, Debug)]
struct FactorizeArgs {
    #[arg(long)]
    k: u64,
    #[arg(long)]
    l: u64,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args, Debug)]
struct OrderReportArgs {
    #[arg(long)]
    k: u64,
    #[arg(long)]
    l: u64,
    #[arg(long, default_value_t = 20)]
    n_max: u64,
}

/// What a successful run reports back for the exit status.
pub enum Outcome {
    Ok,
    Failed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
