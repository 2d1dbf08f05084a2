use clap::Parser;
use totient_census::cli::{exit_code, run, Cli, RunConfig};

fn main() {
    let cli = Cli::parse();
    let result = RunConfig::from_cli(cli).and_then(|cfg| run(&cfg));
    if let Err(e) = result {
        eprintln!("totient-census: {e}");
        std::process::exit(exit_code(&e));
    }
}
