use clap::Parser;
use quasicat::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let report = run(&cli);
    if cli.json {
        print!("{}", report.to_json());
    } else {
        println!("{report}");
    }
    std::process::exit(report.exit_code_hint);
}
