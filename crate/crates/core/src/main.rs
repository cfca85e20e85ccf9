use clap::Parser;

fn main() {
    let cli = gridemb::cli::Cli::parse();
    std::process::exit(gridemb::cli::run(&cli));
}
