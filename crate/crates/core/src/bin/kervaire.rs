use clap::Parser;
use kervaire::cli::{pretty, run, Cli};

fn main() {
    let cli = Cli::parse();
    let result = run(&cli);
    if cli.pretty {
        println!("{}", pretty(&result));
    } else {
        println!("{}", result.payload);
    }
    if result.status != 0 {
        if let Some(msg) = result.payload.get("message").and_then(|m| m.as_str()) {
            eprintln!("kervaire {}: {msg}", result.command);
        }
    }
    std::process::exit(result.status);
}
