use clap::Parser;

fn main() -> std::process::ExitCode {
    let cli = hypersid::cli::Cli::parse();
    let stdout = std::io::stdout();
    match hypersid::cli::run(cli, &mut stdout.lock()) {
        Ok(()) => std::process::ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e);
            std::process::ExitCode::from(2)
        }
    }
}
