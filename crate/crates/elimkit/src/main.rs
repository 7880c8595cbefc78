fn main() {
    let env_seed = std::env::var(elimkit::cli::SEED_ENV).ok();
    let code = elimkit::cli::run(std::env::args_os(), env_seed, &mut std::io::stdout(), &mut std::io::stderr());
    std::process::exit(code);
}
