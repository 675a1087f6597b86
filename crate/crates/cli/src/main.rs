fn main() {
    std::process::exit(wigner_cli::run(std::env::args_os()));
}
