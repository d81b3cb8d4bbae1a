fn main() {
    std::process::exit(homext_cli::run(std::env::args_os()));
}
