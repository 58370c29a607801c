fn main() {
    std::process::exit(qweight::cli::run_with_args(std::env::args_os()));
}
