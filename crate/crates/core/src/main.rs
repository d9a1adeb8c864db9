fn main() {
    std::process::exit(logpoly::cli::main_with_args(std::env::args_os()));
}
