fn main() {
    std::process::exit(starlat::cli::main_with_args(std::env::args()));
}
