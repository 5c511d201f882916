fn main() {
    std::process::exit(mawdist::cli::main_with_args(std::env::args_os()));
}
