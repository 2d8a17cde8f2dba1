fn main() {
    std::process::exit(jigsaw::cli::run_from_env());
}
