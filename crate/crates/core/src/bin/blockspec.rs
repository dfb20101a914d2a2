fn main() {
    std::process::exit(blockspec::cli::run(std::env::args_os()));
}
