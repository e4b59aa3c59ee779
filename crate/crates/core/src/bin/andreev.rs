fn main() {
    std::process::exit(andreev::cli::run(std::env::args_os()));
}
