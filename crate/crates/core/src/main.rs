fn main() {
    std::process::exit(rbcenter::cli::run(std::env::args_os()));
}
