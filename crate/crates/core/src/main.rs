fn main() {
    std::process::exit(icup::cli::run(std::env::args_os()));
}
