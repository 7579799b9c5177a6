fn main() {
    std::process::exit(hkdet::cli::run(std::env::args_os()));
}
