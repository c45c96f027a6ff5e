fn main() {
    std::process::exit(k3pairs::cli::run(std::env::args_os()));
}
