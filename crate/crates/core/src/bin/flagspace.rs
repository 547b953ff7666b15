fn main() {
    std::process::exit(flagspace::cli::run());
}
