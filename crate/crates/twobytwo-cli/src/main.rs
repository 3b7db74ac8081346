fn main() {
    std::process::exit(twobytwo_cli::cli::main());
}
