fn main() {
    std::process::exit(admissible_poisson::cli::main_with_args());
}
