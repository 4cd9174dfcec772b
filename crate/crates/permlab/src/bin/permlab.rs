fn main() {
    std::process::exit(permlab::cli::run());
}
