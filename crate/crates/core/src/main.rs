fn main() {
    std::process::exit(beid::cli::main());
}
