fn main() {
    std::process::exit(szeta::cli::main());
}
