fn main() {
    std::process::exit(volset::cli::main_entry());
}
