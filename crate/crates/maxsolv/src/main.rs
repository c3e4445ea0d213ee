fn main() {
    std::process::exit(maxsolv::cli::main_entry());
}
