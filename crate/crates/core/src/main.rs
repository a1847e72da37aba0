fn main() {
    std::process::exit(iterop::cli::main_entry());
}
