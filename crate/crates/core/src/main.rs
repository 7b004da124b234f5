fn main() {
    std::process::exit(gl3moments::cli::main_entry());
}
