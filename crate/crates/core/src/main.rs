fn main() {
    std::process::exit(graph_addressing::cli::main_with_args(std::env::args_os()));
}
