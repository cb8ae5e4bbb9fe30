fn main() {
    std::process::exit(netmorph::cli::main_with_args(std::env::args_os()));
}
