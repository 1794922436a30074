fn main() {
    std::process::exit(qwalled_cli::main_with(std::env::args_os()));
}
