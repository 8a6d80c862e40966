fn main() {
    std::process::exit(qfrob::cli::main_with(std::env::args_os()));
}
