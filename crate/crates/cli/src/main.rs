fn main() {
    std::process::exit(seqlab_cli::main_with_args(std::env::args_os()));
}
