fn main() {
    std::process::exit(pauli_isa::cli::main_with_args(std::env::args_os()));
}
