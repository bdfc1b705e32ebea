fn main() {
    std::process::exit(spherical_zeta::cli::main_with_args(std::env::args_os()));
}
