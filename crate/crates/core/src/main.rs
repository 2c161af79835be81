fn main() {
    std::process::exit(nderiv::cli::run(std::env::args_os()));
}
