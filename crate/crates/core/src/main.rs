fn main() {
    std::process::exit(ptorsion::cli::main_with(std::env::args_os()));
}
