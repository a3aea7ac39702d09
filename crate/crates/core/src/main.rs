fn main() {
    std::process::exit(genus_forge::cli::run(std::env::args_os()));
}
