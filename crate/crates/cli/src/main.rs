fn main() {
    std::process::exit(owlseg_cli::run(std::env::args_os()));
}
