fn main() {
    std::process::exit(rvc_core::cli::run(std::env::args()));
}
