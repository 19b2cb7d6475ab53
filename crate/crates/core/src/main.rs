fn main() {
    env_logger::init();
    std::process::exit(zeroth::cli::run(std::env::args_os()));
}
