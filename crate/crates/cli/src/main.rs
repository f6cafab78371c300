fn main() {
    std::process::exit(wallislab_cli::run(std::env::args_os()));
}
