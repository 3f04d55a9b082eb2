fn main() {
    std::process::exit(cubewalk::cli::run(std::env::args_os()));
}
