fn main() {
    std::process::exit(isoper8::cli::run());
}
