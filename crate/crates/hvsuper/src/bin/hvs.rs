fn main() {
    std::process::exit(hvsuper::cli::run());
}
