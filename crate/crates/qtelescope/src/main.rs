fn main() {
    std::process::exit(qtelescope::cli::run(std::env::args()));
}
