fn main() {
    std::process::exit(stirling_bernoulli::cli::run());
}
