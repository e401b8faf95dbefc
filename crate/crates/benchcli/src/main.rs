fn main() {
    std::process::exit(benchcli::run());
}
