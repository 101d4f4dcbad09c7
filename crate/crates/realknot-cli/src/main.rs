fn main() {
    eprintln!("realknot: not yet wired up");
    std::process::exit(2);
}
