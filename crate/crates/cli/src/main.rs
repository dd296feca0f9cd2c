fn main() {
    std::process::exit(quasitoric::app::main_exit());
}
