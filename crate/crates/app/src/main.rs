fn main() {
    std::process::exit(pizza_app::run(std::env::args_os()));
}
