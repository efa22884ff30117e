fn main() {
    let status = zinbiel::cli::run(std::env::args_os(), &mut std::io::stdout().lock());
    std::process::exit(status);
}
