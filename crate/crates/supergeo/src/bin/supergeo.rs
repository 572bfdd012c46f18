use supergeo::cli;

fn main() {
    let (code, output) = cli::run(std::env::args_os());
    if code == 2 {
        eprint!("{output}");
    } else {
        print!("{output}");
    }
    std::process::exit(code);
}
