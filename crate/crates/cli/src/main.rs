use std::io::Write;

fn main() {
    let d = std::env::var("TRIOP_D").ok();
    let (code, out, err) = triop_cli::run(std::env::args_os(), d.as_deref());
    let _ = std::io::stdout().write_all(out.as_bytes());
    let _ = std::io::stderr().write_all(err.as_bytes());
    std::process::exit(code);
}
