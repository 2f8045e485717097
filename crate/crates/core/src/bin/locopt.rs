use std::io::Write;

fn main() {
    let (code, out) = locopt::cli::run(std::env::args_os());
    let out = out.trim_end();
    // usage errors are plain text; everything else is JSON for stdout
    let res = if code == 2 && !out.starts_with('{') {
        writeln!(std::io::stderr(), "{out}")
    } else {
        writeln!(std::io::stdout(), "{out}")
    };
    drop(res);
    std::process::exit(code);
}
