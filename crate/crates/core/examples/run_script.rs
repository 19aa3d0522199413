//! Running a `.solv` script from Rust.
//!
//! `cargo run --example run_script -- path/to/file.solv` runs a file; with no
//! argument a small built-in script is used.

use solvkit::frontend::{run_script, Options};

const DEMO: &str = "\
algebra W field QQ gens x d order deglex(x, d)
rel d*x = x*d + 1
print (x*d)^2
ideal I = [x*d + 1]
gb I
member x^2*d + x in I
";

fn main() {
    let src = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}")),
        None => DEMO.to_string(),
    };
    for json in [false, true] {
        let t = run_script(
            &src,
            &Options {
                json,
                ..Options::default()
            },
        );
        print!("{}", t.stdout);
        eprint!("{}", t.stderr);
        if t.exit_code != 0 {
            std::process::exit(t.exit_code);
        }
    }
}
