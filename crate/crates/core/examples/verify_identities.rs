//! Every built-in identity through the command-line entry point.

use crystal_identities::cli::{run, IDENTITIES};

fn main() {
    for tag in IDENTITIES {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            ["crystal-identities", "verify", "--identity", tag, "--order", "12"],
            &mut out,
            &mut err,
        );
        let text = String::from_utf8_lossy(&out);
        println!("{tag:>15}: exit {code}, {}", text.lines().last().unwrap_or(""));
    }
}
