//! Drives the command-line front end in-process: writes a matrix file,
//! classifies it and prints the JSON report.
//!
//!     cargo run --example cli_files

use semimonotone::cli::{format_matrix, run};
use semimonotone::fixtures;

fn main() -> std::io::Result<()> {
    let dir = std::env::temp_dir().join("semimono-example");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("a.txt");
    std::fs::write(&path, format_matrix(&fixtures::example_4x4_asymmetric()))?;

    let p = path.to_string_lossy().to_string();
    let table = run(["semimono", "classify", &p]);
    print!("{}", table.stdout);
    let json = run(["semimono", "--json", "audit", &p, "invariance", "--seed", "3", "--attempts", "4"]);
    println!("exit {}\n{}", json.code, json.stdout);
    Ok(())
}
