//! Regenerates the golden suite: `cargo run -p gl11-cli --example gen_suite [DIR]`.

use std::fs;
use std::path::PathBuf;

fn main() -> anyhow::Result<()> {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(gl11_cli::suite::default_dir);
    for (rel, text) in gl11_cli::suite::generate()? {
        let path = dir.join(&rel);
        fs::create_dir_all(path.parent().unwrap())?;
        fs::write(&path, text)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
