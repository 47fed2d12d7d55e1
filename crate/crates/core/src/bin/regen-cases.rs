//! Rewrites the text form of every registry case under `cases/`. Run after
//! touching `proofs::registry`; the library tests fail if the files drift
//! from the builders.

use std::fs;
use std::path::Path;

use superalg::proofs::{registry, serialize_case};

fn main() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("cases");
    fs::create_dir_all(&dir).expect("create cases directory");
    for case in registry::all_cases().expect("registry builds") {
        let text = serialize_case(&case).expect("case serializes");
        let path = dir.join(format!("{}.case", case.id));
        fs::write(&path, text).expect("write case file");
        println!("wrote {}", path.display());
    }
}
