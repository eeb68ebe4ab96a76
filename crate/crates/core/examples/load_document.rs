//! Reading a JSON system document and running commands as the binary does.

use coxcenter::cli::{dispatch, load_system, Command, Flags, Source};

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/systems/a2_plus_infinite_dihedral.json").to_string());
    let doc = match load_system(Source::Path(path.as_ref())) {
        Ok(doc) => doc,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    };
    println!("{}", doc.to_json());
    for command in [Command::Components, Command::Essential, Command::Center, Command::Verify] {
        let out = dispatch(command, &doc, &Flags::default());
        print!("-- {}\n{}{}", command.name(), out.stdout, out.stderr);
    }
}
