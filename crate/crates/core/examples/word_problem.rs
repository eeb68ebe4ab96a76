//! Canonical forms, products, inverses and descents in a few Coxeter groups.

use coxcenter::{reduce_by_braid_moves, CoxeterMatrix, Label, Word, WordEngine};

fn show(e: &coxcenter::CanonicalElement) -> String {
    if e.is_identity() {
        "e".to_string()
    } else {
        e.to_string()
    }
}

fn main() -> coxcenter::Result<()> {
    let systems = [
        ("A2", CoxeterMatrix::type_a(2)),
        ("B2", CoxeterMatrix::type_b(2)),
        ("H3", CoxeterMatrix::type_h(3)),
        ("infinite dihedral", CoxeterMatrix::dihedral(Label::Infinity)),
    ];
    let inputs = ["0 1 0 1", "1 0 1 0 1", "0 0 1", "2 1 2 1 0 1 2"];
    for (name, m) in &systems {
        println!("== {name}");
        let mut engine = WordEngine::new(m);
        for input in inputs {
            let w: Word = input.parse().expect("literal words parse");
            if w.validate(m).is_err() {
                continue;
            }
            let e = engine.reduce(&w)?;
            let inv = engine.invert(&e)?;
            let d = engine.right_descents(&e)?;
            println!("  {input:<16} -> {:<12} length {}  inverse {:<12} descents {{{d}}}", show(&e), e.length(), show(&inv));
            // the rewriting procedure by braid moves agrees, it is just slower
            assert_eq!(reduce_by_braid_moves(&w, m, 100_000)?, e);
        }
    }

    let f4 = CoxeterMatrix::type_f4();
    let mut engine = WordEngine::new(&f4);
    let a = engine.reduce(&"0 1 2 3 2 1".parse().expect("literal"))?;
    let b = engine.reduce(&"1 2 1 0 3".parse().expect("literal"))?;
    let ab = engine.multiply(&a, &b)?;
    println!("== F4\n  ({a}) * ({b}) = {ab}");
    println!("  cached elements after these products: {}", engine.cached_elements());
    Ok(())
}
