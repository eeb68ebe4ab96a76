//! Centers of finite, infinite and mixed Coxeter groups.

use coxcenter::{center, CoxeterMatrix, Label};

fn main() -> coxcenter::Result<()> {
    let gallery = [
        ("A1", CoxeterMatrix::type_a(1)),
        ("A3", CoxeterMatrix::type_a(3)),
        ("B3", CoxeterMatrix::type_b(3)),
        ("D5", CoxeterMatrix::type_d(5)),
        ("E6", CoxeterMatrix::type_e(6)),
        ("H4", CoxeterMatrix::type_h(4)),
        ("I2(6)", CoxeterMatrix::dihedral(6.into())),
        ("A1 x A1 x A1", CoxeterMatrix::from_edges(3, &[])?),
        ("infinite dihedral", CoxeterMatrix::dihedral(Label::Infinity)),
        (
            "B2 + infinite dihedral",
            CoxeterMatrix::from_edges(4, &[(0, 1, 4.into()), (2, 3, Label::Infinity)])?,
        ),
    ];
    for (name, m) in &gallery {
        let z = center(m)?;
        let gens: Vec<String> = z.generators.iter().map(|g| format!("[{g}]")).collect();
        println!("{name:<24} Z(W) = (Z_2)^{}  generators {}", z.rank_n, gens.join(" "));
    }
    Ok(())
}
