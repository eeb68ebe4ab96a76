//! Component decomposition and finite-type recognition, checked against the Gram matrix.

use coxcenter::oracle::{gram_eigenvalues, gram_positive_definite};
use coxcenter::{classify_component, components, CoxeterMatrix, Label};

fn main() -> coxcenter::Result<()> {
    let gallery = [
        ("E8", CoxeterMatrix::type_e(8)),
        ("D5", CoxeterMatrix::type_d(5)),
        ("H4", CoxeterMatrix::type_h(4)),
        ("affine A2", CoxeterMatrix::from_edges(3, &[(0, 1, 3.into()), (1, 2, 3.into()), (0, 2, 3.into())])?),
        ("(2,3,7) triangle", CoxeterMatrix::chain(&[3.into(), 7.into()])?),
        ("affine C2", CoxeterMatrix::chain(&[4.into(), 4.into()])?),
        (
            "A2 + infinite dihedral + A1",
            CoxeterMatrix::from_edges(5, &[(0, 1, 3.into()), (2, 3, Label::Infinity)])?,
        ),
    ];
    for (name, m) in &gallery {
        println!("== {name}");
        for c in components(m, m.generators())? {
            let class = classify_component(&c, m);
            let least = gram_eigenvalues(m, c.members)[0];
            let gram = gram_positive_definite(m, c.members);
            println!("  {{{}}}: {class:<10} least Gram eigenvalue {least:+.6}", c.members);
            assert_eq!(class.is_finite(), gram);
        }
    }
    Ok(())
}
