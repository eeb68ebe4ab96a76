//! Splitting a Coxeter system into its infinite components and the finite rest.

use coxcenter::{center, check_theorem2, essential_subset, CoxeterMatrix, Label};

fn main() -> coxcenter::Result<()> {
    // H3 on {1, 3, 4}, an affine triangle on {0, 2, 5}
    let m = CoxeterMatrix::from_edges(
        6,
        &[
            (1, 3, 5.into()),
            (3, 4, 3.into()),
            (0, 2, 3.into()),
            (2, 5, 3.into()),
            (0, 5, 3.into()),
        ],
    )?;
    let split = essential_subset(&m);
    println!("essential generators: {{{}}}", split.members);
    println!("finite part:          {{{}}}", split.complement);
    let z = center(&m)?;
    for (g, s) in z.generators.iter().zip(&z.supports) {
        println!("central generator {g} supported on {{{s}}}");
    }
    let report = check_theorem2(&m)?;
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    assert!(report.all_hold());

    let free = CoxeterMatrix::from_edges(2, &[(0, 1, Label::Infinity)])?;
    println!("infinite dihedral: essential {{{}}}", essential_subset(&free).members);
    Ok(())
}
