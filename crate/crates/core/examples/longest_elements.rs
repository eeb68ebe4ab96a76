//! Longest elements of spherical parabolic subgroups and the length identity they satisfy.

use coxcenter::oracle::enumerate_group;
use coxcenter::{is_spherical, longest_element_with, CoxeterMatrix, WordEngine};

fn main() -> coxcenter::Result<()> {
    let m = CoxeterMatrix::type_b(4);
    let mut engine = WordEngine::new(&m);
    println!("spherical parabolic subgroups of B4 and their longest elements:");
    for t in m.generators().subsets() {
        if !is_spherical(&m, t)? {
            continue;
        }
        let w0 = longest_element_with(&mut engine, t)?;
        println!("  {{{t:<7}}} length {:>2}: {w0}", w0.length());
    }

    let w0 = longest_element_with(&mut engine, m.generators())?;
    let group = enumerate_group(&m, 1_000);
    for w in &group.elements {
        assert_eq!(engine.multiply(&w0, w)?.length(), w0.length() - w.length());
    }
    println!("l(w0 w) = l(w0) - l(w) holds on all {} elements", group.len());

    let triangle = CoxeterMatrix::from_edges(3, &[(0, 1, 3.into()), (1, 2, 3.into()), (0, 2, 3.into())])?;
    println!("affine A2 spherical: {}", is_spherical(&triangle, triangle.generators())?);
    Ok(())
}
