//! Brute-force centers in the reflection representation against the exact computation.

use coxcenter::oracle::{ball_enumeration, brute_center, enumerate_group};
use coxcenter::{center, CoxeterMatrix, Label};

fn main() -> coxcenter::Result<()> {
    for (name, m) in [
        ("F4", CoxeterMatrix::type_f4()),
        ("H3", CoxeterMatrix::type_h(3)),
        ("D4", CoxeterMatrix::type_d(4)),
    ] {
        let e = enumerate_group(&m, 20_000);
        let brute = brute_center(&e);
        let z = center(&m)?;
        println!("{name}: {} elements, brute center {} elements, exact {}", e.len(), brute.len(), z.elements.len());
        assert!(e.complete && brute == z.elements);
    }
    let m = CoxeterMatrix::from_edges(3, &[(0, 1, Label::Infinity), (1, 2, 3.into())])?;
    let ball = ball_enumeration(&m, 8);
    println!(
        "[inf, 3] chain: radius-8 ball of {} elements, central elements found {}",
        ball.len(),
        brute_center(&ball).len()
    );
    Ok(())
}
