#![allow(dead_code)]

use coxcenter::{CoxeterMatrix, GenSet, Label, Word};
use rand::Rng;

pub const SWEEP_LABELS: [Label; 6] = [
    Label::Finite(2),
    Label::Finite(3),
    Label::Finite(4),
    Label::Finite(5),
    Label::Finite(6),
    Label::Infinity,
];

/// Every rank-2 and rank-3 matrix with off-diagonal labels in {2,...,6,∞}.
pub fn sweep_systems() -> Vec<CoxeterMatrix> {
    let mut out = Vec::new();
    for &l in &SWEEP_LABELS {
        out.push(CoxeterMatrix::dihedral(l));
    }
    for &a in &SWEEP_LABELS {
        for &b in &SWEEP_LABELS {
            for &c in &SWEEP_LABELS {
                out.push(CoxeterMatrix::from_edges(3, &[(0, 1, a), (0, 2, b), (1, 2, c)]).unwrap());
            }
        }
    }
    out
}

pub fn triangle(a: u32, b: u32, c: u32) -> CoxeterMatrix {
    CoxeterMatrix::from_edges(3, &[(0, 1, a.into()), (1, 2, b.into()), (0, 2, c.into())]).unwrap()
}

pub fn infinite_dihedral() -> CoxeterMatrix {
    CoxeterMatrix::dihedral(Label::Infinity)
}

/// Direct sum of the given systems, with generators placed at the listed positions.
pub fn composite(rank: usize, parts: &[(&CoxeterMatrix, &[usize])]) -> CoxeterMatrix {
    let mut edges = Vec::new();
    for (m, positions) in parts {
        assert_eq!(m.rank(), positions.len());
        for i in 0..m.rank() {
            for j in i + 1..m.rank() {
                edges.push((positions[i], positions[j], m.label(i, j)));
            }
        }
    }
    CoxeterMatrix::from_edges(rank, &edges).unwrap()
}

/// Rank-4 and rank-5 systems mixing finite and infinite components, some interleaved.
pub fn structured_composites() -> Vec<CoxeterMatrix> {
    let a1 = CoxeterMatrix::type_a(1);
    let a2 = CoxeterMatrix::type_a(2);
    let a3 = CoxeterMatrix::type_a(3);
    let b2 = CoxeterMatrix::type_b(2);
    let b3 = CoxeterMatrix::type_b(3);
    let h3 = CoxeterMatrix::type_h(3);
    let i5 = CoxeterMatrix::dihedral(5.into());
    let i6 = CoxeterMatrix::dihedral(6.into());
    let inf = infinite_dihedral();
    let tri = triangle(3, 3, 3);
    let hyp237 = CoxeterMatrix::chain(&[3.into(), 7.into()]).unwrap();
    let c2_affine = CoxeterMatrix::chain(&[4.into(), 4.into()]).unwrap();
    let g2_affine = CoxeterMatrix::chain(&[3.into(), 6.into()]).unwrap();
    let hyp535 = CoxeterMatrix::chain(&[5.into(), 3.into(), 5.into()]).unwrap();
    let c3_affine = CoxeterMatrix::chain(&[4.into(), 3.into(), 4.into()]).unwrap();
    vec![
        composite(4, &[(&a2, &[0, 1]), (&inf, &[2, 3])]),
        composite(4, &[(&a2, &[0, 2]), (&inf, &[1, 3])]),
        composite(4, &[(&b2, &[0, 1]), (&inf, &[2, 3])]),
        composite(4, &[(&b2, &[1, 3]), (&inf, &[0, 2])]),
        composite(4, &[(&i5, &[0, 1]), (&inf, &[2, 3])]),
        composite(4, &[(&i6, &[2, 3]), (&inf, &[0, 1])]),
        composite(4, &[(&a1, &[0]), (&a1, &[1]), (&inf, &[2, 3])]),
        composite(4, &[(&a1, &[3]), (&tri, &[0, 1, 2])]),
        composite(4, &[(&a1, &[1]), (&hyp237, &[0, 2, 3])]),
        composite(4, &[(&a1, &[0]), (&c2_affine, &[1, 2, 3])]),
        composite(4, &[(&a1, &[2]), (&g2_affine, &[0, 1, 3])]),
        composite(4, &[(&inf, &[0, 1]), (&inf, &[2, 3])]),
        composite(5, &[(&a3, &[0, 1, 2]), (&inf, &[3, 4])]),
        composite(5, &[(&b3, &[0, 2, 4]), (&inf, &[1, 3])]),
        composite(5, &[(&h3, &[2, 3, 4]), (&inf, &[0, 1])]),
        composite(5, &[(&a2, &[0, 1]), (&tri, &[2, 3, 4])]),
        composite(5, &[(&b2, &[3, 4]), (&tri, &[0, 1, 2])]),
        composite(5, &[(&a1, &[4]), (&hyp535, &[0, 1, 2, 3])]),
        composite(5, &[(&a1, &[0]), (&a1, &[2]), (&tri, &[1, 3, 4])]),
        composite(5, &[(&a1, &[2]), (&c3_affine, &[0, 1, 3, 4])]),
    ]
}

pub fn random_word<R: Rng>(rng: &mut R, rank: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::new((0..len).map(|_| rng.gen_range(0..rank)))
}

/// A word equal to `w` in the group: inserts `s s` pairs and `(s t)^m` relators.
pub fn disguise<R: Rng>(rng: &mut R, m: &CoxeterMatrix, w: &Word, max_len: usize) -> Word {
    let mut letters: Vec<usize> = w.letters().iter().map(|&l| l as usize).collect();
    let rank = m.rank();
    for _ in 0..rng.gen_range(1..=3) {
        let pos = rng.gen_range(0..=letters.len());
        let s = rng.gen_range(0..rank);
        let t = rng.gen_range(0..rank);
        let insert: Vec<usize> = match m.label(s, t) {
            Label::Finite(k) if s != t && letters.len() + 2 * k as usize <= max_len => {
                (0..2 * k as usize).map(|i| if i % 2 == 0 { s } else { t }).collect()
            }
            _ if letters.len() + 2 <= max_len => vec![s, s],
            _ => continue,
        };
        letters.splice(pos..pos, insert);
    }
    Word::new(letters)
}

pub fn subsets(set: GenSet) -> Vec<GenSet> {
    set.subsets().collect()
}
