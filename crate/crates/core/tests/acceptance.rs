//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero on any failure.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use coxcenter::oracle::{
    ball_enumeration, brute_center, enumerate_group, gram_positive_definite, EnumerationResult, GeometricModel,
    DEFAULT_BALL_RADIUS, DEFAULT_ENUMERATION_CAP,
};
use coxcenter::{
    center_with, check_theorem2, classify_component, components, coxeter_order, is_spherical, longest_element_with,
    support, CanonicalElement, Classification, CoxeterMatrix, GenSet, Label, Word, WordEngine,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn infallible<T>(r: coxcenter::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Sweep systems enumerating completely within the cap, with their enumerations.
struct FiniteRuns {
    runs: Vec<(CoxeterMatrix, EnumerationResult)>,
}

impl FiniteRuns {
    fn collect() -> Self {
        let runs = sweep_systems()
            .into_iter()
            .filter_map(|m| {
                let e = enumerate_group(&m, DEFAULT_ENUMERATION_CAP);
                e.complete.then_some((m, e))
            })
            .collect();
        FiniteRuns { runs }
    }
}

fn criterion_1() -> Outcome {
    let mut ranks = BTreeMap::new();
    for m in sweep_systems() {
        let mut engine = WordEngine::new(&m);
        let z = infallible(center_with(&mut engine))?;
        let set: BTreeSet<_> = z.elements.iter().cloned().collect();
        check(z.elements.len() == 1 << z.rank_n && set.len() == z.elements.len(), || {
            format!("{m}: {} elements for rank {}", z.elements.len(), z.rank_n)
        })?;
        for a in &z.elements {
            check(infallible(engine.multiply(a, a))?.is_identity(), || format!("{m}: {a} squared"))?;
            for b in &z.elements {
                let ab = infallible(engine.multiply(a, b))?;
                check(set.contains(&ab), || format!("{m}: {a} * {b} not in center"))?;
            }
        }
        *ranks.entry(z.rank_n).or_insert(0) += 1;
    }
    Ok(format!("222 systems, center ranks {ranks:?}"))
}

fn criterion_2(finite: &FiniteRuns) -> Outcome {
    for (m, e) in &finite.runs {
        let z = infallible(coxcenter::center(m))?;
        let brute = brute_center(e);
        check(brute == z.elements, || format!("{m}: engine {:?} vs brute {:?}", z.elements, brute))?;
    }
    Ok(format!("{} finite systems, cap {DEFAULT_ENUMERATION_CAP}", finite.runs.len()))
}

fn criterion_3() -> Outcome {
    let systems: Vec<_> = sweep_systems().into_iter().chain(structured_composites()).collect();
    for m in &systems {
        let report = infallible(check_theorem2(m))?;
        check(report.all_hold(), || format!("{m}: {report:?}"))?;
    }
    Ok(format!("{} systems (222 sweep + 20 composites)", systems.len()))
}

fn criterion_4() -> Outcome {
    let mut count = 0;
    for m in sweep_systems() {
        let cs = infallible(components(&m, m.generators()))?;
        if cs.len() != 1 || classify_component(&cs[0], &m).is_finite() {
            continue;
        }
        count += 1;
        let ball = ball_enumeration(&m, DEFAULT_BALL_RADIUS);
        check(!ball.complete, || format!("{m}: ball closed"))?;
        let brute = brute_center(&ball);
        check(brute == vec![CanonicalElement::identity()], || format!("{m}: ball center {brute:?}"))?;
        let mut engine = WordEngine::new(&m);
        let model = GeometricModel::new(&m);
        for t in m.generators().subsets() {
            if t.is_empty() || !infallible(is_spherical(&m, t))? {
                continue;
            }
            let w = infallible(longest_element_with(&mut engine, t))?;
            let mut central = true;
            for s in m.generators().iter() {
                central &= infallible(engine.multiply_generator(&w, s))? == infallible(engine.left_multiply_generator(s, &w))?;
            }
            check(!central && !model.is_central(&w.to_word()), || format!("{m}: w0({t}) = {w} is central"))?;
        }
    }
    Ok(format!("{count} irreducible infinite systems, ball radius {DEFAULT_BALL_RADIUS}"))
}

fn small_finite_groups(finite: &FiniteRuns) -> Vec<(CoxeterMatrix, EnumerationResult)> {
    let mut out: Vec<_> = finite
        .runs
        .iter()
        .filter(|(_, e)| e.len() <= 1152)
        .cloned()
        .collect();
    for m in [
        CoxeterMatrix::type_a(3),
        CoxeterMatrix::type_b(3),
        CoxeterMatrix::type_h(3),
        CoxeterMatrix::type_d(4),
        CoxeterMatrix::type_f4(),
    ] {
        let e = enumerate_group(&m, DEFAULT_ENUMERATION_CAP);
        out.push((m, e));
    }
    out
}

fn criterion_5(groups: &[(CoxeterMatrix, EnumerationResult)]) -> Outcome {
    let mut checked = 0usize;
    for (m, e) in groups {
        check(e.complete, || format!("{m}: enumeration incomplete"))?;
        let mut engine = WordEngine::new(m);
        let w0 = infallible(longest_element_with(&mut engine, m.generators()))?;
        check(infallible(engine.multiply(&w0, &w0))?.is_identity(), || format!("{m}: w0 squared"))?;
        for w in &e.elements {
            let p = infallible(engine.multiply(&w0, w))?;
            check(p.length() + w.length() == w0.length(), || format!("{m}: w = {w}"))?;
            checked += 1;
        }
    }
    Ok(format!("{} groups, {checked} elements", groups.len()))
}

fn criterion_6(groups: &[(CoxeterMatrix, EnumerationResult)]) -> Outcome {
    let mut subsets = 0usize;
    for (m, e) in groups {
        let mut engine = WordEngine::new(m);
        let descents: Vec<GenSet> = e
            .elements
            .iter()
            .map(|w| engine.right_descents(w))
            .collect::<coxcenter::Result<_>>()
            .map_err(|x| x.to_string())?;
        for t in m.generators().subsets() {
            let expected = infallible(longest_element_with(&mut engine, t))?;
            let found: Vec<&CanonicalElement> = e
                .elements
                .iter()
                .zip(&descents)
                .filter(|(w, d)| support(w).is_subset(t) && t.is_subset(**d))
                .map(|(w, _)| w)
                .collect();
            check(found == vec![&expected], || format!("{m}, T = {{{t}}}: {found:?}"))?;
            subsets += 1;
        }
    }
    Ok(format!("{} groups, {subsets} subsets", groups.len()))
}

fn criterion_7_8(finite: &FiniteRuns) -> (Outcome, Outcome) {
    let mut central_count = 0;
    let mut pairs = 0;
    let mut first: Option<String> = None;
    let mut second: Option<String> = None;
    for (m, e) in &finite.runs {
        let mut engine = WordEngine::new(m);
        for c in brute_center(e) {
            central_count += 1;
            let supp = support(&c);
            let spherical = is_spherical(m, supp).unwrap_or(false);
            let w0 = longest_element_with(&mut engine, supp).ok();
            if first.is_none() && !(spherical && w0.as_ref() == Some(&c)) {
                first = Some(format!("{m}: {c} is not w0 of its support"));
            }
            for s in m.generators().difference(supp).iter() {
                for t in supp.iter() {
                    pairs += 1;
                    let st = engine.reduce(&Word::new([s, t])).ok();
                    let ts = engine.reduce(&Word::new([t, s])).ok();
                    if second.is_none() && (st.is_none() || st != ts) {
                        second = Some(format!("{m}: {s} and {t} do not commute"));
                    }
                }
            }
        }
    }
    (
        first.map_or(Ok(format!("{central_count} central elements")), Err),
        second.map_or(Ok(format!("{pairs} generator pairs")), Err),
    )
}

/// Upper-triangle labels of `m` after permuting generators by `perm`.
fn relabeled_key(labels: &[[Label; 4]; 4], rank: usize, perm: &[usize]) -> Vec<u32> {
    let mut key = Vec::new();
    for i in 0..rank {
        for j in i + 1..rank {
            key.push(labels[perm[i]][perm[j]].encoded());
        }
    }
    key
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn criterion_9() -> Outcome {
    let mut diagrams = 0usize;
    let mut classes: BTreeMap<(usize, Vec<u32>), Classification> = BTreeMap::new();
    let mut halting_finite = 0;
    let mut halting_infinite = 0;
    for rank in 1..=4usize {
        let perms = permutations(rank);
        let pairs: Vec<(usize, usize)> = (0..rank).flat_map(|i| (i + 1..rank).map(move |j| (i, j))).collect();
        let total = SWEEP_LABELS.len().pow(pairs.len() as u32);
        for code in 0..total {
            let mut labels = [[Label::Finite(1); 4]; 4];
            let mut edges = Vec::new();
            let mut c = code;
            for &(i, j) in &pairs {
                let l = SWEEP_LABELS[c % SWEEP_LABELS.len()];
                c /= SWEEP_LABELS.len();
                labels[i][j] = l;
                labels[j][i] = l;
                edges.push((i, j, l));
            }
            let m = CoxeterMatrix::from_edges(rank, &edges).unwrap();
            let cs = infallible(components(&m, m.generators()))?;
            if cs.len() != 1 {
                continue;
            }
            diagrams += 1;
            let class = classify_component(&cs[0], &m);
            let gram = gram_positive_definite(&m, m.generators());
            check(class.is_finite() == gram, || format!("{m}: {class} but Gram says finite = {gram}"))?;

            let key = perms.iter().map(|p| relabeled_key(&labels, rank, p)).min().unwrap();
            match classes.get(&(rank, key.clone())) {
                Some(&seen) => check(seen == class, || format!("{m}: {class} differs from relabeling {seen}"))?,
                None => {
                    let e = enumerate_group(&m, DEFAULT_ENUMERATION_CAP);
                    match class {
                        Classification::Finite(tag) => {
                            check(e.complete && e.len() as u64 == coxeter_order(tag), || {
                                format!("{m}: {tag} enumerated to {} (complete = {})", e.len(), e.complete)
                            })?;
                            halting_finite += 1;
                        }
                        Classification::Infinite => {
                            check(!e.complete, || format!("{m}: infinite but enumeration closed at {}", e.len()))?;
                            halting_infinite += 1;
                        }
                    }
                    classes.insert((rank, key), class);
                }
            }
        }
    }
    Ok(format!(
        "{diagrams} connected diagrams, {} isomorphism classes ({halting_finite} halt, {halting_infinite} exceed cap {DEFAULT_ENUMERATION_CAP})",
        classes.len()
    ))
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let systems = [
        ("A2", CoxeterMatrix::type_a(2)),
        ("B2", CoxeterMatrix::type_b(2)),
        ("A3", CoxeterMatrix::type_a(3)),
        ("H3", CoxeterMatrix::type_h(3)),
        ("I2(inf)", infinite_dihedral()),
        ("triangle(3,3,3)", triangle(3, 3, 3)),
    ];
    let mut equal_pairs = 0;
    for (name, m) in &systems {
        let model = GeometricModel::new(m);
        let mut engine = WordEngine::new(m);
        for i in 0..1000 {
            let u = random_word(&mut rng, m.rank(), 12);
            let v = if i % 2 == 0 {
                disguise(&mut rng, m, &u, 12)
            } else {
                random_word(&mut rng, m.rank(), 12)
            };
            let ru = infallible(engine.reduce(&u))?;
            let rv = infallible(engine.reduce(&v))?;
            let same = model.same_element(&u, &v);
            check((ru == rv) == same, || format!("{name}: {u} vs {v}, engine {} oracle {same}", ru == rv))?;
            equal_pairs += usize::from(same);
            for (w, r) in [(&u, &ru), (&v, &rv)] {
                check(r.length() <= w.len() && (w.len() - r.length()) % 2 == 0, || format!("{name}: parity of {w}"))?;
                check(&infallible(engine.reduce(&r.to_word()))? == r, || format!("{name}: idempotence at {w}"))?;
            }
            let uv = infallible(engine.multiply(&ru, &rv))?;
            check(uv == infallible(engine.reduce(&u.concat(&v)))?, || format!("{name}: product of {u}, {v}"))?;
            let inv = infallible(engine.invert(&ru))?;
            check(infallible(engine.multiply(&ru, &inv))?.is_identity(), || format!("{name}: inverse of {u}"))?;
            let x = infallible(engine.reduce(&random_word(&mut rng, m.rank(), 12)))?;
            let left = infallible(engine.multiply(&uv, &x))?;
            let vx = infallible(engine.multiply(&rv, &x))?;
            check(left == infallible(engine.multiply(&ru, &vx))?, || format!("{name}: associativity"))?;
            let id = CanonicalElement::identity();
            check(infallible(engine.multiply(&ru, &id))? == ru, || format!("{name}: identity"))?;
            let _ = rng.gen::<u8>();
        }
    }
    Ok(format!("6 systems x 1000 pairs, {equal_pairs} equal"))
}

fn report(number: usize, name: &str, start: Instant, outcome: Outcome) -> bool {
    let secs = start.elapsed().as_secs_f64();
    match outcome {
        Ok(detail) => {
            println!("PASS criterion {number:>2} {name}: {detail} [{secs:.1}s]");
            true
        }
        Err(why) => {
            println!("FAIL criterion {number:>2} {name}: {why} [{secs:.1}s]");
            false
        }
    }
}

fn main() {
    let mut ok = true;

    let t = Instant::now();
    ok &= report(1, "center is elementary abelian 2-group", t, criterion_1());

    let t = Instant::now();
    let finite = FiniteRuns::collect();
    ok &= report(2, "center matches brute force on finite groups", t, criterion_2(&finite));

    let t = Instant::now();
    ok &= report(3, "finite part carries the center, essential part is centerless", t, criterion_3());

    let t = Instant::now();
    ok &= report(4, "irreducible infinite groups are centerless", t, criterion_4());

    let t = Instant::now();
    let groups = small_finite_groups(&finite);
    ok &= report(5, "left multiplication by w0 complements length", t, criterion_5(&groups));

    let t = Instant::now();
    ok &= report(6, "full descent set on T characterises w0(T)", t, criterion_6(&groups));

    let t = Instant::now();
    let (seven, eight) = criterion_7_8(&finite);
    ok &= report(7, "central elements are longest elements of spherical supports", t, seven);
    ok &= report(8, "generators outside the support commute with it", t, eight);

    let t = Instant::now();
    ok &= report(9, "classification agrees with Gram matrix and enumeration", t, criterion_9());

    let t = Instant::now();
    ok &= report(10, "word problem agrees with the representation", t, criterion_10());

    if !ok {
        std::process::exit(1);
    }
}
