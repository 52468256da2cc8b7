//! Acceptance run: one line per criterion, exact arithmetic throughout.
//!
//! Pinned tolerances: every comparison is exact equality over ℚ; the only
//! thresholds are wall-clock limits (criterion 1: 1 s, criterion 5: 1 s,
//! criterion 12: 30 s). Criteria listed in `KNOWN_RED` are reported as
//! failures but do not fail the run.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use admissible_poisson::algebra::{AlgebraStructure, Cochain2, Cochain3, Element};
use admissible_poisson::catalog::{self, fixture, fixture_with};
use admissible_poisson::cohomology::{
    classical_operators, cohomology_report, decomposition_coefficients, delta1_matrix, delta2, delta2_matrix, delta_lp,
    is_biderivation, DECOMPOSITION_COEFFICIENTS,
};
use admissible_poisson::deformations::{circ, obstructions, FormalDeformation};
use admissible_poisson::exactnum::{int, rat, Rational};
use admissible_poisson::identities::{
    annihilated_subspace, check_admissible, check_comm_assoc, check_eq6, check_flexible, check_leibniz, check_lie,
    check_power_associative, check_sigma3, sigma3_annihilates, GroupAlgebraVector, PowerOptions,
};
use admissible_poisson::random;
use admissible_poisson::structure::{
    combine, compatible_products, multiplication_algebra, pierce, radicals, split, SimplicityVerdict,
};
use admissible_poisson::symalg::{ad_spectrum, biderivation_extend, build_symalg, fixtures, Bivector, SparsePoly};

const KNOWN_RED: &[u32] = &[5];
const CATALOG_LIMIT: Duration = Duration::from_secs(1);
const ZERO_COHOMOLOGY_LIMIT: Duration = Duration::from_secs(1);
/// Samples per seed before the coefficient system must have full rank.
const MAX_SAMPLES: usize = 8;
const SYMALG_LIMIT: Duration = Duration::from_secs(30);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn instances() -> Vec<(String, AlgebraStructure)> {
    catalog::sampled_instances()
        .into_iter()
        .filter_map(|(name, params, label)| {
            let (alg, ex) = catalog::get_with_expected(name, &params).ok()?;
            ex.admissible.then_some((label, alg))
        })
        .collect()
}

/// Independent residual `3A(X,Y,Z) − (XZ)Y − (YZ)X + (YX)Z + (ZX)Y` from
/// plain multiplication.
fn residual(mu: &Cochain2) -> Cochain3 {
    let a = AlgebraStructure::new(mu.clone());
    let n = mu.dim();
    let m = |x: &Element, y: &Element| a.multiply(x, y).unwrap();
    Cochain3::from_fn(n, |i, j, k| {
        let (x, y, z) = (Element::basis(n, i), Element::basis(n, j), Element::basis(n, k));
        let assoc = m(&m(&x, &y), &z).sub(&m(&x, &m(&y, &z)));
        let r = assoc
            .scale(&int(3))
            .sub(&m(&m(&x, &z), &y))
            .sub(&m(&m(&y, &z), &x))
            .add(&m(&m(&y, &x), &z))
            .add(&m(&m(&z, &x), &y));
        r.0
    })
}

fn c1() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    let all = instances();
    for (label, alg) in &all {
        let ok = check_admissible(alg).all_hold()
            && check_flexible(alg).all_hold()
            && check_eq6(alg).all_hold()
            && check_sigma3(alg).all_hold();
        if !ok {
            bad.push(label.clone());
        }
    }
    let elapsed = start.elapsed();
    outcome(
        bad.is_empty() && elapsed < CATALOG_LIMIT,
        format!("{} instances, failing {bad:?}, {:.3}s (limit 1s)", all.len(), elapsed.as_secs_f64()),
    )
}

fn c2() -> Outcome {
    let mut algs: Vec<AlgebraStructure> = instances().into_iter().map(|(_, a)| a).collect();
    let mut rng = random::rng(2);
    for k in 0..100 {
        algs.push(random::admissible_algebra(&mut rng, 2 + k % 3));
    }
    let mut failures = 0;
    for alg in &algs {
        let pair = split(alg).unwrap();
        let back = combine(&pair).unwrap();
        let again = split(&back).unwrap();
        if back.mu() != alg.mu() || again.bracket().mu() != pair.bracket().mu() || again.product().mu() != pair.product().mu() {
            failures += 1;
        }
    }
    outcome(failures == 0, format!("{} algebras, {failures} mismatches", algs.len()))
}

fn c3() -> Outcome {
    let opts = PowerOptions { trials: 200, max_total_degree: 8, seed: 3 };
    let bad: Vec<String> = instances()
        .into_iter()
        .filter(|(_, a)| !check_power_associative(a, opts).all_hold())
        .map(|(l, _)| l)
        .collect();
    outcome(bad.is_empty(), format!("i+j <= 8, basis + 200 random per fixture, failing {bad:?}"))
}

fn c4() -> Outcome {
    let dims: Vec<Option<usize>> = ["sl2", "heisenberg", "lie2"]
        .iter()
        .map(|n| compatible_products(&fixture(n).unwrap()).unwrap().variety().dim)
        .collect();
    outcome(dims == [Some(0), Some(3), Some(0)], format!("sl2, heisenberg, lie2 -> {dims:?} (expected 0, 3, 0)"))
}

fn c5() -> Outcome {
    let start = Instant::now();
    let r = cohomology_report(&fixture("P_2_6").unwrap()).unwrap();
    let two = (r.dim_z2, r.dim_b2, r.dim_h2);
    let zero_ok = (1..=4).all(|n| cohomology_report(&AlgebraStructure::zero(n)).unwrap().dim_h2 == n * n * n);
    let elapsed = start.elapsed();
    outcome(
        two == (2, 2, 0) && zero_ok && elapsed < ZERO_COHOMOLOGY_LIMIT,
        format!("P_2_6 (Z2, B2, H2) = {two:?} (expected (2, 2, 0)); zero algebras H2 = n^3: {zero_ok}; {:.3}s", elapsed.as_secs_f64()),
    )
}

fn c6() -> Outcome {
    let mut algs: Vec<AlgebraStructure> = instances().into_iter().map(|(_, a)| a).collect();
    let mut rng = random::rng(6);
    for k in 0..50 {
        algs.push(random::admissible_algebra(&mut rng, 2 + k % 2));
    }
    let bad = algs
        .iter()
        .filter(|a| !delta2_matrix(a).matrix.mul(&delta1_matrix(a).matrix).unwrap().is_zero())
        .count();
    outcome(bad == 0, format!("{} algebras, {bad} with nonzero product", algs.len()))
}

fn c7() -> Outcome {
    let mut rng = random::rng(7);
    let mut bad = 0;
    for k in 0..100 {
        let n = 2 + k % 3;
        let mu = random::cochain2(&mut rng, n, 3);
        let phi = random::cochain2(&mut rng, n, 3);
        let alg = AlgebraStructure::new(mu.clone());
        let d2 = delta2(&alg, &phi).unwrap();
        let lin = residual(&mu.add(&phi).unwrap()).sub(&residual(&mu.sub(&phi).unwrap())).unwrap().scale(&rat(1, 2));
        let via_circ = circ(&mu, &phi).unwrap().add(&circ(&phi, &mu).unwrap()).unwrap().scale(&int(3));
        if d2 != lin || d2 != via_circ {
            bad += 1;
        }
    }
    outcome(bad == 0, format!("100 random pairs, dims 2-4, {bad} mismatches"))
}

fn c8() -> Outcome {
    let pinned: Vec<Rational> = DECOMPOSITION_COEFFICIENTS.iter().map(|&c| int(c)).collect();
    let mut unstable = Vec::new();
    let mut sizes = Vec::new();
    for seed in 0..50u64 {
        let mut rng = random::rng(1000 + seed);
        let mut samples = Vec::new();
        let mut solved = None;
        let mut reproduces = true;
        while samples.len() < MAX_SAMPLES && solved.is_none() {
            let pair = split(&random::admissible_algebra(&mut rng, 3)).unwrap();
            let phi = random::cochain2(&mut rng, 3, 3);
            let target = delta2(&combine(&pair).unwrap(), &phi).unwrap();
            reproduces &= classical_operators(&pair, &phi).unwrap().combination(&pinned).unwrap() == target;
            samples.push((pair, phi));
            solved = decomposition_coefficients(&samples).unwrap();
        }
        sizes.push(samples.len());
        if solved.as_ref() != Some(&pinned) || !reproduces {
            unstable.push(seed);
        }
    }
    let mut implication_bad = Vec::new();
    for (label, alg) in instances() {
        let pair = split(&alg).unwrap();
        for phi in cohomology_report(&alg).unwrap().z2_basis {
            let ops = classical_operators(&pair, &phi).unwrap();
            if !ops.delta_c_skew.is_zero() || !ops.delta_h_sym.is_zero() {
                implication_bad.push(label.clone());
                break;
            }
        }
    }
    outcome(
        unstable.is_empty() && implication_bad.is_empty(),
        format!(
            "coefficients {DECOMPOSITION_COEFFICIENTS:?} unique on 50 seeds using at most {} samples each (unstable {unstable:?}); cocycle implications failing {implication_bad:?}",
            sizes.iter().max().unwrap_or(&0)
        ),
    )
}

fn c9() -> Outcome {
    let e3 = Element::basis(3, 2);
    let d6 = pierce(&fixture("P_3_6").unwrap(), &e3).unwrap();
    let d3 = pierce(&fixture_with("P_3_3", "alpha", int(0)).unwrap(), &e3).unwrap();
    let ok = d6.is_unit() && d6.p11.is_full() && (d3.p00.dim(), d3.p11.dim()) == (2, 1);
    outcome(ok, format!("P_3_6 unit {}, P_3_3(0) dims ({}, {})", d6.is_unit(), d3.p00.dim(), d3.p11.dim()))
}

fn c10() -> Outcome {
    let p33 = radicals(&fixture_with("P_3_3", "alpha", int(0)).unwrap()).unwrap();
    let expected_n = admissible_poisson::exactnum::Subspace::span(3, &[Element::basis(3, 0).0, Element::basis(3, 1).0]).unwrap();
    let nil = fixture("nil_simple").unwrap();
    let r = radicals(&nil).unwrap();
    let m = multiplication_algebra(&nil, 50, 0);
    let square_full = nil.square_span().is_full();
    let ok = p33.nilradical == expected_n && r.is_nilalgebra && m.simplicity == SimplicityVerdict::ProbablySimple && square_full;
    outcome(
        ok,
        format!(
            "P_3_3(0) nilradical = span(e1,e2): {}; nil_simple nilalgebra {}, verdict {:?}, P^2 = P {}",
            p33.nilradical == expected_n,
            r.is_nilalgebra,
            m.simplicity,
            square_full
        ),
    )
}

fn c11() -> Outcome {
    let phi = Cochain2::from_entries(3, [(0, 2, 2, int(1)), (2, 0, 2, int(-1))]);
    let d = FormalDeformation::new(fixture_with("P_3_7", "alpha", int(2)).unwrap(), vec![phi]).unwrap().with_order(4);
    let family = obstructions(&d).unwrap();
    let mut rng = random::rng(11);
    let base = fixture("P_3_9").unwrap();
    let mut noise = random::cochain2(&mut rng, 3, 3);
    while delta2(&base, &noise).unwrap().is_zero() {
        noise = random::cochain2(&mut rng, 3, 3);
    }
    let bad = obstructions(&FormalDeformation::new(base, vec![noise]).unwrap().with_order(4)).unwrap();
    let ok = family.all_vanish() && family.orders.len() == 4 && bad.first_failing_order == Some(1) && bad.orders[0].witness.is_some();
    outcome(ok, format!("P_3_7(2) orders 1-4 vanish: {}; seeded non-cocycle fails at {:?}", family.all_vanish(), bad.first_failing_order))
}

fn c12() -> Outcome {
    let start = Instant::now();
    let s = build_symalg(&fixtures::lie2(), 2).unwrap();
    let axioms = check_lie(s.pair.bracket()).all_hold()
        && check_comm_assoc(s.pair.product()).all_hold()
        && check_leibniz(s.pair.bracket(), s.pair.product()).unwrap().all_hold();
    let spectrum = ad_spectrum(&s.pair, &s.generator(0)).unwrap().multiset();
    let expected: Vec<Rational> = [0, 0, 0, 1, 1, 2].iter().map(|&v| int(v)).collect();
    let rigid = build_symalg(&fixtures::rigid6(), 2).unwrap();
    let y2 = SparsePoly::var(6, 2);
    let ext = biderivation_extend(&rigid, &Bivector::zero(6).with(1, 3, y2.mul(&y2))).unwrap();
    let cocycle = is_biderivation(&rigid.pair, &ext).unwrap() && delta_lp(&rigid.pair, &ext).unwrap().is_zero();
    let elapsed = start.elapsed();
    outcome(
        axioms && spectrum.as_ref() == Some(&expected) && rigid.dim() == 28 && cocycle && elapsed < SYMALG_LIMIT,
        format!(
            "axioms {axioms}, ad X spectrum {}, rigid dim {} cocycle {cocycle}, {:.2}s (limit 30s)",
            spectrum.map(|v| v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")).unwrap_or_else(|| "not diagonal".into()),
            rigid.dim(),
            elapsed.as_secs_f64()
        ),
    )
}

fn c13() -> Outcome {
    let (v1, v2) = (GroupAlgebraVector::v1(), GroupAlgebraVector::v2());
    let bad: Vec<String> = instances()
        .into_iter()
        .filter(|(_, a)| !(sigma3_annihilates(a, &v1).unwrap() && sigma3_annihilates(a, &v2).unwrap()))
        .map(|(l, _)| l)
        .collect();
    let equal = [2, 3].iter().all(|&n| {
        annihilated_subspace(n, &[v1.clone(), v2.clone()]).unwrap()
            == annihilated_subspace(n, &[GroupAlgebraVector::combined()]).unwrap()
    });
    outcome(bad.is_empty() && equal, format!("v1, v2 annihilate all fixtures (failing {bad:?}); subspace equality dims 2, 3: {equal}"))
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, fn() -> Outcome); 13] = [
        (1, "catalog identities", c1),
        (2, "split/combine round trip", c2),
        (3, "power associativity", c3),
        (4, "compatible products", c4),
        (5, "2-dim cohomology", c5),
        (6, "coboundary composition", c6),
        (7, "linearization oracle", c7),
        (8, "decomposition coefficients", c8),
        (9, "pierce decomposition", c9),
        (10, "radicals", c10),
        (11, "deformation obstructions", c11),
        (12, "symmetric algebra", c12),
        (13, "group algebra action", c13),
    ];
    let mut unexpected = 0;
    let mut passed = 0;
    for (id, name, run) in criteria {
        let o = run();
        let known = KNOWN_RED.contains(&id);
        let tag = match (o.pass, known) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
        };
        if o.pass {
            passed += 1;
        } else if !known {
            unexpected += 1;
        }
        println!("criterion {id:>2} [{tag}] {name}: {}", o.detail);
    }
    println!("summary: {passed}/13 pass, known red {KNOWN_RED:?}, unexpected failures {unexpected}");
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
