//! Acceptance criteria, one printed line each. Runs without the libtest
//! harness so the lines show up in plain `cargo test` output.

use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rand::Rng;

use kervaire::circleindex::{
    boundary_reduce, holonomy, ind2, ind2_oracle, kernel_sections, monodromy, LoopGenerator,
    MatrixLoop, Turns,
};
use kervaire::harness::{
    euler_les_check, fixtures, load_scenario, random_pair, run_suite, trial_rng, verify_counting,
    verify_cutpaste_scenario, Suite, SuiteConfig,
};
use kervaire::simplicial::{betti, cut, kappa, kappa_relative, standard, ComplexPair};

const SEED: u64 = 2024;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn within(elapsed: Duration, limit_s: u64) -> bool {
    elapsed < Duration::from_secs(limit_s)
}

/// Exact Clifford relations, 200 pairs at each m in {2,3,4,6}, under 10 s.
fn clifford_identities() -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    let mut ok = true;
    for m in [2, 3, 4, 6] {
        let r = run_suite(
            Suite::Clifford,
            SuiteConfig {
                trials: 200,
                seed: SEED,
                dim: m,
            },
        )
        .unwrap();
        ok &= r.passed() && r.trials == 200;
        notes.push(format!("m={m}: {}/{} failures", r.failures, r.trials));
    }
    let t = start.elapsed();
    ok &= within(t, 10);
    outcome(
        ok,
        format!("{} in {:.2?} (limit 10 s)", notes.join(", "), t),
    )
}

/// PSD, one-dimensional kernel and parity, 1000 matrices at each m in
/// {2,4,6}, under 60 s.
fn lemma1_suite() -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    let mut ok = true;
    for m in [2, 4, 6] {
        let r = run_suite(
            Suite::Lemma1,
            SuiteConfig {
                trials: 1000,
                seed: SEED,
                dim: m,
            },
        )
        .unwrap();
        ok &= r.passed() && r.trials == 1000;
        notes.push(format!(
            "m={m}: {} failures, {} redrawn",
            r.failures,
            r.resampled.unwrap_or(0)
        ));
    }
    let t = start.elapsed();
    ok &= within(t, 60);
    outcome(
        ok,
        format!("{} in {:.2?} (limit 60 s)", notes.join(", "), t),
    )
}

/// Diagonal with exactly one negative entry in the rotation plane, so a
/// half turn carries the negative direction to its opposite.
fn random_rotation_generator(
    rng: &mut impl Rng,
    m: usize,
    turns: Turns,
    count: usize,
) -> LoopGenerator {
    let p = rng.random_range(0..m);
    let mut q = rng.random_range(0..m - 1);
    if q >= p {
        q += 1;
    }
    let mut diag: Vec<f64> = (0..m)
        .map(|_| {
            let x = rng.random_range(0.5..3.0);
            if rng.random_bool(0.5) {
                x
            } else {
                -x
            }
        })
        .collect();
    diag[p] = -diag[p].abs();
    diag[q] = diag[q].abs();
    LoopGenerator::ConjugatedDiag {
        diag,
        plane: [p, q],
        turns,
        count,
    }
}

const TURNS: [(i64, i64); 4] = [(0, 1), (1, 2), (1, 1), (3, 2)];

/// Wedge route against dense-K route on 200 loops; half-integer turns give 0.
fn route_equivalence() -> Outcome {
    let mut rng = trial_rng(SEED, 3);
    let mut agree = 0;
    let mut expected_ok = 0;
    for i in 0..200 {
        let m = [2, 4][i % 2];
        let (n, d) = TURNS[(i / 2) % 4];
        let g = random_rotation_generator(&mut rng, m, Turns::new(n, d), 32);
        let l = MatrixLoop::generated(g).unwrap();
        let a = ind2(&l).unwrap();
        let b = ind2_oracle(&l).unwrap();
        agree += usize::from(a.ind2 == b.ind2 && a.monodromy == b.monodromy);
        let expected = u8::from(d == 1);
        expected_ok += usize::from(a.ind2 == expected);
    }
    outcome(
        agree == 200 && expected_ok == 200,
        format!("routes agree on {agree}/200, turn-parity oracle matched on {expected_ok}/200"),
    )
}

/// Exact Betti numbers and semi-characteristics of the shipped complexes.
fn topology_fixtures() -> Outcome {
    let start = Instant::now();
    let s5 = standard::boundary_of_simplex(6);
    let s1s4 = fixtures::s1_x_s4();
    let s1d4 = fixtures::s1_x_d4();
    let b5 = betti(&s5);
    let b14 = betti(&s1s4);
    let checks = [
        b5 == [1, 0, 0, 0, 0, 1],
        kappa(&s5) == 1,
        b14 == [1, 1, 0, 0, 1, 1],
        kappa(&s1s4) == 0,
        kappa_relative(&s1d4) == 1,
    ];
    let t = start.elapsed();
    outcome(
        checks.iter().all(|&c| c) && within(t, 120),
        format!(
            "betti(S5) {b5:?}, betti(S1xS4) {b14:?}, kappa_rel(S1xD4) {} in {t:.2?} (limit 120 s)",
            kappa_relative(&s1d4)
        ),
    )
}

/// Shipped S¹×D⁴ scenario: lhs = rhs = 1, unchanged by a boundary circle.
fn counting_formula() -> Outcome {
    let dir = fixture_dir().join("scenarios");
    let mut s = load_scenario(dir.join("s1xd4.json")).unwrap();
    let r = verify_counting(&s).unwrap();
    s.circles.push(fixtures::boundary_loop(1));
    s.circles.push(fixtures::boundary_loop(-1));
    let with_boundary = verify_counting(&s).unwrap();
    let shipped =
        verify_counting(&load_scenario(dir.join("s1xd4_boundary_circle.json")).unwrap()).unwrap();
    let ok = (r.lhs, r.rhs) == (1, 1)
        && r.passed()
        && with_boundary.rhs == r.rhs
        && with_boundary.passed()
        && shipped.rhs == r.rhs
        && shipped.passed();
    outcome(
        ok,
        format!(
            "lhs {} rhs {}; with boundary circles rhs {} (shipped variant {})",
            r.lhs, r.rhs, with_boundary.rhs, shipped.rhs
        ),
    )
}

/// S¹×S⁴ reglued under identity, rotations and a reflection keeps κ = 0.
fn cut_and_paste() -> Outcome {
    let s = load_scenario(fixture_dir().join("scenarios/s1xs4_cut.json")).unwrap();
    let phis = &s.cut.as_ref().unwrap().automorphisms;
    let distinct = phis
        .iter()
        .enumerate()
        .filter(|(i, p)| !phis[..*i].contains(p))
        .count();
    let r = verify_cutpaste_scenario(&s).unwrap();
    let d = r.cutpaste.clone().unwrap();
    let kappas: Vec<u8> = d.twists.iter().map(|t| t.kappa).collect();
    let ok = r.passed()
        && distinct >= 3
        && r.lhs == 0
        && kappas.iter().all(|&k| k == 0)
        && (d.kappa_first_relative + d.kappa_second_relative).is_multiple_of(2);
    outcome(
        ok,
        format!(
            "{} automorphisms, reglued kappa {kappas:?}, kappa(M1,dM1)+kappa(M2,dM2) = {}+{}",
            distinct, d.kappa_first_relative, d.kappa_second_relative
        ),
    )
}

/// Euler identity on every corpus pair and 50 random pairs.
fn euler_identity() -> Outcome {
    let mut pairs: Vec<(String, ComplexPair)> = vec![
        (
            "simplex".into(),
            ComplexPair::with_boundary(standard::simplex(3)).unwrap(),
        ),
        ("S1xD4".into(), fixtures::s1_x_d4()),
        ("D5".into(), fixtures::disk5_pair()),
        ("S5".into(), ComplexPair::absolute(fixtures::s5())),
        ("S1xS4".into(), ComplexPair::absolute(fixtures::s1_x_s4())),
    ];
    let split = fixtures::s1_x_s4_split();
    let pieces = cut(&split.manifold, &split.sides).unwrap();
    pairs.push(("cut half 1".into(), pieces.first));
    pairs.push(("cut half 2".into(), pieces.second));
    let corpus = pairs.len();
    for i in 0..50 {
        let mut rng = trial_rng(SEED, 7000 + i);
        pairs.push((format!("random {i}"), random_pair(&mut rng, 3)));
    }
    let failed: Vec<&str> = pairs
        .iter()
        .filter(|(_, p)| !euler_les_check(p).passed())
        .map(|(n, _)| n.as_str())
        .collect();
    outcome(
        failed.is_empty(),
        format!("{} corpus + 50 random pairs, failing: {failed:?}", corpus),
    )
}

/// Boundary loops agree with their reduced interior loops.
fn boundary_reduction() -> Outcome {
    let mut rng = trial_rng(SEED, 8);
    let mut agree = 0;
    for i in 0..100 {
        let inner_dim = rng.random_range(2..=4);
        let (n, d) = TURNS[i % 4];
        let g = random_rotation_generator(&mut rng, inner_dim, Turns::new(n, d), 24);
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let l = MatrixLoop::generated_boundary(g, sign).unwrap();
        let reduced = boundary_reduce(&l).unwrap();
        agree += usize::from(ind2(&l).unwrap().ind2 == ind2(&reduced).unwrap().ind2);
    }
    outcome(agree == 100, format!("{agree}/100 agree"))
}

/// Monodromy unchanged under doubled sampling and under sign flips of
/// the tracked sections.
fn stability() -> Outcome {
    let mut rng = trial_rng(SEED, 9);
    let mut refine_ok = 0;
    let mut flip_ok = 0;
    for i in 0..100 {
        let m = [2, 3, 4][i % 3];
        let (n, d) = TURNS[i % 4];
        let l = MatrixLoop::generated(random_rotation_generator(&mut rng, m, Turns::new(n, d), 16))
            .unwrap();
        let base = monodromy(&l).unwrap().sign;
        let doubled = l.refined(2).unwrap().unwrap();
        refine_ok += usize::from(monodromy(&doubled).unwrap().sign == base);

        let (mut sections, _) = kernel_sections(&l).unwrap();
        for s in &mut sections {
            if rng.random_bool(0.5) {
                s.iter_mut().for_each(|x| *x = -*x);
            }
        }
        flip_ok += usize::from(holonomy(&sections).unwrap().sign == base);
    }
    outcome(
        refine_ok == 100 && flip_ok == 100,
        format!("doubling {refine_ok}/100, sign flips {flip_ok}/100"),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("clifford identities", clifford_identities),
        ("lemma1 suite", lemma1_suite),
        ("route equivalence", route_equivalence),
        ("topology fixtures", topology_fixtures),
        ("counting formula", counting_formula),
        ("cut and paste", cut_and_paste),
        ("euler identity", euler_identity),
        ("boundary reduction", boundary_reduction),
        ("stability", stability),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        if !o.ok {
            failed += 1;
        }
        println!(
            "{} [{}] {name}: {}",
            if o.ok { "PASS" } else { "FAIL" },
            i + 1,
            o.detail
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
