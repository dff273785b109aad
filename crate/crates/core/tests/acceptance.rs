//! Acceptance run: one line per criterion, `criterion N: PASS|FAIL (runtime / bound) detail`.
//!
//! Tolerances, seeds and runtime bounds are fixed here. A criterion listed in
//! `KNOWN_RED` is reported but does not fail the run; every other failure does.

use std::time::{Duration, Instant};

use num_complex::Complex64;
use qca_lab::config::registry;
use qca_lab::dynamics::{
    b_sequence, brute_force_soliton_oracle, classify, classify_palindromic, soliton_search,
    weight_trajectory, Verdict,
};
use qca_lab::expectation::{
    c_beta, certificate_holds, dense_oracle, expectation_series, letter_word, moments_from_bloch,
    BetaSpec, Evaluator, ProductStateParams,
};
use qca_lab::fpoly::{Exponent, LaurentPoly};
use qca_lab::pauli::PauliLetter;
use qca_lab::symplectic::{omega_form, ModuleVector, PolyMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5eed_2024;
const ORACLE_TOL: f64 = 1e-9;
const EXACT_TOL: f64 = 1e-12;
const THERMAL_ENVELOPE: f64 = 0.05;

/// Criteria expected to report FAIL, with the reason.
const KNOWN_RED: &[(u32, &str)] = &[(
    6,
    "X0 and Z0 trajectories are one time step apart (L X0 = Z0), not identical",
)];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(checks: &[(&str, bool)], extra: String) -> Outcome {
    let failed: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    let detail = if failed.is_empty() {
        extra
    } else {
        format!("failed: {}; {extra}", failed.join(", "))
    };
    Outcome { pass: failed.is_empty(), detail }
}

fn palindromic(pos: &[i64], constant: bool) -> LaurentPoly {
    let mut exps: Vec<i64> = pos.iter().flat_map(|&e| [e, -e]).collect();
    if constant {
        exps.push(0);
    }
    LaurentPoly::from_exponents_1d(&exps)
}

/// Nonzero palindromic `t` with degree ≤ 4 and weight ≤ 5.
fn random_palindromic(rng: &mut ChaCha8Rng) -> LaurentPoly {
    loop {
        let mut pos: Vec<i64> = (1..=4).filter(|_| rng.gen_bool(0.4)).collect();
        pos.truncate(2);
        let t = palindromic(&pos, rng.gen_bool(0.5));
        if !t.is_zero() {
            return t;
        }
    }
}

fn m2(a: LaurentPoly, b: LaurentPoly, c: LaurentPoly, d: LaurentPoly) -> PolyMatrix {
    PolyMatrix::from_rows(vec![vec![a, b], vec![c, d]]).unwrap()
}

fn random_pseudo_unitary(rng: &mut ChaCha8Rng) -> PolyMatrix {
    let (one, zero) = (LaurentPoly::one(1), LaurentPoly::zero(1));
    let count = rng.gen_range(1..=3);
    (0..count)
        .map(|_| match rng.gen_range(0..4) {
            0 => PolyMatrix::palindromic_family(&random_palindromic(rng)),
            1 => m2(one.clone(), random_palindromic(rng), zero.clone(), one.clone()),
            2 => m2(one.clone(), zero.clone(), random_palindromic(rng), one.clone()),
            _ => PolyMatrix::scalar(2, &LaurentPoly::mono(rng.gen_range(-2..=2))),
        })
        .reduce(|a, b| a.mul(&b).unwrap())
        .unwrap()
}

fn random_vector(rng: &mut ChaCha8Rng) -> ModuleVector {
    let entry = |rng: &mut ChaCha8Rng| {
        let n = rng.gen_range(0..5);
        let exps: Vec<i64> = (0..n).map(|_| rng.gen_range(-4..=4)).collect();
        LaurentPoly::from_exponents_1d(&exps)
    };
    ModuleVector::new(vec![entry(rng), entry(rng)]).unwrap()
}

fn random_letter(rng: &mut ChaCha8Rng) -> PauliLetter {
    PauliLetter::from_index(rng.gen_range(0..4)).unwrap()
}

fn random_state(rng: &mut ChaCha8Rng) -> ProductStateParams {
    ProductStateParams::new(
        rng.gen_range(0.0..=0.5),
        rng.gen_range(0.0..180.0),
        rng.gen_range(0.0..360.0),
    )
    .unwrap()
}

fn x0() -> ModuleVector {
    ModuleVector::unit(2, 0, Exponent::from(0))
}

fn z0() -> ModuleVector {
    ModuleVector::unit(2, 1, Exponent::from(0))
}

fn y0() -> ModuleVector {
    x0().add(&z0()).unwrap()
}

fn fractal() -> PolyMatrix {
    PolyMatrix::palindromic_family(&palindromic(&[1], true))
}

fn criterion_1() -> Outcome {
    let l = palindromic(&[1], false);
    let mut checks = Vec::new();
    for m in 0..=16u32 {
        let n = 1i64 << m;
        let power = l.pow(n as u64).unwrap();
        let expected = LaurentPoly::from_exponents_1d(&[n, -n]);
        checks.push(power.weight() == 2 && power == expected);
    }
    outcome(&[("weight(L^(2^m)) = 2 for m <= 16", checks.iter().all(|&c| c))], "m = 0..16".into())
}

/// `s = Σ_{j=1}^r u^{2^r − 2^j}`, `[[s, u^{2^r−1}], [u^{2^r−1}, u^{2^r} + s]]`.
fn f_power_closed_form(r: u32) -> PolyMatrix {
    let n = 1i64 << r;
    let s_exps: Vec<i64> = (1..=r).map(|j| n - (1i64 << j)).collect();
    let s = LaurentPoly::from_exponents_1d(&s_exps);
    let off = LaurentPoly::mono(n - 1);
    let corner = s.add(&LaurentPoly::mono(n)).unwrap();
    m2(s, off.clone(), off, corner)
}

fn criterion_2() -> Outcome {
    let f = PolyMatrix::palindromic_family(&LaurentPoly::mono(1));
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    let (mut closed, mut bound) = (true, true);
    for r in 1..=10u32 {
        let power = f.pow(1 << r).unwrap();
        closed &= power == f_power_closed_form(r);
        for _ in 0..10 {
            let q = random_vector(&mut rng);
            let image = power.apply(&q).unwrap();
            bound &= image.total_weight() <= (2 * r as usize + 1) * q.total_weight();
        }
    }
    outcome(
        &[("closed form of F^(2^r)", closed), ("|F^(2^r) q| <= (2r+1)|q|", bound)],
        "r = 1..10, 10 random q each".into(),
    )
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    let one = LaurentPoly::one(1);
    let (mut cassini, mut det) = (true, true);
    for _ in 0..20 {
        let t = random_palindromic(&mut rng);
        let b = b_sequence(&t, 31).unwrap();
        for n in 1..=30 {
            let lhs = b[n - 1].mul(&b[n + 1]).unwrap().add(&b[n].square().unwrap()).unwrap();
            cassini &= lhs == one;
        }
        let l = PolyMatrix::palindromic_family(&t);
        for (i, power) in l.powers().take(30).enumerate() {
            let n = i + 1;
            let d = power.unwrap().minus_scalar(&one).unwrap().determinant().unwrap();
            det &= d == b[n - 1].add(&b[n + 1]).unwrap();
        }
    }
    outcome(
        &[("Cassini identity", cassini), ("det(L^n - 1) = b_(n-1) + b_(n+1)", det)],
        "20 random t, n <= 30".into(),
    )
}

fn criterion_4() -> Outcome {
    let mut checks: Vec<(String, bool)> = Vec::new();
    for m in 1..=4i64 {
        let t = palindromic(&[m], false);
        let expected_q = ModuleVector::new(vec![LaurentPoly::one(1), LaurentPoly::mono(m)]).unwrap();
        let exact = classify_palindromic(&t).unwrap();
        let bounded = classify(&PolyMatrix::palindromic_family(&t), 16).unwrap();
        let ok = [exact, bounded].iter().all(|r| {
            r.verdict == Verdict::Glider
                && r.witness.as_ref().is_some_and(|w| w.n() == 1 && *w.q() == expected_q)
        });
        checks.push((format!("u^{m}+u^-{m} glider with witness (1, u^{m})"), ok));
    }
    let fractal_t = palindromic(&[1], true);
    checks.push((
        "u+1+u^-1 fractal".into(),
        classify_palindromic(&fractal_t).unwrap().verdict == Verdict::FractalLike
            && classify(&fractal(), 16).unwrap().verdict == Verdict::FractalLike,
    ));
    for c in [0, 1] {
        let t = palindromic(&[], c == 1);
        checks.push((
            format!("t = {c} periodic"),
            classify_palindromic(&t).unwrap().verdict == Verdict::Periodic
                && classify(&PolyMatrix::palindromic_family(&t), 16).unwrap().verdict == Verdict::Periodic,
        ));
    }
    let shift = registry("shift").unwrap().build().unwrap().matrix;
    checks.push(("shift soliton found".into(), soliton_search(&shift, 16).unwrap().is_some()));

    let mut agree = true;
    for mask in 0u8..8 {
        let pos: Vec<i64> = [1, 2].into_iter().filter(|&e| mask >> (e - 1) & 1 == 1).collect();
        let l = PolyMatrix::palindromic_family(&palindromic(&pos, mask & 4 != 0));
        let fast = soliton_search(&l, 6).unwrap();
        let slow = brute_force_soliton_oracle(&l, 6, 4).unwrap();
        agree &= match (fast, slow) {
            (None, None) => true,
            (Some(f), Some(s)) => f.n() == s.n() && f.k() == s.k(),
            _ => false,
        };
    }
    checks.push(("search agrees with brute-force oracle (8 matrices)".into(), agree));
    let refs: Vec<(&str, bool)> = checks.iter().map(|(s, b)| (s.as_str(), *b)).collect();
    outcome(&refs, format!("{} checks", refs.len()))
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 5);
    let mut family = true;
    for _ in 0..20 {
        family &= PolyMatrix::palindromic_family(&random_palindromic(&mut rng)).is_pseudo_unitary();
    }
    let doubled = ["double-F", "double-G"]
        .iter()
        .all(|n| registry(n).unwrap().build().unwrap().matrix.is_pseudo_unitary());
    let mut closure = true;
    for _ in 0..50 {
        let a = random_pseudo_unitary(&mut rng);
        let b = random_pseudo_unitary(&mut rng);
        closure &= a.mul(&b).unwrap().is_pseudo_unitary();
        closure &= a.pow(rng.gen_range(0..6)).unwrap().is_pseudo_unitary();
        let inv = a.inverse_unit().unwrap();
        closure &= inv.is_pseudo_unitary() && a.mul(&inv).unwrap() == PolyMatrix::identity(2, 1);
    }
    let mut omega = true;
    for _ in 0..100 {
        let l = random_pseudo_unitary(&mut rng);
        let (q, q2) = (random_vector(&mut rng), random_vector(&mut rng));
        omega &= omega_form(&l.apply(&q).unwrap(), &l.apply(&q2).unwrap()).unwrap()
            == omega_form(&q, &q2).unwrap();
    }
    outcome(
        &[
            ("palindromic family pseudo-unitary", family),
            ("doubled F/G pseudo-unitary", doubled),
            ("closure under product/power/inverse", closure),
            ("Omega preserved", omega),
        ],
        "50 random pairs, 100 random vector pairs".into(),
    )
}

fn criterion_6() -> Outcome {
    const STEPS: u64 = 2000;
    let l = fractal();
    let mut trajectories = Vec::new();
    let (mut bounds, mut cone, mut unbounded) = (true, true, true);
    for q0 in [x0(), y0(), z0()] {
        let traj = weight_trajectory(&l, &q0, STEPS).unwrap();
        let mut q = q0.clone();
        for s in &traj.samples {
            bounds &= s.hamming >= s.support && 2 * s.support >= s.hamming;
            let n = s.n as i64;
            cone &= q.extremes().is_some_and(|e| e[0].0 >= -n && e[0].1 <= n);
            q = l.apply(&q).unwrap();
        }
        unbounded &= traj.max_hamming() > 100;
        trajectories.push(traj);
    }
    let hx: Vec<usize> = trajectories[0].samples.iter().map(|s| s.hamming).collect();
    let hz: Vec<usize> = trajectories[2].samples.iter().map(|s| s.hamming).collect();
    let identical = hx == hz;
    let shifted = (0..STEPS as usize).all(|n| hz[n] == hx[n + 1]);
    let first_diff = hx.iter().zip(&hz).position(|(a, b)| a != b);
    outcome(
        &[
            ("hamming >= support >= hamming/2", bounds),
            ("cone bound", cone),
            ("max weight > 100", unbounded),
            ("X0 and Z0 trajectories identical", identical),
            ("Z0 trajectory = X0 trajectory one step later", shifted),
        ],
        format!(
            "n <= {STEPS}, max weight {}, first X0/Z0 difference at n = {first_diff:?}",
            trajectories[0].max_hamming()
        ),
    )
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
    let mut worst: f64 = 0.0;
    for _ in 0..200 {
        let len = rng.gen_range(1..=6);
        let word: Vec<PauliLetter> = (0..len).map(|_| random_letter(&mut rng)).collect();
        let state = random_state(&mut rng);
        let beta = BetaSpec::xx(rng.gen_range(0.0..std::f64::consts::TAU), 1).unwrap();
        let ev = Evaluator::new(state, beta).unwrap();
        let dense = dense_oracle(&word, &moments_from_bloch(&state), &beta).unwrap();
        worst = worst.max((ev.evaluate(&word) - dense).norm());
    }
    let mut factorizes = true;
    let mut vanishes = true;
    for _ in 0..20 {
        let word: Vec<PauliLetter> = (0..rng.gen_range(1..=6)).map(|_| random_letter(&mut rng)).collect();
        let state = random_state(&mut rng);
        let m = moments_from_bloch(&state);
        let free = Evaluator::new(state, BetaSpec::xx(0.0, 1).unwrap()).unwrap();
        let product: f64 = word.iter().map(|&l| m.get(l)).product();
        factorizes &= (free.evaluate(&word) - Complex64::new(product, 0.0)).norm() < EXACT_TOL;
        if word.iter().any(|&l| l != PauliLetter::I) {
            let mixed = ProductStateParams::new(0.5, state.theta_deg, state.phi_deg).unwrap();
            let g = rng.gen_range(0.0..std::f64::consts::TAU);
            let ev = Evaluator::new(mixed, BetaSpec::xx(g, 1).unwrap()).unwrap();
            vanishes &= ev.evaluate(&word) == Complex64::new(0.0, 0.0);
        }
    }
    outcome(
        &[
            ("automaton = dense oracle within 1e-9", worst < ORACLE_TOL),
            ("g = 0 factorizes within 1e-12", factorizes),
            ("p = 0.5 gives exactly 0", vanishes),
        ],
        format!("200 random cases, worst deviation {worst:.1e}"),
    )
}

fn criterion_8() -> Outcome {
    let l = fractal();
    let beta = BetaSpec::xx(1.0, 1).unwrap();
    let mut worst_tail: f64 = 0.0;
    let mut worst_prefix: f64 = 0.0;
    let mut at_ten = true;
    for p in [0.0, 0.1, 0.4] {
        let state = ProductStateParams::new(p, 30.0, 45.0).unwrap();
        let ev = Evaluator::new(state, beta).unwrap();
        let m = moments_from_bloch(&state);
        for q0 in [x0(), y0(), z0()] {
            let series = expectation_series(&l, &q0, 1000, &ev).unwrap();
            at_ten &= series[10].abs_expectation < THERMAL_ENVELOPE;
            for s in &series[10..] {
                worst_tail = worst_tail.max(s.abs_expectation);
            }
            let mut q = q0.clone();
            for s in &series[..=4] {
                let (_, word) = letter_word(&q).unwrap();
                let dense = dense_oracle(&word, &m, &beta).unwrap().norm();
                worst_prefix = worst_prefix.max((dense - s.abs_expectation).abs());
                q = l.apply(&q).unwrap();
            }
        }
    }
    outcome(
        &[
            ("|expect| < 0.05 at n = 10", at_ten),
            ("|expect| <= 0.05 for n in [10, 1000]", worst_tail <= THERMAL_ENVELOPE),
            ("n <= 4 prefix matches dense oracle", worst_prefix < ORACLE_TOL),
        ],
        format!("p in {{0, 0.1, 0.4}}, max tail {worst_tail:.2e}, prefix deviation {worst_prefix:.1e}"),
    )
}

fn criterion_9() -> Outcome {
    let c = c_beta(1, 1, 1);
    let threshold = 1.0 / 512.0;
    let grid = [0.0, 0.25, 0.5, 0.9, 0.999, 1.0, 1.001, 1.1, 2.0, 512.0];
    let agree = grid.iter().all(|&f| {
        let lambda = f * threshold;
        certificate_holds(lambda, 1, 1, 1) == (lambda * c < 1.0)
    });
    outcome(
        &[("C_beta = 512", c == 512.0), ("certificate matches lambda*C < 1", agree)],
        format!("{}-point grid around 1/512", grid.len()),
    )
}

/// Id, check and runtime bound in seconds.
type Criterion = (u32, fn() -> Outcome, u64);

fn main() {
    let criteria: [Criterion; 9] = [
        (1, criterion_1, 1),
        (2, criterion_2, 5),
        (3, criterion_3, 10),
        (4, criterion_4, 60),
        (5, criterion_5, 10),
        (6, criterion_6, 60),
        (7, criterion_7, 120),
        (8, criterion_8, 600),
        (9, criterion_9, 1),
    ];
    let mut unexpected = Vec::new();
    for (id, run, bound_secs) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let in_time = elapsed < Duration::from_secs(bound_secs);
        let pass = result.pass && in_time;
        let known = KNOWN_RED.iter().find(|(k, _)| *k == id);
        let mut detail = result.detail;
        if !in_time {
            detail = format!("runtime bound exceeded; {detail}");
        }
        if let (false, Some((_, why))) = (pass, known) {
            detail = format!("{detail} [known red: {why}]");
        }
        println!(
            "criterion {id}: {} ({:.3} s / {bound_secs} s) {detail}",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
        if pass == known.is_some() {
            unexpected.push(id);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
