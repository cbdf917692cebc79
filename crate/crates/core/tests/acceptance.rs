//! Acceptance checks. Prints one `[PASS]` or `[FAIL]` line per criterion and
//! exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use ratdiff::analysis::{equilibria, solve_period_two, Stability};
use ratdiff::closed_form::{
    closed_form_series, forbidden_depth, forbidden_points, product_analysis, product_closed_form,
    reconstruct_horadam,
};
use ratdiff::dynamics::{bounds_envelope, detect_period_with_burn_in, iterate_exact, iterate_float};
use ratdiff::exact::{int, rat, to_f64};
use ratdiff::horadam::{check_identity, HoradamSpec, Identity};
use ratdiff::{Branch, EquationSpec, Rational};

const SEED: u64 = 0x5eed_2024;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict { pass, detail: detail.into() }
}

fn spec(branch: Branch, p: Rational, q: Rational, nu: u32) -> EquationSpec {
    EquationSpec::new(branch, p, q, nu).unwrap()
}

fn random_branch(rng: &mut StdRng) -> Branch {
    if rng.gen_bool(0.5) {
        Branch::Plus
    } else {
        Branch::Minus
    }
}

fn closed_form_matches_iteration() -> Verdict {
    let mut rng = StdRng::seed_from_u64(SEED);
    let start = Instant::now();
    let (mut orbits, mut mismatches, mut resampled) = (0, 0, 0);
    while orbits < 100 {
        let eq = spec(random_branch(&mut rng), int(rng.gen_range(1..=5)), int(rng.gen_range(1..=5)), 1);
        let den = rng.gen_range(1..=12i64);
        let x0 = rat(rng.gen_range(-10 * den..=10 * den), den);
        if forbidden_depth(&eq, &x0, 40).unwrap().is_some() {
            resampled += 1;
            continue;
        }
        orbits += 1;
        let formula = closed_form_series(&eq, &x0, 40).unwrap();
        let orbit = iterate_exact(&eq, x0, 40);
        if orbit.exact_values().unwrap() != formula.as_slice() {
            mismatches += 1;
        }
    }
    let secs = start.elapsed().as_secs_f64();
    verdict(
        mismatches == 0 && secs < 5.0,
        format!("{orbits} orbits to n = 40, {mismatches} mismatches, {resampled} forbidden draws skipped, {secs:.2} s"),
    )
}

fn first_within(values: &[f64], target: f64, tol: f64) -> Option<usize> {
    values.iter().position(|x| (x - target).abs() < tol)
}

fn pell_convergence() -> Verdict {
    let sigma = 1.0 + 2f64.sqrt();
    let plus = iterate_exact(&spec(Branch::Plus, int(2), int(1), 1), int(2), 100).values_f64();
    let minus = iterate_exact(&spec(Branch::Minus, int(2), int(1), 1), int(3), 100).values_f64();
    let np = first_within(&plus, sigma - 2.0, 1e-9);
    let nm = first_within(&minus, 2.0 - sigma, 1e-9);
    let four_places = ((sigma - 2.0) * 1e4).round() / 1e4 == 0.4142;
    verdict(
        np.is_some() && nm.is_some() && four_places,
        format!(
            "plus within 1e-9 of {:.10} at n = {np:?}, minus within 1e-9 of {:.10} at n = {nm:?}, 4 places {:.4}",
            sigma - 2.0,
            2.0 - sigma,
            sigma - 2.0
        ),
    )
}

fn jacobsthal_product_limit() -> Verdict {
    let limit = 27.0 / 11.0;
    let plus = spec(Branch::Plus, int(1), int(2), 1);
    let a = product_analysis(&plus, &int(9), 60).unwrap();
    let exact_match = (0..=60).all(|n| product_closed_form(&plus, &int(9), n).unwrap() == a.partials[n]);
    let last = to_f64(&a.partials[60]);
    let first = a.partials_f64().iter().position(|x| (x - limit).abs() < 1e-9);

    let minus = spec(Branch::Minus, int(1), int(2), 1);
    let b = product_analysis(&minus, &int(-9), 60).unwrap();
    let pm = b.partials_f64();
    let (even, odd) = (pm[60], pm[59]);
    let parity_ok = (even.abs() - limit).abs() < 1e-9
        && (odd.abs() - limit).abs() < 1e-9
        && even.signum() != odd.signum()
        && (b.limit_at(60).unwrap() - even).abs() < 1e-9
        && (b.limit_at(59).unwrap() - odd).abs() < 1e-9;
    verdict(
        exact_match && (last - limit).abs() < 1e-9 && parity_ok,
        format!(
            "plus P_60 = {last:.12} (within 1e-9 from n = {first:?}), formula exact at every n: {exact_match}; \
             minus P_59 = {odd:.12}, P_60 = {even:.12}"
        ),
    )
}

fn horadam_reconstruction() -> Verdict {
    let orbit = iterate_exact(&spec(Branch::Plus, int(1), int(1), 1), int(1), 13);
    let product = orbit.exact_values().unwrap()[1..].iter().fold(int(1), |acc, x| acc * x);
    let w15 = reconstruct_horadam(&int(1), &int(1), 1, 15).unwrap();
    verdict(
        product == rat(1, 610) && w15 == int(610),
        format!("x_1 ... x_13 = {product}, reconstructed W_15 = {w15}"),
    )
}

fn divergence_certificate() -> Verdict {
    let eq = spec(Branch::Plus, rat(1, 2), int(2), 1);
    let a = product_analysis(&eq, &int(9), 40).unwrap();
    let hit = a.running_max_abs().iter().position(|m| *m > 1e3);
    verdict(
        hit.is_some_and(|n| n <= 40),
        format!("running max of |P_n| first exceeds 1e3 at n = {hit:?}, regime {:?}", a.regime),
    )
}

fn identity_suite() -> Verdict {
    let mut rng = StdRng::seed_from_u64(SEED ^ 1);
    let start = Instant::now();
    let mut failures = Vec::new();
    let draw = |rng: &mut StdRng| -> HoradamSpec {
        HoradamSpec::canonical(int(rng.gen_range(1..=5)), int(rng.gen_range(1..=5))).unwrap()
    };
    for kind in 0..5 {
        for _ in 0..200 {
            let s = draw(&mut rng);
            let id = match kind {
                0 => Identity::Cassini { n: rng.gen_range(1..=40) },
                1 => Identity::DOcagne { n: rng.gen_range(1..=25), r: rng.gen_range(1..=25) },
                2 => {
                    let (k, l, m) = (rng.gen_range(-15..=20), rng.gen_range(-15..=20), rng.gen_range(-15..=20));
                    Identity::Johnson { k, l, m, n: k + l - m, r: rng.gen_range(-10..=10) }
                }
                3 => {
                    let k = rng.gen_range(0..=20);
                    Identity::Convolution { n: k + rng.gen_range(2..=20), k }
                }
                _ => Identity::PhiPower { n: rng.gen_range(1..=40) },
            };
            if !check_identity(&id, &s).unwrap().is_zero() {
                failures.push(id);
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    verdict(
        failures.is_empty() && secs < 5.0,
        format!("5 x 200 tuples, nonzero residuals: {failures:?}, {secs:.2} s"),
    )
}

fn forbidden_certification() -> Verdict {
    let mut checked = 0;
    let mut wrong = Vec::new();
    for branch in [Branch::Plus, Branch::Minus] {
        for p in 1..=2 {
            for q in 1..=2 {
                let eq = spec(branch, int(p), int(q), 1);
                for pt in forbidden_points(&eq, 20).unwrap() {
                    checked += 1;
                    if pt.certify(&eq) != Some(pt.m) {
                        wrong.push((branch, p, q, pt.m));
                    }
                }
            }
        }
    }
    verdict(wrong.is_empty(), format!("{checked} points, wrong depth: {wrong:?}"))
}

fn phase_boundary() -> Verdict {
    let mut problems = Vec::new();
    for p in 1..=3i64 {
        for nu in 1..=8u32 {
            let eq = spec(Branch::Plus, int(p), int(p + 1), nu);
            let e = equilibria(&eq).unwrap()[0];
            let expected = -f64::from(nu) / (p + 1) as f64;
            let stable = e.classification == Stability::LocallyAsymptoticallyStable;
            if e.value != 1.0 || (e.multiplier - expected).abs() > 1e-12 || stable != (i64::from(nu) < p + 1) {
                problems.push(format!("p={p} nu={nu}: {:?} multiplier {}", e.classification, e.multiplier));
            }
            if i64::from(nu) < p + 1 {
                continue;
            }
            match solve_period_two(&eq, 1e-10) {
                Some(c) if c.residual < 1e-10 => {}
                Some(c) => problems.push(format!("p={p} nu={nu}: cycle residual {:e}", c.residual)),
                None => problems.push(format!("p={p} nu={nu}: no two-cycle")),
            }
            let orbit = iterate_float(&eq, 1.0 + 1e-3, 4000);
            let period = detect_period_with_burn_in(&orbit, 4, 1e-9, 2000).unwrap().map(|d| d.period);
            if period != Some(2) {
                problems.push(format!("p={p} nu={nu}: perturbed orbit period {period:?}"));
            }
        }
    }
    let c = solve_period_two(&spec(Branch::Plus, int(1), int(2), 6), 1e-10);
    let deviation = c.map(|c| c.approx_deviation());
    let near = deviation.is_some_and(|(a, b)| a < 0.05 && b < 0.05);
    if !near {
        problems.push(format!("p=1 nu=6: deviation {deviation:?}"));
    }
    let (phi_dev, psi_dev) = deviation.unwrap_or((f64::NAN, f64::NAN));
    verdict(
        problems.is_empty(),
        format!(
            "(p=1, q=2, nu=6) deviation from (2, 2/65): {:.3e} / {:.3e}; problems: {problems:?}",
            phi_dev, psi_dev
        ),
    )
}

fn boundedness() -> Verdict {
    let mut rng = StdRng::seed_from_u64(SEED ^ 2);
    let mut outside = Vec::new();
    let mut only_first = 0;
    for _ in 0..100 {
        let (p, q, nu) = (rng.gen_range(1..=5i64), rng.gen_range(1..=5i64), rng.gen_range(1..=8u32));
        let x0: f64 = rng.gen_range(1e-3..=10.0);
        let eq = spec(Branch::Plus, int(p), int(q), nu);
        let env = bounds_envelope(&eq).unwrap();
        let values = iterate_float(&eq, x0, 200).values_f64();
        let bad: Vec<usize> = (1..values.len()).filter(|&n| !env.contains(values[n], 1e-12)).collect();
        if !bad.is_empty() {
            if bad == [1] {
                only_first += 1;
            }
            outside.push((p, q, nu, x0, bad[0]));
        }
    }
    verdict(
        outside.is_empty(),
        format!(
            "{} of 100 orbits leave the envelope ({only_first} only at step 1); first few (p, q, nu, x0, step): {:?}",
            outside.len(),
            &outside[..outside.len().min(4)]
        ),
    )
}

fn minus_even_trichotomy() -> Verdict {
    let mut rng = StdRng::seed_from_u64(SEED ^ 3);
    let mut mismatched = Vec::new();
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let (p, q) = (rng.gen_range(1..=6i64), rng.gen_range(1..=6i64));
        let nu = 2 * rng.gen_range(1..=4u32);
        let roots = equilibria(&spec(Branch::Minus, int(p), int(q), nu)).unwrap();
        for r in &roots {
            let x = r.value;
            worst = worst.max((x.powi(nu as i32 + 1) - p as f64 * x - q as f64).abs());
        }
        let expected = match q.cmp(&(p - 1)) {
            std::cmp::Ordering::Less => 2,
            std::cmp::Ordering::Equal => 1,
            std::cmp::Ordering::Greater => 0,
        };
        if roots.len() != expected {
            mismatched.push((p, q, nu, roots.len(), expected));
        }
    }
    verdict(
        mismatched.is_empty() && worst < 1e-10,
        format!(
            "{} of 100 specs disagree (p, q, nu, found, predicted), first few: {:?}; worst |G(x)| = {worst:.1e}",
            mismatched.len(),
            &mismatched[..mismatched.len().min(4)]
        ),
    )
}

fn main() -> ExitCode {
    let checks: [(&str, fn() -> Verdict); 10] = [
        ("closed form vs exact iteration", closed_form_matches_iteration),
        ("Pell convergence", pell_convergence),
        ("Jacobsthal product limit", jacobsthal_product_limit),
        ("Fibonacci reconstruction from products", horadam_reconstruction),
        ("divergence certificate", divergence_certificate),
        ("identity suite", identity_suite),
        ("forbidden-set certification", forbidden_certification),
        ("stability / period-two phase boundary", phase_boundary),
        ("boundedness of positive orbits", boundedness),
        ("Minus even-nu equilibrium count", minus_even_trichotomy),
    ];
    let mut failed = 0;
    for (i, (name, check)) in checks.iter().enumerate() {
        let v = check();
        failed += usize::from(!v.pass);
        println!("[{}] {:>2} {name}: {}", if v.pass { "PASS" } else { "FAIL" }, i + 1, v.detail);
    }
    println!("{} of {} criteria pass", checks.len() - failed, checks.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
