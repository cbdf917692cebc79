use proptest::prelude::*;
use ratdiff::dynamics::{
    bounds_envelope, detect_period, detect_period_with_burn_in, iterate, iterate_exact,
    iterate_float, oscillation_profile, reflected_envelope, step_exact, OrbitStatus, Plane, Side,
};
use ratdiff::exact::{int, rat, to_f64, Rational};
use ratdiff::{Branch, EquationSpec, Error};

fn plus(p: f64, q: f64, nu: u32) -> EquationSpec {
    EquationSpec::from_f64(Branch::Plus, p, q, nu).unwrap()
}

#[test]
fn step_and_iterate_examples() {
    let e = EquationSpec::plus(int(2), int(7), 1).unwrap();
    assert_eq!(step_exact(&e, &int(3)).unwrap(), rat(7, 5));
    let m = EquationSpec::minus(int(1), int(1), 1).unwrap();
    assert_eq!(step_exact(&m, &int(1)), Err(Error::Singularity { step: 1 }));
    let c = EquationSpec::plus(int(1), int(2), 3).unwrap();
    assert_eq!(step_exact(&c, &int(2)).unwrap(), rat(2, 9));

    let o = iterate_float(&e, 3.0, 50);
    assert!((o.last_f64().unwrap() - (2.0 * 2f64.sqrt() - 1.0)).abs() < 1e-9);
    let f = EquationSpec::plus(int(1), int(1), 1).unwrap();
    assert_eq!(iterate_exact(&f, int(-2), 10).status, OrbitStatus::HitSingularity(2));
    let y = iterate_float(&EquationSpec::minus(int(2), int(1), 1).unwrap(), 3.0, 100);
    assert!((y.last_f64().unwrap() - (1.0 - 2f64.sqrt())).abs() < 1e-9);
}

#[test]
fn near_singular_guard() {
    let m = EquationSpec::minus(int(1), int(1), 1).unwrap();
    let o = iterate_float(&m, 1.0 + 1e-14, 5);
    assert_eq!(o.status, OrbitStatus::NearSingular(1));
}

#[test]
fn envelope_examples() {
    let e = bounds_envelope(&plus(2.0, 1.0, 1)).unwrap();
    assert!((e.lo - 0.4).abs() < 1e-15 && e.hi == 0.5);
    let e = bounds_envelope(&plus(1.0, 1.0, 5)).unwrap();
    assert_eq!((e.lo, e.hi), (0.5, 1.0));
    let e = bounds_envelope(&plus(1.0, 2.0, 1)).unwrap();
    assert!((e.lo - 2.0 / 3.0).abs() < 1e-15 && e.hi == 2.0);
    let m = EquationSpec::minus(int(1), int(2), 1).unwrap();
    assert_eq!(bounds_envelope(&m), Err(Error::WrongBranch));
    assert!(reflected_envelope(&m).is_ok());
}

#[test]
fn profile_examples() {
    let o = iterate_exact(&EquationSpec::plus(int(1), int(2), 1).unwrap(), int(9), 30);
    let prof = oscillation_profile(&o, 1.0).unwrap();
    assert_eq!(prof.sides[1], Side::Below);
    assert!(prof.strictly_alternating_from(0));
    let o = iterate_exact(&EquationSpec::plus(int(1), int(2), 1).unwrap(), int(1), 10);
    assert!(oscillation_profile(&o, 1.0).unwrap().sides.iter().all(|s| *s == Side::At));
    let o = iterate_float(&plus(2.0, 3.0, 4), 1.2, 60);
    assert!(oscillation_profile(&o, 1.0).unwrap().strictly_alternating_from(1));
}

#[test]
fn period_examples() {
    let o = iterate_float(&plus(1.0, 2.0, 3), 0.5, 400);
    assert_eq!(detect_period(&o, 4, 1e-9).unwrap().map(|p| p.period), Some(2));
    let o = iterate_float(&plus(1.0, 2.0, 1), 1.0, 200);
    assert_eq!(detect_period(&o, 4, 1e-9).unwrap().map(|p| p.period), Some(1));
    let o = iterate_float(&plus(2.0, 1.0, 1), 2.0, 200);
    assert_eq!(detect_period(&o, 4, 1e-9).unwrap().map(|p| p.period), Some(1));
    let short = iterate_float(&plus(2.0, 1.0, 1), 2.0, 50);
    assert!(matches!(detect_period(&short, 4, 1e-9), Err(Error::OrbitTooShort { .. })));
}

fn positive() -> impl Strategy<Value = f64> {
    (1u32..=500).prop_map(|k| f64::from(k) / 100.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn positive_plus_orbits_are_bounded(p in positive(), q in positive(), nu in 1u32..=6,
                                         x0 in 0.001f64..50.0) {
        let e = plus(p, q, nu);
        let env = bounds_envelope(&e).unwrap();
        prop_assert!(env.lo > 0.0 && env.lo <= env.hi);
        let xs = iterate_float(&e, x0, 60).values_f64();
        // x_1 <= q/p for any positive x0, which puts every later iterate in the envelope
        prop_assert!(xs[1] <= env.hi + 1e-12);
        for x in &xs[2..] {
            prop_assert!(env.contains(*x, 1e-12), "{} not in {:?}", x, env);
        }
        if x0 <= env.hi {
            prop_assert!(env.contains(xs[1], 1e-12));
        } else {
            prop_assert!(xs[1] < env.lo);
        }
    }

    #[test]
    fn exact_and_float_agree_linear(minus in any::<bool>(), p in 1i64..=5, q in 1i64..=5,
                                    num in -50i64..=50, den in 1i64..=7) {
        let branch = if minus { Branch::Minus } else { Branch::Plus };
        let e = EquationSpec::new(branch, int(p), int(q), 1).unwrap();
        agree(&e, rat(num, den), 60)?;
    }

    #[test]
    fn exact_and_float_agree_higher_nu(minus in any::<bool>(), p in 1i64..=5, q in 1i64..=5,
                                       nu in 2u32..=3, num in 1i64..=30, den in 1i64..=7) {
        let branch = if minus { Branch::Minus } else { Branch::Plus };
        let e = EquationSpec::new(branch, int(p), int(q), nu).unwrap();
        // exact sizes grow like nu^n, so keep the horizon short
        agree(&e, rat(num, den), if nu == 2 { 12 } else { 8 })?;
    }

    #[test]
    fn alternation_about_one(p in 1i64..=6, nu in 1u32..=8, x0 in 0.01f64..5.0) {
        prop_assume!((x0 - 1.0).abs() > 1e-6);
        let e = EquationSpec::plus(int(p), int(p + 1), nu).unwrap();
        let orbit = iterate_float(&e, x0, 40);
        let prof = oscillation_profile(&orbit, 1.0).unwrap();
        let last = prof.sides.iter().rposition(|s| *s != Side::At).unwrap();
        // once the float orbit has landed on 1 it stays there
        prop_assert!(prof.sides[last + 1..].iter().all(|s| *s == Side::At));
        prop_assert!(prof.sides[1..=last].windows(2).all(|w| w[0] != w[1]));
        prop_assert!(prof.semicycles.iter().filter(|c| c.side != Side::At).skip(1).all(|c| c.len == 1));
    }

    #[test]
    fn period_invariant_under_extension(p in 1i64..=4, nu in 1u32..=8, x0 in 0.1f64..3.0,
                                        extra in 1usize..400) {
        let e = EquationSpec::plus(int(p), int(p + 1), nu).unwrap();
        let short = iterate_float(&e, x0, 600);
        let long = iterate_float(&e, x0, 600 + extra);
        let a = detect_period(&short, 4, 1e-9).unwrap();
        let b = detect_period(&long, 4, 1e-9).unwrap();
        if let Some(a) = a {
            prop_assert_eq!(b.map(|b| b.period), Some(a.period));
        }
        let c = detect_period_with_burn_in(&long, 4, 1e-9, 100 + extra).unwrap();
        if let Some(a) = a {
            prop_assert_eq!(c.map(|c| c.period), Some(a.period));
        }
    }
}

fn agree(e: &EquationSpec, x0: Rational, steps: usize) -> Result<(), TestCaseError> {
    let exact = iterate(e, &x0, steps, Plane::Exact);
    let float = iterate(e, &x0, steps, Plane::Float);
    prop_assume!(float.status == OrbitStatus::Completed && exact.status == OrbitStatus::Completed);
    let xs = exact.exact_values().unwrap();
    let ys = float.values_f64();
    for (x, y) in xs.iter().zip(&ys) {
        let x = to_f64(x);
        prop_assert!((x - y).abs() <= 1e-9 * x.abs().max(1e-300), "{} vs {}", x, y);
    }
    Ok(())
}
