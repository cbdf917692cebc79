// CSV series for the plotted orbits: two nu = 1 orbits per branch and the
// nu > 1 regimes on either side of the period-two boundary.

use ratdiff::dynamics::{iterate_float, Orbit};
use ratdiff::exact::format_f64;
use ratdiff::{Branch, EquationSpec};

fn emit(label: &str, orbit: &Orbit) {
    for (n, x) in orbit.values_f64().iter().enumerate() {
        println!("{label},{n},{}", format_f64(*x));
    }
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("series,n,value");
    let runs = [
        ("plus_2_7_nu1_x3", Branch::Plus, 2.0, 7.0, 1, 3.0),
        ("plus_2_7_nu1_xm3", Branch::Plus, 2.0, 7.0, 1, -3.0),
        ("plus_2_1_nu1_x2", Branch::Plus, 2.0, 1.0, 1, 2.0),
        ("minus_2_1_nu1_y3", Branch::Minus, 2.0, 1.0, 1, 3.0),
        ("plus_3_4_nu2_stable", Branch::Plus, 3.0, 4.0, 2, 1.5),
        ("plus_1_2_nu6_cycle", Branch::Plus, 1.0, 2.0, 6, 0.5),
    ];
    for (label, branch, p, q, nu, x0) in runs {
        let eq = EquationSpec::from_f64(branch, p, q, nu)?;
        emit(label, &iterate_float(&eq, x0, 40));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
