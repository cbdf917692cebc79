// Prime period-two cycles and their approximate closed form.

use ratdiff::analysis::{minus_even_cycle_threshold, solve_period_two};
use ratdiff::dynamics::{detect_period, iterate_float};
use ratdiff::exact::int;
use ratdiff::{Branch, EquationSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (branch, p, q, nu) in [(Branch::Plus, 1, 2, 3), (Branch::Plus, 1, 2, 6), (Branch::Minus, 1, 2, 5), (Branch::Minus, 1, 2, 4)] {
        let eq = EquationSpec::new(branch, int(p), int(q), nu)?;
        match solve_period_two(&eq, 1e-10) {
            Some(c) => {
                let (dphi, dpsi) = c.approx_deviation();
                println!(
                    "{eq}: ({:.9}, {:.9}) residual {:.1e}, approx ({:.6}, {:.6}) off by {:.2}% / {:.2}%",
                    c.phi, c.psi, c.residual, c.approx_form.0, c.approx_form.1, 100.0 * dphi, 100.0 * dpsi
                );
                let orbit = iterate_float(&eq, c.phi * 1.001, 2000);
                println!("  perturbed orbit: {:?}", detect_period(&orbit, 4, 1e-9)?);
            }
            None => println!("{eq}: no two-cycle"),
        }
    }
    println!("minus, p = 1, q = 2, even nu: first cycle at nu = {:?}", minus_even_cycle_threshold(&int(1), &int(2), 1e-10));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
