// Equilibria of both equations for nu > 1 with their multipliers.

use ratdiff::analysis::{equilibria, linearization, theorem_a_check};
use ratdiff::dynamics::{iterate_float, oscillation_profile};
use ratdiff::exact::int;
use ratdiff::{Branch, EquationSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        (Branch::Plus, 3, 4, 2),
        (Branch::Plus, 1, 2, 4),
        (Branch::Plus, 2, 7, 3),
        (Branch::Minus, 3, 2, 3),
        (Branch::Minus, 3, 1, 2),
        (Branch::Minus, 1, 3, 2),
    ];
    for (branch, p, q, nu) in cases {
        let eq = EquationSpec::new(branch, int(p), int(q), nu)?;
        let reports = equilibria(&eq)?;
        if reports.is_empty() {
            println!("{eq}: no equilibrium");
        }
        for r in reports {
            println!(
                "{eq}: {:.10} {:?} multiplier {:.6} {:?} (sum test {})",
                r.value, r.bracket, r.multiplier, r.classification,
                theorem_a_check(&linearization(&eq, r.value))
            );
        }
    }

    let eq = EquationSpec::plus(int(3), int(4), 2)?;
    let orbit = iterate_float(&eq, 1.5, 30);
    let profile = oscillation_profile(&orbit, 1.0)?;
    println!("orbit about 1 alternates from step 0: {}", profile.strictly_alternating_from(0));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
