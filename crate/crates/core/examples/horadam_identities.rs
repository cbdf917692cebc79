// Horadam terms, Binet roots, quadratic-ring powers and the classical identities.

use ratdiff::exact::{format_rational, int};
use ratdiff::horadam::{check_identity, phi_power, HoradamSpec, Identity};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let pell = HoradamSpec::pell();
    let terms: Vec<String> = pell.terms(-4, 8).iter().map(format_rational).collect();
    println!("Pell W_-4..W_8: {}", terms.join(" "));

    let roots = pell.binet()?;
    println!("Pell roots {:.12} {:.12}; W_10 by Binet {:.6}", roots.phi_plus, roots.phi_minus, roots.eval(10));

    // Jacobsthal: Φ^4 = q W_3 + W_4 Φ
    println!("Jacobsthal Phi^4 = {}", phi_power(&int(1), &int(2), 4));

    let spec = HoradamSpec::canonical(int(3), int(2))?;
    for identity in [
        Identity::Cassini { n: 7 },
        Identity::DOcagne { n: 4, r: 6 },
        Identity::Johnson { k: 9, l: 2, m: 6, n: 5, r: 3 },
        Identity::Convolution { n: 12, k: 4 },
        Identity::PhiPower { n: 9 },
    ] {
        let residual = check_identity(&identity, &spec)?;
        println!("{:<12} zero residual: {}", identity.kind().name(), residual.is_zero());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
