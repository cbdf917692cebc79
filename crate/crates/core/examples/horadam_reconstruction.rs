// Horadam numbers recovered from products along special orbits.

use ratdiff::closed_form::{docagne_limit_gap, docagne_product, johnson_product, reconstruct_horadam};
use ratdiff::exact::{format_rational, int};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let w15 = reconstruct_horadam(&int(1), &int(1), 1, 15)?;
    println!("Fibonacci W_15 from the orbit of x0 = 1/1: {}", format_rational(&w15));

    let w = reconstruct_horadam(&int(2), &int(3), 2, 12)?;
    println!("W_12(0, 1; 2, 3) = {}", format_rational(&w));

    for r in [1, 5, 20] {
        let ratio = docagne_product(&int(1), &int(1), 3, r)?;
        println!("r = {r:>2}: W_(3+r)/W_r = {:>12}  gap to Phi^3 {:.3e}",
            format_rational(&ratio), docagne_limit_gap(&int(1), &int(1), 3, r)?);
    }

    // x0 = -W_(r+1)/W_r is itself forbidden at depth r
    println!("johnson r = 6, n = 3: {}", format_rational(&johnson_product(&int(1), &int(1), 6, 3)?));
    println!("johnson r = 6, n = 6: {:?}", johnson_product(&int(1), &int(1), 6, 6));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
