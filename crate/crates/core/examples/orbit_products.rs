// Partial products x_0 x_1 ... x_n in the three regimes of p against q - 1.

use ratdiff::closed_form::{product_analysis, product_closed_form};
use ratdiff::exact::{int, rat, to_f64};
use ratdiff::EquationSpec;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // p = q - 1: Jacobsthal parameters, finite limit
    let plus = EquationSpec::plus(int(1), int(2), 1)?;
    let a = product_analysis(&plus, &int(9), 60)?;
    assert_eq!(a.partials[60], product_closed_form(&plus, &int(9), 60)?);
    println!("{:?}: limit {:.9}, product at n = 60 {:.12}", a.regime, a.predicted_limit.unwrap(), to_f64(&a.partials[60]));

    let minus = plus.with_branch(ratdiff::Branch::Minus);
    let b = product_analysis(&minus, &int(-9), 60)?;
    let (even, odd) = b.parity_limits().unwrap();
    println!("minus branch: even n -> {even:.9} ({:.9}), odd n -> {odd:.9} ({:.9})",
        to_f64(&b.partials[60]), to_f64(&b.partials[59]));

    // p > q - 1: tends to zero
    let c = product_analysis(&EquationSpec::plus(int(2), int(1), 1)?, &int(2), 40)?;
    println!("{:?}: product at n = 40 {:.3e}", c.regime, to_f64(&c.partials[40]));

    // p < q - 1: unbounded
    let d = product_analysis(&EquationSpec::plus(rat(1, 2), int(2), 1)?, &int(9), 40)?;
    let first = d.running_max_abs().iter().position(|m| *m > 1e3);
    println!("{:?}: |product| first exceeds 1e3 at n = {first:?}", d.regime);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
