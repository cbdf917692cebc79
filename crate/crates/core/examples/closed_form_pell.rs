// Exact closed-form solutions for nu = 1 on the Pell parameters (p, q) = (2, 1).

use ratdiff::closed_form::{asymptotic_limit, closed_form_series, solve_closed_form_f64};
use ratdiff::dynamics::iterate_exact;
use ratdiff::exact::{format_rational, int, to_f64};
use ratdiff::EquationSpec;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let plus = EquationSpec::plus(int(2), int(1), 1)?;
    let minus = EquationSpec::minus(int(2), int(1), 1)?;

    let formula = closed_form_series(&plus, &int(2), 8)?;
    let orbit = iterate_exact(&plus, int(2), 8);
    assert_eq!(orbit.exact_values().unwrap(), &formula[..]);
    let shown: Vec<String> = formula.iter().map(format_rational).collect();
    println!("x_n from x0 = 2: {}", shown.join(", "));

    let sigma = 1.0 + 2f64.sqrt();
    let x100 = solve_closed_form_f64(&plus, 2.0, 100)?;
    println!("x_100 = {x100:.12}, sigma - 2 = {:.12}, limit {:.12}", sigma - 2.0, asymptotic_limit(&plus)?);

    let y = closed_form_series(&minus, &int(3), 100)?;
    println!("y_100 from y0 = 3: {:.12} (2 - sigma = {:.12})", to_f64(&y[100]), 2.0 - sigma);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
