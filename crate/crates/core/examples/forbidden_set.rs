// Initial values whose orbit hits a zero denominator, certified by exact iteration.

use ratdiff::closed_form::{excluded_points, forbidden_points};
use ratdiff::exact::{format_rational, int};
use ratdiff::{Branch, EquationSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for branch in [Branch::Plus, Branch::Minus] {
        let eq = EquationSpec::new(branch, int(1), int(1), 1)?;
        println!("{eq}");
        for pt in forbidden_points(&eq, 6)? {
            let hit = pt.certify(&eq);
            println!("  m = {}  x0 = {:>8}  singular at step {:?}", pt.m, format_rational(&pt.value), hit);
        }
        let [a, b] = excluded_points(&eq)?;
        println!("  constant solutions start at {a:.9} and {b:.9}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
