//! Elements of the intersection of two localizations split into two nonunits.

use atomlab::algebra::{antimatter_factors, intersection_normal_form, LocalizedElement, PolyExpr};
use atomlab::monoid::Presentation;

pub fn run_example() -> atomlab::Result<()> {
    let (g1, g2) = (Presentation::intersect(1, 5), Presentation::intersect(2, 5));
    let num: PolyExpr = "X^{3/4} + 2*X^{5/4}".parse()?;
    let den: PolyExpr = "1 + X^{1/2}".parse()?;
    let h = LocalizedElement::new(num, den)?;

    let form = intersection_normal_form(&g1, &h, &g2, &h)?;
    println!("h = X^{} * unit: {}", form.q, form.is_unit_pair);

    let (f1, f2) = antimatter_factors(&h, &form)?;
    println!("h = [{} / {}] * [{} / {}]", f1.num, f1.den, f2.num, f2.den);
    println!("product matches: {}", f1.mul(&f2)?.same_as(&h)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> atomlab::Result<()> {
    run_example()
}
