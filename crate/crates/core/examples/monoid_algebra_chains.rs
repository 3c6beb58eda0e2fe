//! Chains of binomials in monoid algebras over ℚ and 𝔽_5.

use atomlab::algebra::{
    divides_in_algebra, localization_chain_check, ChainRing, ExponentMonoid, FieldSpec, LocalizedElement, PolyExpr,
};
use atomlab::monoid::{Kernel, Presentation, DEFAULT_BUDGET};
use atomlab::Rational;

pub fn run_example() -> atomlab::Result<()> {
    for field in [FieldSpec::Rationals, FieldSpec::prime(5)?] {
        let one = PolyExpr::one(field);
        let x = |n, d| PolyExpr::x_pow(field, Rational::new(n, d));
        let a = x(1, 3).sub(&one)?;
        let b = x(2, 3).add(&x(1, 3))?.add(&one)?;
        println!("over {field}: ({a}) * ({b}) = {}", a.mul(&b)?);
    }

    let cube: Vec<_> = (0..6u32)
        .map(|n| {
            let x = PolyExpr::x_pow(FieldSpec::Rationals, Rational::new(1, 3i64.pow(n)));
            x.sub(&PolyExpr::one(FieldSpec::Rationals)).map(LocalizedElement::from_poly)
        })
        .collect::<atomlab::Result<_>>()?;
    let strict = localization_chain_check(&cube, &ExponentMonoid::NonnegRationals, ChainRing::Plain, DEFAULT_BUDGET)?;
    println!("X^(1/3^n) - 1 strictly ascending for n < 6: {strict}");

    let gp = Kernel::new(&Presentation::gp(2, 8))?;
    let exps = ExponentMonoid::Presented(&gp);
    let f = "X^{1/4}".parse::<PolyExpr>()?;
    let g = "X^{1/2}".parse::<PolyExpr>()?;
    println!("X^(1/4) | X^(1/2) in F[G_2]: {}", divides_in_algebra(&f, &g, &exps, DEFAULT_BUDGET)?.is_yes());
    Ok(())
}

#[allow(dead_code)]
fn main() -> atomlab::Result<()> {
    run_example()
}
