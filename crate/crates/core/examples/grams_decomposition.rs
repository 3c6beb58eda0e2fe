//! Unique decomposition in Grams' monoid and the halving chain from 1/2.

use atomlab::chain::{accp_element, classify};
use atomlab::decompose::grams_decompose;
use atomlab::monoid::{Kernel, MonoidValue, Presentation, DEFAULT_BUDGET};
use atomlab::Rational;

pub fn run_example() -> atomlab::Result<()> {
    let pres = Presentation::grams(6);

    let b = Rational::new(2, 3);
    let d = grams_decompose(&pres, &b)?;
    println!("{b} = {} + {:?}", d.q_part, d.coeffs);

    let kernel = Kernel::new(&pres)?;
    let atoms = kernel.atoms()?;
    println!("first atoms: {}", atoms.iter().take(4).map(|a| a.to_string()).collect::<Vec<_>>().join(", "));
    let lengths = kernel.length_set(&MonoidValue::Puiseux(b))?;
    let head: Vec<_> = lengths.iter().take(6).collect();
    println!("L(2/3) has {} lengths at depth 6, smallest {head:?}", lengths.len());

    let verdict = accp_element(&pres, &MonoidValue::Puiseux(Rational::new(1, 2)), DEFAULT_BUDGET)?;
    println!("accp(1/2): {verdict}");

    let c = classify(&pres, DEFAULT_BUDGET)?;
    println!("accp {} / weak {} / strongly atomic {} / atomic {}", c.accp.value, c.weak_accp.value, c.strongly_atomic.value, c.atomic.value);
    Ok(())
}

#[allow(dead_code)]
fn main() -> atomlab::Result<()> {
    run_example()
}
