//! 1/2 and 1/3 have only 0 as a common divisor, and neither satisfies ACCP.

use atomlab::chain::{accp_element, classify};
use atomlab::monoid::{Kernel, MonoidValue, Presentation, DEFAULT_BUDGET};
use atomlab::Rational;

pub fn run_example() -> atomlab::Result<()> {
    let pres = Presentation::pair_primes(8);
    let kernel = Kernel::new(&pres)?;
    let (half, third) = (MonoidValue::Puiseux(Rational::new(1, 2)), MonoidValue::Puiseux(Rational::new(1, 3)));

    let common = kernel.common_divisors(&[half.clone(), third.clone()])?;
    println!("common divisors of 1/2 and 1/3: {common:?}");

    for b in [&half, &third] {
        let v = accp_element(&pres, b, DEFAULT_BUDGET)?;
        println!("accp({b}): {v}");
        if let Some(cert) = v.certificate() {
            let head: Vec<String> = cert.terms.iter().take(4).map(|t| t.to_string()).collect();
            println!("  chain {} ...", head.join(" > "));
        }
    }

    let c = classify(&pres, DEFAULT_BUDGET)?;
    println!("weak accp: {} ({})", c.weak_accp.value, c.weak_accp.evidence);
    Ok(())
}

#[allow(dead_code)]
fn main() -> atomlab::Result<()> {
    run_example()
}
