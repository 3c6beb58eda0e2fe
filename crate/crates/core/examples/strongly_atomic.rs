//! Strong common divisors in the pair-primes monoid.

use atomlab::chain::{gcd_is_zero, strong_common_divisor};
use atomlab::monoid::{MonoidValue, Presentation, DEFAULT_BUDGET};

pub fn run_example() -> atomlab::Result<()> {
    let pres = Presentation::pair_primes(8);
    // 1/5 = 2·(1/10), 31/210 = 1/10 + 1/21, 13/110 = 1/10 + 1/55, 3/55: sums of atoms 1/(p_n p_{n+2})
    let pairs = [((1, 2), (1, 3)), ((1, 5), (31, 210)), ((13, 110), (3, 55))];
    for ((a, b), (c, d)) in pairs {
        let (x, y) = (MonoidValue::q(a, b), MonoidValue::q(c, d));
        let g = strong_common_divisor(&pres, &x, &y, DEFAULT_BUDGET)?;
        let rx = x.try_sub(&g)?.expect("d <= x");
        let ry = y.try_sub(&g)?.expect("d <= y");
        println!("x = {x}, y = {y}: d = {g}, gcd(x - d, y - d) = 0 is {}", gcd_is_zero(&pres, &rx, &ry)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> atomlab::Result<()> {
    run_example()
}
