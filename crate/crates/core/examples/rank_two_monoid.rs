//! The rank-two monoid: ψ, the shifted decomposition and the 2β_n chain.

use atomlab::chain::{validate_chain, ChainCertificate, ChainRule};
use atomlab::decompose::{p_decompose, phi, psi, shifted_decompose};
use atomlab::monoid::{Kernel, MonoidValue, Presentation};
use atomlab::Rational;

fn beta(n: usize) -> Rational {
    const SPARSE: [i64; 4] = [5, 17, 67, 257];
    -SPARSE[..n].iter().map(|&p| Rational::new(1, p)).sum::<Rational>()
}

pub fn run_example() -> atomlab::Result<()> {
    let atoms = Kernel::new(&Presentation::rank_two(2))?.atoms()?;
    println!("{} atoms at depth 2:", atoms.len());
    for a in &atoms {
        println!("  {a}");
    }

    let q = Rational::new(3, 5);
    let d = p_decompose(&q)?;
    println!("{q} = {} + {:?} in P", d.n0, d.coeffs);

    let b = MonoidValue::rank_two(1, &beta(2) + &Rational::new(2, 5));
    let s = shifted_decompose(&b)?;
    println!("{b}: phi = {}, psi = {}, shifted {:?}", phi(&b), psi(&b)?, s.coeffs);

    let start = MonoidValue::rank_two(2, beta(1).scale(2));
    let cert = ChainCertificate::from_rule(start, ChainRule::Rank2Beta { phi: 2, index: 1, step: 1 }, 4)?;
    for (t, c) in cert.terms.iter().zip(&cert.quotients) {
        println!("  {t}  (next quotient {c})");
    }
    println!("chain valid at depth 6: {}", validate_chain(&Presentation::rank_two(6), &cert));
    Ok(())
}

#[allow(dead_code)]
fn main() -> atomlab::Result<()> {
    run_example()
}
