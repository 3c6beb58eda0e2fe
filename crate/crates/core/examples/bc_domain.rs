//! The pullback domain R = D + X·K[X]: membership, expansions and weak-ACCP divisors.

use atomlab::bc::theorem::chain_by;
use atomlab::bc::{accp_element_bc, expand, in_d, in_d1, in_d2, weak_accp_divisor_bc, KPoly, KValue, Overring};

pub fn run_example() -> atomlab::Result<()> {
    for s in ["(y)/(x^2)", "(1)/(x)", "(x + y)/(x*y)"] {
        let h: KValue = s.parse()?;
        println!("{h}: D {} D1 {} D2 {}", in_d(&h), in_d1(&h), in_d2(&h));
    }

    let h: KValue = "(1)/(x)".parse()?;
    if let Some(e) = expand(Overring::D1, &h) {
        let terms: Vec<String> = e.terms.iter().map(|(i, c)| format!("({c})*t^{i}")).collect();
        println!("1/x = {}  with t = y/x^2", terms.join(" + "));
    }

    let w = KPoly::from_strings(&["0", "-1", "1"])?;
    println!("X^2 - X satisfies ACCP: {}", accp_element_bc(&w)?);

    // X - 1 fails ACCP through (X - 1)/x^n
    let f = KPoly::x_minus_1();
    for step in chain_by(&f, &"x".parse()?, 3)? {
        println!("  n = {}: {} in R: {}", step.index, step.term, step.in_r);
    }

    let ws = [KPoly::from_strings(&["0", "(-1)/(x)", "(1)/(x)"])?, KPoly::from_strings(&["0", "-1", "0", "1"])?];
    let report = weak_accp_divisor_bc(&ws)?;
    println!("d = {} (m = {}, N = {})", report.d, report.m, report.n);
    for q in &report.quotients {
        println!("  quotient {q}");
    }
    println!("chosen s = {}, factors satisfy ACCP: {}", report.s_index, report.factors_satisfy_accp);
    Ok(())
}

#[allow(dead_code)]
fn main() -> atomlab::Result<()> {
    run_example()
}
