//! The Zaks relation u + v = (n+2)·w + ... and the factorizations of u + v.

use atomlab::monoid::{Budget, DEFAULT_BUDGET};
use atomlab::zaks::{zaks_factorizations, zaks_relation_check, ZaksPresentation};

pub fn run_example() -> atomlab::Result<()> {
    let depth = 5;
    for n in 1..=depth {
        println!("relation at n = {n}: {}", zaks_relation_check(depth, n)?);
    }
    let pres = ZaksPresentation::new(depth);
    println!("y_2 = {:?}", pres.y_n(2)?);

    let mut target = vec![0; depth + 3];
    target[0] = 1;
    target[1] = 1;
    let fs = zaks_factorizations(&pres, &target, &mut Budget::new(DEFAULT_BUDGET))?;
    println!("u + v has {} factorizations:", fs.len());
    for f in fs {
        println!("  u {} v {} w {} x {:?} y {:?}", f.u, f.v, f.w, f.x, f.y);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> atomlab::Result<()> {
    run_example()
}
