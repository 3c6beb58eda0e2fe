//! Every example runs to completion.

#[path = "../examples/antimatter_intersection.rs"]
mod antimatter_intersection;

#[test]
fn antimatter_intersection_runs() {
    antimatter_intersection::run_example().expect("antimatter_intersection should run");
}

#[path = "../examples/bc_domain.rs"]
mod bc_domain;

#[test]
fn bc_domain_runs() {
    bc_domain::run_example().expect("bc_domain should run");
}

#[path = "../examples/grams_decomposition.rs"]
mod grams_decomposition;

#[test]
fn grams_decomposition_runs() {
    grams_decomposition::run_example().expect("grams_decomposition should run");
}

#[path = "../examples/monoid_algebra_chains.rs"]
mod monoid_algebra_chains;

#[test]
fn monoid_algebra_chains_runs() {
    monoid_algebra_chains::run_example().expect("monoid_algebra_chains should run");
}

#[path = "../examples/pairprimes_not_weak_accp.rs"]
mod pairprimes_not_weak_accp;

#[test]
fn pairprimes_not_weak_accp_runs() {
    pairprimes_not_weak_accp::run_example().expect("pairprimes_not_weak_accp should run");
}

#[path = "../examples/rank_two_monoid.rs"]
mod rank_two_monoid;

#[test]
fn rank_two_monoid_runs() {
    rank_two_monoid::run_example().expect("rank_two_monoid should run");
}

#[path = "../examples/strongly_atomic.rs"]
mod strongly_atomic;

#[test]
fn strongly_atomic_runs() {
    strongly_atomic::run_example().expect("strongly_atomic should run");
}

#[path = "../examples/verify_paper.rs"]
mod verify_paper;

#[test]
fn verify_paper_runs() {
    verify_paper::run_example().expect("verify_paper should run");
}

#[path = "../examples/zaks_domain.rs"]
mod zaks_domain;

#[test]
fn zaks_domain_runs() {
    zaks_domain::run_example().expect("zaks_domain should run");
}
