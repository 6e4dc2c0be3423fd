//! Gauss's alternating sum: sum_{k=0}^{n} (-1)^k / ((q;q)_k (q;q)_{n-k})
//! vanishes for odd n and collapses to 1/((1-q^2)(1-q^4)...(1-q^n)) for even n.
//!
//! Run with `cargo run --example gauss_identity`.

use qtelescope::gauss::{
    gauss_alternating_binomial, gauss_binomial_closed_form, gauss_closed_form, gauss_sum,
    gauss_verify_identity,
};

fn main() {
    let q_order = 20;

    for n in 0..=8 {
        let lhs = gauss_sum(n, q_order);
        let rhs = gauss_closed_form(n, q_order);
        let verdict = if lhs == rhs { "matches" } else { "DIFFERS" };
        println!("n = {n}: alternating sum {verdict} the closed form");
        if n == 4 {
            println!("    lhs = {lhs}");
            println!("    rhs = {rhs}");
        }
    }

    // the same cancellation, restated for Gaussian binomial coefficients
    println!();
    for n in [6, 8] {
        let lhs = gauss_alternating_binomial(n, q_order);
        let rhs = gauss_binomial_closed_form(n, q_order);
        assert_eq!(lhs, rhs);
        println!("sum_k (-1)^k [{n} choose k]_q = {rhs}");
    }

    println!();
    let report = gauss_verify_identity(10, 30);
    println!("{report}");
}
