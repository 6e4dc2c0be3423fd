//! Sylvester's identity: the alternating sum
//! `sum_k (-1)^k q^{k(3k+1)/2} x^k (1 - x q^{2k+1}) / ((q;q)_k (x q^{k+1};q)_inf)`
//! telescopes all the way down to the constant 1.
//!
//! Run with `cargo run --example sylvester_identity`.

use qtelescope::series::{sylvester_lhs, sylvester_summand};
use qtelescope::sylvester::sylvester_verify_identity;

fn main() {
    let (x_order, q_order) = (6, 18);

    // individual terms are dense ...
    for k in 0..=2 {
        let t = sylvester_summand(k, x_order, q_order);
        println!("term k={k}, row x^1: {}", t.row(1));
    }

    // ... but the sum cancels to 1
    let lhs = sylvester_lhs(x_order, q_order);
    println!("\nfull sum:");
    for d in 0..=2 {
        println!("    x^{d}: {}", lhs.row(d));
    }

    println!();
    let report = sylvester_verify_identity(8, 30);
    println!("{report}");
}
