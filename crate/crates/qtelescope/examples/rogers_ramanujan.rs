//! Specializations of Watson's identity: a = q gives the second
//! Rogers-Ramanujan identity, and a = 1 (after multiplying by (q;q)_inf)
//! gives a bilateral series of Schur.
//!
//! Run with `cargo run --example rogers_ramanujan`.

use qtelescope::series::{rr_product, rr_sum, schur_bilateral};
use qtelescope::watson::{watson_verify_rr, watson_verify_schur};

fn main() {
    let q_order = 40;

    for which in [1u8, 2u8] {
        let sum = rr_sum(which, q_order);
        let product = rr_product(which, q_order);
        assert_eq!(sum, product);
        println!("rr{which}: sum side  = {sum}");
        println!("rr{which}: product   = {product}\n");
    }

    println!("schur bilateral = {}\n", schur_bilateral(q_order));

    for report in [
        watson_verify_rr(1, q_order),
        watson_verify_rr(2, q_order),
        watson_verify_schur(q_order),
    ] {
        println!("{report}");
    }
}
