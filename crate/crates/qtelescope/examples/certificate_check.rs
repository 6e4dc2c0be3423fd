//! Creative-telescoping certificates: a closed-form companion H_k such that
//! F_k(a) - F_k(aq) - aq F_k(aq^2) = H_{k+1}(a) - H_k(a) for Watson's terms,
//! and F_k(x) - F_k(xq) = H_{k+1}(x) - H_k(x) for Sylvester's. Summing over k
//! collapses the right side and proves the recurrence.
//!
//! Run with `cargo run --example certificate_check`.

use qtelescope::certificates::{
    sylvester_certificate, verify_sylvester_certificate, verify_watson_certificate,
    watson_certificate,
};

fn main() {
    let (k_max, a_order, q_order) = (5, 10, 24);

    let watson = verify_watson_certificate(k_max, a_order, q_order);
    let sylvester = verify_sylvester_certificate(k_max, a_order, q_order);
    println!("{}", watson.into_report());
    println!();
    println!("{}", sylvester.into_report());

    // the certificates themselves are explicit series
    let h1 = watson_certificate(1, 4, 12);
    println!("\nwatson H_1, row a^2: {}", h1.row(2));
    let h1 = sylvester_certificate(1, 4, 12);
    println!("sylvester H_1, row x^1: {}", h1.row(1));
}
