//! Watson's identity equates an alternating pentagonal-type sum with the
//! Rogers-Ramanujan sum `sum_n a^n q^{n^2} / (q;q)_n`, coefficient by
//! coefficient in a and q.
//!
//! Run with `cargo run --example watson_identity`.

use qtelescope::series::{watson_lhs, watson_rhs};
use qtelescope::watson::{watson_verify_identity, watson_verify_recurrence};

fn main() {
    let (a_order, q_order) = (8, 20);

    let lhs = watson_lhs(a_order, q_order);
    let rhs = watson_rhs(a_order, q_order);
    assert_eq!(lhs, rhs);
    println!("both sides agree on the {a_order} x {q_order} grid; rows in a:");
    for n in 0..=4 {
        println!("    a^{n}: {}", rhs.row(n));
    }

    // the rows obey F_n = q^n F_n + a q^{2n-1} F_{n-1}, i.e. the closed form
    // a^n q^{n^2} / (q;q)_n
    println!();
    let report = watson_verify_recurrence(6, 25);
    println!("{report}");

    println!();
    let report = watson_verify_identity(10, 25);
    println!("{report}");
}
