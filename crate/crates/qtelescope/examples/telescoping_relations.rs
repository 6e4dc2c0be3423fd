//! The per-cell relation behind every proof here: phi_{n,k} splits the cell
//! generating function as f(k) = g(k) + h(k) + h(k+1), so the alternating sums
//! over k of f and g agree and the h-column telescopes away.
//!
//! Run with `cargo run --example telescoping_relations`.

use qtelescope::gauss::GaussInstance;
use qtelescope::sylvester::SylvesterInstance;
use qtelescope::telescoping::{brute_force_f, check_telescoping, TelescopingInstance};
use qtelescope::watson::watson_closed_form;
use qtelescope::watson::WatsonInstance;

fn summarize(inst: &impl TelescopingInstance, n: usize, a_order: usize, q_order: usize) {
    let records = check_telescoping(inst, n, a_order, q_order);
    let bad = records.iter().filter(|r| !r.ok()).count();
    let cells = records.len();
    println!("{:<10} n={n}: {cells} relations checked, {bad} failures", inst.name());
}

fn main() {
    for n in 1..=5 {
        summarize(&GaussInstance, n, 0, 16);
    }
    println!();
    for n in 1..=4 {
        summarize(&WatsonInstance, n, 8, 16);
        summarize(&SylvesterInstance, n, 8, 16);
    }

    // telescoping forces the alternating sum to equal the closed form
    let f = brute_force_f(&WatsonInstance, 3, 8, 16);
    let closed = watson_closed_form(3, 8, 16);
    assert_eq!(f.row(3), closed.row(3));
    println!("\nwatson F_3 by enumeration: a^3 ( {} )", f.row(3));
}
