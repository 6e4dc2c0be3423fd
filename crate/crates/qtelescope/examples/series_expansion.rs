//! Direct work with the exact series types: big-integer coefficients,
//! Pochhammer symbols, inversion, and the two-variable grid.
//!
//! Run with `cargo run --example series_expansion`.

use qtelescope::series::{AQSeries, QSeries};

fn main() {
    let n = 24;

    // Euler: 1/(q;q)_inf generates all partitions
    let euler = QSeries::poch(0, n); // empty product, i.e. 1
    assert_eq!(euler, QSeries::one(n));

    let all_partitions = QSeries::poch_inf(n).invert().expect("constant term 1");
    println!("partition numbers: {}", all_partitions);

    // partitions into parts of size at most 3
    let mut denom = QSeries::one(n);
    for j in 1..=3 {
        denom = denom.sub(&denom.shift(j));
    }
    println!("parts <= 3:        {}", denom.invert().expect("constant term 1"));

    // a two-variable product: (aq;q)_inf tracked to a^2
    let poch = AQSeries::poch_inf(1, 1, 2, n).expect("d >= 1 converges");
    for d in 0..=2 {
        println!("(aq;q)_inf a^{d}:   {}", poch.row(d));
    }

    // exact big-integer arithmetic; nothing is floating point
    let big = all_partitions.mul(&all_partitions).mul(&all_partitions);
    println!("1/(q;q)_inf^3 q^{n}: {}", big.coeff(n));
}
