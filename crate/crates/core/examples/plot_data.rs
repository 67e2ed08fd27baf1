//! Writes `a,F(a)` samples as CSV, leaving poles empty.

use airy_deriv::cli::{curve_samples, Curve};

fn main() {
    println!("a,F");
    for (a, v) in curve_samples(Curve::F, -1.5, 2.5, 81) {
        match v {
            Some(v) => println!("{a:.4},{v:.10}"),
            None => println!("{a:.4},"),
        }
    }
}
