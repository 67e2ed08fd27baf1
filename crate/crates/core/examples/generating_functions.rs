//! Truncated generating-function sums and the tail sums of the
//! Laplace sequences.

use airy_deriv::airy_numeric::{genfun_check, lambda_tail};

fn main() -> airy_deriv::error::Result<()> {
    for (x, t) in [(0.5, 0.2), (-1.0, 0.4), (1.5, 0.1)] {
        for n in [5, 10, 20] {
            let (ep, eq) = genfun_check(x, t, n)?;
            println!("x={x:<5} t={t:<4} N={n:<3} errP={ep:.2e} errQ={eq:.2e}");
        }
    }
    for n in 0..3 {
        let (closed, series) = lambda_tail(n, 6, 0.5)?;
        println!("tail n={n} N=6 t=0.5: closed {closed:.12} series {series:.12}");
    }
    Ok(())
}
