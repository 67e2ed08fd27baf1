//! Telescoping certificates and the three special sequences.

use airy_deriv::certs::{sequence_closed, sequence_sum, telescoping_check, Sequence};

fn main() -> airy_deriv::error::Result<()> {
    for n in 0..=10 {
        assert!(telescoping_check(n)?, "telescoping fails at n={n}");
    }
    println!("certificates telescope for n <= 10");

    for seq in Sequence::ALL {
        for n in 0..4 {
            let sum = sequence_sum(seq, n)?;
            let closed = sequence_closed(seq, n);
            println!("{seq:<11} n={n} point={:<6} F={sum:<14} closed={closed}", seq.point(n).to_string());
            assert_eq!(sum, closed);
        }
    }
    Ok(())
}
