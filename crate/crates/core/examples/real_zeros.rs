//! Exact real-root counts of the reduced polynomials.

use airy_deriv::airy_pq::{family_table, reduce};
use airy_deriv::family::Family;
use airy_deriv::ratcore::sturm_count;

fn main() -> airy_deriv::error::Result<()> {
    for fam in Family::ALL {
        let mut shown = 0;
        for (n, raw) in family_table(fam, 30).iter().enumerate() {
            if raw.is_zero() {
                continue;
            }
            let p = reduce(fam, n, raw)?;
            if p.degree() == Some(0) {
                continue;
            }
            let c = sturm_count(&p)?;
            if shown < 3 {
                println!("{fam}_{n}: reduced {p}  real={} negative={} simple={}", c.real, c.negative, c.all_simple);
                shown += 1;
            }
            assert_eq!(c.real, c.negative);
        }
    }
    println!("every reduced polynomial up to n=30 has only negative simple zeros");
    Ok(())
}
