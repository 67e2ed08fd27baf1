//! Exact terminating series and randomized checks of the closed-form
//! hypergeometric values.

use airy_deriv::hyper::{
    pfq_exact, sweep_2f1, sweep_3f2, sweep_constant, sweep_two_param, verify_2f1_exact, HyperSpec, Id2F1, Id3F2,
    TwoParam,
};
use airy_deriv::ratcore::{int, rat};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> airy_deriv::error::Result<()> {
    // 2F1(-3, 1/2; 1 | 4/3), a terminating series evaluated exactly.
    let spec = HyperSpec::new(vec![int(-3), rat(1, 2)], vec![int(1)], rat(4, 3));
    println!("2F1(-3, 1/2; 1 | 4/3) = {}", pfq_exact(&spec)?);

    let c = verify_2f1_exact(Id2F1::A, 4)?;
    println!("{} at {}: lhs {:.12} rhs {:.12}", c.identity, c.point, c.lhs, c.rhs);

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut reports = Vec::new();
    for id in Id2F1::ALL {
        reports.push(sweep_2f1(id, &mut rng, 8, 20));
    }
    for id in Id3F2::ALL {
        reports.push(sweep_3f2(id, &mut rng, 8, 20));
    }
    for id in TwoParam::ALL {
        reports.push(sweep_two_param(id, &mut rng, 8, 20));
    }
    reports.push(sweep_constant(&mut rng, 20));
    for r in &reports {
        println!(
            "{:<10} points={:<3} max_rel_err={:.2e} verdict={}",
            r.identity_id,
            r.test_points.len(),
            r.max_rel_err,
            r.verdict
        );
    }
    Ok(())
}
