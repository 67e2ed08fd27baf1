//! Floating evaluation of Airy derivatives through the polynomials,
//! with the independent oracles used by the test suite.

use airy_deriv::airy_numeric::{
    ai_bi, ai_derivative, maclaurin_derivative, product_derivative, richardson_derivative, richardson_step, AiryFn,
    Product,
};
use airy_deriv::airy_pq::pq_recurrence;
use airy_deriv::airy_rst::rst_recurrence;

fn main() -> airy_deriv::error::Result<()> {
    let pq = pq_recurrence(10);
    let x = -1.3;
    let v = ai_bi(x)?;
    println!("Ai({x}) = {:.15}, Bi({x}) = {:.15}", v.ai, v.bi);
    for n in [1, 4, 7, 10] {
        let via_poly = ai_derivative(n, x, &pq[n])?;
        let oracle = maclaurin_derivative(AiryFn::Ai, n, x)?;
        println!("Ai^({n})({x}): {via_poly:+.15e}  series {oracle:+.15e}");
    }

    let rst = rst_recurrence(6);
    for n in 1..=6 {
        let exact = product_derivative(Product::AiBi, n, x, &rst[n])?;
        let fd = richardson_derivative(&|y| Product::AiBi.value(y), n, x, richardson_step(n))?;
        println!("[Ai Bi]^({n})({x}): {exact:+.10e}  finite differences {fd:+.10e}");
    }
    Ok(())
}
