//! Partitions, hook products and Jack polynomials in exact arithmetic.

use andreev::partitions::enumerate;
use andreev::symfunc::{hook_coefficients, jack_at_identity, JackEvaluator};
use andreev::{partition, JackIndex};
use num_rational::BigRational;

fn main() {
    let lambda = partition![3, 1];
    println!("λ = {lambda}, conjugate {}, weight {}", lambda.conjugate(), lambda.weight());

    for alpha in [JackIndex::HALF, JackIndex::ONE, JackIndex::TWO] {
        let h = hook_coefficients::<BigRational>(&lambda, alpha, 3);
        println!("α = {alpha}: d' = {}, h = {}, e' = {}", h.d_prime, h.h, h.e_prime);
        println!("  P_λ(1,1,1) = {}", jack_at_identity::<BigRational>(&lambda, alpha, 3));
    }

    // zonal polynomials at a point, all partitions of weight ≤ 3
    let mut ev = JackEvaluator::new(JackIndex::TWO, vec![0.2, -0.5, 0.7]);
    for mu in enumerate(3, 3) {
        println!("P_{mu}^(2)(0.2, -0.5, 0.7) = {:.6}", ev.eval(&mu));
    }
}
