//! Hypergeometric functions of matrix argument: series, Kummer transform and
//! the Jacobi integral representation.

use andreev::hypergeom::{hfma1, hfma1_integral_rep, hfma2, kummer_transform, QuadSpec, TruncationPolicy};
use andreev::JackIndex;

fn main() -> andreev::Result<()> {
    let pol = TruncationPolicy::default();
    let x = [0.2, 0.45];

    let s = hfma1(1.5, 2.0, 3.5, JackIndex::TWO, &x, &pol)?;
    println!("2F1(1.5, 2; 3.5 | X)  = {:.12} (tail {:.1e}, {} layers)", s.value, s.tail_estimate, s.layers_used);
    let k = kummer_transform(1.5, 2.0, 3.5, JackIndex::TWO, &x, &pol)?;
    println!("via Kummer            = {:.12} (tail {:.1e})", k.value, k.tail_estimate);

    // terminating series and its integral representation
    let t = hfma1(-2.0, -3.0, 4.0, JackIndex::HALF, &x, &pol)?;
    let rep = hfma1_integral_rep(2, 3.0, 4.0, JackIndex::HALF, &x, &QuadSpec::default())?;
    println!("2F1(-2, -3; 4 | X)    = {:.12} series, {:.12} integral", t.value, rep.value);

    let two = hfma2(0.5, 1.0, 2.0, JackIndex::ONE, &x, &[0.3, -0.1], 2, &pol)?;
    println!("2F1(0.5, 1; 2 | X, Y) = {:.12}", two.value);
    Ok(())
}
