//! Selberg-type closed forms next to a brute-force midpoint sum.

use andreev::hypergeom::{selberg_base, selberg_jack, zp_constant};
use andreev::{partition, JackIndex};

fn main() -> andreev::Result<()> {
    let (x, y, alpha) = (0.5, 1.5, JackIndex::TWO);
    let closed = selberg_base(x, y, alpha, 2)?;

    let k = 2000;
    let h = 1.0 / k as f64;
    let mut sum = 0.0;
    for i in 0..k {
        for j in 0..k {
            let (a, b) = ((i as f64 + 0.5) * h, (j as f64 + 0.5) * h);
            sum += (a * b).powf(x) * ((1.0 - a) * (1.0 - b)).powf(y) * (a - b).abs().powf(2.0 / alpha.value());
        }
    }
    println!("S_2({x}, {y}; α={alpha}) = {closed:.8}, midpoint sum {:.8}", sum * h * h);

    println!("with P_(2,1)^(1/2): {:.8}", selberg_jack(0.2, 0.8, JackIndex::HALF, 2, &partition![2, 1])?);
    println!("Z_2(1, 9; 1/2)     = {:.8e}", zp_constant(1.0, 9.0, 2, JackIndex::HALF)?);
    Ok(())
}
