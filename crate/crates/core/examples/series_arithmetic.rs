//! Exact truncated q-series: Pochhammer products, inversion and the
//! Rogers-Ramanujan sum side.

use crystal_identities::series::{pochhammer_expand, rr_sum_side, IntegerSeries, PochhammerFactor, Variable};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let order = 15;

    // (q;q)_inf and its inverse, the partition generating function
    let euler = pochhammer_expand(&[PochhammerFactor::new(1, 1, 1)?], order)?;
    println!("(q;q)_inf      = {euler}");
    println!("1/(q;q)_inf    = {}", euler.invert()?);

    let product = pochhammer_expand(
        &[PochhammerFactor::new(1, 5, -1)?, PochhammerFactor::new(4, 5, -1)?],
        order,
    )?;
    let sum = rr_sum_side(1, order)?;
    println!("sum q^(n^2)/(q;q)_n = {sum}");
    println!("agrees with 1/((q;q^5)(q^4;q^5)): {}", sum == product);

    let by_hand = IntegerSeries::from_integers(Variable::Q, &[1, -1], order);
    println!("1/(1-q)        = {}", by_hand.invert()?);
    Ok(())
}
