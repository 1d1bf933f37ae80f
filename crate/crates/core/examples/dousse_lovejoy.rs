//! Four-colour refinement: counts by number of parts of each colour against
//! the product (-aq;q^2)(-dq;q^2)/((q;q)(cq;q^2)).

use crystal_identities::partitions::{dousse_lovejoy_product, refined_count_dl};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let order = 10;
    let refined = refined_count_dl(order);
    println!("A(8; k, l, m) for k, l, m ≤ 2:");
    for k in 0..=2 {
        for l in 0..=2 {
            let row: Vec<String> = (0..=2).map(|m| refined.get(8, k, l, m).to_string()).collect();
            println!("  k={k} l={l}: {}", row.join(" "));
        }
    }
    let product = dousse_lovejoy_product(order)?;
    println!(
        "agrees with the product through q^{order}: {}",
        refined.to_series() == product
    );
    println!("q^3 coefficient: {}", product.coefficients()[3]);
    Ok(())
}
