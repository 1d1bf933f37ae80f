//! Counting and listing coloured partitions under a difference profile, and
//! comparing with partitions into residue classes.

use crystal_identities::partitions::{
    builtin_profile, coloured_count_series, coloured_witnesses, congruence_series, partition_numbers,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let order = 40;
    let g2 = builtin_profile("g2")?;
    let counted = coloured_count_series(&g2, order);
    let congruence = congruence_series(&[(1, 6), (5, 6), (0, 4)], order)?;
    println!("main identity through q^{order}: {}", counted == congruence);
    println!("d(40) = {}", counted.coefficients()[40]);

    for partition in coloured_witnesses(&g2, 9) {
        println!("  {}", partition.render(g2.colours()));
    }

    let primc = builtin_profile("primc")?;
    println!(
        "primc counts equal p(n) to n = 30: {}",
        coloured_count_series(&primc, 30) == partition_numbers(30)
    );
    Ok(())
}
