//! The level-1 perfect crystal of G2^(2): vertex data, tensor square,
//! perfectness and the ground-state path.

use crystal_identities::crystal::{builtin_crystal, check_perfect, ground_state_path, tensor, WeightVector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let b = builtin_crystal("g2")?;
    for v in 0..b.len() {
        println!(
            "{:>5}  level {}  phi {}  eps {}",
            b.name(v),
            b.level(v),
            b.phi(v),
            b.epsilon(v)
        );
    }

    let square = tensor(&b, &b)?;
    let finite: Vec<usize> = (1..b.labels()).collect();
    let mut sizes: Vec<usize> = square.components(&finite).iter().map(Vec::len).collect();
    sizes.sort_unstable();
    println!(
        "B⊗B: {} vertices, connected {}, components without 0-arrows {sizes:?}",
        square.len(),
        square.is_connected()
    );

    print!("{}", check_perfect(&b, 1)?.render(&b));

    let lambda0 = WeightVector::fundamental(b.labels(), 0);
    let path = ground_state_path(&b, &lambda0, 4)?;
    println!(
        "ground-state path for Λ0: {:?} (period {})",
        path.names(&b),
        path.period
    );
    Ok(())
}
