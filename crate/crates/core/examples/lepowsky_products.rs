//! Positive-root families, principal specialisation and Lepowsky's product
//! for the principally specialised characters.

use crystal_identities::cartan::{
    builtin_cartan, lepowsky_factors, positive_root_families, specialise_families, AffineType, SpecialisationVector,
};
use crystal_identities::series::PochhammerProduct;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g2 = builtin_cartan(AffineType::G2_1);
    println!("{}: labels {:?}, colabels {:?}", g2.affine_type, g2.labels, g2.colabels);

    let families = positive_root_families(AffineType::G2_1)?;
    for family in families.iter().take(3) {
        println!("  {family}");
    }
    println!("  ... {} families", families.len());

    for s in [vec![1, 1, 1], vec![2, 1, 1]] {
        let spec = SpecialisationVector::new(s.clone())?;
        let collected: PochhammerProduct =
            PochhammerProduct::from_factors(&specialise_families(&families, &spec)?).collect();
        println!("F_{s:?} D = {collected}");
    }

    for (t, weight) in [
        (AffineType::A1_1, vec![1, 0]),
        (AffineType::A1_1, vec![3, 0]),
        (AffineType::G2_2, vec![1, 0, 0]),
    ] {
        let product = lepowsky_factors(t, &weight)?;
        println!("{t} {weight:?}: {product}");
        println!("    {}", product.expand(12)?);
    }
    Ok(())
}
