//! Loading a difference profile from text and checking it against residue
//! classes, the same check `verify --profile` performs.

use crystal_identities::cli::profile_legs;
use crystal_identities::energy::DifferenceProfile;

const GAP_TWO: &str = "\
# one colour, consecutive parts differ by at least 2
colours a
a 2
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let profile = DifferenceProfile::parse(GAP_TWO)?;
    let legs = profile_legs(&profile, &[(1, 5), (4, 5)], 25)?;
    for leg in &legs {
        println!("{:>12}: {}", leg.name, leg.series.forget_colours());
    }
    println!("agree: {}", legs[0].series == legs[1].series);
    Ok(())
}
