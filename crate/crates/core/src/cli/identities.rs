//! Built-in identities, each a set of independently computed series that
//! must agree coefficient by coefficient.

use crate::cartan::{lepowsky_product, AffineType};
use crate::crystal::{builtin_crystal, principal_colour_exponents, principal_t_exponent, wt_in_roots};
use crate::energy::{solve_energy, specialise_energy, DifferenceProfile};
use crate::partitions::{
    builtin_profile, coloured_colour_series, coloured_count_series, congruence_series, dousse_lovejoy_product,
    grounded_dilated_series, refined_count_dl,
};
use crate::recursions::dilated_series;
use crate::series::{pochhammer_expand, rr_sum_side, ColourSeries, ColourSet, IntegerSeries, PochhammerFactor};

use super::CliError;

/// Tags accepted by `verify --identity`.
pub const IDENTITIES: [&str; 5] = ["g2", "primc", "dousse-lovejoy", "rr1", "rr2"];

/// One independently computed side of an identity.
#[derive(Debug, Clone)]
pub struct Leg {
    pub name: &'static str,
    pub series: ColourSeries,
}

impl Leg {
    fn integer(name: &'static str, series: IntegerSeries) -> Self {
        Leg {
            name,
            series: series.embed(&ColourSet::letters(0)),
        }
    }
}

fn product(factors: &[(u32, u32)], order: usize) -> Result<IntegerSeries, CliError> {
    let factors: Vec<PochhammerFactor> = factors
        .iter()
        .map(|&(a, n)| PochhammerFactor::new(a, n, -1))
        .collect::<Result<_, _>>()?;
    Ok(pochhammer_expand(&factors, order)?)
}

fn times(a: &IntegerSeries, b: &IntegerSeries) -> Result<IntegerSeries, CliError> {
    Ok(a.multiply(b)?)
}

/// Residue classes of the G2^(2) product side.
pub const G2_RESIDUES: [(i64, i64); 3] = [(1, 6), (5, 6), (0, 4)];

/// The profile obtained from the built-in G2^(2) crystal by solving and
/// specialising its energy function.
pub fn g2_crystal_profile() -> Result<DifferenceProfile, CliError> {
    let crystal = builtin_crystal("g2")?;
    let psi = crystal.vertex("Ψ")?;
    let energy = solve_energy(&crystal, (psi, psi), 0)?;
    let exponents = principal_colour_exponents(&wt_in_roots(&crystal, psi)?);
    let t = principal_t_exponent(crystal.cartan()) / crystal.cartan().d0() as u32;
    Ok(specialise_energy(
        &energy,
        &ColourSet::letters(crystal.len()),
        &exponents,
        t,
    )?)
}

/// Grounded partitions of the built-in G2^(2) crystal, dilated to a q-series.
pub fn g2_grounded(order: usize) -> Result<IntegerSeries, CliError> {
    let crystal = builtin_crystal("g2")?;
    let psi = crystal.vertex("Ψ")?;
    let energy = solve_energy(&crystal, (psi, psi), 0)?;
    let exponents = principal_colour_exponents(&wt_in_roots(&crystal, psi)?);
    let t = principal_t_exponent(crystal.cartan()) / crystal.cartan().d0() as u32;
    Ok(grounded_dilated_series(&energy, psi, &exponents, t, order)?)
}

/// All legs of a built-in identity through `q^order`.
pub fn identity_legs(tag: &str, order: usize, progress: &mut dyn FnMut(&str)) -> Result<Vec<Leg>, CliError> {
    let mut legs = Vec::new();
    match tag {
        "g2" => {
            progress("product side");
            let lepowsky = lepowsky_product(AffineType::G2_2, &[1, 0, 0], order)?;
            legs.push(Leg::integer("product", times(&lepowsky, &product(&[(4, 4)], order)?)?));
            legs.push(Leg::integer("congruence", congruence_series(&G2_RESIDUES, order)?));
            progress("tabulated difference profile");
            legs.push(Leg::integer(
                "enumeration",
                coloured_count_series(&builtin_profile("g2")?, order),
            ));
            progress("recursions");
            legs.push(Leg::integer("recursion", dilated_series(order)?));
            progress("grounded partitions");
            legs.push(Leg::integer("grounded", g2_grounded(order)?));
            progress("crystal energy profile");
            legs.push(Leg::integer(
                "crystal",
                coloured_count_series(&g2_crystal_profile()?, order),
            ));
        }
        "primc" => {
            legs.push(Leg::integer("product", product(&[(1, 1)], order)?));
            progress("tabulated difference profile");
            legs.push(Leg::integer(
                "enumeration",
                coloured_count_series(&builtin_profile("primc")?, order),
            ));
        }
        "dousse-lovejoy" => {
            legs.push(Leg {
                name: "product",
                series: dousse_lovejoy_product(order)?,
            });
            progress("refined enumeration");
            legs.push(Leg {
                name: "enumeration",
                series: refined_count_dl(order).to_series(),
            });
            // the same data without the b = 1 projection must agree too
            let full = coloured_colour_series(&builtin_profile("dousse-lovejoy")?, order).set_colours_to_one(&[1]);
            legs.push(Leg {
                name: "coloured",
                series: full,
            });
        }
        "rr1" | "rr2" => {
            let variant = if tag == "rr1" { 1 } else { 2 };
            let (classes, weight) = if variant == 1 {
                ([(1, 5), (4, 5)], [2, 1])
            } else {
                ([(2, 5), (3, 5)], [3, 0])
            };
            legs.push(Leg::integer("product", product(&classes, order)?));
            legs.push(Leg::integer("sum", rr_sum_side(variant, order)?));
            legs.push(Leg::integer(
                "enumeration",
                coloured_count_series(&builtin_profile(tag)?, order),
            ));
            // the A1^(1) character carries an extra factor (q;q^2)^{-1}
            let odd = pochhammer_expand(&[PochhammerFactor::new(1, 2, 1)?], order)?;
            let lepowsky = lepowsky_product(AffineType::A1_1, &weight, order)?;
            legs.push(Leg::integer("lepowsky", times(&lepowsky, &odd)?));
        }
        _ => {
            return Err(CliError::Usage(format!(
                "unknown identity `{tag}` (expected one of {})",
                IDENTITIES.join(", ")
            )))
        }
    }
    Ok(legs)
}

/// Legs for a user profile checked against partitions in residue classes.
pub fn profile_legs(profile: &DifferenceProfile, residues: &[(i64, i64)], order: usize) -> Result<Vec<Leg>, CliError> {
    Ok(vec![
        Leg::integer("congruence", congruence_series(residues, order)?),
        Leg::integer("enumeration", coloured_count_series(profile, order)),
    ])
}
