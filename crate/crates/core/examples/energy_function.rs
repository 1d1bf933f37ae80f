//! Solve the energy function on B⊗B and specialise it to a difference profile.

use crystal_identities::crystal::{builtin_crystal, principal_colour_exponents, principal_t_exponent, wt_in_roots};
use crystal_identities::energy::{solve_energy, specialise_energy, TableFormat};
use crystal_identities::series::ColourSet;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let b = builtin_crystal("g2")?;
    let psi = b.vertex("Ψ")?;
    let h = solve_energy(&b, (psi, psi), 0)?;
    h.verify(&b)?;
    print!("{}", h.render(TableFormat::Text));

    let coords = wt_in_roots(&b, psi)?;
    let exponents = principal_colour_exponents(&coords);
    let t = principal_t_exponent(b.cartan()) / b.cartan().d0() as u32;
    println!("t = q^{t}, colour exponents {exponents:?}");

    let profile = specialise_energy(&h, &ColourSet::letters(b.len()), &exponents, t)?;
    print!("{}", profile.render_table(TableFormat::Text));

    let a1 = builtin_crystal("a1")?;
    let a1_energy = solve_energy(&a1, (0, 0), 1)?;
    print!("{}", a1_energy.render(TableFormat::Text));
    Ok(())
}
