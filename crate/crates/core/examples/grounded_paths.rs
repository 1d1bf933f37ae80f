//! Grounded partitions, paths deviating from the ground state, and the
//! recursion series: three routes to the same t-series.

use crystal_identities::crystal::builtin_crystal;
use crystal_identities::energy::{path_series, path_weight, solve_energy};
use crystal_identities::partitions::{grounded_series, grounded_witnesses};
use crystal_identities::recursions::total_series;
use crystal_identities::series::{pochhammer_expand_coloured, ColourSet, PochhammerFactor, Variable};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let order = 5;
    let b = builtin_crystal("g2")?;
    let psi = b.vertex("Ψ")?;
    let h = solve_energy(&b, (psi, psi), 0)?;
    let colours = ColourSet::letters(b.len());

    let grounded = grounded_series(&h, psi, &colours, order)?;
    println!("t^2 coefficient: {}", grounded.coefficients()[2]);
    for p in grounded_witnesses(&h, psi, &colours, 2)? {
        println!("  {} 0_h", p.render(&colours));
    }

    let one_bar = b.vertex("1bar")?;
    let w = path_weight(&[(1, one_bar)], &h, &b, psi)?;
    println!("path with p_1 = 1bar: t-degree {}", w.t_degree);

    // paths omit the ground-coloured parts, which contribute 1/(h t; t)_inf at h = 1
    let paths = path_series(&h, &b, psi, &colours, order)?;
    let ground_parts =
        pochhammer_expand_coloured(&[PochhammerFactor::new(1, 1, -1)?], &colours, order)?.with_variable(Variable::T);
    println!(
        "paths × 1/(t;t) = grounded at h = 1: {}",
        paths.multiply(&ground_parts)? == grounded.set_colours_to_one(&[7])
    );

    println!("recursions agree: {}", total_series(order)? == grounded);
    Ok(())
}
