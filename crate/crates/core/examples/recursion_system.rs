//! Stepping the eight-colour P/R recursion by hand, the dilated q-series and
//! the certificate that no pairwise colour refinement exists.

use crystal_identities::recursions::{self, dilated_series, initial_state, refinement_impossible, A, ASCENDING};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let colours = recursions::colours();
    let mut state = initial_state(4);
    for _ in 0..2 {
        state.advance()?;
        println!("k = {}: P_a = {}", state.k(), state.p(A));
    }
    let top = *ASCENDING.last().unwrap();
    println!("R_{} after k = 2: {}", colours.name(top), state.r(top));
    let total = state.run_to_stationary()?;
    println!("t^2: {}", total.coefficients()[2]);

    let q = dilated_series(30)?;
    println!("dilated: {q}");

    print!("{}", refinement_impossible()?.render(&colours));
    Ok(())
}
