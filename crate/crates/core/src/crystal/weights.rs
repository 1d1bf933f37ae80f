use std::collections::VecDeque;
use std::fmt;

use super::{CrystalError, CrystalGraph};
use crate::cartan::AffineCartanData;

/// Coefficients of the finite simple roots `α_1..α_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootCoordinates(pub Vec<i64>);

impl RootCoordinates {
    /// Pairing `⟨wt, h_i⟩ = Σ_j r_j a_ij` over the finite simple roots.
    pub fn pairing(&self, cartan: &AffineCartanData, i: usize) -> i64 {
        self.0.iter().enumerate().map(|(j, r)| r * cartan.gcm[i][j + 1]).sum()
    }
}

impl fmt::Display for RootCoordinates {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = match (first, c < 0) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let magnitude = if c.abs() == 1 {
                String::new()
            } else {
                c.abs().to_string()
            };
            write!(f, "{sign}{magnitude}α{}", j + 1)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `α_i` in finite coordinates, with `α_0 = -(1/d_0) Σ_{i≥1} δ_i α_i`.
fn simple_root(cartan: &AffineCartanData, i: usize) -> Result<Vec<i64>, CrystalError> {
    let n = cartan.rank();
    if i > 0 {
        let mut v = vec![0; n];
        v[i - 1] = 1;
        return Ok(v);
    }
    let d0 = cartan.d0();
    cartan.labels[1..]
        .iter()
        .map(|&a| {
            if a % d0 == 0 {
                Ok(-a / d0)
            } else {
                Err(CrystalError::Weights(format!(
                    "α_0 is not integral over α_1..α_n (d_0 = {d0})"
                )))
            }
        })
        .collect()
}

/// `g'`-weights in root coordinates, normalised by `wt(anchor) = 0`.
///
/// Every `i`-arrow lowers the weight by `α_i`. The assignment is propagated
/// over the connected crystal and then re-checked on every arrow.
pub fn wt_in_roots(crystal: &CrystalGraph, anchor: usize) -> Result<Vec<RootCoordinates>, CrystalError> {
    let cartan = crystal.cartan();
    let roots: Vec<Vec<i64>> = (0..crystal.labels())
        .map(|i| simple_root(cartan, i))
        .collect::<Result<_, _>>()?;
    let mut coords: Vec<Option<Vec<i64>>> = vec![None; crystal.len()];
    coords[anchor] = Some(vec![0; cartan.rank()]);
    let mut queue = VecDeque::from([anchor]);
    while let Some(v) = queue.pop_front() {
        let here = coords[v].clone().unwrap();
        for (i, root) in roots.iter().enumerate() {
            let down = crystal
                .f(i, v)
                .map(|w| (w, here.iter().zip(root).map(|(a, b)| a - b).collect::<Vec<_>>()));
            let up = crystal
                .e(i, v)
                .map(|w| (w, here.iter().zip(root).map(|(a, b)| a + b).collect::<Vec<_>>()));
            for (w, value) in down.into_iter().chain(up) {
                if coords[w].is_none() {
                    coords[w] = Some(value);
                    queue.push_back(w);
                }
            }
        }
    }
    let coords: Vec<Vec<i64>> = coords
        .into_iter()
        .enumerate()
        .map(|(v, c)| {
            c.ok_or_else(|| CrystalError::Weights(format!("`{}` is not connected to the anchor", crystal.name(v))))
        })
        .collect::<Result<_, _>>()?;
    for (src, i, dst) in crystal.arrows() {
        let expected: Vec<i64> = coords[src].iter().zip(&roots[i]).map(|(a, b)| a - b).collect();
        if coords[dst] != expected {
            return Err(CrystalError::Weights(format!(
                "arrow {} -{i}-> {} is inconsistent with δ = 0",
                crystal.name(src),
                crystal.name(dst)
            )));
        }
    }
    Ok(coords.into_iter().map(RootCoordinates).collect())
}

/// Colour exponents under `e^{-α_i} ↦ q`: `c_b = q^{-Σ r_i}`.
pub fn principal_colour_exponents(coords: &[RootCoordinates]) -> Vec<i64> {
    coords.iter().map(|c| -c.0.iter().sum::<i64>()).collect()
}

/// Exponent of `q` in `t = e^{-δ}` under the principal specialisation.
pub fn principal_t_exponent(cartan: &AffineCartanData) -> u32 {
    u32::try_from(cartan.labels.iter().sum::<i64>()).expect("labels are positive")
}

#[cfg(test)]
mod tests {
    use super::super::builtin_crystal;
    use super::*;

    #[test]
    fn g2_weights() {
        let b = builtin_crystal("g2").unwrap();
        let psi = b.vertex("Ψ").unwrap();
        let wt = wt_in_roots(&b, psi).unwrap();
        let at = |name: &str| wt[b.vertex(name).unwrap()].clone();
        assert_eq!(at("1bar"), RootCoordinates(vec![-2, -1]));
        assert_eq!(at("1"), RootCoordinates(vec![2, 1]));
        assert_eq!(at("3bar").to_string(), "-α1");
        assert_eq!(at("2"), RootCoordinates(vec![1, 1]));
        assert_eq!(at("0"), RootCoordinates(vec![0, 0]));
        assert_eq!(at("Ψ"), RootCoordinates(vec![0, 0]));
        assert_eq!(principal_colour_exponents(&wt), vec![-3, -2, -1, 0, 1, 2, 3, 0]);
        assert_eq!(principal_t_exponent(b.cartan()), 4);
    }

    #[test]
    fn root_pairing_matches_chain_statistics() {
        for (tag, anchor) in [("g2", "Ψ"), ("a1", "a")] {
            let b = builtin_crystal(tag).unwrap();
            let wt = wt_in_roots(&b, b.vertex(anchor).unwrap()).unwrap();
            // the A1 anchor has weight Λ1 - Λ0 = α1 / 2, so compare differences
            let base = b.vertex(anchor).unwrap();
            for (v, w) in wt.iter().enumerate() {
                for i in 0..b.labels() {
                    let lhs = (b.phi_i(i, v) - b.epsilon_i(i, v)) - (b.phi_i(i, base) - b.epsilon_i(i, base));
                    assert_eq!(lhs, w.pairing(b.cartan(), i), "{tag} vertex {} label {i}", b.name(v));
                }
            }
        }
    }
}
