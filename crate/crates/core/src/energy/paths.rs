use super::{EnergyError, EnergyTable};
use crate::crystal::CrystalGraph;
use crate::series::{ColourMonomial, ColourPolynomial, ColourSeries, ColourSet, Variable};

/// Weight of a path relative to a constant ground state `g`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathWeight {
    /// Coefficient of `-δ/d_0`.
    pub t_degree: i64,
    /// Occurrences of each vertex among the entries different from `g`.
    pub vertex_counts: Vec<u32>,
}

impl PathWeight {
    pub fn monomial(&self) -> ColourMonomial {
        ColourMonomial::from_exponents(self.vertex_counts.clone())
    }
}

fn check_ground(crystal: &CrystalGraph, energy: &EnergyTable, ground: usize) -> Result<(), EnergyError> {
    if crystal.phi(ground) != crystal.epsilon(ground) {
        return Err(EnergyError::NonConstantGround(crystal.name(ground).to_string()));
    }
    match energy.get(ground, ground) {
        0 => Ok(()),
        h => Err(EnergyError::GroundNotNormalised(h)),
    }
}

/// `Σ_k Σ_{j≥k} H(p_{j+1} ⊗ p_j)` and the colours of the deviating entries.
///
/// `deviation` lists `(k, p_k)`; unlisted positions hold `ground`.
pub fn path_weight(
    deviation: &[(usize, usize)],
    energy: &EnergyTable,
    crystal: &CrystalGraph,
    ground: usize,
) -> Result<PathWeight, EnergyError> {
    check_ground(crystal, energy, ground)?;
    let length = deviation.iter().map(|&(k, _)| k + 1).max().unwrap_or(0);
    let mut path = vec![ground; length + 1];
    let mut seen = vec![false; length];
    for &(k, v) in deviation {
        if v >= crystal.len() {
            return Err(EnergyError::InvalidDeviation(format!("vertex index {v} out of range")));
        }
        if std::mem::replace(&mut seen[k], true) {
            return Err(EnergyError::InvalidDeviation(format!("position {k} given twice")));
        }
        path[k] = v;
    }
    let mut vertex_counts = vec![0; crystal.len()];
    let mut t_degree = 0;
    for j in 0..length {
        t_degree += (j as i64 + 1) * energy.get(path[j + 1], path[j]);
        if path[j] != ground {
            vertex_counts[path[j]] += 1;
        }
    }
    Ok(PathWeight {
        t_degree,
        vertex_counts,
    })
}

/// Every path prefix `p_0..p_{L-1}` (with `p_{L-1} ≠ g`) of t-degree at most
/// `max_degree`, paired with its weight. The empty path comes first.
pub fn enumerate_paths(
    energy: &EnergyTable,
    crystal: &CrystalGraph,
    ground: usize,
    max_degree: usize,
) -> Result<Vec<(Vec<usize>, PathWeight)>, EnergyError> {
    check_ground(crystal, energy, ground)?;
    let n = energy.len();
    if let Some(&v) = energy.values().iter().flatten().find(|&&v| v < 0) {
        return Err(EnergyError::UnboundedPaths(format!("negative entry {v}")));
    }
    if let Some(b) = (0..n).find(|&b| b != ground && energy.get(ground, b) < 1) {
        return Err(EnergyError::UnboundedPaths(format!("H(g ⊗ {}) = 0", crystal.name(b))));
    }
    let max = max_degree as i64;
    let mut out = vec![(
        Vec::new(),
        PathWeight {
            t_degree: 0,
            vertex_counts: vec![0; n],
        },
    )];
    // the term L·H(g ⊗ p_{L-1}) ≥ L bounds the length
    for length in 1..=max_degree {
        let mut path = vec![ground; length];
        for last in (0..n).filter(|&b| b != ground) {
            let cost = length as i64 * energy.get(ground, last);
            if cost > max {
                continue;
            }
            path[length - 1] = last;
            extend(energy, ground, max, length - 1, cost, &mut path, &mut out);
        }
    }
    Ok(out)
}

// fills positions below `j` given `p_j`
fn extend(
    energy: &EnergyTable,
    ground: usize,
    max: i64,
    j: usize,
    cost: i64,
    path: &mut Vec<usize>,
    out: &mut Vec<(Vec<usize>, PathWeight)>,
) {
    if j == 0 {
        let mut vertex_counts = vec![0; energy.len()];
        for &v in path.iter().filter(|&&v| v != ground) {
            vertex_counts[v] += 1;
        }
        out.push((
            path.clone(),
            PathWeight {
                t_degree: cost,
                vertex_counts,
            },
        ));
        return;
    }
    for b in 0..energy.len() {
        let next = cost + j as i64 * energy.get(path[j], b);
        if next <= max {
            path[j - 1] = b;
            extend(energy, ground, max, j - 1, next, path, out);
        }
    }
}

/// `Σ_p C(p) t^{deg p}` over paths, truncated at `t^order`.
pub fn path_series(
    energy: &EnergyTable,
    crystal: &CrystalGraph,
    ground: usize,
    colours: &ColourSet,
    order: usize,
) -> Result<ColourSeries, EnergyError> {
    let mut coefficients = vec![ColourPolynomial::zero(colours); order + 1];
    for (_, w) in enumerate_paths(energy, crystal, ground, order)? {
        coefficients[w.t_degree as usize].add_term(w.monomial(), &1.into());
    }
    Ok(ColourSeries::from_coefficients(
        Variable::T,
        colours,
        coefficients,
        order,
    ))
}
