//! Exhaustive enumeration of ordinary, congruence-restricted and coloured
//! partitions.
//!
//! A coloured partition is a sequence of parts `k_c` in which each
//! consecutive pair satisfies the profile's difference condition. Counting
//! runs a memoised recursion on (last part, remaining weight): the number of
//! ways to finish a partition depends only on those two. Witness listing walks
//! the same table and only descends into branches with at least one
//! completion.

mod builtin;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::energy::{DifferenceProfile, EnergyError, EnergyTable};
use crate::series::{
    pochhammer_expand_coloured, ColourMonomial, ColourPolynomial, ColourSeries, ColourSet, IntegerSeries,
    PochhammerFactor, Ring, SeriesError, Variable,
};

pub use builtin::{builtin_profile, builtin_profile_source, BUILTIN_PROFILES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("unknown built-in profile `{0}`")]
    UnknownProfile(String),
    #[error("grounded enumeration needs H ≥ 0 and H(g ⊗ b) ≥ 1 for b ≠ g: {0}")]
    Unbounded(String),
    #[error("dilation needs one exponent per colour and positive part weights: {0}")]
    InvalidDilation(String),
    #[error("invalid residue rule {0} mod {1}")]
    InvalidResidue(i64, i64),
    #[error(transparent)]
    Energy(#[from] EnergyError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Parts `(value, colour index)`, largest first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColouredPartition {
    pub parts: Vec<(i64, usize)>,
}

impl ColouredPartition {
    pub fn weight(&self) -> i64 {
        self.parts.iter().map(|p| p.0).sum()
    }

    /// `C(π)`, the product of the part colours.
    pub fn monomial(&self, colours: usize) -> ColourMonomial {
        let mut exps = vec![0; colours];
        for &(_, c) in &self.parts {
            exps[c] += 1;
        }
        ColourMonomial::from_exponents(exps)
    }

    /// Renders as `4_d 1_a`; the empty partition renders as `()`.
    pub fn render(&self, colours: &ColourSet) -> String {
        if self.parts.is_empty() {
            return "()".to_string();
        }
        let parts: Vec<String> = self
            .parts
            .iter()
            .map(|(v, c)| format!("{v}_{}", colours.name(*c)))
            .collect();
        parts.join(" ")
    }

    /// Checks part rules and every consecutive difference condition.
    pub fn satisfies(&self, profile: &DifferenceProfile) -> bool {
        self.parts
            .iter()
            .all(|&(v, c)| c < profile.len() && profile.allows_part(v, c))
            && self.parts.windows(2).all(|w| profile.allows_follow(w[0], w[1]))
    }
}

/// The memoised completion table for one profile up to a weight bound.
struct Enumerator<'a> {
    /// Minimum value of the final part, per colour.
    terminal: Option<&'a [i64]>,
    /// Allowed parts of value at most the bound, in descending value order.
    parts: Vec<(i64, usize)>,
    /// Weight each part contributes; its value unless dilated.
    sizes: Vec<usize>,
    /// `successors[p]`: parts that may follow `parts[p]`.
    successors: Vec<Vec<usize>>,
}

impl<'a> Enumerator<'a> {
    fn new(profile: &'a DifferenceProfile, terminal: Option<&'a [i64]>, bound: usize) -> Self {
        Self::sized(profile, terminal, bound as i64, |(v, _)| v as usize)
    }

    /// Parts of value at most `max_value`, weighted by `size`; parts whose size
    /// is zero are dropped.
    fn sized(
        profile: &DifferenceProfile,
        terminal: Option<&'a [i64]>,
        max_value: i64,
        size: impl Fn((i64, usize)) -> usize,
    ) -> Self {
        let mut parts = Vec::new();
        for v in (1..=max_value).rev() {
            for c in 0..profile.len() {
                if profile.allows_part(v, c) && size((v, c)) > 0 {
                    parts.push((v, c));
                }
            }
        }
        let sizes = parts.iter().map(|&p| size(p)).collect();
        let successors = parts
            .iter()
            .map(|&p| {
                (0..parts.len())
                    .filter(|&q| profile.allows_follow(p, parts[q]))
                    .collect()
            })
            .collect();
        Enumerator {
            terminal,
            parts,
            sizes,
            successors,
        }
    }

    fn can_end(&self, p: usize) -> bool {
        let (v, c) = self.parts[p];
        self.terminal.is_none_or(|t| v >= t[c])
    }

    fn value(&self, p: usize) -> usize {
        self.sizes[p]
    }

    /// `(completions, totals)`: `completions[rem][p]` sums the weights of all
    /// continuations of weight `rem` after part `p`; `totals[n]` sums all
    /// partitions of `n`.
    fn table<R: Ring>(
        &self,
        ctx: &R::Context,
        bound: usize,
        weight: impl Fn((i64, usize)) -> R,
    ) -> (Vec<Vec<R>>, Vec<R>) {
        let weights: Vec<R> = self.parts.iter().map(|&p| weight(p)).collect();
        let mut completions: Vec<Vec<R>> = Vec::with_capacity(bound + 1);
        for rem in 0..=bound {
            let row = (0..self.parts.len())
                .map(|p| {
                    let mut acc = if rem == 0 && self.can_end(p) {
                        R::one(ctx)
                    } else {
                        R::zero(ctx)
                    };
                    for &q in &self.successors[p] {
                        let v = self.value(q);
                        if v <= rem && !completions[rem - v][q].is_zero() {
                            acc.add_assign_ref(&weights[q].mul_ref(&completions[rem - v][q]));
                        }
                    }
                    acc
                })
                .collect();
            completions.push(row);
        }
        let totals = (0..=bound)
            .map(|n| {
                let mut acc = if n == 0 { R::one(ctx) } else { R::zero(ctx) };
                for (p, w) in weights.iter().enumerate() {
                    let v = self.value(p);
                    if v <= n && !completions[n - v][p].is_zero() {
                        acc.add_assign_ref(&w.mul_ref(&completions[n - v][p]));
                    }
                }
                acc
            })
            .collect();
        (completions, totals)
    }

    fn witnesses(&self, n: usize) -> Vec<ColouredPartition> {
        let (completions, _) = self.table::<BigInt>(&(), n, |_| BigInt::from(1));
        let mut out = Vec::new();
        if n == 0 {
            out.push(ColouredPartition { parts: Vec::new() });
            return out;
        }
        let mut stack = Vec::new();
        for p in 0..self.parts.len() {
            let v = self.value(p);
            if v <= n && !completions[n - v][p].is_zero() {
                stack.push(p);
                self.walk(&completions, n - v, &mut stack, &mut out);
                stack.pop();
            }
        }
        out
    }

    fn walk(&self, completions: &[Vec<BigInt>], rem: usize, stack: &mut Vec<usize>, out: &mut Vec<ColouredPartition>) {
        let last = *stack.last().unwrap();
        if rem == 0 && self.can_end(last) {
            out.push(ColouredPartition {
                parts: stack.iter().map(|&p| self.parts[p]).collect(),
            });
        }
        for &q in &self.successors[last] {
            let v = self.value(q);
            if v <= rem && !completions[rem - v][q].is_zero() {
                stack.push(q);
                self.walk(completions, rem - v, stack, out);
                stack.pop();
            }
        }
    }
}

/// `d(0), ..., d(order)` as a q-series.
pub fn coloured_count_series(profile: &DifferenceProfile, order: usize) -> IntegerSeries {
    let (_, totals) = Enumerator::new(profile, None, order).table::<BigInt>(&(), order, |_| BigInt::from(1));
    IntegerSeries::from_coefficients(Variable::Q, &(), totals, order)
}

/// `Σ_π C(π) q^{|π|}` truncated at `q^order`.
pub fn coloured_colour_series(profile: &DifferenceProfile, order: usize) -> ColourSeries {
    let colours = profile.colours().clone();
    let (_, totals) =
        Enumerator::new(profile, None, order).table(&colours, order, |(_, c)| ColourPolynomial::colour(&colours, c));
    ColourSeries::from_coefficients(Variable::Q, &colours, totals, order)
}

/// Number of coloured partitions of `n`.
pub fn enumerate_coloured(profile: &DifferenceProfile, n: usize) -> BigInt {
    coloured_count_series(profile, n).coefficients()[n].clone()
}

/// Colour polynomial `Σ_{|π| = n} C(π)`.
pub fn enumerate_coloured_tracked(profile: &DifferenceProfile, n: usize) -> ColourPolynomial {
    coloured_colour_series(profile, n).coefficients()[n].clone()
}

/// Every coloured partition of `n`, largest part first, in descending
/// lexicographic order of (value, colour index reversed).
pub fn coloured_witnesses(profile: &DifferenceProfile, n: usize) -> Vec<ColouredPartition> {
    Enumerator::new(profile, None, n).witnesses(n)
}

fn admitted(residues: &[(i64, i64)], value: i64) -> Result<bool, PartitionError> {
    let mut hit = false;
    for &(r, m) in residues {
        if m < 1 {
            return Err(PartitionError::InvalidResidue(r, m));
        }
        hit |= value.rem_euclid(m) == r.rem_euclid(m);
    }
    Ok(hit)
}

/// Partitions into parts lying in at least one listed residue class, as a series.
pub fn congruence_series(residues: &[(i64, i64)], order: usize) -> Result<IntegerSeries, PartitionError> {
    let mut c = vec![BigInt::from(0); order + 1];
    c[0] = BigInt::from(1);
    for v in 1..=order {
        if admitted(residues, v as i64)? {
            for i in v..=order {
                let t = c[i - v].clone();
                c[i] += t;
            }
        }
    }
    Ok(IntegerSeries::from_coefficients(Variable::Q, &(), c, order))
}

/// Number of partitions of `n` into parts `≡ r (mod m)` for some listed `(r, m)`.
pub fn enumerate_congruence(residues: &[(i64, i64)], n: usize) -> Result<BigInt, PartitionError> {
    Ok(congruence_series(residues, n)?.coefficients()[n].clone())
}

/// The difference profile of `≫` on vertex colours: `M[i][j] = H(b_i ⊗ b_j)`,
/// and the minimum final part `H(g ⊗ b)` per colour.
pub fn grounded_profile(
    energy: &EnergyTable,
    ground: usize,
    colours: &ColourSet,
) -> Result<(DifferenceProfile, Vec<i64>), PartitionError> {
    let n = energy.len();
    if let Some(&v) = energy.values().iter().flatten().find(|&&v| v < 0) {
        return Err(PartitionError::Unbounded(format!("negative entry {v}")));
    }
    if let Some(b) = (0..n).find(|&b| b != ground && energy.get(ground, b) < 1) {
        return Err(PartitionError::Unbounded(format!(
            "H(g ⊗ {}) = {}",
            energy.names()[b],
            energy.get(ground, b)
        )));
    }
    let profile = DifferenceProfile::from_matrix(colours.clone(), energy.values().to_vec())?;
    let terminal = (0..n).map(|b| energy.get(ground, b).max(1)).collect();
    Ok((profile, terminal))
}

/// `Σ C(π) t^{|π|}` over grounded partitions with ground `g`, truncated at `t^order`.
///
/// The trailing `0_g` is implicit: it adds no weight and no colour.
pub fn grounded_series(
    energy: &EnergyTable,
    ground: usize,
    colours: &ColourSet,
    order: usize,
) -> Result<ColourSeries, PartitionError> {
    let (profile, terminal) = grounded_profile(energy, ground, colours)?;
    let (_, totals) = Enumerator::new(&profile, Some(&terminal), order)
        .table(colours, order, |(_, c)| ColourPolynomial::colour(colours, c));
    Ok(ColourSeries::from_coefficients(Variable::T, colours, totals, order))
}

/// Grounded partitions counted by `q^{Σ (t k + e_c)}` over their parts `k_c`,
/// truncated at `q^order`.
pub fn grounded_dilated_series(
    energy: &EnergyTable,
    ground: usize,
    exponents: &[i64],
    t_exponent: u32,
    order: usize,
) -> Result<IntegerSeries, PartitionError> {
    let colours = ColourSet::letters(energy.len());
    let (profile, terminal) = grounded_profile(energy, ground, &colours)?;
    if exponents.len() != energy.len() {
        return Err(PartitionError::InvalidDilation(format!(
            "{} exponents for {} colours",
            exponents.len(),
            energy.len()
        )));
    }
    let t = i64::from(t_exponent);
    if let Some(c) = (0..energy.len()).find(|&c| t + exponents[c] < 1) {
        return Err(PartitionError::InvalidDilation(format!(
            "part 1_{} has weight {}",
            colours.name(c),
            t + exponents[c]
        )));
    }
    let max_value = (order as i64 + exponents.iter().map(|e| -e).max().unwrap_or(0)) / t.max(1);
    let weight = |(k, c): (i64, usize)| {
        let w = t * k + exponents[c];
        if w <= order as i64 {
            w as usize
        } else {
            0
        }
    };
    let (_, totals) =
        Enumerator::sized(&profile, Some(&terminal), max_value, weight)
            .table::<BigInt>(&(), order, |_| BigInt::from(1));
    Ok(IntegerSeries::from_coefficients(Variable::Q, &(), totals, order))
}

/// Grounded partitions of `n` (without the trailing ground part).
pub fn grounded_witnesses(
    energy: &EnergyTable,
    ground: usize,
    colours: &ColourSet,
    n: usize,
) -> Result<Vec<ColouredPartition>, PartitionError> {
    let (profile, terminal) = grounded_profile(energy, ground, colours)?;
    Ok(Enumerator::new(&profile, Some(&terminal), n).witnesses(n))
}

/// `A(n; k, ℓ, m)`: partitions of `n` with `k` parts coloured `a`, `ℓ`
/// coloured `c` and `m` coloured `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefinedCounts {
    pub order: usize,
    pub counts: BTreeMap<(usize, u32, u32, u32), BigInt>,
}

impl RefinedCounts {
    pub fn get(&self, n: usize, k: u32, l: u32, m: u32) -> BigInt {
        self.counts.get(&(n, k, l, m)).cloned().unwrap_or_default()
    }

    /// The same data as a q-series over colours `a, b, c, d` with `b = 1`.
    pub fn to_series(&self) -> ColourSeries {
        let colours = ColourSet::letters(4);
        let mut coefficients = vec![ColourPolynomial::zero(&colours); self.order + 1];
        for (&(n, k, l, m), count) in &self.counts {
            coefficients[n].add_term(ColourMonomial::from_exponents(vec![k, 0, l, m]), count);
        }
        ColourSeries::from_coefficients(Variable::Q, &colours, coefficients, self.order)
    }

    /// Rows `n k l m count`, sorted.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (&(n, k, l, m), count) in &self.counts {
            out.push_str(&format!("{n}\t{k}\t{l}\t{m}\t{count}\n"));
        }
        out
    }
}

/// Exhaustive `A(n; k, ℓ, m)` for `n ≤ order` under the undilated four-colour profile.
pub fn refined_count_dl(order: usize) -> RefinedCounts {
    let profile = builtin_profile("dousse-lovejoy").expect("built-in profile");
    let series = coloured_colour_series(&profile, order);
    let mut counts = BTreeMap::new();
    for (n, coefficient) in series.coefficients().iter().enumerate() {
        for (monomial, count) in coefficient.set_to_one(&[1]).terms() {
            let e = monomial.exponents();
            counts.insert((n, e[0], e[2], e[3]), count.clone());
        }
    }
    RefinedCounts { order, counts }
}

/// `(-aq;q²)_∞ (-dq;q²)_∞ / ((q;q)_∞ (cq;q²)_∞)` over colours `a, b, c, d`.
pub fn dousse_lovejoy_product(order: usize) -> Result<ColourSeries, PartitionError> {
    let colours = ColourSet::letters(4);
    let factors = [
        PochhammerFactor::new(1, 2, 1)?.negated().with_colour(colours.colour(0)),
        PochhammerFactor::new(1, 2, 1)?.negated().with_colour(colours.colour(3)),
        PochhammerFactor::new(1, 1, -1)?,
        PochhammerFactor::new(1, 2, -1)?.with_colour(colours.colour(2)),
    ];
    Ok(pochhammer_expand_coloured(&factors, &colours, order)?)
}

/// Number of partitions of `n`, for reference.
pub fn partition_numbers(order: usize) -> IntegerSeries {
    congruence_series(&[(0, 1)], order).expect("modulus 1 is valid")
}

/// Distinct `(value, colour)` pairs used by a list of partitions.
pub fn parts_used(witnesses: &[ColouredPartition]) -> BTreeSet<(i64, usize)> {
    witnesses.iter().flat_map(|w| w.parts.iter().copied()).collect()
}

/// A `<n>\t<count>` table.
pub fn render_counts(series: &IntegerSeries) -> String {
    series.render_lines()
}

impl fmt::Display for RefinedCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Coefficients as `i64`, panicking on overflow; convenient in tests and examples.
pub fn small_counts(series: &IntegerSeries) -> Vec<i64> {
    series
        .coefficients()
        .iter()
        .map(|c| c.to_i64().expect("count fits in i64"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::builtin_crystal;
    use crate::energy::solve_energy;

    fn g2_energy() -> (EnergyTable, usize) {
        let b = builtin_crystal("g2").unwrap();
        let psi = b.vertex("Ψ").unwrap();
        (solve_energy(&b, (psi, psi), 0).unwrap(), psi)
    }

    #[test]
    fn main_profile_small_cases() {
        let p = builtin_profile("g2").unwrap();
        assert_eq!(enumerate_coloured(&p, 0), BigInt::from(1));
        let w = coloured_witnesses(&p, 5);
        let rendered: Vec<String> = w.iter().map(|w| w.render(p.colours())).collect();
        assert_eq!(rendered, vec!["5_a", "5_e", "4_d 1_a"]);
        assert!(w.iter().all(|w| w.satisfies(&p)));
    }

    #[test]
    fn primc_small_cases() {
        let p = builtin_profile("primc").unwrap();
        assert_eq!(enumerate_coloured(&p, 4), BigInt::from(5));
    }

    #[test]
    fn congruence_examples() {
        let main = [(1, 6), (5, 6), (0, 4)];
        assert_eq!(enumerate_congruence(&main, 4).unwrap(), BigInt::from(2));
        assert_eq!(enumerate_congruence(&main, 0).unwrap(), BigInt::from(1));
        assert_eq!(enumerate_congruence(&[(1, 5), (4, 5)], 7).unwrap(), BigInt::from(3));
        assert!(enumerate_congruence(&[(0, 0)], 3).is_err());
        assert_eq!(small_counts(&partition_numbers(6)), vec![1, 1, 2, 3, 5, 7, 11]);
    }

    #[test]
    fn dilated_grounded_matches_congruence() {
        let (energy, psi) = g2_energy();
        let exps = [-3, -2, -1, 0, 1, 2, 3, 0];
        let grounded = grounded_dilated_series(&energy, psi, &exps, 4, 30).unwrap();
        assert_eq!(grounded, congruence_series(&[(1, 6), (5, 6), (0, 4)], 30).unwrap());
        assert!(grounded_dilated_series(&energy, psi, &exps[..7], 4, 5).is_err());
        assert!(grounded_dilated_series(&energy, psi, &exps, 3, 5).is_err());
    }

    #[test]
    fn grounded_low_degrees() {
        let (h, psi) = g2_energy();
        let colours = ColourSet::letters(8);
        let s = grounded_series(&h, psi, &colours, 2).unwrap();
        assert_eq!(s.coefficients()[0], ColourPolynomial::constant(&colours, 1));
        let linear: ColourPolynomial = (0..8).fold(ColourPolynomial::zero(&colours), |mut acc, c| {
            acc.add_assign_ref(&ColourPolynomial::colour(&colours, c));
            acc
        });
        assert_eq!(s.coefficients()[1], linear);
        assert_eq!(s.coefficients()[2].len(), 17);
        assert_eq!(grounded_series(&h, psi, &colours, 0).unwrap().order(), 0);
        let two = grounded_witnesses(&h, psi, &colours, 2).unwrap();
        assert_eq!(two.len(), 17);
    }

    #[test]
    fn refined_counts_small() {
        let r = refined_count_dl(3);
        assert_eq!(r.get(0, 0, 0, 0), BigInt::from(1));
        assert_eq!(r.get(1, 1, 0, 0), BigInt::from(1));
        assert_eq!(r.to_series(), dousse_lovejoy_product(3).unwrap());
    }
}
