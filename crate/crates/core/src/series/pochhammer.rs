use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use super::{ColourMonomial, ColourPolynomial, ColourSeries, ColourSet, IntegerSeries, Ring, SeriesError, Variable};

/// `(±X q^a; q^n)_∞^p` with `a, n ≥ 1` and `p ≠ 0`.
///
/// `negated` selects `(-X q^a; q^n)`; `colour` is the optional monomial `X`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PochhammerFactor {
    shift: u32,
    modulus: u32,
    power: i32,
    negated: bool,
    colour: Option<ColourMonomial>,
}

impl PochhammerFactor {
    pub fn new(shift: u32, modulus: u32, power: i32) -> Result<Self, SeriesError> {
        if shift == 0 || modulus == 0 || power == 0 {
            return Err(SeriesError::InvalidFactor(format!(
                "shift {shift}, modulus {modulus}, power {power}"
            )));
        }
        Ok(PochhammerFactor {
            shift,
            modulus,
            power,
            negated: false,
            colour: None,
        })
    }

    pub fn negated(mut self) -> Self {
        self.negated = !self.negated;
        self
    }

    pub fn with_colour(mut self, colour: ColourMonomial) -> Self {
        self.colour = if colour.is_one() { None } else { Some(colour) };
        self
    }

    pub fn shift(&self) -> u32 {
        self.shift
    }
    pub fn modulus(&self) -> u32 {
        self.modulus
    }
    pub fn power(&self) -> i32 {
        self.power
    }
    pub fn is_negated(&self) -> bool {
        self.negated
    }
    pub fn colour(&self) -> Option<&ColourMonomial> {
        self.colour.as_ref()
    }

    fn render(&self, colours: Option<&ColourSet>) -> String {
        let sign = if self.negated { "-" } else { "" };
        let colour = match (&self.colour, colours) {
            (Some(m), Some(cs)) => format!("{}*", m.render(cs)),
            (Some(m), None) => format!("{:?}*", m.exponents()),
            (None, _) => String::new(),
        };
        let q_power = |e: u32| if e == 1 { "q".to_string() } else { format!("q^{e}") };
        let power = if self.power == 1 {
            String::new()
        } else {
            format!("^{}", self.power)
        };
        format!(
            "({sign}{colour}{};{})_inf{power}",
            q_power(self.shift),
            q_power(self.modulus)
        )
    }

    /// Exponents `a + kn ≤ order`, in increasing order.
    fn exponents(&self, order: usize) -> impl Iterator<Item = usize> {
        let (a, n) = (self.shift as usize, self.modulus as usize);
        (0..).map(move |k| a + k * n).take_while(move |&e| e <= order)
    }
}

impl fmt::Display for PochhammerFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(None))
    }
}

/// Expands a product of uncoloured factors to order `order` in `q`.
///
/// Each linear factor `(1 ∓ q^e)` is applied in place, so the cost is
/// `O(order)` per factor occurrence.
pub fn pochhammer_expand(factors: &[PochhammerFactor], order: usize) -> Result<IntegerSeries, SeriesError> {
    let mut c = vec![BigInt::from(0); order + 1];
    c[0] = BigInt::from(1);
    for factor in factors {
        if factor.colour.is_some() {
            return Err(SeriesError::ColouredFactor(factor.to_string()));
        }
        for e in factor.exponents(order) {
            for _ in 0..factor.power.unsigned_abs() {
                // multiply by (1 - s q^e), or divide by it, where s = ±1
                match (factor.power > 0, factor.negated) {
                    (true, false) => (e..=order).rev().for_each(|i| {
                        let t = c[i - e].clone();
                        c[i] -= t
                    }),
                    (true, true) => (e..=order).rev().for_each(|i| {
                        let t = c[i - e].clone();
                        c[i] += t
                    }),
                    (false, false) => (e..=order).for_each(|i| {
                        let t = c[i - e].clone();
                        c[i] += t
                    }),
                    (false, true) => (e..=order).for_each(|i| {
                        let t = c[i - e].clone();
                        c[i] -= t
                    }),
                }
            }
        }
    }
    Ok(IntegerSeries::from_coefficients(Variable::Q, &(), c, order))
}

/// Expands a product whose factors may carry colour monomials.
pub fn pochhammer_expand_coloured(
    factors: &[PochhammerFactor],
    colours: &ColourSet,
    order: usize,
) -> Result<ColourSeries, SeriesError> {
    let mut c = vec![ColourPolynomial::zero(colours); order + 1];
    c[0] = ColourPolynomial::constant(colours, 1);
    for factor in factors {
        let monomial = match &factor.colour {
            Some(m) if m.len() != colours.len() => {
                return Err(SeriesError::ContextMismatch(
                    format!("{} colours", m.len()),
                    format!("{colours:?}"),
                ))
            }
            Some(m) => m.clone(),
            None => colours.unit(),
        };
        // x = -s X, so the linear factor is (1 + x q^e)
        let sign = if factor.negated { 1 } else { -1 };
        let x = ColourPolynomial::term(colours, monomial, sign);
        let minus_x = x.neg_ref();
        for e in factor.exponents(order) {
            for _ in 0..factor.power.unsigned_abs() {
                if factor.power > 0 {
                    for i in (e..=order).rev() {
                        let t = c[i - e].mul_ref(&x);
                        c[i].add_assign_ref(&t);
                    }
                } else {
                    for i in e..=order {
                        let t = c[i - e].mul_ref(&minus_x);
                        c[i].add_assign_ref(&t);
                    }
                }
            }
        }
    }
    Ok(ColourSeries::from_coefficients(Variable::Q, colours, c, order))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Key {
    negated: bool,
    colour: Option<ColourMonomial>,
    modulus: u32,
    shift: u32,
}

/// A product of Pochhammer factors kept in collected form: one power per
/// distinct `(sign, colour, shift, modulus)`, zero powers removed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PochhammerProduct {
    powers: BTreeMap<Key, i64>,
}

impl PochhammerProduct {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_factors<'a>(factors: impl IntoIterator<Item = &'a PochhammerFactor>) -> Self {
        let mut product = Self::new();
        for f in factors {
            product.push(f);
        }
        product
    }

    pub fn push(&mut self, factor: &PochhammerFactor) {
        let key = Key {
            negated: factor.negated,
            colour: factor.colour.clone(),
            modulus: factor.modulus,
            shift: factor.shift,
        };
        self.add_power(key, i64::from(factor.power));
    }

    fn add_power(&mut self, key: Key, power: i64) {
        let entry = self.powers.entry(key.clone()).or_insert(0);
        *entry += power;
        if *entry == 0 {
            self.powers.remove(&key);
        }
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, &p) in &other.powers {
            out.add_power(k.clone(), p);
        }
        out
    }

    pub fn inverse(&self) -> Self {
        PochhammerProduct {
            powers: self.powers.iter().map(|(k, &p)| (k.clone(), -p)).collect(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn factors(&self) -> Vec<PochhammerFactor> {
        self.powers
            .iter()
            .map(|(k, &p)| PochhammerFactor {
                shift: k.shift,
                modulus: k.modulus,
                power: i32::try_from(p).expect("Pochhammer power fits in i32"),
                negated: k.negated,
                colour: k.colour.clone(),
            })
            .collect()
    }

    /// Canonical collected form.
    ///
    /// Every factor is refined to the lcm of all moduli in its (sign, colour)
    /// class, opposite powers cancel, and the survivors are regrouped greedily
    /// into the coarsest moduli first. Two products that agree as formal
    /// infinite products of the same shape collect to the same value.
    pub fn collect(&self) -> Self {
        type Class = (bool, Option<ColourMonomial>);
        let mut classes: BTreeMap<Class, Vec<(u32, u32, i64)>> = BTreeMap::new();
        for (k, &p) in &self.powers {
            classes
                .entry((k.negated, k.colour.clone()))
                .or_default()
                .push((k.shift, k.modulus, p));
        }
        let mut out = PochhammerProduct::new();
        for ((negated, colour), members) in classes {
            let lcm = members.iter().fold(1u32, |acc, &(_, n, _)| acc.lcm(&n));
            // shift -> power at modulus lcm
            let mut fine: BTreeMap<u32, i64> = BTreeMap::new();
            for (a, n, p) in members {
                for j in 0..lcm / n {
                    *fine.entry(a + j * n).or_insert(0) += p;
                }
            }
            fine.retain(|_, p| *p != 0);
            let mut divisors: Vec<u32> = (1..=lcm).filter(|d| lcm % d == 0).collect();
            divisors.sort_unstable();
            for n in divisors {
                for a in 1..=n {
                    let members: Vec<u32> = (0..lcm / n).map(|j| a + j * n).collect();
                    let powers: Vec<i64> = members.iter().map(|s| fine.get(s).copied().unwrap_or(0)).collect();
                    let common = if powers.iter().all(|&p| p > 0) {
                        *powers.iter().min().unwrap()
                    } else if powers.iter().all(|&p| p < 0) {
                        *powers.iter().max().unwrap()
                    } else {
                        0
                    };
                    if common == 0 {
                        continue;
                    }
                    for s in &members {
                        let p = fine.get_mut(s).unwrap();
                        *p -= common;
                        if *p == 0 {
                            fine.remove(s);
                        }
                    }
                    out.add_power(
                        Key {
                            negated,
                            colour: colour.clone(),
                            modulus: n,
                            shift: a,
                        },
                        common,
                    );
                }
            }
            for (a, p) in fine {
                out.add_power(
                    Key {
                        negated,
                        colour: colour.clone(),
                        modulus: lcm,
                        shift: a,
                    },
                    p,
                );
            }
        }
        out
    }

    pub fn expand(&self, order: usize) -> Result<IntegerSeries, SeriesError> {
        pochhammer_expand(&self.factors(), order)
    }

    pub fn render(&self, colours: Option<&ColourSet>) -> String {
        if self.powers.is_empty() {
            return "1".to_string();
        }
        self.factors()
            .iter()
            .map(|f| f.render(colours))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for PochhammerProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(None))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factor(a: u32, n: u32, p: i32) -> PochhammerFactor {
        PochhammerFactor::new(a, n, p).unwrap()
    }

    #[test]
    fn odd_parts() {
        let s = pochhammer_expand(&[factor(1, 2, -1)], 6).unwrap();
        assert_eq!(s.to_i64_vec().unwrap(), vec![1, 1, 1, 2, 2, 3, 4]);
    }

    #[test]
    fn parts_one_or_five_mod_six() {
        let s = pochhammer_expand(&[factor(5, 6, -1), factor(1, 6, -1)], 5).unwrap();
        assert_eq!(s.to_i64_vec().unwrap(), vec![1, 1, 1, 1, 1, 2]);
    }

    #[test]
    fn empty_product_is_one() {
        assert_eq!(
            pochhammer_expand(&[], 4).unwrap().to_i64_vec().unwrap(),
            vec![1, 0, 0, 0, 0]
        );
    }

    #[test]
    fn euler_pentagonal() {
        let s = pochhammer_expand(&[factor(1, 1, 1)], 12).unwrap();
        assert_eq!(s.to_i64_vec().unwrap(), vec![1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]);
    }

    #[test]
    fn distinct_parts_equal_odd_parts() {
        let distinct = pochhammer_expand(&[factor(1, 1, 1).negated()], 30).unwrap();
        let odd = pochhammer_expand(&[factor(1, 2, -1)], 30).unwrap();
        assert_eq!(distinct, odd);
    }

    #[test]
    fn invalid_factors_rejected() {
        assert!(PochhammerFactor::new(0, 1, 1).is_err());
        assert!(PochhammerFactor::new(1, 0, 1).is_err());
        assert!(PochhammerFactor::new(1, 1, 0).is_err());
    }

    #[test]
    fn coloured_factor_needs_coloured_expansion() {
        let colours = ColourSet::letters(1);
        let f = factor(1, 2, 1).with_colour(colours.colour(0));
        assert!(matches!(
            pochhammer_expand(std::slice::from_ref(&f), 3),
            Err(SeriesError::ColouredFactor(_))
        ));
        let s = pochhammer_expand_coloured(&[f.negated()], &colours, 3).unwrap();
        // (1 + a q)(1 + a q^3)
        assert_eq!(s.coefficients()[1].to_string(), "a");
        assert_eq!(s.coefficients()[3].to_string(), "a");
        assert!(s.coefficients()[2].is_empty());
    }

    #[test]
    fn collect_coarsens_and_cancels() {
        // (q;q^2)(q^2;q^2) = (q;q)
        let p = PochhammerProduct::from_factors(&[factor(1, 2, 1), factor(2, 2, 1)]).collect();
        assert_eq!(p, PochhammerProduct::from_factors(&[factor(1, 1, 1)]));
        // (q;q) / (q^2;q^2) = (q;q^2)
        let p = PochhammerProduct::from_factors(&[factor(1, 1, 1), factor(2, 2, -1)]).collect();
        assert_eq!(p, PochhammerProduct::from_factors(&[factor(1, 2, 1)]));
        assert_eq!(p.to_string(), "(q;q^2)_inf");
        assert!(p.multiply(&p.inverse()).collect().is_one());
    }

    #[test]
    fn collected_product_expands_identically() {
        let raw =
            PochhammerProduct::from_factors(&[factor(1, 3, 2), factor(2, 6, -1), factor(1, 1, -1), factor(4, 5, 1)]);
        assert_eq!(raw.expand(60).unwrap(), raw.collect().expand(60).unwrap());
    }
}
