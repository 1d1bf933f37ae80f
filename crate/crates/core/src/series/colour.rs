//! Colour monomials and polynomials with integer coefficients.
//!
//! Every polynomial carries the [`ColourSet`] it was built over. Arithmetic
//! between polynomials over different colour sets is rejected at the series
//! level, so exponent vectors can never be silently misaligned.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::SeriesError;

/// An ordered, named set of colours.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ColourSet(Arc<[String]>);

impl ColourSet {
    pub fn new<I, S>(names: I) -> Result<Self, SeriesError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || name.chars().any(|c| c.is_whitespace() || "*^+-()".contains(c)) {
                return Err(SeriesError::InvalidColourName(name.clone()));
            }
            if names[..i].contains(name) {
                return Err(SeriesError::DuplicateColour(name.clone()));
            }
        }
        Ok(ColourSet(names.into()))
    }

    /// Colours named `a`, `b`, `c`, ... in alphabetical order.
    pub fn letters(count: usize) -> Self {
        assert!(count <= 26, "at most 26 letter colours");
        ColourSet(
            (0..count)
                .map(|i| char::from(b'a' + i as u8).to_string())
                .collect::<Vec<_>>()
                .into(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, index: usize) -> &str {
        &self.0[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn unit(&self) -> ColourMonomial {
        ColourMonomial::one(self.len())
    }

    /// The monomial consisting of a single colour.
    pub fn colour(&self, index: usize) -> ColourMonomial {
        let mut exps = vec![0; self.len()];
        exps[index] = 1;
        ColourMonomial { exponents: exps.into() }
    }

    /// Builds a monomial from `(name, exponent)` pairs.
    pub fn monomial(&self, powers: &[(&str, u32)]) -> Result<ColourMonomial, SeriesError> {
        let mut exps = vec![0; self.len()];
        for (name, e) in powers {
            let i = self
                .index_of(name)
                .ok_or_else(|| SeriesError::UnknownColour((*name).to_string()))?;
            exps[i] += e;
        }
        Ok(ColourMonomial { exponents: exps.into() })
    }

    /// Parses `a^2*b`, `1`.
    pub fn parse_monomial(&self, text: &str) -> Result<ColourMonomial, SeriesError> {
        let text = text.trim();
        let mut exps = vec![0; self.len()];
        if text == "1" {
            return Ok(ColourMonomial { exponents: exps.into() });
        }
        for factor in text.split('*') {
            let (name, e) = match factor.split_once('^') {
                Some((n, e)) => (
                    n.trim(),
                    e.trim()
                        .parse::<u32>()
                        .map_err(|_| SeriesError::Parse(format!("bad exponent in `{factor}`")))?,
                ),
                None => (factor.trim(), 1),
            };
            let i = self
                .index_of(name)
                .ok_or_else(|| SeriesError::UnknownColour(name.to_string()))?;
            exps[i] += e;
        }
        Ok(ColourMonomial { exponents: exps.into() })
    }
}

impl fmt::Debug for ColourSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Exponent vector over a colour set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ColourMonomial {
    exponents: Box<[u32]>,
}

impl ColourMonomial {
    pub fn one(len: usize) -> Self {
        ColourMonomial {
            exponents: vec![0; len].into(),
        }
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        ColourMonomial {
            exponents: exponents.into(),
        }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        ColourMonomial {
            exponents: self
                .exponents
                .iter()
                .zip(other.exponents.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn with_colour(&self, index: usize) -> Self {
        let mut exps = self.exponents.to_vec();
        exps[index] += 1;
        ColourMonomial { exponents: exps.into() }
    }

    pub fn render(&self, colours: &ColourSet) -> String {
        let parts: Vec<String> = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    colours.name(i).to_string()
                } else {
                    format!("{}^{}", colours.name(i), e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    // graded, then colour-order lexicographic with higher exponents of earlier colours first
    fn display_key(&self) -> (u32, Vec<std::cmp::Reverse<u32>>) {
        (
            self.degree(),
            self.exponents.iter().map(|&e| std::cmp::Reverse(e)).collect(),
        )
    }
}

/// A polynomial in the colours of a [`ColourSet`] with integer coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct ColourPolynomial {
    colours: ColourSet,
    terms: BTreeMap<ColourMonomial, BigInt>,
}

impl ColourPolynomial {
    pub fn zero(colours: &ColourSet) -> Self {
        ColourPolynomial {
            colours: colours.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(colours: &ColourSet, value: impl Into<BigInt>) -> Self {
        Self::term(colours, colours.unit(), value)
    }

    pub fn term(colours: &ColourSet, monomial: ColourMonomial, coefficient: impl Into<BigInt>) -> Self {
        assert_eq!(monomial.len(), colours.len(), "monomial length must match colour set");
        let mut p = Self::zero(colours);
        let c = coefficient.into();
        if !c.is_zero() {
            p.terms.insert(monomial, c);
        }
        p
    }

    pub fn colour(colours: &ColourSet, index: usize) -> Self {
        Self::term(colours, colours.colour(index), 1)
    }

    pub fn colours(&self) -> &ColourSet {
        &self.colours
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ColourMonomial, &BigInt)> {
        self.terms.iter()
    }

    /// Number of stored monomials.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, monomial: &ColourMonomial) -> BigInt {
        self.terms.get(monomial).cloned().unwrap_or_default()
    }

    pub fn contains(&self, monomial: &ColourMonomial) -> bool {
        self.terms.contains_key(monomial)
    }

    pub fn add_term(&mut self, monomial: ColourMonomial, coefficient: &BigInt) {
        if coefficient.is_zero() {
            return;
        }
        debug_assert_eq!(monomial.len(), self.colours.len());
        let entry = self.terms.entry(monomial).or_default();
        *entry += coefficient;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    /// Sum of all coefficients, i.e. the value with every colour set to 1.
    pub fn evaluate_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Sets the listed colours to 1, keeping the colour set.
    pub fn set_to_one(&self, indices: &[usize]) -> Self {
        let mut out = Self::zero(&self.colours);
        for (m, c) in &self.terms {
            let mut exps = m.exponents.to_vec();
            for &i in indices {
                exps[i] = 0;
            }
            out.add_term(ColourMonomial::from_exponents(exps), c);
        }
        out
    }

    pub fn has_non_negative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

impl super::Ring for ColourPolynomial {
    type Context = ColourSet;

    fn zero(ctx: &ColourSet) -> Self {
        ColourPolynomial::zero(ctx)
    }

    fn one(ctx: &ColourSet) -> Self {
        ColourPolynomial::constant(ctx, 1)
    }

    fn from_integer(ctx: &ColourSet, n: &BigInt) -> Self {
        ColourPolynomial::constant(ctx, n.clone())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_assign_ref(&mut self, other: &Self) {
        debug_assert_eq!(self.colours, other.colours);
        for (m, c) in &other.terms {
            let entry = self.terms.entry(m.clone()).or_default();
            *entry += c;
        }
        self.terms.retain(|_, c| !Zero::is_zero(c));
    }

    fn mul_ref(&self, other: &Self) -> Self {
        debug_assert_eq!(self.colours, other.colours);
        let mut out = ColourPolynomial::zero(&self.colours);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let entry = out.terms.entry(m1.mul(m2)).or_default();
                *entry += c1 * c2;
            }
        }
        out.terms.retain(|_, c| !Zero::is_zero(c));
        out
    }

    fn neg_ref(&self) -> Self {
        ColourPolynomial {
            colours: self.colours.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    fn unit_sign(&self) -> Option<i8> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        if !m.is_one() {
            return None;
        }
        if c.is_one() {
            Some(1)
        } else if (-c).is_one() {
            Some(-1)
        } else {
            None
        }
    }

    fn context(&self) -> ColourSet {
        self.colours.clone()
    }

    fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for ColourPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(m, _)| m.display_key());
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{}", m.render(&self.colours))?;
            } else {
                write!(f, "{}*{}", magnitude, m.render(&self.colours))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ColourPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
