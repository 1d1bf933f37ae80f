//! Exact truncated power series in one formal variable.
//!
//! Coefficients live in a [`Ring`]: arbitrary-precision integers, or
//! [`ColourPolynomial`]s over a declared [`ColourSet`]. Every series carries an
//! explicit truncation order `N` and stores exactly the coefficients of
//! degrees `0..=N`.

mod colour;
mod pochhammer;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

pub use colour::{ColourMonomial, ColourPolynomial, ColourSet};
pub use pochhammer::{pochhammer_expand, pochhammer_expand_coloured, PochhammerFactor, PochhammerProduct};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("variable mismatch: {0} vs {1}")]
    VariableMismatch(Variable, Variable),
    #[error("coefficient rings differ (colour sets {0} vs {1})")]
    ContextMismatch(String, String),
    #[error("constant term {0} is not a unit")]
    NonUnitConstant(String),
    #[error("specialisation sends a term to negative exponent {exponent}")]
    NegativeExponent { exponent: i64 },
    #[error("colour exponent table has {found} entries, colour set has {expected}")]
    ExponentCount { expected: usize, found: usize },
    #[error("invalid Pochhammer factor: {0}")]
    InvalidFactor(String),
    #[error("factor {0} carries a colour; use a coloured expansion")]
    ColouredFactor(String),
    #[error("invalid colour name `{0}`")]
    InvalidColourName(String),
    #[error("duplicate colour `{0}`")]
    DuplicateColour(String),
    #[error("unknown colour `{0}`")]
    UnknownColour(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Coefficient ring of a [`TruncatedSeries`].
///
/// `Context` is whatever a ring needs to build its own constants: nothing for
/// integers, the colour set for colour polynomials. Binary operations assume
/// both operands share a context; [`TruncatedSeries`] checks that once per
/// operation.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    type Context: Clone + PartialEq + fmt::Debug;

    fn zero(ctx: &Self::Context) -> Self;
    fn one(ctx: &Self::Context) -> Self;
    fn from_integer(ctx: &Self::Context, n: &BigInt) -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// `Some(±1)` when the element is the unit `±1`.
    fn unit_sign(&self) -> Option<i8>;
    fn context(&self) -> Self::Context;
    fn render(&self) -> String;

    fn sub_assign_ref(&mut self, other: &Self) {
        self.add_assign_ref(&other.neg_ref());
    }
}

impl Ring for BigInt {
    type Context = ();

    fn zero(_: &()) -> Self {
        BigInt::from(0)
    }
    fn one(_: &()) -> Self {
        BigInt::from(1)
    }
    fn from_integer(_: &(), n: &BigInt) -> Self {
        n.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_assign_ref(&mut self, other: &Self) {
        *self -= other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn unit_sign(&self) -> Option<i8> {
        if self.is_one() {
            Some(1)
        } else if (-self).is_one() {
            Some(-1)
        } else {
            None
        }
    }
    fn context(&self) {}
    fn render(&self) -> String {
        self.to_string()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variable {
    Q,
    T,
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variable::Q => "q",
            Variable::T => "t",
        })
    }
}

/// `c_0 + c_1 x + ... + c_N x^N + O(x^{N+1})`.
#[derive(Clone)]
pub struct TruncatedSeries<R: Ring> {
    variable: Variable,
    context: R::Context,
    coefficients: Vec<R>,
}

pub type IntegerSeries = TruncatedSeries<BigInt>;
pub type ColourSeries = TruncatedSeries<ColourPolynomial>;

impl<R: Ring> TruncatedSeries<R> {
    /// Builds a series of the given order, padding with zeros or dropping
    /// coefficients beyond the order.
    pub fn from_coefficients(variable: Variable, context: &R::Context, mut coefficients: Vec<R>, order: usize) -> Self {
        coefficients.truncate(order + 1);
        coefficients.resize(order + 1, R::zero(context));
        TruncatedSeries {
            variable,
            context: context.clone(),
            coefficients,
        }
    }

    pub fn zero(variable: Variable, context: &R::Context, order: usize) -> Self {
        Self::from_coefficients(variable, context, Vec::new(), order)
    }

    pub fn one(variable: Variable, context: &R::Context, order: usize) -> Self {
        Self::from_coefficients(variable, context, vec![R::one(context)], order)
    }

    /// `coefficient * x^degree`, or zero when the degree exceeds the order.
    pub fn monomial(variable: Variable, coefficient: R, degree: usize, order: usize) -> Self {
        let context = coefficient.context();
        let mut s = Self::zero(variable, &context, order);
        if degree <= order {
            s.coefficients[degree] = coefficient;
        }
        s
    }

    pub fn variable(&self) -> Variable {
        self.variable
    }

    pub fn context(&self) -> &R::Context {
        &self.context
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[R] {
        &self.coefficients
    }

    pub fn coefficient(&self, degree: usize) -> Option<&R> {
        self.coefficients.get(degree)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(R::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Self::from_coefficients(self.variable, &self.context, self.coefficients.clone(), order)
    }

    fn check_compatible(&self, other: &Self) -> Result<(), SeriesError> {
        if self.variable != other.variable {
            return Err(SeriesError::VariableMismatch(self.variable, other.variable));
        }
        if self.context != other.context {
            return Err(SeriesError::ContextMismatch(
                format!("{:?}", self.context),
                format!("{:?}", other.context),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_compatible(other)?;
        let order = self.order().min(other.order());
        let coefficients = (0..=order)
            .map(|i| {
                let mut c = self.coefficients[i].clone();
                c.add_assign_ref(&other.coefficients[i]);
                c
            })
            .collect();
        Ok(Self::from_coefficients(
            self.variable,
            &self.context,
            coefficients,
            order,
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            variable: self.variable,
            context: self.context.clone(),
            coefficients: self.coefficients.iter().map(R::neg_ref).collect(),
        }
    }

    pub fn scale(&self, factor: &R) -> Self {
        TruncatedSeries {
            variable: self.variable,
            context: self.context.clone(),
            coefficients: self.coefficients.iter().map(|c| c.mul_ref(factor)).collect(),
        }
    }

    /// Cauchy product truncated at the smaller order.
    pub fn multiply(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_compatible(other)?;
        let order = self.order().min(other.order());
        let mut out = vec![R::zero(&self.context); order + 1];
        for (i, a) in self.coefficients.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                out[i + j].add_assign_ref(&a.mul_ref(b));
            }
        }
        Ok(Self::from_coefficients(self.variable, &self.context, out, order))
    }

    /// Adds `coefficient * x^shift * other` into `self`, in place.
    pub fn add_shifted(&mut self, other: &Self, shift: usize, coefficient: &R) -> Result<(), SeriesError> {
        self.check_compatible(other)?;
        let order = self.order().min(other.order());
        self.coefficients.truncate(order + 1);
        for d in shift..=order {
            let c = &other.coefficients[d - shift];
            if !c.is_zero() {
                self.coefficients[d].add_assign_ref(&c.mul_ref(coefficient));
            }
        }
        Ok(())
    }

    /// Multiplicative inverse; the constant term must be `1` or `-1`.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let sign = self.coefficients[0]
            .unit_sign()
            .ok_or_else(|| SeriesError::NonUnitConstant(self.coefficients[0].render()))?;
        let n = self.order();
        let inverse_constant = self.coefficients[0].clone();
        let mut out: Vec<R> = Vec::with_capacity(n + 1);
        out.push(inverse_constant);
        for k in 1..=n {
            let mut acc = R::zero(&self.context);
            for j in 1..=k {
                let a = &self.coefficients[j];
                if !a.is_zero() && !out[k - j].is_zero() {
                    acc.add_assign_ref(&a.mul_ref(&out[k - j]));
                }
            }
            // b_k = -a_0^{-1} * sum, and a_0^{-1} = a_0 = sign
            out.push(if sign == 1 { acc.neg_ref() } else { acc });
        }
        Ok(Self::from_coefficients(self.variable, &self.context, out, n))
    }

    /// First degree (within the shared prefix) where the two series differ.
    pub fn first_mismatch(&self, other: &Self) -> Option<usize> {
        let order = self.order().min(other.order());
        (0..=order).find(|&i| self.coefficients[i] != other.coefficients[i])
    }

    pub fn map_coefficients<S: Ring>(&self, context: &S::Context, f: impl Fn(&R) -> S) -> TruncatedSeries<S> {
        TruncatedSeries {
            variable: self.variable,
            context: context.clone(),
            coefficients: self.coefficients.iter().map(f).collect(),
        }
    }

    pub fn with_variable(mut self, variable: Variable) -> Self {
        self.variable = variable;
        self
    }

    /// One line per degree: `<degree>\t<coefficient>`.
    pub fn render_lines(&self) -> String {
        let mut out = String::new();
        for (i, c) in self.coefficients.iter().enumerate() {
            out.push_str(&format!("{i}\t{}\n", c.render()));
        }
        out
    }
}

/// Exact equality over the shared truncation prefix.
impl<R: Ring> PartialEq for TruncatedSeries<R> {
    fn eq(&self, other: &Self) -> bool {
        self.variable == other.variable && self.context == other.context && self.first_mismatch(other).is_none()
    }
}

impl<R: Ring> fmt::Debug for TruncatedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<R: Ring> fmt::Display for TruncatedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x = self.variable;
        let mut first = true;
        for (i, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let text = c.render();
            let compound = text.contains(' ') || (text.starts_with('-') && i > 0 && text[1..].contains(' '));
            let (negative, body) = match text.strip_prefix('-') {
                Some(rest) if !compound => (true, rest.to_string()),
                _ => (false, text.clone()),
            };
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let power = match i {
                0 => String::new(),
                1 => x.to_string(),
                _ => format!("{x}^{i}"),
            };
            match (i, body.as_str()) {
                (0, _) => write!(f, "{body}")?,
                (_, "1") => write!(f, "{power}")?,
                _ if compound => write!(f, "({body})*{power}")?,
                _ => write!(f, "{body}*{power}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O({x}^{})", self.order() + 1)
    }
}

impl TruncatedSeries<BigInt> {
    pub fn from_integers(variable: Variable, values: &[i64], order: usize) -> Self {
        Self::from_coefficients(variable, &(), values.iter().map(|&v| BigInt::from(v)).collect(), order)
    }

    /// Embeds an integer series into the colour-polynomial ring.
    pub fn embed(&self, colours: &ColourSet) -> ColourSeries {
        self.map_coefficients(colours, |c| ColourPolynomial::constant(colours, c.clone()))
    }

    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.coefficients.iter().map(|c| c.to_i64()).collect()
    }
}

impl TruncatedSeries<ColourPolynomial> {
    pub fn colours(&self) -> &ColourSet {
        &self.context
    }

    /// Sets the listed colours to 1 in every coefficient.
    pub fn set_colours_to_one(&self, indices: &[usize]) -> Self {
        self.map_coefficients(&self.context, |c| c.set_to_one(indices))
    }

    /// Every coefficient with all colours set to 1.
    pub fn forget_colours(&self) -> IntegerSeries {
        self.map_coefficients(&(), |c| c.evaluate_at_one())
    }
}

/// Substitutes `t -> q^{t_exponent}` and each colour `c -> q^{colour_exponents[c]}`.
///
/// Negative exponents may appear on individual colours but every resulting
/// term must land at a non-negative power of `q`. The result has order `order`;
/// it is exact provided no term of t-degree above the input order could land
/// at or below `order`.
pub fn specialise(
    series: &ColourSeries,
    colour_exponents: &[i64],
    t_exponent: u32,
    order: usize,
) -> Result<IntegerSeries, SeriesError> {
    if series.variable() != Variable::T {
        return Err(SeriesError::VariableMismatch(series.variable(), Variable::T));
    }
    let colours = series.colours();
    if colour_exponents.len() != colours.len() {
        return Err(SeriesError::ExponentCount {
            expected: colours.len(),
            found: colour_exponents.len(),
        });
    }
    let mut out = vec![BigInt::from(0); order + 1];
    for (t_degree, coefficient) in series.coefficients().iter().enumerate() {
        for (monomial, c) in coefficient.terms() {
            let exponent = i64::from(t_exponent) * t_degree as i64
                + monomial
                    .exponents()
                    .iter()
                    .zip(colour_exponents)
                    .map(|(&e, &x)| i64::from(e) * x)
                    .sum::<i64>();
            if exponent < 0 {
                return Err(SeriesError::NegativeExponent { exponent });
            }
            if let Some(slot) = out.get_mut(exponent as usize) {
                *slot += c;
            }
        }
    }
    Ok(IntegerSeries::from_coefficients(Variable::Q, &(), out, order))
}

/// Sum side of the Rogers-Ramanujan identities:
/// `sum q^{n^2}/(q;q)_n` (variant 1) or `sum q^{n(n+1)}/(q;q)_n` (variant 2).
pub fn rr_sum_side(variant: u8, order: usize) -> Result<IntegerSeries, SeriesError> {
    if variant != 1 && variant != 2 {
        return Err(SeriesError::Parse(format!(
            "Rogers-Ramanujan variant must be 1 or 2, got {variant}"
        )));
    }
    let mut total = vec![BigInt::from(0); order + 1];
    // 1/(q;q)_n built incrementally by dividing by (1 - q^n)
    let mut denominator_inverse = vec![BigInt::from(0); order + 1];
    denominator_inverse[0] = BigInt::from(1);
    for n in 0usize.. {
        let shift = if variant == 1 { n * n } else { n * (n + 1) };
        if shift > order {
            break;
        }
        if n > 0 {
            for i in n..=order {
                let prev = denominator_inverse[i - n].clone();
                denominator_inverse[i] += prev;
            }
        }
        for i in shift..=order {
            total[i] += &denominator_inverse[i - shift];
        }
    }
    Ok(IntegerSeries::from_coefficients(Variable::Q, &(), total, order))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(values: &[i64], order: usize) -> IntegerSeries {
        IntegerSeries::from_integers(Variable::Q, values, order)
    }

    #[test]
    fn difference_of_squares() {
        let p = q(&[1, 1], 5).multiply(&q(&[1, -1], 5)).unwrap();
        assert_eq!(p.to_i64_vec().unwrap(), vec![1, 0, -1, 0, 0, 0]);
    }

    #[test]
    fn multiply_by_one_is_identity() {
        let s = q(&[3, -1, 4, 1, -5], 4);
        assert_eq!(s.multiply(&IntegerSeries::one(Variable::Q, &(), 4)).unwrap(), s);
    }

    #[test]
    fn geometric_square_convolution() {
        let n = 12;
        let geometric = q(&vec![1; n + 1], n);
        let sq = geometric.multiply(&geometric).unwrap();
        // direct convolution: number of (i, j) with i + j = m
        for m in 0..=n {
            let direct = (0..=m).filter(|i| m - i <= n).count() as i64;
            assert_eq!(sq.coefficients()[m], BigInt::from(direct));
        }
    }

    #[test]
    fn invert_one_minus_q() {
        let inv = q(&[1, -1], 7).invert().unwrap();
        assert_eq!(inv.to_i64_vec().unwrap(), vec![1; 8]);
    }

    #[test]
    fn invert_rejects_non_unit() {
        assert!(matches!(q(&[2, 1], 3).invert(), Err(SeriesError::NonUnitConstant(_))));
        assert!(q(&[0, 1], 3).invert().is_err());
    }

    #[test]
    fn invert_handles_minus_one() {
        let s = q(&[-1, 2, 0, 3], 6);
        let product = s.multiply(&s.invert().unwrap()).unwrap();
        assert_eq!(product, IntegerSeries::one(Variable::Q, &(), 6));
    }

    #[test]
    fn variable_mismatch_is_an_error() {
        let a = q(&[1, 1], 3);
        let b = IntegerSeries::from_integers(Variable::T, &[1, 1], 3);
        assert!(matches!(a.multiply(&b), Err(SeriesError::VariableMismatch(..))));
    }

    #[test]
    fn colour_set_mismatch_is_an_error() {
        let a = IntegerSeries::one(Variable::T, &(), 3).embed(&ColourSet::letters(2));
        let b = IntegerSeries::one(Variable::T, &(), 3).embed(&ColourSet::letters(3));
        assert!(matches!(a.multiply(&b), Err(SeriesError::ContextMismatch(..))));
    }

    #[test]
    fn result_order_is_minimum() {
        let a = q(&[1, 1], 3);
        let b = q(&[1, 2, 3], 7);
        assert_eq!(a.multiply(&b).unwrap().order(), 3);
        assert_eq!(a.add(&b).unwrap().order(), 3);
    }

    #[test]
    fn rr_sum_side_small_cases() {
        assert_eq!(
            rr_sum_side(1, 6).unwrap().to_i64_vec().unwrap(),
            vec![1, 1, 1, 1, 2, 2, 3]
        );
        assert_eq!(rr_sum_side(2, 2).unwrap().to_i64_vec().unwrap(), vec![1, 0, 1]);
        assert_eq!(rr_sum_side(1, 0).unwrap().to_i64_vec().unwrap(), vec![1]);
        assert!(rr_sum_side(3, 4).is_err());
    }

    #[test]
    fn specialise_single_term() {
        let colours = ColourSet::letters(8);
        let a_t = ColourSeries::monomial(Variable::T, ColourPolynomial::colour(&colours, 0), 1, 3);
        let exps = [-3, -2, -1, 0, 1, 2, 3, 0];
        let s = specialise(&a_t, &exps, 4, 5).unwrap();
        assert_eq!(s.to_i64_vec().unwrap(), vec![0, 1, 0, 0, 0, 0]);
        let one = ColourSeries::one(Variable::T, &colours, 3);
        assert_eq!(
            specialise(&one, &exps, 4, 3).unwrap().to_i64_vec().unwrap(),
            vec![1, 0, 0, 0]
        );
    }

    #[test]
    fn specialise_rejects_negative_exponent() {
        let colours = ColourSet::letters(1);
        let a = ColourSeries::monomial(Variable::T, ColourPolynomial::colour(&colours, 0), 0, 2);
        assert!(matches!(
            specialise(&a, &[-1], 4, 4),
            Err(SeriesError::NegativeExponent { exponent: -1 })
        ));
    }

    #[test]
    fn display_forms() {
        assert_eq!(q(&[1, -1, 2], 2).to_string(), "1 - q + 2*q^2 + O(q^3)");
        let colours = ColourSet::letters(2);
        let mut c = ColourPolynomial::colour(&colours, 0);
        c.add_assign_ref(&ColourPolynomial::colour(&colours, 1));
        let s = ColourSeries::monomial(Variable::T, c, 1, 1)
            .add(&ColourSeries::one(Variable::T, &colours, 1))
            .unwrap();
        assert_eq!(s.to_string(), "1 + (a + b)*t + O(t^2)");
        assert_eq!(q(&[1, 0, 3], 2).render_lines(), "0\t1\n1\t0\n2\t3\n");
    }
}
