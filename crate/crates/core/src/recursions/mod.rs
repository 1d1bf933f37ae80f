//! The P/R recursion system for the eight-colour G2^(2) identity.
//!
//! `P_{k_c}` sums over coloured partitions whose largest part is `k_c` and
//! `R_{k_c}` over those whose largest part is at most `k_c`, in the order
//! `g > f > e > h > d > c > b > a` on equal values. Each step computes the
//! eight `P`'s at the next `k` from the previous level and then rebuilds the
//! `R` chain by telescoping.
//!
//! The same system runs over two coefficient rings: colour polynomials in
//! `t` (every part `k_c` contributes `c·t^k`), or integers in `q` after the
//! principal dilation (`k_c` contributes `q^{4k + e_c}`).

use std::sync::Arc;

use num_bigint::BigInt;
use thiserror::Error;

use crate::series::{
    ColourMonomial, ColourPolynomial, ColourSeries, ColourSet, IntegerSeries, Ring, SeriesError, TruncatedSeries,
    Variable,
};

/// Colour indices in alphabetical order.
pub const A: usize = 0;
pub const B: usize = 1;
pub const C: usize = 2;
pub const D: usize = 3;
pub const E: usize = 4;
pub const F: usize = 5;
pub const G: usize = 6;
pub const H: usize = 7;

/// Colours in ascending total order on equal part values.
pub const ASCENDING: [usize; 8] = [A, B, C, D, H, E, F, G];

/// `q`-exponents of the colours under the principal specialisation.
pub const PRINCIPAL_EXPONENTS: [i64; 8] = [-3, -2, -1, 0, 1, 2, 3, 0];

/// `t = q^4`.
pub const PRINCIPAL_T_EXPONENT: u32 = 4;

/// `(colour, colours whose P at the same k it reads)`, in evaluation order.
pub const SAME_LEVEL_DEPENDENCIES: [(usize, &[usize]); 8] = [
    (A, &[]),
    (B, &[]),
    (C, &[]),
    (D, &[A]),
    (E, &[A]),
    (F, &[A, B]),
    (G, &[A, B, C, D]),
    (H, &[]),
];

const fn dependencies_are_topological() -> bool {
    let mut i = 0;
    while i < SAME_LEVEL_DEPENDENCIES.len() {
        let deps = SAME_LEVEL_DEPENDENCIES[i].1;
        let mut j = 0;
        while j < deps.len() {
            // each dependency must be evaluated strictly earlier
            let mut found = false;
            let mut m = 0;
            while m < i {
                if SAME_LEVEL_DEPENDENCIES[m].0 == deps[j] {
                    found = true;
                }
                m += 1;
            }
            if !found {
                return false;
            }
            j += 1;
        }
        i += 1;
    }
    true
}

const _: () = assert!(dependencies_are_topological());

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RecursionError {
    #[error("telescoping identity fails at k = {k}")]
    Telescoping { k: i64 },
    #[error("part {k}_{colour} would have non-positive size {exponent}")]
    NonPositivePart { colour: char, k: i64, exponent: i64 },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Coefficient and degree contributed by one part `k_c`.
type PartWeight<R> = Arc<dyn Fn(usize, i64) -> Result<(R, usize), RecursionError> + Send + Sync>;

/// All `P_{k_c}`, `R_{k_c}` at one value of `k`, plus what the next step reads.
#[derive(Clone)]
pub struct RecursionState<R: Ring> {
    k: i64,
    order: usize,
    variable: Variable,
    context: R::Context,
    p: Vec<TruncatedSeries<R>>,
    r: Vec<TruncatedSeries<R>>,
    /// `R_{(k-1)_g}`
    r_g_previous: TruncatedSeries<R>,
    part_weight: PartWeight<R>,
}

impl<R: Ring> std::fmt::Debug for RecursionState<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RecursionState")
            .field("k", &self.k)
            .field("order", &self.order)
            .field("p", &self.p)
            .field("r", &self.r)
            .finish()
    }
}

impl<R: Ring> RecursionState<R> {
    fn base(variable: Variable, context: R::Context, order: usize, part_weight: PartWeight<R>) -> Self {
        let zero = TruncatedSeries::zero(variable, &context, order);
        let one = TruncatedSeries::one(variable, &context, order);
        RecursionState {
            k: 0,
            order,
            variable,
            p: vec![zero; 8],
            r: vec![one.clone(); 8],
            r_g_previous: one,
            context,
            part_weight,
        }
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `P_{k_c}` at the current `k`.
    pub fn p(&self, colour: usize) -> &TruncatedSeries<R> {
        &self.p[colour]
    }

    /// `R_{k_c}` at the current `k`.
    pub fn r(&self, colour: usize) -> &TruncatedSeries<R> {
        &self.r[colour]
    }

    /// Whether every part at the next `k` already lies beyond the truncation.
    pub fn is_stationary(&self) -> Result<bool, RecursionError> {
        for c in 0..8 {
            if (self.part_weight)(c, self.k + 1)?.1 <= self.order {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `x·(sum of the listed series)` where `x` is the weight of `k_c`.
    fn part_times(
        &self,
        colour: usize,
        k: i64,
        terms: &[&TruncatedSeries<R>],
    ) -> Result<TruncatedSeries<R>, RecursionError> {
        let (coefficient, degree) = (self.part_weight)(colour, k)?;
        let mut out = TruncatedSeries::zero(self.variable, &self.context, self.order);
        for t in terms {
            out.add_shifted(t, degree, &coefficient)?;
        }
        Ok(out)
    }

    /// Moves from `k` to `k + 1`.
    pub fn advance(&mut self) -> Result<(), RecursionError> {
        let k = self.k + 1;
        let (p_prev, r_prev) = (&self.p, &self.r);
        let r_g_before = &self.r_g_previous;
        let mut p: Vec<TruncatedSeries<R>> = vec![TruncatedSeries::zero(self.variable, &self.context, self.order); 8];
        p[A] = self.part_times(A, k, &[&p_prev[H], r_g_before])?;
        p[B] = self.part_times(B, k, &[&p_prev[H], &r_prev[A]])?;
        p[C] = self.part_times(C, k, &[&p_prev[H], &r_prev[B]])?;
        p[D] = self.part_times(D, k, &[&p[A], &r_prev[H]])?;
        p[E] = self.part_times(E, k, &[&p[A], &r_prev[H]])?;
        p[F] = self.part_times(F, k, &[&p[B], &p[A], &r_prev[E]])?;
        p[G] = self.part_times(G, k, &[&p[D], &p[C], &p[B], &p[A], &r_prev[F]])?;
        // h t^k / (1 - h t^k) expanded as a geometric series
        let (h_coefficient, h_degree) = (self.part_weight)(H, k)?;
        let mut power = r_prev[G].clone();
        loop {
            let mut next = TruncatedSeries::zero(self.variable, &self.context, self.order);
            next.add_shifted(&power, h_degree, &h_coefficient)?;
            if next.is_zero() {
                break;
            }
            p[H] = p[H].add(&next)?;
            power = next;
        }
        let mut r = Vec::with_capacity(8);
        r.resize(8, TruncatedSeries::zero(self.variable, &self.context, self.order));
        let mut running = r_prev[G].clone();
        for &c in &ASCENDING {
            running = running.add(&p[c])?;
            r[c] = running.clone();
        }
        let mut increment = TruncatedSeries::zero(self.variable, &self.context, self.order);
        for series in &p {
            increment = increment.add(series)?;
        }
        if r[G].sub(&r_prev[G])? != increment {
            return Err(RecursionError::Telescoping { k });
        }
        self.r_g_previous = std::mem::replace(&mut self.r, r)[G].clone();
        self.p = p;
        self.k = k;
        Ok(())
    }

    /// Advances until no further part fits below the truncation; returns `R_{k_g}`.
    pub fn run_to_stationary(&mut self) -> Result<TruncatedSeries<R>, RecursionError> {
        while !self.is_stationary()? {
            self.advance()?;
        }
        Ok(self.r[G].clone())
    }
}

/// Colours `a..h`.
pub fn colours() -> ColourSet {
    ColourSet::letters(8)
}

/// Base state (`k = 0`) for colour polynomials in `t`: `R = 1`, `P = 0`.
pub fn initial_state(order: usize) -> RecursionState<ColourPolynomial> {
    let colours = colours();
    let weights: Vec<ColourPolynomial> = (0..8).map(|c| ColourPolynomial::colour(&colours, c)).collect();
    let part_weight: PartWeight<ColourPolynomial> = Arc::new(move |c, k| Ok((weights[c].clone(), k.max(0) as usize)));
    RecursionState::base(Variable::T, colours, order, part_weight)
}

/// Base state for the dilated integer series in `q`: part `k_c` weighs `q^{t·k + e_c}`.
pub fn initial_dilated_state(order: usize, exponents: [i64; 8], t_exponent: u32) -> RecursionState<BigInt> {
    let part_weight: PartWeight<BigInt> = Arc::new(move |c, k| {
        let exponent = i64::from(t_exponent) * k + exponents[c];
        if exponent < 1 {
            return Err(RecursionError::NonPositivePart {
                colour: char::from(b'a' + c as u8),
                k,
                exponent,
            });
        }
        Ok((BigInt::from(1), exponent as usize))
    });
    RecursionState::base(Variable::Q, (), order, part_weight)
}

/// `Σ C(π) t^{|π|}` through `t^order`.
pub fn total_series(order: usize) -> Result<ColourSeries, RecursionError> {
    initial_state(order).run_to_stationary()
}

/// The principal dilation of [`total_series`] with every colour set to 1.
pub fn dilated_series(order: usize) -> Result<IntegerSeries, RecursionError> {
    initial_dilated_state(order, PRINCIPAL_EXPONENTS, PRINCIPAL_T_EXPONENT).run_to_stationary()
}

/// Which pairwise products of distinct colours the `t²` coefficient lacks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefinementCertificate {
    /// Monomials of the `t²` coefficient.
    pub monomials: usize,
    pub present: Vec<(usize, usize)>,
    pub missing: Vec<(usize, usize)>,
}

impl RefinementCertificate {
    /// A product of Pochhammer symbols in single colours would produce every
    /// pairwise product at `t²`.
    pub fn impossible(&self) -> bool {
        !self.missing.is_empty()
    }

    pub fn render(&self, colours: &ColourSet) -> String {
        let names = |pairs: &[(usize, usize)]| {
            pairs
                .iter()
                .map(|&(i, j)| format!("{}*{}", colours.name(i), colours.name(j)))
                .collect::<Vec<_>>()
                .join(" ")
        };
        format!(
            "t^2 monomials: {}\npairwise products present: {} of {}\nmissing: {}\nrefinement impossible: {}\n",
            self.monomials,
            self.present.len(),
            self.present.len() + self.missing.len(),
            names(&self.missing),
            if self.impossible() { "yes" } else { "no" }
        )
    }
}

/// Inspects the `t²` coefficient of a colour series.
pub fn refinement_check(series: &ColourSeries) -> Result<RefinementCertificate, RecursionError> {
    let coefficient = series
        .coefficient(2)
        .ok_or_else(|| SeriesError::Parse("series must be known through t^2".into()))?;
    let n = series.colours().len();
    let (mut present, mut missing) = (Vec::new(), Vec::new());
    for i in 0..n {
        for j in i + 1..n {
            let mut exps = vec![0; n];
            exps[i] = 1;
            exps[j] = 1;
            if coefficient.contains(&ColourMonomial::from_exponents(exps)) {
                present.push((i, j));
            } else {
                missing.push((i, j));
            }
        }
    }
    Ok(RefinementCertificate {
        monomials: coefficient.len(),
        present,
        missing,
    })
}

/// [`refinement_check`] on [`total_series`] through `t²`.
pub fn refinement_impossible() -> Result<RefinementCertificate, RecursionError> {
    refinement_check(&total_series(2)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(text: &str) -> ColourPolynomial {
        let colours = colours();
        let mut p = ColourPolynomial::zero(&colours);
        for term in text.split('+') {
            p.add_term(colours.parse_monomial(term).unwrap(), &BigInt::from(1));
        }
        p
    }

    #[test]
    fn base_cases() {
        let s = initial_state(3);
        assert_eq!(s.k(), 0);
        assert_eq!(s.r(G), &ColourSeries::one(Variable::T, &colours(), 3));
        assert!(s.p(A).is_zero());
    }

    #[test]
    fn low_coefficients() {
        let s = total_series(3).unwrap();
        assert_eq!(s.coefficients()[1], poly("a+b+c+d+e+f+g+h"));
        let t2 = poly("a+b+c+d+a*d+e+a*e+f+a*f+b*f+g+a*g+b*g+c*g+d*g+h+h^2");
        assert_eq!(s.coefficients()[2], t2);
        assert_eq!(t2.len(), 17);
        let colours = colours();
        assert!(s.coefficients()[3].contains(&colours.parse_monomial("a*d*g").unwrap()));
        assert!(s.coefficients()[3].has_non_negative_coefficients());
        assert_eq!(total_series(0).unwrap().coefficients().len(), 1);
    }

    #[test]
    fn certificate() {
        let cert = refinement_impossible().unwrap();
        assert!(cert.impossible());
        assert_eq!(cert.monomials, 17);
        assert_eq!(cert.present.len() + cert.missing.len(), 28);
        assert!(cert.missing.contains(&(E, F)));
        let all = poly("a*b+a*c+b*c+a+b+c");
        let three = ColourSet::letters(3);
        let mut coefficient = ColourPolynomial::zero(&three);
        for (m, c) in all.terms() {
            coefficient.add_term(ColourMonomial::from_exponents(m.exponents()[..3].to_vec()), c);
        }
        let square = ColourSeries::from_coefficients(
            Variable::T,
            &three,
            vec![
                ColourPolynomial::constant(&three, 1),
                ColourPolynomial::zero(&three),
                coefficient,
            ],
            2,
        );
        assert!(!refinement_check(&square).unwrap().impossible());
    }

    #[test]
    fn dilated_prefix() {
        let s = dilated_series(12).unwrap();
        assert_eq!(s.to_i64_vec().unwrap(), vec![1, 1, 1, 1, 2, 3, 3, 4, 6, 7, 8, 10, 14]);
        assert_eq!(dilated_series(0).unwrap().to_i64_vec().unwrap(), vec![1]);
    }

    #[test]
    fn telescoping_holds_at_every_step() {
        let mut s = initial_state(5);
        let mut previous = s.r(G).clone();
        while !s.is_stationary().unwrap() {
            s.advance().unwrap();
            let mut sum = ColourSeries::zero(Variable::T, &colours(), 5);
            for c in 0..8 {
                sum = sum.add(s.p(c)).unwrap();
            }
            assert_eq!(s.r(G).sub(&previous).unwrap(), sum);
            assert_eq!(s.r(G).sub(s.r(F)).unwrap(), *s.p(G));
            previous = s.r(G).clone();
        }
    }
}
