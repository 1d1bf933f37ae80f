use std::fmt;
use std::str::FromStr;

use super::{builtin_cartan, AffineType, CartanError};
use crate::series::{IntegerSeries, PochhammerFactor, PochhammerProduct};

const A1_ROOTS: &str = include_str!("../../data/a1_1.roots");
const G2_1_ROOTS: &str = include_str!("../../data/g2_1.roots");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootClass {
    /// Real root in a simply-laced system.
    Real,
    RealShort,
    RealLong,
    Imaginary,
}

impl RootClass {
    pub fn is_real(self) -> bool {
        self != RootClass::Imaginary
    }
}

impl fmt::Display for RootClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RootClass::Real => "real",
            RootClass::RealShort => "short",
            RootClass::RealLong => "long",
            RootClass::Imaginary => "imaginary",
        })
    }
}

impl FromStr for RootClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "real" => Ok(RootClass::Real),
            "short" => Ok(RootClass::RealShort),
            "long" => Ok(RootClass::RealLong),
            "imaginary" => Ok(RootClass::Imaginary),
            _ => Err(format!("unknown root class `{s}`")),
        }
    }
}

/// Roots `Σ_i (m_i k + c_i) α_i` for `k ≥ k_start`, each with the same multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootFamily {
    class: RootClass,
    slopes: Vec<i64>,
    offsets: Vec<i64>,
    k_start: i64,
    multiplicity: u32,
}

impl RootFamily {
    pub fn new(
        class: RootClass,
        slopes: Vec<i64>,
        offsets: Vec<i64>,
        k_start: i64,
        multiplicity: u32,
    ) -> Result<Self, CartanError> {
        let family = RootFamily {
            class,
            slopes,
            offsets,
            k_start,
            multiplicity,
        };
        let invalid = |m: &str| Err(CartanError::InvalidFamily(format!("{family}: {m}")));
        if family.slopes.len() != family.offsets.len() || family.slopes.is_empty() {
            return invalid("slope and offset counts differ");
        }
        if family.multiplicity == 0 {
            return invalid("multiplicity must be positive");
        }
        // coefficients are non-decreasing in k, so checking k_start suffices
        let first = family.coefficients(family.k_start);
        if family.slopes.iter().any(|&m| m < 0) || first.iter().any(|&c| c < 0) {
            return invalid("some coefficient is negative");
        }
        if first.iter().all(|&c| c == 0) {
            return invalid("contains the zero vector");
        }
        Ok(family)
    }

    pub fn class(&self) -> RootClass {
        self.class
    }
    pub fn slopes(&self) -> &[i64] {
        &self.slopes
    }
    pub fn offsets(&self) -> &[i64] {
        &self.offsets
    }
    pub fn k_start(&self) -> i64 {
        self.k_start
    }
    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    /// Coefficients of `α_0..α_n` in the `k`-th root.
    pub fn coefficients(&self, k: i64) -> Vec<i64> {
        self.slopes.iter().zip(&self.offsets).map(|(m, c)| m * k + c).collect()
    }
}

impl fmt::Display for RootFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.class)?;
        for (m, c) in self.slopes.iter().zip(&self.offsets) {
            write!(f, " {m}{c:+}")?;
        }
        write!(f, " {} {}", self.k_start, self.multiplicity)
    }
}

fn parse_linear(token: &str) -> Option<(i64, i64)> {
    let split = token.char_indices().skip(1).find(|&(_, c)| c == '+' || c == '-')?.0;
    let slope = token[..split].parse().ok()?;
    let offset = token[split..].trim_start_matches('+').parse().ok()?;
    Some((slope, offset))
}

/// Parses `class m0+c0 m1+c1 ... kstart mult` lines; `#` starts a comment.
pub fn parse_root_families(text: &str, rank_plus_one: usize) -> Result<Vec<RootFamily>, CartanError> {
    let mut families = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line_no = index + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| CartanError::RootFile { line: line_no, message };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != rank_plus_one + 3 {
            return Err(err(format!(
                "expected {} fields, found {}",
                rank_plus_one + 3,
                tokens.len()
            )));
        }
        let class = tokens[0].parse::<RootClass>().map_err(err)?;
        let mut slopes = Vec::with_capacity(rank_plus_one);
        let mut offsets = Vec::with_capacity(rank_plus_one);
        for token in &tokens[1..=rank_plus_one] {
            let (m, c) = parse_linear(token).ok_or_else(|| err(format!("`{token}` is not of the form m+c")))?;
            slopes.push(m);
            offsets.push(c);
        }
        let k_start = tokens[rank_plus_one + 1]
            .parse()
            .map_err(|_| err(format!("bad kstart `{}`", tokens[rank_plus_one + 1])))?;
        let multiplicity = tokens[rank_plus_one + 2]
            .parse()
            .map_err(|_| err(format!("bad multiplicity `{}`", tokens[rank_plus_one + 2])))?;
        families.push(RootFamily::new(class, slopes, offsets, k_start, multiplicity).map_err(|e| err(e.to_string()))?);
    }
    Ok(families)
}

pub fn render_root_families(families: &[RootFamily]) -> String {
    families.iter().map(|f| format!("{f}\n")).collect()
}

/// Tabulated positive roots of `A1^(1)` and `G2^(1)`.
pub fn positive_root_families(affine_type: AffineType) -> Result<Vec<RootFamily>, CartanError> {
    let text = match affine_type {
        AffineType::A1_1 => A1_ROOTS,
        AffineType::G2_1 => G2_1_ROOTS,
        AffineType::G2_2 => return Err(CartanError::Unsupported(affine_type)),
    };
    parse_root_families(text, builtin_cartan(affine_type).size())
}

/// `s = (s_0, ..., s_n)` for the substitution `e^{-α_i} ↦ q^{s_i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialisationVector(Vec<u32>);

impl SpecialisationVector {
    pub fn new(values: Vec<u32>) -> Result<Self, CartanError> {
        if values.iter().all(|&v| v == 0) {
            return Err(CartanError::InvalidSpecialisation("all entries are zero".into()));
        }
        Ok(SpecialisationVector(values))
    }

    pub fn principal(len: usize) -> Self {
        SpecialisationVector(vec![1; len])
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    /// `F_s(α)` for a root with the given simple-root coefficients.
    pub fn apply(&self, coefficients: &[i64]) -> i64 {
        coefficients.iter().zip(&self.0).map(|(&c, &s)| c * i64::from(s)).sum()
    }
}

/// One factor `(q^a; q^n)_∞^mult` per family.
pub fn specialise_families(
    families: &[RootFamily],
    s: &SpecialisationVector,
) -> Result<Vec<PochhammerFactor>, CartanError> {
    families
        .iter()
        .map(|family| {
            if family.slopes.len() != s.0.len() {
                return Err(CartanError::InvalidSpecialisation(format!(
                    "{} entries for a rank-{} family",
                    s.0.len(),
                    family.slopes.len()
                )));
            }
            let shift = s.apply(&family.coefficients(family.k_start));
            let modulus = s.apply(&family.slopes);
            let degenerate = |reason: String| CartanError::DegenerateFactor {
                family: family.to_string(),
                reason,
            };
            if shift == 0 {
                return Err(degenerate("a factor (1 - q^0)".into()));
            }
            if modulus == 0 {
                return Err(degenerate(format!(
                    "the constant factor (1 - q^{shift}) repeated infinitely"
                )));
            }
            let to_u32 = |x: i64| u32::try_from(x).map_err(|_| degenerate(format!("exponent {x} out of range")));
            let power = i32::try_from(family.multiplicity).map_err(|_| degenerate("huge multiplicity".into()))?;
            Ok(PochhammerFactor::new(to_u32(shift)?, to_u32(modulus)?, power)?)
        })
        .collect()
}

/// `F_{(Λ(h_i)+1)} D(Φ∨) / F_1 D(Φ∨)` in collected Pochhammer form.
pub fn lepowsky_factors(affine_type: AffineType, weight: &[u32]) -> Result<PochhammerProduct, CartanError> {
    let families = positive_root_families(affine_type.dual())?;
    let size = builtin_cartan(affine_type).size();
    if weight.len() != size {
        return Err(CartanError::InvalidSpecialisation(format!(
            "{affine_type} needs {size} weight coefficients, got {}",
            weight.len()
        )));
    }
    let shifted = SpecialisationVector::new(weight.iter().map(|w| w + 1).collect())?;
    let numerator = PochhammerProduct::from_factors(&specialise_families(&families, &shifted)?);
    let denominator =
        PochhammerProduct::from_factors(&specialise_families(&families, &SpecialisationVector::principal(size))?);
    Ok(numerator.multiply(&denominator.inverse()).collect())
}

pub fn lepowsky_product(affine_type: AffineType, weight: &[u32], order: usize) -> Result<IntegerSeries, CartanError> {
    Ok(lepowsky_factors(affine_type, weight)?.expand(order)?)
}
