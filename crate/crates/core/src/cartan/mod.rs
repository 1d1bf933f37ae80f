//! Affine Cartan data, positive-root families and Lepowsky's product formula.

mod roots;

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use thiserror::Error;

use crate::series::SeriesError;

pub use roots::{
    lepowsky_factors, lepowsky_product, parse_root_families, positive_root_families, render_root_families,
    specialise_families, RootClass, RootFamily, SpecialisationVector,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CartanError {
    #[error("unknown affine type `{0}` (expected A1^(1), G2^(1) or G2^(2))")]
    UnknownType(String),
    #[error("root families are not tabulated for {0}")]
    Unsupported(AffineType),
    #[error("invalid Cartan data: {0}")]
    InvalidData(String),
    #[error("root family line {line}: {message}")]
    RootFile { line: usize, message: String },
    #[error("invalid root family: {0}")]
    InvalidFamily(String),
    #[error("specialisation vector: {0}")]
    InvalidSpecialisation(String),
    #[error("family {family} specialises to {reason}")]
    DegenerateFactor { family: String, reason: String },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AffineType {
    A1_1,
    G2_1,
    G2_2,
}

impl AffineType {
    pub const ALL: [AffineType; 3] = [AffineType::A1_1, AffineType::G2_1, AffineType::G2_2];

    /// The type whose GCM is the transpose of this one.
    pub fn dual(self) -> AffineType {
        match self {
            AffineType::A1_1 => AffineType::A1_1,
            AffineType::G2_1 => AffineType::G2_2,
            AffineType::G2_2 => AffineType::G2_1,
        }
    }
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AffineType::A1_1 => "A1^(1)",
            AffineType::G2_1 => "G2^(1)",
            AffineType::G2_2 => "G2^(2)",
        })
    }
}

impl FromStr for AffineType {
    type Err = CartanError;

    /// Accepts `A1^(1)`, `A1_1`, `a1-1`, `a1` and the analogous spellings.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .map(|c| c.to_ascii_lowercase())
            .collect();
        match key.as_str() {
            "a1" | "a11" => Ok(AffineType::A1_1),
            "g21" => Ok(AffineType::G2_1),
            "g22" => Ok(AffineType::G2_2),
            _ => Err(CartanError::UnknownType(s.to_string())),
        }
    }
}

/// Generalised Cartan matrix of affine type together with its null vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineCartanData {
    pub affine_type: AffineType,
    /// `gcm[i][j] = a_ij`.
    pub gcm: Vec<Vec<i64>>,
    /// Coefficients of `α_i` in `δ`; right null vector of the GCM.
    pub labels: Vec<i64>,
    /// Left null vector of the GCM.
    pub colabels: Vec<i64>,
    /// Coefficients of `h_i` used when evaluating levels.
    ///
    /// Equal to the colabels except for G2^(2), where the level-one crystal
    /// is graded by `h_0 + 2h_1 + 2h_2`.
    pub central: Vec<i64>,
}

impl AffineCartanData {
    pub fn new(
        affine_type: AffineType,
        gcm: Vec<Vec<i64>>,
        labels: Vec<i64>,
        colabels: Vec<i64>,
        central: Vec<i64>,
    ) -> Result<Self, CartanError> {
        let data = AffineCartanData {
            affine_type,
            gcm,
            labels,
            colabels,
            central,
        };
        data.validate()?;
        Ok(data)
    }

    /// `n`, so that the simple roots are `α_0..α_n`.
    pub fn rank(&self) -> usize {
        self.gcm.len() - 1
    }

    pub fn size(&self) -> usize {
        self.gcm.len()
    }

    /// Coefficient of `α_0` in `δ`.
    pub fn d0(&self) -> i64 {
        self.labels[0]
    }

    pub fn delta(&self) -> &[i64] {
        &self.labels
    }

    fn validate(&self) -> Result<(), CartanError> {
        let size = self.gcm.len();
        let bad = |m: String| Err(CartanError::InvalidData(m));
        if size < 2 {
            return bad("need at least two simple roots".into());
        }
        if self.gcm.iter().any(|row| row.len() != size) {
            return bad("GCM is not square".into());
        }
        for v in [&self.labels, &self.colabels, &self.central] {
            if v.len() != size || v.iter().any(|&x| x <= 0) {
                return bad("labels, colabels and central coefficients must be positive, one per node".into());
            }
        }
        for i in 0..size {
            if self.gcm[i][i] != 2 {
                return bad(format!("a_{i}{i} = {}", self.gcm[i][i]));
            }
            for j in 0..size {
                if i != j && (self.gcm[i][j] > 0 || (self.gcm[i][j] == 0) != (self.gcm[j][i] == 0)) {
                    return bad(format!(
                        "off-diagonal entries a_{i}{j}, a_{j}{i} violate sign or zero symmetry"
                    ));
                }
            }
        }
        for i in 0..size {
            let row: i64 = (0..size).map(|j| self.gcm[i][j] * self.labels[j]).sum();
            let col: i64 = (0..size).map(|j| self.colabels[j] * self.gcm[j][i]).sum();
            if row != 0 {
                return bad(format!("labels are not annihilated by row {i}"));
            }
            if col != 0 {
                return bad(format!("colabels are not annihilated by column {i}"));
            }
        }
        for v in [&self.labels, &self.colabels] {
            if v.iter().fold(0, |g, &x| g.gcd(&x)) != 1 {
                return bad("labels and colabels must be coprime".into());
            }
        }
        Ok(())
    }
}

pub fn builtin_cartan(affine_type: AffineType) -> AffineCartanData {
    let (gcm, labels, colabels, central) = match affine_type {
        AffineType::A1_1 => (vec![vec![2, -2], vec![-2, 2]], vec![1, 1], vec![1, 1], vec![1, 1]),
        AffineType::G2_1 => (
            vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -3, 2]],
            vec![1, 2, 3],
            vec![1, 2, 1],
            vec![1, 2, 1],
        ),
        AffineType::G2_2 => (
            vec![vec![2, -1, 0], vec![-1, 2, -3], vec![0, -1, 2]],
            vec![1, 2, 1],
            vec![1, 2, 3],
            vec![1, 2, 2],
        ),
    };
    AffineCartanData::new(affine_type, gcm, labels, colabels, central).expect("built-in Cartan data is valid")
}
