//! Energy functions on `B ⊗ B`, their specialisation to difference profiles,
//! and path weights for constant ground states.

mod paths;
mod profile;

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::crystal::{tensor, CrystalError, CrystalGraph, TENSOR};
use crate::series::SeriesError;

pub use paths::{enumerate_paths, path_series, path_weight, PathWeight};
pub use profile::{specialise_energy, DifferenceProfile, Residue};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnergyError {
    #[error("B ⊗ B is not connected; the energy is not determined by one value")]
    Disconnected,
    #[error("energy is inconsistent at {pair}: forced to both {first} and {second}")]
    Inconsistent { pair: String, first: i64, second: i64 },
    #[error("ground `{0}` does not give a constant ground-state path")]
    NonConstantGround(String),
    #[error("energy of the ground pair is {0}, expected 0")]
    GroundNotNormalised(i64),
    #[error("path enumeration needs H ≥ 0 and H(g ⊗ b) ≥ 1 for b ≠ g: {0}")]
    UnboundedPaths(String),
    #[error("deviation: {0}")]
    InvalidDeviation(String),
    #[error("profile line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid difference profile: {0}")]
    InvalidProfile(String),
    #[error("unknown table format `{0}` (expected text or tsv)")]
    UnknownFormat(String),
    #[error(transparent)]
    Crystal(#[from] CrystalError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Output layout for integer matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TableFormat {
    /// Space-aligned columns with a header row.
    #[default]
    Text,
    /// Tab-separated, header row first.
    Tsv,
}

impl FromStr for TableFormat {
    type Err = EnergyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(TableFormat::Text),
            "tsv" => Ok(TableFormat::Tsv),
            _ => Err(EnergyError::UnknownFormat(s.to_string())),
        }
    }
}

/// Renders a square matrix with labelled rows and columns.
pub fn render_matrix(labels: &[String], values: &[Vec<i64>], format: TableFormat) -> String {
    match format {
        TableFormat::Tsv => {
            let mut out = String::new();
            for l in labels {
                out.push('\t');
                out.push_str(l);
            }
            out.push('\n');
            for (label, row) in labels.iter().zip(values) {
                out.push_str(label);
                for v in row {
                    out.push_str(&format!("\t{v}"));
                }
                out.push('\n');
            }
            out
        }
        TableFormat::Text => {
            let width = labels
                .iter()
                .map(|l| l.chars().count())
                .chain(values.iter().flatten().map(|v| v.to_string().len()))
                .max()
                .unwrap_or(1);
            let pad = |s: &str| format!("{}{s}", " ".repeat(width - s.chars().count()));
            let mut lines = vec![format!(
                "{} |{}",
                pad(""),
                labels.iter().map(|l| format!(" {}", pad(l))).collect::<String>()
            )];
            lines.push(format!(
                "{}-+{}",
                "-".repeat(width),
                "-".repeat((width + 1) * labels.len())
            ));
            for (label, row) in labels.iter().zip(values) {
                lines.push(format!(
                    "{} |{}",
                    pad(label),
                    row.iter()
                        .map(|v| format!(" {}", pad(&v.to_string())))
                        .collect::<String>()
                ));
            }
            lines.join("\n") + "\n"
        }
    }
}

/// `H(b1 ⊗ b2)` for every ordered pair, indexed `[b1][b2]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnergyTable {
    names: Vec<String>,
    values: Vec<Vec<i64>>,
}

impl EnergyTable {
    pub fn from_values(names: Vec<String>, values: Vec<Vec<i64>>) -> Result<Self, EnergyError> {
        if values.len() != names.len() || values.iter().any(|r| r.len() != names.len()) {
            return Err(EnergyError::InvalidProfile(format!(
                "energy table must be {0}×{0}",
                names.len()
            )));
        }
        Ok(EnergyTable { names, values })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn get(&self, b1: usize, b2: usize) -> i64 {
        self.values[b1][b2]
    }

    pub fn values(&self) -> &[Vec<i64>] {
        &self.values
    }

    pub fn shifted(&self, by: i64) -> Self {
        EnergyTable {
            names: self.names.clone(),
            values: self.values.iter().map(|r| r.iter().map(|v| v + by).collect()).collect(),
        }
    }

    pub fn render(&self, format: TableFormat) -> String {
        render_matrix(&self.names, &self.values, format)
    }

    /// Checks the defining recurrence on every arrow of `B ⊗ B`.
    pub fn verify(&self, crystal: &CrystalGraph) -> Result<(), EnergyError> {
        let n = crystal.len();
        let square = tensor(crystal, crystal)?;
        for (src, i, dst) in square.arrows() {
            let (b1, b2) = (src / n, src % n);
            let expected = self.values[b1][b2] + energy_step(crystal, i, b1, b2);
            let found = self.values[dst / n][dst % n];
            if expected != found {
                return Err(EnergyError::Inconsistent {
                    pair: square.name(dst).to_string(),
                    first: expected,
                    second: found,
                });
            }
        }
        Ok(())
    }
}

impl fmt::Display for EnergyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(TableFormat::Text))
    }
}

/// Change of `H` along `f_i` applied to `b1 ⊗ b2`.
fn energy_step(crystal: &CrystalGraph, i: usize, b1: usize, b2: usize) -> i64 {
    if i != 0 {
        0
    } else if crystal.phi_i(0, b1) > crystal.epsilon_i(0, b2) {
        -1
    } else {
        1
    }
}

/// Solves for `H` by propagation over `B ⊗ B` from `H(b1 ⊗ b2) = value`.
pub fn solve_energy(
    crystal: &CrystalGraph,
    normalisation: (usize, usize),
    value: i64,
) -> Result<EnergyTable, EnergyError> {
    let n = crystal.len();
    let square = tensor(crystal, crystal)?;
    if !square.is_connected() {
        return Err(EnergyError::Disconnected);
    }
    let mut h: Vec<Option<i64>> = vec![None; n * n];
    let start = normalisation.0 * n + normalisation.1;
    h[start] = Some(value);
    let mut queue = VecDeque::from([start]);
    let assign = |h: &mut Vec<Option<i64>>, queue: &mut VecDeque<usize>, v: usize, forced: i64| match h[v] {
        None => {
            h[v] = Some(forced);
            queue.push_back(v);
            Ok(())
        }
        Some(existing) if existing != forced => Err(EnergyError::Inconsistent {
            pair: format!("{}{TENSOR}{}", crystal.name(v / n), crystal.name(v % n)),
            first: existing,
            second: forced,
        }),
        Some(_) => Ok(()),
    };
    while let Some(v) = queue.pop_front() {
        let here = h[v].unwrap();
        for i in 0..crystal.labels() {
            if let Some(w) = square.f(i, v) {
                assign(&mut h, &mut queue, w, here + energy_step(crystal, i, v / n, v % n))?;
            }
            if let Some(w) = square.e(i, v) {
                assign(&mut h, &mut queue, w, here - energy_step(crystal, i, w / n, w % n))?;
            }
        }
    }
    let values = (0..n)
        .map(|b1| (0..n).map(|b2| h[b1 * n + b2].expect("connected square")).collect())
        .collect();
    let table = EnergyTable {
        names: crystal.names().to_vec(),
        values,
    };
    table.verify(crystal)?;
    Ok(table)
}
