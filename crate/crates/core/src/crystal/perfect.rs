use std::fmt;

use super::{tensor, CrystalError, CrystalGraph, WeightVector};

/// Vertices realising one dominant weight as `ε` and as `φ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightWitness {
    pub weight: WeightVector,
    /// Vertices with `ε(b) = λ`.
    pub upper: Vec<usize>,
    /// Vertices with `φ(b) = λ`.
    pub lower: Vec<usize>,
}

impl WeightWitness {
    pub fn is_unique(&self) -> bool {
        self.upper.len() == 1 && self.lower.len() == 1
    }
}

/// Outcome of the machine-checkable perfectness conditions at one level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerfectnessReport {
    pub level: i64,
    pub tensor_square_connected: bool,
    pub minimum_level: i64,
    pub witnesses: Vec<WeightWitness>,
    /// Conditions this report does not decide.
    pub unchecked: Vec<&'static str>,
}

impl PerfectnessReport {
    pub fn minimum_level_ok(&self) -> bool {
        self.minimum_level >= self.level
    }

    pub fn witnesses_unique(&self) -> bool {
        !self.witnesses.is_empty() && self.witnesses.iter().all(WeightWitness::is_unique)
    }

    pub fn passes(&self) -> bool {
        self.tensor_square_connected && self.minimum_level_ok() && self.witnesses_unique()
    }

    pub fn witness(&self, weight: &WeightVector) -> Option<&WeightWitness> {
        self.witnesses.iter().find(|w| &w.weight == weight)
    }

    pub fn render(&self, crystal: &CrystalGraph) -> String {
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        let mut out = format!("level {}\n", self.level);
        out.push_str(&format!(
            "tensor square connected: {}\n",
            yes_no(self.tensor_square_connected)
        ));
        out.push_str(&format!(
            "minimum vertex level: {} ({})\n",
            self.minimum_level,
            if self.minimum_level_ok() { "ok" } else { "too small" }
        ));
        for w in &self.witnesses {
            let names = |vs: &[usize]| {
                if vs.is_empty() {
                    "none".to_string()
                } else {
                    vs.iter().map(|&v| crystal.name(v)).collect::<Vec<_>>().join(",")
                }
            };
            out.push_str(&format!(
                "weight {}: eps^-1 = {{{}}}, phi^-1 = {{{}}}\n",
                w.weight,
                names(&w.upper),
                names(&w.lower)
            ));
        }
        for u in &self.unchecked {
            out.push_str(&format!("not machine-checked: {u}\n"));
        }
        out.push_str(&format!("checked conditions pass: {}\n", yes_no(self.passes())));
        out
    }
}

/// All dominant weights `Σ m_i Λ_i` with `Σ m_i c_i = level`.
pub fn dominant_weights(central: &[i64], level: i64) -> Vec<WeightVector> {
    fn go(central: &[i64], remaining: i64, prefix: &mut Vec<i64>, out: &mut Vec<WeightVector>) {
        if prefix.len() == central.len() {
            if remaining == 0 {
                out.push(WeightVector(prefix.clone()));
            }
            return;
        }
        let c = central[prefix.len()];
        for m in 0..=remaining / c {
            prefix.push(m);
            go(central, remaining - m * c, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if level >= 0 {
        go(central, level, &mut Vec::new(), &mut out);
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Checks connectivity of `B ⊗ B`, the minimum level, and uniqueness of
/// `b^λ`, `b_λ` for every dominant weight of the given level.
pub fn check_perfect(crystal: &CrystalGraph, level: i64) -> Result<PerfectnessReport, CrystalError> {
    let square = tensor(crystal, crystal)?;
    let minimum_level = (0..crystal.len()).map(|v| crystal.level(v)).min().unwrap_or(0);
    let witnesses = dominant_weights(&crystal.cartan().central, level)
        .into_iter()
        .map(|weight| WeightWitness {
            upper: (0..crystal.len()).filter(|&v| crystal.epsilon(v) == weight).collect(),
            lower: (0..crystal.len()).filter(|&v| crystal.phi(v) == weight).collect(),
            weight,
        })
        .collect();
    Ok(PerfectnessReport {
        level,
        tensor_square_connected: square.is_connected(),
        minimum_level,
        witnesses,
        unchecked: vec![
            "removing 0-arrows gives a finite-type crystal graph",
            "weight-cone condition with a unique extremal vertex",
        ],
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundStatePath {
    /// `g_0, g_1, ...`
    pub vertices: Vec<usize>,
    /// Smallest `p ≥ 1` with `g_{k+p} = g_k` for all large `k`.
    pub period: usize,
}

impl GroundStatePath {
    pub fn names<'a>(&self, crystal: &'a CrystalGraph) -> Vec<&'a str> {
        self.vertices.iter().map(|&v| crystal.name(v)).collect()
    }

    pub fn is_constant(&self) -> bool {
        self.period == 1
    }
}

impl fmt::Display for GroundStatePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} (period {})", self.vertices, self.period)
    }
}

/// `g_k = b_{λ_k}` with `λ_0 = λ` and `λ_{k+1} = ε(g_k)`.
pub fn ground_state_path(
    crystal: &CrystalGraph,
    weight: &WeightVector,
    length: usize,
) -> Result<GroundStatePath, CrystalError> {
    let lower = |lambda: &WeightVector| -> Result<usize, CrystalError> {
        let found: Vec<usize> = (0..crystal.len()).filter(|&v| &crystal.phi(v) == lambda).collect();
        match found.as_slice() {
            [v] => Ok(*v),
            [] => Err(CrystalError::GroundState {
                weight: lambda.to_string(),
                problem: "no vertex b with φ(b) equal to it".into(),
            }),
            _ => Err(CrystalError::GroundState {
                weight: lambda.to_string(),
                problem: format!("{} vertices b with φ(b) equal to it", found.len()),
            }),
        }
    };
    // λ_k determines everything after it, so the sequence of weights is
    // eventually periodic with period at most |B|
    let mut lambdas: Vec<WeightVector> = vec![weight.clone()];
    let mut vertices = Vec::new();
    let mut period = None;
    while vertices.len() < length || period.is_none() {
        let current = lambdas.last().unwrap().clone();
        let g = lower(&current)?;
        vertices.push(g);
        let next = crystal.epsilon(g);
        if period.is_none() {
            if let Some(pos) = lambdas.iter().position(|l| l == &next) {
                period = Some(lambdas.len() - pos);
            }
        }
        lambdas.push(next);
    }
    vertices.truncate(length);
    Ok(GroundStatePath {
        vertices,
        period: period.unwrap(),
    })
}
