use std::collections::BTreeSet;
use std::fmt;

use super::{render_matrix, EnergyError, EnergyTable, TableFormat};
use crate::series::ColourSet;

/// Parts of one colour must be `≡ residue (mod modulus)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Residue {
    pub residue: i64,
    pub modulus: i64,
}

impl Residue {
    pub fn new(residue: i64, modulus: i64) -> Result<Self, EnergyError> {
        if modulus < 1 {
            return Err(EnergyError::InvalidProfile(format!(
                "modulus {modulus} must be at least 1"
            )));
        }
        Ok(Residue {
            residue: residue.rem_euclid(modulus),
            modulus,
        })
    }

    pub fn admits(&self, value: i64) -> bool {
        value.rem_euclid(self.modulus) == self.residue
    }
}

/// Difference matrix, congruence rules and forbidden parts over a colour set.
///
/// `matrix[i][j] = r` means a part `k_j` followed by a part `l_i` needs
/// `k - l ≥ r`. Rows index the later (smaller) part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceProfile {
    colours: ColourSet,
    matrix: Vec<Vec<i64>>,
    residues: Vec<Option<Residue>>,
    forbidden: BTreeSet<(i64, usize)>,
}

impl DifferenceProfile {
    pub fn new(
        colours: ColourSet,
        matrix: Vec<Vec<i64>>,
        residues: Vec<Option<Residue>>,
        forbidden: BTreeSet<(i64, usize)>,
    ) -> Result<Self, EnergyError> {
        let n = colours.len();
        if n == 0 {
            return Err(EnergyError::InvalidProfile("no colours".into()));
        }
        if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
            return Err(EnergyError::InvalidProfile(format!("matrix must be {n}×{n}")));
        }
        if residues.len() != n {
            return Err(EnergyError::InvalidProfile(format!(
                "need one residue slot per colour, got {}",
                residues.len()
            )));
        }
        if let Some((v, c)) = forbidden.iter().find(|(_, c)| *c >= n) {
            return Err(EnergyError::InvalidProfile(format!(
                "forbidden part {v} has colour index {c}"
            )));
        }
        Ok(DifferenceProfile {
            colours,
            matrix,
            residues,
            forbidden,
        })
    }

    /// A profile with no congruence rules and no forbidden parts.
    pub fn from_matrix(colours: ColourSet, matrix: Vec<Vec<i64>>) -> Result<Self, EnergyError> {
        let n = colours.len();
        Self::new(colours, matrix, vec![None; n], BTreeSet::new())
    }

    pub fn colours(&self) -> &ColourSet {
        &self.colours
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    /// Minimum difference when a part of colour `earlier` is followed by one of colour `later`.
    pub fn min_difference(&self, later: usize, earlier: usize) -> i64 {
        self.matrix[later][earlier]
    }

    pub fn residue(&self, colour: usize) -> Option<Residue> {
        self.residues[colour]
    }

    pub fn residues(&self) -> &[Option<Residue>] {
        &self.residues
    }

    pub fn forbidden(&self) -> &BTreeSet<(i64, usize)> {
        &self.forbidden
    }

    pub fn without_forbidden(&self, part: (i64, usize)) -> Self {
        let mut out = self.clone();
        out.forbidden.remove(&part);
        out
    }

    /// Whether `value_colour` may appear as a part at all.
    pub fn allows_part(&self, value: i64, colour: usize) -> bool {
        value >= 1
            && self.residues[colour].is_none_or(|r| r.admits(value))
            && !self.forbidden.contains(&(value, colour))
    }

    /// Whether `(l, i)` may directly follow `(k, j)`.
    pub fn allows_follow(&self, earlier: (i64, usize), later: (i64, usize)) -> bool {
        earlier.0 - later.0 >= self.matrix[later.1][earlier.1]
    }

    /// Parses the profile text format:
    ///
    /// ```text
    /// colours a b c d
    /// a 4 3 1 2
    /// ...
    /// residue b 0 2
    /// forbid 1 e
    /// ```
    pub fn parse(text: &str) -> Result<Self, EnergyError> {
        let mut colours: Option<ColourSet> = None;
        let mut rows: Vec<Option<Vec<i64>>> = Vec::new();
        let mut residues: Vec<Option<Residue>> = Vec::new();
        let mut forbidden = BTreeSet::new();
        for (n, raw) in text.lines().enumerate() {
            let line_no = n + 1;
            let err = |message: String| EnergyError::Parse { line: line_no, message };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens[0] == "colours" {
                if colours.is_some() {
                    return Err(err("repeated `colours` header".into()));
                }
                let set = ColourSet::new(tokens[1..].iter().copied()).map_err(|e| err(e.to_string()))?;
                rows = vec![None; set.len()];
                residues = vec![None; set.len()];
                colours = Some(set);
                continue;
            }
            let set = colours
                .as_ref()
                .ok_or_else(|| err("expected the `colours` header first".into()))?;
            let colour = |name: &str| {
                set.index_of(name)
                    .ok_or_else(|| err(format!("unknown colour `{name}`")))
            };
            let int = |s: &str| s.parse::<i64>().map_err(|_| err(format!("`{s}` is not an integer")));
            match tokens.as_slice() {
                ["residue", c, r, m] => {
                    let c = colour(c)?;
                    if residues[c].is_some() {
                        return Err(err(format!("second residue rule for `{}`", set.name(c))));
                    }
                    residues[c] = Some(Residue::new(int(r)?, int(m)?).map_err(|e| err(e.to_string()))?);
                }
                ["forbid", v, c] => {
                    forbidden.insert((int(v)?, colour(c)?));
                }
                [name, entries @ ..] => {
                    let c = colour(name)?;
                    if entries.len() != set.len() {
                        return Err(err(format!(
                            "row `{name}` has {} entries, expected {}",
                            entries.len(),
                            set.len()
                        )));
                    }
                    if rows[c].is_some() {
                        return Err(err(format!("row `{name}` given twice")));
                    }
                    rows[c] = Some(entries.iter().map(|e| int(e)).collect::<Result<_, _>>()?);
                }
                [] => unreachable!(),
            }
        }
        let colours = colours.ok_or(EnergyError::Parse {
            line: 0,
            message: "missing `colours` header".into(),
        })?;
        let matrix = rows
            .into_iter()
            .enumerate()
            .map(|(i, r)| {
                r.ok_or_else(|| EnergyError::Parse {
                    line: 0,
                    message: format!("missing row `{}`", colours.name(i)),
                })
            })
            .collect::<Result<_, _>>()?;
        Self::new(colours, matrix, residues, forbidden)
    }

    /// Inverse of [`DifferenceProfile::parse`].
    pub fn render(&self) -> String {
        let mut out = format!("colours {}\n", self.colours.names().join(" "));
        for (i, row) in self.matrix.iter().enumerate() {
            let entries: Vec<String> = row.iter().map(i64::to_string).collect();
            out.push_str(&format!("{} {}\n", self.colours.name(i), entries.join(" ")));
        }
        for (c, r) in self.residues.iter().enumerate() {
            if let Some(r) = r {
                out.push_str(&format!(
                    "residue {} {} {}\n",
                    self.colours.name(c),
                    r.residue,
                    r.modulus
                ));
            }
        }
        for (v, c) in &self.forbidden {
            out.push_str(&format!("forbid {v} {}\n", self.colours.name(*c)));
        }
        out
    }

    /// Matrix display plus congruence and forbidden-part summary lines.
    pub fn render_table(&self, format: TableFormat) -> String {
        let mut out = render_matrix(self.colours.names(), &self.matrix, format);
        for (c, r) in self.residues.iter().enumerate() {
            if let Some(r) = r {
                out.push_str(&format!(
                    "residue {} ≡ {} mod {}\n",
                    self.colours.name(c),
                    r.residue,
                    r.modulus
                ));
            }
        }
        if !self.forbidden.is_empty() {
            let parts: Vec<String> = self
                .forbidden
                .iter()
                .map(|(v, c)| format!("{v}_{}", self.colours.name(*c)))
                .collect();
            out.push_str(&format!("forbidden {}\n", parts.join(" ")));
        }
        out
    }
}

impl fmt::Display for DifferenceProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Dilates `k_b ↦ (t·k + e_b)_b`.
///
/// `M[i][j] = t·H(b_i ⊗ b_j) + e_j - e_i`; colour `b` keeps residue
/// `e_b mod t`; positive sizes `t·k + e_b` with `k ≤ 0` are forbidden.
pub fn specialise_energy(
    energy: &EnergyTable,
    colours: &ColourSet,
    colour_exponents: &[i64],
    t_exponent: u32,
) -> Result<DifferenceProfile, EnergyError> {
    let n = energy.len();
    if colours.len() != n || colour_exponents.len() != n {
        return Err(EnergyError::InvalidProfile(format!(
            "{n} vertices but {} colours and {} exponents",
            colours.len(),
            colour_exponents.len()
        )));
    }
    if t_exponent == 0 {
        return Err(EnergyError::InvalidProfile("t exponent must be positive".into()));
    }
    let t = i64::from(t_exponent);
    let e = colour_exponents;
    let matrix = (0..n)
        .map(|i| (0..n).map(|j| t * energy.get(i, j) + e[j] - e[i]).collect())
        .collect();
    let residues = e.iter().map(|&x| Some(Residue::new(x, t).expect("t ≥ 1"))).collect();
    let mut forbidden = BTreeSet::new();
    for (c, &x) in e.iter().enumerate() {
        let mut value = x;
        while value >= 1 {
            forbidden.insert((value, c));
            value -= t;
        }
    }
    DifferenceProfile::new(colours.clone(), matrix, residues, forbidden)
}

#[cfg(test)]
mod tests {
    use super::super::solve_energy;
    use super::*;
    use crate::crystal::builtin_crystal;

    const MAIN_MATRIX: [[i64; 8]; 8] = [
        [8, 5, 6, 3, 4, 5, 6, 7],
        [7, 8, 5, 6, 7, 4, 5, 6],
        [6, 7, 8, 5, 6, 7, 4, 5],
        [5, 6, 7, 4, 5, 6, 3, 4],
        [4, 5, 6, 7, 8, 5, 6, 3],
        [3, 4, 5, 6, 7, 8, 5, 2],
        [2, 3, 4, 5, 6, 7, 8, 1],
        [1, 2, 3, 4, 5, 6, 7, 0],
    ];

    fn g2_profile() -> DifferenceProfile {
        let b = builtin_crystal("g2").unwrap();
        let psi = b.vertex("Ψ").unwrap();
        let h = solve_energy(&b, (psi, psi), 0).unwrap();
        specialise_energy(&h, &ColourSet::letters(8), &[-3, -2, -1, 0, 1, 2, 3, 0], 4).unwrap()
    }

    #[test]
    fn g2_specialised_matrix() {
        let p = g2_profile();
        assert_eq!(p.min_difference(0, 1), 5);
        for (row, expected) in p.matrix().iter().zip(MAIN_MATRIX) {
            assert_eq!(row.as_slice(), expected.as_slice());
        }
        let residues: Vec<i64> = p.residues().iter().map(|r| r.unwrap().residue).collect();
        assert_eq!(residues, vec![1, 2, 3, 0, 1, 2, 3, 0]);
        assert_eq!(p.forbidden(), &BTreeSet::from([(1, 4), (2, 5), (3, 6)]));
    }

    #[test]
    fn text_round_trip() {
        let p = g2_profile();
        let text = p.render();
        assert!(text.contains("forbid 1 e\n"));
        assert_eq!(DifferenceProfile::parse(&text).unwrap(), p);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let bad = "colours a b\na 1 2\nb 1\n";
        assert!(matches!(
            DifferenceProfile::parse(bad),
            Err(EnergyError::Parse { line: 3, .. })
        ));
        assert!(DifferenceProfile::parse("a 1\n").is_err());
        assert!(DifferenceProfile::parse("colours a b\na 0 0\n").is_err());
        assert!(DifferenceProfile::parse("colours a\na 0\nresidue a 0 0\n").is_err());
    }

    #[test]
    fn part_rules() {
        let p = g2_profile();
        assert!(p.allows_part(5, 0));
        assert!(!p.allows_part(1, 4));
        assert!(p.allows_part(5, 4));
        assert!(!p.allows_part(4, 0));
        assert!(p.allows_follow((4, 3), (1, 0)));
        assert!(!p.allows_follow((4, 0), (1, 0)));
    }
}
