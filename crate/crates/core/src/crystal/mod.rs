//! Finite crystal graphs given by their Kashiwara `f_i` arrows.
//!
//! `ε_i(b)` and `φ_i(b)` are not stored: they are the lengths of the `i`-chains
//! entering and leaving `b`. `e_i` is the inverse of `f_i`.

mod perfect;
mod weights;

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::cartan::{builtin_cartan, AffineCartanData, AffineType, CartanError};

pub use perfect::{
    check_perfect, dominant_weights, ground_state_path, GroundStatePath, PerfectnessReport, WeightWitness,
};
pub use weights::{principal_colour_exponents, principal_t_exponent, wt_in_roots, RootCoordinates};

const A1_LEVEL1: &str = include_str!("../../data/a1_level1.crystal");
const G2_2_LEVEL1: &str = include_str!("../../data/g2_2_level1.crystal");

/// Separator used in the vertex names of tensor products.
pub const TENSOR: &str = "⊗";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CrystalError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid crystal: {0}")]
    Invalid(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown built-in crystal `{0}` (expected a1 or g2)")]
    UnknownBuiltin(String),
    #[error("Cartan types differ: {0} vs {1}")]
    CartanMismatch(AffineType, AffineType),
    #[error("weight {weight}: {problem}")]
    GroundState { weight: String, problem: String },
    #[error("root coordinates: {0}")]
    Weights(String),
    #[error(transparent)]
    Cartan(#[from] CartanError),
}

/// Integer combination of fundamental weights `Λ_0..Λ_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn zero(size: usize) -> Self {
        WeightVector(vec![0; size])
    }

    pub fn fundamental(size: usize, i: usize) -> Self {
        let mut v = vec![0; size];
        v[i] = 1;
        WeightVector(v)
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    pub fn add(&self, other: &Self) -> Self {
        WeightVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        WeightVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// `⟨λ, c⟩` for `c = Σ central_i h_i`.
    pub fn level(&self, central: &[i64]) -> i64 {
        self.0.iter().zip(central).map(|(a, c)| a * c).sum()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&a| a >= 0)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = match (first, c < 0) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let magnitude = if c.abs() == 1 {
                String::new()
            } else {
                c.abs().to_string()
            };
            write!(f, "{sign}{magnitude}Λ{i}")?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// A finite crystal: named vertices and partial maps `f_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalGraph {
    cartan: AffineCartanData,
    names: Vec<String>,
    index: HashMap<String, usize>,
    /// `f[i][v]`
    f: Vec<Vec<Option<usize>>>,
    /// `e[i][v]`, the inverse of `f[i]`
    e: Vec<Vec<Option<usize>>>,
}

impl CrystalGraph {
    /// Builds a crystal from vertex names and `(source, i, target)` arrows.
    pub fn new(
        cartan: AffineCartanData,
        names: Vec<String>,
        arrows: &[(usize, usize, usize)],
    ) -> Result<Self, CrystalError> {
        let invalid = |m: String| Err(CrystalError::Invalid(m));
        if names.is_empty() {
            return invalid("no vertices".into());
        }
        let mut index = HashMap::new();
        for (v, name) in names.iter().enumerate() {
            if index.insert(name.clone(), v).is_some() {
                return invalid(format!("duplicate vertex `{name}`"));
            }
        }
        let size = cartan.size();
        let mut f = vec![vec![None; names.len()]; size];
        let mut e = vec![vec![None; names.len()]; size];
        for &(src, i, dst) in arrows {
            if i >= size {
                return invalid(format!("arrow label {i} outside 0..{}", size - 1));
            }
            if src >= names.len() || dst >= names.len() {
                return invalid(format!("arrow {src} -{i}-> {dst} references a missing vertex"));
            }
            if f[i][src].replace(dst).is_some() {
                return invalid(format!("`{}` has two outgoing {i}-arrows", names[src]));
            }
            if e[i][dst].replace(src).is_some() {
                return invalid(format!("`{}` has two incoming {i}-arrows", names[dst]));
            }
        }
        let graph = CrystalGraph {
            cartan,
            names,
            index,
            f,
            e,
        };
        for i in 0..size {
            for v in 0..graph.len() {
                // walking forward from any vertex must terminate
                let mut steps = 0;
                let mut current = v;
                while let Some(next) = graph.f[i][current] {
                    current = next;
                    steps += 1;
                    if steps > graph.len() {
                        return invalid(format!("{i}-arrows form a cycle through `{}`", graph.names[v]));
                    }
                }
            }
        }
        Ok(graph)
    }

    pub fn cartan(&self) -> &AffineCartanData {
        &self.cartan
    }

    pub fn affine_type(&self) -> AffineType {
        self.cartan.affine_type
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Number of arrow labels, `n + 1`.
    pub fn labels(&self) -> usize {
        self.f.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn vertex(&self, name: &str) -> Result<usize, CrystalError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| CrystalError::UnknownVertex(name.to_string()))
    }

    pub fn f(&self, i: usize, v: usize) -> Option<usize> {
        self.f[i][v]
    }

    pub fn e(&self, i: usize, v: usize) -> Option<usize> {
        self.e[i][v]
    }

    pub fn epsilon_i(&self, i: usize, v: usize) -> i64 {
        chain_length(&self.e[i], v)
    }

    pub fn phi_i(&self, i: usize, v: usize) -> i64 {
        chain_length(&self.f[i], v)
    }

    pub fn epsilon(&self, v: usize) -> WeightVector {
        WeightVector((0..self.labels()).map(|i| self.epsilon_i(i, v)).collect())
    }

    pub fn phi(&self, v: usize) -> WeightVector {
        WeightVector((0..self.labels()).map(|i| self.phi_i(i, v)).collect())
    }

    /// `g'`-weight `φ(b) - ε(b)`.
    pub fn weight(&self, v: usize) -> WeightVector {
        self.phi(v).sub(&self.epsilon(v))
    }

    /// `⟨ε(b), c⟩` with the table's central coefficients.
    pub fn level(&self, v: usize) -> i64 {
        self.epsilon(v).level(&self.cartan.central)
    }

    /// All arrows `(source, i, target)` ordered by label, then source.
    pub fn arrows(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (i, map) in self.f.iter().enumerate() {
            for (src, dst) in map.iter().enumerate() {
                if let Some(dst) = dst {
                    out.push((src, i, *dst));
                }
            }
        }
        out
    }

    /// Arrow set keyed by vertex names.
    pub fn named_arrows(&self) -> BTreeSet<(String, usize, String)> {
        self.arrows()
            .into_iter()
            .map(|(s, i, d)| (self.names[s].clone(), i, self.names[d].clone()))
            .collect()
    }

    /// Connected components of the underlying undirected graph using only
    /// arrows whose label is in `labels`. Components are sorted by their
    /// smallest vertex.
    pub fn components(&self, labels: &[usize]) -> Vec<Vec<usize>> {
        let mut component = vec![usize::MAX; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if component[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            component[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &i in labels {
                    for w in [self.f[i][v], self.e[i][v]].into_iter().flatten() {
                        if component[w] == usize::MAX {
                            component[w] = id;
                            members.push(w);
                            queue.push_back(w);
                        }
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let all: Vec<usize> = (0..self.labels()).collect();
        self.components(&all).len() == 1
    }

    /// Parses the line format `cartan <tag>`, `vertex <name>`, `arrow <src> <i> <dst>`.
    pub fn parse(text: &str) -> Result<Self, CrystalError> {
        let mut cartan: Option<AffineCartanData> = None;
        let mut names: Vec<String> = Vec::new();
        let mut seen: HashMap<String, usize> = HashMap::new();
        let mut arrows = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line_no = n + 1;
            let err = |message: String| CrystalError::Parse { line: line_no, message };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                ["cartan", tag] => {
                    if cartan.is_some() {
                        return Err(err("repeated cartan header".into()));
                    }
                    let t: AffineType = tag.parse().map_err(|e: CartanError| err(e.to_string()))?;
                    cartan = Some(builtin_cartan(t));
                }
                ["vertex", name] => {
                    if cartan.is_none() {
                        return Err(err("`vertex` before the `cartan` header".into()));
                    }
                    if seen.insert(name.to_string(), names.len()).is_some() {
                        return Err(err(format!("duplicate vertex `{name}`")));
                    }
                    names.push(name.to_string());
                }
                ["arrow", src, label, dst] => {
                    let lookup = |name: &str| {
                        seen.get(name)
                            .copied()
                            .ok_or_else(|| err(format!("unknown vertex `{name}`")))
                    };
                    let i: usize = label.parse().map_err(|_| err(format!("bad arrow label `{label}`")))?;
                    arrows.push((lookup(src)?, i, lookup(dst)?));
                }
                _ => return Err(err(format!("unrecognised line `{line}`"))),
            }
        }
        let cartan = cartan.ok_or(CrystalError::Parse {
            line: 0,
            message: "missing `cartan` header".into(),
        })?;
        CrystalGraph::new(cartan, names, &arrows)
    }

    pub fn render(&self) -> String {
        let mut out = format!("cartan {}\n", self.affine_type());
        for name in &self.names {
            out.push_str(&format!("vertex {name}\n"));
        }
        for (src, i, dst) in self.arrows() {
            out.push_str(&format!("arrow {} {i} {}\n", self.names[src], self.names[dst]));
        }
        out
    }
}

fn chain_length(map: &[Option<usize>], mut v: usize) -> i64 {
    let mut n = 0;
    while let Some(next) = map[v] {
        v = next;
        n += 1;
    }
    n
}

/// The shipped level-one crystals: `a1` (type A1^(1)) and `g2` (type G2^(2)).
pub fn builtin_crystal(tag: &str) -> Result<CrystalGraph, CrystalError> {
    let text = match tag.to_ascii_lowercase().as_str() {
        "a1" | "a1-level1" | "a1^(1)" => A1_LEVEL1,
        "g2" | "g2-level1" | "g2^(2)" | "g2-2" => G2_2_LEVEL1,
        _ => return Err(CrystalError::UnknownBuiltin(tag.to_string())),
    };
    Ok(CrystalGraph::parse(text).expect("built-in crystal parses"))
}

/// Source text of a built-in crystal.
pub fn builtin_crystal_source(tag: &str) -> Option<&'static str> {
    match tag {
        "a1" => Some(A1_LEVEL1),
        "g2" => Some(G2_2_LEVEL1),
        _ => None,
    }
}

/// `B1 ⊗ B2`: `f_i` acts on the left factor iff `φ_i(b1) > ε_i(b2)`.
///
/// Vertex `(b1, b2)` is stored at `b1 * |B2| + b2` and named `b1⊗b2`.
pub fn tensor(left: &CrystalGraph, right: &CrystalGraph) -> Result<CrystalGraph, CrystalError> {
    if left.cartan != right.cartan {
        return Err(CrystalError::CartanMismatch(left.affine_type(), right.affine_type()));
    }
    let width = right.len();
    let mut names = Vec::with_capacity(left.len() * width);
    for a in &left.names {
        for b in &right.names {
            names.push(format!("{a}{TENSOR}{b}"));
        }
    }
    let mut arrows = Vec::new();
    for i in 0..left.labels() {
        for b1 in 0..left.len() {
            for b2 in 0..width {
                let target = if left.phi_i(i, b1) > right.epsilon_i(i, b2) {
                    left.f(i, b1).map(|t| t * width + b2)
                } else {
                    right.f(i, b2).map(|t| b1 * width + t)
                };
                if let Some(t) = target {
                    arrows.push((b1 * width + b2, i, t));
                }
            }
        }
    }
    CrystalGraph::new(left.cartan.clone(), names, &arrows)
}

/// `e_i` on a tensor pair by its own rule: left iff `φ_i(b1) ≥ ε_i(b2)`.
///
/// Used to confirm that the `f` rule above has `e` as its inverse.
pub fn tensor_e(left: &CrystalGraph, right: &CrystalGraph, i: usize, b1: usize, b2: usize) -> Option<(usize, usize)> {
    if left.phi_i(i, b1) >= right.epsilon_i(i, b2) {
        left.e(i, b1).map(|t| (t, b2))
    } else {
        right.e(i, b2).map(|t| (b1, t))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_statistics() {
        let g = builtin_crystal("g2").unwrap();
        let psi = g.vertex("Ψ").unwrap();
        assert_eq!(g.phi(psi), WeightVector(vec![1, 0, 0]));
        assert_eq!(g.epsilon(psi), WeightVector(vec![1, 0, 0]));
        assert_eq!(g.level(psi), 1);
        let three_bar = g.vertex("3bar").unwrap();
        assert_eq!(g.level(three_bar), 4);
        assert_eq!(g.level(g.vertex("2").unwrap()), 3);
        let a1 = builtin_crystal("a1").unwrap();
        let a = a1.vertex("a").unwrap();
        assert_eq!(a1.epsilon(a).to_string(), "Λ0");
        assert_eq!(a1.phi(a).to_string(), "Λ1");
        assert_eq!(a1.level(a), 1);
    }

    #[test]
    fn weight_vector_display() {
        assert_eq!(WeightVector(vec![-2, 1, 0]).to_string(), "-2Λ0 + Λ1");
        assert_eq!(WeightVector(vec![0, 0, 0]).to_string(), "0");
        assert_eq!(WeightVector(vec![1, -2, 1]).to_string(), "Λ0 - 2Λ1 + Λ2");
    }

    #[test]
    fn a1_tensor_square() {
        let b = builtin_crystal("a1").unwrap();
        let bb = tensor(&b, &b).unwrap();
        assert_eq!(bb.len(), 4);
        let expected: BTreeSet<(String, usize, String)> = [
            ("a⊗a", 1, "b⊗a"),
            ("b⊗a", 1, "b⊗b"),
            ("b⊗b", 0, "a⊗b"),
            ("a⊗b", 0, "a⊗a"),
        ]
        .iter()
        .map(|&(s, i, d)| (s.to_string(), i, d.to_string()))
        .collect();
        assert_eq!(bb.named_arrows(), expected);
        assert!(bb.is_connected());
    }

    #[test]
    fn e_rule_inverts_f_rule() {
        for tag in ["a1", "g2"] {
            let b = builtin_crystal(tag).unwrap();
            let bb = tensor(&b, &b).unwrap();
            let n = b.len();
            for i in 0..b.labels() {
                for v in 0..bb.len() {
                    let expected = bb.e(i, v).map(|w| (w / n, w % n));
                    assert_eq!(tensor_e(&b, &b, i, v / n, v % n), expected);
                }
            }
        }
    }

    #[test]
    fn g2_tensor_square_components() {
        let b = builtin_crystal("g2").unwrap();
        let bb = tensor(&b, &b).unwrap();
        assert_eq!(bb.len(), 64);
        assert!(bb.is_connected());
        let mut sizes: Vec<usize> = bb.components(&[1, 2]).iter().map(Vec::len).collect();
        sizes.sort_unstable();
        // (7 + 1) ⊗ (7 + 1) = (1 + 7 + 14 + 27) + 7 + 7 + 1 as G2-crystals
        assert_eq!(sizes, vec![1, 1, 7, 7, 7, 14, 27]);
    }

    #[test]
    fn parse_round_trip() {
        for tag in ["a1", "g2"] {
            let b = builtin_crystal(tag).unwrap();
            assert_eq!(CrystalGraph::parse(&b.render()).unwrap(), b);
        }
    }

    #[test]
    fn parse_errors() {
        let err = |text: &str| CrystalGraph::parse(text).unwrap_err();
        assert!(matches!(err("vertex a"), CrystalError::Parse { line: 1, .. }));
        assert!(matches!(
            err("cartan A1^(1)\nvertex a\nvertex a"),
            CrystalError::Parse { line: 3, .. }
        ));
        assert!(matches!(
            err("cartan A1^(1)\nvertex a\narrow a 1 b"),
            CrystalError::Parse { line: 3, .. }
        ));
        assert!(matches!(
            err("cartan A1^(1)\nvertex a\nvertex b\narrow a 7 b"),
            CrystalError::Invalid(_)
        ));
        assert!(matches!(
            err("cartan A1^(1)\nvertex a\nvertex b\narrow a 1 b\narrow b 1 a"),
            CrystalError::Invalid(_)
        ));
        assert!(matches!(
            err("cartan A1^(1)\nvertex a\nvertex b\nvertex c\narrow a 1 b\narrow c 1 b"),
            CrystalError::Invalid(_)
        ));
        assert!(matches!(err("cartan X\n"), CrystalError::Parse { line: 1, .. }));
        assert!(matches!(err(""), CrystalError::Parse { line: 0, .. }));
        assert!(matches!(err("cartan A1^(1)\nfoo"), CrystalError::Parse { line: 2, .. }));
    }
}
