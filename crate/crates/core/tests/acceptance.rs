//! Acceptance run: one line per criterion, exact comparisons only.
//!
//! `PASS` and `FAIL` mean what they say. `DEVIATION` marks a criterion whose
//! literal wording contradicts a verified computation; the line states what
//! was expected, what was measured and what was checked instead. Any `FAIL`
//! makes the run exit non-zero.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use crystal_identities::cartan::{
    lepowsky_product, positive_root_families, specialise_families, AffineType, SpecialisationVector,
};
use crystal_identities::crystal::{builtin_crystal, principal_colour_exponents, tensor, wt_in_roots};
use crystal_identities::energy::{path_series, solve_energy, specialise_energy};
use crystal_identities::partitions::{
    builtin_profile, dousse_lovejoy_product, enumerate_coloured, enumerate_congruence, grounded_series,
    partition_numbers, refined_count_dl,
};
use crystal_identities::recursions::{dilated_series, refinement_impossible, total_series};
use crystal_identities::series::{
    pochhammer_expand, pochhammer_expand_coloured, rr_sum_side, ColourSet, IntegerSeries, PochhammerFactor,
    PochhammerProduct, Variable,
};

const G2_ENERGY: [[i64; 8]; 8] = [
    [2, 1, 1, 0, 0, 0, 0, 1],
    [2, 2, 1, 1, 1, 0, 0, 1],
    [2, 2, 2, 1, 1, 1, 0, 1],
    [2, 2, 2, 1, 1, 1, 0, 1],
    [2, 2, 2, 2, 2, 1, 1, 1],
    [2, 2, 2, 2, 2, 2, 1, 1],
    [2, 2, 2, 2, 2, 2, 2, 1],
    [1, 1, 1, 1, 1, 1, 1, 0],
];

const G2_DIFFERENCES: [[i64; 8]; 8] = [
    [8, 5, 6, 3, 4, 5, 6, 7],
    [7, 8, 5, 6, 7, 4, 5, 6],
    [6, 7, 8, 5, 6, 7, 4, 5],
    [5, 6, 7, 4, 5, 6, 3, 4],
    [4, 5, 6, 7, 8, 5, 6, 3],
    [3, 4, 5, 6, 7, 8, 5, 2],
    [2, 3, 4, 5, 6, 7, 8, 1],
    [1, 2, 3, 4, 5, 6, 7, 0],
];

/// Colours a..h = vertices 1, 2, 3, 0, 3bar, 2bar, 1bar, Ψ.
const EXPONENTS: [i64; 8] = [-3, -2, -1, 0, 1, 2, 3, 0];

/// Residue mod 4 per colour a..h.
const RESIDUES: [i64; 8] = [1, 2, 3, 0, 1, 2, 3, 0];

const MAIN_COEFFICIENTS: [i64; 51] = [
    1, 1, 1, 1, 2, 3, 3, 4, 6, 7, 8, 10, 14, 17, 19, 23, 30, 36, 41, 49, 61, 72, 82, 97, 119, 139, 158, 184, 220, 256,
    291, 337, 397, 457, 518, 596, 695, 796, 899, 1027, 1186, 1351, 1523, 1731, 1982, 2246, 2524, 2856, 3252, 3669,
    4111,
];

/// Vertex, level, φ and ε (coefficients of Λ0, Λ1, Λ2) in the reference
/// table.
type VertexRow = (&'static str, i64, [i64; 3], [i64; 3]);

const REFERENCE_TABLE: [VertexRow; 8] = [
    ("1", 2, [0, 1, 0], [2, 0, 0]),
    ("2", 3, [0, 0, 1], [1, 1, 0]),
    ("3", 3, [0, 2, 0], [1, 0, 1]),
    ("0", 2, [0, 1, 0], [0, 1, 0]),
    ("3bar", 4, [1, 0, 1], [0, 0, 2]),
    ("2bar", 3, [1, 1, 0], [0, 0, 1]),
    ("1bar", 2, [2, 0, 0], [0, 1, 0]),
    ("Ψ", 1, [1, 0, 0], [1, 0, 0]),
];

/// The same table with ε(3bar) read off the weight column and the level of
/// 2bar recomputed from ε with central element h0 + 2h1 + 2h2.
const CORRECTED_TABLE: [VertexRow; 8] = [
    ("1", 2, [0, 1, 0], [2, 0, 0]),
    ("2", 3, [0, 0, 1], [1, 1, 0]),
    ("3", 3, [0, 2, 0], [1, 0, 1]),
    ("0", 2, [0, 1, 0], [0, 1, 0]),
    ("3bar", 4, [1, 0, 1], [0, 2, 0]),
    ("2bar", 2, [1, 1, 0], [0, 0, 1]),
    ("1bar", 2, [2, 0, 0], [0, 1, 0]),
    ("Ψ", 1, [1, 0, 0], [1, 0, 0]),
];

type Outcome = Result<Verdict, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

enum Verdict {
    Pass(String),
    Deviation(String),
}

fn ensure(condition: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if condition {
        Ok(())
    } else {
        Err(message())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn energy_table() -> Outcome {
    let b = builtin_crystal("g2").map_err(err)?;
    let psi = b.vertex("Ψ").map_err(err)?;
    let h = solve_energy(&b, (psi, psi), 0).map_err(err)?;
    let mut checked = 0;
    for (i, row) in G2_ENERGY.iter().enumerate() {
        for (j, &expected) in row.iter().enumerate() {
            let got = h.get(i, j);
            ensure(got == expected, || {
                format!("H({} ⊗ {}) = {got}, expected {expected}", b.name(i), b.name(j))
            })?;
            checked += 1;
        }
    }
    Ok(Verdict::Pass(format!("{checked} of 64 entries equal")))
}

fn difference_matrix() -> Outcome {
    let b = builtin_crystal("g2").map_err(err)?;
    let psi = b.vertex("Ψ").map_err(err)?;
    let h = solve_energy(&b, (psi, psi), 0).map_err(err)?;
    let derived = principal_colour_exponents(&wt_in_roots(&b, psi).map_err(err)?);
    ensure(derived == EXPONENTS, || {
        format!("exponents from root coordinates {derived:?}")
    })?;
    let colours = ColourSet::letters(8);
    let profile = specialise_energy(&h, &colours, &EXPONENTS, 4).map_err(err)?;
    for (i, row) in G2_DIFFERENCES.iter().enumerate() {
        ensure(profile.matrix()[i] == row[..], || {
            format!("row {} is {:?}", colours.name(i), profile.matrix()[i])
        })?;
    }
    for (c, &r) in RESIDUES.iter().enumerate() {
        let got = profile.residue(c).map(|x| (x.residue, x.modulus));
        ensure(got == Some((r, 4)), || {
            format!("residue of {} is {got:?}", colours.name(c))
        })?;
    }
    let expected: BTreeSet<(i64, usize)> = [(1, 4), (2, 5), (3, 6)].into();
    ensure(*profile.forbidden() == expected, || {
        format!("forbidden {:?}", profile.forbidden())
    })?;
    Ok(Verdict::Pass(
        "64 entries, 8 residues mod 4, forbidden {1_e, 2_f, 3_g}".into(),
    ))
}

fn main_identity() -> Outcome {
    let profile = builtin_profile("g2").map_err(err)?;
    let classes = [(1, 6), (5, 6), (0, 4)];
    for n in 0..=40 {
        let d = enumerate_coloured(&profile, n);
        let c = enumerate_congruence(&classes, n).map_err(err)?;
        ensure(d == c, || format!("n = {n}: coloured {d}, congruence {c}"))?;
    }
    let dilated = dilated_series(50).map_err(err)?;
    let reference = IntegerSeries::from_integers(Variable::Q, &MAIN_COEFFICIENTS, 50);
    if let Some(n) = dilated.first_mismatch(&reference) {
        return Err(format!("dilated coefficient of q^{n} is {}", dilated.coefficients()[n]));
    }
    Ok(Verdict::Pass(
        "coloured = congruence for n ≤ 40; dilated recursion = 1, 1, 1, 1, 2, ..., 4111 for n ≤ 50".into(),
    ))
}

fn factors(spec: &[(u32, u32, i32)]) -> Result<PochhammerProduct, String> {
    let list = spec
        .iter()
        .map(|&(a, n, p)| PochhammerFactor::new(a, n, p).map_err(err))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PochhammerProduct::from_factors(&list).collect())
}

fn lepowsky() -> Outcome {
    const ORDER: usize = 200;
    let families = positive_root_families(AffineType::G2_1).map_err(err)?;
    for (s, target) in [
        (vec![1, 1, 1], vec![(1, 1, 2), (5, 6, 1), (1, 6, 1)]),
        (vec![2, 1, 1], vec![(1, 1, 2)]),
    ] {
        let spec = SpecialisationVector::new(s.clone()).map_err(err)?;
        let collected = PochhammerProduct::from_factors(&specialise_families(&families, &spec).map_err(err)?).collect();
        let target = factors(&target)?;
        ensure(collected == target, || format!("F_{s:?} D = {collected}"))?;
        // the factored forms agree; compare expansions from the raw factor list as well
        let raw = pochhammer_expand(&specialise_families(&families, &spec).map_err(err)?, ORDER).map_err(err)?;
        ensure(raw == target.expand(ORDER).map_err(err)?, || {
            format!("F_{s:?} D differs as a series")
        })?;
    }
    for (weight, target) in [
        ([1, 0], vec![(1, 2, -1)]),
        ([3, 0], vec![(1, 2, -1), (2, 5, -1), (3, 5, -1)]),
    ] {
        let got = lepowsky_product(AffineType::A1_1, &weight, ORDER).map_err(err)?;
        let expected = factors(&target)?.expand(ORDER).map_err(err)?;
        if let Some(n) = got.first_mismatch(&expected) {
            return Err(format!("A1 weight {weight:?} differs at q^{n}"));
        }
    }
    Ok(Verdict::Pass(
        "G2^(1) F_1 D and F_(2,1,1) D collected, A1 Λ0 and 3Λ0 products equal through q^200".into(),
    ))
}

fn rogers_ramanujan() -> Outcome {
    for (variant, classes) in [(1u8, [1, 4]), (2, [2, 3])] {
        let sum = rr_sum_side(variant, 100).map_err(err)?;
        let product = factors(&[(classes[0], 5, -1), (classes[1], 5, -1)])?
            .expand(100)
            .map_err(err)?;
        if let Some(n) = sum.first_mismatch(&product) {
            return Err(format!("variant {variant} differs at q^{n}"));
        }
    }
    Ok(Verdict::Pass(
        "both sum sides equal their products through q^100".into(),
    ))
}

fn primc() -> Outcome {
    let profile = builtin_profile("primc").map_err(err)?;
    let p = partition_numbers(30);
    for n in 0..=30 {
        let d = enumerate_coloured(&profile, n);
        ensure(d == p.coefficients()[n], || {
            format!("d({n}) = {d}, p({n}) = {}", p.coefficients()[n])
        })?;
    }
    // the matrix and parities alone also admit the part 1_d
    let literal = profile.without_forbidden((1, 3));
    let extra = enumerate_coloured(&literal, 1);
    Ok(Verdict::Pass(format!(
        "d(n) = p(n) for n ≤ 30 with 1_d excluded by the odd dilation 2k+1, k ≥ 1 (without that rule d(1) = {extra})"
    )))
}

fn dousse_lovejoy() -> Outcome {
    let refined = refined_count_dl(12).to_series();
    let product = dousse_lovejoy_product(12).map_err(err)?;
    if let Some(n) = refined.first_mismatch(&product) {
        return Err(format!(
            "q^{n}: enumeration {}, product {}",
            refined.coefficients()[n],
            product.coefficients()[n]
        ));
    }
    let terms: usize = product.coefficients().iter().map(|c| c.len()).sum();
    Ok(Verdict::Pass(format!(
        "equal through q^12 in a, c, d ({terms} monomials)"
    )))
}

fn triple_agreement() -> Outcome {
    const N: usize = 6;
    let b = builtin_crystal("g2").map_err(err)?;
    let psi = b.vertex("Ψ").map_err(err)?;
    let h = solve_energy(&b, (psi, psi), 0).map_err(err)?;
    let colours = ColourSet::letters(8);
    let recursion = total_series(N).map_err(err)?;
    let grounded = grounded_series(&h, psi, &colours, N).map_err(err)?;
    if let Some(n) = recursion.first_mismatch(&grounded) {
        return Err(format!("recursion and grounded differ at t^{n}"));
    }
    let counts: Vec<usize> = (1..=2).map(|d| recursion.coefficients()[d].len()).collect();
    ensure(counts == [8, 17], || format!("t^1, t^2 monomial counts {counts:?}"))?;
    let certificate = refinement_impossible().map_err(err)?;
    ensure(certificate.impossible() && !certificate.missing.is_empty(), || {
        "refinement certificate empty".into()
    })?;

    let paths = path_series(&h, &b, psi, &colours, N).map_err(err)?;
    let equal_raw = paths == grounded;
    let ground_parts = pochhammer_expand_coloured(&[PochhammerFactor::new(1, 1, -1).map_err(err)?], &colours, N)
        .map_err(err)?
        .with_variable(Variable::T);
    let with_ground = paths.multiply(&ground_parts).map_err(err)?;
    let h_free = grounded.set_colours_to_one(&[7]);
    if let Some(n) = with_ground.first_mismatch(&h_free) {
        return Err(format!("paths × 1/(t;t) and grounded (h = 1) differ at t^{n}"));
    }
    let detail = format!(
        "recursion = grounded as colour series to t^{N}; t^1, t^2 have 8 and 17 monomials; certificate misses {} products; \
         paths equal grounded only after × 1/(t;t)_inf with h = 1 (raw equality: {equal_raw})",
        certificate.missing.len()
    );
    if equal_raw {
        Ok(Verdict::Pass(detail))
    } else {
        Ok(Verdict::Deviation(detail))
    }
}

fn crystal_structure() -> Outcome {
    let b = builtin_crystal("g2").map_err(err)?;
    let square = tensor(&b, &b).map_err(err)?;
    ensure(square.len() == 64, || format!("{} vertices", square.len()))?;
    ensure(square.is_connected(), || "B ⊗ B is not connected".into())?;
    let mut sizes: Vec<usize> = square.components(&[1, 2]).iter().map(Vec::len).collect();
    sizes.sort_unstable();
    // (7 + 1) ⊗ (7 + 1) = (1 + 7 + 14 + 27) + 7 + 7 + 1 for finite G2
    ensure(sizes == [1, 1, 7, 7, 7, 14, 27], || {
        format!("component sizes {sizes:?}")
    })?;

    let mut reference_diffs = Vec::new();
    for (row, reference) in CORRECTED_TABLE.iter().zip(REFERENCE_TABLE) {
        let (name, level, phi, eps) = *row;
        let v = b.vertex(name).map_err(err)?;
        let got = (
            b.level(v),
            b.phi(v).coefficients().to_vec(),
            b.epsilon(v).coefficients().to_vec(),
        );
        ensure(got == (level, phi.to_vec(), eps.to_vec()), || {
            format!("vertex {name}: {got:?}")
        })?;
        if reference.1 != level {
            reference_diffs.push(format!("level({name}) reference {} computed {level}", reference.1));
        }
        if reference.3 != eps {
            reference_diffs.push(format!("ε({name}) reference {:?} computed {eps:?}", reference.3));
        }
    }
    let detail = format!(
        "64 vertices, connected; expected 6 finite components, measured {} with sizes {sizes:?}; \
         table rows match except {}",
        sizes.len(),
        reference_diffs.join(", ")
    );
    if sizes.len() == 6 && reference_diffs.is_empty() {
        Ok(Verdict::Pass(detail))
    } else {
        Ok(Verdict::Deviation(detail))
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("energy table", Duration::from_secs(1), energy_table),
        ("difference matrix", Duration::from_secs(1), difference_matrix),
        ("main identity", Duration::from_secs(60), main_identity),
        ("Lepowsky products", Duration::from_secs(5), lepowsky),
        ("Rogers-Ramanujan", Duration::from_secs(2), rogers_ramanujan),
        ("Primc", Duration::from_secs(30), primc),
        ("Dousse-Lovejoy refinement", Duration::from_secs(60), dousse_lovejoy),
        ("triple agreement", Duration::from_secs(30), triple_agreement),
        ("crystal structure", Duration::from_secs(1), crystal_structure),
    ];
    let (mut passed, mut deviations, mut failed) = (0, 0, 0);
    for (index, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let timing = format!("{:.3}s of {}s", elapsed.as_secs_f64(), limit.as_secs());
        let (label, detail) = match outcome {
            Ok(_) if elapsed > *limit => ("FAIL", format!("too slow: {timing}")),
            Ok(Verdict::Pass(d)) => ("PASS", d),
            Ok(Verdict::Deviation(d)) => ("DEVIATION", d),
            Err(d) => ("FAIL", d),
        };
        match label {
            "PASS" => passed += 1,
            "DEVIATION" => deviations += 1,
            _ => failed += 1,
        }
        println!("{label} criterion {} ({name}, {timing}): {detail}", index + 1);
    }
    println!("acceptance: {passed} pass, {deviations} deviation, {failed} fail");
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
