//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification finds a mismatch, 2 on
//! usage or input errors. Results go to standard output (or `--out`);
//! progress goes to standard error.

mod identities;

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::cartan::{lepowsky_factors, AffineType, CartanError};
use crate::crystal::{
    builtin_crystal, check_perfect, principal_colour_exponents, principal_t_exponent, tensor, wt_in_roots,
    CrystalError, CrystalGraph, WeightVector,
};
use crate::energy::{solve_energy, specialise_energy, DifferenceProfile, EnergyError, TableFormat};
use crate::partitions::{
    builtin_profile, coloured_colour_series, coloured_count_series, coloured_witnesses, congruence_series,
    PartitionError,
};
use crate::recursions::{self, RecursionError};
use crate::series::{ColourSet, SeriesError};

pub use identities::{g2_crystal_profile, g2_grounded, identity_legs, profile_legs, Leg, G2_RESIDUES, IDENTITIES};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Mismatch(_) => 1,
            CliError::Usage(_) | CliError::Input(_) => 2,
        }
    }
}

macro_rules! input_error {
    ($($t:ty),*) => {
        $(impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Input(e.to_string())
            }
        })*
    };
}

input_error!(
    SeriesError,
    CartanError,
    CrystalError,
    EnergyError,
    PartitionError,
    RecursionError,
    std::io::Error
);

#[derive(Debug, Parser)]
#[command(
    name = "crystal-identities",
    version,
    about = "Verify partition identities from perfect crystals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct Common {
    /// Truncation order N (coefficients of degree 0..=N)
    #[arg(long, default_value_t = 20, allow_negative_numbers = true)]
    pub order: i64,
    /// Output format: text or tsv
    #[arg(long, default_value = "text")]
    pub format: String,
    /// Write results to FILE instead of standard output
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args, Clone)]
pub struct CrystalSource {
    /// Crystal description file
    #[arg(long, value_name = "FILE", conflicts_with = "builtin")]
    pub crystal: Option<PathBuf>,
    /// Built-in crystal: g2 or a1
    #[arg(long = "type", value_name = "TAG", default_value = "g2")]
    pub builtin: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that every side of an identity agrees through q^N
    Verify {
        /// Built-in identity: g2, primc, dousse-lovejoy, rr1, rr2
        #[arg(long, required_unless_present = "profile")]
        identity: Option<String>,
        /// Profile file to check against --residues
        #[arg(long, value_name = "FILE", conflicts_with = "identity", requires = "residues")]
        profile: Option<PathBuf>,
        /// Residue classes r:m, comma separated
        #[arg(long, value_delimiter = ',')]
        residues: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Print the energy table of a crystal, or its specialised difference matrix
    EnergyMatrix {
        #[command(flatten)]
        source: CrystalSource,
        /// Normalisation LEFT,RIGHT,VALUE; defaults to H(g⊗g) = 0 for a constant ground g
        #[arg(long, value_name = "L,R,V")]
        normalise: Option<String>,
        /// Print the principally specialised difference profile
        #[arg(long)]
        specialise: bool,
        /// Emit the profile in the loadable file format
        #[arg(long, requires = "specialise")]
        profile_file: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Expand Lepowsky's product for a type and dominant weight
    Expand {
        /// Affine type: A1^(1), G2^(1), G2^(2)
        #[arg(long = "type", value_name = "TYPE")]
        affine_type: String,
        /// Coefficients of the fundamental weights, comma separated
        #[arg(long, value_delimiter = ',', default_value = "1,0")]
        weights: Vec<u32>,
        #[command(flatten)]
        common: Common,
    },
    /// Count, list or colour-track coloured partitions of a profile
    Enumerate {
        /// Built-in profile: g2, primc, dousse-lovejoy, rr1, rr2
        #[arg(long, value_name = "TAG", conflicts_with_all = ["profile", "residues"])]
        identity: Option<String>,
        /// Profile file
        #[arg(long, value_name = "FILE")]
        profile: Option<PathBuf>,
        /// Count partitions into residue classes r:m instead
        #[arg(long, value_delimiter = ',', conflicts_with = "profile")]
        residues: Vec<String>,
        /// List every partition of this weight
        #[arg(long, value_name = "N")]
        witnesses: Option<usize>,
        /// Print colour polynomials instead of counts
        #[arg(long)]
        track: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Run the P/R recursion system
    RecursionSeries {
        /// Dilate to a q-series with all colours set to 1
        #[arg(long)]
        specialise: bool,
        /// Print the refinement certificate for the t^2 coefficient
        #[arg(long)]
        certificate: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Describe a crystal: vertex statistics, tensor square, perfectness
    CrystalInfo {
        #[command(flatten)]
        source: CrystalSource,
        /// Level at which to check perfectness
        #[arg(long, default_value_t = 1)]
        level: i64,
        #[command(flatten)]
        common: Common,
    },
}

struct Context<'a> {
    out: String,
    err: &'a mut dyn Write,
}

impl Context<'_> {
    fn progress(&mut self, message: &str) {
        let _ = writeln!(self.err, "{message}");
    }
}

fn order(common: &Common) -> Result<usize, CliError> {
    usize::try_from(common.order)
        .map_err(|_| CliError::Usage(format!("--order must be non-negative, got {}", common.order)))
}

fn format(common: &Common) -> Result<TableFormat, CliError> {
    common
        .format
        .parse()
        .map_err(|e: EnergyError| CliError::Usage(e.to_string()))
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_crystal(source: &CrystalSource) -> Result<CrystalGraph, CliError> {
    match &source.crystal {
        Some(path) => {
            CrystalGraph::parse(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
        }
        None => builtin_crystal(&source.builtin).map_err(|e| CliError::Usage(e.to_string())),
    }
}

fn load_profile(path: &PathBuf) -> Result<DifferenceProfile, CliError> {
    DifferenceProfile::parse(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn parse_residues(items: &[String]) -> Result<Vec<(i64, i64)>, CliError> {
    items
        .iter()
        .map(|item| {
            let bad = || CliError::Usage(format!("residue `{item}` is not of the form r:m with m ≥ 1"));
            let (r, m) = item.split_once(':').ok_or_else(bad)?;
            let (r, m) = (
                r.trim().parse::<i64>().map_err(|_| bad())?,
                m.trim().parse::<i64>().map_err(|_| bad())?,
            );
            if m < 1 {
                return Err(bad());
            }
            Ok((r, m))
        })
        .collect()
}

/// The unique vertex with `ε(g) = φ(g) = Λ_0`, if any.
fn constant_ground(crystal: &CrystalGraph) -> Option<usize> {
    let lambda0 = WeightVector::fundamental(crystal.labels(), 0);
    let found: Vec<usize> = (0..crystal.len())
        .filter(|&v| crystal.epsilon(v) == lambda0 && crystal.phi(v) == lambda0)
        .collect();
    (found.len() == 1).then(|| found[0])
}

fn normalisation(crystal: &CrystalGraph, spec: Option<&str>) -> Result<(usize, usize, i64), CliError> {
    match spec {
        Some(text) => {
            let parts: Vec<&str> = text.split(',').map(str::trim).collect();
            let [l, r, v] = parts.as_slice() else {
                return Err(CliError::Usage(format!(
                    "--normalise expects LEFT,RIGHT,VALUE, got `{text}`"
                )));
            };
            let value = v
                .parse()
                .map_err(|_| CliError::Usage(format!("`{v}` is not an integer")))?;
            let vertex = |name: &str| crystal.vertex(name).map_err(|e| CliError::Usage(e.to_string()));
            Ok((vertex(l)?, vertex(r)?, value))
        }
        None => constant_ground(crystal).map(|g| (g, g, 0)).ok_or_else(|| {
            CliError::Usage("the crystal has no constant ground state; pass --normalise LEFT,RIGHT,VALUE".into())
        }),
    }
}

fn cmd_verify(
    ctx: &mut Context,
    identity: Option<&str>,
    profile: Option<&PathBuf>,
    residues: &[String],
    common: &Common,
) -> Result<(), CliError> {
    let n = order(common)?;
    let format = format(common)?;
    let legs = match (identity, profile) {
        (Some(tag), _) => {
            ctx.progress(&format!("verifying {tag} through q^{n}"));
            let err = &mut *ctx.err;
            identity_legs(tag, n, &mut |step| {
                let _ = writeln!(err, "  computing {step}");
            })?
        }
        (None, Some(path)) => profile_legs(&load_profile(path)?, &parse_residues(residues)?, n)?,
        (None, None) => return Err(CliError::Usage("pass --identity or --profile".into())),
    };
    let separator = if format == TableFormat::Tsv { "\t" } else { "  " };
    let header: Vec<&str> = std::iter::once("n")
        .chain(legs.iter().map(|l| l.name))
        .chain(["status"])
        .collect();
    let _ = writeln!(ctx.out, "{}", header.join(separator));
    let mut mismatch = None;
    for d in 0..=n {
        let values: Vec<String> = legs
            .iter()
            .map(|l| l.series.coefficients()[d].evaluate_at_one().to_string())
            .collect();
        let agree = legs
            .iter()
            .all(|l| l.series.coefficients()[d] == legs[0].series.coefficients()[d]);
        let _ = writeln!(
            ctx.out,
            "{d}{separator}{}{separator}{}",
            values.join(separator),
            if agree { "ok" } else { "MISMATCH" }
        );
        if !agree && mismatch.is_none() {
            let detail: Vec<String> = legs
                .iter()
                .map(|l| format!("{} = {}", l.name, l.series.coefficients()[d]))
                .collect();
            mismatch = Some(format!("mismatch at degree {d}: {}", detail.join(", ")));
        }
    }
    match mismatch {
        Some(m) => Err(CliError::Mismatch(m)),
        None => {
            let _ = writeln!(ctx.out, "all {} sides agree through degree {n}", legs.len());
            Ok(())
        }
    }
}

fn cmd_energy_matrix(
    ctx: &mut Context,
    source: &CrystalSource,
    normalise: Option<&str>,
    specialise: bool,
    profile_file: bool,
    common: &Common,
) -> Result<(), CliError> {
    let format = format(common)?;
    let crystal = load_crystal(source)?;
    let (left, right, value) = normalisation(&crystal, normalise)?;
    let energy = solve_energy(&crystal, (left, right), value)?;
    if !specialise {
        ctx.out.push_str(&energy.render(format));
        return Ok(());
    }
    let ground = constant_ground(&crystal)
        .ok_or_else(|| CliError::Usage("specialisation needs a constant ground state Λ0".into()))?;
    if energy.get(ground, ground) != 0 {
        return Err(CliError::Usage(
            "specialisation needs the normalisation H(g⊗g) = 0".into(),
        ));
    }
    if crystal.len() > 26 {
        return Err(CliError::Input(
            "at most 26 vertices can be given letter colours".into(),
        ));
    }
    let exponents = principal_colour_exponents(&wt_in_roots(&crystal, ground)?);
    let d0 = crystal.cartan().d0() as u32;
    let t = principal_t_exponent(crystal.cartan()) / d0;
    let colours = ColourSet::letters(crystal.len());
    let profile = specialise_energy(&energy, &colours, &exponents, t)?;
    if profile_file {
        ctx.out.push_str(&profile.render());
        return Ok(());
    }
    if format == TableFormat::Text {
        for (v, e) in exponents.iter().enumerate() {
            let _ = writeln!(
                ctx.out,
                "colour {} = vertex {} -> q^{e}",
                colours.name(v),
                crystal.name(v)
            );
        }
        let _ = writeln!(ctx.out, "t -> q^{t}");
    }
    ctx.out.push_str(&profile.render_table(format));
    Ok(())
}

fn cmd_expand(ctx: &mut Context, affine_type: &str, weights: &[u32], common: &Common) -> Result<(), CliError> {
    let n = order(common)?;
    let format = format(common)?;
    let t: AffineType = affine_type
        .parse()
        .map_err(|e: CartanError| CliError::Usage(e.to_string()))?;
    let size = crate::cartan::builtin_cartan(t).size();
    let mut weight = weights.to_vec();
    weight.resize(size.max(weight.len()), 0);
    if weight.len() != size {
        return Err(CliError::Usage(format!(
            "{t} has {size} fundamental weights, got {}",
            weights.len()
        )));
    }
    let product = lepowsky_factors(t, &weight).map_err(|e| match e {
        CartanError::Unsupported(dual) => CliError::Usage(format!(
            "{t} is not supported: its product needs the roots of {dual}, which are not tabulated"
        )),
        e => CliError::Usage(e.to_string()),
    })?;
    let series = product.expand(n)?;
    match format {
        TableFormat::Text => {
            let _ = writeln!(ctx.out, "product: {product}");
            let _ = writeln!(ctx.out, "series: {series}");
        }
        TableFormat::Tsv => {
            let _ = writeln!(ctx.out, "# {product}");
            ctx.out.push_str(&series.render_lines());
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_enumerate(
    ctx: &mut Context,
    identity: Option<&str>,
    profile: Option<&PathBuf>,
    residues: &[String],
    witnesses: Option<usize>,
    track: bool,
    common: &Common,
) -> Result<(), CliError> {
    let n = order(common)?;
    if !residues.is_empty() {
        let series = congruence_series(&parse_residues(residues)?, n)?;
        ctx.out.push_str(&series.render_lines());
        return Ok(());
    }
    let profile = match (identity, profile) {
        (Some(tag), _) => builtin_profile(tag).map_err(|e| CliError::Usage(e.to_string()))?,
        (None, Some(path)) => load_profile(path)?,
        (None, None) => return Err(CliError::Usage("pass --identity, --profile or --residues".into())),
    };
    if let Some(w) = witnesses {
        for partition in coloured_witnesses(&profile, w) {
            let _ = writeln!(ctx.out, "{}", partition.render(profile.colours()));
        }
        return Ok(());
    }
    if track {
        ctx.out.push_str(&coloured_colour_series(&profile, n).render_lines());
    } else {
        ctx.out.push_str(&coloured_count_series(&profile, n).render_lines());
    }
    Ok(())
}

fn cmd_recursion_series(
    ctx: &mut Context,
    specialise: bool,
    certificate: bool,
    common: &Common,
) -> Result<(), CliError> {
    let n = order(common)?;
    if certificate {
        let cert = recursions::refinement_impossible()?;
        ctx.out.push_str(&cert.render(&recursions::colours()));
        return Ok(());
    }
    ctx.progress(&format!("running recursions through degree {n}"));
    let series = if specialise {
        recursions::dilated_series(n)?.render_lines()
    } else {
        recursions::total_series(n)?.render_lines()
    };
    ctx.out.push_str(&series);
    Ok(())
}

fn cmd_crystal_info(ctx: &mut Context, source: &CrystalSource, level: i64, common: &Common) -> Result<(), CliError> {
    let format = format(common)?;
    let crystal = load_crystal(source)?;
    let sep = if format == TableFormat::Tsv { "\t" } else { " | " };
    let _ = writeln!(ctx.out, "type {}: {} vertices", crystal.affine_type(), crystal.len());
    let _ = writeln!(ctx.out, "{}", ["vertex", "level", "phi", "eps", "weight"].join(sep));
    for v in 0..crystal.len() {
        let _ = writeln!(
            ctx.out,
            "{}",
            [
                crystal.name(v).to_string(),
                crystal.level(v).to_string(),
                crystal.phi(v).to_string(),
                crystal.epsilon(v).to_string(),
                crystal.weight(v).to_string(),
            ]
            .join(sep)
        );
    }
    let square = tensor(&crystal, &crystal)?;
    let finite: Vec<usize> = (1..crystal.labels()).collect();
    let mut sizes: Vec<usize> = square.components(&finite).iter().map(Vec::len).collect();
    sizes.sort_unstable();
    let _ = writeln!(
        ctx.out,
        "tensor square: {} vertices, connected: {}",
        square.len(),
        if square.is_connected() { "yes" } else { "no" }
    );
    let size_list: Vec<String> = sizes.iter().map(usize::to_string).collect();
    let _ = writeln!(
        ctx.out,
        "components without 0-arrows: {} (sizes {})",
        sizes.len(),
        size_list.join(" ")
    );
    if let Some(g) = constant_ground(&crystal) {
        if let Ok(coords) = wt_in_roots(&crystal, g) {
            let _ = writeln!(ctx.out, "constant ground state: {}", crystal.name(g));
            for (v, c) in coords.iter().enumerate() {
                let _ = writeln!(ctx.out, "wt {} = {c}", crystal.name(v));
            }
        }
    }
    ctx.out.push_str(&check_perfect(&crystal, level)?.render(&crystal));
    Ok(())
}

fn dispatch(cli: &Cli, ctx: &mut Context) -> Result<Option<PathBuf>, CliError> {
    match &cli.command {
        Command::Verify {
            identity,
            profile,
            residues,
            common,
        } => {
            let result = cmd_verify(ctx, identity.as_deref(), profile.as_ref(), residues, common);
            // the table is still written when the check fails
            result.map(|_| common.out.clone()).inspect_err(|_| {
                if let Some(path) = &common.out {
                    let _ = std::fs::write(path, &ctx.out);
                    ctx.out.clear();
                }
            })
        }
        Command::EnergyMatrix {
            source,
            normalise,
            specialise,
            profile_file,
            common,
        } => cmd_energy_matrix(ctx, source, normalise.as_deref(), *specialise, *profile_file, common)
            .map(|_| common.out.clone()),
        Command::Expand {
            affine_type,
            weights,
            common,
        } => cmd_expand(ctx, affine_type, weights, common).map(|_| common.out.clone()),
        Command::Enumerate {
            identity,
            profile,
            residues,
            witnesses,
            track,
            common,
        } => cmd_enumerate(
            ctx,
            identity.as_deref(),
            profile.as_ref(),
            residues,
            *witnesses,
            *track,
            common,
        )
        .map(|_| common.out.clone()),
        Command::RecursionSeries {
            specialise,
            certificate,
            common,
        } => cmd_recursion_series(ctx, *specialise, *certificate, common).map(|_| common.out.clone()),
        Command::CrystalInfo { source, level, common } => {
            cmd_crystal_info(ctx, source, *level, common).map(|_| common.out.clone())
        }
    }
}

/// Runs the command line `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = stdout.write_all(rendered.as_bytes());
            } else {
                let _ = stderr.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    let mut ctx = Context {
        out: String::new(),
        err: stderr,
    };
    let result = dispatch(&cli, &mut ctx);
    let written = match &result {
        Ok(Some(path)) => {
            std::fs::write(path, &ctx.out).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
        }
        _ => stdout.write_all(ctx.out.as_bytes()).map_err(CliError::from),
    };
    match result.and(written) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(ctx.err, "error: {e}");
            e.exit_code()
        }
    }
}
