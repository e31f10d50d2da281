//! Command-line surface for the bilrank toolkit: build groups, compute
//! character degrees and bound reports, analyze modular radicals, search
//! and verify bilinear algorithms, and benchmark multiplication
//! strategies.
//!
//! Every command writes one machine-readable JSON envelope per run to
//! standard output (stable key order, byte-identical across repeated runs
//! with the same flags and seed); human diagnostics and timings go to
//! standard error. Exit codes: 0 success, 1 usage, 2 validation failure,
//! 3 feasibility refusal.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use bilrank::algebra::{
    augmentation_radical, parse_algebra_file, radical_powers_generic, AlgebraError,
    FiniteDimAlgebra, ParsedAlgebra, RadicalProfile,
};
use bilrank::bilinear::{
    brute_force_rank, format_algorithm_file, parse_algorithm_file, BilinearError,
    ParsedAlgorithm, RankSearchResult, Verification,
};
use bilrank::bounds::{
    self, modular_blrad, modular_coefficient, omega_sum_entries, schonhage_root,
    upper_estimates, BoundEntry, BoundKind, BoundReport, BoundValue, BoundsError, OmegaParam,
};
use bilrank::degrees::{degrees_catalog, degrees_dixon, DegreesError};
use bilrank::dft::DftError;
use bilrank::fastmul::{
    builtin_s3_map, decomposed_mul, dft_map, naive_count, naive_mul, ntt_count, ntt_mul,
    opcount_compare, parse_map_file, FastmulError, ParsedMap, VerifiedMap,
};
use bilrank::field::{Field, FieldError, FieldSpec, PrimeField, Rationals};
use bilrank::group::{build_group, FiniteGroup, GroupError, GroupSpec};

#[derive(Parser)]
#[command(
    name = "bilrank",
    version,
    about = "Structure and bilinear complexity of finite group algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structural facts about a group: order, classes, center, exponent,
    /// Sylow normality per prime divisor.
    Info {
        /// Group spec: C:n, A:m1,m2,..., D:n, S:n, Q8, GL2:q, SL2:q, F:p, file:<path>
        spec: String,
    },
    /// Character degrees and the full bound report for a semisimple group
    /// algebra (characteristic 0).
    Bounds {
        spec: String,
        /// Matrix-multiplication exponent for conditional entries.
        #[arg(long, default_value_t = 2.3727)]
        omega: f64,
        /// Degree computation route.
        #[arg(long, value_enum, default_value_t = DegreeMethod::Dixon)]
        method: DegreeMethod,
        /// Division-algebra dimensions d_1,...,d_t for the upper witness
        /// (defaults to all 1, the split case).
        #[arg(long, value_delimiter = ',')]
        d_list: Option<Vec<u64>>,
    },
    /// Modular radical analysis at a prime p dividing the order.
    Radical {
        spec: String,
        /// Characteristic of the ground field.
        #[arg(short)]
        p: u64,
    },
    /// Exhaustive minimal-rank search on a small algebra file.
    RankSearch {
        algebra_file: PathBuf,
        /// Largest length to search.
        #[arg(long)]
        max: usize,
        /// Write the witness algorithm to this path.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Verify a bilinear algorithm file against an algebra file.
    Verify {
        algorithm_file: PathBuf,
        algebra_file: PathBuf,
    },
    /// Multiply two seeded random group-algebra elements, cross-checking
    /// strategies and counting bilinear multiplications.
    Mul {
        spec: String,
        /// Ground field: Q or a prime.
        #[arg(long)]
        field: String,
        #[arg(long, value_enum, default_value_t = MulMethod::Compare)]
        method: MulMethod,
        /// Decomposition map file for the decomposed strategy.
        #[arg(long)]
        map: Option<PathBuf>,
        /// Print wall-clock timings per strategy to standard error.
        #[arg(long)]
        bench: bool,
        /// Seed for the random inputs.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DegreeMethod {
    Dixon,
    Catalog,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MulMethod {
    Naive,
    Ntt,
    Decomposed,
    Compare,
}

// ---------------------------------------------------------------------------
// Error classification → exit codes
// ---------------------------------------------------------------------------

#[derive(Debug)]
enum CliError {
    Validation(String),
    Infeasible(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Validation(m) => write!(f, "{m}"),
            CliError::Infeasible(m) => write!(f, "infeasible: {m}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Infeasible(_) => 3,
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> CliError {
        match e {
            GroupError::OrderTooLarge(_) => CliError::Infeasible(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

impl From<DegreesError> for CliError {
    fn from(e: DegreesError) -> CliError {
        match e {
            DegreesError::NoCatalog(_)
            | DegreesError::NoSuitablePrime { .. }
            | DegreesError::SymmetricTooLarge { .. } => CliError::Infeasible(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> CliError {
        match e {
            AlgebraError::SylowNotNormal { .. } | AlgebraError::CharacteristicCoprime { .. } => {
                CliError::Infeasible(e.to_string())
            }
            _ => CliError::Validation(e.to_string()),
        }
    }
}

impl From<BilinearError> for CliError {
    fn from(e: BilinearError) -> CliError {
        match e {
            BilinearError::SearchInfeasible(_)
            | BilinearError::FieldTooSmall { .. }
            | BilinearError::MatrixSizeCap { .. } => CliError::Infeasible(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

impl From<DftError> for CliError {
    fn from(e: DftError) -> CliError {
        match e {
            DftError::NotPrime(_) => CliError::Validation(e.to_string()),
            _ => CliError::Infeasible(e.to_string()),
        }
    }
}

impl From<FastmulError> for CliError {
    fn from(e: FastmulError) -> CliError {
        match e {
            FastmulError::DivisionBlock | FastmulError::NoBuiltinMap(_) => {
                CliError::Infeasible(e.to_string())
            }
            FastmulError::Dft(d) => CliError::from(d),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

impl From<FieldError> for CliError {
    fn from(e: FieldError) -> CliError {
        CliError::Validation(e.to_string())
    }
}

impl From<BoundsError> for CliError {
    fn from(e: BoundsError) -> CliError {
        CliError::Validation(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError::Validation(e.to_string())
    }
}

// ---------------------------------------------------------------------------
// Report envelope
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct Envelope<T: Serialize> {
    command: &'static str,
    inputs: BTreeMap<String, String>,
    results: T,
    version: &'static str,
}

fn emit<T: Serialize>(command: &'static str, inputs: BTreeMap<String, String>, results: T) {
    let envelope = Envelope { command, inputs, results, version: env!("CARGO_PKG_VERSION") };
    println!("{}", serde_json::to_string(&envelope).expect("report serializes"));
}

#[derive(Serialize)]
struct EntryJson {
    name: String,
    kind: &'static str,
    value: String,
    bound: u64,
    applicable: bool,
    conditional: Option<String>,
    witnessed: bool,
    note: String,
}

fn entry_json(e: &BoundEntry) -> EntryJson {
    EntryJson {
        name: e.name.to_string(),
        kind: match e.kind {
            BoundKind::Lower => "lower",
            BoundKind::Upper => "upper",
            BoundKind::Exact => "exact",
        },
        value: match &e.value {
            BoundValue::Exact(r) => r.to_string(),
            BoundValue::Approx(x) => format!("{x:.6}"),
        },
        bound: e.bound,
        applicable: e.applicable,
        conditional: e.conditional.clone(),
        witnessed: e.witnessed,
        note: e.note.clone(),
    }
}

// ---------------------------------------------------------------------------
// Entry point
// ---------------------------------------------------------------------------

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            std::process::exit(0);
        }
        Err(e) => {
            eprint!("{e}");
            std::process::exit(1);
        }
    };
    let started = Instant::now();
    let outcome = run(cli);
    eprintln!("elapsed_ms={}", started.elapsed().as_millis());
    if let Err(e) = outcome {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Info { spec } => cmd_info(&spec),
        Command::Bounds { spec, omega, method, d_list } => {
            cmd_bounds(&spec, omega, method, d_list.as_deref())
        }
        Command::Radical { spec, p } => cmd_radical(&spec, p),
        Command::RankSearch { algebra_file, max, witness } => {
            cmd_rank_search(&algebra_file, max, witness.as_deref())
        }
        Command::Verify { algorithm_file, algebra_file } => {
            cmd_verify(&algorithm_file, &algebra_file)
        }
        Command::Mul { spec, field, method, map, bench, seed } => {
            cmd_mul(&spec, &field, method, map.as_deref(), bench, seed)
        }
    }
}

fn load_group(spec_text: &str) -> Result<(GroupSpec, FiniteGroup), CliError> {
    let spec = GroupSpec::parse(spec_text)?;
    let group = build_group(&spec)?;
    Ok((spec, group))
}

// ---------------------------------------------------------------------------
// info
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct SylowJson {
    p: u64,
    order: usize,
    normal: bool,
    abelian_factors: Option<Vec<u64>>,
}

#[derive(Serialize)]
struct InfoResults {
    label: String,
    order: usize,
    abelian: bool,
    exponent: u64,
    conjugacy_classes: usize,
    class_sizes: Vec<usize>,
    center_size: usize,
    sylow: Vec<SylowJson>,
}

fn cmd_info(spec_text: &str) -> Result<(), CliError> {
    let (spec, group) = load_group(spec_text)?;
    let classes = group.conjugacy_classes();
    let mut class_sizes = classes.sizes();
    class_sizes.sort_unstable();
    let sylow = bilrank::arith::factorize(group.order() as u64)
        .into_iter()
        .map(|(p, _)| {
            let s = group.sylow_subgroup(p)?;
            Ok(SylowJson {
                p,
                order: s.order(),
                normal: s.normal,
                abelian_factors: s.abelian_factor_orders.clone(),
            })
        })
        .collect::<Result<Vec<_>, GroupError>>()?;
    let results = InfoResults {
        label: group.label().to_string(),
        order: group.order(),
        abelian: group.is_abelian(),
        exponent: group.exponent(),
        conjugacy_classes: classes.count(),
        class_sizes,
        center_size: group.center().len(),
        sylow,
    };
    emit("info", [("spec".to_string(), spec.to_string())].into(), results);
    Ok(())
}

// ---------------------------------------------------------------------------
// bounds
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct BoundsResults {
    label: String,
    order: u64,
    method: &'static str,
    degrees: Vec<u64>,
    t: usize,
    entries: Vec<EntryJson>,
    best_lower: u64,
    best_upper: Option<u64>,
    schonhage_root_at_witness: Option<String>,
}

fn cmd_bounds(
    spec_text: &str,
    omega: f64,
    method: DegreeMethod,
    d_list: Option<&[u64]>,
) -> Result<(), CliError> {
    let spec = GroupSpec::parse(spec_text)?;
    let omega = OmegaParam::new(omega, "flag --omega")?;
    let (label, profile) = match method {
        DegreeMethod::Catalog => (spec.to_string(), degrees_catalog(&spec)?),
        DegreeMethod::Dixon => {
            let group = build_group(&spec)?;
            let profile = degrees_dixon(&group)?;
            (group.label().to_string(), profile)
        }
    };
    if let Some(ds) = d_list {
        if ds.len() != profile.t() || ds.iter().any(|&d| d == 0) {
            return Err(CliError::Validation(format!(
                "--d-list needs {} positive entries, one per factor",
                profile.t()
            )));
        }
    }
    let report: BoundReport = bounds::classify_semisimple(&profile)
        .merged(omega_sum_entries(profile.degrees(), &omega))
        .merged(upper_estimates(&profile, d_list, &omega)?.entries);
    let witness = report.entry("decomposition-witness").map(|e| e.bound);
    let root = witness
        .and_then(|w| schonhage_root(profile.degrees(), w).ok())
        .map(|r| format!("{r:.9}"));
    let results = BoundsResults {
        label,
        order: profile.group_order(),
        method: match method {
            DegreeMethod::Dixon => "dixon",
            DegreeMethod::Catalog => "catalog",
        },
        degrees: profile.degrees().to_vec(),
        t: profile.t(),
        entries: report.entries.iter().map(entry_json).collect(),
        best_lower: report.best_lower,
        best_upper: report.best_upper,
        schonhage_root_at_witness: root,
    };
    let mut inputs: BTreeMap<String, String> = [("spec".to_string(), spec.to_string())].into();
    inputs.insert("omega".to_string(), format!("{:.6}", omega.value()));
    if let Some(ds) = d_list {
        let tags: Vec<String> = ds.iter().map(|d| d.to_string()).collect();
        inputs.insert("d_list".to_string(), tags.join(","));
    }
    emit("bounds", inputs, results);
    Ok(())
}

// ---------------------------------------------------------------------------
// radical
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct RadicalResults {
    label: String,
    order: usize,
    p: u64,
    sylow_normal: bool,
    sylow_abelian_factors: Option<Vec<u64>>,
    radical_dim: usize,
    generic_dims: Option<Vec<u64>>,
    closed_form_dims: Option<Vec<u64>>,
    dims_agree: Option<bool>,
    nilpotence_index: usize,
    blrad_value: u64,
    blrad_at: (usize, usize),
    coefficient: String,
}

/// Generic span computation is cubic in the order; beyond this the closed
/// form alone is reported.
const GENERIC_RADICAL_LIMIT: usize = 256;

fn cmd_radical(spec_text: &str, p: u64) -> Result<(), CliError> {
    let (spec, group) = load_group(spec_text)?;
    let sylow = group.sylow_subgroup(p)?;
    let basis = augmentation_radical(&group, p)?;
    let radical_dim = basis.len();

    let generic_dims = if group.order() <= GENERIC_RADICAL_LIMIT {
        let field = PrimeField::new(p)?;
        let algebra = FiniteDimAlgebra::group_algebra(&group, field);
        Some(radical_powers_generic(&algebra, &basis)?)
    } else {
        None
    };
    let closed = sylow.abelian_factor_exponents().and_then(|exponents| {
        if exponents.is_empty() {
            return None;
        }
        let n = group.order() as u64 / sylow.order() as u64;
        RadicalProfile::closed_form(n, p, &exponents).ok()
    });
    let profile = match (&generic_dims, &closed) {
        (Some(dims), _) => RadicalProfile::from_dims(dims.clone())?,
        (None, Some(rp)) => rp.clone(),
        (None, None) => {
            return Err(CliError::Infeasible(format!(
                "order {} exceeds the generic-span limit {GENERIC_RADICAL_LIMIT} and the Sylow subgroup is not abelian; no radical profile is computable",
                group.order()
            )));
        }
    };
    let outcome = modular_blrad(&profile, group.order() as u64);
    let coefficient = modular_coefficient(&profile, group.order() as u64);
    let results = RadicalResults {
        label: group.label().to_string(),
        order: group.order(),
        p,
        sylow_normal: sylow.normal,
        sylow_abelian_factors: sylow.abelian_factor_orders.clone(),
        radical_dim,
        dims_agree: match (&generic_dims, &closed) {
            (Some(g), Some(c)) => Some(g.as_slice() == c.dims()),
            _ => None,
        },
        generic_dims,
        closed_form_dims: closed.map(|c| c.dims().to_vec()),
        nilpotence_index: profile.nilpotence_index(),
        blrad_value: outcome.value,
        blrad_at: outcome.at,
        coefficient: coefficient.to_string(),
    };
    let inputs: BTreeMap<String, String> =
        [("spec".to_string(), spec.to_string()), ("p".to_string(), p.to_string())].into();
    emit("radical", inputs, results);
    Ok(())
}

// ---------------------------------------------------------------------------
// rank-search
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct RankSearchResults {
    algebra_file: String,
    dim: usize,
    field: String,
    r_max: usize,
    rank: Option<usize>,
    witness_length: Option<usize>,
    witness_file: Option<String>,
}

fn cmd_rank_search(
    algebra_file: &std::path::Path,
    max: usize,
    witness_path: Option<&std::path::Path>,
) -> Result<(), CliError> {
    let text = std::fs::read_to_string(algebra_file)?;
    let parsed = parse_algebra_file(&text, &algebra_file.display().to_string())?;
    let ParsedAlgebra::Prime(algebra) = parsed else {
        return Err(CliError::Infeasible(
            "exhaustive search runs over GF(2)/GF(3) algebras only".into(),
        ));
    };
    let outcome = brute_force_rank(&algebra, max)?;
    let (rank, witness) = match outcome {
        RankSearchResult::Exact { rank, witness } => (Some(rank), Some(witness)),
        RankSearchResult::ExceedsMax { .. } => (None, None),
    };
    let witness_file = match (&witness, witness_path) {
        (Some(w), Some(path)) => {
            std::fs::write(path, format_algorithm_file(w))?;
            Some(path.display().to_string())
        }
        _ => None,
    };
    let results = RankSearchResults {
        algebra_file: algebra_file.display().to_string(),
        dim: algebra.dim(),
        field: algebra.field().spec().to_string(),
        r_max: max,
        rank,
        witness_length: witness.as_ref().map(|w| w.len()),
        witness_file,
    };
    let inputs: BTreeMap<String, String> = [
        ("algebra_file".to_string(), algebra_file.display().to_string()),
        ("max".to_string(), max.to_string()),
    ]
    .into();
    emit("rank-search", inputs, results);
    Ok(())
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct VerifyResults {
    valid: bool,
    length: usize,
    dims: (usize, usize, usize),
    failing_pair: Option<(usize, usize)>,
}

fn cmd_verify(
    algorithm_file: &std::path::Path,
    algebra_file: &std::path::Path,
) -> Result<(), CliError> {
    let algo_text = std::fs::read_to_string(algorithm_file)?;
    let algebra_text = std::fs::read_to_string(algebra_file)?;
    let algo = parse_algorithm_file(&algo_text)?;
    let algebra = parse_algebra_file(&algebra_text, &algebra_file.display().to_string())?;
    let (verification, length, dims) = match (&algo, &algebra) {
        (ParsedAlgorithm::Rational(a), ParsedAlgebra::Rational(b)) => {
            (a.verify(b)?, a.len(), a.dims())
        }
        (ParsedAlgorithm::Prime(a), ParsedAlgebra::Prime(b)) => (a.verify(b)?, a.len(), a.dims()),
        _ => {
            return Err(CliError::Validation(
                "algorithm and algebra files declare different fields".into(),
            ))
        }
    };
    let inputs: BTreeMap<String, String> = [
        ("algorithm_file".to_string(), algorithm_file.display().to_string()),
        ("algebra_file".to_string(), algebra_file.display().to_string()),
    ]
    .into();
    match verification {
        Verification::Valid => {
            emit("verify", inputs, VerifyResults { valid: true, length, dims, failing_pair: None });
            eprintln!("VALID, length {length}");
            Ok(())
        }
        Verification::FailsAt { i, j } => {
            emit(
                "verify",
                inputs,
                VerifyResults { valid: false, length, dims, failing_pair: Some((i, j)) },
            );
            eprintln!("INVALID at basis pair ({i}, {j})");
            Err(CliError::Validation(format!(
                "algorithm does not compute the algebra product (fails at basis pair ({i}, {j}))"
            )))
        }
    }
}

// ---------------------------------------------------------------------------
// mul
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct StrategyJson {
    name: &'static str,
    bilinear_count: u64,
    product: Vec<String>,
}

#[derive(Serialize)]
struct MulResults {
    label: String,
    order: usize,
    field: String,
    seed: u64,
    x: Vec<String>,
    y: Vec<String>,
    strategies: Vec<StrategyJson>,
    agree: bool,
    /// Bilinear multiplication counts per strategy (naive always listed
    /// for comparison) and the minimizer.
    opcounts: Vec<(String, u64)>,
    best: String,
}

fn cmd_mul(
    spec_text: &str,
    field_text: &str,
    method: MulMethod,
    map_path: Option<&std::path::Path>,
    bench: bool,
    seed: u64,
) -> Result<(), CliError> {
    let (spec, group) = load_group(spec_text)?;
    match FieldSpec::parse(field_text)? {
        FieldSpec::Prime(q) => mul_prime(&spec, &group, q, method, map_path, bench, seed),
        FieldSpec::Rational => mul_rational(&spec, &group, method, map_path, bench, seed),
    }
}

fn method_name(method: MulMethod) -> &'static str {
    match method {
        MulMethod::Naive => "naive",
        MulMethod::Ntt => "ntt",
        MulMethod::Decomposed => "decomposed",
        MulMethod::Compare => "compare",
    }
}

fn mul_inputs(
    spec: &GroupSpec,
    field: &str,
    method: MulMethod,
    seed: u64,
) -> BTreeMap<String, String> {
    [
        ("spec".to_string(), spec.to_string()),
        ("field".to_string(), field.to_string()),
        ("method".to_string(), method_name(method).to_string()),
        ("seed".to_string(), seed.to_string()),
    ]
    .into()
}

fn bench_strategy<R>(bench: bool, name: &str, mut op: impl FnMut() -> R) -> R {
    if bench {
        const ITERS: u32 = 10;
        let start = Instant::now();
        for _ in 0..ITERS - 1 {
            let _ = op();
        }
        let out = op();
        eprintln!("bench strategy={name} iters={ITERS} total_us={}", start.elapsed().as_micros());
        out
    } else {
        op()
    }
}

fn mul_prime(
    spec: &GroupSpec,
    group: &FiniteGroup,
    q: u64,
    method: MulMethod,
    map_path: Option<&std::path::Path>,
    bench: bool,
    seed: u64,
) -> Result<(), CliError> {
    let field = PrimeField::new(q)?;
    let n = group.order();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x: Vec<u64> = (0..n).map(|_| rng.random_range(0..q)).collect();
    let y: Vec<u64> = (0..n).map(|_| rng.random_range(0..q)).collect();
    let fmt = |v: &[u64]| -> Vec<String> { v.iter().map(|c| c.to_string()).collect() };

    let mut strategies: Vec<StrategyJson> = Vec::new();
    let want = |m: MulMethod| method == m || method == MulMethod::Compare;
    let naive = bench_strategy(bench, "naive", || naive_mul(group, &field, &x, &y))?;
    if want(MulMethod::Naive) {
        strategies.push(StrategyJson {
            name: "naive",
            bilinear_count: naive_count(n),
            product: fmt(&naive),
        });
    }
    if want(MulMethod::Ntt) {
        match bench_strategy(bench, "ntt", || ntt_mul(group, q, &x, &y)) {
            Ok(product) => strategies.push(StrategyJson {
                name: "ntt",
                bilinear_count: ntt_count(n),
                product: fmt(&product),
            }),
            Err(e) if method == MulMethod::Compare => eprintln!("ntt unavailable: {e}"),
            Err(e) => return Err(e.into()),
        }
    }
    if want(MulMethod::Decomposed) {
        match prime_map(group, q, map_path)? {
            Some(verified) => {
                let (product, count) = bench_strategy(bench, "decomposed", || {
                    decomposed_mul(&verified, &field, &x, &y)
                })?;
                strategies.push(StrategyJson {
                    name: "decomposed",
                    bilinear_count: count,
                    product: fmt(&product),
                });
            }
            None if method == MulMethod::Compare => {}
            None => {
                return Err(CliError::Infeasible(format!(
                    "no decomposition map available for {} over GF({q}); pass --map",
                    group.label()
                )))
            }
        }
    }
    finish_mul(spec, group, &format!("GF({q})"), seed, fmt(&x), fmt(&y), strategies, &fmt(&naive), method)
}

fn prime_map(
    group: &FiniteGroup,
    q: u64,
    map_path: Option<&std::path::Path>,
) -> Result<Option<VerifiedMap<PrimeField>>, CliError> {
    let field = PrimeField::new(q)?;
    if let Some(path) = map_path {
        let text = std::fs::read_to_string(path)?;
        let ParsedMap::Prime(map) = parse_map_file(&text)? else {
            return Err(CliError::Validation(
                "map file declares the rational field, multiplication runs over a prime field".into(),
            ));
        };
        if map.matrix().field().spec() != field.spec() {
            return Err(CliError::Validation(format!(
                "map file field {} does not match --field {q}",
                map.matrix().field().spec()
            )));
        }
        return Ok(Some(map.verify(group, &field, 2)?));
    }
    if group.is_abelian() {
        return match dft_map(group, q) {
            Ok(map) => Ok(Some(map.verify(group, &field, 2)?)),
            Err(FastmulError::Dft(_)) => Ok(None),
            Err(e) => Err(e.into()),
        };
    }
    Ok(None)
}

fn mul_rational(
    spec: &GroupSpec,
    group: &FiniteGroup,
    method: MulMethod,
    map_path: Option<&std::path::Path>,
    bench: bool,
    seed: u64,
) -> Result<(), CliError> {
    let field = Rationals;
    let n = group.order();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x: Vec<_> = (0..n).map(|_| field.from_i64(rng.random_range(-9..10))).collect();
    let y: Vec<_> = (0..n).map(|_| field.from_i64(rng.random_range(-9..10))).collect();
    let fmt = |v: &[<Rationals as Field>::Elem]| -> Vec<String> {
        v.iter().map(|c| field.format_elem(c)).collect()
    };

    if method == MulMethod::Ntt {
        return Err(CliError::Infeasible(
            "the NTT strategy needs a prime field with q ≡ 1 (mod exponent(G))".into(),
        ));
    }
    let mut strategies: Vec<StrategyJson> = Vec::new();
    let want = |m: MulMethod| method == m || method == MulMethod::Compare;
    let naive = bench_strategy(bench, "naive", || naive_mul(group, &field, &x, &y))?;
    if want(MulMethod::Naive) {
        strategies.push(StrategyJson {
            name: "naive",
            bilinear_count: naive_count(n),
            product: fmt(&naive),
        });
    }
    if want(MulMethod::Decomposed) {
        let map = match map_path {
            Some(path) => {
                let text = std::fs::read_to_string(path)?;
                let ParsedMap::Rational(map) = parse_map_file(&text)? else {
                    return Err(CliError::Validation(
                        "map file declares a prime field, multiplication runs over Q".into(),
                    ));
                };
                Some(map)
            }
            None => match builtin_s3_map(group) {
                Ok(map) => Some(map),
                Err(FastmulError::NoBuiltinMap(_)) if method == MulMethod::Compare => None,
                Err(e) => return Err(e.into()),
            },
        };
        if let Some(map) = map {
            let verified = map.verify(group, &field, 2)?;
            let (product, count) =
                bench_strategy(bench, "decomposed", || decomposed_mul(&verified, &field, &x, &y))?;
            strategies.push(StrategyJson {
                name: "decomposed",
                bilinear_count: count,
                product: fmt(&product),
            });
        }
    }
    finish_mul(spec, group, "Q", seed, fmt(&x), fmt(&y), strategies, &fmt(&naive), method)
}

#[allow(clippy::too_many_arguments)]
fn finish_mul(
    spec: &GroupSpec,
    group: &FiniteGroup,
    field_name: &str,
    seed: u64,
    x: Vec<String>,
    y: Vec<String>,
    strategies: Vec<StrategyJson>,
    naive_product: &[String],
    method: MulMethod,
) -> Result<(), CliError> {
    if strategies.is_empty() {
        return Err(CliError::Infeasible("no strategy available for this request".into()));
    }
    let agree = strategies.iter().all(|s| s.product == naive_product);
    if !agree {
        return Err(CliError::Validation(
            "strategy outputs disagree; this indicates a broken map or algorithm".into(),
        ));
    }
    let report = opcount_compare(
        group,
        strategies.iter().any(|s| s.name == "ntt"),
        strategies.iter().find(|s| s.name == "decomposed").map(|s| s.bilinear_count),
    );
    let results = MulResults {
        label: group.label().to_string(),
        order: group.order(),
        field: field_name.to_string(),
        seed,
        x,
        y,
        strategies,
        agree,
        opcounts: report.entries.clone(),
        best: report.best,
    };
    emit("mul", mul_inputs(spec, field_name, method, seed), results);
    Ok(())
}
