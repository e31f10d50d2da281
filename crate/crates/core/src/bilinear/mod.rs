//! Bilinear multiplication algorithms.
//!
//! A bilinear algorithm for a bilinear map U × V → W is a list of triples
//! (u_ρ, v_ρ, w_ρ) — two linear functionals and an output vector — that
//! computes φ(x, y) = Σ_ρ u_ρ(x) v_ρ(y) w_ρ. Its length is the number of
//! triples; the minimal length over all algorithms for multiplication in
//! an algebra is the rank (bilinear complexity) of that algebra.
//!
//! This module evaluates and completely verifies algorithms against an
//! algebra (all basis pairs, no sampling), and constructs:
//! Strassen's seven-product 2×2 algorithm and its recursive tensor powers,
//! interpolation algorithms of length 2d−1 for degree-d field extensions,
//! direct sums, the trivial dim² transcription, and the |G|-length DFT
//! diagonalization of abelian group algebras. [`search`] adds exhaustive
//! rank search for very small algebras.

mod search;

pub use search::{brute_force_rank, RankSearchResult};

use thiserror::Error;

use crate::algebra::{AlgebraError, FiniteDimAlgebra};
use crate::dft::{AbelianDft, DftError};
use crate::field::{Field, FieldError, FieldSpec, PrimeField};
use crate::group::FiniteGroup;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BilinearError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("field with {size} elements is too small: interpolation at degree {degree} needs 2d-2 = {needed} distinct points")]
    FieldTooSmall { degree: usize, needed: usize, size: u64 },
    #[error("matrix algorithms are materialized only up to n = {cap}, got n = {n}")]
    MatrixSizeCap { n: usize, cap: usize },
    #[error("modulus must be monic of degree at least 1")]
    BadModulus,
    #[error("exhaustive search infeasible: {0}")]
    SearchInfeasible(String),
    #[error("bad algorithm file: {0}")]
    BadFile(String),
    #[error("{0}")]
    Field(#[from] FieldError),
    #[error("{0}")]
    Algebra(#[from] AlgebraError),
    #[error("{0}")]
    Dft(#[from] DftError),
}

/// One bilinear product: coefficient rows u, v over the inputs and the
/// output vector w.
#[derive(Clone, Debug, PartialEq)]
pub struct Triple<F: Field> {
    pub u: Vec<F::Elem>,
    pub v: Vec<F::Elem>,
    pub w: Vec<F::Elem>,
}

/// Outcome of the complete verification of an algorithm against an
/// algebra: either the tensor identity holds on every basis pair, or the
/// first failing pair is reported.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verification {
    Valid,
    FailsAt { i: usize, j: usize },
}

impl Verification {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verification::Valid)
    }
}

#[derive(Clone, Debug)]
pub struct BilinearAlgorithm<F: Field> {
    field: F,
    dims: (usize, usize, usize),
    triples: Vec<Triple<F>>,
}

impl<F: Field> BilinearAlgorithm<F> {
    pub fn new(field: F, dims: (usize, usize, usize), triples: Vec<Triple<F>>) -> Result<Self, BilinearError> {
        for t in &triples {
            for (len, expected) in [(t.u.len(), dims.0), (t.v.len(), dims.1), (t.w.len(), dims.2)] {
                if len != expected {
                    return Err(BilinearError::DimensionMismatch { expected, got: len });
                }
            }
        }
        Ok(BilinearAlgorithm { field, dims, triples })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    /// Length = number of bilinear multiplications.
    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn triples(&self) -> &[Triple<F>] {
        &self.triples
    }

    /// φ(x, y) = Σ_ρ u_ρ(x) v_ρ(y) w_ρ.
    pub fn evaluate(&self, x: &[F::Elem], y: &[F::Elem]) -> Result<Vec<F::Elem>, BilinearError> {
        if x.len() != self.dims.0 {
            return Err(BilinearError::DimensionMismatch { expected: self.dims.0, got: x.len() });
        }
        if y.len() != self.dims.1 {
            return Err(BilinearError::DimensionMismatch { expected: self.dims.1, got: y.len() });
        }
        let f = &self.field;
        let mut out = vec![f.zero(); self.dims.2];
        for t in &self.triples {
            let ux = dot(f, &t.u, x);
            if f.is_zero(&ux) {
                continue;
            }
            let vy = dot(f, &t.v, y);
            if f.is_zero(&vy) {
                continue;
            }
            let scale = f.mul(&ux, &vy);
            for (o, w) in out.iter_mut().zip(&t.w) {
                *o = f.add(o, &f.mul(&scale, w));
            }
        }
        Ok(out)
    }

    /// Complete soundness check against an algebra: the tensor identity
    /// Σ_ρ u_ρ(e_i) v_ρ(e_j) w_ρ = (α_{ij}^ν)_ν on every basis pair.
    pub fn verify(&self, algebra: &FiniteDimAlgebra<F>) -> Result<Verification, BilinearError> {
        let d = algebra.dim();
        if self.dims != (d, d, d) {
            return Err(BilinearError::DimensionMismatch { expected: d, got: self.dims.0 });
        }
        if self.field.spec() != algebra.field().spec() {
            return Err(BilinearError::FieldMismatch(self.field.spec(), algebra.field().spec()));
        }
        let f = &self.field;
        for i in 0..d {
            for j in 0..d {
                let mut sum = vec![f.zero(); d];
                for t in &self.triples {
                    let scale = f.mul(&t.u[i], &t.v[j]);
                    if f.is_zero(&scale) {
                        continue;
                    }
                    for (s, w) in sum.iter_mut().zip(&t.w) {
                        *s = f.add(s, &f.mul(&scale, w));
                    }
                }
                if sum != algebra.basis_product_dense(i, j) {
                    return Ok(Verification::FailsAt { i, j });
                }
            }
        }
        Ok(Verification::Valid)
    }

    /// The trivial dim²-term transcription of an algebra's structural
    /// constants: one product per basis pair.
    pub fn naive_from_algebra(algebra: &FiniteDimAlgebra<F>) -> Self {
        let f = algebra.field().clone();
        let d = algebra.dim();
        let mut triples = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let w = algebra.basis_product_dense(i, j);
                if w.iter().all(|c| f.is_zero(c)) {
                    continue;
                }
                let mut u = vec![f.zero(); d];
                u[i] = f.one();
                let mut v = vec![f.zero(); d];
                v[j] = f.one();
                triples.push(Triple { u, v, w });
            }
        }
        BilinearAlgorithm { field: f, dims: (d, d, d), triples }
    }

    /// Direct sum: computes multiplication in A × B from algorithms for A
    /// and B, with length additivity.
    pub fn direct_sum(a: &Self, b: &Self) -> Result<Self, BilinearError> {
        if a.field.spec() != b.field.spec() {
            return Err(BilinearError::FieldMismatch(a.field.spec(), b.field.spec()));
        }
        let f = a.field.clone();
        let dims = (a.dims.0 + b.dims.0, a.dims.1 + b.dims.1, a.dims.2 + b.dims.2);
        let mut triples = Vec::with_capacity(a.len() + b.len());
        for t in &a.triples {
            triples.push(Triple {
                u: pad(&f, &t.u, 0, b.dims.0),
                v: pad(&f, &t.v, 0, b.dims.1),
                w: pad(&f, &t.w, 0, b.dims.2),
            });
        }
        for t in &b.triples {
            triples.push(Triple {
                u: pad(&f, &t.u, a.dims.0, 0),
                v: pad(&f, &t.v, a.dims.1, 0),
                w: pad(&f, &t.w, a.dims.2, 0),
            });
        }
        Ok(BilinearAlgorithm { field: f, dims, triples })
    }
}

fn dot<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> F::Elem {
    let mut acc = f.zero();
    for (x, y) in a.iter().zip(b) {
        acc = f.add(&acc, &f.mul(x, y));
    }
    acc
}

fn pad<F: Field>(f: &F, v: &[F::Elem], before: usize, after: usize) -> Vec<F::Elem> {
    let mut out = vec![f.zero(); before];
    out.extend(v.iter().cloned());
    out.extend(std::iter::repeat_with(|| f.zero()).take(after));
    out
}

// ---------------------------------------------------------------------------
// Strassen and recursive matrix algorithms
// ---------------------------------------------------------------------------

/// Strassen's seven-product algorithm for 2×2 matrix multiplication, on
/// the matrix-unit basis (E11, E12, E21, E22).
pub fn strassen_2x2<F: Field>(field: F) -> BilinearAlgorithm<F> {
    let cv = |coeffs: [i64; 4]| -> Vec<F::Elem> {
        coeffs.iter().map(|&c| field.from_i64(c)).collect()
    };
    let triples = vec![
        // P1 = (a11 + a22)(b11 + b22) → c11, c22
        Triple { u: cv([1, 0, 0, 1]), v: cv([1, 0, 0, 1]), w: cv([1, 0, 0, 1]) },
        // P2 = (a21 + a22) b11 → c21, -c22
        Triple { u: cv([0, 0, 1, 1]), v: cv([1, 0, 0, 0]), w: cv([0, 0, 1, -1]) },
        // P3 = a11 (b12 - b22) → c12, c22
        Triple { u: cv([1, 0, 0, 0]), v: cv([0, 1, 0, -1]), w: cv([0, 1, 0, 1]) },
        // P4 = a22 (b21 - b11) → c11, c21
        Triple { u: cv([0, 0, 0, 1]), v: cv([-1, 0, 1, 0]), w: cv([1, 0, 1, 0]) },
        // P5 = (a11 + a12) b22 → -c11, c12
        Triple { u: cv([1, 1, 0, 0]), v: cv([0, 0, 0, 1]), w: cv([-1, 1, 0, 0]) },
        // P6 = (a21 - a11)(b11 + b12) → c22
        Triple { u: cv([-1, 0, 1, 0]), v: cv([1, 1, 0, 0]), w: cv([0, 0, 0, 1]) },
        // P7 = (a12 - a22)(b21 + b22) → c11
        Triple { u: cv([0, 1, 0, -1]), v: cv([0, 0, 1, 1]), w: cv([1, 0, 0, 0]) },
    ];
    BilinearAlgorithm { field, dims: (4, 4, 4), triples }
}

/// Materialized matrix algorithms are capped here; lengths beyond the cap
/// are still available through [`strassen_recursive_length`].
pub const MATRIX_ALGO_CAP: usize = 16;

/// Length of the recursive Strassen algorithm for n×n matrices:
/// 7^⌈log₂ n⌉.
pub fn strassen_recursive_length(n: u64) -> u64 {
    assert!(n >= 1);
    let bits = 64 - (n - 1).leading_zeros(); // ⌈log₂ n⌉
    7u64.pow(bits)
}

/// Recursive Strassen algorithm for n×n matrix multiplication: pads n to
/// the next power of two and takes tensor powers of the 2×2 algorithm,
/// then projects away the padding. Length is exactly 7^⌈log₂ n⌉.
pub fn matrix_mult_recursive<F: Field>(n: usize, field: F) -> Result<BilinearAlgorithm<F>, BilinearError> {
    if n == 0 {
        return Err(BilinearError::DimensionMismatch { expected: 1, got: 0 });
    }
    if n > MATRIX_ALGO_CAP {
        return Err(BilinearError::MatrixSizeCap { n, cap: MATRIX_ALGO_CAP });
    }
    let padded = n.next_power_of_two();
    let mut algo = BilinearAlgorithm {
        field: field.clone(),
        dims: (1, 1, 1),
        triples: vec![Triple { u: vec![field.one()], v: vec![field.one()], w: vec![field.one()] }],
    };
    let mut size = 1;
    while size < padded {
        algo = tensor_matrix_algorithms(&strassen_2x2(field.clone()), 2, &algo, size);
        size *= 2;
    }
    if padded != n {
        algo = project_matrix_algorithm(&algo, padded, n);
    }
    Ok(algo)
}

/// Tensor product of matrix-multiplication algorithms: an algorithm for
/// n1×n1 blocks whose entries are n2×n2 matrices multiplies (n1·n2)-sized
/// matrices. Index convention: row r = r1·n2 + r2, column likewise, basis
/// index r·n + c.
fn tensor_matrix_algorithms<F: Field>(
    a: &BilinearAlgorithm<F>,
    n1: usize,
    b: &BilinearAlgorithm<F>,
    n2: usize,
) -> BilinearAlgorithm<F> {
    let f = a.field.clone();
    let n = n1 * n2;
    let dim = n * n;
    let combine = |big: &[F::Elem], small: &[F::Elem]| -> Vec<F::Elem> {
        let mut out = vec![f.zero(); dim];
        for r1 in 0..n1 {
            for c1 in 0..n1 {
                let outer = &big[r1 * n1 + c1];
                if f.is_zero(outer) {
                    continue;
                }
                for r2 in 0..n2 {
                    for c2 in 0..n2 {
                        let idx = (r1 * n2 + r2) * n + (c1 * n2 + c2);
                        out[idx] = f.mul(outer, &small[r2 * n2 + c2]);
                    }
                }
            }
        }
        out
    };
    let mut triples = Vec::with_capacity(a.len() * b.len());
    for ta in &a.triples {
        for tb in &b.triples {
            triples.push(Triple {
                u: combine(&ta.u, &tb.u),
                v: combine(&ta.v, &tb.v),
                w: combine(&ta.w, &tb.w),
            });
        }
    }
    BilinearAlgorithm { field: f, dims: (dim, dim, dim), triples }
}

/// Restriction of a padded m×m algorithm to the leading n×n block:
/// coefficients on entries outside the block are dropped (inputs are
/// zero there, outputs are ignored). Triple count is unchanged.
fn project_matrix_algorithm<F: Field>(
    algo: &BilinearAlgorithm<F>,
    m: usize,
    n: usize,
) -> BilinearAlgorithm<F> {
    let f = algo.field.clone();
    let dim = n * n;
    let shrink = |big: &[F::Elem]| -> Vec<F::Elem> {
        let mut out = vec![f.zero(); dim];
        for r in 0..n {
            for c in 0..n {
                out[r * n + c] = big[r * m + c].clone();
            }
        }
        out
    };
    let triples = algo
        .triples
        .iter()
        .map(|t| Triple { u: shrink(&t.u), v: shrink(&t.v), w: shrink(&t.w) })
        .collect();
    BilinearAlgorithm { field: f, dims: (dim, dim, dim), triples }
}

// ---------------------------------------------------------------------------
// Interpolation algorithm for field extensions
// ---------------------------------------------------------------------------

/// Length-(2d−1) multiplication algorithm for k[X]/(modulus), modulus
/// monic of degree d: evaluate both inputs at 2d−2 distinct field points
/// and at infinity, multiply pointwise, interpolate the product and fold
/// the reduction modulo the modulus into the output vectors.
///
/// The infinity point carries the leading coefficient: the product c(X)
/// of degree ≤ 2d−2 is c_{2d−2}·M(X) + Σ_t c(x_t)·L_t(X), where M is the
/// monic root polynomial of the finite points and L_t the Lagrange basis
/// of degree 2d−3 (which interpolates c − c_{2d−2}M = c on the points,
/// since M vanishes there).
pub fn interpolation_ext<F: Field>(
    field: F,
    modulus: &[F::Elem],
) -> Result<BilinearAlgorithm<F>, BilinearError> {
    let d = modulus.len().saturating_sub(1);
    if d == 0 || !field.is_one(&modulus[d]) {
        return Err(BilinearError::BadModulus);
    }
    let f = field.clone();
    if d == 1 {
        let triples =
            vec![Triple { u: vec![f.one()], v: vec![f.one()], w: vec![f.one()] }];
        return Ok(BilinearAlgorithm { field, dims: (1, 1, 1), triples });
    }
    let needed = 2 * d - 2;
    let points = f.distinct_points(needed).ok_or(BilinearError::FieldTooSmall {
        degree: d,
        needed,
        size: f.size().unwrap_or(u64::MAX),
    })?;

    let mut triples = Vec::with_capacity(2 * d - 1);
    // finite points: u, v evaluate at x_t; w = reduce(L_t)
    for (t, x_t) in points.iter().enumerate() {
        let u: Vec<F::Elem> = (0..d).map(|i| f.pow(x_t, i as u64)).collect();
        // L_t = Π_{s≠t} (X - x_s) / (x_t - x_s)
        let mut numer = vec![f.one()];
        let mut denom = f.one();
        for (s, x_s) in points.iter().enumerate() {
            if s == t {
                continue;
            }
            numer = poly_mul(&f, &numer, &[f.neg(x_s), f.one()]);
            denom = f.mul(&denom, &f.sub(x_t, x_s));
        }
        let scale = f.inv(&denom).expect("distinct points");
        let lagrange: Vec<F::Elem> = numer.iter().map(|c| f.mul(c, &scale)).collect();
        let w = poly_mod(&f, &lagrange, modulus);
        triples.push(Triple { u: u.clone(), v: u, w });
    }
    // infinity: leading coefficients; w = reduce(M)
    let mut root_poly = vec![f.one()];
    for x_s in &points {
        root_poly = poly_mul(&f, &root_poly, &[f.neg(x_s), f.one()]);
    }
    let mut u_inf = vec![f.zero(); d];
    u_inf[d - 1] = f.one();
    let w_inf = poly_mod(&f, &root_poly, modulus);
    triples.push(Triple { u: u_inf.clone(), v: u_inf, w: w_inf });

    Ok(BilinearAlgorithm { field, dims: (d, d, d), triples })
}

fn poly_mul<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    out
}

/// Remainder of `a` modulo the monic `modulus` (degree d), padded to
/// exactly d coefficients.
fn poly_mod<F: Field>(f: &F, a: &[F::Elem], modulus: &[F::Elem]) -> Vec<F::Elem> {
    let d = modulus.len() - 1;
    let mut rem = a.to_vec();
    while rem.len() > d {
        let lead = rem.pop().expect("nonempty");
        if f.is_zero(&lead) {
            continue;
        }
        let deg = rem.len();
        for (j, c) in modulus[..d].iter().enumerate() {
            let pos = deg - d + j;
            rem[pos] = f.sub(&rem[pos], &f.mul(&lead, c));
        }
    }
    rem.resize(d, f.zero());
    rem
}

// ---------------------------------------------------------------------------
// Abelian DFT diagonalization
// ---------------------------------------------------------------------------

/// Multiplication in GF(q)[G] for abelian G with exactly |G| bilinear
/// products: u_ρ = v_ρ = the character row χ_ρ, w_ρ the matching column
/// of the inverse transform.
pub fn dft_abelian(group: &FiniteGroup, q: u64) -> Result<BilinearAlgorithm<PrimeField>, BilinearError> {
    let dft = AbelianDft::new(group, q)?;
    let field = dft.field();
    let n = dft.size();
    let triples = (0..n)
        .map(|rho| {
            let row: Vec<u64> = (0..n).map(|i| dft.character(rho, i)).collect();
            let w: Vec<u64> = (0..n).map(|l| *dft.inverse_matrix().at(l, rho)).collect();
            Triple { u: row.clone(), v: row, w }
        })
        .collect();
    Ok(BilinearAlgorithm { field, dims: (n, n, n), triples })
}

// ---------------------------------------------------------------------------
// Text file format
// ---------------------------------------------------------------------------

/// Renders the algorithm file format: `dims`, `field`, `length` header
/// lines, then one u/v/w coefficient row per triple.
pub fn format_algorithm_file<F: Field>(algo: &BilinearAlgorithm<F>) -> String {
    let f = algo.field();
    let field_tag = match f.spec() {
        FieldSpec::Rational => "Q".to_string(),
        FieldSpec::Prime(p) => p.to_string(),
    };
    let mut out = format!(
        "dims {} {} {}\nfield {}\nlength {}\n",
        algo.dims.0,
        algo.dims.1,
        algo.dims.2,
        field_tag,
        algo.len()
    );
    let row = |v: &[F::Elem]| -> String {
        v.iter().map(|c| f.format_elem(c)).collect::<Vec<_>>().join(" ")
    };
    for t in &algo.triples {
        out.push_str(&row(&t.u));
        out.push('\n');
        out.push_str(&row(&t.v));
        out.push('\n');
        out.push_str(&row(&t.w));
        out.push('\n');
    }
    out
}

/// Algorithm file with the field resolved at parse time.
pub enum ParsedAlgorithm {
    Rational(BilinearAlgorithm<crate::field::Rationals>),
    Prime(BilinearAlgorithm<PrimeField>),
}

pub fn parse_algorithm_file(text: &str) -> Result<ParsedAlgorithm, BilinearError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = |lines: &mut dyn Iterator<Item = &str>, key: &str| -> Result<String, BilinearError> {
        let line = lines
            .next()
            .ok_or_else(|| BilinearError::BadFile(format!("missing `{key}` line")))?;
        line.strip_prefix(key)
            .map(|rest| rest.trim().to_string())
            .ok_or_else(|| BilinearError::BadFile(format!("expected `{key}`, got `{line}`")))
    };
    let dims_line = header(&mut lines, "dims")?;
    let dims: Vec<usize> = dims_line
        .split_whitespace()
        .map(str::parse)
        .collect::<Result<_, _>>()
        .map_err(|_| BilinearError::BadFile(format!("bad dims `{dims_line}`")))?;
    let [du, dv, dw] = dims[..] else {
        return Err(BilinearError::BadFile(format!("dims needs three numbers, got `{dims_line}`")));
    };
    let field_tag = header(&mut lines, "field")?;
    let length: usize = header(&mut lines, "length")?
        .parse()
        .map_err(|_| BilinearError::BadFile("bad length".into()))?;
    let spec = FieldSpec::parse(&field_tag)?;

    fn read_triples<F: Field>(
        field: F,
        dims: (usize, usize, usize),
        length: usize,
        lines: &mut dyn Iterator<Item = &str>,
    ) -> Result<BilinearAlgorithm<F>, BilinearError> {
        let mut row = |expected: usize| -> Result<Vec<F::Elem>, BilinearError> {
            let line = lines
                .next()
                .ok_or_else(|| BilinearError::BadFile("missing coefficient row".into()))?;
            let parsed: Result<Vec<F::Elem>, FieldError> =
                line.split_whitespace().map(|v| field.parse_elem(v)).collect();
            let parsed = parsed?;
            if parsed.len() != expected {
                return Err(BilinearError::BadFile(format!(
                    "row has {} coefficients, expected {expected}",
                    parsed.len()
                )));
            }
            Ok(parsed)
        };
        let mut triples = Vec::with_capacity(length);
        for _ in 0..length {
            triples.push(Triple { u: row(dims.0)?, v: row(dims.1)?, w: row(dims.2)? });
        }
        if lines.next().is_some() {
            return Err(BilinearError::BadFile("trailing content after triples".into()));
        }
        BilinearAlgorithm::new(field, dims, triples)
    }

    match spec {
        FieldSpec::Rational => Ok(ParsedAlgorithm::Rational(read_triples(
            crate::field::Rationals,
            (du, dv, dw),
            length,
            &mut lines,
        )?)),
        FieldSpec::Prime(p) => Ok(ParsedAlgorithm::Prime(read_triples(
            PrimeField::new(p)?,
            (du, dv, dw),
            length,
            &mut lines,
        )?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::group::{build_group, GroupSpec};

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn group(spec: &str) -> FiniteGroup {
        build_group(&GroupSpec::parse(spec).unwrap()).unwrap()
    }

    #[test]
    fn strassen_verifies_everywhere() {
        for spec in [2u64, 5] {
            let f = gf(spec);
            let algo = strassen_2x2(f);
            assert_eq!(algo.len(), 7);
            let m2 = FiniteDimAlgebra::matrix_algebra(2, f);
            assert_eq!(algo.verify(&m2).unwrap(), Verification::Valid);
        }
        let algo = strassen_2x2(Rationals);
        let m2 = FiniteDimAlgebra::matrix_algebra(2, Rationals);
        assert_eq!(algo.verify(&m2).unwrap(), Verification::Valid);
    }

    #[test]
    fn strassen_sign_flip_fails() {
        let f = Rationals;
        let mut algo = strassen_2x2(f);
        // flip one w coefficient
        algo.triples[6].w[0] = f.neg(&algo.triples[6].w[0]);
        let m2 = FiniteDimAlgebra::matrix_algebra(2, f);
        assert!(matches!(algo.verify(&m2).unwrap(), Verification::FailsAt { .. }));
    }

    #[test]
    fn strassen_matches_naive_product() {
        use rand::{Rng, SeedableRng};
        let f = gf(5);
        let algo = strassen_2x2(f);
        let m2 = FiniteDimAlgebra::matrix_algebra(2, f);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let x: Vec<u64> = (0..4).map(|_| rng.random_range(0..5)).collect();
            let y: Vec<u64> = (0..4).map(|_| rng.random_range(0..5)).collect();
            assert_eq!(algo.evaluate(&x, &y).unwrap(), m2.mul_vec(&x, &y).unwrap());
        }
        // identity matrix input
        let m = vec![3u64, 1, 4, 1];
        let id = vec![1u64, 0, 0, 1];
        assert_eq!(algo.evaluate(&id, &m).unwrap(), m);
    }

    #[test]
    fn evaluate_trivial_on_gf3_z2() {
        let a = FiniteDimAlgebra::group_algebra(&group("C:2"), gf(3));
        let algo = BilinearAlgorithm::naive_from_algebra(&a);
        assert_eq!(algo.len(), 4);
        assert_eq!(algo.verify(&a).unwrap(), Verification::Valid);
        // (e0 + e1)² = 2e0 + 2e1
        assert_eq!(algo.evaluate(&[1, 1], &[1, 1]).unwrap(), vec![2, 2]);
        // unity law
        assert_eq!(algo.evaluate(&[1, 0], &[2, 1]).unwrap(), vec![2, 1]);
        assert!(algo.evaluate(&[1, 0, 0], &[1, 0]).is_err());
    }

    #[test]
    fn interpolation_lengths_and_validity() {
        // d = 1
        let a1 = interpolation_ext(gf(5), &[2, 1]).unwrap();
        assert_eq!(a1.len(), 1);
        // d = 2, X² + 1 over GF(5)
        let modulus = vec![1u64, 0, 1];
        let a2 = interpolation_ext(gf(5), &modulus).unwrap();
        assert_eq!(a2.len(), 3);
        let quotient = FiniteDimAlgebra::polynomial_quotient(gf(5), &modulus).unwrap();
        assert_eq!(a2.verify(&quotient).unwrap(), Verification::Valid);
        // d = 3 over GF(2): needs 4 points, only 2 available
        let m3 = vec![1u64, 1, 0, 1];
        assert!(matches!(
            interpolation_ext(gf(2), &m3),
            Err(BilinearError::FieldTooSmall { degree: 3, needed: 4, .. })
        ));
        // d = 3 over Q and GF(7)
        let f = Rationals;
        let mq: Vec<_> = [1i64, 1, 0, 1].iter().map(|&c| f.from_i64(c)).collect();
        let aq = interpolation_ext(f, &mq).unwrap();
        assert_eq!(aq.len(), 5);
        let qq = FiniteDimAlgebra::polynomial_quotient(f, &mq).unwrap();
        assert_eq!(aq.verify(&qq).unwrap(), Verification::Valid);
        let m7 = vec![3u64, 1, 0, 1];
        let a7 = interpolation_ext(gf(7), &m7).unwrap();
        assert_eq!(a7.len(), 5);
        let q7 = FiniteDimAlgebra::polynomial_quotient(gf(7), &m7).unwrap();
        assert_eq!(a7.verify(&q7).unwrap(), Verification::Valid);
    }

    #[test]
    fn recursive_matrix_lengths() {
        assert_eq!(matrix_mult_recursive(1, gf(3)).unwrap().len(), 1);
        assert_eq!(matrix_mult_recursive(2, gf(3)).unwrap().len(), 7);
        assert_eq!(matrix_mult_recursive(4, gf(3)).unwrap().len(), 49);
        assert_eq!(matrix_mult_recursive(3, gf(3)).unwrap().len(), 49);
        assert!(matches!(
            matrix_mult_recursive(17, gf(3)),
            Err(BilinearError::MatrixSizeCap { .. })
        ));
        assert_eq!(strassen_recursive_length(1), 1);
        assert_eq!(strassen_recursive_length(2), 7);
        assert_eq!(strassen_recursive_length(3), 49);
        assert_eq!(strassen_recursive_length(4), 49);
        assert_eq!(strassen_recursive_length(16), 2401);
        assert_eq!(strassen_recursive_length(1000), 7u64.pow(10));
    }

    #[test]
    fn recursive_matrix_verifies() {
        for n in [2usize, 3, 4] {
            let algo = matrix_mult_recursive(n, gf(5)).unwrap();
            let algebra = FiniteDimAlgebra::matrix_algebra(n, gf(5));
            assert_eq!(algo.verify(&algebra).unwrap(), Verification::Valid, "n = {n}");
        }
        let algo = matrix_mult_recursive(3, Rationals).unwrap();
        let algebra = FiniteDimAlgebra::matrix_algebra(3, Rationals);
        assert_eq!(algo.verify(&algebra).unwrap(), Verification::Valid);
    }

    #[test]
    fn direct_sums() {
        let f = Rationals;
        let one = matrix_mult_recursive(1, f).unwrap();
        let two = BilinearAlgorithm::direct_sum(&one, &one).unwrap();
        assert_eq!(two.len(), 2);
        let k = FiniteDimAlgebra::matrix_algebra(1, f);
        let kk = FiniteDimAlgebra::direct_product(&k, &k).unwrap();
        assert_eq!(two.verify(&kk).unwrap(), Verification::Valid);

        // Strassen ⊕ 1: length 8 for k^{2×2} × k
        let s = strassen_2x2(f);
        let sum = BilinearAlgorithm::direct_sum(&s, &one).unwrap();
        assert_eq!(sum.len(), 8);
        let m2 = FiniteDimAlgebra::matrix_algebra(2, f);
        let prod = FiniteDimAlgebra::direct_product(&m2, &k).unwrap();
        assert_eq!(sum.verify(&prod).unwrap(), Verification::Valid);

        // S3 decomposition shape k × k × k^{2×2}: length 9
        let s3_shape = BilinearAlgorithm::direct_sum(&two, &s).unwrap();
        assert_eq!(s3_shape.len(), 9);
        let s3_algebra =
            FiniteDimAlgebra::direct_product(&kk, &m2).unwrap();
        assert_eq!(s3_shape.verify(&s3_algebra).unwrap(), Verification::Valid);
    }

    #[test]
    fn dft_abelian_verifies() {
        for (spec, q) in [("C:4", 5u64), ("A:2,2", 3), ("C:3", 7), ("A:6,2", 13)] {
            let g = group(spec);
            let algo = dft_abelian(&g, q).unwrap();
            assert_eq!(algo.len(), g.order(), "{spec}");
            let algebra = FiniteDimAlgebra::group_algebra(&g, gf(q));
            assert_eq!(algo.verify(&algebra).unwrap(), Verification::Valid, "{spec}");
        }
        assert!(dft_abelian(&group("S:3"), 7).is_err());
    }

    #[test]
    fn verify_decides_equality_with_evaluation() {
        use rand::{Rng, SeedableRng};
        // verified algorithm agrees with the algebra product on random pairs
        let g = group("C:4");
        let a = FiniteDimAlgebra::group_algebra(&g, gf(5));
        let algo = dft_abelian(&g, 5).unwrap();
        assert!(algo.verify(&a).unwrap().is_valid());
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..500 {
            let x: Vec<u64> = (0..4).map(|_| rng.random_range(0..5)).collect();
            let y: Vec<u64> = (0..4).map(|_| rng.random_range(0..5)).collect();
            assert_eq!(algo.evaluate(&x, &y).unwrap(), a.mul_vec(&x, &y).unwrap());
        }
        // a failing verification exhibits a failing basis pair
        let mut broken = algo.clone();
        broken.triples[2].u[1] = broken.field.add(&broken.triples[2].u[1], &1);
        let Verification::FailsAt { i, j } = broken.verify(&a).unwrap() else {
            panic!("corruption must be detected");
        };
        let mut x = vec![0u64; 4];
        x[i] = 1;
        let mut y = vec![0u64; 4];
        y[j] = 1;
        assert_ne!(broken.evaluate(&x, &y).unwrap(), a.mul_vec(&x, &y).unwrap());
    }

    #[test]
    fn algorithm_file_roundtrip() {
        let algo = strassen_2x2(Rationals);
        let text = format_algorithm_file(&algo);
        let ParsedAlgorithm::Rational(parsed) = parse_algorithm_file(&text).unwrap() else {
            panic!("expected rational algorithm");
        };
        assert_eq!(parsed.len(), 7);
        let m2 = FiniteDimAlgebra::matrix_algebra(2, Rationals);
        assert_eq!(parsed.verify(&m2).unwrap(), Verification::Valid);

        let gf_algo = dft_abelian(&group("C:4"), 5).unwrap();
        let text2 = format_algorithm_file(&gf_algo);
        let ParsedAlgorithm::Prime(parsed2) = parse_algorithm_file(&text2).unwrap() else {
            panic!("expected prime-field algorithm");
        };
        assert_eq!(parsed2.len(), 4);

        assert!(parse_algorithm_file("dims 1 1\nfield Q\nlength 0\n").is_err());
        assert!(parse_algorithm_file("dims 1 1 1\nfield 6\nlength 0\n").is_err());
        assert!(parse_algorithm_file("dims 1 1 1\nfield Q\nlength 2\n1\n1\n1\n").is_err());
    }
}
