//! Finite-dimensional associative algebras over exact fields, given by
//! structural constants α_{ij}^ν: e_i e_j = Σ_ν α_{ij}^ν e_ν.
//!
//! Constants are stored as one sparse list per basis pair (i, j), which is
//! dense in the pair index but sparse in ν — exactly one entry for group
//! algebras and at most one for matrix algebras, so an order-n group costs
//! O(n²) memory, not O(n³).
//!
//! The radical machinery lives here too: the augmentation-generated
//! radical of a modular group algebra with normal Sylow p-subgroup, the
//! generic nilpotent-ideal power sequence by exact span computation, and
//! the closed-form radical-power dimensions for abelian Sylow subgroups,
//! dim R^m = n(p^d − a_{m−1}) with a_m the bounded-composition count.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{Field, FieldError, FieldSpec, PrimeField};
use crate::group::FiniteGroup;
use crate::linalg::RowSpan;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("basis does not span an ideal: basis product {which} of vector {index} leaves the span")]
    NotAnIdeal { which: &'static str, index: usize },
    #[error("ideal is not nilpotent within {0} power iterations")]
    NotNilpotent(usize),
    #[error("characteristic {p} does not divide the group order {order}")]
    CharacteristicCoprime { p: u64, order: u64 },
    #[error("Sylow {p}-subgroup of {group} is not normal; the radical is not generated by its augmentation ideal and no partial answer is computed")]
    SylowNotNormal { p: u64, group: String },
    #[error("augmentation ideal has dimension {got}, expected n(p^d - 1) = {expected}")]
    RadicalDimension { got: usize, expected: usize },
    #[error("radical dims must decrease strictly to a positive last value, got {0:?}")]
    BadRadicalDims(Vec<u64>),
    #[error("n = {0} must be coprime to p = {1}")]
    NotCoprime(u64, u64),
    #[error("{0}")]
    Field(#[from] FieldError),
    #[error("bad algebra file: {0}")]
    BadFile(String),
    #[error("algebra is not associative at basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("unity vector does not act as a two-sided identity on basis vector {0}")]
    BadUnity(usize),
}

/// Associative algebra with unity over an exact field, by structural
/// constants. `constants[i * dim + j]` lists the nonzero (ν, α_{ij}^ν).
#[derive(Clone, Debug)]
pub struct FiniteDimAlgebra<F: Field> {
    field: F,
    dim: usize,
    constants: Vec<Vec<(u32, F::Elem)>>,
    unity: Vec<F::Elem>,
    label: String,
}

/// Full associativity checks are O(dim⁴); constructors run them up to
/// this dimension and trust algebraic construction above it.
pub const ASSOCIATIVITY_CHECK_LIMIT: usize = 64;

impl<F: Field> FiniteDimAlgebra<F> {
    /// Builds an algebra from explicit sparse constants; validates the
    /// unity axiom always and associativity up to
    /// [`ASSOCIATIVITY_CHECK_LIMIT`].
    pub fn new(
        field: F,
        dim: usize,
        constants: Vec<Vec<(u32, F::Elem)>>,
        unity: Vec<F::Elem>,
        label: impl Into<String>,
    ) -> Result<Self, AlgebraError> {
        if constants.len() != dim * dim {
            return Err(AlgebraError::DimensionMismatch { expected: dim * dim, got: constants.len() });
        }
        if unity.len() != dim {
            return Err(AlgebraError::DimensionMismatch { expected: dim, got: unity.len() });
        }
        let algebra = FiniteDimAlgebra { field, dim, constants, unity, label: label.into() };
        algebra.check_unity()?;
        if dim <= ASSOCIATIVITY_CHECK_LIMIT {
            algebra.check_associativity()?;
        }
        Ok(algebra)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unity(&self) -> &[F::Elem] {
        &self.unity
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Sparse structural column for the basis product e_i · e_j.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(u32, F::Elem)] {
        &self.constants[i * self.dim + j]
    }

    /// Dense structural column (α_{ij}^ν)_ν.
    pub fn basis_product_dense(&self, i: usize, j: usize) -> Vec<F::Elem> {
        let mut col = vec![self.field.zero(); self.dim];
        for (nu, a) in self.basis_product(i, j) {
            col[*nu as usize] = a.clone();
        }
        col
    }

    /// Product of two coefficient vectors.
    pub fn mul_vec(&self, x: &[F::Elem], y: &[F::Elem]) -> Result<Vec<F::Elem>, AlgebraError> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim,
                got: if x.len() != self.dim { x.len() } else { y.len() },
            });
        }
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if f.is_zero(yj) {
                    continue;
                }
                let xy = f.mul(xi, yj);
                for (nu, a) in self.basis_product(i, j) {
                    let nu = *nu as usize;
                    out[nu] = f.add(&out[nu], &f.mul(&xy, a));
                }
            }
        }
        Ok(out)
    }

    /// Definitional associativity check on all basis triples, O(dim⁴).
    pub fn check_associativity(&self) -> Result<(), AlgebraError> {
        let f = &self.field;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.basis_product_dense(i, j);
                for l in 0..self.dim {
                    // (e_i e_j) e_l
                    let mut left = vec![f.zero(); self.dim];
                    for (nu, a) in ij.iter().enumerate() {
                        if f.is_zero(a) {
                            continue;
                        }
                        for (mu, b) in self.basis_product(nu, l) {
                            let mu = *mu as usize;
                            left[mu] = f.add(&left[mu], &f.mul(a, b));
                        }
                    }
                    // e_i (e_j e_l)
                    let mut right = vec![f.zero(); self.dim];
                    for (nu, a) in self.basis_product(j, l) {
                        for (mu, b) in self.basis_product(i, *nu as usize) {
                            let mu = *mu as usize;
                            right[mu] = f.add(&right[mu], &f.mul(a, b));
                        }
                    }
                    if left != right {
                        return Err(AlgebraError::NotAssociative(i, j, l));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_unity(&self) -> Result<(), AlgebraError> {
        let f = &self.field;
        for i in 0..self.dim {
            let mut e = vec![f.zero(); self.dim];
            e[i] = f.one();
            if self.mul_vec(&self.unity, &e)? != e || self.mul_vec(&e, &self.unity)? != e {
                return Err(AlgebraError::BadUnity(i));
            }
        }
        Ok(())
    }

    /// The group algebra k[G]: α_{ij}^ν = 1 iff g_i g_j = g_ν.
    pub fn group_algebra(group: &FiniteGroup, field: F) -> Self {
        let dim = group.order();
        let f = field.clone();
        let mut constants = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                constants.push(vec![(group.mul(i, j) as u32, f.one())]);
            }
        }
        let mut unity = vec![f.zero(); dim];
        unity[group.identity()] = f.one();
        let label = format!("{}[{}]", field_label(&field), group.label());
        let algebra = FiniteDimAlgebra { field, dim, constants, unity, label };
        debug_assert!(dim > ASSOCIATIVITY_CHECK_LIMIT || algebra.check_associativity().is_ok());
        algebra
    }

    /// The full matrix algebra k^{n×n} on matrix units E_{ab} (index
    /// an + b): E_{ab} E_{cd} = δ_{bc} E_{ad}.
    pub fn matrix_algebra(n: usize, field: F) -> Self {
        assert!(n >= 1, "matrix algebra needs n >= 1");
        let dim = n * n;
        let f = field.clone();
        let mut constants = vec![Vec::new(); dim * dim];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        if b == c {
                            let (i, j) = (a * n + b, c * n + d);
                            constants[i * dim + j].push(((a * n + d) as u32, f.one()));
                        }
                    }
                }
            }
        }
        let mut unity = vec![f.zero(); dim];
        for a in 0..n {
            unity[a * n + a] = f.one();
        }
        let label = format!("{}^({n}x{n})", field_label(&field));
        let algebra = FiniteDimAlgebra { field, dim, constants, unity, label };
        debug_assert!(dim > ASSOCIATIVITY_CHECK_LIMIT || algebra.check_associativity().is_ok());
        algebra
    }

    /// Component-wise direct product A × B, block-diagonal constants.
    pub fn direct_product(a: &Self, b: &Self) -> Result<Self, AlgebraError> {
        if a.field.spec() != b.field.spec() {
            return Err(AlgebraError::FieldMismatch(a.field.spec(), b.field.spec()));
        }
        let dim = a.dim + b.dim;
        let f = a.field.clone();
        let mut constants = vec![Vec::new(); dim * dim];
        for i in 0..a.dim {
            for j in 0..a.dim {
                constants[i * dim + j] = a.basis_product(i, j).to_vec();
            }
        }
        for i in 0..b.dim {
            for j in 0..b.dim {
                constants[(a.dim + i) * dim + (a.dim + j)] = b
                    .basis_product(i, j)
                    .iter()
                    .map(|(nu, v)| (nu + a.dim as u32, v.clone()))
                    .collect();
            }
        }
        let mut unity = a.unity.clone();
        unity.extend(b.unity.iter().cloned());
        let label = format!("{} x {}", a.label, b.label);
        Ok(FiniteDimAlgebra { field: f, dim, constants, unity, label })
    }
}

impl<F: Field> FiniteDimAlgebra<F> {
    /// The quotient k[X]/(m) for a monic modulus m of degree d ≥ 1, on the
    /// basis 1, X, …, X^{d−1}. `modulus` lists coefficients low to high,
    /// length d + 1, with leading coefficient 1.
    pub fn polynomial_quotient(field: F, modulus: &[F::Elem]) -> Result<Self, AlgebraError> {
        let d = modulus.len().saturating_sub(1);
        if d == 0 {
            return Err(AlgebraError::BadFile("modulus must have degree at least 1".into()));
        }
        let f = field.clone();
        if !f.is_one(&modulus[d]) {
            return Err(AlgebraError::BadFile("modulus must be monic".into()));
        }
        // X^{d+k} mod m, computed incrementally
        let mut reduced_powers: Vec<Vec<F::Elem>> = Vec::new();
        let mut current: Vec<F::Elem> = modulus[..d].iter().map(|c| f.neg(c)).collect();
        for _ in 0..d.saturating_sub(1) {
            reduced_powers.push(current.clone());
            // multiply by X and reduce
            let mut shifted = vec![f.zero(); d + 1];
            for (i, c) in current.iter().enumerate() {
                shifted[i + 1] = c.clone();
            }
            let lead = shifted[d].clone();
            let mut next: Vec<F::Elem> = shifted[..d].to_vec();
            if !f.is_zero(&lead) {
                for (i, c) in modulus[..d].iter().enumerate() {
                    next[i] = f.sub(&next[i], &f.mul(&lead, c));
                }
            }
            current = next;
        }
        reduced_powers.push(current);

        let mut constants = vec![Vec::new(); d * d];
        for i in 0..d {
            for j in 0..d {
                let cell = &mut constants[i * d + j];
                if i + j < d {
                    cell.push(((i + j) as u32, f.one()));
                } else {
                    for (nu, c) in reduced_powers[i + j - d].iter().enumerate() {
                        if !f.is_zero(c) {
                            cell.push((nu as u32, c.clone()));
                        }
                    }
                }
            }
        }
        let mut unity = vec![f.zero(); d];
        unity[0] = f.one();
        FiniteDimAlgebra::new(field, d, constants, unity, format!("k[X]/(deg {d})"))
    }
}

fn field_label<F: Field>(field: &F) -> String {
    match field.spec() {
        FieldSpec::Rational => "Q".into(),
        FieldSpec::Prime(p) => format!("GF({p})"),
    }
}

// ---------------------------------------------------------------------------
// Radical machinery
// ---------------------------------------------------------------------------

/// Verifies that `basis` spans a two-sided ideal of `algebra` and returns
/// the dimension sequence dim I, dim I², … down to the first zero power.
///
/// Powers are computed as exact spans: I^{m+1} is spanned by the products
/// of a basis of I^m with a basis of I. Errors if the span is not an
/// ideal or does not vanish within dim A iterations.
pub fn radical_powers_generic<F: Field>(
    algebra: &FiniteDimAlgebra<F>,
    basis: &[Vec<F::Elem>],
) -> Result<Vec<u64>, AlgebraError> {
    let f = algebra.field().clone();
    let dim = algebra.dim();
    let mut ideal = RowSpan::new(f.clone(), dim);
    for v in basis {
        if v.len() != dim {
            return Err(AlgebraError::DimensionMismatch { expected: dim, got: v.len() });
        }
        ideal.insert(v.clone());
    }
    // closure under left and right multiplication by all basis vectors
    for (index, v) in ideal.basis().to_vec().iter().enumerate() {
        for i in 0..dim {
            let mut e = vec![f.zero(); dim];
            e[i] = f.one();
            if !ideal.contains(&algebra.mul_vec(&e, v)?) {
                return Err(AlgebraError::NotAnIdeal { which: "left", index });
            }
            if !ideal.contains(&algebra.mul_vec(v, &e)?) {
                return Err(AlgebraError::NotAnIdeal { which: "right", index });
            }
        }
    }

    let ideal_basis: Vec<Vec<F::Elem>> = ideal.basis().to_vec();
    let mut dims = vec![ideal.dim() as u64];
    let mut current: Vec<Vec<F::Elem>> = ideal_basis.clone();
    while dims.last().copied() != Some(0) {
        if dims.len() > dim {
            return Err(AlgebraError::NotNilpotent(dim));
        }
        let mut next = RowSpan::new(f.clone(), dim);
        for x in &current {
            for y in &ideal_basis {
                next.insert(algebra.mul_vec(x, y)?);
            }
        }
        dims.push(next.dim() as u64);
        current = next.basis().to_vec();
    }
    dims.pop(); // drop the zero entry; nilpotence index = dims.len() + 1
    Ok(dims)
}

/// Basis of the radical of k[G] in characteristic p, for G with a normal
/// Sylow p-subgroup P: the two-sided ideal generated by {h − 1 : h ∈ P},
/// spanned by {g(h − 1) : g ∈ G, h ∈ P}. Dimension is checked against the
/// closed form n(p^d − 1). Refuses when the Sylow subgroup is not normal.
pub fn augmentation_radical(
    group: &FiniteGroup,
    p: u64,
) -> Result<Vec<Vec<u64>>, AlgebraError> {
    let order = group.order() as u64;
    if order % p != 0 {
        return Err(AlgebraError::CharacteristicCoprime { p, order });
    }
    let sylow = group
        .sylow_subgroup(p)
        .map_err(|e| AlgebraError::BadFile(e.to_string()))?;
    if !sylow.normal {
        return Err(AlgebraError::SylowNotNormal { p, group: group.label().to_string() });
    }
    let field = PrimeField::new(p)?;
    let dim = group.order();
    let mut span = RowSpan::new(field, dim);
    for g in 0..dim {
        for &h in &sylow.elements {
            if h == group.identity() {
                continue;
            }
            let mut v = vec![0u64; dim];
            // g·h − g
            let gh = group.mul(g, h);
            v[gh] = field.add(&v[gh], &1);
            v[g] = field.sub(&v[g], &1);
            span.insert(v);
        }
    }
    let p_part = sylow.order() as u64;
    let expected = (order / p_part) * (p_part - 1);
    if span.dim() as u64 != expected {
        return Err(AlgebraError::RadicalDimension { got: span.dim(), expected: expected as usize });
    }
    Ok(span.basis().to_vec())
}

/// Number of index tuples (i_1, …, i_s) with 0 ≤ i_σ < p^{t_σ} and
/// Σ i_σ ≤ m, by dynamic programming over σ with running-sum truncation.
pub fn bounded_composition_count(factor_exponents: &[u32], p: u64, m: u64) -> u64 {
    assert!(!factor_exponents.is_empty(), "at least one cyclic factor");
    let limits: Vec<u64> = factor_exponents.iter().map(|&t| p.pow(t)).collect();
    let total_max: u64 = limits.iter().map(|&l| l - 1).sum();
    let cap = m.min(total_max) as usize;
    // counts[s] = number of prefixes with running sum s
    let mut counts = vec![0u64; cap + 1];
    counts[0] = 1;
    for &limit in &limits {
        let mut next = vec![0u64; cap + 1];
        for (s, &c) in counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let top = ((cap - s) as u64).min(limit - 1);
            for add in 0..=top {
                next[s + add as usize] += c;
            }
        }
        counts = next;
    }
    counts.iter().sum()
}

/// Radical-power dimension sequence of a modular group algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalProfile {
    dims: Vec<u64>,
    nilpotence_index: usize,
}

impl RadicalProfile {
    /// From an explicitly computed dimension sequence (dim R, dim R², …,
    /// last nonzero power). Dimensions must be strictly decreasing.
    pub fn from_dims(dims: Vec<u64>) -> Result<Self, AlgebraError> {
        if dims.is_empty()
            || dims.windows(2).any(|w| w[0] <= w[1])
            || dims.last() == Some(&0)
        {
            return Err(AlgebraError::BadRadicalDims(dims));
        }
        let nilpotence_index = dims.len() + 1;
        Ok(RadicalProfile { dims, nilpotence_index })
    }

    /// Closed form for G of order n·p^d with normal abelian Sylow
    /// p-subgroup Z_{p^{t_1}} × … × Z_{p^{t_s}}:
    /// dim R^m = n(p^d − a_{m−1}) and R^N = 0 at N = 1 + Σ(p^{t_σ} − 1).
    pub fn closed_form(n: u64, p: u64, factor_exponents: &[u32]) -> Result<Self, AlgebraError> {
        if n == 0 || n % p == 0 {
            return Err(AlgebraError::NotCoprime(n, p));
        }
        assert!(!factor_exponents.is_empty(), "nontrivial p-part required");
        let d: u32 = factor_exponents.iter().sum();
        let p_pow_d = p.pow(d);
        let nilpotence_index =
            1 + factor_exponents.iter().map(|&t| (p.pow(t) - 1) as usize).sum::<usize>();
        let dims: Vec<u64> = (1..nilpotence_index as u64)
            .map(|m| n * (p_pow_d - bounded_composition_count(factor_exponents, p, m - 1)))
            .collect();
        debug_assert!(dims.first() == Some(&(n * (p_pow_d - 1))));
        Ok(RadicalProfile { dims, nilpotence_index })
    }

    /// dim R^m, with dim R^m = 0 for m ≥ nilpotence index.
    pub fn dim_power(&self, m: usize) -> u64 {
        if m == 0 {
            panic!("radical powers are indexed from 1");
        }
        self.dims.get(m - 1).copied().unwrap_or(0)
    }

    /// Nonzero power dimensions (dim R, dim R², …).
    pub fn dims(&self) -> &[u64] {
        &self.dims
    }

    /// Least N with R^N = 0.
    pub fn nilpotence_index(&self) -> usize {
        self.nilpotence_index
    }
}

/// The modular completeness identity Σ n_τ² d_τ + dim J = |G| for a
/// semisimple-quotient block profile alongside a radical dimension.
pub fn wedderburn_sum_check(blocks: &[(u64, u64)], dim_radical: u64, order: u64) -> bool {
    let quotient: u64 = blocks.iter().map(|&(n, d)| n * n * d).sum();
    quotient + dim_radical == order
}

// ---------------------------------------------------------------------------
// Algebra file format
// ---------------------------------------------------------------------------

/// JSON shape of the algebra file: dimension, field (`"Q"` or a prime as
/// string), unity vector, and the nonzero constants as (i, j, ν, value)
/// quadruples. Element values are strings in the field's element syntax.
#[derive(Serialize, Deserialize)]
struct AlgebraFile {
    dim: usize,
    field: String,
    unity: Vec<String>,
    constants: Vec<(usize, usize, usize, String)>,
}

/// Parses an algebra file; the field is embedded, so the caller receives
/// whichever concrete algebra the file declares.
pub enum ParsedAlgebra {
    Rational(FiniteDimAlgebra<crate::field::Rationals>),
    Prime(FiniteDimAlgebra<PrimeField>),
}

impl ParsedAlgebra {
    pub fn dim(&self) -> usize {
        match self {
            ParsedAlgebra::Rational(a) => a.dim(),
            ParsedAlgebra::Prime(a) => a.dim(),
        }
    }

    pub fn field_spec(&self) -> FieldSpec {
        match self {
            ParsedAlgebra::Rational(a) => a.field().spec(),
            ParsedAlgebra::Prime(a) => a.field().spec(),
        }
    }
}

pub fn parse_algebra_file(text: &str, label: &str) -> Result<ParsedAlgebra, AlgebraError> {
    let file: AlgebraFile =
        serde_json::from_str(text).map_err(|e| AlgebraError::BadFile(e.to_string()))?;
    let spec = FieldSpec::parse(&file.field)?;
    match spec {
        FieldSpec::Rational => {
            let algebra = algebra_from_file(crate::field::Rationals, &file, label)?;
            Ok(ParsedAlgebra::Rational(algebra))
        }
        FieldSpec::Prime(p) => {
            let algebra = algebra_from_file(PrimeField::new(p)?, &file, label)?;
            Ok(ParsedAlgebra::Prime(algebra))
        }
    }
}

fn algebra_from_file<F: Field>(
    field: F,
    file: &AlgebraFile,
    label: &str,
) -> Result<FiniteDimAlgebra<F>, AlgebraError> {
    let dim = file.dim;
    if dim == 0 {
        return Err(AlgebraError::BadFile("dim must be positive".into()));
    }
    if file.unity.len() != dim {
        return Err(AlgebraError::BadFile(format!(
            "unity vector has {} entries, expected {dim}",
            file.unity.len()
        )));
    }
    let mut constants = vec![Vec::new(); dim * dim];
    for &(i, j, nu, ref value) in &file.constants {
        if i >= dim || j >= dim || nu >= dim {
            return Err(AlgebraError::BadFile(format!("constant index ({i}, {j}, {nu}) out of range")));
        }
        let v = field.parse_elem(value)?;
        if field.is_zero(&v) {
            continue;
        }
        let cell = &mut constants[i * dim + j];
        if cell.iter().any(|(existing, _)| *existing == nu as u32) {
            return Err(AlgebraError::BadFile(format!("duplicate constant ({i}, {j}, {nu})")));
        }
        cell.push((nu as u32, v));
    }
    for cell in &mut constants {
        cell.sort_by_key(|(nu, _)| *nu);
    }
    let unity: Result<Vec<F::Elem>, FieldError> =
        file.unity.iter().map(|s| field.parse_elem(s)).collect();
    FiniteDimAlgebra::new(field, dim, constants, unity?, label)
}

pub fn format_algebra_file<F: Field>(algebra: &FiniteDimAlgebra<F>) -> String {
    let field = algebra.field();
    let field_tag = match field.spec() {
        FieldSpec::Rational => "Q".to_string(),
        FieldSpec::Prime(p) => p.to_string(),
    };
    let mut constants = Vec::new();
    for i in 0..algebra.dim() {
        for j in 0..algebra.dim() {
            for (nu, v) in algebra.basis_product(i, j) {
                constants.push((i, j, *nu as usize, field.format_elem(v)));
            }
        }
    }
    let file = AlgebraFile {
        dim: algebra.dim(),
        field: field_tag,
        unity: algebra.unity().iter().map(|v| field.format_elem(v)).collect(),
        constants,
    };
    serde_json::to_string(&file).expect("algebra file serializes")
}
