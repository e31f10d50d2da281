//! Group-algebra multiplication three ways, with bilinear operation
//! accounting: naive table convolution (|G|² products), number theoretic
//! transform for abelian groups over GF(q) (|G| products), and
//! block-decomposed multiplication through a verified isomorphism onto a
//! product of matrix algebras (Strassen-recursive per block).
//!
//! Decomposition maps for nonabelian groups are supplied externally or
//! from the built-in set (S3 over ℚ, assembled from its three irreducible
//! representations); abelian maps come from the DFT. Synthesizing
//! representations for arbitrary groups is out of scope, so a map is
//! always verified completely — multiplicativity on every basis pair plus
//! invertibility — before it can be used to multiply.

use thiserror::Error;

use crate::bilinear::{matrix_mult_recursive, BilinearAlgorithm, BilinearError};
use crate::dft::{AbelianDft, DftError};
use crate::field::{Field, FieldError, FieldSpec, PrimeField, Rationals};
use crate::group::FiniteGroup;
use crate::linalg::Mat;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FastmulError {
    #[error("coefficient vector has length {got}, expected the group order {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("map matrix is {got}x{got2}, expected {expected}x{expected}")]
    MapShape { expected: usize, got: usize, got2: usize },
    #[error("block sizes sum to {got}, expected the dimension {expected}")]
    BlockSum { expected: usize, got: usize },
    #[error("decomposition map is not invertible")]
    NotInvertible,
    #[error("decomposition map is not multiplicative at basis pair ({0}, {1})")]
    NotMultiplicative(usize, usize),
    #[error("division-algebra blocks (d > 1) are not executable; only d = 1 matrix blocks can be multiplied")]
    DivisionBlock,
    #[error("no built-in decomposition map for {0}")]
    NoBuiltinMap(String),
    #[error("bad decomposition map file: {0}")]
    BadFile(String),
    #[error("{0}")]
    Field(#[from] FieldError),
    #[error("{0}")]
    Dft(#[from] DftError),
    #[error("{0}")]
    Bilinear(#[from] BilinearError),
}

/// Naive group-algebra product: full convolution over the multiplication
/// table, |G|² bilinear multiplications.
pub fn naive_mul<F: Field>(
    group: &FiniteGroup,
    field: &F,
    x: &[F::Elem],
    y: &[F::Elem],
) -> Result<Vec<F::Elem>, FastmulError> {
    let n = group.order();
    for v in [x, y] {
        if v.len() != n {
            return Err(FastmulError::LengthMismatch { expected: n, got: v.len() });
        }
    }
    let mut out = vec![field.zero(); n];
    for (i, xi) in x.iter().enumerate() {
        if field.is_zero(xi) {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            let k = group.mul(i, j);
            out[k] = field.add(&out[k], &field.mul(xi, yj));
        }
    }
    Ok(out)
}

/// Bilinear multiplication count of the naive strategy.
pub fn naive_count(order: usize) -> u64 {
    (order as u64) * (order as u64)
}

/// NTT product for abelian G over GF(q): forward transform, |G| pointwise
/// products, inverse transform. Agrees with [`naive_mul`] exactly.
pub fn ntt_mul(
    group: &FiniteGroup,
    q: u64,
    x: &[u64],
    y: &[u64],
) -> Result<Vec<u64>, FastmulError> {
    let dft = AbelianDft::new(group, q)?;
    ntt_mul_with(&dft, x, y)
}

/// NTT product reusing a prepared transform.
pub fn ntt_mul_with(dft: &AbelianDft, x: &[u64], y: &[u64]) -> Result<Vec<u64>, FastmulError> {
    let n = dft.size();
    for v in [x, y] {
        if v.len() != n {
            return Err(FastmulError::LengthMismatch { expected: n, got: v.len() });
        }
    }
    let f = dft.field();
    let tx = dft.transform(x);
    let ty = dft.transform(y);
    let pointwise: Vec<u64> = tx.iter().zip(&ty).map(|(a, b)| f.mul(a, b)).collect();
    Ok(dft.inverse_transform(&pointwise))
}

/// Bilinear multiplication count of the NTT strategy.
pub fn ntt_count(order: usize) -> u64 {
    order as u64
}

// ---------------------------------------------------------------------------
// Decomposition maps
// ---------------------------------------------------------------------------

/// A linear isomorphism from group-basis coordinates onto a product of
/// matrix algebras over division algebras: blocks (n_τ, d_τ) with
/// Σ n_τ² d_τ = |G|, coordinates laid out block by block, row-major
/// within each matrix block.
#[derive(Clone, Debug)]
pub struct DecompositionMap<F: Field> {
    matrix: Mat<F>,
    blocks: Vec<(u32, u32)>,
}

/// A decomposition map that passed the complete multiplicativity and
/// invertibility check against its group algebra; the only door to
/// [`decomposed_mul`].
#[derive(Clone, Debug)]
pub struct VerifiedMap<F: Field> {
    map: DecompositionMap<F>,
    inverse: Mat<F>,
    /// Per-block multiplication algorithms (None → schoolbook).
    block_algos: Vec<Option<BilinearAlgorithm<F>>>,
    strassen_cutoff: u32,
}

impl<F: Field> DecompositionMap<F> {
    pub fn new(matrix: Mat<F>, blocks: Vec<(u32, u32)>) -> Result<Self, FastmulError> {
        let dim: usize = blocks.iter().map(|&(n, d)| (n * n * d) as usize).sum();
        if matrix.rows() != matrix.cols() {
            return Err(FastmulError::MapShape {
                expected: dim,
                got: matrix.rows(),
                got2: matrix.cols(),
            });
        }
        if matrix.rows() != dim {
            return Err(FastmulError::BlockSum { expected: matrix.rows(), got: dim });
        }
        Ok(DecompositionMap { matrix, blocks })
    }

    pub fn matrix(&self) -> &Mat<F> {
        &self.matrix
    }

    pub fn blocks(&self) -> &[(u32, u32)] {
        &self.blocks
    }

    /// Complete check that the map is an algebra isomorphism onto the
    /// block product: invertibility plus map(e_i e_j) = map(e_i)·map(e_j)
    /// for every basis pair. Returns the failing pair on refusal.
    ///
    /// Only d_τ = 1 blocks are executable (division-algebra blocks would
    /// need the D_τ structure, which is not modeled).
    pub fn verify(
        self,
        group: &FiniteGroup,
        field: &F,
        strassen_cutoff: u32,
    ) -> Result<VerifiedMap<F>, FastmulError> {
        let n = group.order();
        if self.matrix.rows() != n {
            return Err(FastmulError::MapShape { expected: n, got: self.matrix.rows(), got2: self.matrix.cols() });
        }
        if self.blocks.iter().any(|&(_, d)| d != 1) {
            return Err(FastmulError::DivisionBlock);
        }
        let inverse = self.matrix.inverse().ok_or(FastmulError::NotInvertible)?;
        // block product on images of basis vectors
        let images: Vec<Vec<F::Elem>> = (0..n).map(|i| self.matrix.column(i)).collect();
        for i in 0..n {
            for j in 0..n {
                let product = self.block_product(field, &images[i], &images[j], None)?;
                if product != images[group.mul(i, j)] {
                    return Err(FastmulError::NotMultiplicative(i, j));
                }
            }
        }
        let block_algos: Vec<Option<BilinearAlgorithm<F>>> = self
            .blocks
            .iter()
            .map(|&(bn, _)| {
                if bn >= strassen_cutoff.max(2) {
                    matrix_mult_recursive(bn as usize, field.clone()).map(Some)
                } else {
                    Ok(None)
                }
            })
            .collect::<Result<_, BilinearError>>()?;
        Ok(VerifiedMap { map: self, inverse, block_algos, strassen_cutoff })
    }

    /// Product in the block algebra. When `algos` is given, matrix blocks
    /// run their bilinear algorithms and the bilinear multiplications are
    /// tallied into `count`.
    fn block_product(
        &self,
        field: &F,
        x: &[F::Elem],
        y: &[F::Elem],
        mut algos: Option<(&[Option<BilinearAlgorithm<F>>], &mut u64)>,
    ) -> Result<Vec<F::Elem>, FastmulError> {
        let mut out = Vec::with_capacity(x.len());
        let mut offset = 0usize;
        for (b, &(bn, _)) in self.blocks.iter().enumerate() {
            let bn = bn as usize;
            let size = bn * bn;
            let xs = &x[offset..offset + size];
            let ys = &y[offset..offset + size];
            match algos.as_mut() {
                Some((algos, count)) if algos[b].is_some() => {
                    let algo = algos[b].as_ref().expect("checked");
                    out.extend(algo.evaluate(xs, ys)?);
                    **count += algo.len() as u64;
                }
                Some((_, count)) => {
                    out.extend(schoolbook_block(field, bn, xs, ys));
                    **count += (bn * bn * bn) as u64;
                }
                None => out.extend(schoolbook_block(field, bn, xs, ys)),
            }
            offset += size;
        }
        Ok(out)
    }
}

fn schoolbook_block<F: Field>(field: &F, n: usize, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
    let mut out = vec![field.zero(); n * n];
    for r in 0..n {
        for c in 0..n {
            let mut acc = field.zero();
            for k in 0..n {
                acc = field.add(&acc, &field.mul(&x[r * n + k], &y[k * n + c]));
            }
            out[r * n + c] = acc;
        }
    }
    out
}

impl<F: Field> VerifiedMap<F> {
    pub fn blocks(&self) -> &[(u32, u32)] {
        self.map.blocks()
    }

    pub fn matrix(&self) -> &Mat<F> {
        self.map.matrix()
    }

    pub fn strassen_cutoff(&self) -> u32 {
        self.strassen_cutoff
    }

    /// Bilinear multiplications one product costs through this map.
    pub fn bilinear_count(&self) -> u64 {
        self.map
            .blocks
            .iter()
            .zip(&self.block_algos)
            .map(|(&(bn, _), algo)| match algo {
                Some(a) => a.len() as u64,
                None => (bn as u64).pow(3),
            })
            .sum()
    }
}

/// Multiplication through a verified decomposition map: transform both
/// inputs, per-block matrix products (Strassen-recursive at or above the
/// cutoff, schoolbook below), inverse transform. Returns the product and
/// the exact bilinear multiplication count.
pub fn decomposed_mul<F: Field>(
    map: &VerifiedMap<F>,
    field: &F,
    x: &[F::Elem],
    y: &[F::Elem],
) -> Result<(Vec<F::Elem>, u64), FastmulError> {
    let n = map.map.matrix.rows();
    for v in [x, y] {
        if v.len() != n {
            return Err(FastmulError::LengthMismatch { expected: n, got: v.len() });
        }
    }
    let tx = map.map.matrix.mul_vec(x);
    let ty = map.map.matrix.mul_vec(y);
    let mut count = 0u64;
    let product = map.map.block_product(field, &tx, &ty, Some((&map.block_algos, &mut count)))?;
    Ok((map.inverse.mul_vec(&product), count))
}

/// The DFT of an abelian group algebra as a decomposition map: all blocks
/// (1, 1), the matrix being the character table.
pub fn dft_map(group: &FiniteGroup, q: u64) -> Result<DecompositionMap<PrimeField>, FastmulError> {
    let dft = AbelianDft::new(group, q)?;
    let blocks = vec![(1u32, 1u32); dft.size()];
    Ok(DecompositionMap { matrix: dft.forward_matrix().clone(), blocks })
}

/// Built-in decomposition map of ℚ[S3] onto ℚ × ℚ × ℚ^{2×2}, columns
/// assembled from the trivial character, the sign character and the
/// standard two-dimensional representation on {x : Σx = 0} with basis
/// (e₀−e₁, e₁−e₂).
pub fn builtin_s3_map(group: &FiniteGroup) -> Result<DecompositionMap<Rationals>, FastmulError> {
    if group.label() != "S:3" || group.order() != 6 {
        return Err(FastmulError::NoBuiltinMap(group.label().to_string()));
    }
    let f = Rationals;
    // permutations in lexicographic one-line order, as built by S:3
    let perms: [[usize; 3]; 6] =
        [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let sign = |p: &[usize; 3]| -> i64 {
        let mut s = 1i64;
        for a in 0..3 {
            for b in a + 1..3 {
                if p[a] > p[b] {
                    s = -s;
                }
            }
        }
        s
    };
    // standard representation: action on basis b1 = e0 - e1, b2 = e1 - e2
    let std_rep = |p: &[usize; 3]| -> [[i64; 2]; 2] {
        // image of e_i is e_{p[i]}; express p(b1), p(b2) in (b1, b2):
        // a0·e0 + a1·e1 + a2·e2 with Σa = 0 equals a0·b1 − a2·b2
        let image = |from: usize, to: usize| -> [i64; 3] {
            let mut v = [0i64; 3];
            v[p[from]] += 1;
            v[p[to]] -= 1;
            v
        };
        let b1 = image(0, 1);
        let b2 = image(1, 2);
        [[b1[0], b2[0]], [-b1[2], -b2[2]]]
    };
    let mut columns = Vec::with_capacity(6);
    for p in &perms {
        let rho = std_rep(p);
        let col: Vec<_> = [1, sign(p), rho[0][0], rho[0][1], rho[1][0], rho[1][1]]
            .iter()
            .map(|&v| f.from_i64(v))
            .collect();
        columns.push(col);
    }
    let matrix = Mat::from_columns(f, columns);
    DecompositionMap::new(matrix, vec![(1, 1), (1, 1), (2, 1)])
}

// ---------------------------------------------------------------------------
// Operation counting
// ---------------------------------------------------------------------------

/// Per-strategy bilinear multiplication counts for one group-algebra
/// product, with the minimizing strategy flagged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpCountReport {
    pub entries: Vec<(String, u64)>,
    pub best: String,
}

impl OpCountReport {
    pub fn new(entries: Vec<(String, u64)>) -> OpCountReport {
        assert!(!entries.is_empty());
        let best = entries
            .iter()
            .min_by_key(|(_, c)| *c)
            .map(|(n, _)| n.clone())
            .expect("nonempty");
        OpCountReport { entries, best }
    }

    pub fn count(&self, name: &str) -> Option<u64> {
        self.entries.iter().find(|(n, _)| n == name).map(|&(_, c)| c)
    }
}

/// Counts for the strategies available on a group: naive always; ntt when
/// the DFT preconditions hold (abelian, q given and admissible);
/// decomposed when a verified map is supplied.
pub fn opcount_compare(
    group: &FiniteGroup,
    ntt_available: bool,
    decomposed_count: Option<u64>,
) -> OpCountReport {
    let mut entries = vec![("naive".to_string(), naive_count(group.order()))];
    if ntt_available {
        entries.push(("ntt".to_string(), ntt_count(group.order())));
    }
    if let Some(c) = decomposed_count {
        entries.push(("decomposed".to_string(), c));
    }
    OpCountReport::new(entries)
}

// ---------------------------------------------------------------------------
// Map file format
// ---------------------------------------------------------------------------

/// Renders the map file: `dim`, `field`, `blocks` (n:d pairs), then dim
/// rows of the matrix.
pub fn format_map_file<F: Field>(map: &DecompositionMap<F>, field: &F) -> String {
    let field_tag = match field.spec() {
        FieldSpec::Rational => "Q".to_string(),
        FieldSpec::Prime(p) => p.to_string(),
    };
    let dim = map.matrix.rows();
    let blocks: Vec<String> = map.blocks.iter().map(|&(n, d)| format!("{n}:{d}")).collect();
    let mut out = format!("dim {dim}\nfield {field_tag}\nblocks {}\n", blocks.join(" "));
    for i in 0..dim {
        let row: Vec<String> = (0..dim).map(|j| field.format_elem(map.matrix.at(i, j))).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub enum ParsedMap {
    Rational(DecompositionMap<Rationals>),
    Prime(DecompositionMap<PrimeField>),
}

pub fn parse_map_file(text: &str) -> Result<ParsedMap, FastmulError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = |lines: &mut dyn Iterator<Item = &str>, key: &str| -> Result<String, FastmulError> {
        let line = lines
            .next()
            .ok_or_else(|| FastmulError::BadFile(format!("missing `{key}` line")))?;
        line.strip_prefix(key)
            .map(|rest| rest.trim().to_string())
            .ok_or_else(|| FastmulError::BadFile(format!("expected `{key}`, got `{line}`")))
    };
    let dim: usize = header(&mut lines, "dim")?
        .parse()
        .map_err(|_| FastmulError::BadFile("bad dim".into()))?;
    let field_tag = header(&mut lines, "field")?;
    let blocks_line = header(&mut lines, "blocks")?;
    let blocks: Vec<(u32, u32)> = blocks_line
        .split_whitespace()
        .map(|tok| {
            let (n, d) = tok
                .split_once(':')
                .ok_or_else(|| FastmulError::BadFile(format!("bad block `{tok}`")))?;
            Ok((
                n.parse().map_err(|_| FastmulError::BadFile(format!("bad block `{tok}`")))?,
                d.parse().map_err(|_| FastmulError::BadFile(format!("bad block `{tok}`")))?,
            ))
        })
        .collect::<Result<_, FastmulError>>()?;

    fn read_matrix<F: Field>(
        field: F,
        dim: usize,
        blocks: Vec<(u32, u32)>,
        lines: &mut dyn Iterator<Item = &str>,
    ) -> Result<DecompositionMap<F>, FastmulError> {
        let mut rows = Vec::with_capacity(dim);
        for _ in 0..dim {
            let line = lines
                .next()
                .ok_or_else(|| FastmulError::BadFile("missing matrix row".into()))?;
            let row: Result<Vec<F::Elem>, FieldError> =
                line.split_whitespace().map(|v| field.parse_elem(v)).collect();
            let row = row?;
            if row.len() != dim {
                return Err(FastmulError::BadFile(format!(
                    "matrix row has {} entries, expected {dim}",
                    row.len()
                )));
            }
            rows.push(row);
        }
        if lines.next().is_some() {
            return Err(FastmulError::BadFile("trailing content after matrix".into()));
        }
        DecompositionMap::new(Mat::from_rows(field, rows), blocks)
    }

    match FieldSpec::parse(&field_tag)? {
        FieldSpec::Rational => Ok(ParsedMap::Rational(read_matrix(Rationals, dim, blocks, &mut lines)?)),
        FieldSpec::Prime(p) => {
            Ok(ParsedMap::Prime(read_matrix(PrimeField::new(p)?, dim, blocks, &mut lines)?))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupSpec};
    use rand::{Rng, SeedableRng};

    fn group(spec: &str) -> FiniteGroup {
        build_group(&GroupSpec::parse(spec).unwrap()).unwrap()
    }

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn naive_hand_values() {
        let g = group("C:4");
        let f = gf(5);
        // (e0 + e1)² = e0 + 2e1 + e2
        let x = vec![1u64, 1, 0, 0];
        assert_eq!(naive_mul(&g, &f, &x, &x).unwrap(), vec![1, 2, 1, 0]);
        // unity law
        let y = vec![3u64, 1, 4, 2];
        let unity = vec![1u64, 0, 0, 0];
        assert_eq!(naive_mul(&g, &f, &unity, &y).unwrap(), y);
        assert!(naive_mul(&g, &f, &[1, 0], &y).is_err());
    }

    #[test]
    fn naive_associativity_over_rationals() {
        let g = group("S:3");
        let f = Rationals;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let rv = |rng: &mut rand_chacha::ChaCha8Rng| -> Vec<_> {
                (0..6).map(|_| f.from_i64(rng.random_range(-4..5))).collect()
            };
            let (x, y, z) = (rv(&mut rng), rv(&mut rng), rv(&mut rng));
            let xy_z = naive_mul(&g, &f, &naive_mul(&g, &f, &x, &y).unwrap(), &z).unwrap();
            let x_yz = naive_mul(&g, &f, &x, &naive_mul(&g, &f, &y, &z).unwrap()).unwrap();
            assert_eq!(xy_z, x_yz);
        }
    }

    #[test]
    fn ntt_agrees_with_naive() {
        for (spec, q) in [("C:4", 5u64), ("C:16", 17), ("A:6,2", 13)] {
            let g = group(spec);
            let f = gf(q);
            let dft = AbelianDft::new(&g, q).unwrap();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(q);
            for _ in 0..200 {
                let x: Vec<u64> = (0..g.order()).map(|_| rng.random_range(0..q)).collect();
                let y: Vec<u64> = (0..g.order()).map(|_| rng.random_range(0..q)).collect();
                assert_eq!(
                    ntt_mul_with(&dft, &x, &y).unwrap(),
                    naive_mul(&g, &f, &x, &y).unwrap(),
                    "{spec}"
                );
            }
        }
    }

    #[test]
    fn ntt_identity() {
        let g = group("C:4");
        let mut unity = vec![0u64; 4];
        unity[g.identity()] = 1;
        let y = vec![2u64, 0, 4, 1];
        assert_eq!(ntt_mul(&g, 5, &unity, &y).unwrap(), y);
    }

    #[test]
    fn s3_builtin_map_verifies() {
        let g = group("S:3");
        let map = builtin_s3_map(&g).unwrap();
        let verified = map.verify(&g, &Rationals, 2).unwrap();
        assert_eq!(verified.bilinear_count(), 9);
    }

    #[test]
    fn corrupted_map_rejected() {
        let g = group("S:3");
        let f = Rationals;
        let map = builtin_s3_map(&g).unwrap();
        // swap two rows of the matrix
        let m = map.matrix();
        let mut rows: Vec<Vec<_>> = (0..6).map(|i| m.row(i).to_vec()).collect();
        rows.swap(2, 3);
        let broken = DecompositionMap::new(Mat::from_rows(f, rows), map.blocks().to_vec()).unwrap();
        assert!(matches!(
            broken.verify(&g, &f, 2),
            Err(FastmulError::NotMultiplicative(_, _)) | Err(FastmulError::NotInvertible)
        ));
    }

    #[test]
    fn decomposed_equals_naive_s3() {
        let g = group("S:3");
        let f = Rationals;
        let verified = builtin_s3_map(&g).unwrap().verify(&g, &f, 2).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..100 {
            let rv = |rng: &mut rand_chacha::ChaCha8Rng| -> Vec<_> {
                (0..6).map(|_| f.from_i64(rng.random_range(-9..10))).collect()
            };
            let (x, y) = (rv(&mut rng), rv(&mut rng));
            let (product, count) = decomposed_mul(&verified, &f, &x, &y).unwrap();
            assert_eq!(product, naive_mul(&g, &f, &x, &y).unwrap());
            assert_eq!(count, 9);
        }
        // identity in, y out, count unchanged
        let mut unity = vec![f.zero(); 6];
        unity[g.identity()] = f.one();
        let y: Vec<_> = (0..6).map(|i| f.from_i64(i)).collect();
        let (product, count) = decomposed_mul(&verified, &f, &unity, &y).unwrap();
        assert_eq!(product, y);
        assert_eq!(count, 9);
    }

    #[test]
    fn decomposed_via_dft_map() {
        let g = group("C:4");
        let f = gf(5);
        let verified = dft_map(&g, 5).unwrap().verify(&g, &f, 2).unwrap();
        assert_eq!(verified.bilinear_count(), 4);
        let x = vec![1u64, 2, 3, 4];
        let y = vec![4u64, 0, 1, 2];
        let (product, count) = decomposed_mul(&verified, &f, &x, &y).unwrap();
        assert_eq!(product, naive_mul(&g, &f, &x, &y).unwrap());
        assert_eq!(count, 4);
    }

    #[test]
    fn division_blocks_not_executable() {
        let g = group("C:2");
        let f = Rationals;
        // pretend k[C2] ≅ one division block of dimension 2: shape is
        // consistent (1·1·2 = 2) but d > 1 must be refused
        let matrix = Mat::identity(f, 2);
        let map = DecompositionMap::new(matrix, vec![(1, 2)]).unwrap();
        assert!(matches!(map.verify(&g, &f, 2), Err(FastmulError::DivisionBlock)));
    }

    #[test]
    fn opcounts() {
        let g16 = group("C:16");
        let r = opcount_compare(&g16, true, None);
        assert_eq!(r.count("naive"), Some(256));
        assert_eq!(r.count("ntt"), Some(16));
        assert_eq!(r.best, "ntt");

        let s3 = group("S:3");
        let r = opcount_compare(&s3, false, Some(9));
        assert_eq!(r.count("naive"), Some(36));
        assert_eq!(r.count("decomposed"), Some(9));
        assert_eq!(r.best, "decomposed");

        let trivial = group("C:1");
        let r = opcount_compare(&trivial, false, None);
        assert_eq!(r.count("naive"), Some(1));
        assert_eq!(r.best, "naive");
    }

    #[test]
    fn map_file_roundtrip() {
        let g = group("S:3");
        let map = builtin_s3_map(&g).unwrap();
        let text = format_map_file(&map, &Rationals);
        let ParsedMap::Rational(parsed) = parse_map_file(&text).unwrap() else {
            panic!("expected rational map");
        };
        assert!(parsed.verify(&g, &Rationals, 2).is_ok());

        let dmap = dft_map(&group("C:4"), 5).unwrap();
        let text = format_map_file(&dmap, &gf(5));
        let ParsedMap::Prime(parsed) = parse_map_file(&text).unwrap() else {
            panic!("expected prime map");
        };
        assert!(parsed.verify(&group("C:4"), &gf(5), 2).is_ok());

        assert!(parse_map_file("dim 2\nfield Q\n").is_err());
        assert!(parse_map_file("dim 1\nfield Q\nblocks 1:1\n1 2\n").is_err());
    }
}
