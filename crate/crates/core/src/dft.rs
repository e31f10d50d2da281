//! Discrete Fourier transform of an abelian group algebra over GF(q).
//!
//! For abelian G and prime q with q ≡ 1 (mod exponent(G)) and q ∤ |G|,
//! GF(q)[G] splits into |G| one-dimensional blocks; the diagonalizing
//! transform is the character table of G over GF(q). Characters are
//! extracted as the common eigenvectors of the translation operators of a
//! generating set: the primitive idempotent e_χ has coordinates
//! proportional to χ(g⁻¹), so χ is read off an eigenvector by
//! χ(g_i) = v[inv(i)] / v[identity].

use thiserror::Error;

use crate::field::{Field, PrimeField};
use crate::group::FiniteGroup;
use crate::linalg::{simultaneous_eigenbasis, Mat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DftError {
    #[error("group {0} is not abelian")]
    NotAbelian(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("q = {q} does not satisfy q ≡ 1 (mod {exponent}) for exponent(G)")]
    MissingRoots { q: u64, exponent: u64 },
    #[error("q = {q} divides the group order {order}")]
    CharacteristicDividesOrder { q: u64, order: u64 },
    #[error("character extraction failed: {0}")]
    SplitFailed(String),
}

/// Forward/inverse DFT matrices for GF(q)[G], G abelian.
///
/// `forward` has rows χ_ρ(g_i); `inverse` undoes it, so pointwise
/// multiplication between the two transforms computes the group-algebra
/// product with exactly |G| bilinear multiplications.
#[derive(Clone, Debug)]
pub struct AbelianDft {
    field: PrimeField,
    forward: Mat<PrimeField>,
    inverse: Mat<PrimeField>,
}

impl AbelianDft {
    pub fn new(group: &FiniteGroup, q: u64) -> Result<AbelianDft, DftError> {
        if !crate::arith::is_prime(q) {
            return Err(DftError::NotPrime(q));
        }
        if !group.is_abelian() {
            return Err(DftError::NotAbelian(group.label().to_string()));
        }
        let n = group.order();
        if n as u64 % q == 0 {
            return Err(DftError::CharacteristicDividesOrder { q, order: n as u64 });
        }
        let exponent = group.exponent();
        if (q - 1) % exponent != 0 {
            return Err(DftError::MissingRoots { q, exponent });
        }
        let field = PrimeField::new(q).expect("q checked prime");

        // translation operators of a greedy generating set
        let generators = greedy_generators(group);
        let ops: Vec<Mat<PrimeField>> = generators
            .iter()
            .map(|&g| {
                let mut m = Mat::zero(field, n, n);
                for i in 0..n {
                    m.set(group.mul(g, i), i, 1);
                }
                m
            })
            .collect();
        let eigenvectors = simultaneous_eigenbasis(field, &ops)
            .map_err(|e| DftError::SplitFailed(e.to_string()))?;
        if eigenvectors.len() != n {
            return Err(DftError::SplitFailed(format!(
                "found {} characters, expected {n}",
                eigenvectors.len()
            )));
        }

        // characters from eigenvectors
        let mut characters: Vec<Vec<u64>> = eigenvectors
            .iter()
            .map(|v| {
                let at_identity = v[group.identity()];
                let scale = field
                    .inv(&at_identity)
                    .ok_or_else(|| DftError::SplitFailed("eigenvector vanishes at identity".into()))?;
                Ok((0..n).map(|i| field.mul(&v[group.inv(i)], &scale)).collect())
            })
            .collect::<Result<_, DftError>>()?;
        characters.sort_unstable();

        // complete multiplicativity check: χ(g_i g_j) = χ(g_i) χ(g_j)
        for chi in &characters {
            for i in 0..n {
                for j in 0..n {
                    if chi[group.mul(i, j)] != field.mul(&chi[i], &chi[j]) {
                        return Err(DftError::SplitFailed(format!(
                            "non-multiplicative character at pair ({i}, {j})"
                        )));
                    }
                }
            }
        }

        let forward = Mat::from_rows(field, characters);
        // inverse[l][ρ] = (1/n) χ_ρ(g_l⁻¹)
        let n_inv = field
            .inv(&field.element(n as u64))
            .expect("q does not divide n");
        let mut inverse = Mat::zero(field, n, n);
        for l in 0..n {
            for rho in 0..n {
                let v = field.mul(forward.at(rho, group.inv(l)), &n_inv);
                inverse.set(l, rho, v);
            }
        }
        debug_assert_eq!(forward.mul_mat(&inverse), Mat::identity(field, n));
        Ok(AbelianDft { field, forward, inverse })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn size(&self) -> usize {
        self.forward.rows()
    }

    /// Character table row access: χ_ρ(g_i).
    pub fn character(&self, rho: usize, i: usize) -> u64 {
        *self.forward.at(rho, i)
    }

    pub fn forward_matrix(&self) -> &Mat<PrimeField> {
        &self.forward
    }

    pub fn inverse_matrix(&self) -> &Mat<PrimeField> {
        &self.inverse
    }

    pub fn transform(&self, x: &[u64]) -> Vec<u64> {
        self.forward.mul_vec(x)
    }

    pub fn inverse_transform(&self, x: &[u64]) -> Vec<u64> {
        self.inverse.mul_vec(x)
    }
}

/// Greedy generating set of a group: smallest element outside the closure
/// so far, repeated.
pub(crate) fn greedy_generators(group: &FiniteGroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut closure = group.subgroup_closure(&[]);
    while closure.len() < group.order() {
        let next = (0..group.order())
            .find(|i| closure.binary_search(i).is_err())
            .expect("closure incomplete");
        gens.push(next);
        closure = group.subgroup_closure(&gens);
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupSpec};

    fn group(spec: &str) -> FiniteGroup {
        build_group(&GroupSpec::parse(spec).unwrap()).unwrap()
    }

    #[test]
    fn z4_over_gf5() {
        let g = group("C:4");
        let dft = AbelianDft::new(&g, 5).unwrap();
        assert_eq!(dft.size(), 4);
        // transform roundtrip
        let x = vec![1, 2, 3, 4];
        assert_eq!(dft.inverse_transform(&dft.transform(&x)), x);
    }

    #[test]
    fn klein_over_gf3() {
        let g = group("A:2,2");
        let dft = AbelianDft::new(&g, 3).unwrap();
        assert_eq!(dft.size(), 4);
        // all characters take values ±1
        for rho in 0..4 {
            for i in 0..4 {
                assert!(matches!(dft.character(rho, i), 1 | 2));
            }
        }
    }

    #[test]
    fn preconditions() {
        assert!(matches!(AbelianDft::new(&group("S:3"), 7), Err(DftError::NotAbelian(_))));
        // exponent(C4) = 4, 7 ≢ 1 mod 4
        assert!(matches!(AbelianDft::new(&group("C:4"), 7), Err(DftError::MissingRoots { .. })));
        // q | order
        assert!(matches!(
            AbelianDft::new(&group("C:5"), 5),
            Err(DftError::CharacteristicDividesOrder { .. })
        ));
        assert!(matches!(AbelianDft::new(&group("C:4"), 9), Err(DftError::NotPrime(9))));
    }

    #[test]
    fn convolution_theorem_z6z2_gf13() {
        let g = group("A:6,2");
        let dft = AbelianDft::new(&g, 13).unwrap();
        let f = dft.field();
        let x: Vec<u64> = (0..12).map(|i| (i * 7 + 3) % 13).collect();
        let y: Vec<u64> = (0..12).map(|i| (i * i + 1) % 13).collect();
        // pointwise product in transform domain vs naive convolution
        let (tx, ty) = (dft.transform(&x), dft.transform(&y));
        let pointwise: Vec<u64> = tx.iter().zip(&ty).map(|(a, b)| f.mul(a, b)).collect();
        let via_dft = dft.inverse_transform(&pointwise);
        let mut naive = vec![0u64; 12];
        for i in 0..12 {
            for j in 0..12 {
                let k = g.mul(i, j);
                naive[k] = f.add(&naive[k], &f.mul(&x[i], &y[j]));
            }
        }
        assert_eq!(via_dft, naive);
    }
}
