//! Character degrees by the Burnside–Dixon modular method.
//!
//! Let C_1, …, C_t be the conjugacy classes of G with sizes h_i and class
//! sums z_i. The class sums span the center of the group algebra, and
//! z_i z_j = Σ_k a_{ijk} z_k with non-negative integer class constants
//! a_{ijk}. Over a prime field GF(ℓ) with
//!
//!   ℓ ≡ 1 (mod exponent(G))   and   ℓ > 2·√|G|,
//!
//! the center splits completely: the t commuting class matrices
//! M_i = (a_{ijk})_{kj} have t common one-dimensional eigenspaces. On the
//! eigenvector belonging to the irreducible character χ of degree d, M_i
//! has eigenvalue ω_i = h_i χ(g_i) / d, and the column orthogonality
//! relation gives
//!
//!   d² ≡ |G| · (Σ_i ω_i ω_{i'} / h_i)⁻¹  (mod ℓ),
//!
//! where i' is the class of inverses of C_i. Since 0 < d ≤ √|G| < ℓ/2, the
//! residue d² has a unique square root in (0, ℓ/2), so degrees lift
//! uniquely to the integers. Only degrees are extracted; the method never
//! materializes character values.
//!
//! The congruence condition forces ℓ ∤ |G| (an ℓ dividing |G| would divide
//! the exponent, contradicting ℓ ≡ 1 mod exponent), so all divisions by
//! |G| and h_i are well-defined.

use crate::arith;
use crate::degrees::{CharacterDegreeProfile, DegreesError};
use crate::field::{Field, PrimeField};
use crate::group::FiniteGroup;
use crate::linalg::{simultaneous_eigenbasis, Mat};

/// Cap on the modular prime search; reached only for exotic exponents.
const PRIME_CAP: u64 = 1_000_000;

/// Smallest prime ℓ ≡ 1 (mod exponent) with ℓ > 2√(order).
pub(crate) fn dixon_prime(exponent: u64, order: u64) -> Result<u64, DegreesError> {
    let min = 2 * arith::isqrt(order) + 1;
    let mut candidate = exponent + 1;
    while candidate <= PRIME_CAP {
        if candidate >= min && arith::is_prime(candidate) {
            return Ok(candidate);
        }
        candidate += exponent;
    }
    Err(DegreesError::NoSuitablePrime { exponent, min, cap: PRIME_CAP })
}

/// Exact character degrees of G over an algebraically closed field of
/// characteristic 0 (or p coprime to |G|).
pub fn degrees_dixon(group: &FiniteGroup) -> Result<CharacterDegreeProfile, DegreesError> {
    let order = group.order() as u64;
    if order == 1 {
        return CharacterDegreeProfile::new(vec![1], 1);
    }
    let classes = group.conjugacy_classes();
    let t = classes.count();
    let ell = dixon_prime(group.exponent(), order)?;
    let field = PrimeField::new(ell).expect("dixon prime is prime");

    // class matrices M_i with (M_i)_{kj} = a_{ijk}: column j of M_i holds
    // the class-sum coordinates of z_i · z_j
    let reps: Vec<usize> = classes.classes().iter().map(|c| c[0]).collect();
    let sizes: Vec<u64> = classes.sizes().iter().map(|&s| s as u64).collect();
    let mut matrices = vec![Mat::zero(field, t, t); t];
    for (i, class_i) in classes.classes().iter().enumerate() {
        for (j, class_j) in classes.classes().iter().enumerate() {
            // count products x·y landing on the representative of each class;
            // scanning x over C_i and y over C_j hits rep_k exactly a_{ijk}
            // times per element of C_k, so count hits on rep_k directly
            let mut hits = vec![0u64; t];
            for &x in class_i {
                for &y in class_j {
                    let p = group.mul(x, y);
                    hits[classes.class_of(p)] += 1;
                }
            }
            for (k, &h) in hits.iter().enumerate() {
                // a_{ijk} = hits_k / |C_k|
                debug_assert_eq!(h % sizes[k], 0);
                let a = h / sizes[k];
                matrices[i].set(k, j, field.element(a));
            }
        }
    }

    let eigenvectors = simultaneous_eigenbasis(field, &matrices)
        .map_err(|e| DegreesError::SplitFailed(e.to_string()))?;
    if eigenvectors.len() != t {
        return Err(DegreesError::SplitFailed(format!(
            "found {} common eigenvectors, expected {t}",
            eigenvectors.len()
        )));
    }

    // inverse-class pairing
    let inverse_class: Vec<usize> =
        reps.iter().map(|&r| classes.class_of(group.inv(r))).collect();

    let order_mod = field.element(order);
    let mut degrees = Vec::with_capacity(t);
    for v in &eigenvectors {
        let pivot = v
            .iter()
            .position(|&x| x != 0)
            .ok_or_else(|| DegreesError::SplitFailed("zero eigenvector".into()))?;
        let pivot_inv = field.inv(&v[pivot]).expect("pivot nonzero");
        // eigenvalues ω_i from M_i v = ω_i v
        let omega: Vec<u64> = matrices
            .iter()
            .map(|m| {
                let image = m.mul_vec(v);
                field.mul(&image[pivot], &pivot_inv)
            })
            .collect();
        let mut sum = field.zero();
        for i in 0..t {
            let hi_inv = field.inv(&field.element(sizes[i])).expect("h_i < ℓ, ℓ ∤ |G|");
            let term = field.mul(&field.mul(&omega[i], &omega[inverse_class[i]]), &hi_inv);
            sum = field.add(&sum, &term);
        }
        let sum_inv = field
            .inv(&sum)
            .ok_or_else(|| DegreesError::SplitFailed("degenerate orthogonality sum".into()))?;
        let d_squared = field.mul(&order_mod, &sum_inv);
        let degree = lift_degree(d_squared, order, ell).ok_or_else(|| {
            DegreesError::SplitFailed(format!("no degree lift for residue {d_squared}"))
        })?;
        degrees.push(degree);
    }
    CharacterDegreeProfile::new(degrees, order)
}

/// Unique d with 0 < d ≤ √order and d² ≡ residue (mod ℓ). Uniqueness:
/// two candidates d₁, d₂ ≤ √order < ℓ/2 with equal squares mod ℓ satisfy
/// ℓ | (d₁−d₂)(d₁+d₂), and both factors are smaller than ℓ in magnitude.
fn lift_degree(residue: u64, order: u64, ell: u64) -> Option<u64> {
    let max = arith::isqrt(order);
    (1..=max).find(|&d| arith::mod_mul(d, d, ell) == residue)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupSpec};

    fn dixon(spec: &str) -> CharacterDegreeProfile {
        let g = build_group(&GroupSpec::parse(spec).unwrap()).unwrap();
        degrees_dixon(&g).unwrap()
    }

    #[test]
    fn prime_selection() {
        // S3: exponent 6, order 6, 2√6 ≈ 4.9 → smallest prime ≡ 1 mod 6 above 5 is 7
        assert_eq!(dixon_prime(6, 6).unwrap(), 7);
        // S6: exponent 60, order 720, 2√720 ≈ 53.7 → 61
        assert_eq!(dixon_prime(60, 720).unwrap(), 61);
        // C32: exponent 32, order 32 → 97
        assert_eq!(dixon_prime(32, 32).unwrap(), 97);
    }

    #[test]
    fn s3_degrees() {
        assert_eq!(dixon("S:3").degrees(), &[1, 1, 2]);
    }

    #[test]
    fn q8_degrees() {
        assert_eq!(dixon("Q8").degrees(), &[1, 1, 1, 1, 2]);
    }

    #[test]
    fn s4_degrees() {
        assert_eq!(dixon("S:4").degrees(), &[1, 1, 2, 3, 3]);
    }

    #[test]
    fn t_equals_class_count() {
        for spec in ["C:7", "D:6", "S:4", "F:5", "Q8", "SL2:3"] {
            let g = build_group(&GroupSpec::parse(spec).unwrap()).unwrap();
            let profile = degrees_dixon(&g).unwrap();
            assert_eq!(profile.t(), g.conjugacy_classes().count(), "{spec}");
        }
    }

    #[test]
    fn sl2_3_degrees() {
        // seven classes; Σn² = 24 forces {1,1,1,2,2,2,3}
        assert_eq!(dixon("SL2:3").degrees(), &[1, 1, 1, 2, 2, 2, 3]);
    }
}
