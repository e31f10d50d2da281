//! Irreducible character degrees over an algebraically closed field of
//! characteristic 0 (equivalently, characteristic p coprime to the group
//! order), and the t_i / T_i statistics the bound formulas consume.
//!
//! Two independent routes produce degree profiles: the Burnside–Dixon
//! modular method on an explicit group ([`degrees_dixon`]) and closed-form
//! catalogs for the named families ([`degrees_catalog`],
//! [`degrees_symmetric`]). Each profile is validated against the
//! completeness identity Σ n_τ² = |G| at construction; the two routes are
//! cross-checked in tests over the whole catalog.

mod dixon;

pub use dixon::degrees_dixon;

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use thiserror::Error;

use crate::group::GroupSpec;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DegreesError {
    #[error("degree multiset {degrees:?} violates completeness: Σn² = {sum} but group order is {order}")]
    CompletenessViolated { degrees: Vec<u64>, sum: u64, order: u64 },
    #[error("a group of order {0} > 1 has at least two irreducible representations")]
    TooFewDegrees(u64),
    #[error("symmetric-group degrees limited to n ≤ {limit} (n! must fit exact 64-bit checks), got n = {n}")]
    SymmetricTooLarge { n: u32, limit: u32 },
    #[error("no degree catalog for {0}; compute degrees with the Dixon method instead")]
    NoCatalog(String),
    #[error("no suitable prime ≡ 1 (mod {exponent}) above {min} found below the cap {cap}")]
    NoSuitablePrime { exponent: u64, min: u64, cap: u64 },
    #[error("class-matrix eigensplitting failed: {0}")]
    SplitFailed(String),
}

/// Multiset of irreducible character degrees n₁ ≤ … ≤ n_t with the group
/// order they decompose.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterDegreeProfile {
    degrees: Vec<u64>,
    group_order: u64,
}

impl CharacterDegreeProfile {
    /// Validates Σ n_τ² = order and (for order > 1) t ≥ 2; degrees are
    /// sorted ascending.
    pub fn new(mut degrees: Vec<u64>, group_order: u64) -> Result<Self, DegreesError> {
        degrees.sort_unstable();
        let sum: u64 = degrees.iter().map(|&d| d * d).sum();
        if sum != group_order || degrees.iter().any(|&d| d == 0) {
            return Err(DegreesError::CompletenessViolated { degrees, sum, order: group_order });
        }
        if group_order > 1 && degrees.len() < 2 {
            return Err(DegreesError::TooFewDegrees(group_order));
        }
        if let Some(&max) = degrees.last() {
            // forced by completeness with t ≥ 2, kept as a hard guard
            debug_assert!(group_order <= 1 || max * max <= group_order - 1);
        }
        Ok(CharacterDegreeProfile { degrees, group_order })
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    /// Number of irreducible representations t (= number of maximal
    /// two-sided ideals of the split group algebra).
    pub fn t(&self) -> usize {
        self.degrees.len()
    }

    pub fn max_degree(&self) -> u64 {
        *self.degrees.last().expect("profile nonempty")
    }

    pub fn stats(&self) -> DegreeStats {
        let mut t_counts = BTreeMap::new();
        for &d in &self.degrees {
            *t_counts.entry(d).or_insert(0u64) += 1;
        }
        DegreeStats { t_counts }
    }
}

/// Degree statistics: t_i = #degrees equal to i, T_i = #degrees ≥ i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeStats {
    t_counts: BTreeMap<u64, u64>,
}

impl DegreeStats {
    /// Number of character degrees equal to `i`.
    pub fn t_i(&self, i: u64) -> u64 {
        self.t_counts.get(&i).copied().unwrap_or(0)
    }

    /// Number of character degrees at least `i`.
    pub fn big_t(&self, i: u64) -> u64 {
        self.t_counts.range(i..).map(|(_, &c)| c).sum()
    }

    pub fn counts(&self) -> &BTreeMap<u64, u64> {
        &self.t_counts
    }
}

/// All partitions of n, parts non-increasing, in lexicographically
/// decreasing order of the part sequence.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        let top = max_part.min(remaining);
        for part in (1..=top).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of standard Young tableaux of the given partition shape, by the
/// hook length formula n! / Π hooks, computed with exact big integers.
pub fn hook_length_degree(shape: &[u32]) -> u64 {
    let n: u32 = shape.iter().sum();
    let mut numerator = BigUint::one();
    for k in 1..=n as u64 {
        numerator *= BigUint::from(k);
    }
    let mut denominator = BigUint::one();
    let conjugate_len = |j: u32| shape.iter().filter(|&&row| row > j).count() as u32;
    for (i, &row) in shape.iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = conjugate_len(j) - i as u32 - 1;
            denominator *= BigUint::from((arm + leg + 1) as u64);
        }
    }
    let (q, r) = num_integer::div_rem(numerator, denominator);
    assert!(r == BigUint::ZERO, "hook product must divide n!");
    q.to_u64().expect("degree fits in u64 for supported n")
}

const SYMMETRIC_LIMIT: u32 = 20;

/// Character degrees of the symmetric group S_n: one degree per partition
/// of n, each the standard-Young-tableaux count of that shape.
pub fn degrees_symmetric(n: u32) -> Result<CharacterDegreeProfile, DegreesError> {
    if n == 0 || n > SYMMETRIC_LIMIT {
        return Err(DegreesError::SymmetricTooLarge { n, limit: SYMMETRIC_LIMIT });
    }
    let degrees: Vec<u64> = partitions(n).iter().map(|shape| hook_length_degree(shape)).collect();
    let order = (1..=n as u64).product();
    CharacterDegreeProfile::new(degrees, order)
}

/// Closed-form degree profiles for the named families that have one.
///
/// SL2:q has no catalog entry here; its degrees go through the Dixon
/// method only (the closed-form representation count for SL(2, q) is not
/// settled uniformly enough to hard-code).
pub fn degrees_catalog(spec: &GroupSpec) -> Result<CharacterDegreeProfile, DegreesError> {
    match spec {
        GroupSpec::Cyclic(n) => CharacterDegreeProfile::new(vec![1; *n as usize], *n),
        GroupSpec::Abelian(ms) => {
            let order: u64 = ms.iter().product();
            CharacterDegreeProfile::new(vec![1; order as usize], order)
        }
        GroupSpec::Dihedral(n) => {
            let n = *n;
            let mut degrees = if n % 2 == 1 { vec![1; 2] } else { vec![1; 4] };
            let two_dim = if n % 2 == 1 { (n - 1) / 2 } else { (n - 2) / 2 };
            degrees.extend(std::iter::repeat_n(2, two_dim as usize));
            CharacterDegreeProfile::new(degrees, 2 * n)
        }
        GroupSpec::Symmetric(n) => degrees_symmetric(*n),
        GroupSpec::Quaternion8 => CharacterDegreeProfile::new(vec![1, 1, 1, 1, 2], 8),
        GroupSpec::Gl2(q) => {
            let q = *q;
            // q−1 linear, q−1 of degree q, (q−1)(q−2)/2 of degree q+1,
            // q(q−1)/2 of degree q−1; t = q² − 1 in total.
            let mut degrees = Vec::new();
            degrees.extend(std::iter::repeat_n(1, (q - 1) as usize));
            degrees.extend(std::iter::repeat_n(q, (q - 1) as usize));
            degrees.extend(std::iter::repeat_n(q + 1, ((q - 1) * (q - 2) / 2) as usize));
            degrees.extend(std::iter::repeat_n(q - 1, (q * (q - 1) / 2) as usize));
            let order = q * q * q * q - q * q * q - q * q + q;
            let profile = CharacterDegreeProfile::new(degrees, order)?;
            debug_assert_eq!(profile.t() as u64, q * q - 1);
            Ok(profile)
        }
        GroupSpec::Frobenius(p) => {
            let p = *p;
            let mut degrees = vec![1; (p - 1) as usize];
            degrees.push(p - 1);
            CharacterDegreeProfile::new(degrees, p * (p - 1))
        }
        other => Err(DegreesError::NoCatalog(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;

    #[test]
    fn partition_counts() {
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(5).len(), 7);
        assert_eq!(partitions(6).len(), 11);
        assert_eq!(partitions(1), vec![vec![1]]);
    }

    #[test]
    fn symmetric_degrees_small() {
        assert_eq!(degrees_symmetric(1).unwrap().degrees(), &[1]);
        assert_eq!(degrees_symmetric(4).unwrap().degrees(), &[1, 1, 2, 3, 3]);
        let s5 = degrees_symmetric(5).unwrap();
        assert_eq!(s5.degrees(), &[1, 1, 4, 4, 5, 5, 6]);
        assert_eq!(s5.group_order(), 120);
        let s6 = degrees_symmetric(6).unwrap();
        assert_eq!(s6.degrees(), &[1, 1, 5, 5, 5, 5, 9, 9, 10, 10, 16]);
        assert!(degrees_symmetric(0).is_err());
        assert!(degrees_symmetric(21).is_err());
    }

    #[test]
    fn catalog_gl2() {
        let p = degrees_catalog(&GroupSpec::Gl2(3)).unwrap();
        assert_eq!(p.degrees(), &[1, 1, 2, 2, 2, 3, 3, 4]);
        assert_eq!(p.t(), 8);
        assert_eq!(p.group_order(), 48);
        let p2 = degrees_catalog(&GroupSpec::Gl2(2)).unwrap();
        assert_eq!(p2.degrees(), &[1, 1, 2]);
    }

    #[test]
    fn catalog_frobenius_and_abelian() {
        let f5 = degrees_catalog(&GroupSpec::Frobenius(5)).unwrap();
        assert_eq!(f5.degrees(), &[1, 1, 1, 1, 4]);
        assert_eq!(f5.t(), 5);
        let a = degrees_catalog(&GroupSpec::Abelian(vec![2, 3])).unwrap();
        assert_eq!(a.degrees(), &[1; 6]);
    }

    #[test]
    fn catalog_dihedral() {
        // odd: D:5 of order 10 → {1,1,2,2}; even: D:4 of order 8 → {1,1,1,1,2}
        assert_eq!(degrees_catalog(&GroupSpec::Dihedral(5)).unwrap().degrees(), &[1, 1, 2, 2]);
        assert_eq!(degrees_catalog(&GroupSpec::Dihedral(4)).unwrap().degrees(), &[1, 1, 1, 1, 2]);
    }

    #[test]
    fn no_catalog_for_sl2() {
        assert!(matches!(
            degrees_catalog(&GroupSpec::Sl2(3)),
            Err(DegreesError::NoCatalog(_))
        ));
    }

    #[test]
    fn stats_maps() {
        let p = CharacterDegreeProfile::new(vec![1, 1, 2, 3, 3], 24).unwrap();
        let s = p.stats();
        assert_eq!(s.t_i(1), 2);
        assert_eq!(s.t_i(2), 1);
        assert_eq!(s.t_i(3), 2);
        assert_eq!(s.big_t(3), 2);
        assert_eq!(s.big_t(7), 0);
        assert_eq!(s.big_t(1), 5);

        let small = CharacterDegreeProfile::new(vec![1, 1, 2], 6).unwrap();
        assert_eq!(small.stats().big_t(3), 0);

        let s6 = degrees_symmetric(6).unwrap();
        assert_eq!(s6.stats().big_t(7), 5);
    }

    #[test]
    fn profile_validation() {
        assert!(matches!(
            CharacterDegreeProfile::new(vec![1, 2], 6),
            Err(DegreesError::CompletenessViolated { .. })
        ));
        assert!(matches!(
            CharacterDegreeProfile::new(vec![2], 4),
            Err(DegreesError::TooFewDegrees(4))
        ));
        // order-1 group: single trivial degree allowed
        assert!(CharacterDegreeProfile::new(vec![1], 1).is_ok());
    }

    #[test]
    fn stats_identities_on_random_profiles() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..200 {
            let t = rng.random_range(1..10usize);
            let degrees: Vec<u64> = (0..t).map(|_| rng.random_range(1..9u64)).collect();
            let order: u64 = degrees.iter().map(|d| d * d).sum();
            let extra = if t < 2 { vec![1] } else { vec![] };
            let mut all = degrees.clone();
            all.extend(&extra);
            let order = order + extra.len() as u64;
            let p = CharacterDegreeProfile::new(all, order).unwrap();
            let s = p.stats();
            // T_i ≥ T_j for i < j; t_i = T_i − T_{i+1}; Σ i² t_i = order
            for i in 1..12u64 {
                assert!(s.big_t(i) >= s.big_t(i + 1));
                assert_eq!(s.t_i(i), s.big_t(i) - s.big_t(i + 1));
            }
            let total: u64 = (1..12u64).map(|i| i * i * s.t_i(i)).sum();
            assert_eq!(total, p.group_order());
        }
    }

    /// Independent oracle: count standard Young tableaux by recursive
    /// corner removal, no hook products involved.
    fn count_syt(shape: &mut Vec<u32>) -> u64 {
        if shape.is_empty() {
            return 1;
        }
        let mut total = 0;
        for i in 0..shape.len() {
            let is_corner = i + 1 == shape.len() || shape[i] > shape[i + 1];
            if !is_corner {
                continue;
            }
            shape[i] -= 1;
            let removed = if shape[i] == 0 { Some(shape.remove(i)) } else { None };
            total += count_syt(shape);
            match removed {
                Some(v) => shape.insert(i, v + 1),
                None => shape[i] += 1,
            }
        }
        total
    }

    #[test]
    fn hook_length_matches_tableaux_enumeration() {
        for n in 1..=6u32 {
            for shape in partitions(n) {
                let by_hooks = hook_length_degree(&shape);
                let by_enumeration = count_syt(&mut shape.clone());
                assert_eq!(by_hooks, by_enumeration, "shape {shape:?}");
            }
        }
    }
}
