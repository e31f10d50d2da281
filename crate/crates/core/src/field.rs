//! Exact ground fields: the rationals and prime fields GF(q).
//!
//! Every algebraic computation in this crate is exact. The two ground
//! fields an algebra can live over are ℚ (arbitrary-precision rationals)
//! and GF(q) with q prime. Prime-power fields occur only inside group
//! construction (see [`crate::group`]) and never as algebra ground fields.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("bad field spec `{0}`: expected `Q` or a prime number")]
    BadSpec(String),
    #[error("cannot parse `{value}` as an element of {field}")]
    BadElement { value: String, field: FieldSpec },
}

/// Ground-field tag as written in files, flags and reports: `Q` or a prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl FieldSpec {
    pub fn parse(s: &str) -> Result<FieldSpec, FieldError> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rational);
        }
        match s.parse::<u64>() {
            Ok(p) if arith::is_prime(p) => Ok(FieldSpec::Prime(p)),
            Ok(p) => Err(FieldError::NotPrime(p)),
            Err(_) => Err(FieldError::BadSpec(s.to_string())),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// Exact field arithmetic on carried element values.
///
/// Implementations are lightweight context objects: zero-sized for ℚ, one
/// modulus word for GF(q). Elements do not know their field, so all
/// operations go through the context.
pub trait Field: Clone + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn spec(&self) -> FieldSpec;
    /// Number of elements, `None` for infinite fields.
    fn size(&self) -> Option<u64>;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn parse_elem(&self, s: &str) -> Result<Self::Elem, FieldError>;
    fn format_elem(&self, a: &Self::Elem) -> String;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// `count` pairwise distinct elements (0, 1, 2, …), or `None` if the
    /// field has fewer than `count` elements.
    fn distinct_points(&self, count: usize) -> Option<Vec<Self::Elem>> {
        if let Some(q) = self.size() {
            if count as u128 > q as u128 {
                return None;
            }
        }
        Some((0..count).map(|i| self.from_i64(i as i64)).collect())
    }
}

/// The field ℚ with `BigRational` elements.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rational
    }

    fn size(&self) -> Option<u64> {
        None
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn parse_elem(&self, s: &str) -> Result<BigRational, FieldError> {
        BigRational::from_str(s.trim()).map_err(|_| FieldError::BadElement {
            value: s.to_string(),
            field: FieldSpec::Rational,
        })
    }

    fn format_elem(&self, a: &BigRational) -> String {
        a.to_string()
    }
}

/// GF(q) for prime q, elements stored as reduced `u64` residues.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    q: u64,
}

impl PrimeField {
    pub fn new(q: u64) -> Result<PrimeField, FieldError> {
        if arith::is_prime(q) {
            Ok(PrimeField { q })
        } else {
            Err(FieldError::NotPrime(q))
        }
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    pub fn element(&self, v: u64) -> u64 {
        v % self.q
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.q)
    }

    fn size(&self) -> Option<u64> {
        Some(self.q)
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.q
    }

    fn from_i64(&self, n: i64) -> u64 {
        (n as i128).rem_euclid(self.q as i128) as u64
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.q - b
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        arith::mod_mul(*a, *b, self.q)
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.q - a
        }
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            arith::mod_inv(*a, self.q)
        }
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn parse_elem(&self, s: &str) -> Result<u64, FieldError> {
        s.trim()
            .parse::<i64>()
            .map(|v| self.from_i64(v))
            .map_err(|_| FieldError::BadElement {
                value: s.to_string(),
                field: self.spec(),
            })
    }

    fn format_elem(&self, a: &u64) -> String {
        a.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_parsing() {
        assert_eq!(FieldSpec::parse("Q").unwrap(), FieldSpec::Rational);
        assert_eq!(FieldSpec::parse("q").unwrap(), FieldSpec::Rational);
        assert_eq!(FieldSpec::parse("7").unwrap(), FieldSpec::Prime(7));
        assert_eq!(FieldSpec::parse("9"), Err(FieldError::NotPrime(9)));
        assert!(matches!(FieldSpec::parse("x"), Err(FieldError::BadSpec(_))));
    }

    #[test]
    fn prime_field_axioms() {
        let f = PrimeField::new(7).unwrap();
        for a in 0..7u64 {
            for b in 0..7u64 {
                assert_eq!(f.add(&a, &b), (a + b) % 7);
                assert_eq!(f.mul(&a, &b), (a * b) % 7);
                assert_eq!(f.add(&f.sub(&a, &b), &b), a);
            }
            assert_eq!(f.add(&a, &f.neg(&a)), 0);
            if a != 0 {
                assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
            }
        }
        assert_eq!(f.inv(&0), None);
        assert_eq!(f.from_i64(-1), 6);
        assert!(PrimeField::new(10).is_err());
    }

    #[test]
    fn rational_parse_format() {
        let f = Rationals;
        let x = f.parse_elem("3/4").unwrap();
        let y = f.parse_elem("-2").unwrap();
        assert_eq!(f.format_elem(&f.mul(&x, &y)), "-3/2");
        assert!(f.parse_elem("3/").is_err());
        assert_eq!(f.format_elem(&f.from_i64(5)), "5");
    }

    #[test]
    fn distinct_points_bounds() {
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(f2.distinct_points(2), Some(vec![0, 1]));
        assert_eq!(f2.distinct_points(3), None);
        assert_eq!(Rationals.distinct_points(4).unwrap().len(), 4);
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let f = PrimeField::new(13).unwrap();
        let mut acc = 1u64;
        for e in 0..20u64 {
            assert_eq!(f.pow(&6, e), acc);
            acc = f.mul(&acc, &6);
        }
    }
}
