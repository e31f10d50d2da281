//! Exact structure theory and bilinear-complexity bounds for finite group
//! algebras.
//!
//! The crate computes, with exact arithmetic throughout:
//!
//! * finite groups as explicit multiplication tables, with conjugacy
//!   classes, centers, Sylow subgroups and exponents ([`group`]);
//! * irreducible character degrees over algebraically closed fields of
//!   characteristic zero, by the Burnside–Dixon modular method and by
//!   closed-form catalogs ([`degrees`]);
//! * finite-dimensional associative algebras given by structural constants,
//!   group algebras, matrix algebras, and radical-power dimension sequences
//!   in the modular case ([`algebra`]);
//! * bilinear multiplication algorithms: evaluation, complete verification
//!   against an algebra, Strassen-type constructions, interpolation
//!   algorithms for extension fields, abelian DFT diagonalization, and
//!   exhaustive rank search for very small algebras ([`bilinear`]);
//! * the classical lower and upper bounds on bilinear complexity
//!   (Alder–Strassen, Bläser's 5/2 and matrix bounds, radical-power bounds,
//!   Schönhage roots, exponent-conditional estimates) evaluated exactly on
//!   concrete degree and radical profiles ([`bounds`]);
//! * group-algebra multiplication three ways — naive convolution, number
//!   theoretic transform, and block-decomposed multiplication — with
//!   bilinear operation accounting ([`fastmul`]).
//!
//! No floating point is used on any algebraic path; `f64` appears only in
//! explicitly labeled numeric bound indicators (Schönhage roots and
//! exponent-parameterized estimates).

pub mod algebra;
pub mod arith;
pub mod bilinear;
pub mod bounds;
pub mod degrees;
pub mod dft;
pub mod fastmul;
pub mod field;
pub mod group;
pub mod linalg;

pub use algebra::{AlgebraError, FiniteDimAlgebra, RadicalProfile};
pub use bilinear::{BilinearAlgorithm, BilinearError, Verification};
pub use bounds::{BoundEntry, BoundKind, BoundReport, BoundsError, OmegaParam};
pub use degrees::{CharacterDegreeProfile, DegreeStats, DegreesError};
pub use field::{Field, FieldError, FieldSpec, PrimeField, Rationals};
pub use group::{ConjugacyPartition, FiniteGroup, GroupError, GroupSpec, SylowSubgroup};
