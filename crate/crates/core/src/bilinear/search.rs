//! Exhaustive bilinear rank search for very small algebras over GF(2) and
//! GF(3).
//!
//! The search enumerates normalized triples — leading coefficient of u
//! and of v fixed to 1 (scales absorbed into w), triple sequences required
//! to be lexicographically nondecreasing to kill permutation symmetry —
//! and walks lengths r = 1, 2, … upward, so the first witness found is a
//! minimal one and is lexicographically least among minimal witnesses.
//! Prefixes are pruned by matricization rank: every mode unfolding of the
//! residual tensor must have rank at most the number of remaining slots.

use crate::algebra::FiniteDimAlgebra;
use crate::bilinear::{BilinearAlgorithm, BilinearError, Triple, Verification};
use crate::field::{Field, PrimeField};
use crate::linalg::Mat;

/// Feasibility envelope for the exhaustive search.
const MAX_DIM: usize = 3;
const MAX_RMAX: usize = 6;

/// Outcome of [`brute_force_rank`].
#[derive(Clone, Debug)]
pub enum RankSearchResult {
    /// Minimal rank found, with a verified witness of that length.
    Exact { rank: usize, witness: BilinearAlgorithm<PrimeField> },
    /// No algorithm of length ≤ r_max exists.
    ExceedsMax { r_max: usize },
}

/// Exhaustive minimal-rank search. Errors with
/// [`BilinearError::SearchInfeasible`] outside the supported envelope
/// (GF(2)/GF(3), dim ≤ 3, r_max ≤ 6), reporting the estimated search size.
pub fn brute_force_rank(
    algebra: &FiniteDimAlgebra<PrimeField>,
    r_max: usize,
) -> Result<RankSearchResult, BilinearError> {
    let field = *algebra.field();
    let q = field.modulus();
    let d = algebra.dim();
    let candidates_estimate = {
        let nonzero = (q as f64).powi(d as i32) - 1.0;
        let normalized = nonzero / (q as f64 - 1.0);
        normalized * normalized * nonzero
    };
    if !matches!(q, 2 | 3) || d > MAX_DIM || r_max > MAX_RMAX {
        return Err(BilinearError::SearchInfeasible(format!(
            "supported envelope is GF(2)/GF(3), dim <= {MAX_DIM}, r_max <= {MAX_RMAX} \
             (got GF({q}), dim {d}, r_max {r_max}; ~{:.1e} triples per slot)",
            candidates_estimate
        )));
    }

    // target tensor T[i][j][nu] = alpha_{ij}^nu, flattened
    let mut target = vec![0u64; d * d * d];
    for i in 0..d {
        for j in 0..d {
            for (nu, a) in algebra.basis_product(i, j) {
                target[(i * d + j) * d + *nu as usize] = *a;
            }
        }
    }

    let candidates = enumerate_candidates(field, d);
    for r in 0..=r_max {
        let mut residual = target.clone();
        let mut chosen: Vec<usize> = Vec::with_capacity(r);
        if search(field, d, &candidates, &mut residual, 0, r, &mut chosen) {
            let triples: Vec<Triple<PrimeField>> =
                chosen.iter().map(|&idx| candidates[idx].triple.clone()).collect();
            let witness = BilinearAlgorithm::new(field, (d, d, d), triples)?;
            debug_assert_eq!(witness.verify(algebra)?, Verification::Valid);
            return Ok(RankSearchResult::Exact { rank: r, witness });
        }
    }
    Ok(RankSearchResult::ExceedsMax { r_max })
}

struct Candidate {
    triple: Triple<PrimeField>,
    /// Flattened rank-one tensor u ⊗ v ⊗ w.
    tensor: Vec<u64>,
}

/// All normalized candidate triples in lexicographic order of their
/// (u, v, w) coefficient codes: u and v run over leading-one vectors, w
/// over all nonzero vectors.
fn enumerate_candidates(field: PrimeField, d: usize) -> Vec<Candidate> {
    let q = field.modulus();
    let total = q.pow(d as u32);
    let decode = |code: u64| -> Vec<u64> {
        // big-endian digits so numeric order equals lexicographic order
        let mut v = vec![0u64; d];
        let mut c = code;
        for slot in v.iter_mut().rev() {
            *slot = c % q;
            c /= q;
        }
        v
    };
    let leading_one: Vec<Vec<u64>> = (1..total)
        .map(decode)
        .filter(|v| v.iter().find(|&&c| c != 0) == Some(&1))
        .collect();
    let nonzero: Vec<Vec<u64>> = (1..total).map(decode).collect();

    let mut out = Vec::with_capacity(leading_one.len() * leading_one.len() * nonzero.len());
    for u in &leading_one {
        for v in &leading_one {
            for w in &nonzero {
                let mut tensor = vec![0u64; d * d * d];
                for (i, &ui) in u.iter().enumerate() {
                    if ui == 0 {
                        continue;
                    }
                    for (j, &vj) in v.iter().enumerate() {
                        if vj == 0 {
                            continue;
                        }
                        let uv = field.mul(&ui, &vj);
                        for (nu, &wn) in w.iter().enumerate() {
                            tensor[(i * d + j) * d + nu] = field.mul(&uv, &wn);
                        }
                    }
                }
                out.push(Candidate {
                    triple: Triple { u: u.clone(), v: v.clone(), w: w.clone() },
                    tensor,
                });
            }
        }
    }
    out
}

fn search(
    field: PrimeField,
    d: usize,
    candidates: &[Candidate],
    residual: &mut [u64],
    start: usize,
    remaining: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if residual.iter().all(|&x| x == 0) {
        return true;
    }
    if remaining == 0 {
        return false;
    }
    if mode_rank_exceeds(field, d, residual, remaining) {
        return false;
    }
    for idx in start..candidates.len() {
        let cand = &candidates[idx];
        for (r, t) in residual.iter_mut().zip(&cand.tensor) {
            *r = field.sub(r, t);
        }
        chosen.push(idx);
        if search(field, d, candidates, residual, idx, remaining - 1, chosen) {
            return true;
        }
        chosen.pop();
        for (r, t) in residual.iter_mut().zip(&cand.tensor) {
            *r = field.add(r, t);
        }
    }
    false
}

/// True when some mode unfolding of the residual has rank above the
/// remaining slot count — then no completion is possible, since the
/// matricization rank lower-bounds tensor rank.
fn mode_rank_exceeds(field: PrimeField, d: usize, tensor: &[u64], remaining: usize) -> bool {
    for mode in 0..3 {
        let rows: Vec<Vec<u64>> = (0..d)
            .map(|a| {
                let mut row = Vec::with_capacity(d * d);
                for b in 0..d {
                    for c in 0..d {
                        let (i, j, nu) = match mode {
                            0 => (a, b, c),
                            1 => (b, a, c),
                            _ => (b, c, a),
                        };
                        row.push(tensor[(i * d + j) * d + nu]);
                    }
                }
                row
            })
            .collect();
        if Mat::from_rows(field, rows).rank() > remaining {
            return true;
        }
    }
    false
}
