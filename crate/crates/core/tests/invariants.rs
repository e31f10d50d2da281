//! Cross-module structural invariants beyond the acceptance criteria:
//! Sylow uniqueness against brute-force subgroup enumeration, the cubic
//! associativity oracle, the modular completeness identity, bound
//! consistency on the modular corpus, and count consistency between the
//! executed and the serialized fast-multiplication algorithms.

use bilrank::algebra::{
    augmentation_radical, radical_powers_generic, wedderburn_sum_check, FiniteDimAlgebra,
    RadicalProfile,
};
use bilrank::bilinear::{
    brute_force_rank, matrix_mult_recursive, BilinearAlgorithm, RankSearchResult,
};
use bilrank::bounds::{modular_blrad, rank_exponent_fit, upper_estimates, OmegaParam};
use bilrank::degrees::degrees_dixon;
use bilrank::fastmul::{builtin_s3_map, decomposed_mul};
use bilrank::field::{Field, PrimeField, Rationals};
use bilrank::group::{build_group, FiniteGroup, GroupSpec};

fn group(spec: &str) -> FiniteGroup {
    build_group(&GroupSpec::parse(spec).unwrap()).unwrap()
}

fn gf(q: u64) -> PrimeField {
    PrimeField::new(q).unwrap()
}

/// Brute-force Sylow subgroup enumeration for small groups: closures of
/// all subsets of p-elements of size up to 4 that land on the full p-part
/// order, deduplicated.
fn all_sylow_subgroups(g: &FiniteGroup, p: u64) -> Vec<Vec<usize>> {
    let p_part = {
        let (e, _) = bilrank::arith::p_adic(g.order() as u64, p);
        p.pow(e)
    };
    let p_elems: Vec<usize> = (0..g.order())
        .filter(|&i| {
            let o = g.element_order(i);
            bilrank::arith::p_adic(o, p).1 == 1
        })
        .collect();
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut consider = |closure: Vec<usize>| {
        if closure.len() as u64 == p_part && !found.contains(&closure) {
            found.push(closure);
        }
    };
    let m = p_elems.len();
    for a in 0..m {
        consider(g.subgroup_closure(&[p_elems[a]]));
        for b in a + 1..m {
            consider(g.subgroup_closure(&[p_elems[a], p_elems[b]]));
            for c in b + 1..m {
                consider(g.subgroup_closure(&[p_elems[a], p_elems[b], p_elems[c]]));
                for d in c + 1..m {
                    consider(g.subgroup_closure(&[p_elems[a], p_elems[b], p_elems[c], p_elems[d]]));
                }
            }
        }
    }
    found.sort();
    found
}

#[test]
fn sylow_uniqueness_matches_brute_force() {
    // the p-element set is closed iff exactly one Sylow p-subgroup exists,
    // checked against brute-force subgroup enumeration for orders <= 48
    let specs = ["C:12", "A:2,4", "A:2,2,2", "D:4", "D:6", "S:3", "S:4", "Q8", "GL2:3", "F:5", "F:7", "SL2:3"];
    for spec_text in specs {
        let g = group(spec_text);
        assert!(g.order() <= 48, "{spec_text} exceeds the brute-force envelope");
        for (p, _) in bilrank::arith::factorize(g.order() as u64) {
            let sylow = g.sylow_subgroup(p).unwrap();
            let all = all_sylow_subgroups(&g, p);
            assert!(!all.is_empty(), "{spec_text}: no Sylow {p}-subgroup found");
            assert_eq!(
                sylow.normal,
                all.len() == 1,
                "{spec_text}: normality at p = {p} disagrees with enumeration ({} subgroups)",
                all.len()
            );
            assert!(all.contains(&{
                let mut e = sylow.elements.clone();
                e.sort_unstable();
                e
            }));
        }
    }
}

#[test]
fn cubic_associativity_oracle_on_small_catalog() {
    for spec_text in ["C:16", "A:2,4", "D:8", "S:4", "Q8", "F:5", "SL2:3", "GL2:3"] {
        let g = group(spec_text);
        assert!(g.check_associativity_cubic().is_ok(), "{spec_text}");
    }
}

#[test]
fn modular_completeness_identity() {
    // Σ n_τ² d_τ + dim J = |G| with the quotient degrees over the modular
    // field (all d = 1 in these split cases)
    let cases: [(&str, u64, &[(u64, u64)]); 3] = [
        ("S:3", 3, &[(1, 1), (1, 1)]),
        ("A:2,2", 2, &[(1, 1)]),
        ("C:6", 3, &[(1, 1), (1, 1)]),
    ];
    for (spec_text, p, blocks) in cases {
        let g = group(spec_text);
        let dim_j = augmentation_radical(&g, p).unwrap().len() as u64;
        assert!(
            wedderburn_sum_check(blocks, dim_j, g.order() as u64),
            "{spec_text} at p = {p}"
        );
    }
}

#[test]
fn blrad_exceeds_dimension_on_modular_corpus() {
    // with nonzero radical the blrad bound is at least dim A + 1
    let cases: [(&str, u64); 5] = [("C:2", 2), ("A:2,2", 2), ("A:2,4", 2), ("C:3", 3), ("A:3,3", 3)];
    for (spec_text, p) in cases {
        let g = group(spec_text);
        let algebra = FiniteDimAlgebra::group_algebra(&g, gf(p));
        let basis = augmentation_radical(&g, p).unwrap();
        let dims = radical_powers_generic(&algebra, &basis).unwrap();
        let rp = RadicalProfile::from_dims(dims).unwrap();
        let value = modular_blrad(&rp, g.order() as u64).value;
        assert!(
            value >= g.order() as u64 + 1,
            "{spec_text}: blrad {value} not above dim {}",
            g.order()
        );
    }
}

#[test]
fn radical_dims_independent_of_basis_order() {
    // exact elimination: permuting the ideal basis cannot change the
    // power dimension sequence
    for (spec_text, p) in [("A:2,4", 2u64), ("A:3,3", 3), ("S:3", 3)] {
        let g = group(spec_text);
        let algebra = FiniteDimAlgebra::group_algebra(&g, gf(p));
        let basis = augmentation_radical(&g, p).unwrap();
        let reference = radical_powers_generic(&algebra, &basis).unwrap();
        let mut reversed = basis.clone();
        reversed.reverse();
        assert_eq!(radical_powers_generic(&algebra, &reversed).unwrap(), reference);
        let mut rotated = basis.clone();
        rotated.rotate_left(basis.len() / 2);
        assert_eq!(radical_powers_generic(&algebra, &rotated).unwrap(), reference, "{spec_text}");
    }
}

#[test]
fn search_results_respect_alder_strassen() {
    // GF(3)[Z2] is split with t = 2 maximal ideals; GF(2)[Z2] is local
    // with t = 1
    for (spec_text, q, t) in [("C:2", 3u64, 2u64), ("C:2", 2, 1)] {
        let algebra = FiniteDimAlgebra::group_algebra(&group(spec_text), gf(q));
        let RankSearchResult::Exact { rank, .. } = brute_force_rank(&algebra, 6).unwrap() else {
            panic!("rank must be found");
        };
        let alder = 2 * algebra.dim() as u64 - t;
        assert!(rank as u64 >= alder, "{spec_text}/GF({q}): rank {rank} below {alder}");
    }
}

#[test]
fn decomposed_count_matches_witness_length() {
    // the count reported by the executed strategy equals the length of
    // the serialized witness algorithm for the same decomposition
    let g = group("S:3");
    let f = Rationals;
    let verified = builtin_s3_map(&g).unwrap().verify(&g, &f, 2).unwrap();
    let x: Vec<_> = (0..6).map(|i| f.from_i64(i as i64 - 3)).collect();
    let y: Vec<_> = (0..6).map(|i| f.from_i64(2 * i as i64 + 1)).collect();
    let (_, count) = decomposed_mul(&verified, &f, &x, &y).unwrap();
    // the serialized witness: trivial ⊕ trivial ⊕ Strassen
    let triv = matrix_mult_recursive(1, f).unwrap();
    let pair = BilinearAlgorithm::direct_sum(&triv, &triv).unwrap();
    let witness_algo =
        BilinearAlgorithm::direct_sum(&pair, &matrix_mult_recursive(2, f).unwrap()).unwrap();
    assert_eq!(count, witness_algo.len() as u64);
    let profile = degrees_dixon(&g).unwrap();
    let witness = upper_estimates(&profile, None, &OmegaParam::literature())
        .unwrap()
        .entry("decomposition-witness")
        .unwrap()
        .bound;
    assert_eq!(count, witness);
}

#[test]
fn rank_exponent_series() {
    // cyclic family with DFT witnesses: rank = dim, exponent estimate 1
    let cyclic: Vec<(u64, u64)> = (2..=16).map(|n| (n, n)).collect();
    assert!((rank_exponent_fit(&cyclic, 1).unwrap() - 1.0).abs() < 1e-12);
    // symmetric-group witness series: each point ratio at least 1
    let omega = OmegaParam::literature();
    let series: Vec<(u64, u64)> = (3..=6u32)
        .map(|n| {
            let profile = bilrank::degrees::degrees_symmetric(n).unwrap();
            let witness = upper_estimates(&profile, None, &omega)
                .unwrap()
                .entry("decomposition-witness")
                .unwrap()
                .bound;
            (profile.group_order(), witness)
        })
        .collect();
    // per-factor recursive-Strassen witness lengths: S3 = 1+1+7,
    // S4 = 2+7+2·49, S5 = 2+2·49+2·343+343, S6 = 2+4·343+4·2401+2401
    assert_eq!(series.iter().map(|&(_, w)| w).collect::<Vec<_>>(), vec![9, 107, 1129, 13379]);
    let fit = rank_exponent_fit(&series, 1).unwrap();
    assert!(fit >= 1.0 && fit < 2.0);
    for &(dim, rank) in &series {
        let ratio = (rank as f64).ln() / (dim as f64).ln();
        assert!(ratio >= 1.0, "point ({dim}, {rank}) below linear");
    }
}
