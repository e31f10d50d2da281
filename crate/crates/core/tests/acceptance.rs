//! Acceptance suite: one test per release criterion, each printing a
//! PASS line (run with `cargo test --test acceptance -- --nocapture` to
//! see them). Every tolerance and time limit is pinned here.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use bilrank::algebra::{
    augmentation_radical, radical_powers_generic, FiniteDimAlgebra, RadicalProfile,
};
use bilrank::bilinear::{
    brute_force_rank, dft_abelian, strassen_2x2, BilinearAlgorithm, RankSearchResult,
    Verification,
};
use bilrank::bounds::{
    classify_semisimple, modular_blrad, schonhage_root, upper_estimates, OmegaParam,
};
use bilrank::degrees::{degrees_catalog, degrees_dixon, degrees_symmetric, CharacterDegreeProfile};
use bilrank::fastmul::{builtin_s3_map, decomposed_mul, naive_mul, ntt_mul_with};
use bilrank::dft::AbelianDft;
use bilrank::field::{Field, PrimeField, Rationals};
use bilrank::group::{build_group, FiniteGroup, GroupSpec};

fn group(spec: &str) -> FiniteGroup {
    build_group(&GroupSpec::parse(spec).unwrap()).unwrap()
}

fn gf(q: u64) -> PrimeField {
    PrimeField::new(q).unwrap()
}

/// The catalog exercised by the degree and ordering criteria: every named
/// family instance of order at most 720.
fn catalog_specs() -> Vec<String> {
    let mut specs: Vec<String> = (1..=32).map(|n| format!("C:{n}")).collect();
    specs.extend((1..=12).map(|n| format!("D:{n}")));
    specs.extend((3..=6).map(|n| format!("S:{n}")));
    specs.extend(
        ["A:2,2", "A:2,4", "A:6,2", "A:2,2,2", "A:3,3", "Q8", "GL2:2", "GL2:3", "GL2:4",
         "SL2:3", "SL2:5", "F:5", "F:7", "F:11"]
            .map(String::from),
    );
    specs
}

#[test]
fn criterion_01_degree_routes_agree() {
    let start = Instant::now();
    // Dixon vs hook lengths on symmetric groups
    for n in 3..=6u32 {
        let by_dixon = degrees_dixon(&group(&format!("S:{n}"))).unwrap();
        let by_hooks = degrees_symmetric(n).unwrap();
        assert_eq!(by_dixon, by_hooks, "S:{n}");
    }
    // Dixon vs closed-form catalogs
    let mut checked = 0;
    for spec_text in catalog_specs() {
        let spec = GroupSpec::parse(&spec_text).unwrap();
        let Ok(catalog) = degrees_catalog(&spec) else {
            continue; // SL2 has no catalog route
        };
        let dixon = degrees_dixon(&group(&spec_text)).unwrap();
        assert_eq!(dixon, catalog, "{spec_text}");
        checked += 1;
    }
    assert!(checked >= 55, "catalog coverage shrank to {checked} groups");
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "criterion 1 took {elapsed:?}, limit 60 s");
    println!("[acceptance] criterion 01 (degree routes agree, {checked} catalog groups, {elapsed:?}): PASS");
}

#[test]
fn criterion_02_completeness_identity() {
    for spec_text in catalog_specs() {
        let g = group(&spec_text);
        let profile = degrees_dixon(&g).unwrap();
        let sum: u64 = profile.degrees().iter().map(|&d| d * d).sum();
        assert_eq!(sum, g.order() as u64, "{spec_text}");
    }
    for n in 3..=6u32 {
        let profile = degrees_symmetric(n).unwrap();
        let sum: u64 = profile.degrees().iter().map(|&d| d * d).sum();
        assert_eq!(sum, (1..=n as u64).product::<u64>(), "S:{n}");
    }
    println!("[acceptance] criterion 02 (sum of squared degrees equals the order): PASS");
}

#[test]
fn criterion_03_minimal_rank_classification() {
    for (spec_text, expected) in [("S:3", 9u64), ("Q8", 11), ("D:4", 11)] {
        let g = group(spec_text);
        let profile = degrees_dixon(&g).unwrap();
        let report = classify_semisimple(&profile);
        let exact = report.entry("minimal-rank").unwrap_or_else(|| {
            panic!("{spec_text} must be classified as minimal rank")
        });
        assert_eq!(exact.bound, expected, "{spec_text}");
        // the two formulas of the classification agree
        let stats = profile.stats();
        let t1_7t2 = stats.t_i(1) + 7 * stats.t_i(2);
        let alder = 2 * profile.group_order() - profile.t() as u64;
        assert_eq!(t1_7t2, expected, "{spec_text}: t1 + 7 t2");
        assert_eq!(alder, expected, "{spec_text}: 2|G| - t");
        assert_eq!(report.best_lower, expected);
        assert_eq!(report.best_upper, Some(expected));
    }
    println!("[acceptance] criterion 03 (minimal rank: S3 = 9, Q8 = D4 = 11): PASS");
}

#[test]
fn criterion_04_nonminimal_lower_bounds() {
    let start = Instant::now();
    let s4 = classify_semisimple(&degrees_symmetric(4).unwrap());
    assert_eq!(s4.entry("blaser-t7").unwrap().bound, 44);
    assert_eq!(s4.entry("matrix-remark").unwrap().bound, 45);
    assert_eq!(s4.entry("split-52").unwrap().bound, 33);
    assert_eq!(s4.best_lower, 45);

    let s5 = classify_semisimple(&degrees_symmetric(5).unwrap());
    assert_eq!(s5.best_lower, 238);

    let s6 = classify_semisimple(&degrees_symmetric(6).unwrap());
    assert_eq!(s6.entry("blaser-t7").unwrap().bound, 1442);
    assert_eq!(s6.entry("matrix-remark").unwrap().bound, 1444);
    assert_eq!(s6.entry("split-52").unwrap().bound, 1575);
    assert_eq!(s6.best_lower, 1575);
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 10, "criterion 4 took {elapsed:?}, limit 10 s");
    println!("[acceptance] criterion 04 (non-minimal bounds: S4 = 45, S5 = 238, S6 = 1575): PASS");
}

#[test]
fn criterion_05_verifier_soundness() {
    // Strassen verifies over GF(2), GF(5) and Q
    let m2_gf2 = FiniteDimAlgebra::matrix_algebra(2, gf(2));
    assert!(strassen_2x2(gf(2)).verify(&m2_gf2).unwrap().is_valid());
    let m2_gf5 = FiniteDimAlgebra::matrix_algebra(2, gf(5));
    assert!(strassen_2x2(gf(5)).verify(&m2_gf5).unwrap().is_valid());
    let m2_q = FiniteDimAlgebra::matrix_algebra(2, Rationals);
    assert!(strassen_2x2(Rationals).verify(&m2_q).unwrap().is_valid());

    // 100 random single-coefficient corruptions, all rejected. Every u, v
    // and w of Strassen's triples is nonzero, so any single-coefficient
    // change shifts the tensor by a nonzero rank-one term.
    let mut rng = ChaCha8Rng::seed_from_u64(505);
    let mut rejected = 0;
    for case in 0..100 {
        let which_field = case % 3;
        let triple = rng.random_range(0..7usize);
        let row = rng.random_range(0..3u8);
        let coord = rng.random_range(0..4usize);
        let reject = match which_field {
            0 => corrupt_and_verify(strassen_2x2(gf(2)), &m2_gf2, triple, row, coord, 1),
            1 => {
                let delta = rng.random_range(1..5i64);
                corrupt_and_verify(strassen_2x2(gf(5)), &m2_gf5, triple, row, coord, delta)
            }
            _ => {
                let delta = rng.random_range(1..100i64);
                corrupt_and_verify(strassen_2x2(Rationals), &m2_q, triple, row, coord, delta)
            }
        };
        assert!(reject, "corruption {case} must be rejected");
        rejected += 1;
    }
    assert_eq!(rejected, 100);
    println!("[acceptance] criterion 05 (verifier: Strassen valid, 100/100 corruptions rejected): PASS");
}

fn corrupt_and_verify<F: Field>(
    algo: BilinearAlgorithm<F>,
    algebra: &FiniteDimAlgebra<F>,
    triple: usize,
    row: u8,
    coord: usize,
    delta: i64,
) -> bool {
    let field = algo.field().clone();
    let mut triples = algo.triples().to_vec();
    let target = match row {
        0 => &mut triples[triple].u,
        1 => &mut triples[triple].v,
        _ => &mut triples[triple].w,
    };
    target[coord] = field.add(&target[coord], &field.from_i64(delta));
    let corrupted = BilinearAlgorithm::new(field, algo.dims(), triples).unwrap();
    matches!(corrupted.verify(algebra).unwrap(), Verification::FailsAt { .. })
}

#[test]
fn criterion_06_exhaustive_rank() {
    let start = Instant::now();
    let z2_gf3 = FiniteDimAlgebra::group_algebra(&group("C:2"), gf(3));
    let RankSearchResult::Exact { rank, witness } = brute_force_rank(&z2_gf3, 6).unwrap() else {
        panic!("rank of GF(3)[Z2] must be found");
    };
    assert_eq!(rank, 2);
    assert!(witness.verify(&z2_gf3).unwrap().is_valid());
    let elapsed_a = start.elapsed();
    assert!(elapsed_a.as_secs() < 60, "GF(3)[Z2] search took {elapsed_a:?}");

    let start_b = Instant::now();
    let z2_gf2 = FiniteDimAlgebra::group_algebra(&group("C:2"), gf(2));
    let RankSearchResult::Exact { rank, witness } = brute_force_rank(&z2_gf2, 6).unwrap() else {
        panic!("rank of GF(2)[Z2] must be found");
    };
    assert_eq!(rank, 3);
    assert!(witness.verify(&z2_gf2).unwrap().is_valid());
    let elapsed_b = start_b.elapsed();
    assert!(elapsed_b.as_secs() < 60, "GF(2)[Z2] search took {elapsed_b:?}");
    println!("[acceptance] criterion 06 (exhaustive ranks: GF(3)[Z2] = 2, GF(2)[Z2] = 3): PASS");
}

#[test]
fn criterion_07_schonhage_roots() {
    let root = schonhage_root(&[1, 1, 2], 9).unwrap();
    assert!((root - 2.8073549).abs() < 1e-4, "got {root}");
    let cube = schonhage_root(&[2], 8).unwrap();
    assert!((cube - 3.0).abs() < 1e-9, "got {cube}");
    println!("[acceptance] criterion 07 (Schonhage roots: log2(7) within 1e-4, 3.0 within 1e-9): PASS");
}

#[test]
fn criterion_08_modular_formulas() {
    let start = Instant::now();
    // closed-form radical dims equal the generic span oracle
    let cases: [(&str, u64, u64, &[u32]); 4] = [
        ("A:2,2", 2, 1, &[1, 1]),
        ("A:2,4", 2, 1, &[2, 1]),
        ("A:3,3", 3, 1, &[1, 1]),
        ("S:3", 3, 2, &[1]),
    ];
    for (spec_text, p, coprime_part, exponents) in cases {
        let g = group(spec_text);
        let algebra = FiniteDimAlgebra::group_algebra(&g, gf(p));
        let basis = augmentation_radical(&g, p).unwrap();
        let generic = radical_powers_generic(&algebra, &basis).unwrap();
        let closed = RadicalProfile::closed_form(coprime_part, p, exponents).unwrap();
        assert_eq!(generic, closed.dims(), "{spec_text} at p = {p}");
    }
    // blrad optima
    for (dims, dim_a, expected) in
        [(vec![1u64], 2u64, 3u64), (vec![3, 1], 4, 7), (vec![2, 1], 3, 5)]
    {
        let rp = RadicalProfile::from_dims(dims).unwrap();
        assert_eq!(modular_blrad(&rp, dim_a).value, expected);
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 30, "criterion 8 took {elapsed:?}, limit 30 s");
    println!("[acceptance] criterion 08 (modular formulas: closed = generic, blrad 3/7/5): PASS");
}

#[test]
fn criterion_09_fast_multiplication() {
    // NTT equals naive on 200 random pairs per abelian case, and the
    // emitted DFT algorithm verifies with length exactly |G|
    for (spec_text, q) in [("C:4", 5u64), ("C:16", 17), ("A:6,2", 13)] {
        let g = group(spec_text);
        let field = gf(q);
        let dft = AbelianDft::new(&g, q).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(909 + q);
        for _ in 0..200 {
            let x: Vec<u64> = (0..g.order()).map(|_| rng.random_range(0..q)).collect();
            let y: Vec<u64> = (0..g.order()).map(|_| rng.random_range(0..q)).collect();
            assert_eq!(
                ntt_mul_with(&dft, &x, &y).unwrap(),
                naive_mul(&g, &field, &x, &y).unwrap(),
                "{spec_text}"
            );
        }
        let algo = dft_abelian(&g, q).unwrap();
        assert_eq!(algo.len(), g.order(), "{spec_text}: DFT length");
        let algebra = FiniteDimAlgebra::group_algebra(&g, field);
        assert!(algo.verify(&algebra).unwrap().is_valid(), "{spec_text}");
    }
    // decomposed equals naive on 100 random rational pairs for S3
    let g = group("S:3");
    let f = Rationals;
    let verified = builtin_s3_map(&g).unwrap().verify(&g, &f, 2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(910);
    for _ in 0..100 {
        let rv = |rng: &mut ChaCha8Rng| -> Vec<_> {
            (0..6).map(|_| f.from_i64(rng.random_range(-20..21))).collect()
        };
        let (x, y) = (rv(&mut rng), rv(&mut rng));
        let (product, count) = decomposed_mul(&verified, &f, &x, &y).unwrap();
        assert_eq!(product, naive_mul(&g, &f, &x, &y).unwrap());
        assert_eq!(count, 9);
    }
    println!("[acceptance] criterion 09 (ntt/decomposed equal naive; DFT lengths exact): PASS");
}

#[test]
fn criterion_10_upper_lower_ordering() {
    let omega = OmegaParam::literature();
    for spec_text in catalog_specs() {
        let g = group(&spec_text);
        let profile = degrees_dixon(&g).unwrap();
        let lower = classify_semisimple(&profile);
        let upper = upper_estimates(&profile, None, &omega).unwrap();
        let witness = upper.entry("decomposition-witness").unwrap().bound;
        assert!(
            witness >= lower.best_lower,
            "{spec_text}: witness {witness} below lower bound {}",
            lower.best_lower
        );
        if spec_text == "S:3" {
            assert_eq!(witness, 9, "S3 witness is tight");
            assert_eq!(lower.best_lower, 9);
        }
    }
    println!("[acceptance] criterion 10 (witness upper >= best lower across the catalog): PASS");
}

#[test]
fn criterion_11_property_suites() {
    let mut rng = ChaCha8Rng::seed_from_u64(1111);
    let mut holder_checked = 0u32;
    let mut convexity_checked = 0u32;
    for _ in 0..1000 {
        let t = rng.random_range(1..12usize);
        let ns: Vec<u64> = (0..t).map(|_| rng.random_range(1..40u64)).collect();
        let sum: u64 = ns.iter().sum();
        let sum_sq: u64 = ns.iter().map(|n| n * n).sum();
        // δ = 2 exactly in integers: (Σn)² ≤ t·Σn²
        assert!(sum * sum <= t as u64 * sum_sq);
        // Hölder: Σn ≤ t^(1−1/δ) (Σ n^δ)^(1/δ); the 1e-9 relative slack
        // covers f64 rounding only (equality holds at δ = 1 and for
        // constant profiles)
        for delta in [1.0f64, 1.5, 2.0, 2.3727] {
            let lhs = sum as f64;
            let pow_sum: f64 = ns.iter().map(|&n| (n as f64).powf(delta)).sum();
            let rhs = (t as f64).powf(1.0 - 1.0 / delta) * pow_sum.powf(1.0 / delta);
            assert!(lhs <= rhs * (1.0 + 1e-9), "Hölder violated: {lhs} > {rhs} at δ = {delta}");
            holder_checked += 1;
        }
        // convexity: Σ n^α ≤ (Σ n)^α
        for alpha in [1.0f64, 1.5, 2.0, 2.3727] {
            let lhs: f64 = ns.iter().map(|&n| (n as f64).powf(alpha)).sum();
            let rhs = (sum as f64).powf(alpha);
            assert!(lhs <= rhs * (1.0 + 1e-9), "convexity violated: {lhs} > {rhs} at α = {alpha}");
            convexity_checked += 1;
        }
    }
    assert_eq!(holder_checked, 4000);
    assert_eq!(convexity_checked, 4000);
    println!("[acceptance] criterion 11 (Hölder and convexity: 1000 profiles x 4 exponents, zero violations): PASS");
}

/// Completeness guard for the catalog profile type used throughout.
#[test]
fn catalog_profiles_construct() {
    for spec_text in catalog_specs() {
        let g = group(&spec_text);
        let profile = degrees_dixon(&g).unwrap();
        assert_eq!(
            CharacterDegreeProfile::new(profile.degrees().to_vec(), g.order() as u64).unwrap(),
            profile
        );
    }
}
