//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Everything here is exact: integer and rational equalities with zero
//! tolerance.

use psigma_core::algebra::{
    poincare_polynomial, sampling, verify_claimed_basis, CapacityTier, GradedBasis, HilbertSeries,
    QuadraticPresentation, Rewriter, Variant,
};
use psigma_core::freegroup::{
    verify_center, verify_mccool_presentation, verify_semidirect_action, PresentationVariant,
};
use psigma_core::koszul::{
    freeness_decomposition_check, koszul_consistency_test, DEFAULT_MAX_WORDS,
};
use psigma_core::rational::is_unit;
use psigma_core::tc::{tc_report, GroupFamily, GroupId};
use psigma_core::zerodiv::{certificate_m, certificate_n, tensor_degree_vanishes};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

fn criterion(id: &str, description: &str, ok: bool) {
    println!(
        "ACCEPTANCE {id}: {} — {description}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "acceptance {id} failed: {description}");
}

fn ring(n: usize, variant: Variant) -> (QuadraticPresentation, GradedBasis) {
    let pres = QuadraticPresentation::new(n, variant).unwrap();
    let basis = GradedBasis::compute(&pres, &CapacityTier::default()).unwrap();
    (pres, basis)
}

#[test]
fn c01_presentation_relations_hold() {
    let started = Instant::now();
    let mut ok = true;
    for n in 2..=6 {
        ok &= verify_mccool_presentation(n, PresentationVariant::Full)
            .unwrap()
            .passed;
        ok &= verify_mccool_presentation(n, PresentationVariant::Plus)
            .unwrap()
            .passed;
    }
    let within_budget = started.elapsed().as_secs() < 10;
    criterion(
        "C01",
        "every McCool relation instance holds in Aut(F_n), both variants, 2 ≤ n ≤ 6, under 10 s",
        ok && within_budget,
    );
}

#[test]
fn c02_center_commutes_with_infinite_order_evidence() {
    let mut ok = true;
    for n in 2..=6 {
        let rep = verify_center(n, 16).unwrap();
        ok &= rep.passed;
    }
    criterion(
        "C02",
        "c = α_{1,n}⋯α_{n−1,n} commutes with every upper generator and c^m ≠ id for m ≤ 16, 2 ≤ n ≤ 6",
        ok,
    );
}

#[test]
fn c03_semidirect_action_formula() {
    let mut ok = true;
    for n in 3..=6 {
        ok &= verify_semidirect_action(n).unwrap().passed;
    }
    criterion(
        "C03",
        "the conjugation action formula holds for every admissible tuple, 3 ≤ n ≤ 6",
        ok,
    );
}

#[test]
fn c04_poincare_polynomials_exact() {
    let mut ok = true;
    for n in 2..=5 {
        let (_, basis) = ring(n, Variant::Full);
        ok &= poincare_polynomial(&basis) == HilbertSeries::closed_form(Variant::Full, n);
    }
    for n in 2..=6 {
        let (_, basis) = ring(n, Variant::Plus);
        ok &= poincare_polynomial(&basis) == HilbertSeries::closed_form(Variant::Plus, n);
    }
    criterion(
        "C04",
        "quotient dimensions equal (1+nt)^{n−1} for full 2 ≤ n ≤ 5 and ∏(1+kt) for plus 2 ≤ n ≤ 6, coefficientwise",
        ok,
    );
}

#[test]
fn c05_vanishing_above_top_degree() {
    let mut ok = true;
    for (variant, max) in [(Variant::Full, 5), (Variant::Plus, 6)] {
        for n in 2..=max {
            let (_, basis) = ring(n, variant);
            // The quotient vanishes at degree n; generation in degree one
            // propagates vanishing upward, checked at the next few degrees.
            ok &= basis.vanishing_degree() == n;
            ok &= (n..n + 3).all(|q| basis.dim(q) == 0);
        }
    }
    criterion("C05", "H^q = 0 for q ≥ n in every computed case", ok);
}

#[test]
fn c06_combinatorial_bases_validate() {
    let mut ok = true;
    for n in 2..=4 {
        let (pres, basis) = ring(n, Variant::Full);
        ok &= verify_claimed_basis(&pres, &basis).unwrap().passed;
    }
    for n in 2..=6 {
        let (pres, basis) = ring(n, Variant::Plus);
        ok &= verify_claimed_basis(&pres, &basis).unwrap().passed;
    }
    criterion(
        "C06",
        "the combinatorial bases match the computed dimension and are independent in every degree (full n ≤ 4, plus n ≤ 6)",
        ok,
    );
}

#[test]
fn c07_certificate_m_pins_full_zcl() {
    let mut ok = true;
    for n in 2..=5 {
        let (_, basis) = ring(n, Variant::Full);
        let cert = certificate_m(&basis).unwrap();
        ok &= cert.passed && cert.nonzero;
        ok &= cert
            .witness
            .as_ref()
            .is_some_and(|w| is_unit(&w.coefficient));
        ok &= cert.bidegree == Some((n - 1, n - 1));
        // Upper bound: any product of 2n−1 degree-one tensor elements dies.
        ok &= tensor_degree_vanishes(&basis, 2 * n - 1);
    }
    criterion(
        "C07",
        "the 2n−2 fold product is nonzero with unit witness coefficient and the top bidegree vanishes: zcl = 2n−2 for full 2 ≤ n ≤ 5",
        ok,
    );
}

#[test]
fn c08_certificate_n_bounds_plus_zcl() {
    let mut ok = true;
    for n in 2..=5 {
        let (_, basis) = ring(n, Variant::Plus);
        let cert = certificate_n(&basis).unwrap();
        ok &= cert.passed && cert.nonzero && cert.length == 2 * n - 3;
        ok &= cert.witness.is_some();
    }
    criterion(
        "C08",
        "the 2n−3 fold product is nonzero with a surviving term of the required shape: zcl ≥ 2n−3 for plus 2 ≤ n ≤ 5",
        ok,
    );
}

#[test]
fn c09_tc_values_reproduced() {
    let mut ok = true;
    for n in 2..=5 {
        let (_, basis) = ring(n, Variant::Full);
        let cert = certificate_m(&basis).unwrap();
        let report = tc_report(
            GroupId::new(GroupFamily::Full, n).unwrap(),
            Some(&cert),
            Some(&basis),
        );
        ok &= report.tc_exact == Some(2 * n - 1);
        ok &= report.dimension_cross_check == Some(true);
    }
    for n in 2..=6 {
        let (_, basis) = ring(n, Variant::Plus);
        let cert = certificate_n(&basis).unwrap();
        let report = tc_report(
            GroupId::new(GroupFamily::Plus, n).unwrap(),
            Some(&cert),
            Some(&basis),
        );
        ok &= report.tc_exact == Some(2 * n - 2);
        ok &= report.zcl_exact == Some(2 * n - 3);
        ok &= report.dimension_cross_check == Some(true);
    }
    criterion(
        "C09",
        "tc = 2n−1 (full, 2 ≤ n ≤ 5) and tc = 2n−2 with zcl = 2n−3 (plus, 2 ≤ n ≤ 6), certificate-backed",
        ok,
    );
}

#[test]
fn c10_rewriting_agrees_with_projection() {
    let mut ok = true;
    for variant in [Variant::Full, Variant::Plus] {
        for n in 2..=4 {
            let (pres, basis) = ring(n, variant);
            let mut rng = ChaCha8Rng::seed_from_u64(0xC10 + n as u64);
            let mut rewriter = Rewriter::new(&pres);
            for _ in 0..1000 {
                let q = rng.gen_range(0..=(n - 1));
                let e = sampling::random_homogeneous(&pres, q, 4, &mut rng);
                let reduced = rewriter.reduce(&e).unwrap();
                ok &= reduced == basis.normal_form(&e);
            }
        }
    }
    criterion(
        "C10",
        "rewriting reduction equals the linear-algebra projection on 1000 seeded samples per (n ≤ 4, variant)",
        ok,
    );
}

#[test]
fn c11_koszul_consistency_and_freeness() {
    let mut ok = true;
    for n in 2..=4 {
        let (pres, basis) = ring(n, Variant::Plus);
        let rep = koszul_consistency_test(&pres, &basis, 4, DEFAULT_MAX_WORDS).unwrap();
        ok &= rep.passed;
    }
    for n in 3..=5 {
        let (sub_pres, sub_basis) = ring(n - 1, Variant::Plus);
        let (pres, basis) = ring(n, Variant::Plus);
        let rep =
            freeness_decomposition_check(n, &sub_pres, &sub_basis, &pres, &basis, true).unwrap();
        ok &= rep.passed && rep.hilbert_identity;
    }
    criterion(
        "C11",
        "P_A(t)·P_{A^!}(−t) ≡ 1 mod t^5 for plus 2 ≤ n ≤ 4; freeness decomposition and Hilbert factorization hold for 3 ≤ n ≤ 5",
        ok,
    );
}

#[test]
fn c12_all_suite_is_byte_deterministic() {
    let bin = env!("CARGO_BIN_EXE_psigma");
    let dir = tempfile::tempdir().unwrap();
    let run = |cache: &str| {
        let out = std::process::Command::new(bin)
            .args([
                "--format",
                "json",
                "--cache-dir",
                &dir.path().join(cache).to_string_lossy(),
                "all",
                "--n",
                "3",
                "--seed",
                "42",
            ])
            .output()
            .unwrap();
        assert!(
            out.status.success(),
            "all --n 3 failed: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        out.stdout
    };
    let cold = run("cache-a");
    let warm = run("cache-a");
    let fresh = run("cache-b");
    let ok = cold == warm && cold == fresh;
    criterion(
        "C12",
        "the full suite emits byte-identical JSON across runs with the same seed, warm or cold cache",
        ok,
    );
}
