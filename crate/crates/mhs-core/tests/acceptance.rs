//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! (run with `cargo test --test acceptance -- --nocapture` to see them).
//!
//! Every tolerance and grid bound is pinned here; nothing is deferred to
//! later calibration.

use mhs_core::congruences::{
    claim_registry, run_claims, select_claims, CongGrid, Status, SweepConfig,
};
use mhs_core::identities::{run_identities, IdentityGrid};
use mhs_core::mhs::{
    compositions_up_to, dual, sh_check, stuffle_depth1, stuffle_odd_squares, Rationals,
};
use mhs_core::modring::reduce_rational;
use mhs_core::series::{
    evaluate_series, star_sandwich_partial_f64, star_sandwich_tail_bound, zeta_star_check,
    zstar231_beta,
};
use mhs_core::special::{bernoulli_exact, bernoulli_mod_p, von_staudt_denominator};
use std::time::Instant;

fn report(criterion: &str, pass: bool, detail: &str) {
    println!(
        "criterion {criterion}: {} — {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} failed: {detail}");
}

/// 1. Every cataloged identity passes with exact rational equality on the
/// default grids.
#[test]
fn criterion_1_identity_suite() {
    let t0 = Instant::now();
    let grid = IdentityGrid::default();
    let outcomes = run_identities("all", &grid);
    let non_wz: Vec<_> = outcomes
        .iter()
        .filter(|o| !o.id.starts_with("WZ-"))
        .collect();
    let fails: Vec<_> = non_wz.iter().filter(|o| !o.pass).collect();
    report(
        "1 (identity suite)",
        !non_wz.is_empty() && fails.is_empty(),
        &format!(
            "{} identity instances, {} failures, {:.1?}",
            non_wz.len(),
            fails.len(),
            t0.elapsed()
        ),
    );
}

/// 2. All four WZ pairs satisfy the certificate relation exactly for
/// n,k <= 30 across more parameter samples than the degree bound, and the
/// summation-formula instances hold for N <= 20.
#[test]
fn criterion_2_wz_certificates() {
    let t0 = Instant::now();
    let grid = IdentityGrid::default();
    assert_eq!(grid.wz_nmax, 30);
    assert_eq!(grid.wz_summation_nmax, 20);
    let outcomes = run_identities("WZ-*", &grid);
    let fails: Vec<_> = outcomes.iter().filter(|o| !o.pass).collect();
    let pairs: std::collections::BTreeSet<&str> =
        outcomes.iter().map(|o| o.id).collect();
    report(
        "2 (WZ certificates)",
        fails.is_empty() && pairs.len() == 6,
        &format!(
            "{} certificate checks over {} families, {} failures, {:.1?}",
            outcomes.len(),
            pairs.len(),
            fails.len(),
            t0.elapsed()
        ),
    );
}

/// 3. Every registered congruence claim passes for all admissible primes in
/// 5..300 on the default parameter grids; skips are reported, never passed.
#[test]
fn criterion_3_congruence_suite() {
    let t0 = Instant::now();
    let claims = claim_registry(&CongGrid::default());
    let results = run_claims(
        &claims,
        &SweepConfig {
            primes: Some((5, 300)),
            exact: false,
            jobs: 0,
        },
    );
    let fail = results.iter().filter(|r| r.status == Status::Fail).count();
    let skip = results.iter().filter(|r| r.status == Status::Skipped).count();
    let pass = results.iter().filter(|r| r.status == Status::Pass).count();
    report(
        "3 (congruence suite 5..300)",
        fail == 0 && pass > 0 && skip > 0,
        &format!(
            "{} claims, {} checks: {pass} pass / {fail} fail / {skip} skipped, {:.1?}",
            claims.len(),
            results.len(),
            t0.elapsed()
        ),
    );
}

/// 4. The weight-9 cubic congruence holds for every prime 10 < p < 2000.
#[test]
fn criterion_4_weight9_full_range() {
    let t0 = Instant::now();
    let claims = select_claims(&CongGrid::default(), "C3-eq41");
    assert_eq!(claims.len(), 1);
    let results = run_claims(
        &claims,
        &SweepConfig {
            primes: Some((11, 1999)),
            exact: false,
            jobs: 0,
        },
    );
    let pass = results.iter().filter(|r| r.status == Status::Pass).count();
    let fail = results.iter().filter(|r| r.status == Status::Fail).count();
    report(
        "4 (C3-eq41 for 10 < p < 2000)",
        fail == 0 && pass == 299,
        &format!("{pass} primes pass, {fail} fail, {:.1?}", t0.elapsed()),
    );
}

/// 5. Double-oracle: for all primes p <= 50, the Z/p^N (p-adic) evaluation
/// of every claim agrees with the exact rational evaluation reduced mod p^N,
/// and both verdicts pass.
#[test]
fn criterion_5_double_oracle() {
    let t0 = Instant::now();
    let claims = claim_registry(&CongGrid::default());
    let cfg_mod = SweepConfig {
        primes: Some((5, 50)),
        exact: false,
        jobs: 0,
    };
    let cfg_exact = SweepConfig {
        exact: true,
        ..cfg_mod
    };
    let modular = run_claims(&claims, &cfg_mod);
    let exact = run_claims(&claims, &cfg_exact);
    assert_eq!(modular.len(), exact.len());
    let mut checked = 0usize;
    let mut bad = 0usize;
    for (a, b) in modular.iter().zip(&exact) {
        assert_eq!((a.id.as_str(), a.prime), (b.id.as_str(), b.prime));
        if a.status == Status::Skipped {
            assert_eq!(b.status, Status::Skipped);
            continue;
        }
        checked += 1;
        if a.status != Status::Pass || b.status != Status::Pass || a.lhs_norm != b.lhs_norm {
            bad += 1;
            if bad <= 3 {
                println!(
                    "  disagreement: {} [{}] p={}: {} vs {}",
                    a.id, a.params, a.prime, a.lhs_norm, b.lhs_norm
                );
            }
        }
    }
    report(
        "5 (double oracle p <= 50)",
        checked > 0 && bad == 0,
        &format!("{checked} checks agree across both rings, {:.1?}", t0.elapsed()),
    );
}

/// 6. The power-sum and exact-recurrence Bernoulli routes agree for all
/// p <= 200 and even m <= min(40, p-3); von Staudt-Clausen matches the
/// exact denominators through index 60.
#[test]
fn criterion_6_bernoulli_oracles() {
    let t0 = Instant::now();
    let mut checks = 0usize;
    for p in mhs_core::primes::primes_in(5, 200) {
        for m in (2..=(p - 3).min(40)).step_by(2) {
            let fast = bernoulli_mod_p(p, m).unwrap();
            let slow = reduce_rational(&bernoulli_exact(m), p, 1).unwrap().residue;
            assert_eq!(fast, slow, "p={p} m={m}");
            checks += 1;
        }
    }
    let mut vs_checks = 0usize;
    for two_m in (2..=60u64).step_by(2) {
        assert_eq!(
            bernoulli_exact(two_m).denom().clone(),
            von_staudt_denominator(two_m)
        );
        vs_checks += 1;
    }
    report(
        "6 (Bernoulli oracle equivalence)",
        checks > 500 && vs_checks == 30,
        &format!(
            "{checks} power-sum/exact agreements, {vs_checks} denominator matches, {:.1?}",
            t0.elapsed()
        ),
    );
}

/// 7. Numeric series: the binomial-sum series match their references to
/// 10^-30 (classical) and 10^-25 (layered, m <= 3); the zeta-star three-way
/// checks agree to 10^-15 for a,b <= 3; the finite partial sums approach
/// the closed form within the computed kernel bound.
#[test]
fn criterion_7_numeric_series() {
    let t0 = Instant::now();
    let mut count = 0usize;
    for id in ["APERY2", "APERY3"] {
        let r = evaluate_series(id, 0, 30);
        assert!(r.pass, "{r:?}");
        count += 1;
    }
    for id in ["LESH-2", "LESH-3", "LESH-4", "LESH-5"] {
        for m in 0..=3 {
            let r = evaluate_series(id, m, 25);
            assert!(r.pass, "{r:?}");
            count += 1;
        }
    }
    for a in 0..=3u64 {
        for b in 0..=3u64 {
            for o in zeta_star_check(a, b, 15) {
                assert!(o.pass, "{o:?}");
                count += 1;
            }
        }
    }
    // finite-to-infinite spot check at n = 4000
    let val = zstar231_beta(1, 1, 20).to_f64();
    let part = star_sandwich_partial_f64(1, 1, 4000);
    let bound = star_sandwich_tail_bound(1, 1, 4000);
    assert!(
        (val - part).abs() <= bound,
        "partial-sum gap {} exceeds bound {bound}",
        (val - part).abs()
    );
    count += 1;
    report(
        "7 (numeric series)",
        true,
        &format!("{count} series checks at stated tolerances, {:.1?}", t0.elapsed()),
    );
}

/// 8. Duality and algebra: the dual is an involution through weight 12, the
/// splitting expansion matches through weight 6 for n <= 10, the two stuffle
/// relations hold on their grids, and S_{p-1}(s) = -S_{p-1}(s*) for weight
/// <= 7 and p <= 100.
#[test]
fn criterion_8_duality_and_algebra() {
    let t0 = Instant::now();
    let q = Rationals;
    let mut count = 0usize;

    for s in compositions_up_to(12) {
        assert_eq!(dual(&dual(&s).unwrap()).unwrap(), s);
        count += 1;
    }
    for s in compositions_up_to(6) {
        for n in 0..=10 {
            assert!(sh_check(&q, &s, n).unwrap(), "splitting at s={s} n={n}");
            count += 1;
        }
    }
    for a in 1..=3i64 {
        for b in 1..=3i64 {
            for (sa, sb) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                for n in 0..=8 {
                    assert!(stuffle_depth1(&q, sa * a, sb * b, n).unwrap());
                    count += 1;
                }
            }
        }
    }
    for m in 1..=4usize {
        for n in 0..=8 {
            assert!(stuffle_odd_squares(&q, m, n).unwrap());
            count += 1;
        }
    }
    let duals = select_claims(&CongGrid::default(), "DUAL");
    let results = run_claims(
        &duals,
        &SweepConfig {
            primes: Some((5, 100)),
            exact: false,
            jobs: 0,
        },
    );
    let fail = results.iter().filter(|r| r.status == Status::Fail).count();
    let pass = results.iter().filter(|r| r.status == Status::Pass).count();
    count += pass;
    report(
        "8 (duality & algebra)",
        fail == 0 && pass > 0,
        &format!("{count} checks, {:.1?}", t0.elapsed()),
    );
}

/// The consistency chain: the (0,1) instance of the ones-kernel theorem
/// reproduces the weight-3 generator, and the three weight-9 claims
/// (specialization, length-5 reduction, cubic form) co-pass on a shared
/// prime range.
#[test]
fn consistency_chains() {
    let grid = CongGrid::default();
    let mut ids: Vec<(&str, &str)> = vec![
        ("T-212-S", "a=0,b=1"),
        ("GEN-w3", "1,2"),
        ("C3-eq41", ""),
        ("C3-eq42", ""),
        ("C3-eq43", ""),
    ];
    let claims = claim_registry(&grid);
    for (id, params) in ids.drain(..) {
        let claim = claims
            .iter()
            .find(|c| c.id == id && c.params == params)
            .expect("registered");
        let results = run_claims(
            std::slice::from_ref(claim),
            &SweepConfig {
                primes: Some((11, 200)),
                exact: false,
                jobs: 0,
            },
        );
        assert!(
            results.iter().all(|r| r.status != Status::Fail),
            "{id} [{params}] broke the chain"
        );
    }
}
