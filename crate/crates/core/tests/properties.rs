//! Cross-method and structural properties over randomized corpora.

use fsle::{
    block_inverse, build_s, embedding_solve, ezzati_solve, friedman_solve, fuzzy_add,
    fuzzy_residual, inverse, lu_factor, parametric_to_triangular, scalar_mul, split_bc,
    triangular_embedding_solve, triangular_to_parametric, uniform_grid, validate_fuzzy_number,
    CrispMatrix, FsleProblem, FuzzyNumber, FuzzyVector, SolveReport, Status, TriangularFuzzy,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn max_endpoint_dev(a: &SolveReport, b: &SolveReport, grid: &[f64]) -> f64 {
    let (al, au) = a.raw.as_ref().expect("raw solution");
    let (bl, bu) = b.raw.as_ref().expect("raw solution");
    let mut worst: f64 = 0.0;
    for (x, y) in al.iter().zip(bl).chain(au.iter().zip(bu)) {
        for &z in grid {
            worst = worst.max((x.at(z) - y.at(z)).abs());
        }
    }
    worst
}

/// Random integer system with nonsingular `A` and `B+C` and triangular RHS.
fn random_problem(rng: &mut ChaCha8Rng, n: usize, max_spread: f64) -> FsleProblem {
    let a = loop {
        let mut a = CrispMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                a.set(i, j, rng.gen_range(-5i32..=5) as f64);
            }
        }
        let split = split_bc(&a).unwrap();
        if lu_factor(&a).is_ok() && lu_factor(&split.b_plus_c()).is_ok() {
            break a;
        }
    };
    let rhs = FuzzyVector::new(
        (0..n)
            .map(|_| {
                let t = TriangularFuzzy::new(
                    rng.gen_range(-5.0..5.0),
                    rng.gen_range(0.0..max_spread),
                    rng.gen_range(0.0..max_spread),
                )
                .unwrap();
                triangular_to_parametric(&t)
            })
            .collect(),
    )
    .unwrap();
    FsleProblem::new(a, rhs).unwrap()
}

fn raw_is_valid(report: &SolveReport, grid: &[f64], tol: f64) -> bool {
    let (lower, upper) = report.raw.as_ref().expect("raw solution");
    lower.iter().zip(upper).all(|(lo, up)| {
        let p = FuzzyNumber { lower: lo.clone(), upper: up.clone() };
        validate_fuzzy_number(&p, grid, tol).is_valid()
    })
}

#[test]
fn method_agreement_and_rejection_soundness() {
    let grid = uniform_grid(101);
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut strong_seen = 0;
    let mut rejected_seen = 0;
    for trial in 0..200 {
        let n = rng.gen_range(2..=5);
        let p = random_problem(&mut rng, n, 3.0);
        let friedman = friedman_solve(&p).unwrap();
        let ezzati = ezzati_solve(&p).unwrap();
        let embedding = embedding_solve(&p).unwrap();

        if raw_is_valid(&friedman, &grid, 1e-9) {
            strong_seen += 1;
            assert_eq!(friedman.status, Status::Strong, "trial {trial}");
            assert_eq!(ezzati.status, Status::Strong, "trial {trial}");
            assert_eq!(embedding.status, Status::Strong, "trial {trial}");
            assert!(max_endpoint_dev(&friedman, &ezzati, &grid) <= 1e-9);
            assert!(max_endpoint_dev(&friedman, &embedding, &grid) <= 1e-9);
        }
        if embedding.status == Status::RejectedEarly {
            rejected_seen += 1;
            assert!(
                !raw_is_valid(&friedman, &grid, 1e-9),
                "trial {trial}: rejection must imply an invalid raw solution"
            );
            assert_ne!(friedman.status, Status::Strong);
        }
    }
    assert!(strong_seen > 10, "corpus should contain strong systems, saw {strong_seen}");
    assert!(rejected_seen > 10, "corpus should contain rejections, saw {rejected_seen}");
}

#[test]
fn strong_reports_have_small_residual_and_triangular_solutions() {
    let grid = uniform_grid(101);
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    let mut strong_seen = 0;
    for _ in 0..150 {
        let n = rng.gen_range(2..=4);
        let p = random_problem(&mut rng, n, 2.0);
        let report = triangular_embedding_solve(&p).unwrap();
        if report.status != Status::Strong {
            continue;
        }
        strong_seen += 1;
        let solution = report.solution.as_ref().unwrap();
        assert!(fuzzy_residual(&p.a, solution, &p.rhs, &grid).unwrap() <= 1e-9);
        // triangular closure: triangular RHS gives triangular solutions
        for entry in solution.entries() {
            assert!(parametric_to_triangular(entry, 1e-9).is_some());
        }
    }
    assert!(strong_seen > 5, "saw only {strong_seen} strong systems");
}

#[test]
fn embedding_consistency_of_d_and_g() {
    let grid = uniform_grid(51);
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    for _ in 0..100 {
        let n = rng.gen_range(2..=5);
        let p = random_problem(&mut rng, n, 2.0);
        let report = embedding_solve(&p).unwrap();
        if report.status == Status::RejectedEarly || report.status == Status::SingularMatrix {
            continue;
        }
        let (lower, upper) = report.raw.as_ref().unwrap();
        let d = report.diagnostics.d.as_ref().unwrap();
        let g = report.diagnostics.g.as_ref().unwrap();
        for i in 0..lower.len() {
            for &z in &grid {
                let width = upper[i].at(z) - lower[i].at(z);
                let sum = upper[i].at(z) + lower[i].at(z);
                assert!((width - d[i].at(z)).abs() <= 1e-9);
                assert!((sum - g[i].at(z)).abs() <= 1e-9);
            }
        }
    }
}

#[test]
fn block_inverse_inverts_s_on_random_splits() {
    let mut rng = ChaCha8Rng::seed_from_u64(45);
    for _ in 0..100 {
        let n = rng.gen_range(2..=5);
        let p = random_problem(&mut rng, n, 1.0);
        let split = split_bc(&p.a).unwrap();
        let (d, e) = block_inverse(&split).unwrap();
        let s = build_s(&split);
        let mut inv = CrispMatrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, d.get(i, j));
                inv.set(i + n, j + n, d.get(i, j));
                inv.set(i, j + n, e.get(i, j));
                inv.set(i + n, j, e.get(i, j));
            }
        }
        let product = inv.matmul(&s).unwrap();
        let id = CrispMatrix::<f64>::identity(2 * n);
        let worst = product
            .entries()
            .iter()
            .zip(id.entries())
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max);
        assert!(worst <= 1e-9, "block inverse defect {worst}");

        // inverse of a nonnegative nonsingular B+C always has some positive entry
        let sum_inv = inverse(&split.b_plus_c()).unwrap();
        assert!(sum_inv.entries().iter().any(|&v| v > 0.0));
    }
}

prop_compose! {
    fn arb_triangular()(c in -50.0..50.0f64, mu in 0.0..10.0f64, rho in 0.0..10.0f64)
        -> TriangularFuzzy
    {
        TriangularFuzzy::new(c, mu, rho).unwrap()
    }
}

proptest! {
    #[test]
    fn triangular_round_trip(t in arb_triangular()) {
        // rounding in (c + rho) - rho keeps this from being bit-exact for
        // arbitrary reals; the paper's representable values round-trip exactly
        // (see the fuzzy module unit tests)
        let scale = 1.0 + t.center.abs() + t.spread_sum();
        let tol = 1e-12 * scale;
        let back = parametric_to_triangular(&triangular_to_parametric(&t), tol).unwrap();
        prop_assert!((back.center - t.center).abs() <= tol);
        prop_assert!((back.left_spread - t.left_spread).abs() <= tol);
        prop_assert!((back.right_spread - t.right_spread).abs() <= tol);
    }

    #[test]
    fn width_identity_on_grid(t in arb_triangular()) {
        let p = triangular_to_parametric(&t);
        for &z in &uniform_grid(21) {
            let width = p.upper.at(z) - p.lower.at(z);
            prop_assert!((width - t.spread_sum() * (1.0 - z)).abs() <= 1e-9);
        }
    }

    #[test]
    fn add_and_nonneg_scale_preserve_validity(
        s in arb_triangular(),
        t in arb_triangular(),
        k in 0.0..10.0f64,
    ) {
        let grid = uniform_grid(101);
        let p = triangular_to_parametric(&s);
        let q = triangular_to_parametric(&t);
        let sum = fuzzy_add(&p, &q).unwrap();
        prop_assert!(validate_fuzzy_number(&sum, &grid, 1e-9).is_valid());
        let scaled = scalar_mul(k, &p);
        prop_assert!(validate_fuzzy_number(&scaled, &grid, 1e-9).is_valid());
        // negative scaling also stays valid (branches swap)
        let neg = scalar_mul(-k, &p);
        prop_assert!(validate_fuzzy_number(&neg, &grid, 1e-9).is_valid());
    }
}
