use jacobi_mult::fourier_jacobi::{analyze, ExpansionPair};
use jacobi_mult::frac_diff::{difference_sequence, CoefficientSequence, Parity};
use jacobi_mult::multiplier_lab::*;
use jacobi_mult::special_fn::{normalized_jacobi, JacobiParams};
use jacobi_mult::Error;
use num_complex::Complex64;
use proptest::prelude::*;
use std::f64::consts::PI;

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// A_j^λ by the product recursion, independent of the gamma routines.
fn binom(lambda: f64, j: usize) -> f64 {
    (1..=j).fold(1.0, |a, i| a * (i as f64 + lambda) / i as f64)
}

fn fast() -> FunctionalOptions {
    FunctionalOptions::default().with_n_max(64)
}

#[test]
fn identity_multiplier_is_identity() {
    let params = JacobiParams::new(1.0, 0.5).unwrap();
    let f = ExpansionPair::from_real(params, &[0.3, -1.0, 2.0, 0.25]);
    let g = apply_multiplier(&MultiplierSequence::constant(c(1.0)), &f);
    assert_eq!(g.coefficients(), f.coefficients());
    let fam = standard_family(64, 1.0, 4, 3);
    let nb = multiplier_norm_lower_bound(&MultiplierSequence::constant(c(1.0)), 1.5, &params, (1.0, 0.5), &fam).unwrap();
    assert!((nb.value - 1.0).abs() < 1e-12);
}

#[test]
fn dirac_isolates_one_term() {
    let coeffs = CoefficientSequence::from_real(&[1.0, 2.0, 3.0, 4.0]);
    let out = apply_multiplier_coeffs(&MultiplierSequence::dirac(2), &coeffs).unwrap();
    assert_eq!(out.take(5), vec![c(0.0), c(0.0), c(3.0), c(0.0), c(0.0)]);
}

#[test]
fn cesaro_one_gives_fejer_kernel() {
    // Chebyshev case: Σ_{k≤N} h_k cos kθ = D_N(θ)/π, and the (C,1) means give
    // the Fejér kernel F_N(θ)/π = (sin((N+1)θ/2)/sin(θ/2))²/(π(N+1)).
    let n = 12;
    let params = JacobiParams::new(-0.5, -0.5).unwrap();
    let dirichlet = ExpansionPair::from_real(params, &vec![1.0; n + 1]);
    let fejer = apply_multiplier(&MultiplierSequence::cesaro(1.0, n).unwrap(), &dirichlet);
    for i in 1..40 {
        let t = PI * i as f64 / 40.0;
        let s = ((n + 1) as f64 * t / 2.0).sin() / (t / 2.0).sin();
        let want = s * s / (PI * (n + 1) as f64);
        assert!((fejer.evaluate(t).re - want).abs() < 1e-12, "θ = {t}");
    }
}

#[test]
fn empty_family_refused() {
    let params = JacobiParams::ultraspherical(0.5).unwrap();
    let r = multiplier_norm_lower_bound(&MultiplierSequence::dirac(0), 2.0, &params, (0.5, 0.5), &[]);
    assert!(matches!(r, Err(Error::Domain(_))));
}

#[test]
fn homogeneous_in_constant_multipliers() {
    let params = JacobiParams::ultraspherical(0.5).unwrap();
    let fam = standard_family(32, 0.5, 3, 1);
    let nb = multiplier_norm_lower_bound(&MultiplierSequence::constant(Complex64::new(0.0, -2.5)), 1.2, &params, (0.5, 0.5), &fam)
        .unwrap();
    assert!((nb.value - 2.5).abs() < 1e-12);
}

#[test]
fn restricted_identity_and_parity_support() {
    let fam = standard_family(32, 1.0, 3, 5);
    for parity in [Parity::Even, Parity::Odd] {
        let r = restricted_norm_equivalence(&MultiplierSequence::constant(c(1.0)), 1.5, 1.0, parity, &fam).unwrap();
        assert!((r.lhs - 1.0).abs() < 1e-12 && (r.rhs - 1.0).abs() < 1e-12 && (r.ratio - 1.0).abs() < 1e-12);
    }
    // odd entries never meet an even trial
    let a = MultiplierSequence::from_real(&[1.0, 0.0, 0.5, 0.0, 0.25, 0.0, -0.5]);
    let b = MultiplierSequence::from_real(&[1.0, 7.0, 0.5, -3.0, 0.25, 2.0, -0.5]);
    let ra = restricted_norm_equivalence(&a, 1.3, 0.5, Parity::Even, &fam).unwrap();
    let rb = restricted_norm_equivalence(&b, 1.3, 0.5, Parity::Even, &fam).unwrap();
    assert_eq!(ra, rb);
}

#[test]
fn cesaro_restricted_ratio_band() {
    let m = MultiplierSequence::cesaro(1.0, 24).unwrap();
    for (seed, parity) in [(1, Parity::Even), (2, Parity::Odd)] {
        let fam = standard_family(48, 0.5, 6, seed);
        let r = restricted_norm_equivalence(&m, 2.0, 0.5, parity, &fam).unwrap();
        assert!((0.25..=4.0).contains(&r.ratio), "{parity:?}: {r:?}");
    }
}

#[test]
fn sufficiency_dirac_matches_direct_sum() {
    let (n, mu) = (40usize, 1.5);
    let m = MultiplierSequence::dirac(n);
    let r = sufficiency_d(&m, mu, 1.5, 0.5, &fast()).unwrap();
    // Δ_2^μ δ_N at k = N − 2j is A_j^{−μ−1}
    let d = |k: usize| {
        if k <= n && (n - k).is_multiple_of(2) {
            binom(-mu - 1.0, (n - k) / 2)
        } else {
            0.0
        }
    };
    let block = |a: usize, b: usize| {
        (a..=b)
            .map(|k| ((k + 1) as f64).powf(2.0 * mu - 1.0) * d(k) * d(k))
            .sum::<f64>()
            .sqrt()
    };
    let mut sup = block(0, 0);
    let mut s = 1;
    while s <= 64 {
        sup = sup.max(block(s, 2 * s));
        s *= 2;
    }
    assert!((r.value - (1.0 + sup)).abs() < 1e-12, "{} vs {}", r.value, 1.0 + sup);
    assert!((r.value - r.recompute()).abs() < 1e-15);
}

#[test]
fn sufficiency_oscillating_blocks_grow() {
    // Δ_2 doubles i^k, so blocks grow like N^{μ−σ}
    let (mu, sigma) = (1.5, 0.25);
    let m = MultiplierSequence::oscillating(sigma).unwrap();
    let r = sufficiency_d(&m, mu, 1.5, 0.0, &FunctionalOptions::default().with_n_max(256).with_eps(1e-8)).unwrap();
    let v: Vec<f64> = r.blocks.iter().map(|b| b.value).collect();
    let n = v.len();
    let growth = v[n - 1] / v[n - 2];
    assert!((growth / 2f64.powf(mu - sigma) - 1.0).abs() < 0.1, "{v:?}");
    assert_eq!(r.stable, Some(false));
}

#[test]
fn identity_functionals() {
    let one = MultiplierSequence::constant(c(1.0));
    assert!((sufficiency_d(&one, 2.0, 1.5, 0.5, &fast()).unwrap().value - 1.0).abs() < 1e-12);
    let r = necessity_functional(&one, 1.5, 1.0, 0.5, NecessityOrders::default(), &fast()).unwrap();
    assert!((r.value - 1.0).abs() < 1e-12);
    assert!((bounded_variation_functional(&one, &fast()).unwrap().value - 1.0).abs() < 1e-12);
}

#[test]
fn alternation_has_finite_variation() {
    let m = MultiplierSequence::custom(CoefficientSequence::cosine(PI)).unwrap();
    let r = bounded_variation_functional(&m, &fast()).unwrap();
    assert!((r.value - 1.0).abs() < 1e-9, "{r:?}");
}

#[test]
fn necessity_cesaro_below_critical_grows() {
    // α = β = 1, p = 1.1: critical index 1.136, δ = 1/2 below it
    let values: Vec<f64> = [32, 64, 128, 256]
        .iter()
        .map(|&n| {
            let m = MultiplierSequence::cesaro(0.5, n).unwrap();
            necessity_functional(&m, 1.1, 1.0, 1.0, NecessityOrders::default(), &FunctionalOptions::default().with_n_max(512))
                .unwrap()
                .value
        })
        .collect();
    assert!(values.windows(2).all(|w| w[1] > w[0]), "{values:?}");
    assert!(values[3] > 2.0 * values[0], "{values:?}");
}

#[test]
fn necessity_oscillating_below_threshold_grows() {
    // (2α+1)/(σ+α+1/2) = 3/1.75 at σ = 1/4, α = 1
    let m = MultiplierSequence::oscillating(0.25).unwrap();
    let opts = FunctionalOptions::default().with_n_max(128).with_eps(1e-6);
    let r = necessity_functional(&m, 1.05, 1.0, 1.0, NecessityOrders::default(), &opts).unwrap();
    let v: Vec<f64> = r.blocks.iter().map(|b| b.value).collect();
    assert!(v.windows(2).skip(1).all(|w| w[1] > 1.5 * w[0]), "{v:?}");
    assert_eq!(r.stable, Some(false));
}

#[test]
fn necessity_at_p_two_is_plain_l2_blocks() {
    // p = p′ = 2 forces ν = μ = 0: ‖m‖_∞ + sup_N (Σ_{k=N}^{2N} |m_k|²/(k+1))^{1/2}
    let x = [1.0, 0.5, 0.75, 0.2, -0.1];
    assert_eq!(necessity_orders(2.0, 1.0, 0.5), (0.0, 0.0));
    let r = necessity_functional(&MultiplierSequence::from_real(&x), 2.0, 1.0, 0.5, NecessityOrders::default(), &fast()).unwrap();
    let sup = dyadic_blocks(64, false)
        .iter()
        .map(|&(a, b)| (a..=b.min(4)).map(|k| x[k] * x[k] / (k + 1) as f64).sum::<f64>().sqrt())
        .fold(0.0, f64::max);
    assert!((r.value - (1.0 + sup)).abs() < 1e-14);
}

#[test]
fn cohen_bound_arithmetic_and_asymptotics() {
    assert!((cohen_bound(c(-0.7), 0, 1.2, 1.0) - 0.7).abs() < 1e-15);
    assert!((cohen_bound(c(3.0), 15, 2.0, 1.0) - 0.75).abs() < 1e-14);
    // (C,δ): m_N = 1/A_N^δ ≈ Γ(δ+1) N^{−δ}
    let (p, alpha) = (1.1, 0.5);
    let e = cohen_exponent(p, alpha);
    for (delta, g) in [(1.0, 1.0), (0.5, PI.sqrt() / 2.0)] {
        let n = 20000;
        let m = MultiplierSequence::cesaro(delta, n).unwrap();
        let v = cohen_bound(m.at(n), n, p, alpha);
        let want = g * ((n + 1) as f64).powf(e) * (n as f64).powf(-delta);
        assert!((v / want - 1.0).abs() < 1e-3, "δ = {delta}: {v} vs {want}");
    }
}

#[test]
fn test_function_norm_pinned_and_parseval() {
    let params = JacobiParams::ultraspherical(0.5).unwrap();
    let v = test_function_norm(0, 1.5, &params, 1 << 10).unwrap();
    assert!((v - PINNED_CHI0).abs() < 1e-12 * PINNED_CHI0, "{v:.17}");
    let n2 = test_function_norm(3, 2.0, &params, 1 << 10).unwrap();
    let sum: f64 = TestSequenceChi::new(3).values().iter().map(|x| x * x).sum();
    assert!((n2 * n2 / sum - 1.0).abs() < 1e-10);
    assert!(matches!(test_function_norm(10, 1.5, &params, 1 << 10), Err(Error::Resource(_))));
}

const PINNED_CHI0: f64 = 1.258_249_059_621_325;

#[test]
fn chi_shape() {
    let t = TestSequenceChi::new(4);
    assert!(t.plateau().all(|k| t.at(k) == 1.0));
    assert_eq!(t.at(8), 0.0);
    assert_eq!(t.at(128), 0.0);
    assert!(t.at(12) > 0.0 && t.at(12) < 1.0);
}

#[test]
fn hausdorff_young_moments() {
    let r = hausdorff_young_check(&[c(1.0)], 0.0, 0.0, 2.0).unwrap();
    assert!((r.lhs - 1.0).abs() < 1e-14 && (r.rhs - PI.sqrt()).abs() < 1e-12);
    let z = hausdorff_young_check(&[c(0.0), c(0.0)], 0.5, 0.5, 1.5).unwrap();
    assert_eq!((z.lhs, z.rhs, z.ratio), (0.0, 0.0, None));
}

#[test]
fn l1_k_for_shifted_delta() {
    let (n, alpha) = (5usize, 1.0);
    let delta = CoefficientSequence::from_real(&[0.0, 0.0, 0.0, 0.0, 0.0, 1.0]);
    let at = |order: f64, k: usize| {
        if k <= n && (n - k).is_multiple_of(2) {
            binom(-order - 1.0, (n - k) / 2).abs()
        } else {
            0.0
        }
    };
    let mu = 2.5;
    let k42 = l1_sufficiency_k(&delta, mu, alpha, L1Variant::Thm42, &fast()).unwrap();
    let want42 = (1.0f64 / 5.0).sqrt() + at(mu, 1) + 3f64.powf(mu - 0.5) * at(mu, 3) + 5f64.powf(mu - 0.5) * at(mu, 5);
    assert!((k42.value - want42).abs() < 1e-10, "{} vs {want42}", k42.value);
    let mu = 1.75;
    let k43 = l1_sufficiency_k(&delta, mu, alpha, L1Variant::Thm43, &fast()).unwrap();
    let want43: f64 = [1usize, 3, 5].iter().map(|&k| ((k + 1) as f64).powf(mu) * at(mu + 1.0, k)).sum();
    assert!((k43.value - want43).abs() < 1e-10, "{} vs {want43}", k43.value);
    let zero = l1_sufficiency_k(&CoefficientSequence::zeros(), mu, alpha, L1Variant::Thm43, &fast()).unwrap();
    assert_eq!(zero.value, 0.0);
}

#[test]
fn l1_k_harmonic_decays() {
    let h = CoefficientSequence::power_law(1.0);
    let r = l1_sufficiency_k(&h, 1.75, 1.0, L1Variant::Thm43, &FunctionalOptions::default().with_n_max(256)).unwrap();
    assert!(r.value.is_finite() && r.tail_bound.is_finite(), "{r:?}");
    // blocks approach the ratio 1/2 of a k^{−2} tail summed over doubling ranges
    let v: Vec<f64> = r.blocks.iter().skip(6).map(|b| b.value).collect();
    assert!(v.windows(2).all(|w| w[1] < 0.7 * w[0]), "{v:?}");
}

#[test]
fn reconstruct_even_support_has_no_odd_part() {
    let coeffs = CoefficientSequence::from_real(&[0.5, 0.0, -1.0, 0.0, 0.25]);
    let r = l1_reconstruct(&coeffs, 2.0, 1.0, 64).unwrap();
    assert!(r.f2.coefficients().iter().all(|v| v.norm() == 0.0));
    let back = analyze(&r.function, &JacobiParams::ultraspherical(1.0).unwrap(), 4).unwrap();
    for k in 0..5 {
        assert!((back.at(k) - coeffs.at(k)).norm() < 1e-10);
    }
}

#[test]
fn kernel_l1_at_zero() {
    for alpha in [0.0, 0.5, 2.0] {
        assert!((cesaro_kernel_l1(alpha + 1.0, 0, alpha, KernelSystem::EvenHalf).unwrap() - 1.0).abs() < 1e-12);
    }
    // odd half: h_0^{(α,1/2)} ∫ (sin θ/2)^{2α+1} cos θ/2 dθ = B(α+1, 1)/B(α+1, 3/2)
    for (alpha, want) in [(0.0, 1.5), (0.5, 16.0 / (3.0 * PI))] {
        assert!((cesaro_kernel_l1(alpha + 1.0, 0, alpha, KernelSystem::OddHalf).unwrap() - want).abs() < 1e-12);
    }
}

#[test]
fn parseval_moments() {
    // f = h_0: I/S = B(α+μ+1, α+μ+1)/B(α+1, α+1)
    let params = JacobiParams::ultraspherical(1.0).unwrap();
    let f = ExpansionPair::from_real(params, &[1.0]);
    let b22 = 1.0 / 6.0;
    for (mu, b) in [(1.0, 1.0 / 30.0), (0.5, 0.5625 * PI / 24.0)] {
        let r = parseval_weighted(&f, mu, ParsevalSide::A).unwrap();
        assert!((r.ratio.unwrap() - b / b22).abs() < 1e-12, "μ = {mu}: {r:?}");
    }
    let g = ExpansionPair::from_real(params, &[0.3, -1.0, 0.5, 2.0, 0.1]);
    let r = parseval_weighted(&g, 0.0, ParsevalSide::A).unwrap();
    assert!((r.ratio.unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn sup_bound_on_legendre_polynomial() {
    // α = 0: h_N = 2N + 1 and R_N has f̂(N) = 1/h_N
    let n = 7;
    let mut coeffs = vec![0.0; n + 1];
    coeffs[n] = 1.0 / (2 * n + 1) as f64;
    let f = ExpansionPair::from_real(JacobiParams::ultraspherical(0.0).unwrap(), &coeffs);
    let r = sup_coefficient_bound(&f, 0.0).unwrap();
    assert!((r.lhs - 1.0 / ((2 * n + 1) as f64).sqrt()).abs() < 1e-13);
    assert!(r.rhs > 0.0 && r.rhs.is_finite());
    let z = summed_diff_bound(&ExpansionPair::from_real(JacobiParams::ultraspherical(1.0).unwrap(), &[0.0; 4]), 0.5).unwrap();
    assert_eq!((z.lhs, z.rhs), (0.0, 0.0));
}

#[test]
fn summed_diff_bounded_on_kernels() {
    let alpha = 1.0;
    let params = JacobiParams::ultraspherical(alpha).unwrap();
    let ratios: Vec<f64> = [16, 32, 64, 128]
        .iter()
        .map(|&n| {
            let f = TrialKind::Cesaro { n, delta: alpha + 1.5 }.pair(&params);
            summed_diff_bound(&f, 0.75).unwrap().ratio.unwrap()
        })
        .collect();
    assert!(relative_change(ratios[2], ratios[3]) < STABILITY_TOL, "{ratios:?}");
}

#[test]
fn mehler_matches_integer_differences() {
    for alpha in [0.25, 1.0, 2.5] {
        let params = JacobiParams::ultraspherical(alpha).unwrap();
        let r = |k: usize, t: f64| normalized_jacobi(k, &params, t.cos()).unwrap();
        for k in [0, 3, 10, 31] {
            for t in [0.1, 0.7, 1.3] {
                let d1 = r(k, t) - r(k + 2, t);
                let d2 = r(k, t) - 2.0 * r(k + 2, t) + r(k + 4, t);
                assert!((mehler_diff(k, 1.0, alpha, t).unwrap() - d1).abs() < 1e-10);
                assert!((mehler_diff(k, 2.0, alpha, t).unwrap() - d2).abs() < 1e-10);
            }
        }
    }
}

#[test]
fn lemma_differences_vanish_at_the_origin() {
    for t in [1e-2, 1e-3, 1e-4] {
        let d = mehler_diff(9, 0.5, 1.0, t).unwrap();
        assert!(d.abs() < 5.0 * t.sin().sqrt(), "θ = {t}: {d}");
    }
}

#[test]
fn lemma_domain_errors() {
    let g = [0.5];
    assert!(matches!(lemma45_check(0.5, -0.6, &[1], &g), Err(Error::Domain(_))));
    assert!(matches!(lemma45_check(1.2, 0.5, &[1], &g), Err(Error::Domain(_))));
    assert!(matches!(lemma45_check(0.5, 0.5, &[1], &[2.0]), Err(Error::Domain(_))));
}

#[test]
fn report_json_round_trip() {
    let r = sufficiency_d(&MultiplierSequence::dirac(3), 1.0, 1.5, 0.5, &fast()).unwrap();
    let back = FunctionalReport::from_json(&r.to_json()).unwrap();
    assert_eq!(back.value, r.value);
    assert_eq!(back.blocks.len(), r.blocks.len());
}

/// sup_N over κ = 1 blocks of (Σ |(j+1)^μ Δ^μ x_j|²/(j+1))^{1/2}.
fn kappa_one_sup(x: &[f64], mu: f64, n_max: usize) -> f64 {
    let d = difference_sequence(&CoefficientSequence::from_real(x), mu, 1).unwrap().0.take(2 * n_max + 1);
    dyadic_blocks(n_max, true)
        .iter()
        .map(|&(a, b)| {
            (a..=b)
                .map(|j| ((j + 1) as f64).powf(2.0 * mu - 1.0) * d[j].norm_sqr())
                .sum::<f64>()
                .sqrt()
        })
        .fold(0.0, f64::max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn apply_is_bilinear(
        m1 in prop::collection::vec(-2.0f64..2.0, 1..12),
        m2 in prop::collection::vec(-2.0f64..2.0, 1..12),
        f in prop::collection::vec(-1.0f64..1.0, 1..12),
        g in prop::collection::vec(-1.0f64..1.0, 1..12),
        s in -3.0f64..3.0,
    ) {
        let params = JacobiParams::new(0.5, 0.0).unwrap();
        let (fp, gp) = (ExpansionPair::from_real(params, &f), ExpansionPair::from_real(params, &g));
        let (a, b) = (MultiplierSequence::from_real(&m1), MultiplierSequence::from_real(&m2));
        let n = f.len().max(g.len());
        let sum: Vec<f64> = (0..n).map(|k| f.get(k).unwrap_or(&0.0) + s * g.get(k).unwrap_or(&0.0)).collect();
        let lhs = apply_multiplier(&a, &ExpansionPair::from_real(params, &sum));
        let (tf, tg) = (apply_multiplier(&a, &fp), apply_multiplier(&a, &gp));
        for k in 0..n {
            let want = tf.sequence().at(k) + tg.sequence().at(k) * s;
            prop_assert!((lhs.sequence().at(k) - want).norm() < 1e-12);
        }
        let msum: Vec<f64> = (0..m1.len().max(m2.len())).map(|k| m1.get(k).unwrap_or(&0.0) + m2.get(k).unwrap_or(&0.0)).collect();
        let both = apply_multiplier(&MultiplierSequence::from_real(&msum), &fp);
        let tb = apply_multiplier(&b, &fp);
        for k in 0..f.len() {
            prop_assert!((both.sequence().at(k) - tf.sequence().at(k) - tb.sequence().at(k)).norm() < 1e-12);
        }
    }

    #[test]
    fn l2_contraction(
        m in prop::collection::vec(-2.0f64..2.0, 1..20),
        f in prop::collection::vec(-1.0f64..1.0, 1..20),
    ) {
        let params = JacobiParams::ultraspherical(1.0).unwrap();
        let mm = MultiplierSequence::from_real(&m);
        let fp = ExpansionPair::from_real(params, &f);
        let lhs = expansion_norm(&apply_multiplier(&mm, &fp), 2.0, 1.0, 1.0).unwrap();
        let rhs = mm.sup_norm() * expansion_norm(&fp, 2.0, 1.0, 1.0).unwrap();
        prop_assert!(lhs <= rhs + 1e-9 * (1.0 + rhs));
    }

    #[test]
    fn bound_monotone_in_family(seed in 0u64..1000, extra in 1usize..4) {
        let params = JacobiParams::ultraspherical(0.5).unwrap();
        let m = MultiplierSequence::cesaro(0.5, 12).unwrap();
        let small = standard_family(16, 0.5, 2, seed);
        let mut big = small.clone();
        big.extend(standard_family(24, 0.5, extra, seed + 17));
        let a = multiplier_norm_lower_bound(&m, 1.4, &params, (0.5, 0.5), &small).unwrap();
        let b = multiplier_norm_lower_bound(&m, 1.4, &params, (0.5, 0.5), &big).unwrap();
        prop_assert!(b.value >= a.value);
    }

    #[test]
    fn variation_of_monotone_halves(
        ev in prop::collection::vec(0.0f64..1.0, 1..16),
        od in prop::collection::vec(0.0f64..1.0, 1..16),
    ) {
        let (mut ev, mut od) = (ev, od);
        ev.sort_by(|a, b| b.total_cmp(a));
        od.sort_by(|a, b| b.total_cmp(a));
        let len = 2 * ev.len().max(od.len());
        let m: Vec<f64> = (0..len)
            .map(|k| if k % 2 == 0 { ev.get(k / 2) } else { od.get(k / 2) }.copied().unwrap_or(0.0))
            .collect();
        let sup = m.iter().fold(0.0f64, |a, v| a.max(v.abs()));
        let osc = m.iter().fold(f64::MIN, |a, &v| a.max(v)) - m.iter().fold(f64::MAX, |a, &v| a.min(v)).min(0.0);
        let r = bounded_variation_functional(&MultiplierSequence::from_real(&m), &fast()).unwrap();
        prop_assert!(r.value <= sup + 2.0 * osc + 1e-12);
    }

    #[test]
    fn parity_split_of_block_functional(m in prop::collection::vec(-1.0f64..1.0, 2..48)) {
        let mu = 1.0;
        let n_max = 64;
        let r = sufficiency_d(&MultiplierSequence::from_real(&m), mu, 1.5, 0.5, &fast()).unwrap();
        let two = r.block_aggregate();
        let ev: Vec<f64> = m.iter().step_by(2).copied().collect();
        let od: Vec<f64> = m.iter().skip(1).step_by(2).copied().collect();
        let one = kappa_one_sup(&ev, mu, n_max) + kappa_one_sup(&od, mu, n_max);
        prop_assert!(two <= 4.0 * one + 1e-12 && one <= 4.0 * two + 1e-12, "{two} vs {one}");
    }
}
