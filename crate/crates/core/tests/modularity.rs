use k3pairs::modularity::{
    b_series, check_v_duality, check_v_parity, eisenstein_odd_q2, fit_in_r, fit_v_coefficient, logphi_sigma_check,
    mpt_check, sigma, sigma_series, verify_psi_vs_log, EisensteinBasis, FitReport,
};
use k3pairs::rings::{factorial, GaussianRational, Rational, Ring};
use k3pairs::series::QSeries;
use k3pairs::Error;
use num_bigint::BigInt;
use num_integer::Integer;

#[test]
fn sigma_is_multiplicative() {
    for w in 0..5 {
        for m in 1..=50i64 {
            for n in 1..=50i64 {
                if m * n <= 50 && m.gcd(&n) == 1 {
                    assert_eq!(sigma(w, m * n), sigma(w, m) * sigma(w, n), "w={w} m={m} n={n}");
                }
            }
        }
    }
    let s = sigma_series(3, 51);
    assert_eq!(s.coeff(50), sigma(3, 50));
}

#[test]
fn odd_weight_series_are_affine_in_even_ones() {
    // E_{2g+1}(q^2) and E_{2g} share the divisor sum Sigma_{2g-1}, so the
    // odd generators add nothing new to the span
    let q = 20;
    for g in 1..=4 {
        let basis = EisensteinBasis::new(2 * g, q);
        let target = eisenstein_odd_q2(2 * g + 1, q).map(|x| GaussianRational::from(x.clone()));
        let fit = fit_in_r(&target, 2 * g, 12, q).unwrap();
        assert!(fit.combination.iter().all(|t| !t.monomial.contains('q')), "{:?}", fit.combination);
        assert!(basis.monomials.iter().any(|m| m.name() == format!("E{}", 2 * g)));
    }
}

#[test]
fn b_series_is_even_and_inverts_the_cosine_factor() {
    let vorder = 13;
    let b = b_series(vorder);
    for s in (1..vorder).step_by(2) {
        assert!(b.coeff(s).is_zero(), "v^{s}");
    }
    // (e^{iv}-1)(e^{-iv}-1)/v^2 = (2 - 2 cos v)/v^2 = sum_k 2 (-1)^k v^{2k}/(2k+2)!
    let c = QSeries::from_fn(0, vorder, |s| {
        if s % 2 == 1 {
            return QSeries::zero();
        }
        let sign = if (s / 2) % 2 == 0 { 2 } else { -2 };
        let x = Rational::from_bigs(BigInt::from(sign), factorial(s as u64 + 2));
        QSeries::exact(0, vec![GaussianRational::from(x)])
    });
    let one = b.mul(&c);
    for s in 0..vorder {
        let want = if s == 0 { GaussianRational::one() } else { GaussianRational::zero() };
        assert_eq!(one.coeff(s).coeff(0), want, "v^{s}");
    }
}

#[test]
fn psi_closed_forms_small() {
    for (k, l) in [(0, 1), (1, 1), (2, 0)] {
        verify_psi_vs_log(k, l, 7, 5, 2).unwrap();
    }
}

#[test]
fn mpt_and_sigma_identities() {
    mpt_check(8, 8).unwrap();
    logphi_sigma_check(8, 8).unwrap();
}

#[test]
fn v_duality_and_parity() {
    for n in 1..=3 {
        for r in 0..=n {
            check_v_duality(n, r, 8, 8).unwrap();
        }
    }
    // evenness holds when the pair is self-dual (2r = n) and in rank one
    for (n, r) in [(1, 0), (1, 1), (2, 1)] {
        check_v_parity(n, r, 8, 8).unwrap();
    }
    for (n, r) in [(2, 0), (2, 2), (3, 0), (3, 1)] {
        let err = check_v_parity(n, r, 8, 8).unwrap_err();
        assert!(matches!(err, Error::Mismatch { ref at, .. } if at.v.unwrap() % 2 != 0), "({n},{r}): {err}");
    }
}

#[test]
fn rank_two_coefficients_lie_in_r() {
    for n in 1..=2 {
        for r in 0..=n {
            for s in 0..=6 {
                fit_v_coefficient(n, r, s, 12, 20, 30).unwrap_or_else(|e| panic!("({n},{r}) v^{s}: {e}"));
            }
        }
    }
}

#[test]
fn golden_fit_rank_two() {
    let golden: Vec<FitReport> = serde_json::from_str(include_str!("golden/fit_2_1.json")).unwrap();
    assert_eq!(golden.len(), 7);
    for want in golden {
        let got = fit_v_coefficient(want.n, want.r, want.s, 12, 20, want.validated_to_qorder).unwrap();
        assert_eq!(got, want);
    }
}
