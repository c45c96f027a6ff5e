use k3pairs::rings::{binomial, Rational, Ring};
use k3pairs::series::UPoly;
use k3pairs::ucomb::{k_series, sym_u_binomial, u_binomial, u_integer, verify_product, MatrixKind};

#[test]
fn pascal_rule() {
    for n in 0..=20 {
        for k in 0..=n {
            let rhs = u_binomial(n, k).add(&u_binomial(n, k - 1).shift(n + 1 - k));
            assert_eq!(u_binomial(n + 1, k), rhs, "[{},{k}]", n + 1);
        }
    }
}

#[test]
fn integer_splitting() {
    for n in 0..=20 {
        for k in 0..=n {
            assert_eq!(u_integer(n), u_integer(n - k).add(&u_integer(k).shift(n - k)), "[{n}] at k={k}");
        }
    }
}

#[test]
fn symmetric_binomials_are_palindromic() {
    for n in -20..=20 {
        for k in 0..=20 {
            let p = sym_u_binomial(n, k);
            assert_eq!(p.reflect(), p, "sym({n},{k})");
        }
    }
}

#[test]
fn binomial_value_and_degree() {
    for n in 0..=20 {
        for k in 0..=n {
            let b = u_binomial(n, k);
            assert_eq!(b.eval_one(), Rational::from(binomial(n, k as u64)));
            assert_eq!(b.max_doubled(), Some(2 * k * (n - k)));
            assert_eq!(b.min_doubled(), Some(0));
        }
    }
}

#[test]
fn k_series_reciprocity() {
    // K_n(1/t) = t^{-n} K_n(t): the coefficient of t^j equals that of t^{n-j}
    for n in 1..=10 {
        let k = k_series(n, 0);
        for j in 0..=n {
            assert_eq!(k.coeff(j), k.coeff(n - j), "n={n} j={j}");
        }
        assert!(k.coeff(n + 1).is_zero());
    }
}

#[test]
fn k_series_generates_symmetric_binomials() {
    for n in -8..=8i64 {
        let k = k_series(n, 10);
        for j in 0..=10 {
            assert_eq!(k.coeff(j), sym_u_binomial(n, j), "n={n} t^{j}");
        }
    }
}

#[test]
fn symmetric_binomial_recursion() {
    // sym(n+k, k) = sum_s u^{(sn+s-k)/2} sym(n+k-s-1, k-s)
    for n in 0..=12 {
        for k in 0..=12 {
            let mut acc = UPoly::zero();
            for s in 0..=k {
                acc.add_assign(&sym_u_binomial(n + k - s - 1, k - s).shift_doubled(s * n + s - k));
            }
            assert_eq!(sym_u_binomial(n + k, k), acc, "n={n} k={k}");
        }
    }
}

#[test]
fn inverse_and_product_matrices() {
    verify_product(MatrixKind::A(0), MatrixKind::B, None, 41).unwrap();
    for n in 1..=5 {
        verify_product(MatrixKind::A(n), MatrixKind::B, Some(MatrixKind::P(n)), 31).unwrap();
    }
}
