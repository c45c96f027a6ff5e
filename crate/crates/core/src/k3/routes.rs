//! The generating function `G^r_n = F^r_n / S` by three independent routes:
//! the closed lattice sum, the matrix assembly of `F` divided by `S`, and
//! the C-table combination of `Psi` kernels.

use super::hodge::{check_rank, s_series, syst_hodge};
use crate::error::{Error, Location, Result};
use crate::rings::{binomial, Rational, Ring};
use crate::series::{QSeries, TTPoly, YPoly};
use crate::theta::{compare_kernels, phi_product, psi, Kernel, Monomial};
use crate::ucomb::{c_table, u_binomial, u_factorial, u_integer};
use num_bigint::BigInt;

/// Lattice points `(p, l)` with `p >= p0`, `l >= l0`, `p l < qorder`,
/// `|p - l| <= ywin`.
fn lattice(p0: i64, l0: i64, qorder: i64, ywin: i64) -> Vec<(i64, i64)> {
    let top = qorder.max(ywin) + 1;
    let mut out = Vec::new();
    for l in l0..=top {
        for p in p0..=top {
            if p * l < qorder && (p - l).abs() <= ywin {
                out.push((p, l));
            }
        }
    }
    out
}

/// `G^r_n` from the closed form
/// `u^{r(n-r)}/[n] sum_{p>=n-r, l>=r} u^{-nl-(p-l)r} [p+l] [n+l-r-1, n-1] [p+r-1, n-1] y^{p-l} q^{pl}`,
/// with `|y exponent| <= ywin`. The division by `[n]` is applied to each
/// assembled coefficient and must be exact.
pub fn g_closed(n: i64, r: i64, qorder: i64, ywin: i64) -> Result<Kernel> {
    check_rank(n, r)?;
    let mut coeffs = vec![YPoly::new(Some(ywin)); qorder.max(0) as usize];
    for (p, l) in lattice(n - r, r, qorder, ywin) {
        let term = u_integer(p + l)
            .mul(&u_binomial(n + l - r - 1, n - 1))
            .mul(&u_binomial(p + r - 1, n - 1))
            .shift(-n * l - (p - l) * r + r * (n - r));
        coeffs[(p * l) as usize].add_term(p - l, &term);
    }
    let nint = u_integer(n);
    let series = QSeries::new(0, qorder.max(0), coeffs);
    series.try_map(|c| {
        let mut out = YPoly::new(c.window());
        for (e, a) in c.terms() {
            let q = a
                .div_exact(&nint)
                .ok_or_else(|| Error::NonExactDivision(format!("{a} by [{n}] at y^{e}")))?;
            out.add_term(e, &q);
        }
        Ok(out)
    })
}

/// `g^r_n = G^r_n|_{u=1} = (1/n) sum (p+l) C(n+l-r-1, n-1) C(p+r-1, n-1) y^{p-l} q^{pl}`.
pub fn euler_g(n: i64, r: i64, qorder: i64, ywin: i64) -> Result<QSeries<YPoly<Rational>>> {
    check_rank(n, r)?;
    let mut coeffs = vec![YPoly::new(Some(ywin)); qorder.max(0) as usize];
    for (p, l) in lattice(n - r, r, qorder, ywin) {
        let c = BigInt::from(p + l)
            * binomial(n + l - r - 1, (n - 1) as u64)
            * binomial(p + r - 1, (n - 1) as u64);
        coeffs[(p * l) as usize].add_term(p - l, &Rational::from_bigs(c, BigInt::from(n)));
    }
    Ok(QSeries::new(0, qorder.max(0), coeffs))
}

/// `F^r_n = sum_{g>=0} sum_k e(Syst^n(r, D_g, k + r)) (t tb)^{-g} y^k q^{g-1}`
/// for `g <= qorder`, `|k| <= ywin`, assembled entry by entry from the
/// P-matrices and the Hilbert-scheme polynomials.
pub fn f_via_matrices(n: i64, r: i64, qorder: i64, ywin: i64) -> Result<QSeries<YPoly<TTPoly>>> {
    check_rank(n, r)?;
    let qorder = qorder.max(-1);
    let mut coeffs = Vec::new();
    for g in 0..=qorder {
        let mut c = YPoly::new(Some(ywin));
        for k in -ywin..=ywin {
            c.add_term(k, &syst_hodge(n, r, g, k)?.shift(-g, -g));
        }
        coeffs.push(c);
    }
    Ok(QSeries::new(-1, qorder, coeffs))
}

/// `F^r_n / S` from [`f_via_matrices`]. The quotient must depend on `t`,
/// `tb` only through `u = t tb`.
pub fn g_via_matrices(n: i64, r: i64, qorder: i64, ywin: i64) -> Result<Kernel> {
    let f = f_via_matrices(n, r, qorder, ywin)?;
    let s_inv = s_series(qorder)
        .invert()?
        .map(|c| YPoly::constant(c.clone()));
    let g = f.mul(&s_inv).truncate(qorder.max(0));
    g.try_map(|c| {
        let mut out = YPoly::new(c.window());
        for (e, a) in c.terms() {
            let p = a.to_upoly().ok_or_else(|| {
                Error::ValidationFailure(format!(
                    "F/S coefficient {a} at y^{e} is not a polynomial in t tb"
                ))
            })?;
            out.add_term(e, &p);
        }
        Ok(out)
    })
}

/// `sum_{i,j} C^r_n(i,j) Psi(u^i, u^j y; q)` for `r < n`. For `r = n` the
/// `p = 0` terms of the lattice sum are missing from `Psi`, and the sum is
/// taken over `-Psi(u^{-i}, u^{n-j} y^{-1})` instead, the same lattice sum
/// read with `p` and `l` exchanged.
pub fn modus_numerator(n: i64, r: i64, qorder: i64, ywin: i64) -> Result<Kernel> {
    check_rank(n, r)?;
    let table = c_table(n, r);
    let mut sum: Kernel = QSeries::from_fn(0, qorder.max(0), |_| YPoly::new(Some(ywin)));
    for ((i, j), c) in table.entries() {
        let term = if r < n {
            psi(Monomial::u(i), Monomial::uy(j, 1), qorder, ywin)?
        } else {
            psi(Monomial::u(-i), Monomial::uy(n - j, -1), qorder, ywin)?.neg()
        };
        sum = sum.add(&term.map(|p| p.scale(c)));
    }
    Ok(sum)
}

/// `G^r_n` from the C-table: every coefficient of [`modus_numerator`] must be
/// divisible by `(u-1)^{2n-1}`. After dividing, the `y^m` coefficient is
/// multiplied by `u^{r(n-r) - r m}` (`u^{r(n-r)}` when `r = n`) and divided
/// exactly by `[n][n-1]!^2`.
pub fn g_via_modus(n: i64, r: i64, qorder: i64, ywin: i64) -> Result<Kernel> {
    let num = modus_numerator(n, r, qorder, ywin)?;
    let den = u_integer(n).mul(&u_factorial(n - 1).pow(2));
    let mut coeffs = Vec::new();
    for (q, c) in num.dense().into_iter().enumerate() {
        let mut out = YPoly::new(c.window());
        for (m, a) in c.terms() {
            let at = || Location::q(q as i64).with_y(m);
            let b = a.exact_div_u_minus_one((2 * n - 1) as u32).ok_or_else(|| {
                Error::NotDivisible(format!(
                    "coefficient at {} is not divisible by (u-1)^{}",
                    at(),
                    2 * n - 1
                ))
            })?;
            // for r < n the C-table sum yields sum u^{-nl} [p+l] [..][..] y^{p-l} q^{pl},
            // without the factor u^{-(p-l) r}; it is applied here per power of y
            let twist = if r < n { -r * m } else { 0 };
            let b = b.shift(twist + r * (n - r));
            let g = b.div_exact(&den).ok_or_else(|| {
                Error::NonExactDivision(format!("{b} by [n][n-1]!^2 at {}", at()))
            })?;
            out.add_term(m, &g);
        }
        coeffs.push(out);
    }
    Ok(QSeries::new(0, num.order(), coeffs))
}

/// Which rational prefactor multiplies `G^0_1` in the rank-one product formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KyPrefactor {
    /// `(1 - y)(1 - u^{-1} y^{-1})`
    Printed,
    /// `(1 - u y)(1 - y^{-1})`, which equals `u` times the printed one.
    Corrected,
}

/// Both sides of `prefactor · G^0_1 = -Phi(u, y; q)`, restricted to
/// `|y exponent| <= ywin`.
pub fn ky_sides(prefactor: KyPrefactor, qorder: i64, ywin: i64) -> Result<(Kernel, Kernel)> {
    let lin = |m: Monomial| YPoly::one().sub(&m.to_ypoly(None));
    let pre = match prefactor {
        KyPrefactor::Printed => lin(Monomial::Y).mul(&lin(Monomial::uy(-1, -1))),
        KyPrefactor::Corrected => lin(Monomial::uy(1, 1)).mul(&lin(Monomial::uy(0, -1))),
    };
    // G^0_1 has an infinite y-tail at q^0; one extra column makes the edge exact
    let lhs = g_closed(1, 0, qorder, ywin + 1)?.map(|p| p.mul(&pre).restrict(ywin));
    let rhs = phi_product(1, 0, qorder).map(|p| p.neg().restrict(ywin));
    Ok((lhs, rhs))
}

pub fn check_ky(prefactor: KyPrefactor, qorder: i64, ywin: i64) -> Result<()> {
    let (lhs, rhs) = ky_sides(prefactor, qorder, ywin)?;
    compare_kernels("rank-one product formula", &lhs, &rhs, None)
}

/// The rank-one formula at `u = 1`, where both prefactors become
/// `(1 - y)(1 - y^{-1})`.
pub fn check_ky_euler(qorder: i64, ywin: i64) -> Result<()> {
    let (lhs, rhs) = ky_sides(KyPrefactor::Printed, qorder, ywin)?;
    for q in 0..qorder {
        let a = lhs.coeff(q).map(|_, c| c.eval_one());
        let b = rhs.coeff(q).map(|_, c| c.eval_one());
        if a != b {
            let y = a.sub(&b).terms().next().map(|t| t.0).unwrap_or(0);
            return Err(Error::mismatch(
                "rank-one product formula at u = 1",
                Location::q(q).with_y(y),
            ));
        }
    }
    Ok(())
}

/// `G^r_n(q, y) = G^{n-r}_n(q, y^{-1})`.
pub fn check_duality(n: i64, r: i64, qorder: i64, ywin: i64) -> Result<()> {
    let a = g_closed(n, r, qorder, ywin)?;
    let b = g_closed(n, n - r, qorder, ywin)?.map(|p| p.reflect());
    compare_kernels(
        &format!("duality G^{r}_{n}(y) = G^{}_{n}(1/y)", n - r),
        &a,
        &b,
        None,
    )
}

/// Closed form, matrix route and C-table route agree coefficient by
/// coefficient.
pub fn check_routes(n: i64, r: i64, qorder: i64, ywin: i64) -> Result<()> {
    let closed = g_closed(n, r, qorder, ywin)?;
    let matrices = g_via_matrices(n, r, qorder, ywin)?;
    compare_kernels(
        &format!("closed form vs matrices, (n,r)=({n},{r})"),
        &closed,
        &matrices,
        None,
    )?;
    let modus = g_via_modus(n, r, qorder, ywin)?;
    compare_kernels(
        &format!("closed form vs C-table, (n,r)=({n},{r})"),
        &closed,
        &modus,
        None,
    )?;
    for q in 0..qorder {
        for (e, c) in closed.coeff(q).terms() {
            if !c.is_integral() {
                return Err(Error::ValidationFailure(format!(
                    "half-integral u-exponent in {c} at q^{q} y^{e}"
                )));
            }
        }
    }
    Ok(())
}

/// `u = 1` in every coefficient.
pub fn eval_kernel_u_one(f: &Kernel) -> QSeries<YPoly<Rational>> {
    f.map(|p| p.map(|_, c| c.eval_one()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::UPoly;

    fn up(s: &str) -> UPoly {
        s.parse().unwrap()
    }

    #[test]
    fn closed_form_examples() {
        let g = g_closed(1, 0, 3, 4).unwrap();
        assert_eq!(g.coeff(0).coeff(1), UPoly::one());
        assert_eq!(g.coeff(0).coeff(3), up("1+u+u^2"));
        assert_eq!(g.coeff(1).coeff(0), up("u^-1+1"));
        assert!(g_closed(2, 1, 3, 4).unwrap().coeff(0).coeff(0).is_zero());
    }

    #[test]
    fn euler_examples() {
        let g = euler_g(1, 0, 3, 4).unwrap();
        assert_eq!(g.coeff(1).coeff(0), Rational::from(2));
        assert_eq!(g.coeff(0).coeff(1), Rational::from(1));
        assert_eq!(
            euler_g(2, 1, 3, 4).unwrap().coeff(1).coeff(0),
            Rational::from(1)
        );
    }

    #[test]
    fn small_routes_agree() {
        for n in 1..=2 {
            for r in 0..=n {
                check_routes(n, r, 6, 5).unwrap();
            }
        }
    }

    #[test]
    fn euler_is_closed_form_at_one() {
        for (n, r) in [(1, 0), (2, 1), (3, 0), (3, 2)] {
            assert!(eval_kernel_u_one(&g_closed(n, r, 6, 5).unwrap())
                .agrees_with(&euler_g(n, r, 6, 5).unwrap()));
        }
    }

    #[test]
    fn rank_one_products() {
        check_ky(KyPrefactor::Corrected, 8, 6).unwrap();
        check_ky_euler(8, 6).unwrap();
        let err = check_ky(KyPrefactor::Printed, 8, 6).unwrap_err();
        assert!(matches!(err, Error::Mismatch { ref at, .. } if at.q == Some(0)));
    }

    #[test]
    fn unsupported_rank() {
        assert!(matches!(g_closed(1, 2, 3, 3), Err(Error::Unsupported(_))));
    }
}
