//! `v^2 g^r_n(q, e^{iv})` as a v-series of q-series, and the identities
//! checked on it.

use super::eisenstein::{eisenstein_even, sigma_series_gaussian};
use crate::error::{Error, Location, Result};
use crate::k3::{check_rank, euler_g};
use crate::rings::{bernoulli, factorial, GaussianRational, QAlgebra, Rational, Ring};
use crate::series::{mul_v_pow, substitute_y_exp_iv, transpose, QSeries, VSeries, YPoly};
use crate::theta::phi_product;
use num_bigint::BigInt;

fn inv_fact(s: i64) -> Rational {
    Rational::from_bigs(BigInt::from(1), factorial(s as u64))
}

/// `e^{icv}` to `O(v^order)`.
fn exp_icv(c: i64, order: i64) -> QSeries<GaussianRational> {
    QSeries::from_fn(0, order, |s| {
        GaussianRational::i_pow(s).scale(&Rational::from(BigInt::from(c).pow(s as u32)).mul(&inv_fact(s)))
    })
}

/// `beta(iv) = iv/(e^{iv} - 1) = sum B_k (iv)^k/k!` to `O(v^order)`.
fn beta_iv(order: i64) -> QSeries<GaussianRational> {
    QSeries::from_fn(0, order, |k| GaussianRational::i_pow(k).scale(&bernoulli(k as usize).mul(&inv_fact(k))))
}

/// The `q^0` part of `v^2 g^r_n`. For `r = 0` it is
/// `v^2 sum_{p>=n} C(p, n) y^p = v^2 y^n/(1-y)^{n+1} = i^{n+1} v^{1-n} e^{inv} beta(iv)^{n+1}`;
/// `r = n` is the same with `v -> -v`, and `0 < r < n` has no `q^0` term.
pub fn q0_part(n: i64, r: i64, vorder: i64) -> QSeries<GaussianRational> {
    let lower = 1 - n;
    if r != 0 && r != n {
        return QSeries::zero_to(vorder);
    }
    let len = (vorder - lower).max(0);
    let mut f = exp_icv(n, len);
    let b = beta_iv(len);
    for _ in 0..=n {
        f = f.mul(&b);
    }
    f = f.scale(&GaussianRational::i_pow(n + 1)).shift(lower);
    if r == n && r != 0 {
        f = QSeries::from_fn(lower, vorder, |s| {
            let c = f.coeff(s);
            if s % 2 == 0 { c } else { c.neg() }
        });
    }
    f
}

/// `v^2 g^r_n(q, e^{iv})` with q-coefficients below `qorder` and v-powers
/// below `vorder` (from `v^{1-n}` up).
pub fn v_expansion(n: i64, r: i64, qorder: i64, vorder: i64) -> Result<VSeries> {
    check_rank(n, r)?;
    if qorder < 1 {
        return Err(Error::InvalidArgument(format!("qorder {qorder} < 1")));
    }
    // Above q^0 the coefficient of q^m only has |y exponent| <= m - 1.
    let g = euler_g(n, r, qorder, qorder)?;
    let positive = QSeries::from_fn(0, qorder, |m| {
        if m == 0 {
            YPoly::zero()
        } else {
            g.coeff(m).unwindowed()
        }
    });
    let by_y = transpose(&positive).map(|_, c| c.map(GaussianRational::from_rational));
    let upper = mul_v_pow(&substitute_y_exp_iv(&by_y, vorder), 2).truncate(vorder);
    let q0 = q0_part(n, r, vorder);
    let lower = (1 - n).min(0);
    Ok(QSeries::from_fn(lower, vorder, |s| {
        let mut c = QSeries::monomial(0, q0.coeff(s), qorder);
        if s >= 0 {
            if let Some(t) = upper.get(s) {
                c = c.add(t);
            }
        }
        c
    }))
}

/// First `(v, q)` where two v-series differ on their common range.
pub fn compare_vseries(what: &str, lhs: &VSeries, rhs: &VSeries) -> Result<()> {
    let lo = lhs.lower().min(rhs.lower());
    let hi = lhs.order().min(rhs.order());
    let zero = QSeries::zero();
    for s in lo..hi {
        let (a, b) = (lhs.get(s).unwrap_or(&zero), rhs.get(s).unwrap_or(&zero));
        if let Some(q) = a.first_difference(b) {
            return Err(Error::mismatch(
                format!("{what}: {} vs {}", a.coeff(q), b.coeff(q)),
                Location::q(q).with_v(s),
            ));
        }
    }
    Ok(())
}

/// `-v^2 g^0_1(q, e^{iv}) = exp(sum_{g>=1} v^{2g} |B_{2g}|/(g (2g)!) E_{2g}(q))`.
pub fn mpt_check(qorder: i64, vorder: i64) -> Result<()> {
    let lhs = v_expansion(1, 0, qorder, vorder)?.neg();
    let exponent = QSeries::from_fn(0, vorder, |s| {
        if s == 0 || s % 2 == 1 {
            return QSeries::zero_to(qorder);
        }
        let g = s / 2;
        let c = bernoulli(s as usize).abs().mul(&inv_fact(s)).div_int(g);
        eisenstein_even(s, qorder).map(|x| GaussianRational::from_rational(&x.mul(&c)))
    });
    compare_vseries("-v^2 g^0_1 vs exp(sum E_2g)", &lhs, &exponent.exp()?)
}

/// `log Phi(1, e^{iv}; q) = 4 sum_{k>=1} (-1)^k v^{2k}/(2k)! Sigma_{2k-1}`.
pub fn logphi_sigma_check(qorder: i64, vorder: i64) -> Result<()> {
    let phi = phi_product(0, 0, qorder).map(|p| p.map(|_, c| c.eval_one()));
    let log = phi.log()?;
    let by_y = transpose(&log.map(|p| p.clone().unwindowed()))
        .map(|_, c| c.map(GaussianRational::from_rational));
    let lhs = substitute_y_exp_iv(&by_y, vorder);
    let rhs = QSeries::from_fn(0, vorder, |s| {
        if s == 0 || s % 2 == 1 {
            return QSeries::zero_to(qorder);
        }
        let sign = if (s / 2) % 2 == 0 { 4 } else { -4 };
        let c = GaussianRational::from_rational(&Rational::from(sign).mul(&inv_fact(s)));
        sigma_series_gaussian((s - 1) as u32, qorder).scale(&c)
    });
    compare_vseries("log Phi(1, e^{iv}) vs Sigma sum", &lhs, &rhs)
}

/// `v^s` coefficient of `(n, r)` equals `(-1)^s` times that of `(n, n - r)`.
pub fn check_v_duality(n: i64, r: i64, qorder: i64, vorder: i64) -> Result<()> {
    let a = v_expansion(n, r, qorder, vorder)?;
    let b = v_expansion(n, n - r, qorder, vorder)?;
    let b = QSeries::from_fn(b.lower(), b.order(), |s| if s % 2 == 0 { b.coeff(s) } else { b.coeff(s).neg() });
    compare_vseries(&format!("v-duality ({n},{r}) vs ({n},{})", n - r), &a, &b)
}

/// Odd v-powers vanish and every coefficient is real.
pub fn check_v_parity(n: i64, r: i64, qorder: i64, vorder: i64) -> Result<()> {
    let f = v_expansion(n, r, qorder, vorder)?;
    for (s, c) in f.terms() {
        for (q, x) in c.terms() {
            if (s % 2 != 0 && !x.is_zero()) || !x.is_real() {
                return Err(Error::mismatch(
                    format!("v-parity ({n},{r}): coefficient {x}"),
                    Location::q(q).with_v(s),
                ));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q0_closed_form_matches_the_y_series() {
        // For r = 0 the q^0 coefficient is sum_{p>=n} C(p,n) y^p; substituting
        // term by term diverges, so compare (1-y)^{n+1} times it instead:
        // v^2 y^n = i^{n+1} v^{1-n} e^{inv} beta^{n+1} (1 - e^{iv})^{n+1}.
        for n in 1..4 {
            let vorder = 8;
            let f = q0_part(n, 0, vorder + n + 1);
            let mut one_minus_y = QSeries::from_fn(0, vorder + 2 * n + 2, |s| {
                let c = GaussianRational::i_pow(s).scale(&inv_fact(s));
                if s == 0 { GaussianRational::zero() } else { c.neg() }
            });
            let base = one_minus_y.clone();
            for _ in 0..n {
                one_minus_y = one_minus_y.mul(&base);
            }
            let lhs = f.mul(&one_minus_y);
            let rhs = exp_icv(n, vorder).shift(2);
            assert!(lhs.truncate(vorder).agrees_with(&rhs.truncate(vorder)), "n={n}");
        }
    }

    #[test]
    fn mpt_identity() {
        mpt_check(6, 6).unwrap();
    }

    #[test]
    fn log_phi_sigma() {
        logphi_sigma_check(6, 8).unwrap();
    }

    #[test]
    fn duality_and_parity() {
        check_v_duality(2, 0, 5, 6).unwrap();
        check_v_parity(2, 1, 5, 6).unwrap();
        check_v_parity(1, 0, 5, 6).unwrap();
        assert!(check_v_parity(2, 0, 5, 6).is_err());
    }
}
