//! The coefficients `psi_{k,l,s}` of `log Phi(u^k, u^l e^{iv}; q) = sum_s psi_{k,l,s} v^s`.

use super::eisenstein::sigma_series_gaussian;
use crate::error::{Error, Location, Result};
use crate::rings::{factorial, GaussianRational, QAlgebra, Rational, Ring};
use crate::series::{LaurentPoly, QSeries, YPoly};
use crate::theta::phi_product;
use num_bigint::BigInt;

type UPolyQi = LaurentPoly<GaussianRational>;

fn divisors(n: i64) -> impl Iterator<Item = i64> {
    (1..=n).filter(move |d| n % d == 0)
}

fn i_over_fact(s: i64) -> GaussianRational {
    GaussianRational::i_pow(s).scale(&Rational::from_bigs(BigInt::from(1), factorial(s as u64)))
}

/// `r^e` for a possibly negative `e`, as a rational.
fn rpow(r: i64, e: i64) -> Rational {
    let p = Rational::from(BigInt::from(r).pow(e.unsigned_abs() as u32));
    if e >= 0 {
        p
    } else {
        p.recip().expect("r >= 1")
    }
}

/// The u-exponents (with signs) inside the divisor sum at `q^n`, per divisor `r`:
/// `(exponent, coefficient, power of r)`.
fn closed_terms(k: i64, l: i64, s: i64, r: i64) -> Vec<(i64, i64)> {
    let sgn = if s % 2 == 0 { 1 } else { -1 };
    if s == 0 {
        vec![(0, -2), (k * r, -1), (-k * r, -1), ((k + l) * r, 1), (-(k + l) * r, 1), (l * r, 1), (-l * r, 1)]
    } else {
        vec![((k + l) * r, 1), (-(k + l) * r, sgn), (l * r, 1), (-l * r, sgn)]
    }
}

/// `psi_{k,l,s}` as a q-series of Laurent polynomials in `u`:
///
/// `psi_{k,l,s} = (i^s/s!) sum_n q^n sum_{r|n} r^{s-1} (u^{(k+l)r} + (-1)^s u^{-(k+l)r} + u^{lr} + (-1)^s u^{-lr})`
/// for `s >= 1`, and
/// `psi_{k,l,0} = sum_n q^n sum_{r|n} (-2 - u^{kr} - u^{-kr} + u^{(k+l)r} + u^{-(k+l)r} + u^{lr} + u^{-lr}) / r`.
pub fn psi_kls_u(k: i64, l: i64, s: i64, qorder: i64) -> QSeries<UPolyQi> {
    let scale = i_over_fact(s);
    QSeries::from_fn(0, qorder.max(0), |n| {
        let mut terms = Vec::new();
        for r in divisors(n) {
            let w = rpow(r, s - 1);
            for (e, c) in closed_terms(k, l, s, r) {
                terms.push((e, scale.scale(&w.mul(&Rational::from(c)))));
            }
        }
        LaurentPoly::from_terms(terms)
    })
}

/// `psi_{k,l,s}` at `u = 1`: zero for `s = 0`, otherwise
/// `(i^s/s!) (2 + 2(-1)^s) Sigma_{s-1}`.
pub fn psi_kls(k: i64, l: i64, s: i64, qorder: i64) -> QSeries<GaussianRational> {
    let _ = (k, l);
    if s == 0 || s % 2 == 1 {
        return QSeries::zero_to(qorder.max(0));
    }
    sigma_series_gaussian((s - 1) as u32, qorder).scale(&i_over_fact(s).scale(&Rational::from(4)))
}

/// `t! C(a, t) = a (a-1) ... (a-t+1)`, the value of `d^t/du^t u^a` at `u = 1`.
fn falling(a: i64, t: i64) -> Rational {
    Rational::from((0..t).fold(BigInt::from(1), |acc, j| acc * (a - j)))
}

/// `d^t/du^t psi_{k,l,s}` at `u = 1`, summed divisor by divisor from the
/// closed form without expanding in `u`.
pub fn psi_kls_derivative(k: i64, l: i64, s: i64, t: i64, qorder: i64) -> QSeries<GaussianRational> {
    let scale = i_over_fact(s);
    QSeries::from_fn(0, qorder.max(0), |n| {
        let mut acc = Rational::zero();
        for r in divisors(n) {
            let w = rpow(r, s - 1);
            for (e, c) in closed_terms(k, l, s, r) {
                acc.add_assign(&w.mul(&falling(e, t)).mul(&Rational::from(c)));
            }
        }
        scale.scale(&acc)
    })
}

/// Value at `u = 1` of the `t`-th derivative of a Laurent polynomial.
pub fn derivative_at_one(p: &UPolyQi, t: i64) -> GaussianRational {
    let mut acc = GaussianRational::zero();
    for (e, c) in p.terms() {
        acc.add_assign(&c.scale(&falling(e, t)));
    }
    acc
}

/// `log Phi(u^k, u^l y; q)` computed by the series logarithm, then
/// `y = e^{iv}` substituted term by term: entry `s` is the `v^s`
/// coefficient for `s < vorder`.
pub fn log_phi_v_coefficients(k: i64, l: i64, qorder: i64, vorder: i64) -> Result<Vec<QSeries<UPolyQi>>> {
    let phi = phi_product(k, l, qorder).try_map(|p| {
        let mut out = YPoly::new(None);
        for (e, c) in p.terms() {
            let lp = c
                .as_laurent()
                .ok_or_else(|| Error::InvalidArgument("half-integral u exponent".into()))?
                .map(|x| Rational::from(x.clone()));
            out.add_term(e, &lp);
        }
        Ok(out)
    })?;
    let log = phi.log()?;
    Ok((0..vorder.max(0))
        .map(|s| {
            let scale = i_over_fact(s);
            log.map(|p| {
                let mut acc = UPolyQi::zero();
                for (m, c) in p.terms() {
                    let w = scale.scale(&Rational::from(BigInt::from(m).pow(s as u32)));
                    acc.add_assign(&c.map(GaussianRational::from_rational).scale(&w));
                }
                acc
            })
        })
        .collect())
}

fn compare<C: Ring + std::fmt::Display>(
    what: &str,
    lhs: &QSeries<C>,
    rhs: &QSeries<C>,
    at: impl Fn(i64) -> Location,
) -> Result<()> {
    match lhs.first_difference(rhs) {
        None => Ok(()),
        Some(q) => Err(Error::mismatch(format!("{what}: {} vs {}", lhs.coeff(q), rhs.coeff(q)), at(q))),
    }
}

/// Compares the logarithm of the product against the closed forms: the full
/// u-dependence for `s < vorder`, the value at `u = 1`, and the derivatives
/// at `u = 1` up to order `tmax`.
pub fn verify_psi_vs_log(k: i64, l: i64, qorder: i64, vorder: i64, tmax: i64) -> Result<()> {
    let direct = log_phi_v_coefficients(k, l, qorder, vorder)?;
    for (s, col) in direct.iter().enumerate() {
        let s = s as i64;
        let closed = psi_kls_u(k, l, s, qorder);
        if let Some(q) = col.first_difference(&closed) {
            let diff = col.coeff(q).sub(&closed.coeff(q));
            let u = diff.min_exp().unwrap_or(0);
            return Err(Error::mismatch(
                format!("psi_{{{k},{l},{s}}} vs log Phi: {} vs {}", col.coeff(q), closed.coeff(q)),
                Location::q(q).with_u(2 * u).with_v(s),
            ));
        }
        let at_one = col.map(|p| p.eval_one());
        compare(
            &format!("psi_{{{k},{l},{s}}} at u=1"),
            &at_one,
            &psi_kls(k, l, s, qorder),
            |q| Location::q(q).with_v(s),
        )?;
        for t in 0..=tmax {
            let d = col.map(|p| derivative_at_one(p, t));
            compare(
                &format!("d^{t}/du^{t} psi_{{{k},{l},{s}}} at u=1"),
                &d,
                &psi_kls_derivative(k, l, s, t, qorder),
                |q| Location::q(q).with_v(s),
            )?;
        }
    }
    Ok(())
}
