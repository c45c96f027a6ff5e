//! Pochhammer products, the theta function, the two sums that realise the
//! theta quotient, and the infinite product that appears in rank one.
//!
//! Everything is a truncated q-series whose coefficients are y-Laurent
//! polynomials over `Z[u^{±1/2}]`.

use crate::error::{Error, Location, Result};
use crate::rings::Ring;
use crate::series::{QSeries, UPoly, YPoly};
use num_bigint::BigInt;

/// `sum_n c_n(y, u) q^n + O(q^qorder)`.
pub type Kernel = QSeries<YPoly<UPoly>>;

/// `u^{u_doubled/2} y^{y_exp}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub u_doubled: i64,
    pub y_exp: i64,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        u_doubled: 0,
        y_exp: 0,
    };
    pub const Y: Monomial = Monomial {
        u_doubled: 0,
        y_exp: 1,
    };

    pub fn new(u_doubled: i64, y_exp: i64) -> Self {
        Monomial { u_doubled, y_exp }
    }

    /// `u^a`.
    pub fn u(a: i64) -> Self {
        Monomial::new(2 * a, 0)
    }

    /// `u^a y^b`.
    pub fn uy(a: i64, b: i64) -> Self {
        Monomial::new(2 * a, b)
    }

    pub fn is_one(&self) -> bool {
        *self == Monomial::ONE
    }

    pub fn mul(self, rhs: Monomial) -> Self {
        Monomial::new(self.u_doubled + rhs.u_doubled, self.y_exp + rhs.y_exp)
    }

    pub fn inv(self) -> Self {
        self.pow(-1)
    }

    pub fn pow(self, k: i64) -> Self {
        Monomial::new(self.u_doubled * k, self.y_exp * k)
    }

    pub fn to_ypoly(self, ywin: Option<i64>) -> YPoly<UPoly> {
        YPoly::from_terms(
            [(self.y_exp, UPoly::monomial(self.u_doubled, BigInt::from(1)))],
            ywin,
        )
    }
}

impl std::fmt::Display for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let u = UPoly::monomial(self.u_doubled, BigInt::from(1));
        match self.y_exp {
            0 => write!(f, "{u}"),
            1 if self.u_doubled == 0 => f.write_str("y"),
            1 => write!(f, "{u}*y"),
            e if self.u_doubled == 0 => write!(f, "y^{e}"),
            e => write!(f, "{u}*y^{e}"),
        }
    }
}

fn one_in(ywin: Option<i64>) -> YPoly<UPoly> {
    Monomial::ONE.to_ypoly(ywin)
}

/// `prod_{n >= q_shift} (1 - a q^n)`; the `n = 0` factor, if present, is the
/// polynomial `1 - a`.
pub fn pochhammer(a: Monomial, q_shift: i64, qorder: i64, ywin: Option<i64>) -> Kernel {
    let one = one_in(ywin);
    let c = a.to_ypoly(ywin);
    let mut out = QSeries::constant(one.clone(), qorder);
    let mut n = q_shift.max(0);
    if n == 0 {
        out = out.scale(&one.sub(&c));
        n = 1;
    }
    while n < qorder {
        out = out.mul_one_minus(&c, n);
        n += 1;
    }
    out
}

/// `Theta(x; q) = (q,q)(x,q)(x^{-1}q,q)`.
pub fn theta(x: Monomial, qorder: i64, ywin: Option<i64>) -> Kernel {
    pochhammer(Monomial::ONE, 1, qorder, ywin)
        .mul(&pochhammer(x, 0, qorder, ywin))
        .mul(&pochhammer(x.inv(), 1, qorder, ywin))
}

/// Largest `p >= 0` with every `|p·slope| <= win`; errors when a slope is
/// zero, since the row would then never leave the window.
fn row_limit(slopes: &[i64], win: i64, what: &str) -> Result<i64> {
    let mut limit = 0;
    for &s in slopes {
        if s == 0 {
            return Err(Error::InvalidArgument(format!(
                "{what}: the q^0 row is unbounded inside the window"
            )));
        }
        limit = limit.max(win / s.abs());
    }
    Ok(limit)
}

struct Acc {
    coeffs: Vec<YPoly<UPoly>>,
    ywin: i64,
    uwin: Option<i64>,
}

impl Acc {
    fn new(qorder: i64, ywin: i64, uwin: Option<i64>) -> Self {
        Acc {
            coeffs: vec![YPoly::new(Some(ywin)); qorder.max(0) as usize],
            ywin,
            uwin,
        }
    }

    fn add(&mut self, qexp: i64, m: Monomial, sign: i64) {
        if m.y_exp.abs() > self.ywin || self.uwin.is_some_and(|w| m.u_doubled.abs() > 2 * w) {
            return;
        }
        self.coeffs[qexp as usize]
            .add_term(m.y_exp, &UPoly::monomial(m.u_doubled, BigInt::from(sign)));
    }

    fn finish(self, qorder: i64) -> Kernel {
        QSeries::new(0, qorder.max(0), self.coeffs)
    }
}

/// Positive divisor pairs `(d, m/d)` of `m >= 1`.
fn divisor_pairs(m: i64) -> impl Iterator<Item = (i64, i64)> {
    (1..=m).filter(move |d| m % d == 0).map(move |d| (d, m / d))
}

/// The bilateral sum `sum_{sign(i)=sign(j)} sign(i) a^i b^j q^{ij}` with
/// `sign(0) = +1`, keeping terms with `|y exponent| <= ywin` and, if given,
/// `|u exponent| <= uwin`.
///
/// At `q^0` the sum is `sum_{j>=0} b^j + sum_{i>0} a^i`, infinite in both
/// directions; it is cut by the windows, and it is an error when neither
/// window bounds it.
pub fn phi_bilateral(
    a: Monomial,
    b: Monomial,
    qorder: i64,
    ywin: i64,
    uwin: Option<i64>,
) -> Result<Kernel> {
    let mut acc = Acc::new(qorder, ywin, uwin);
    if qorder > 0 {
        let reach = |m: Monomial| -> Result<i64> {
            if m.y_exp != 0 {
                return row_limit(&[m.y_exp], ywin, "phi_bilateral");
            }
            match uwin {
                Some(w) => row_limit(&[m.u_doubled], 2 * w, "phi_bilateral"),
                None => row_limit(&[0], 0, "phi_bilateral"),
            }
        };
        for j in 0..=reach(b)? {
            acc.add(0, b.pow(j), 1);
        }
        for i in 1..=reach(a)? {
            acc.add(0, a.pow(i), 1);
        }
    }
    for m in 1..qorder {
        for (i, j) in divisor_pairs(m) {
            acc.add(m, a.pow(i).mul(b.pow(j)), 1);
            acc.add(m, a.pow(-i).mul(b.pow(-j)), -1);
        }
    }
    Ok(acc.finish(qorder))
}

/// `Psi(x, y; q) = sum_{l>=0} sum_{p>=1} (x^p - x^{-l}) y^{p-l} q^{pl}` with
/// `x`, `y` replaced by monomials, cut to `|y exponent| <= ywin`.
pub fn psi(x: Monomial, y: Monomial, qorder: i64, ywin: i64) -> Result<Kernel> {
    let mut acc = Acc::new(qorder, ywin, None);
    if x.is_one() {
        return Ok(acc.finish(qorder));
    }
    if qorder > 0 {
        for p in 1..=row_limit(&[y.y_exp, x.y_exp + y.y_exp], ywin, "psi")? {
            acc.add(0, x.mul(y).pow(p), 1);
            acc.add(0, y.pow(p), -1);
        }
    }
    for m in 1..qorder {
        for (p, l) in divisor_pairs(m) {
            let yy = y.pow(p - l);
            acc.add(m, x.pow(p).mul(yy), 1);
            acc.add(m, x.pow(-l).mul(yy), -1);
        }
    }
    Ok(acc.finish(qorder))
}

/// The product
/// `prod_{n>=1} (1-q^n)^2 (1-u q^n)(1-u^{-1} q^n) / ((1-y q^n)(1-y^{-1} q^n)(1-u y q^n)(1-u^{-1} y^{-1} q^n))`
/// at arbitrary monomials `u`, `y`. Each q-coefficient is a Laurent
/// polynomial in y, so no window is needed.
pub fn phi_product_at(u: Monomial, y: Monomial, qorder: i64) -> Kernel {
    let num = [Monomial::ONE, Monomial::ONE, u, u.inv()].map(|m| m.to_ypoly(None));
    let den = [y, y.inv(), u.mul(y), u.mul(y).inv()].map(|m| m.to_ypoly(None));
    let mut out = QSeries::constant(YPoly::one(), qorder);
    for n in 1..qorder {
        for c in &num {
            out = out.mul_one_minus(c, n);
        }
        for c in &den {
            out = out.div_one_minus(c, n).expect("finite order");
        }
    }
    out
}

/// `Phi(u^k, u^l y; q)` for the product above.
pub fn phi_product(k: i64, l: i64, qorder: i64) -> Kernel {
    phi_product_at(Monomial::u(k), Monomial::uy(l, 1), qorder)
}

/// Restricts every coefficient to `|y exponent| <= w`.
pub fn restrict_y(f: &Kernel, w: i64) -> Kernel {
    f.map(|p| p.restrict(w))
}

/// First coefficient where `lhs` and `rhs` differ, looking at q-exponents
/// below both orders and y-exponents inside `ywin`.
pub fn compare_kernels(what: &str, lhs: &Kernel, rhs: &Kernel, ywin: Option<i64>) -> Result<()> {
    let lo = lhs.lower().min(rhs.lower());
    let hi = lhs.order().min(rhs.order());
    assert!(hi != crate::series::EXACT, "compare needs a finite order");
    for q in lo..hi {
        let (mut a, mut b) = (lhs.coeff(q), rhs.coeff(q));
        if let Some(w) = ywin {
            a = a.restrict(w);
            b = b.restrict(w);
        }
        if a == b {
            continue;
        }
        let diff = a.sub(&b);
        let (y, c) = diff.terms().next().expect("nonzero difference");
        let u = c.terms().first().map(|t| t.0).unwrap_or(0);
        return Err(Error::mismatch(
            format!("{what}: {} vs {}", a.coeff(y), b.coeff(y)),
            Location::q(q).with_y(y).with_u(u),
        ));
    }
    Ok(())
}

/// `Psi(x, y) = Phi(xy, y^{-1})`.
///
/// Above `q^0` both sides are finite and must agree exactly. At `q^0` the two
/// formal expansions are the same rational function expanded in opposite
/// directions: they differ by `sum_{m in Z} y^m` (for the monomial `y`), which
/// `(1 - y)` annihilates. So the `q^0` terms are compared after multiplying by
/// `1 - y`, on a window shrunk by the y-degree of `y`.
pub fn check_psi_phi(x: Monomial, y: Monomial, qorder: i64, ywin: i64) -> Result<()> {
    let lhs = psi(x, y, qorder, ywin)?;
    let rhs = phi_bilateral(x.mul(y), y.inv(), qorder, ywin, None)?;
    let above = |f: &Kernel| QSeries::from_fn(1.min(qorder), qorder, |e| f.coeff(e));
    compare_kernels("Psi = Phi above q^0", &above(&lhs), &above(&rhs), None)?;
    if qorder == 0 {
        return Ok(());
    }
    let f = Monomial::ONE.to_ypoly(None).sub(&y.to_ypoly(None));
    let a = QSeries::constant(lhs.coeff(0).mul(&f), 1);
    let b = QSeries::constant(rhs.coeff(0).mul(&f), 1);
    compare_kernels(
        "(1-y)(Psi - Phi) at q^0",
        &a,
        &b,
        Some(ywin - y.y_exp.abs()),
    )
}

/// `Phi(a, b) Theta(a) Theta(b) = (q;q)^3 Theta(ab)`, the definition of the
/// theta quotient cleared of denominators. The bilateral sum is built on a
/// window wide enough that the comparison on `|y exp| <= ywin` is exact.
pub fn check_theta_quotient(a: Monomial, b: Monomial, qorder: i64, ywin: i64) -> Result<()> {
    let den = theta(a, qorder, None).mul(&theta(b, qorder, None));
    let span = den
        .terms()
        .flat_map(|(_, p)| [p.min_exp(), p.max_exp()])
        .flatten()
        .map(i64::abs)
        .max()
        .unwrap_or(0);
    let phi = phi_bilateral(a, b, qorder, ywin + span, None)?;
    let euler = pochhammer(Monomial::ONE, 1, qorder, None);
    let rhs = euler
        .mul(&euler)
        .mul(&euler)
        .mul(&theta(a.mul(b), qorder, None));
    compare_kernels(
        "Phi Theta(a) Theta(b) = (q;q)^3 Theta(ab)",
        &phi.mul(&den),
        &rhs,
        Some(ywin),
    )
}

/// Cross-multiplied rank-one relation between `Psi(u, y)` and the product:
/// `prefactor · Psi(u, y) = -(u - 1) Phi(u, y)`.
///
/// With `printed = true` the prefactor is `(1 - y)(1 - u^{-1} y^{-1})`; this
/// fails, being off by exactly `u^{-1}`. The prefactor that holds is
/// `(1 - u y)(1 - y^{-1})`.
pub fn check_rank_one(printed: bool, qorder: i64, ywin: i64) -> Result<()> {
    let lin = |m: Monomial| Monomial::ONE.to_ypoly(None).sub(&m.to_ypoly(None));
    let pre = if printed {
        lin(Monomial::Y).mul(&lin(Monomial::uy(-1, -1)))
    } else {
        lin(Monomial::uy(1, 1)).mul(&lin(Monomial::uy(0, -1)))
    };
    let lhs = psi(Monomial::u(1), Monomial::Y, qorder, ywin + 1)?.map(|p| p.mul(&pre));
    let scale = YPoly::constant(UPoly::one().sub(&UPoly::u_pow(1)));
    let rhs = phi_product(1, 0, qorder).map(|p| p.mul(&scale));
    compare_kernels("rank-one product formula", &lhs, &rhs, Some(ywin))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn yp(terms: &[(i64, &str)]) -> YPoly<UPoly> {
        YPoly::from_terms(
            terms.iter().map(|(e, s)| (*e, s.parse::<UPoly>().unwrap())),
            None,
        )
    }

    #[test]
    fn euler_function() {
        let f = pochhammer(Monomial::ONE, 1, 8, None);
        let want = [1, -1, -1, 0, 0, 1, 0, 1];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(
                f.coeff(n as i64),
                YPoly::constant(UPoly::from_int(&BigInt::from(*w))),
                "q^{n}"
            );
        }
        assert_eq!(
            pochhammer(Monomial::Y, 1, 2, None).coeff(1),
            yp(&[(1, "-1")])
        );
        assert_eq!(pochhammer(Monomial::Y, 1, 0, None).order(), 0);
    }

    #[test]
    fn theta_low_orders() {
        let t = theta(Monomial::Y, 6, None);
        assert_eq!(t.coeff(0), yp(&[(0, "1"), (1, "-1")]));
        // -(1-x)(1+x+x^-1) = -x^-1 + x^2
        assert_eq!(t.coeff(1), yp(&[(-1, "-1"), (2, "1")]));
        for n in 0..6 {
            assert!(t.coeff(n).eval_one().is_zero(), "q^{n}");
        }
    }

    #[test]
    fn bilateral_cancels_at_q1() {
        let f = phi_bilateral(Monomial::Y, Monomial::Y.inv(), 4, 5, None).unwrap();
        assert!(f.coeff(1).is_zero());
        // q^0: sum_{j>=0} y^-j + sum_{i>0} y^i, every exponent once
        assert_eq!(
            f.coeff(0),
            yp(&(-5..=5).map(|e| (e, "1")).collect::<Vec<_>>())
        );
        assert!(phi_bilateral(Monomial::u(1), Monomial::u(2), 3, 4, None).is_err());
        assert!(phi_bilateral(Monomial::u(1), Monomial::u(2), 3, 4, Some(6)).is_ok());
    }

    #[test]
    fn psi_low_orders() {
        let x = Monomial::u(1);
        let f = psi(x, Monomial::Y, 3, 4).unwrap();
        assert_eq!(
            f.coeff(0),
            yp(&[(1, "u-1"), (2, "u^2-1"), (3, "u^3-1"), (4, "u^4-1")])
        );
        assert_eq!(f.coeff(1), yp(&[(0, "u-u^-1")]));
        assert!(psi(Monomial::ONE, Monomial::Y, 5, 5)
            .unwrap()
            .terms()
            .next()
            .is_none());
    }

    #[test]
    fn product_first_order() {
        let f = phi_product(0, 0, 3);
        assert_eq!(f.coeff(0), YPoly::one());
        assert_eq!(f.coeff(1), yp(&[(-1, "2"), (0, "-4"), (1, "2")]));
    }

    #[test]
    fn identities() {
        check_psi_phi(Monomial::u(2), Monomial::uy(1, 1), 10, 10).unwrap();
        check_theta_quotient(Monomial::uy(1, 1), Monomial::Y.inv(), 8, 6).unwrap();
        check_rank_one(false, 10, 8).unwrap();
        let err = check_rank_one(true, 10, 8).unwrap_err();
        assert!(matches!(err, Error::Mismatch { ref at, .. } if at.q == Some(0)));
    }
}
