use crate::error::{Error, Result};
use crate::rings::Ring;
use crate::series::{QSeries, TTPoly, UPoly};
use crate::ucomb::{matrix_entry, u_binomial, MatrixKind};
use num_bigint::BigInt;
use std::sync::{Mutex, OnceLock};

/// Rejects `(n, r)` outside `n >= 1`, `0 <= r <= n`.
pub fn check_rank(n: i64, r: i64) -> Result<()> {
    if n < 1 {
        return Err(Error::InvalidArgument(format!(
            "section rank n = {n} must be positive"
        )));
    }
    if r < 0 {
        return Err(Error::InvalidArgument(format!(
            "sheaf rank r = {r} is negative"
        )));
    }
    if r > n {
        return Err(Error::Unsupported(format!(
            "r = {r} > n = {n} needs moduli of negative-rank objects, which are not modelled"
        )));
    }
    Ok(())
}

/// `sum_m e(X^[m]) u^{-m} q^m` for a K3 surface `X`, where `u = t tb`:
/// `prod_n 1 / ((1-u^{-1}q^n)(1-t tb^{-1} q^n)(1-q^n)^20 (1-t^{-1} tb q^n)(1-u q^n))`.
fn hilbert_product(qorder: i64) -> QSeries<TTPoly> {
    let mono = |a, b| TTPoly::monomial(a, b, BigInt::from(1));
    let mut factors = vec![mono(-1, -1), mono(1, -1), mono(-1, 1), mono(1, 1)];
    factors.extend(std::iter::repeat(mono(0, 0)).take(20));
    let mut out = QSeries::constant(TTPoly::one(), qorder);
    for n in 1..qorder {
        for c in &factors {
            out = out.div_one_minus(c, n).expect("finite order");
        }
    }
    out
}

/// `e(X^[m])`, the Hodge polynomial `sum h^{p,q} (-t)^p (-tb)^q` of the
/// Hilbert scheme of `m` points on a K3 surface; zero for `m < 0`.
pub fn hilb_hodge(m: i64) -> TTPoly {
    if m < 0 {
        return TTPoly::zero();
    }
    static CACHE: OnceLock<Mutex<Vec<TTPoly>>> = OnceLock::new();
    let mut cache = CACHE.get_or_init(|| Mutex::new(Vec::new())).lock().unwrap();
    if cache.len() as i64 <= m {
        let order = (m + 1).max(2 * cache.len() as i64).max(16);
        let prod = hilbert_product(order);
        *cache = (0..order).map(|g| prod.coeff(g).shift(g, g)).collect();
    }
    cache[m as usize].clone()
}

/// `S(q) = sum_{g>=0} e(X^[g]) (t tb)^{-g} q^{g-1} + O(q^qorder)`.
pub fn s_series(qorder: i64) -> QSeries<TTPoly> {
    let qorder = qorder.max(-1);
    QSeries::from_fn(-1, qorder, |e| hilb_hodge(e + 1).shift(-(e + 1), -(e + 1)))
}

/// `s(q) = S(q)|_{t = tb = 1} = q^{-1} prod (1-q^n)^{-24}`, computed from
/// the product directly.
pub fn euler_s_series(qorder: i64) -> QSeries<BigInt> {
    let qorder = qorder.max(-1);
    let mut out = QSeries::constant(BigInt::from(1), qorder + 1);
    for n in 1..=qorder {
        for _ in 0..24 {
            out = out
                .div_one_minus(&BigInt::from(1), n)
                .expect("finite order");
        }
    }
    out.shift(-1)
}

fn embed(p: &UPoly) -> TTPoly {
    TTPoly::embed(p).expect("matrix entries have integral u-exponents")
}

/// `M(g)_{ij} = e(M((i-j)/2, D_g, (i+j)/2)) = c(g - r a)`; zero when `i - j`
/// is odd or the rank would be negative.
pub fn m_entry(g: i64, i: i64, j: i64) -> TTPoly {
    if i < j || (i - j) % 2 != 0 {
        return TTPoly::zero();
    }
    let (r, a) = ((i - j) / 2, (i + j) / 2);
    hilb_hodge(g - r * a)
}

/// `e(Syst^n(r, D_g, k + r))`.
///
/// For `k >= 0` this is `sum_{l>=r} P^n_{k+2r, k+2l} c(g - l^2 - l k)`, a
/// finite sum. Negative `k` goes through the duality
/// `Syst^n(r, D, r - k) = Syst^n(n - r, D, n - r + k)` first.
pub fn syst_hodge(n: i64, r: i64, g: i64, k: i64) -> Result<TTPoly> {
    check_rank(n, r)?;
    if k < 0 {
        return syst_hodge(n, n - r, g, -k);
    }
    let mut acc = TTPoly::zero();
    let mut l = r;
    while l * l + l * k <= g {
        let p = matrix_entry(MatrixKind::P(n as u32), k + 2 * r, k + 2 * l)?;
        if !p.is_zero() {
            acc.add_assign(&embed(&p).mul(&hilb_hodge(g - l * l - l * k)));
        }
        l += 1;
    }
    Ok(acc)
}

/// `e(M(l, D_g, k + l)_{k+2l+s})`, the Brill-Noether stratum of sheaves with
/// `k + 2l + s` sections: `[k+2l+2s, s] · M^0(g)_{k+2l+2s, k}` with
/// `M^0(g) = B M(g)`.
pub fn stratum_hodge(l: i64, k: i64, g: i64, s: i64) -> Result<TTPoly> {
    if l < 0 || k < 0 || s < 0 {
        return Err(Error::InvalidArgument(format!(
            "stratum indices l={l}, k={k}, s={s} must be nonnegative"
        )));
    }
    let i = k + 2 * l + 2 * s;
    // (B M)_{i,k} = sum_{m = k + 2 lam, m >= i} B_{i,m} c(g - lam (k + lam))
    let mut m0 = TTPoly::zero();
    let mut lam = l + s;
    while lam * (k + lam) <= g {
        let b = matrix_entry(MatrixKind::B, i, k + 2 * lam)?;
        m0.add_assign(&embed(&b).mul(&m_entry(g, k + 2 * lam, k)));
        lam += 1;
    }
    Ok(embed(&u_binomial(i, s)).mul(&m0))
}

/// The `d` with `h^{p,q} = h^{d-p,d-q}` for every coefficient, if there is
/// one; `None` also for the zero polynomial.
pub fn hodge_symmetry_degree(p: &TTPoly) -> Option<i64> {
    let (amin, amax, bmin, bmax) = p.bounds()?;
    let d = amin + amax;
    if bmin + bmax != d {
        return None;
    }
    p.terms()
        .all(|(&(a, b), c)| p.coeff(d - a, d - b) == *c)
        .then_some(d)
}

/// Nonnegative coefficients (only even total degrees occur for these spaces).
pub fn has_nonnegative_coefficients(p: &TTPoly) -> bool {
    p.terms().all(|(_, c)| c.sign() != num_bigint::Sign::Minus)
}
