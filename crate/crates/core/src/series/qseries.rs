use crate::error::{Error, Result};
use crate::rings::{QAlgebra, Rational, Ring};
use num_bigint::BigInt;
use std::fmt;

/// Order of a series known exactly (a Laurent polynomial in q).
pub const EXACT: i64 = i64::MAX;

fn add_order(order: i64, k: i64) -> i64 {
    if order == EXACT {
        EXACT
    } else {
        order + k
    }
}

/// Truncated Laurent series `sum_{e >= lower} c_e q^e + O(q^order)`.
///
/// `coeffs[k]` is the coefficient of `q^(lower + k)`; entries past the end of
/// the vector are zero. Every operation records the order up to which its
/// result is valid, so truncation errors surface as a smaller order rather
/// than as wrong coefficients.
#[derive(Clone, Debug)]
pub struct QSeries<C> {
    lower: i64,
    order: i64,
    coeffs: Vec<C>,
}

impl<C: Ring> QSeries<C> {
    pub fn new(lower: i64, order: i64, mut coeffs: Vec<C>) -> Self {
        assert!(lower <= order, "lower {lower} exceeds order {order}");
        if order != EXACT {
            coeffs.truncate((order - lower) as usize);
        }
        let mut s = QSeries {
            lower,
            order,
            coeffs,
        };
        s.trim();
        s
    }

    /// A Laurent polynomial in q, valid to every order.
    pub fn exact(lower: i64, coeffs: Vec<C>) -> Self {
        Self::new(lower, EXACT, coeffs)
    }

    /// `O(q^order)`.
    pub fn zero_to(order: i64) -> Self {
        Self::new(order.min(0), order, Vec::new())
    }

    pub fn constant(c: C, order: i64) -> Self {
        Self::new(0, order.max(0), vec![c])
    }

    pub fn monomial(exp: i64, c: C, order: i64) -> Self {
        if exp >= order {
            return Self::new(exp.min(order), order, Vec::new());
        }
        Self::new(exp, order, vec![c])
    }

    pub fn from_fn<F: FnMut(i64) -> C>(lower: i64, order: i64, mut f: F) -> Self {
        assert!(order != EXACT);
        Self::new(lower, order, (lower..order).map(&mut f).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn lower(&self) -> i64 {
        self.lower
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn is_exact(&self) -> bool {
        self.order == EXACT
    }

    /// Coefficient of `q^e`; panics when `e` is at or beyond the order.
    pub fn coeff(&self, e: i64) -> C {
        assert!(
            e < self.order,
            "q^{e} is beyond the truncation order {}",
            self.order
        );
        self.get(e).cloned().unwrap_or_else(C::zero)
    }

    pub fn get(&self, e: i64) -> Option<&C> {
        if e < self.lower {
            return None;
        }
        self.coeffs.get((e - self.lower) as usize)
    }

    /// Stored coefficients, starting at `lower`.
    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// `(exponent, coefficient)` for every stored nonzero coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        let lower = self.lower;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (lower + k as i64, c))
    }

    /// Dense coefficients for `lower..order`, zero-padded. Exact series stop
    /// at their last stored term.
    pub fn dense(&self) -> Vec<C> {
        let mut out = self.coeffs.clone();
        if self.order != EXACT {
            out.resize((self.order - self.lower) as usize, C::zero());
        }
        out
    }

    pub fn truncate(&self, order: i64) -> Self {
        if order >= self.order {
            return self.clone();
        }
        Self::new(self.lower.min(order), order, self.coeffs.clone())
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        QSeries {
            lower: self.lower + k,
            order: add_order(self.order, k),
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn map<D: Ring, F: FnMut(&C) -> D>(&self, f: F) -> QSeries<D> {
        QSeries::new(self.lower, self.order, self.coeffs.iter().map(f).collect())
    }

    pub fn try_map<D: Ring, F: FnMut(&C) -> Result<D>>(&self, f: F) -> Result<QSeries<D>> {
        let coeffs = self.coeffs.iter().map(f).collect::<Result<Vec<D>>>()?;
        Ok(QSeries::new(self.lower, self.order, coeffs))
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|a| a.mul(c))
    }

    /// First exponent in the common valid range where the two differ.
    pub fn first_difference(&self, rhs: &Self) -> Option<i64> {
        let order = self.order.min(rhs.order);
        let lo = self.lower.min(rhs.lower);
        let hi = if order == EXACT {
            (self.lower + self.coeffs.len() as i64).max(rhs.lower + rhs.coeffs.len() as i64)
        } else {
            order
        };
        let zero = C::zero();
        (lo..hi).find(|&e| self.get(e).unwrap_or(&zero) != rhs.get(e).unwrap_or(&zero))
    }

    /// Equal on the common valid range.
    pub fn agrees_with(&self, rhs: &Self) -> bool {
        self.first_difference(rhs).is_none()
    }

    fn combine(&self, rhs: &Self, sub: bool) -> Self {
        let order = self.order.min(rhs.order);
        let lower = self.lower.min(rhs.lower).min(order);
        let end = |s: &Self| s.lower + s.coeffs.len() as i64;
        let mut hi = end(self).max(end(rhs));
        if order != EXACT {
            hi = hi.min(order);
        }
        let mut out = vec![C::zero(); (hi - lower).max(0) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            let e = self.lower + k as i64;
            if e < hi {
                out[(e - lower) as usize] = c.clone();
            }
        }
        for (k, c) in rhs.coeffs.iter().enumerate() {
            let e = rhs.lower + k as i64;
            if e < hi {
                let slot = &mut out[(e - lower) as usize];
                if sub {
                    slot.sub_assign(c);
                } else {
                    slot.add_assign(c);
                }
            }
        }
        Self::new(lower, order, out)
    }

    /// Product with `lower = f.lower + g.lower` and
    /// `order = min(f.order + g.lower, g.order + f.lower)`.
    pub fn series_mul(&self, rhs: &Self) -> Self {
        let lower = self.lower + rhs.lower;
        let order = add_order(self.order, rhs.lower).min(add_order(rhs.order, self.lower));
        let n = self.coeffs.len() + rhs.coeffs.len();
        let len = if order == EXACT {
            n.saturating_sub(1)
        } else {
            ((order - lower) as usize).min(n)
        };
        let mut out = vec![C::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= len {
                break;
            }
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(len - i) {
                out[i + j].add_mul(a, b);
            }
        }
        Self::new(lower, order, out)
    }

    /// Multiplicative inverse. The first nonzero coefficient must be a unit;
    /// the result has `lower = -lower(f)` and the same relative precision.
    pub fn invert(&self) -> Result<Self> {
        if self.order == EXACT {
            return Err(Error::UnboundedOrder);
        }
        let lead = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(Error::NonUnitLeading)?;
        let inv0 = self.coeffs[lead]
            .try_inverse()
            .ok_or(Error::NonUnitLeading)?;
        let f = &self.coeffs[lead..];
        let l = self.lower + lead as i64;
        let n = (self.order - l) as usize;
        let mut g: Vec<C> = Vec::with_capacity(n);
        for k in 0..n {
            // f_0 g_k = [k == 0] - sum_{j=1..k} f_j g_{k-j}
            let mut acc = if k == 0 { C::one() } else { C::zero() };
            for j in 1..=k.min(f.len().saturating_sub(1)) {
                acc.sub_assign(&f[j].mul(&g[k - j]));
            }
            g.push(acc.mul(&inv0));
        }
        Ok(Self::new(-l, self.order - 2 * l, g))
    }

    /// `self·(1 - c·q^n)`, `n >= 1`.
    pub fn mul_one_minus(&self, c: &C, n: i64) -> Self {
        assert!(n >= 1);
        let shifted = self.shift(n).scale(c);
        let mut out = self.combine(&shifted, true);
        out.order = self.order;
        out.truncate_in_place();
        out
    }

    /// `self / (1 - c·q^n)` expanded as a geometric series, `n >= 1`.
    pub fn div_one_minus(&self, c: &C, n: i64) -> Result<Self> {
        assert!(n >= 1);
        if self.order == EXACT {
            return Err(Error::UnboundedOrder);
        }
        let mut out = self.dense();
        let step = n as usize;
        for k in step..out.len() {
            let prev = out[k - step].mul(c);
            out[k].add_assign(&prev);
        }
        Ok(Self::new(self.lower, self.order, out))
    }

    fn truncate_in_place(&mut self) {
        if self.order != EXACT {
            let keep = (self.order - self.lower).max(0) as usize;
            self.coeffs.truncate(keep);
        }
        self.trim();
    }
}

impl<C: QAlgebra> QSeries<C> {
    /// Formal logarithm; needs constant term 1 and no negative powers.
    pub fn log(&self) -> Result<Self> {
        if self.order == EXACT {
            return Err(Error::UnboundedOrder);
        }
        if (self.lower..0).any(|e| self.get(e).is_some_and(|c| !c.is_zero()))
            || self.order <= 0
            || !self.coeff(0).is_one()
        {
            return Err(Error::BadConstantTerm("log"));
        }
        let n = self.order as usize;
        let f: Vec<C> = (0..self.order)
            .map(|e| self.get(e).cloned().unwrap_or_else(C::zero))
            .collect();
        // k g_k = k f_k - sum_{j=1}^{k-1} j g_j f_{k-j}
        let mut g = vec![C::zero(); n];
        for k in 1..n {
            let mut acc = f[k].scale_int(k as i64);
            for j in 1..k {
                if g[j].is_zero() || f[k - j].is_zero() {
                    continue;
                }
                acc.sub_assign(&g[j].mul(&f[k - j]).scale_int(j as i64));
            }
            g[k] = acc.div_int(k as i64);
        }
        Ok(Self::new(0, self.order, g))
    }

    /// Formal exponential; needs no terms at or below `q^0`.
    pub fn exp(&self) -> Result<Self> {
        if self.order == EXACT {
            return Err(Error::UnboundedOrder);
        }
        if (self.lower..=0).any(|e| self.get(e).is_some_and(|c| !c.is_zero())) {
            return Err(Error::BadConstantTerm("exp"));
        }
        if self.order <= 0 {
            return Ok(Self::zero_to(self.order));
        }
        let n = self.order as usize;
        let f: Vec<C> = (0..self.order)
            .map(|e| self.get(e).cloned().unwrap_or_else(C::zero))
            .collect();
        // k g_k = sum_{j=1}^{k} j f_j g_{k-j}
        let mut g = vec![C::zero(); n];
        g[0] = C::one();
        for k in 1..n {
            let mut acc = C::zero();
            for j in 1..=k {
                if f[j].is_zero() || g[k - j].is_zero() {
                    continue;
                }
                acc.add_assign(&f[j].mul(&g[k - j]).scale_int(j as i64));
            }
            g[k] = acc.div_int(k as i64);
        }
        Ok(Self::new(0, self.order, g))
    }
}

impl<C: Ring> PartialEq for QSeries<C> {
    /// Same order and the same coefficients.
    fn eq(&self, rhs: &Self) -> bool {
        self.order == rhs.order && self.agrees_with(rhs)
    }
}

/// Lets series serve as coefficients of other series (the v-expansions).
impl<C: Ring> Ring for QSeries<C> {
    fn zero() -> Self {
        QSeries {
            lower: 0,
            order: EXACT,
            coeffs: Vec::new(),
        }
    }
    fn one() -> Self {
        QSeries {
            lower: 0,
            order: EXACT,
            coeffs: vec![C::one()],
        }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    fn add(&self, rhs: &Self) -> Self {
        self.combine(rhs, false)
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.combine(rhs, true)
    }
    fn neg(&self) -> Self {
        self.map(|c| c.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.series_mul(rhs)
    }
    fn from_int(n: &BigInt) -> Self {
        QSeries::exact(0, vec![C::from_int(n)])
    }
    fn try_inverse(&self) -> Option<Self> {
        self.invert().ok()
    }
}

impl<C: QAlgebra> QAlgebra for QSeries<C> {
    fn from_rational(q: &Rational) -> Self {
        QSeries::exact(0, vec![C::from_rational(q)])
    }
    fn div_int(&self, n: i64) -> Self {
        self.map(|c| c.div_int(n))
    }
}

impl<C: Ring> fmt::Display for QSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(String, String)> = self
            .terms()
            .map(|(e, c)| (c.to_string(), super::laurent::exp_suffix("q", e, false)))
            .collect();
        if terms.is_empty() && self.order != EXACT {
            return write!(f, "O(q^{})", self.order);
        }
        super::laurent::write_terms(f, &terms)?;
        if self.order != EXACT {
            write!(f, "+O(q^{})", self.order)?;
        }
        Ok(())
    }
}
