use crate::rings::{QAlgebra, Rational, Ring};
use num_bigint::BigInt;
use std::fmt;

/// Dense Laurent polynomial in one variable. Normal form: `coeffs` is empty
/// (zero) or has nonzero first and last entries; `coeffs[k]` multiplies
/// `x^(low + k)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly<C> {
    low: i64,
    coeffs: Vec<C>,
}

impl<C: Ring> LaurentPoly<C> {
    pub fn from_dense(low: i64, coeffs: Vec<C>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.normalize();
        p
    }

    pub fn monomial(exp: i64, c: C) -> Self {
        Self::from_dense(exp, vec![c])
    }

    pub fn x_pow(exp: i64) -> Self {
        Self::monomial(exp, C::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(terms: I) -> Self {
        let terms: Vec<(i64, C)> = terms.into_iter().collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![C::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize].add_assign(&c);
        }
        Self::from_dense(lo, coeffs)
    }

    fn normalize(&mut self) {
        let trail = self.coeffs.iter().rev().take_while(|c| c.is_zero()).count();
        self.coeffs.truncate(self.coeffs.len() - trail);
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn coeff(&self, exp: i64) -> C {
        self.get(exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn get(&self, exp: i64) -> Option<&C> {
        let k = exp - self.low;
        if k < 0 {
            return None;
        }
        self.coeffs.get(k as usize)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Least exponent with nonzero coefficient.
    pub fn min_exp(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.low)
    }

    pub fn max_exp(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        let low = self.low;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (low + k as i64, c))
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        LaurentPoly {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_dense(self.low, self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// `x -> x^-1`
    pub fn reflect(&self) -> Self {
        match self.max_exp() {
            None => self.clone(),
            Some(hi) => LaurentPoly {
                low: -hi,
                coeffs: self.coeffs.iter().rev().cloned().collect(),
            },
        }
    }

    /// `x -> x^m`, `m > 0`.
    pub fn dilate(&self, m: i64) -> Self {
        assert!(m > 0);
        Self::from_terms(self.terms().map(|(e, c)| (e * m, c.clone())))
    }

    pub fn map<D: Ring, F: Fn(&C) -> D>(&self, f: F) -> LaurentPoly<D> {
        LaurentPoly::from_dense(self.low, self.coeffs.iter().map(f).collect())
    }

    pub fn eval_one(&self) -> C {
        let mut acc = C::zero();
        for c in &self.coeffs {
            acc.add_assign(c);
        }
        acc
    }

    /// Keep only exponents in `lo..=hi`.
    pub fn restrict(&self, lo: i64, hi: i64) -> Self {
        Self::from_terms(
            self.terms()
                .filter(|&(e, _)| lo <= e && e <= hi)
                .map(|(e, c)| (e, c.clone())),
        )
    }

    fn combine(&self, rhs: &Self, sub: bool) -> Self {
        if rhs.coeffs.is_empty() {
            return self.clone();
        }
        if self.coeffs.is_empty() {
            return if sub { rhs.neg_poly() } else { rhs.clone() };
        }
        let lo = self.low.min(rhs.low);
        let hi = self.max_exp().unwrap().max(rhs.max_exp().unwrap());
        let mut out = vec![C::zero(); (hi - lo + 1) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[(self.low - lo) as usize + k] = c.clone();
        }
        for (k, c) in rhs.coeffs.iter().enumerate() {
            let slot = &mut out[(rhs.low - lo) as usize + k];
            if sub {
                slot.sub_assign(c);
            } else {
                slot.add_assign(c);
            }
        }
        Self::from_dense(lo, out)
    }

    fn neg_poly(&self) -> Self {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    fn mul_poly(&self, rhs: &Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j].add_mul(a, b);
            }
        }
        Self::from_dense(self.low + rhs.low, out)
    }

    pub(crate) fn fmt_var(&self, f: &mut fmt::Formatter<'_>, var: &str) -> fmt::Result {
        let terms: Vec<(String, String)> = self
            .terms()
            .map(|(e, c)| (c.to_string(), exp_suffix(var, e, false)))
            .collect();
        write_terms(f, &terms)
    }
}

impl LaurentPoly<BigInt> {
    /// Exact division in `Z[x, x^-1]`; `None` when `d` does not divide.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let dlo = d.min_exp()?;
        let Some(lo) = self.min_exp() else {
            return Some(Self::zero());
        };
        let dl = &d.coeffs[d.coeffs.len() - 1];
        let mut rem: Vec<BigInt> = self.coeffs.clone();
        let dn = d.coeffs.len();
        if rem.len() < dn {
            return None;
        }
        let qlen = rem.len() - dn + 1;
        let mut quot = vec![BigInt::from(0); qlen];
        for k in (0..qlen).rev() {
            let top = &rem[k + dn - 1];
            if num_traits::Zero::is_zero(top) {
                continue;
            }
            let (qk, r) = num_integer::Integer::div_rem(top, dl);
            if !num_traits::Zero::is_zero(&r) {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &qk * dc;
            }
            quot[k] = qk;
        }
        if rem.iter().any(|c| !num_traits::Zero::is_zero(c)) {
            return None;
        }
        Some(Self::from_dense(lo - dlo, quot))
    }

    /// Divide by `(x - 1)^m` exactly, by repeated synthetic division.
    pub fn div_x_minus_one(&self, m: u32) -> Option<Self> {
        let mut cur = self.clone();
        for _ in 0..m {
            if cur.coeffs.is_empty() {
                return Some(cur);
            }
            // c_k = sum_{j>k} a_j; remainder is the full sum
            let n = cur.coeffs.len();
            let mut quot = vec![BigInt::from(0); n - 1];
            let mut acc = BigInt::from(0);
            for k in (1..n).rev() {
                acc += &cur.coeffs[k];
                quot[k - 1] = acc.clone();
            }
            acc += &cur.coeffs[0];
            if !num_traits::Zero::is_zero(&acc) {
                return None;
            }
            cur = Self::from_dense(cur.low, quot);
        }
        Some(cur)
    }

    pub fn max_abs_bits(&self) -> u64 {
        self.coeffs.iter().map(|c| c.bits()).max().unwrap_or(0)
    }
}

impl<C: QAlgebra> LaurentPoly<C> {
    pub fn scale_rational(&self, q: &Rational) -> Self {
        self.scale(&C::from_rational(q))
    }
}

impl<C: Ring> Ring for LaurentPoly<C> {
    fn zero() -> Self {
        LaurentPoly {
            low: 0,
            coeffs: Vec::new(),
        }
    }
    fn one() -> Self {
        LaurentPoly {
            low: 0,
            coeffs: vec![C::one()],
        }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        self.combine(rhs, false)
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.combine(rhs, true)
    }
    fn neg(&self) -> Self {
        self.neg_poly()
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.mul_poly(rhs)
    }
    fn from_int(n: &BigInt) -> Self {
        Self::from_dense(0, vec![C::from_int(n)])
    }
    fn try_inverse(&self) -> Option<Self> {
        if self.coeffs.len() != 1 {
            return None;
        }
        Some(Self::monomial(-self.low, self.coeffs[0].try_inverse()?))
    }
}

impl<C: QAlgebra> QAlgebra for LaurentPoly<C> {
    fn from_rational(q: &Rational) -> Self {
        Self::from_dense(0, vec![C::from_rational(q)])
    }
    fn div_int(&self, n: i64) -> Self {
        Self::from_dense(self.low, self.coeffs.iter().map(|c| c.div_int(n)).collect())
    }
}

impl<C: Ring> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_var(f, "u")
    }
}

/// `x`, `x^3`, `x^-2`, `x^1/2`; empty for exponent 0. `half` means the
/// exponent is stored doubled.
pub(crate) fn exp_suffix(var: &str, e: i64, half: bool) -> String {
    let (num, den) = if half && e % 2 != 0 {
        (e, 2)
    } else if half {
        (e / 2, 1)
    } else {
        (e, 1)
    };
    match (num, den) {
        (0, _) => String::new(),
        (1, 1) => var.to_string(),
        (n, 1) => format!("{var}^{n}"),
        (n, d) => format!("{var}^{n}/{d}"),
    }
}

/// Join `(coefficient, monomial)` pairs into `3-2u^-1+u^3` style text.
/// Coefficients that are themselves sums are parenthesised.
pub(crate) fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[(String, String)]) -> fmt::Result {
    if terms.is_empty() {
        return f.write_str("0");
    }
    for (k, (c, m)) in terms.iter().enumerate() {
        let compound = c.chars().skip(1).any(|ch| ch == '+' || ch == '-') || c.contains('*');
        let body = if m.is_empty() {
            c.clone()
        } else if compound {
            format!("({c})*{m}")
        } else if c == "1" {
            m.clone()
        } else if c == "-1" {
            format!("-{m}")
        } else {
            format!(
                "{c}{sep}{m}",
                sep = if c.contains('/') || c.ends_with('i') {
                    "*"
                } else {
                    ""
                }
            )
        };
        if k > 0 && !body.starts_with('-') {
            f.write_str("+")?;
        }
        f.write_str(&body)?;
    }
    Ok(())
}
