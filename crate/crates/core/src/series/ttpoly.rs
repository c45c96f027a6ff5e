use super::laurent::write_terms;
use super::UPoly;
use crate::rings::{Rational, Ring};
use num_bigint::BigInt;
use std::collections::BTreeMap;
use std::fmt;

/// Laurent polynomial in `t` and `tb` (t-bar) with integer coefficients.
/// Keys are `(exp of t, exp of tb)`; no zero values are stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct TTPoly {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl TTPoly {
    pub fn monomial(a: i64, b: i64, c: BigInt) -> Self {
        Self::from_terms([((a, b), c)])
    }

    pub fn from_terms<I: IntoIterator<Item = ((i64, i64), BigInt)>>(terms: I) -> Self {
        let mut p = TTPoly::default();
        for (k, c) in terms {
            p.add_term(k, &c);
        }
        p
    }

    fn add_term(&mut self, k: (i64, i64), c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(k).or_insert_with(BigInt::zero);
        slot.add_assign(c);
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn coeff(&self, a: i64, b: i64) -> BigInt {
        self.terms
            .get(&(a, b))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &BigInt)> {
        self.terms.iter()
    }

    /// Ring embedding `u -> t·tb`; `None` if `p` has half exponents.
    pub fn embed(p: &UPoly) -> Option<Self> {
        let lp = p.as_laurent()?;
        Some(Self::from_terms(
            lp.terms().map(|(e, c)| ((e, e), c.clone())),
        ))
    }

    /// Inverse of [`TTPoly::embed`] on its image.
    pub fn to_upoly(&self) -> Option<UPoly> {
        if self.terms.keys().any(|(a, b)| a != b) {
            return None;
        }
        Some(UPoly::from_terms(
            self.terms.iter().map(|(&(a, _), c)| (2 * a, c.clone())),
        ))
    }

    /// Multiply by `t^a tb^b`.
    pub fn shift(&self, a: i64, b: i64) -> Self {
        TTPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(x, y), c)| ((x + a, y + b), c.clone()))
                .collect(),
        }
    }

    /// `(t, tb) -> (t^-1, tb^-1)`
    pub fn reflect(&self) -> Self {
        TTPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(x, y), c)| ((-x, -y), c.clone()))
                .collect(),
        }
    }

    pub fn eval_one(&self) -> Rational {
        Rational::from(self.eval_one_int())
    }

    pub fn eval_one_int(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |acc, c| acc + c)
    }

    /// `(min t, max t, min tb, max tb)` exponents.
    pub fn bounds(&self) -> Option<(i64, i64, i64, i64)> {
        let mut it = self.terms.keys();
        let &(a, b) = it.next()?;
        Some(
            self.terms
                .keys()
                .fold((a, a, b, b), |(x0, x1, y0, y1), &(a, b)| {
                    (x0.min(a), x1.max(a), y0.min(b), y1.max(b))
                }),
        )
    }
}

impl Ring for TTPoly {
    fn zero() -> Self {
        TTPoly::default()
    }
    fn one() -> Self {
        TTPoly::monomial(0, 0, BigInt::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
    fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, &c.neg());
        }
        out
    }
    fn neg(&self) -> Self {
        TTPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, c.neg())).collect(),
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        let mut out = TTPoly::default();
        for (&(a, b), c) in &self.terms {
            for (&(x, y), d) in &rhs.terms {
                out.add_term((a + x, b + y), &c.mul(d));
            }
        }
        out
    }
    fn from_int(n: &BigInt) -> Self {
        TTPoly::monomial(0, 0, n.clone())
    }
    fn try_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&(a, b), c) = self.terms.iter().next().unwrap();
        Some(TTPoly::monomial(-a, -b, c.try_inverse()?))
    }
    fn add_assign(&mut self, rhs: &Self) {
        for (&k, c) in &rhs.terms {
            self.add_term(k, c);
        }
    }
}

fn tt_monomial(a: i64, b: i64) -> String {
    let part = |v: &str, e: i64| match e {
        0 => String::new(),
        1 => v.to_string(),
        e => format!("{v}^{e}"),
    };
    match (part("t", a), part("tb", b)) {
        (x, y) if x.is_empty() => y,
        (x, y) if y.is_empty() => x,
        (x, y) => format!("{x}*{y}"),
    }
}

/// `1+t^2+20t*tb+tb^2+t^2*tb^2`, ordered by total degree then `t`-degree
/// descending.
impl fmt::Display for TTPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<&(i64, i64)> = self.terms.keys().collect();
        keys.sort_by_key(|&&(a, b)| (a + b, -a));
        let terms: Vec<(String, String)> = keys
            .into_iter()
            .map(|&(a, b)| (self.terms[&(a, b)].to_string(), tt_monomial(a, b)))
            .collect();
        write_terms(f, &terms)
    }
}
