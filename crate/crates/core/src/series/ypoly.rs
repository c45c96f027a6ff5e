use super::laurent::{exp_suffix, write_terms};
use crate::rings::{QAlgebra, Rational, Ring};
use num_bigint::BigInt;
use std::collections::BTreeMap;
use std::fmt;

/// Sparse Laurent polynomial in `y` over `C`, optionally truncated to the
/// window `|exp| <= window`.
///
/// Products of windowed values are truncated to the smaller window. That is
/// exact only when the untruncated operands would not have contributed from
/// outside their windows; callers that multiply genuinely infinite y-series
/// compare on a shrunk window (see [`YPoly::restrict`]).
#[derive(Clone, Debug)]
pub struct YPoly<C> {
    terms: BTreeMap<i64, C>,
    window: Option<i64>,
}

impl<C: Ring> YPoly<C> {
    pub fn new(window: Option<i64>) -> Self {
        YPoly {
            terms: BTreeMap::new(),
            window,
        }
    }

    /// Exact (unwindowed) constant.
    pub fn constant(c: C) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(exp: i64, c: C) -> Self {
        let mut p = Self::new(None);
        p.add_term(exp, &c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(terms: I, window: Option<i64>) -> Self {
        let mut p = Self::new(window);
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    pub fn window(&self) -> Option<i64> {
        self.window
    }

    pub fn in_window(&self, exp: i64) -> bool {
        self.window.map_or(true, |w| exp.abs() <= w)
    }

    /// Adds `c·y^exp`, silently dropping terms outside the window.
    pub fn add_term(&mut self, exp: i64, c: &C) {
        if c.is_zero() || !self.in_window(exp) {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(slot) => {
                slot.add_assign(c);
                if slot.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c.clone());
            }
        }
    }

    pub fn coeff(&self, exp: i64) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn get(&self, exp: i64) -> Option<&C> {
        self.terms.get(&exp)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Truncate to `|exp| <= w` (never widens an existing window).
    pub fn restrict(&self, w: i64) -> Self {
        let w = self.window.map_or(w, |old| old.min(w));
        YPoly {
            terms: self
                .terms
                .range(-w..=w)
                .map(|(&e, c)| (e, c.clone()))
                .collect(),
            window: Some(w),
        }
    }

    /// Drop the window marker; the caller asserts the terms are complete.
    pub fn unwindowed(mut self) -> Self {
        self.window = None;
        self
    }

    /// `y -> y^-1`
    pub fn reflect(&self) -> Self {
        YPoly {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
            window: self.window,
        }
    }

    /// Multiply by `y^k`; terms pushed outside the window are dropped.
    pub fn shift(&self, k: i64) -> Self {
        Self::from_terms(
            self.terms.iter().map(|(&e, c)| (e + k, c.clone())),
            self.window,
        )
    }

    pub fn map<D: Ring, F: Fn(i64, &C) -> D>(&self, f: F) -> YPoly<D> {
        YPoly::from_terms(self.terms.iter().map(|(&e, c)| (e, f(e, c))), self.window)
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|_, a| a.mul(c))
    }

    /// Value at `y = 1`.
    pub fn eval_one(&self) -> C {
        let mut acc = C::zero();
        for c in self.terms.values() {
            acc.add_assign(c);
        }
        acc
    }

    fn joint_window(&self, rhs: &Self) -> Option<i64> {
        match (self.window, rhs.window) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }
}

impl<C: Ring> PartialEq for YPoly<C> {
    /// Compares terms only; windows are bookkeeping.
    fn eq(&self, rhs: &Self) -> bool {
        self.terms == rhs.terms
    }
}

impl<C: Ring> Ring for YPoly<C> {
    fn zero() -> Self {
        Self::new(None)
    }
    fn one() -> Self {
        Self::constant(C::one())
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
        out.sub_assign(rhs);
        out
    }
    fn neg(&self) -> Self {
        self.map(|_, c| c.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::new(self.joint_window(rhs));
        for (&a, c) in &self.terms {
            for (&b, d) in &rhs.terms {
                if out.in_window(a + b) {
                    let slot = out.terms.entry(a + b).or_insert_with(C::zero);
                    slot.add_mul(c, d);
                }
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }
    fn from_int(n: &BigInt) -> Self {
        Self::constant(C::from_int(n))
    }
    fn try_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&e, c) = self.terms.iter().next().unwrap();
        let mut out = Self::monomial(-e, c.try_inverse()?);
        out.window = self.window;
        Some(out)
    }
    fn add_assign(&mut self, rhs: &Self) {
        self.window = self.joint_window(rhs);
        if let Some(w) = self.window {
            self.terms.retain(|e, _| e.abs() <= w);
        }
        for (&e, c) in &rhs.terms {
            self.add_term(e, c);
        }
    }
    fn sub_assign(&mut self, rhs: &Self) {
        self.add_assign(&rhs.neg());
    }
}

impl<C: QAlgebra> QAlgebra for YPoly<C> {
    fn from_rational(q: &Rational) -> Self {
        Self::constant(C::from_rational(q))
    }
    fn div_int(&self, n: i64) -> Self {
        self.map(|_, c| c.div_int(n))
    }
}

/// `(1+u)*y^-1+3*y^2` style; coefficients are parenthesised when compound.
impl<C: Ring> fmt::Display for YPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(String, String)> = self
            .terms
            .iter()
            .map(|(&e, c)| (c.to_string(), exp_suffix("y", e, false)))
            .collect();
        write_terms(f, &terms)
    }
}
