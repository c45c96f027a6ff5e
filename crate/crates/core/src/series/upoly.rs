use super::laurent::{exp_suffix, write_terms, LaurentPoly};
use crate::rings::{Rational, Ring};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use std::fmt;
use std::str::FromStr;

/// Laurent polynomial in `u` with half-integer exponents and integer
/// coefficients. Stored as two integer-exponent parts,
/// `int(u) + u^(1/2)·half(u)`, so the common integral case costs nothing.
/// Exponents in the public API are doubled.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UPoly {
    int: LaurentPoly<BigInt>,
    half: LaurentPoly<BigInt>,
}

impl UPoly {
    pub fn from_laurent(p: LaurentPoly<BigInt>) -> Self {
        UPoly {
            int: p,
            half: LaurentPoly::zero(),
        }
    }

    /// `c·u^(doubled/2)`
    pub fn monomial(doubled: i64, c: BigInt) -> Self {
        if doubled.rem_euclid(2) == 0 {
            UPoly::from_laurent(LaurentPoly::monomial(doubled.div_euclid(2), c))
        } else {
            UPoly {
                int: LaurentPoly::zero(),
                half: LaurentPoly::monomial(doubled.div_euclid(2), c),
            }
        }
    }

    /// `u^a` for integer `a`.
    pub fn u_pow(a: i64) -> Self {
        UPoly::from_laurent(LaurentPoly::x_pow(a))
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(terms: I) -> Self {
        let (mut ints, mut halves) = (Vec::new(), Vec::new());
        for (d, c) in terms {
            if d.rem_euclid(2) == 0 {
                ints.push((d.div_euclid(2), c));
            } else {
                halves.push((d.div_euclid(2), c));
            }
        }
        UPoly {
            int: LaurentPoly::from_terms(ints),
            half: LaurentPoly::from_terms(halves),
        }
    }

    pub fn coeff(&self, doubled: i64) -> BigInt {
        let part = if doubled.rem_euclid(2) == 0 {
            &self.int
        } else {
            &self.half
        };
        part.coeff(doubled.div_euclid(2))
    }

    /// Nonzero terms as `(doubled exponent, coefficient)`, increasing.
    pub fn terms(&self) -> Vec<(i64, BigInt)> {
        let mut out: Vec<(i64, BigInt)> = self
            .int
            .terms()
            .map(|(e, c)| (2 * e, c.clone()))
            .chain(self.half.terms().map(|(e, c)| (2 * e + 1, c.clone())))
            .collect();
        out.sort_by_key(|t| t.0);
        out
    }

    pub fn is_integral(&self) -> bool {
        self.half.is_zero()
    }

    /// The integer-exponent polynomial, when there are no half exponents.
    pub fn as_laurent(&self) -> Option<&LaurentPoly<BigInt>> {
        self.is_integral().then_some(&self.int)
    }

    pub fn min_doubled(&self) -> Option<i64> {
        let a = self.int.min_exp().map(|e| 2 * e);
        let b = self.half.min_exp().map(|e| 2 * e + 1);
        a.into_iter().chain(b).min()
    }

    pub fn max_doubled(&self) -> Option<i64> {
        let a = self.int.max_exp().map(|e| 2 * e);
        let b = self.half.max_exp().map(|e| 2 * e + 1);
        a.into_iter().chain(b).max()
    }

    /// Value at `u = 1`.
    pub fn eval_one(&self) -> Rational {
        Rational::from(self.eval_one_int())
    }

    pub fn eval_one_int(&self) -> BigInt {
        self.int.eval_one() + self.half.eval_one()
    }

    /// `u -> u^-1`
    pub fn reflect(&self) -> Self {
        // u^(e+1/2) -> u^(-e-1/2) = u^((-e-1)+1/2)
        UPoly {
            int: self.int.reflect(),
            half: self.half.reflect().shift(-1),
        }
    }

    /// Multiply by `u^(doubled/2)`.
    pub fn shift_doubled(&self, doubled: i64) -> Self {
        let k = doubled.div_euclid(2);
        if doubled.rem_euclid(2) == 0 {
            UPoly {
                int: self.int.shift(k),
                half: self.half.shift(k),
            }
        } else {
            // u^(1/2)·(A + u^(1/2) B) = u·B + u^(1/2)·A
            UPoly {
                int: self.half.shift(k + 1),
                half: self.int.shift(k),
            }
        }
    }

    pub fn shift(&self, a: i64) -> Self {
        self.shift_doubled(2 * a)
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        UPoly {
            int: self.int.scale(c),
            half: self.half.scale(c),
        }
    }

    /// Exact quotient; `None` if `d` does not divide `self` in the ring of
    /// half-integer Laurent polynomials.
    pub fn div_exact(&self, d: &UPoly) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if d.is_integral() {
            return Some(UPoly {
                int: self.int.div_exact(&d.int)?,
                half: self.half.div_exact(&d.int)?,
            });
        }
        if d.int.is_zero() {
            let inner = UPoly::from_laurent(d.half.clone());
            return self.shift_doubled(-1).div_exact(&inner);
        }
        // mixed divisors never occur here
        None
    }

    /// Quotient by `(u - 1)^m`, `None` on nonzero remainder.
    pub fn exact_div_u_minus_one(&self, m: u32) -> Option<Self> {
        Some(UPoly {
            int: self.int.div_x_minus_one(m)?,
            half: self.half.div_x_minus_one(m)?,
        })
    }
}

/// Product with an `i128` fast path when the coefficients are small enough
/// that no partial sum can overflow.
fn poly_mul(a: &LaurentPoly<BigInt>, b: &LaurentPoly<BigInt>) -> LaurentPoly<BigInt> {
    if a.is_empty() || b.is_empty() {
        return LaurentPoly::zero();
    }
    let (ba, bb) = (a.max_abs_bits(), b.max_abs_bits());
    let len_bits = 64 - (a.len().min(b.len()) as u64).leading_zeros() as u64;
    if ba > 62 || bb > 62 || ba + bb + len_bits > 125 {
        return a.mul(b);
    }
    let xa: Vec<i64> = a.coeffs().iter().map(|c| c.to_i64().unwrap()).collect();
    let xb: Vec<i64> = b.coeffs().iter().map(|c| c.to_i64().unwrap()).collect();
    let mut out = vec![0i128; xa.len() + xb.len() - 1];
    for (i, &x) in xa.iter().enumerate() {
        if x == 0 {
            continue;
        }
        let x = x as i128;
        for (o, &y) in out[i..].iter_mut().zip(xb.iter()) {
            *o += x * y as i128;
        }
    }
    LaurentPoly::from_dense(
        a.min_exp().unwrap() + b.min_exp().unwrap(),
        out.into_iter().map(BigInt::from).collect(),
    )
}

impl Ring for UPoly {
    fn zero() -> Self {
        UPoly {
            int: LaurentPoly::zero(),
            half: LaurentPoly::zero(),
        }
    }
    fn one() -> Self {
        UPoly::from_laurent(LaurentPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.int.is_zero() && self.half.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        UPoly {
            int: self.int.add(&rhs.int),
            half: self.half.add(&rhs.half),
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        UPoly {
            int: self.int.sub(&rhs.int),
            half: self.half.sub(&rhs.half),
        }
    }
    fn neg(&self) -> Self {
        UPoly {
            int: self.int.neg(),
            half: self.half.neg(),
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_integral() && rhs.is_integral() {
            return UPoly::from_laurent(poly_mul(&self.int, &rhs.int));
        }
        // (A + u^(1/2)B)(C + u^(1/2)D) = AC + u·BD + u^(1/2)(AD + BC)
        let int = poly_mul(&self.int, &rhs.int).add(&poly_mul(&self.half, &rhs.half).shift(1));
        let half = poly_mul(&self.int, &rhs.half).add(&poly_mul(&self.half, &rhs.int));
        UPoly { int, half }
    }
    fn from_int(n: &BigInt) -> Self {
        UPoly::from_laurent(LaurentPoly::from_int(n))
    }
    fn try_inverse(&self) -> Option<Self> {
        let t = self.terms();
        if t.len() != 1 {
            return None;
        }
        let (d, c) = &t[0];
        Some(UPoly::monomial(-d, c.try_inverse()?))
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(String, String)> = self
            .terms()
            .into_iter()
            .map(|(d, c)| (c.to_string(), exp_suffix("u", d, true)))
            .collect();
        write_terms(f, &terms)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed u-polynomial {0:?}")]
pub struct ParseUPolyError(pub String);

impl FromStr for UPoly {
    type Err = ParseUPolyError;

    /// Accepts the `Display` form: `3-2u^-1+u^3`, `u^1/2`, `0`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseUPolyError(s.to_string());
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(bad());
        }
        let mut pieces = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for k in 1..bytes.len() {
            if (bytes[k] == b'+' || bytes[k] == b'-') && bytes[k - 1] != b'^' {
                pieces.push(&s[start..k]);
                start = k;
            }
        }
        pieces.push(&s[start..]);
        let mut terms = Vec::new();
        for piece in pieces {
            let (sign, body) = match piece.as_bytes()[0] {
                b'+' => (1, &piece[1..]),
                b'-' => (-1, &piece[1..]),
                _ => (1, piece),
            };
            let (coef, mono) = match body.find('u') {
                None => (body, None),
                Some(k) => (body[..k].trim_end_matches('*'), Some(&body[k + 1..])),
            };
            let c = if coef.is_empty() {
                BigInt::from(1)
            } else {
                BigInt::from_str(coef).map_err(|_| bad())?
            };
            let doubled = match mono {
                None => 0,
                Some("") => 2,
                Some(m) => {
                    let e = m.strip_prefix('^').ok_or_else(bad)?;
                    match e.split_once('/') {
                        None => 2 * e.parse::<i64>().map_err(|_| bad())?,
                        Some((num, "2")) => num.parse::<i64>().map_err(|_| bad())?,
                        Some(_) => return Err(bad()),
                    }
                }
            };
            terms.push((doubled, c * sign));
        }
        Ok(UPoly::from_terms(terms))
    }
}
