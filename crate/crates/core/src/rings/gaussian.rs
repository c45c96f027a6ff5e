use super::{QAlgebra, Rational, Ring};
use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// Element `re + im·i` of Q(i).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational {
            re,
            im: Rational::zero(),
        }
    }

    pub fn i() -> Self {
        GaussianRational {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    /// `i^k` for any integer k.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::one(),
            1 => Self::i(),
            2 => Self::from_i64(-1),
            _ => Self::i().neg(),
        }
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    /// `a·conj(a)`, a nonnegative rational.
    pub fn norm(&self) -> Rational {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn scale(&self, q: &Rational) -> Self {
        GaussianRational {
            re: self.re.mul(q),
            im: self.im.mul(q),
        }
    }
}

impl From<Rational> for GaussianRational {
    fn from(q: Rational) -> Self {
        GaussianRational::real(q)
    }
}

impl Ring for GaussianRational {
    fn zero() -> Self {
        GaussianRational {
            re: Rational::zero(),
            im: Rational::zero(),
        }
    }
    fn one() -> Self {
        GaussianRational {
            re: Rational::one(),
            im: Rational::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        GaussianRational {
            re: self.re.add(&rhs.re),
            im: self.im.add(&rhs.im),
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        GaussianRational {
            re: self.re.sub(&rhs.re),
            im: self.im.sub(&rhs.im),
        }
    }
    fn neg(&self) -> Self {
        GaussianRational {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        GaussianRational {
            re: self.re.mul(&rhs.re).sub(&self.im.mul(&rhs.im)),
            im: self.re.mul(&rhs.im).add(&self.im.mul(&rhs.re)),
        }
    }
    fn from_int(n: &BigInt) -> Self {
        GaussianRational::real(Rational::from_int(n))
    }
    fn try_inverse(&self) -> Option<Self> {
        let n = self.norm().recip()?;
        Some(self.conj().scale(&n))
    }
    fn add_assign(&mut self, rhs: &Self) {
        self.re.add_assign(&rhs.re);
        self.im.add_assign(&rhs.im);
    }
}

impl QAlgebra for GaussianRational {
    fn from_rational(q: &Rational) -> Self {
        GaussianRational::real(q.clone())
    }
    fn div_int(&self, n: i64) -> Self {
        GaussianRational {
            re: self.re.div_int(n),
            im: self.im.div_int(n),
        }
    }
}

/// Always `re±imi`, e.g. `1/2-3/4i`, `0+1i`.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}i", self.re, sign, self.im.abs())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed gaussian rational {0:?}")]
pub struct ParseGaussianError(pub String);

impl FromStr for GaussianRational {
    type Err = ParseGaussianError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseGaussianError(s.to_string());
        let body = s.trim().strip_suffix('i').ok_or_else(bad)?;
        // the separating sign is the last +/- that is not the leading one
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k)
            .last()
            .ok_or_else(bad)?;
        let re: Rational = body[..split].parse().map_err(|_| bad())?;
        let im: Rational = body[split + 1..].parse().map_err(|_| bad())?;
        let im = if &body[split..split + 1] == "-" {
            im.neg()
        } else {
            im
        };
        Ok(GaussianRational { re, im })
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
