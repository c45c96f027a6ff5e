use super::{u_binomial, u_integer};
use crate::error::{Error, Result};
use crate::rings::Ring;
use crate::series::UPoly;
use std::fmt;

/// The infinite upper-triangular matrices indexed by `(k, k + 2l)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    /// `A^n_{k,k+2l} = [k+l, n][k+2l, l]`
    A(u32),
    /// Inverse of `A^0`.
    B,
    /// `P^n = A^n B` in closed form; `P^0` is the identity.
    P(u32),
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixKind::A(n) => write!(f, "A({n})"),
            MatrixKind::B => f.write_str("B"),
            MatrixKind::P(n) => write!(f, "P({n})"),
        }
    }
}

fn exact_quotient(num: &UPoly, den: &UPoly, what: impl FnOnce() -> String) -> Result<UPoly> {
    num.div_exact(den)
        .ok_or_else(|| Error::InternalNonExactDivision(what()))
}

/// Entry `(i, j)`; zero unless `j >= i` and `j - i` is even.
pub fn matrix_entry(kind: MatrixKind, i: i64, j: i64) -> Result<UPoly> {
    if i < 0 || j < 0 {
        return Err(Error::InvalidArgument(format!(
            "{kind} index ({i},{j}) is negative"
        )));
    }
    if j < i || (j - i) % 2 != 0 {
        return Ok(UPoly::zero());
    }
    let (k, l) = (i, (j - i) / 2);
    match kind {
        MatrixKind::A(n) => Ok(u_binomial(k + l, n as i64).mul(&u_binomial(k + 2 * l, l))),
        MatrixKind::B => {
            if l == 0 {
                return Ok(UPoly::one());
            }
            let num = u_integer(k + 2 * l).mul(&u_binomial(k + l, l));
            let q = exact_quotient(&num, &u_integer(k + l), || format!("B({i},{j})"))?;
            let q = q.shift(l * (l - 1) / 2);
            Ok(if l % 2 == 0 { q } else { q.neg() })
        }
        MatrixKind::P(0) => Ok(if l == 0 { UPoly::one() } else { UPoly::zero() }),
        MatrixKind::P(n) => {
            let n = n as i64;
            let num = u_integer(k + 2 * l)
                .mul(&u_binomial(n + l, n))
                .mul(&u_binomial(k + l - 1, n - 1));
            if num.is_zero() {
                return Ok(num);
            }
            let q = exact_quotient(&num, &u_integer(n + l), || format!("P({n})({i},{j})"))?;
            Ok(q.shift(l * l + l * (k - n)))
        }
    }
}

/// Entries `(i, j)` for `0 <= i <= j <= cutoff`, computed once.
pub struct EntryTable {
    rows: Vec<Vec<UPoly>>,
}

impl EntryTable {
    pub fn new(kind: MatrixKind, cutoff: i64) -> Result<Self> {
        let mut rows = Vec::with_capacity(cutoff as usize + 1);
        for i in 0..=cutoff {
            let row = (i..=cutoff)
                .map(|j| matrix_entry(kind, i, j))
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        Ok(EntryTable { rows })
    }

    pub fn get(&self, i: i64, j: i64) -> &UPoly {
        &self.rows[i as usize][(j - i) as usize]
    }

    /// `(L R)_{ij}`; finite because both factors are upper triangular.
    pub fn product_entry(&self, right: &EntryTable, i: i64, j: i64) -> UPoly {
        let mut acc = UPoly::zero();
        let mut m = i;
        while m <= j {
            let a = self.get(i, m);
            let b = right.get(m, j);
            if !a.is_zero() && !b.is_zero() {
                acc.add_assign(&a.mul(b));
            }
            m += 2;
        }
        acc
    }
}

/// Checks `left · right = expected` on the index range `0..=cutoff`;
/// `expected = None` means the identity. Reports the first failing entry.
pub fn verify_product(
    left: MatrixKind,
    right: MatrixKind,
    expected: Option<MatrixKind>,
    cutoff: i64,
) -> Result<()> {
    let l = EntryTable::new(left, cutoff)?;
    let r = EntryTable::new(right, cutoff)?;
    for i in 0..=cutoff {
        for j in (i..=cutoff).step_by(2) {
            let got = l.product_entry(&r, i, j);
            let want = match expected {
                None => {
                    if i == j {
                        UPoly::one()
                    } else {
                        UPoly::zero()
                    }
                }
                Some(kind) => matrix_entry(kind, i, j)?,
            };
            if got != want {
                let rhs = expected.map_or("I".to_string(), |k| k.to_string());
                return Err(Error::mismatch(
                    format!("{left}*{right} = {rhs} at entry ({i},{j}): got {got}, want {want}"),
                    Default::default(),
                ));
            }
        }
    }
    Ok(())
}
