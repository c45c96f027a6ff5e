use crate::rings::Ring;
use crate::series::{LaurentPoly, QSeries, UPoly};
use num_bigint::BigInt;
use std::sync::{Mutex, OnceLock};

/// `[n] = (u^n - 1)/(u - 1)`; for negative `n` the same quotient,
/// `-(u^n + ... + u^-1)`.
pub fn u_integer(n: i64) -> UPoly {
    if n >= 0 {
        UPoly::from_laurent(LaurentPoly::from_dense(
            0,
            vec![BigInt::from(1); n as usize],
        ))
    } else {
        UPoly::from_laurent(LaurentPoly::from_dense(
            n,
            vec![BigInt::from(-1); (-n) as usize],
        ))
    }
}

/// `[n]! = [1][2]...[n]`, `n >= 0`.
pub fn u_factorial(n: i64) -> UPoly {
    (1..=n).fold(UPoly::one(), |acc, k| acc.mul(&u_integer(k)))
}

/// The u-binomial `[n]!/([k]![n-k]!)`, zero outside `0 <= k <= n`.
///
/// Built row by row from `[n,k] = [n-1,k-1] + u^k [n-1,k]` and cached, so
/// large indices cost additions only.
pub fn u_binomial(n: i64, k: i64) -> UPoly {
    if n < 0 || k < 0 || k > n {
        return UPoly::zero();
    }
    static ROWS: OnceLock<Mutex<Vec<Vec<UPoly>>>> = OnceLock::new();
    let mut rows = ROWS
        .get_or_init(|| Mutex::new(vec![vec![UPoly::one()]]))
        .lock()
        .unwrap();
    while rows.len() <= n as usize {
        let prev = rows.last().unwrap();
        let m = prev.len();
        let mut row = Vec::with_capacity(m + 1);
        row.push(UPoly::one());
        for j in 1..m {
            row.push(prev[j - 1].add(&prev[j].shift(j as i64)));
        }
        row.push(UPoly::one());
        rows.push(row);
    }
    rows[n as usize][k as usize].clone()
}

/// Symmetric u-binomial `u^{-k(n-k)/2}[n,k]`, extended to negative `n` by
/// `sym(-m, k) = (-1)^k sym(m+k-1, k)`.
pub fn sym_u_binomial(n: i64, k: i64) -> UPoly {
    if k < 0 {
        return UPoly::zero();
    }
    if n >= 0 {
        return u_binomial(n, k).shift_doubled(-k * (n - k));
    }
    let p = sym_u_binomial(-n + k - 1, k);
    if k % 2 == 0 {
        p
    } else {
        p.neg()
    }
}

/// `K_n(t,u) = prod_{s=0}^{n-1} (1 + t u^{s-(n-1)/2})` as a series in `t`.
/// For `n >= 0` this is an exact polynomial; for `n < 0` it is
/// `1/K_{-n}` truncated after `t^t_cutoff`.
pub fn k_series(n: i64, t_cutoff: i64) -> QSeries<UPoly> {
    let m = n.abs();
    let mut k = QSeries::exact(0, vec![UPoly::one()]);
    for s in 0..m {
        // doubled exponent of u^{s-(m-1)/2}
        let factor = QSeries::exact(
            0,
            vec![
                UPoly::one(),
                UPoly::monomial(2 * s - (m - 1), BigInt::from(1)),
            ],
        );
        k = k.mul(&factor);
    }
    if n >= 0 {
        return k;
    }
    k.truncate(t_cutoff + 1)
        .invert()
        .expect("constant term 1 is a unit")
}
