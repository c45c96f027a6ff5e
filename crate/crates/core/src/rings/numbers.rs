use super::{QAlgebra, Rational, Ring};
use num_bigint::BigInt;
use std::sync::{Mutex, OnceLock};

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * k)
}

/// Generalized binomial `n(n-1)...(n-k+1)/k!`; `n` may be negative.
pub fn binomial(n: i64, k: u64) -> BigInt {
    let mut num = BigInt::from(1);
    for j in 0..k as i64 {
        num *= n - j;
    }
    num / factorial(k)
}

/// Bernoulli numbers from `t/(e^t - 1)`, so `B_1 = -1/2`.
pub fn bernoulli(m: usize) -> Rational {
    static CACHE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    let mut cache = CACHE
        .get_or_init(|| Mutex::new(vec![Rational::one()]))
        .lock()
        .unwrap();
    while cache.len() <= m {
        let n = cache.len();
        // sum_{k<=n} C(n+1,k) B_k = 0
        let mut acc = Rational::zero();
        for (k, b) in cache.iter().enumerate() {
            acc.add_assign(&b.mul(&Rational::from(binomial(n as i64 + 1, k as u64))));
        }
        cache.push(acc.neg().div_int(n as i64 + 1));
    }
    cache[m].clone()
}

/// Secant numbers `e_m` from `1/cos t = sum e_m t^m/m!`; zero for odd `m`.
pub fn secant_number(m: usize) -> BigInt {
    static CACHE: OnceLock<Mutex<Vec<BigInt>>> = OnceLock::new();
    if m % 2 == 1 {
        return BigInt::from(0);
    }
    let mut cache = CACHE
        .get_or_init(|| Mutex::new(vec![BigInt::from(1)]))
        .lock()
        .unwrap();
    // cache[j] holds e_{2j}
    while cache.len() <= m / 2 {
        let n = 2 * cache.len() as i64;
        let mut acc = BigInt::from(0);
        for (j, e) in cache.iter().enumerate() {
            let term = binomial(n, 2 * j as u64) * e;
            if (n / 2 - j as i64) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        cache.push(-acc);
    }
    cache[m / 2].clone()
}
