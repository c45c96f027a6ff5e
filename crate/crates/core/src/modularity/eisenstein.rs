use crate::rings::{bernoulli, binomial, factorial, secant_number, GaussianRational, QAlgebra, Rational, Ring};
use crate::series::{QSeries, VSeries};
use num_bigint::BigInt;

/// `sigma_w(n) = sum_{d | n} d^w`.
pub fn sigma(w: u32, n: i64) -> BigInt {
    (1..=n).filter(|d| n % d == 0).map(|d| BigInt::from(d).pow(w)).sum()
}

/// `Sigma_w = sum_{n>=1} sigma_w(n) q^n + O(q^qorder)`.
pub fn sigma_series(w: u32, qorder: i64) -> QSeries<BigInt> {
    QSeries::from_fn(0, qorder.max(0), |n| if n == 0 { BigInt::from(0) } else { sigma(w, n) })
}

fn affine_sigma(c: &Rational, w: u32, qorder: i64) -> QSeries<Rational> {
    let s = sigma_series(w, qorder).map(|x| Rational::from(x.clone()).mul(c));
    QSeries::constant(Rational::one(), qorder.max(0)).add(&s)
}

/// `E_{2g} = 1 - (4g / B_{2g}) Sigma_{2g-1}`.
pub fn eisenstein_even(two_g: i64, qorder: i64) -> QSeries<Rational> {
    assert!(two_g >= 2 && two_g % 2 == 0, "even weight >= 2 expected, got {two_g}");
    let g = two_g / 2;
    let c = Rational::from(-4 * g).div(&bernoulli(two_g as usize)).expect("B_2g is nonzero");
    affine_sigma(&c, (two_g - 1) as u32, qorder)
}

/// `E_{2g+1}(q^2) = 1 + (4 (-1)^g / e_{2g}) Sigma_{2g-1}(q)`, the odd-weight
/// series already evaluated at `q^2` so that every exponent is an integer.
pub fn eisenstein_odd_q2(weight: i64, qorder: i64) -> QSeries<Rational> {
    assert!(weight >= 3 && weight % 2 == 1, "odd weight >= 3 expected, got {weight}");
    let g = (weight - 1) / 2;
    let sign = if g % 2 == 0 { 4 } else { -4 };
    let c = Rational::from_bigs(BigInt::from(sign), secant_number(2 * g as usize));
    affine_sigma(&c, (2 * g - 1) as u32, qorder)
}

/// `E_w` for even `w`, `E_w(q^2)` for odd `w`.
pub fn eisenstein(weight: i64, qorder: i64) -> QSeries<Rational> {
    if weight % 2 == 0 {
        eisenstein_even(weight, qorder)
    } else {
        eisenstein_odd_q2(weight, qorder)
    }
}

pub fn generator_name(weight: i64) -> String {
    if weight % 2 == 0 {
        format!("E{weight}")
    } else {
        format!("E{weight}q2")
    }
}

/// A product of generators with its q-expansion.
#[derive(Debug, Clone)]
pub struct BasisMonomial {
    /// `(generator weight, exponent)`, exponents positive, weights ascending.
    pub factors: Vec<(i64, u32)>,
    pub weight: i64,
    pub series: QSeries<Rational>,
}

impl BasisMonomial {
    /// `"E2^2*E3q2"`; the empty product is `"1"`.
    pub fn name(&self) -> String {
        if self.factors.is_empty() {
            return "1".to_string();
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|&(w, e)| if e == 1 { generator_name(w) } else { format!("{}^{e}", generator_name(w)) })
            .collect();
        parts.join("*")
    }
}

/// Every monomial in `E_2, E_3(q^2), E_4, E_5(q^2), ...` of total weight at
/// most `weight_bound`, ordered by weight and then by exponents.
#[derive(Debug, Clone)]
pub struct EisensteinBasis {
    pub weight_bound: i64,
    pub qorder: i64,
    pub monomials: Vec<BasisMonomial>,
}

impl EisensteinBasis {
    pub fn new(weight_bound: i64, qorder: i64) -> Self {
        let gens: Vec<(i64, QSeries<Rational>)> = (2..=weight_bound).map(|w| (w, eisenstein(w, qorder))).collect();
        let mut monomials = Vec::new();
        let one = BasisMonomial { factors: Vec::new(), weight: 0, series: QSeries::constant(Rational::one(), qorder) };
        extend(&gens, 0, one, weight_bound, &mut monomials);
        monomials.sort_by(|a, b| {
            (a.weight, a.factors.iter().map(|f| (-f.0, f.1)).collect::<Vec<_>>())
                .cmp(&(b.weight, b.factors.iter().map(|f| (-f.0, f.1)).collect::<Vec<_>>()))
        });
        EisensteinBasis { weight_bound, qorder, monomials }
    }
}

fn extend(gens: &[(i64, QSeries<Rational>)], from: usize, cur: BasisMonomial, bound: i64, out: &mut Vec<BasisMonomial>) {
    for (i, (w, g)) in gens.iter().enumerate().skip(from) {
        if cur.weight + w > bound {
            break;
        }
        let mut factors = cur.factors.clone();
        match factors.last_mut() {
            Some(last) if last.0 == *w => last.1 += 1,
            _ => factors.push((*w, 1)),
        }
        let next = BasisMonomial { factors, weight: cur.weight + w, series: cur.series.mul(g) };
        extend(gens, i, next, bound, out);
    }
    out.push(cur);
}

/// `B(v) = sum_n (i^n v^n / n!) sum_k (-1)^k B_k B_{n-k} C(n, k)`, the
/// expansion of `v^2 / ((1 - e^{iv})(1 - e^{-iv}))`, as a v-series of
/// constant q-series.
pub fn b_series(vorder: i64) -> VSeries {
    let coeffs = (0..vorder.max(0))
        .map(|n| {
            let mut acc = Rational::zero();
            for k in 0..=n {
                let term = bernoulli(k as usize).mul(&bernoulli((n - k) as usize)).mul(&Rational::from(binomial(n, k as u64)));
                if k % 2 == 0 {
                    acc.add_assign(&term);
                } else {
                    acc.sub_assign(&term);
                }
            }
            let c = GaussianRational::i_pow(n).scale(&acc.div(&Rational::from(factorial(n as u64))).unwrap());
            QSeries::exact(0, vec![c])
        })
        .collect();
    QSeries::new(0, vorder.max(0), coeffs)
}

/// `Sigma_w` over Q(i), the form in which it enters the v-expansions.
pub fn sigma_series_gaussian(w: u32, qorder: i64) -> QSeries<GaussianRational> {
    sigma_series(w, qorder).map(|x| GaussianRational::from_rational(&Rational::from(x.clone())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(f: &QSeries<Rational>) -> Vec<String> {
        f.dense().iter().map(|c| c.to_string()).collect()
    }

    #[test]
    fn divisor_sums() {
        let s = sigma_series(1, 7);
        let want = [0, 1, 3, 4, 7, 6, 12];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(s.coeff(n as i64), BigInt::from(*w));
        }
        assert_eq!(sigma(0, 6), BigInt::from(4));
        for w in 0..6 {
            assert_eq!(sigma(w, 1), BigInt::from(1));
        }
    }

    #[test]
    fn eisenstein_values() {
        assert_eq!(ints(&eisenstein_even(2, 5)), ["1", "-24", "-72", "-96", "-168"]);
        assert_eq!(ints(&eisenstein_even(4, 3)), ["1", "240", "2160"]);
        assert_eq!(ints(&eisenstein_even(6, 2)), ["1", "-504"]);
        assert_eq!(ints(&eisenstein_odd_q2(3, 4)), ["1", "-4", "-12", "-16"]);
        assert_eq!(ints(&eisenstein_odd_q2(5, 3)), ["1", "4/5", "36/5"]);
    }

    #[test]
    fn basis_shape() {
        let b = EisensteinBasis::new(4, 5);
        let names: Vec<String> = b.monomials.iter().map(|m| m.name()).collect();
        assert_eq!(names, ["1", "E2", "E3q2", "E4", "E2^2"]);
        assert_eq!(EisensteinBasis::new(0, 3).monomials.len(), 1);
        let e2sq = &b.monomials[4].series;
        assert!(e2sq.agrees_with(&eisenstein_even(2, 5).mul(&eisenstein_even(2, 5))));
    }

    #[test]
    fn b_series_values() {
        let b = b_series(8);
        assert_eq!(b.coeff(0).coeff(0), GaussianRational::one());
        assert!(b.coeff(1).coeff(0).is_zero());
        assert_eq!(b.coeff(2).coeff(0), GaussianRational::real(Rational::new(1, 12)));
    }
}
