use super::{QSeries, YPoly};
use crate::rings::{factorial, GaussianRational, Rational, Ring};
use num_bigint::BigInt;

/// Power series in `v` whose coefficients are q-series over Q(i).
pub type VSeries = QSeries<QSeries<GaussianRational>>;

/// Regroup a q-series of y-polynomials as a y-polynomial of q-series.
pub fn transpose<C: Ring>(f: &QSeries<YPoly<C>>) -> YPoly<QSeries<C>> {
    let mut exps: Vec<i64> = f
        .terms()
        .flat_map(|(_, p)| p.terms().map(|(e, _)| e).collect::<Vec<_>>())
        .collect();
    exps.sort_unstable();
    exps.dedup();
    let window = f.terms().filter_map(|(_, p)| p.window()).min();
    YPoly::from_terms(
        exps.into_iter().map(|m| {
            let series = QSeries::new(
                f.lower(),
                f.order(),
                f.dense().iter().map(|p| p.coeff(m)).collect(),
            );
            (m, series)
        }),
        window,
    )
}

/// Substitute `y = e^{iv}` and expand to `O(v^vorder)`:
/// the `v^s` coefficient is `sum_m c_m (i m)^s / s!`.
pub fn substitute_y_exp_iv(f: &YPoly<QSeries<GaussianRational>>, vorder: i64) -> VSeries {
    assert!(
        f.window().is_none(),
        "substitution needs the complete y-polynomial"
    );
    let coeffs = (0..vorder.max(0))
        .map(|s| {
            let scale = GaussianRational::i_pow(s)
                .scale(&Rational::from_bigs(BigInt::from(1), factorial(s as u64)));
            let mut acc: Option<QSeries<GaussianRational>> = None;
            for (m, c) in f.terms() {
                let w = scale.scale(&Rational::from(BigInt::from(m).pow(s as u32)));
                let term = c.scale(&w);
                acc = Some(match acc {
                    None => term,
                    Some(a) => a.add(&term),
                });
            }
            acc.unwrap_or_else(QSeries::zero)
        })
        .collect();
    QSeries::new(0, vorder.max(0), coeffs)
}

/// Multiply a v-series by `v^k`.
pub fn mul_v_pow(f: &VSeries, k: i64) -> VSeries {
    f.shift(k)
}

pub fn rational_to_gaussian(f: &QSeries<Rational>) -> QSeries<GaussianRational> {
    f.map(|c| GaussianRational::real(c.clone()))
}
