//! Truncated Laurent-polynomial and Laurent-series arithmetic over the exact
//! rings, generic in the coefficient ring.

mod json;
mod laurent;
mod qseries;
mod ttpoly;
mod upoly;
mod vseries;
mod ypoly;

pub use json::{series_json, SeriesJson};
pub use laurent::LaurentPoly;
pub use qseries::{QSeries, EXACT};
pub use ttpoly::TTPoly;
pub use upoly::{ParseUPolyError, UPoly};
pub use vseries::{mul_v_pow, rational_to_gaussian, substitute_y_exp_iv, transpose, VSeries};
pub use ypoly::YPoly;

/// Free function form of [`QSeries::series_mul`].
pub fn series_mul<C: crate::rings::Ring>(f: &QSeries<C>, g: &QSeries<C>) -> QSeries<C> {
    f.series_mul(g)
}

/// Free function form of [`QSeries::invert`].
pub fn series_invert<C: crate::rings::Ring>(f: &QSeries<C>) -> crate::error::Result<QSeries<C>> {
    f.invert()
}

/// Quotient by `(u - 1)^m`; fails with `NotDivisible` on a nonzero remainder.
pub fn exact_div_u_minus_one(f: &UPoly, m: u32) -> crate::error::Result<UPoly> {
    f.exact_div_u_minus_one(m)
        .ok_or_else(|| crate::error::Error::NotDivisible(format!("{f} by (u-1)^{m}")))
}

pub fn eval_u_one(f: &UPoly) -> crate::rings::Rational {
    f.eval_one()
}
