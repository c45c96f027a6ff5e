//! Exact fitting of q-series into the algebra generated by `E_{2g}(q)` and
//! `E_{2g+1}(q^2)`.

use super::eisenstein::EisensteinBasis;
use super::vexp::v_expansion;
use crate::error::{Error, Result};
use crate::rings::{GaussianRational, Rational, Ring};
use crate::series::QSeries;
use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub monomial: String,
    pub coeff: GaussianRational,
}

/// A combination of basis monomials equal to the target on `q^0..q^{validated_to_qorder-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fit {
    pub weight_bound: i64,
    pub combination: Vec<Term>,
    pub validated_to_qorder: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FitReport {
    pub n: i64,
    pub r: i64,
    pub s: i64,
    pub weight_bound: i64,
    pub combination: Vec<Term>,
    pub validated_to_qorder: i64,
}

/// Indices of a maximal linearly independent subset of `vectors`, taken
/// greedily in order.
fn independent_subset(vectors: &[Vec<Rational>]) -> Vec<usize> {
    // echelon rows keyed by pivot column
    let mut echelon: Vec<(usize, Vec<Rational>)> = Vec::new();
    let mut keep = Vec::new();
    for (idx, v) in vectors.iter().enumerate() {
        let mut v = v.clone();
        for (p, row) in &echelon {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].div(&row[*p]).unwrap();
            for (a, b) in v.iter_mut().zip(row) {
                a.sub_assign(&b.mul(&f));
            }
        }
        if let Some(p) = v.iter().position(|c| !c.is_zero()) {
            echelon.push((p, v));
            keep.push(idx);
        }
    }
    keep
}

fn lcm_denominators(row: &[Rational]) -> BigInt {
    row.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

/// Solves `A x = b` exactly for every right-hand side column, with `A` of
/// full column rank, by fraction-free (Bareiss) elimination on the
/// integer-scaled system. `Ok(None)` when the system is inconsistent.
fn bareiss_solve(a: &[Vec<Rational>], rhs: &[Vec<Rational>]) -> Result<Option<Vec<Vec<Rational>>>> {
    let m = a.len();
    let n = a.first().map_or(0, |r| r.len());
    let k = rhs.first().map_or(0, |r| r.len());
    let mut rows: Vec<Vec<BigInt>> = a
        .iter()
        .zip(rhs)
        .map(|(ar, br)| {
            let full: Vec<Rational> = ar.iter().chain(br).cloned().collect();
            let l = lcm_denominators(&full);
            full.iter().map(|c| c.numer() * (&l / c.denom())).collect()
        })
        .collect();
    let mut prev = BigInt::one();
    for col in 0..n {
        let Some(p) = (col..m).find(|&i| !rows[i][col].is_zero()) else {
            return Err(Error::InvalidArgument(format!("fit basis is rank deficient on the fit window (column {col})")));
        };
        rows.swap(col, p);
        for i in col + 1..m {
            for j in col + 1..n + k {
                let v = &rows[col][col] * &rows[i][j] - &rows[i][col] * &rows[col][j];
                rows[i][j] = v / &prev;
            }
            rows[i][col] = BigInt::zero();
        }
        prev = rows[col][col].clone();
    }
    if rows[n..].iter().any(|r| r[n..].iter().any(|c| !c.is_zero())) {
        return Ok(None);
    }
    let mut sol = vec![vec![Rational::zero(); k]; n];
    for i in (0..n).rev() {
        for c in 0..k {
            let mut acc = Rational::from(rows[i][n + c].clone());
            for j in i + 1..n {
                acc.sub_assign(&Rational::from(rows[i][j].clone()).mul(&sol[j][c]));
            }
            sol[i][c] = acc.div(&Rational::from(rows[i][i].clone())).unwrap();
        }
    }
    Ok(Some(sol))
}

/// Expresses `target` as a Q(i)-combination of the basis monomials of
/// weight at most `weight_bound`, solving on `q^0..q^{fit_qorder-1}` and
/// then checking the residual vanishes on `q^0..q^{test_qorder-1}`.
///
/// Monomials that are linearly dependent on earlier ones over the test
/// window are dropped first, so the reported combination is unique.
pub fn fit_in_r(target: &QSeries<GaussianRational>, weight_bound: i64, fit_qorder: i64, test_qorder: i64) -> Result<Fit> {
    if !(0 < fit_qorder && fit_qorder < test_qorder) || target.order() < test_qorder || target.lower() < 0 {
        return Err(Error::InvalidArgument(format!(
            "need 0 < fit_qorder {fit_qorder} < test_qorder {test_qorder} <= target order {}, no negative q-powers",
            target.order()
        )));
    }
    let basis = EisensteinBasis::new(weight_bound, test_qorder);
    let columns: Vec<Vec<Rational>> = basis.monomials.iter().map(|m| (0..test_qorder).map(|q| m.series.coeff(q)).collect()).collect();
    let keep = independent_subset(&columns);
    if keep.len() as i64 >= fit_qorder {
        return Err(Error::InvalidArgument(format!(
            "weight {weight_bound} basis has dimension {} >= fit window {fit_qorder}",
            keep.len()
        )));
    }
    let a: Vec<Vec<Rational>> = (0..fit_qorder as usize).map(|q| keep.iter().map(|&j| columns[j][q].clone()).collect()).collect();
    let b: Vec<Vec<Rational>> = (0..fit_qorder)
        .map(|q| {
            let t = target.coeff(q);
            vec![t.re, t.im]
        })
        .collect();
    let Some(sol) = bareiss_solve(&a, &b)? else {
        return Err(Error::NoSolution(format!("no combination of weight <= {weight_bound} fits q^0..q^{}", fit_qorder - 1)));
    };
    let coeffs: Vec<GaussianRational> = sol.into_iter().map(|x| GaussianRational::new(x[0].clone(), x[1].clone())).collect();
    let mut residual = target.truncate(test_qorder);
    for (&j, c) in keep.iter().zip(&coeffs) {
        residual = residual.sub(&basis.monomials[j].series.map(|x| GaussianRational::from(x.clone())).scale(c));
    }
    if let Some((q, _)) = residual.terms().find(|(_, c)| !c.is_zero()) {
        return Err(Error::ValidationFailure(format!(
            "weight {weight_bound} fit through q^{} leaves residual at q^{q}",
            fit_qorder - 1
        )));
    }
    let combination = keep
        .iter()
        .zip(coeffs)
        .filter(|(_, c)| !c.is_zero())
        .map(|(&j, coeff)| Term { monomial: basis.monomials[j].name(), coeff })
        .collect();
    Ok(Fit { weight_bound, combination, validated_to_qorder: test_qorder })
}

/// [`fit_in_r`] with the weight bound raised from `start` until a fit
/// validates, the ceiling is passed, or the basis outgrows the fit window.
/// Returns the last error if nothing fits.
pub fn fit_auto(target: &QSeries<GaussianRational>, start: i64, ceiling: i64, fit_qorder: i64, test_qorder: i64) -> Result<Fit> {
    let mut last = Error::NoSolution(format!("weight ceiling {ceiling} is below the starting bound {start}"));
    for w in start.max(0)..=ceiling {
        match fit_in_r(target, w, fit_qorder, test_qorder) {
            Ok(fit) => return Ok(fit),
            Err(e @ (Error::NoSolution(_) | Error::ValidationFailure(_))) => last = e,
            Err(Error::InvalidArgument(msg)) if w > start.max(0) => {
                return Err(match last {
                    Error::ValidationFailure(_) => last,
                    _ => Error::NoSolution(format!("stopped at weight {w}: {msg}")),
                })
            }
            Err(e) => return Err(e),
        }
    }
    Err(last)
}

/// The `v^s` coefficient of `v^2 g^r_n(q, e^{iv})` fitted into the algebra,
/// starting at weight `s + 2`.
pub fn fit_v_coefficient(n: i64, r: i64, s: i64, ceiling: i64, fit_qorder: i64, test_qorder: i64) -> Result<FitReport> {
    let f = v_expansion(n, r, test_qorder, s + 1)?;
    let target = f.get(s).cloned().unwrap_or_else(|| QSeries::zero_to(test_qorder));
    let fit = fit_auto(&target, s + 2, ceiling, fit_qorder, test_qorder).map_err(|e| match e {
        Error::NoSolution(m) => Error::NoSolution(format!("({n},{r}) v^{s}: {m}")),
        Error::ValidationFailure(m) => Error::ValidationFailure(format!("({n},{r}) v^{s}: {m}")),
        e => e,
    })?;
    Ok(FitReport { n, r, s, weight_bound: fit.weight_bound, combination: fit.combination, validated_to_qorder: fit.validated_to_qorder })
}
