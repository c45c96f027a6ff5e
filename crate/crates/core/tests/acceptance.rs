//! One line per acceptance criterion. Criteria whose printed formula does
//! not hold are reported as FAIL together with the exact discrepancy; the
//! run fails only if a result differs from that expectation.

use k3pairs::k3::{
    check_duality, check_ky, check_ky_euler, check_routes, euler_s_series, f_via_matrices, has_nonnegative_coefficients,
    hodge_symmetry_degree, ky_sides, syst_hodge, KyPrefactor,
};
use k3pairs::modularity::{
    check_v_parity, fit_v_coefficient, log_phi_v_coefficients, logphi_sigma_check, mpt_check, psi_kls_u, v_expansion,
    verify_psi_vs_log,
};
use k3pairs::rings::Ring;
use k3pairs::series::{QSeries, UPoly, YPoly};
use k3pairs::theta::{check_psi_phi, compare_kernels, phi_product, Monomial};
use k3pairs::ucomb::{verify_product, MatrixKind};
use k3pairs::{Error, Result};
use num_bigint::BigInt;
use std::time::{Duration, Instant};

/// Wall-clock budgets. Every comparison is exact, so time is the only tolerance.
const BUDGET_AC1: Duration = Duration::from_secs(30);
const BUDGET_AC2: Duration = Duration::from_secs(60);
const BUDGET_AC3: Duration = Duration::from_secs(300);
const BUDGET_AC9: Duration = Duration::from_secs(600);
const NO_BUDGET: Duration = Duration::from_secs(3600);

#[derive(PartialEq, Eq, Debug, Clone, Copy)]
enum Expect {
    Pass,
    /// The identity as printed does not hold; the check must find exactly
    /// the documented discrepancy.
    Deviation,
}

struct Outcome {
    holds: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome { holds: true, detail: detail.into() })
}

fn fail(detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome { holds: false, detail: detail.into() })
}

/// Runs `check`; for a `Deviation`, an `Err` means the discrepancy was not
/// the documented one.
fn criterion(id: u32, title: &str, expect: Expect, budget: Duration, check: impl FnOnce() -> Result<Outcome>) -> bool {
    let t = Instant::now();
    let res = check();
    let took = t.elapsed();
    let over = took > budget;
    let (holds, detail) = match &res {
        Ok(o) => (o.holds && !over, o.detail.clone()),
        Err(e) => (false, format!("error: {e}")),
    };
    let verdict = if holds { "PASS" } else { "FAIL" };
    let timing = if budget == NO_BUDGET {
        format!("{:.2} s", took.as_secs_f64())
    } else {
        format!("{:.2} s of {} s", took.as_secs_f64(), budget.as_secs())
    };
    let tag = if expect == Expect::Deviation && !holds && res.is_ok() { " [documented deviation]" } else { "" };
    println!("AC{id:<2} {verdict}{tag}  {title}: {detail} ({timing})");
    let as_expected = match expect {
        Expect::Pass => holds,
        Expect::Deviation => res.is_ok() && !holds && !over,
    };
    if !as_expected {
        println!("      ^ unexpected result");
    }
    as_expected
}

fn ac1() -> Result<Outcome> {
    verify_product(MatrixKind::A(0), MatrixKind::B, None, 41)?;
    for n in 1..=5 {
        verify_product(MatrixKind::A(n), MatrixKind::B, Some(MatrixKind::P(n)), 41)?;
    }
    pass("A(0)B = I and A(n)B = P(n), n <= 5, indices <= 41")
}

fn ac2() -> Result<Outcome> {
    let pairs = [
        (Monomial::u(1), Monomial::Y),
        (Monomial::u(2), Monomial::uy(1, 1)),
        (Monomial::u(-1), Monomial::uy(2, -1)),
        (Monomial::uy(1, 1), Monomial::uy(-2, 1)),
    ];
    for (x, y) in pairs {
        check_psi_phi(x, y, 20, 20)?;
    }
    pass(format!("{} monomial pairs, qorder 20, ywin 20; q^0 compared after clearing (1-y)", pairs.len()))
}

fn ac3() -> Result<Outcome> {
    for n in 1..=3 {
        for r in 0..=n {
            check_routes(n, r, 10, 8)?;
        }
    }
    pass("closed form = matrices/S = C-table route, n <= 3, all r, (u-1)^{2n-1} divides")
}

/// `F^0_1 (sqrt y - 1/sqrt y)^2 = s(q) prod (1-q^n)^4/((1-yq^n)^2(1-y^{-1}q^n)^2)` at `t = tb = 1`,
/// with `F` assembled from the matrices.
fn ky_euler_from_matrices(qorder: i64, ywin: i64) -> Result<()> {
    let f = f_via_matrices(1, 0, qorder, ywin + 1)?;
    let twist = YPoly::from_terms([(-1, BigInt::from(1)), (0, BigInt::from(-2)), (1, BigInt::from(1))], None);
    let lhs: QSeries<YPoly<BigInt>> = f.map(|p| {
        let e = YPoly::from_terms(p.terms().map(|(k, c)| (k, c.eval_one_int())), None);
        e.mul(&twist).restrict(ywin)
    });
    let s = euler_s_series(qorder).map(|c| YPoly::constant(c.clone()));
    let phi = phi_product(0, 0, qorder + 1).map(|p| YPoly::from_terms(p.terms().map(|(k, c)| (k, c.eval_one_int())), None));
    let rhs = s.mul(&phi).map(|p| p.restrict(ywin));
    match lhs.first_difference(&rhs) {
        None => Ok(()),
        Some(q) => Err(Error::mismatch("Euler specialisation of the rank-one formula", k3pairs::Location::q(q))),
    }
}

fn ac4() -> Result<Outcome> {
    let (qorder, ywin) = (15, 10);
    let s = euler_s_series(3);
    if s.lower() != -1 || s.dense() != [1, 24, 324, 3200].map(BigInt::from) {
        return Err(Error::ValidationFailure(format!("s(q) = {s}")));
    }
    check_ky_euler(qorder, ywin)?;
    ky_euler_from_matrices(qorder, ywin)?;
    check_ky(KyPrefactor::Corrected, qorder, ywin)?;
    let (lhs, rhs) = ky_sides(KyPrefactor::Printed, qorder, ywin)?;
    let Err(printed) = compare_kernels("printed prefactor", &lhs, &rhs, None) else {
        return pass("printed prefactor holds");
    };
    // the documented discrepancy: printed prefactor times u is the one that holds
    let u = YPoly::constant(UPoly::u_pow(1));
    compare_kernels("u times printed prefactor", &lhs.map(|p| p.mul(&u)), &rhs, None)?;
    fail(format!(
        "printed prefactor (1-y)(1-u^-1 y^-1) fails ({printed}); it is off by exactly u^-1. \
         (1-uy)(1-1/y) holds; the u=1 specialisation and s(q) = q^-1(1+24q+324q^2+3200q^3+...) hold"
    ))
}

fn ac5() -> Result<Outcome> {
    for n in 1..=4 {
        for r in 0..=n {
            check_duality(n, r, 8, 8)?;
        }
    }
    pass("F^r_n(q,y) = F^{n-r}_n(q,1/y), n <= 4")
}

fn ac6() -> Result<Outcome> {
    let e = |g, k| syst_hodge(1, 0, g, k).map(|p| p.eval_one_int());
    let (a, b) = (e(0, 1)?, e(1, 1)?);
    if a != BigInt::from(1) || b != BigInt::from(24) {
        return fail(format!("got {a} and {b}"));
    }
    pass("e(Syst^1(0,D_0,1)) = 1, e(Syst^1(0,D_1,1)) = 24")
}

fn ac7() -> Result<Outcome> {
    let (qorder, vorder, tmax) = (10, 7, 3);
    let mut flips = 0;
    for k in 0..=2 {
        for l in 0..=2 {
            verify_psi_vs_log(k, l, qorder, vorder, tmax)?;
            let direct = log_phi_v_coefficients(k, l, qorder, vorder)?;
            for (s, col) in direct.iter().enumerate() {
                let printed = psi_kls_u(k, l, s as i64, qorder).neg();
                if col.agrees_with(&printed) {
                    continue;
                }
                if !col.agrees_with(&printed.neg()) {
                    return Err(Error::ValidationFailure(format!("printed psi_{{{k},{l},{s}}} differs by more than a sign")));
                }
                flips += 1;
            }
        }
    }
    if flips == 0 {
        return pass("printed closed forms hold");
    }
    fail(format!(
        "printed closed forms carry the wrong overall sign ({flips} nonzero (k,l,s) columns, each exactly negated); \
         with the sign corrected, psi and its u-derivatives t <= 3 at u=1 match log Phi for (k,l) in {{0,1,2}}^2, s <= 6"
    ))
}

fn ac8() -> Result<Outcome> {
    mpt_check(12, 10)?;
    logphi_sigma_check(15, 12)?;
    pass("-v^2 g^0_1 = exp(sum v^2g |B_2g|/(g(2g)!) E_2g) to v^9, q^11; log Phi(1,e^iv) = 4 sum (-1)^k v^2k/(2k)! Sigma_2k-1 to v^11, q^14")
}

fn ac9() -> Result<Outcome> {
    let mut fitted = Vec::new();
    for r in 0..=2 {
        for s in (0..=6).step_by(2) {
            let rep = fit_v_coefficient(2, r, s, 12, 21, 31)?;
            fitted.push(format!("(2,{r}) v^{s}: weight {}, {} terms", rep.weight_bound, rep.combination.len()));
        }
    }
    let mut odd_nonzero = Vec::new();
    for r in 0..=2 {
        let f = v_expansion(2, r, 31, 7)?;
        for s in (1..=5).step_by(2) {
            if f.coeff(s).terms().any(|(_, c)| !c.is_zero()) {
                // still in R: the fit must succeed
                fit_v_coefficient(2, r, s, 12, 21, 31)?;
                odd_nonzero.push(format!("(2,{r}) v^{s}"));
            }
        }
    }
    check_v_parity(2, 1, 31, 7)?;
    let even = "all 12 even-s coefficients fit exactly through q^20 and validate through q^30".to_string();
    if odd_nonzero.is_empty() {
        return pass(even);
    }
    if odd_nonzero.iter().any(|s| s.starts_with("(2,1)")) {
        return Err(Error::ValidationFailure("odd coefficient of the self-dual case (2,1)".into()));
    }
    fail(format!(
        "{even}; odd-s coefficients vanish only for (2,1): nonzero at {} (each still fits exactly in R)",
        odd_nonzero.join(", ")
    ))
}

fn ac10() -> Result<Outcome> {
    let mut count = 0;
    for n in 1..=2 {
        for r in 0..=n {
            for g in 0..=6 {
                for k in -4..=4 {
                    let p = syst_hodge(n, r, g, k)?;
                    if !has_nonnegative_coefficients(&p) {
                        return fail(format!("negative coefficient at ({n},{r},{g},{k}): {p}"));
                    }
                    if !p.is_zero() && hodge_symmetry_degree(&p).is_none() {
                        return fail(format!("no symmetric twist at ({n},{r},{g},{k}): {p}"));
                    }
                    count += 1;
                }
            }
        }
    }
    pass(format!("{count} Hodge polynomials, nonnegative integer and symmetric up to a twist"))
}

fn main() {
    let results = [
        criterion(1, "u-combinatorics matrices", Expect::Pass, BUDGET_AC1, ac1),
        criterion(2, "Psi(x,y) = Phi(xy,1/y)", Expect::Pass, BUDGET_AC2, ac2),
        criterion(3, "three routes to G^r_n", Expect::Pass, BUDGET_AC3, ac3),
        criterion(4, "rank-one product formula", Expect::Deviation, NO_BUDGET, ac4),
        criterion(5, "duality", Expect::Pass, NO_BUDGET, ac5),
        criterion(6, "geometric spot checks", Expect::Pass, NO_BUDGET, ac6),
        criterion(7, "psi closed forms vs log Phi", Expect::Deviation, NO_BUDGET, ac7),
        criterion(8, "MPT exp formula and log Phi Sigma formula", Expect::Pass, NO_BUDGET, ac8),
        criterion(9, "v-coefficients of rank two lie in R", Expect::Deviation, BUDGET_AC9, ac9),
        criterion(10, "Hodge positivity and symmetry", Expect::Pass, NO_BUDGET, ac10),
    ];
    let unexpected = results.iter().filter(|ok| !**ok).count();
    println!("acceptance: {} criteria, {unexpected} unexpected", results.len());
    if unexpected > 0 {
        std::process::exit(1);
    }
}
