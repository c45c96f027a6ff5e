//! Named identity suites, run item by item so a driver can report every
//! outcome and the first failing location.

use crate::error::{Error, Result};
use crate::k3::{check_duality, check_ky, check_ky_euler, check_routes, KyPrefactor};
use crate::modularity::{check_v_duality, fit_v_coefficient, logphi_sigma_check, mpt_check, verify_psi_vs_log};
use crate::theta::{check_psi_phi, check_rank_one, check_theta_quotient, Monomial};
use crate::ucomb::{verify_product, MatrixKind};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Ucomb,
    Theta,
    Routes,
    Duality,
    Modularity,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["ucomb", "theta", "routes", "duality", "modularity", "all"];
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "ucomb" => Suite::Ucomb,
            "theta" => Suite::Theta,
            "routes" => Suite::Routes,
            "duality" => Suite::Duality,
            "modularity" => Suite::Modularity,
            "all" => Suite::All,
            _ => return Err(Error::InvalidArgument(format!("unknown suite {s:?}; expected one of {}", Suite::NAMES.join(", ")))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = [Suite::Ucomb, Suite::Theta, Suite::Routes, Suite::Duality, Suite::Modularity, Suite::All]
            .iter()
            .position(|s| s == self)
            .unwrap();
        f.write_str(Suite::NAMES[i])
    }
}

/// Orders and ranges shared by the suites. `n` is the largest rank checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub n: i64,
    pub cutoff: i64,
    pub qorder: i64,
    pub ywin: i64,
    pub vorder: i64,
    pub weight_ceiling: i64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { n: 3, cutoff: 41, qorder: 10, ywin: 8, vorder: 8, weight_ceiling: 12 }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str, v: i64| Err(Error::InvalidArgument(format!("{what} must be nonnegative, got {v}")));
        if self.qorder < 0 {
            return bad("qorder", self.qorder);
        }
        if self.ywin < 0 {
            return bad("ywin", self.ywin);
        }
        if self.vorder < 0 {
            return bad("vorder", self.vorder);
        }
        if self.cutoff < 0 {
            return bad("cutoff", self.cutoff);
        }
        if self.n < 1 {
            return Err(Error::InvalidArgument(format!("n must be at least 1, got {}", self.n)));
        }
        Ok(())
    }
}

/// One named identity and its outcome.
#[derive(Debug)]
pub struct Outcome {
    pub suite: Suite,
    pub name: String,
    pub result: Result<()>,
}

type Item = (String, Box<dyn Fn() -> Result<()>>);

fn items(suite: Suite, c: SuiteConfig) -> Vec<Item> {
    let mut v: Vec<Item> = Vec::new();
    let mut push = |name: String, f: Box<dyn Fn() -> Result<()>>| v.push((name, f));
    match suite {
        Suite::Ucomb => {
            push(format!("A(0)*B = I, cutoff {}", c.cutoff), Box::new(move || verify_product(MatrixKind::A(0), MatrixKind::B, None, c.cutoff)));
            push(format!("B*A(0) = I, cutoff {}", c.cutoff), Box::new(move || verify_product(MatrixKind::B, MatrixKind::A(0), None, c.cutoff)));
            for n in 1..=5u32 {
                push(
                    format!("A({n})*B = P({n}), cutoff {}", c.cutoff),
                    Box::new(move || verify_product(MatrixKind::A(n), MatrixKind::B, Some(MatrixKind::P(n)), c.cutoff)),
                );
            }
        }
        Suite::Theta => {
            let pairs = [
                (Monomial::u(1), Monomial::Y),
                (Monomial::u(2), Monomial::uy(1, 1)),
                (Monomial::u(-1), Monomial::uy(2, -1)),
                (Monomial::u(-3), Monomial::uy(-1, 1)),
            ];
            for (x, y) in pairs {
                push(
                    format!("Psi(x,y) = Phi(xy,1/y) at x={x}, y={y}"),
                    Box::new(move || check_psi_phi(x, y, c.qorder, c.ywin)),
                );
            }
            for (a, b) in [(Monomial::uy(1, 1), Monomial::Y.inv()), (Monomial::Y, Monomial::uy(1, -2))] {
                push(
                    format!("theta quotient at a={a}, b={b}"),
                    Box::new(move || check_theta_quotient(a, b, c.qorder, c.ywin)),
                );
            }
            push("rank-one product (1-uy)(1-1/y) Psi = -(u-1) Phi".into(), Box::new(move || check_rank_one(false, c.qorder, c.ywin)));
        }
        Suite::Routes => {
            for n in 1..=c.n {
                for r in 0..=n {
                    push(format!("routes agree, (n,r)=({n},{r})"), Box::new(move || check_routes(n, r, c.qorder, c.ywin)));
                }
            }
            push("rank-one formula, corrected prefactor".into(), Box::new(move || check_ky(KyPrefactor::Corrected, c.qorder, c.ywin)));
            push("rank-one formula at u=1".into(), Box::new(move || check_ky_euler(c.qorder, c.ywin)));
        }
        Suite::Duality => {
            for n in 1..=c.n {
                for r in 0..=n {
                    push(format!("duality, (n,r)=({n},{r})"), Box::new(move || check_duality(n, r, c.qorder, c.ywin)));
                }
            }
            for n in 1..=c.n.min(3) {
                for r in 0..=n {
                    push(
                        format!("v-duality, (n,r)=({n},{r})"),
                        Box::new(move || check_v_duality(n, r, c.qorder.max(1), c.vorder)),
                    );
                }
            }
        }
        Suite::Modularity => {
            for k in 0..=2 {
                for l in 0..=2 {
                    push(format!("psi closed form vs log Phi, (k,l)=({k},{l})"), Box::new(move || verify_psi_vs_log(k, l, c.qorder, c.vorder, 3)));
                }
            }
            push("exp(sum E_2g) identity".into(), Box::new(move || mpt_check(c.qorder.max(1), c.vorder)));
            push("log Phi(1, e^{iv}) Sigma identity".into(), Box::new(move || logphi_sigma_check(c.qorder, c.vorder)));
            let (fit_q, test_q) = (2 * c.qorder, 3 * c.qorder);
            for n in 1..=c.n.min(2) {
                for r in 0..=n {
                    for s in (0..c.vorder).step_by(2) {
                        push(
                            format!("v^{s} of (n,r)=({n},{r}) lies in R"),
                            Box::new(move || fit_v_coefficient(n, r, s, c.weight_ceiling, fit_q, test_q).map(|_| ())),
                        );
                    }
                }
            }
        }
        Suite::All => {}
    }
    v
}

/// Runs every identity in `suite` (all suites for [`Suite::All`]), calling
/// `report` after each. Returns the outcomes in order.
pub fn run_suite(suite: Suite, config: SuiteConfig, mut report: impl FnMut(&Outcome)) -> Result<Vec<Outcome>> {
    config.validate()?;
    let suites = match suite {
        Suite::All => vec![Suite::Ucomb, Suite::Theta, Suite::Routes, Suite::Duality, Suite::Modularity],
        s => vec![s],
    };
    let mut out = Vec::new();
    for s in suites {
        for (name, f) in items(s, config) {
            let o = Outcome { suite: s, name, result: f() };
            report(&o);
            out.push(o);
        }
    }
    Ok(out)
}

/// The first failure, if any.
pub fn first_failure(outcomes: &[Outcome]) -> Option<&Outcome> {
    outcomes.iter().find(|o| o.result.is_err())
}
