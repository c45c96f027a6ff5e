//! Divisor sums, Eisenstein series, the `psi` closed forms, the
//! v-expansion of the generating functions and exact fitting into the
//! algebra `R = Q(i)[E_{2g}(q), E_{2g+1}(q^2)]`.

mod eisenstein;
mod fit;
mod psi;
mod vexp;

pub use eisenstein::{
    b_series, eisenstein, eisenstein_even, eisenstein_odd_q2, generator_name, sigma, sigma_series, sigma_series_gaussian,
    BasisMonomial, EisensteinBasis,
};
pub use fit::{fit_auto, fit_in_r, fit_v_coefficient, Fit, FitReport, Term};
pub use psi::{derivative_at_one, log_phi_v_coefficients, psi_kls, psi_kls_derivative, psi_kls_u, verify_psi_vs_log};
pub use vexp::{check_v_duality, check_v_parity, compare_vseries, logphi_sigma_check, mpt_check, q0_part, v_expansion};
