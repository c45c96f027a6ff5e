//! Hodge polynomials of K3 moduli spaces and the higher-rank stable pair
//! generating functions built from them.

mod hodge;
mod mukai;
mod routes;

pub use hodge::{
    check_rank, euler_s_series, has_nonnegative_coefficients, hilb_hodge, hodge_symmetry_degree,
    m_entry, s_series, stratum_hodge, syst_hodge,
};
pub use mukai::{moduli_dim, mukai_pairing, MukaiVector};
pub use routes::{
    check_duality, check_ky, check_ky_euler, check_routes, euler_g, eval_kernel_u_one,
    f_via_matrices, g_closed, g_via_matrices, g_via_modus, ky_sides, modus_numerator, KyPrefactor,
};
