//! Zeta-function machinery: complex evaluation, `S_{n,α}(t)` along vertical
//! lines, the constants `δ_{n,α}`, and zero tables.

pub mod sn;
pub mod zeros;
pub mod zeta;

pub use sn::{delta_const, s0_by_argument, s_n_direct, s_n_direct_tol, SnMethod, SnValue, DEFAULT_SN_TOL};
pub use zeros::{count_zeros, load_zeros, smooth_count, ZeroTable};
pub use zeta::{
    log_zeta_dirichlet, zeta, zeta_logderiv, zeta_logderiv_dirichlet, zeta_logderiv_with_error, zeta_real_positive,
    zeta_with_derivative, ZetaEval, DEFAULT_ZETA_TOL,
};
