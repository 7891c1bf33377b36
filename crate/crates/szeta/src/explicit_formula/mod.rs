//! The Guinand–Weil explicit formula for the extremal kernels, the prime-sum
//! envelopes it produces, the zero-sum representation of `S_{n,α}` and the
//! asymptotic estimates used along the way.

pub mod appendix;
pub mod envelope;
pub mod gw;
pub mod kernel;
pub mod rep;
pub mod zero_sums;

pub use appendix::{appendix_asymptotic, AppendixId, AppendixParams, AsymptoticCheck, Relation};
pub use envelope::{
    poisson_envelope_error_scale, poisson_numerator, prime_sum_envelope_odd, prime_sum_envelope_poisson, OddEnvelope,
};
pub use gw::{gamma_integral, gw_evaluate, gw_evaluate_kernel, prime_sum, prime_support, GwReport};
pub use kernel::{Envelope, Kernel, KernelSpec};
pub use rep::{rep_sum, rep_sum_sensitivity, RepTarget, COVERAGE_WINDOW};
pub use zero_sums::{symmetric_zero_sum, zero_tail_bound, TAIL_SAFETY};
