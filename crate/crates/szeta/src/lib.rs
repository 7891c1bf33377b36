//! Bandlimited extremal functions for the Poisson kernel and its iterated
//! integrals, numerical checks of the Guinand–Weil explicit formula, and
//! explicit bound envelopes for the argument function `S_{n,α}(t)` of the
//! Riemann zeta-function under RH.

// `!(x > 0.0)` is how parameters reject NaN; tabulated constants keep all
// their published digits.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod error;
pub mod numkit;

pub use error::{Error, Result};

pub mod odd_extremal;
pub mod poisson_extremal;
pub mod zeta_core;
pub mod explicit_formula;
pub mod bounds;
pub mod acceptance;
pub mod cli;

use serde::Serialize;

/// Which member of an extremal pair: the majorant (`Plus`) or minorant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_f64(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}
