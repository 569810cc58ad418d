//! Turán extremal values `A(p/q)`, the van der Corput constant `delta(K)`
//! for residue-block frequency sets, explicit extremal polynomials, and an
//! LP discretization oracle that cross-checks all closed forms.

pub mod cli;
pub mod closed_forms;
pub mod cospoly;
pub mod cutoff;
pub mod error;
pub mod extremal;
pub mod json;
pub mod kernels;
mod linalg;
pub mod lp;
pub mod properties;
pub mod support;

pub use closed_forms::{solve_gamma, turan_value, GammaSolution};
pub use cospoly::{eval_cospoly, CosPoly};
pub use cutoff::{make_cutoff, RationalCutoff};
pub use error::{Error, Result};
pub use support::{dilate_support, is_subset, truncate_support, SupportSet};
