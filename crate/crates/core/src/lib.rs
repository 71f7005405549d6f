//! Exact computation of equivariant higher twisted K-theory of SU(2) and SU(3).
//!
//! The pipeline works entirely with characters: an exponential functor enters through
//! its line character F(t) ([`expfunctor`]), the representation rings and their
//! restriction maps live in [`reprings`], and the two groups are handled by [`su2`] and
//! [`su3`]. [`oracle`] re-checks symbolic identities numerically on the maximal torus.

#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod expfunctor;
pub mod groebner;
pub mod laurent;
pub mod oracle;
pub mod reprings;
pub mod su2;
pub mod su3;
pub mod symfunc;
pub mod text;
pub mod unipoly;

use serde::{Deserialize, Serialize};

pub use error::{FunctorError, GroebnerError, LaurentError, ParseError, PipelineError, RingError};
pub use expfunctor::{parse_functor, ExponentialFunctor};
pub use groebner::{Dimension, Ideal, PolyMatrix, Submodule};
pub use laurent::{Coeff, LaurentPoly, Monomial};
pub use oracle::{check_identity, sample_points, Group, OracleReport, TorusPoint};
pub use reprings::{Edge, Localized, Restriction, RingElem, RingTag, WeylElement};
pub use su2::{k_groups_su2, Su2Report};
pub use su3::{k_groups_su3, Su3Options, Su3Report};

/// Whether a check was decided exactly or by the numeric oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CheckKind {
    Symbolic,
    Oracle,
}

/// One verified identity in a report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub kind: CheckKind,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_abs_err: Option<f64>,
}

impl Check {
    pub fn symbolic(name: impl Into<String>, passed: bool) -> Self {
        Check {
            name: name.into(),
            kind: CheckKind::Symbolic,
            passed,
            max_abs_err: None,
        }
    }

    pub fn oracle(name: impl Into<String>, passed: bool, max_abs_err: f64) -> Self {
        Check {
            name: name.into(),
            kind: CheckKind::Oracle,
            passed,
            max_abs_err: Some(max_abs_err),
        }
    }
}
