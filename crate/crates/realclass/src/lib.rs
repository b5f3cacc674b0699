//! Construction and mechanical verification of a finite group of order
//! 43008 whose Sylow 2-subgroup is an iterated central extension of a
//! Suzuki 2-group, and which has exactly three real irreducible characters.
//!
//! The pieces:
//! - [`gf`]: GF(8) arithmetic, the trace map, and the map f(a) = a b^4 + a^4 b.
//! - [`skew`]: units of the truncated skew polynomial ring F{X}/(X^n).
//! - [`engine`]: black-box finite-group algorithms over integer element keys.
//! - [`build`]: the subgroup chain X, Y, P, the semidirect product G, and the
//!   X^6 variant, together with the structural verification reports.
//! - [`chars`]: class algebra and the Burnside-Dixon character table, with
//!   exact cyclotomic values and Frobenius-Schur indicators.
//! - [`pcg`]: parser and collector for polycyclic presentations, plus the
//!   fingerprint comparison between the presented group and the construction.
//! - [`report`]: the named verification checks and JSON reporting.

pub mod build;
pub mod chars;
pub mod engine;
pub mod gf;
pub mod pcg;
pub mod report;
pub mod skew;
