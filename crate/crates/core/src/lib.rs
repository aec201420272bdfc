//! Inverse stability of Artin–Schreier polynomials `X^p - X + xi` over
//! finite fields.
//!
//! The crate is organised bottom-up:
//!
//! * [`field`] and [`poly`]: exact arithmetic in `F_{p^e}` and one further
//!   extension, polynomials, the Rabin irreducibility test;
//! * [`iteration`]: numerators and denominators of the iterates of
//!   `1/(X^p - X + xi)`;
//! * [`criterion`]: the `(a_n, c_n, d_n)` recurrence, its trace indicator and
//!   a terminating decision procedure built on [`cycle`] detection;
//! * [`predicates`]: irreducibility predicates for `X^p + aX + b` and
//!   `X^4 + aX + b`;
//! * [`oracle`]: brute-force cross-checks of all of the above;
//! * [`report`] and [`encoding`]: text encodings and serializable records.

pub mod criterion;
pub mod cycle;
pub mod encoding;
pub mod error;
pub mod field;
pub mod iteration;
pub mod oracle;
pub mod poly;
pub mod predicates;
pub mod report;

pub use criterion::{
    decide_inverse_stability, detect_cycle, init_states, mobius_trace_formula, step_state,
    trace_indicator, trace_table, CriterionState, Outcome, StabilityVerdict, TraceRow,
};
pub use error::{Error, Result};
pub use field::{FieldCtx, FieldElement};
pub use iteration::{IterateFraction, ProjectivePoint};
pub use poly::Poly;
