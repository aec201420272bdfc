//! The trace criterion for inverse stability of `g(X) = X^p - X + xi`.
//!
//! With `Tr(xi) != 0`, define
//!
//! ```text
//! (a_1, c_1, d_1) = (xi, 1, 0),   (a_2, c_2, d_2) = (-1, xi, -1),
//! a_{n+1} = -a_n d_n
//! c_{n+1} = c_n^2 (xi - (d_n/c_n)^p + d_n/c_n)
//! d_{n+1} = -c_n^2                                  (n >= 2)
//! ```
//!
//! Then `g` is inversely stable over `F_q` iff `Tr(a_n / c_n) != 0` for all
//! `n >= 1`. The triple lives in the finite set `F_q^3` and evolves under a
//! fixed map, so from `n = 2` on it is eventually periodic; checking the
//! pre-period and one full period settles every `n`.

use crate::cycle::{brent, Rho};
use crate::error::{Error, Result};
use crate::field::FieldElement;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CriterionState {
    pub n: usize,
    pub a: FieldElement,
    pub c: FieldElement,
    pub d: FieldElement,
}

impl CriterionState {
    /// `a_n c_n^{-1}`.
    pub fn ratio(&self) -> Result<FieldElement> {
        if self.c.is_zero() {
            return Err(Error::CZero { n: self.n });
        }
        Ok(&self.a * &self.c.inv()?)
    }

    fn same_triple(&self, other: &Self) -> bool {
        self.a == other.a && self.c == other.c && self.d == other.d
    }
}

/// States at `n = 1` and `n = 2`.
pub fn init_states(xi: &FieldElement) -> (CriterionState, CriterionState) {
    let k = xi.ctx();
    let s1 = CriterionState {
        n: 1,
        a: xi.clone(),
        c: k.one(),
        d: k.zero(),
    };
    let s2 = CriterionState {
        n: 2,
        a: k.from_int(-1),
        c: xi.clone(),
        d: k.from_int(-1),
    };
    (s1, s2)
}

/// Advance one index. From `n = 1` the seeded state at `n = 2` is returned,
/// since the recurrence only starts at `n = 2`.
pub fn step_state(s: &CriterionState, xi: &FieldElement) -> Result<CriterionState> {
    if s.a.ctx() != xi.ctx() {
        return Err(Error::CtxMismatch);
    }
    if s.n <= 1 {
        return Ok(init_states(xi).1);
    }
    if s.c.is_zero() {
        return Err(Error::CZero { n: s.n });
    }
    let u = &s.c.inv()? * &s.d;
    let c_sq = &s.c * &s.c;
    let c = &c_sq * &(&(xi - &u.frobenius()) + &u);
    Ok(CriterionState {
        n: s.n + 1,
        a: -(&s.a * &s.d),
        c,
        d: -c_sq,
    })
}

/// `Tr_{F_q}(a_n c_n^{-1})`, an element of the prime field.
pub fn trace_indicator(s: &CriterionState) -> Result<FieldElement> {
    Ok(s.ratio()?.abs_trace())
}

/// Pre-period and period of `(a_n, c_n, d_n)_{n >= 2}`. The pre-period
/// counts from `n = 2`, so the cycle occupies indices
/// `2 + mu .. 2 + mu + lambda`.
pub fn detect_cycle(xi: &FieldElement) -> Result<Rho> {
    if xi.abs_trace().is_zero() {
        return Err(Error::IrreducibilityHypothesisViolated);
    }

    #[derive(Clone)]
    struct ByTriple(CriterionState);
    impl PartialEq for ByTriple {
        fn eq(&self, other: &Self) -> bool {
            self.0.same_triple(&other.0)
        }
    }

    let (_, s2) = init_states(xi);
    brent(ByTriple(s2), |s| step_state(&s.0, xi).map(ByTriple))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    Stable,
    Unstable,
    /// The recurrence hit `c_n = 0`, so the criterion could not be evaluated.
    Inapplicable,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Stable => "stable",
            Outcome::Unstable => "unstable",
            Outcome::Inapplicable => "inapplicable",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceRow {
    pub n: usize,
    pub a: FieldElement,
    pub c: FieldElement,
    pub d: FieldElement,
    pub ratio: FieldElement,
    pub trace: FieldElement,
}

impl TraceRow {
    fn from_state(s: &CriterionState) -> Result<Self> {
        let ratio = s.ratio()?;
        Ok(TraceRow {
            n: s.n,
            a: s.a.clone(),
            c: s.c.clone(),
            d: s.d.clone(),
            trace: ratio.abs_trace(),
            ratio,
        })
    }
}

/// Rows `n = 1..=n_max` of the criterion, computed by direct stepping.
pub fn trace_table(xi: &FieldElement, n_max: usize) -> Result<Vec<TraceRow>> {
    let mut rows = Vec::with_capacity(n_max);
    let (mut s, _) = init_states(xi);
    for n in 1..=n_max {
        if n > 1 {
            s = step_state(&s, xi)?;
        }
        rows.push(TraceRow::from_state(&s)?);
    }
    Ok(rows)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityVerdict {
    pub xi: FieldElement,
    pub outcome: Outcome,
    /// Smallest `n` with `Tr(a_n c_n^{-1}) = 0`.
    pub witness_n: Option<usize>,
    /// Rho shape of the state sequence from `n = 2`; `None` when `Tr(xi) = 0`
    /// or the recurrence broke down.
    pub cycle: Option<Rho>,
    /// Rows `1..=mu + lambda + 1`, or just `n = 1` when `Tr(xi) = 0`.
    pub table: Vec<TraceRow>,
}

impl StabilityVerdict {
    pub fn preperiod(&self) -> Option<usize> {
        self.cycle.map(|r| r.preperiod)
    }

    pub fn period(&self) -> Option<usize> {
        self.cycle.map(|r| r.period)
    }

    pub fn is_stable(&self) -> bool {
        self.outcome == Outcome::Stable
    }
}

/// Decide inverse stability of `X^p - X + xi` over the field of `xi`.
///
/// `Tr(xi) = 0` makes `g` itself reducible and yields `Unstable` with
/// witness 1. Otherwise the cycle of the state sequence is found first and
/// the traces over the pre-period plus one period are inspected; the
/// witness is the first zero among them.
pub fn decide_inverse_stability(xi: &FieldElement) -> Result<StabilityVerdict> {
    let k = xi.ctx();
    if xi.abs_trace().is_zero() {
        let row = TraceRow {
            n: 1,
            a: xi.clone(),
            c: k.one(),
            d: k.zero(),
            ratio: xi.clone(),
            trace: xi.abs_trace(),
        };
        return Ok(StabilityVerdict {
            xi: xi.clone(),
            outcome: Outcome::Unstable,
            witness_n: Some(1),
            cycle: None,
            table: vec![row],
        });
    }
    let rho = match detect_cycle(xi) {
        Ok(r) => r,
        Err(Error::CZero { .. }) => {
            return Ok(StabilityVerdict {
                xi: xi.clone(),
                outcome: Outcome::Inapplicable,
                witness_n: None,
                cycle: None,
                table: Vec::new(),
            })
        }
        Err(e) => return Err(e),
    };
    let table = trace_table(xi, rho.preperiod + rho.period + 1)?;
    let witness_n = table.iter().find(|r| r.trace.is_zero()).map(|r| r.n);
    Ok(StabilityVerdict {
        xi: xi.clone(),
        outcome: if witness_n.is_some() {
            Outcome::Unstable
        } else {
            Outcome::Stable
        },
        witness_n,
        cycle: Some(rho),
        table,
    })
}

/// Closed form of `Tr_{K(gamma)/K}((a gamma + b)/(c gamma + d))` for a root
/// `gamma` of the irreducible `X^p - X + xi` over `K`:
///
/// * `c = 0`: `0` for `p >= 3`, `a/d` for `p = 2`;
/// * `c != 0`: `(bc - ad) / (c^2 (xi - (d/c)^p + d/c))`.
pub fn mobius_trace_formula(
    a: &FieldElement,
    b: &FieldElement,
    c: &FieldElement,
    d: &FieldElement,
    xi: &FieldElement,
) -> Result<FieldElement> {
    let k = xi.ctx();
    if [a, b, c, d].iter().any(|v| v.ctx() != k) {
        return Err(Error::CtxMismatch);
    }
    if c.is_zero() && d.is_zero() {
        return Err(Error::BothZero);
    }
    if xi.abs_trace().is_zero() {
        return Err(Error::IrreducibilityHypothesisViolated);
    }
    if c.is_zero() {
        return if k.p() == 2 {
            a.try_div(d)
        } else {
            Ok(k.zero())
        };
    }
    let u = d.try_div(c)?;
    let shift = &(xi - &u.frobenius()) + &u;
    (&(b * c) - &(a * d)).try_div(&(&(c * c) * &shift))
}
