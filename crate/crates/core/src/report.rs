//! Serializable records for verdicts. Field elements are carried in the
//! comma-separated digit encoding of [`crate::encoding`].

use serde::{Deserialize, Serialize};

use crate::criterion::{Outcome, StabilityVerdict, TraceRow};
use crate::cycle::Rho;
use crate::encoding::{build_field, parse_element};
use crate::error::{Error, Result};
use crate::field::FieldCtx;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldRecord {
    pub p: u64,
    pub e: usize,
    /// Prime-field coefficients of the modulus, constant first; absent for
    /// prime fields.
    pub modulus: Option<String>,
    pub descriptor: String,
}

impl FieldRecord {
    pub fn from_ctx(ctx: &FieldCtx) -> Self {
        let modulus = match ctx.modulus() {
            Some(m) if m.ctx().is_prime_field() => Some(m.to_string().replace(';', ",")),
            _ => None,
        };
        FieldRecord {
            p: ctx.p(),
            e: ctx.abs_degree(),
            modulus,
            descriptor: ctx.descriptor(),
        }
    }

    /// Rebuild the field. Only fields of depth at most one are supported.
    pub fn build(&self) -> Result<FieldCtx> {
        build_field(self.p, self.e, self.modulus.as_deref())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRowRecord {
    pub n: usize,
    pub a: String,
    pub c: String,
    pub d: String,
    pub ratio: String,
    pub trace: String,
}

impl From<&TraceRow> for TraceRowRecord {
    fn from(r: &TraceRow) -> Self {
        TraceRowRecord {
            n: r.n,
            a: r.a.to_string(),
            c: r.c.to_string(),
            d: r.d.to_string(),
            ratio: r.ratio.to_string(),
            trace: r.trace.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub field: FieldRecord,
    pub xi: String,
    pub trace_xi: String,
    pub outcome: String,
    pub witness_n: Option<usize>,
    pub preperiod: Option<usize>,
    pub period: Option<usize>,
    pub state_steps: Option<usize>,
    pub trace_table: Vec<TraceRowRecord>,
}

impl VerdictRecord {
    pub fn from_verdict(v: &StabilityVerdict) -> Self {
        VerdictRecord {
            field: FieldRecord::from_ctx(v.xi.ctx()),
            xi: v.xi.to_string(),
            trace_xi: v.xi.abs_trace().to_string(),
            outcome: v.outcome.as_str().to_string(),
            witness_n: v.witness_n,
            preperiod: v.preperiod(),
            period: v.period(),
            state_steps: v.cycle.map(|r| r.evaluations),
            trace_table: v.table.iter().map(TraceRowRecord::from).collect(),
        }
    }

    /// Parse back into a verdict over the recorded field.
    pub fn to_verdict(&self) -> Result<StabilityVerdict> {
        let ctx = self.field.build()?;
        let fp = ctx.prime_field();
        let outcome = match self.outcome.as_str() {
            "stable" => Outcome::Stable,
            "unstable" => Outcome::Unstable,
            "inapplicable" => Outcome::Inapplicable,
            other => return Err(Error::Parse(format!("unknown outcome `{other}`"))),
        };
        let cycle = match (self.preperiod, self.period, self.state_steps) {
            (Some(preperiod), Some(period), Some(evaluations)) => Some(Rho {
                preperiod,
                period,
                evaluations,
            }),
            (None, None, None) => None,
            _ => return Err(Error::Parse("incomplete cycle description".into())),
        };
        let table = self
            .trace_table
            .iter()
            .map(|r| {
                Ok(TraceRow {
                    n: r.n,
                    a: parse_element(&ctx, &r.a)?,
                    c: parse_element(&ctx, &r.c)?,
                    d: parse_element(&ctx, &r.d)?,
                    ratio: parse_element(&ctx, &r.ratio)?,
                    trace: parse_element(&fp, &r.trace)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(StabilityVerdict {
            xi: parse_element(&ctx, &self.xi)?,
            outcome,
            witness_n: self.witness_n,
            cycle,
            table,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criterion::decide_inverse_stability;

    #[test]
    fn verdicts_round_trip_through_json() {
        for (p, e, m) in [
            (3, 2, Some("2,2,1")),
            (5, 2, Some("2,4,1")),
            (3, 3, None),
            (2, 1, None),
        ] {
            let k = build_field(p, e, m).unwrap();
            for xi in k.elements() {
                let v = decide_inverse_stability(&xi).unwrap();
                let rec = VerdictRecord::from_verdict(&v);
                let json = serde_json::to_string(&rec).unwrap();
                let back: VerdictRecord = serde_json::from_str(&json).unwrap();
                assert_eq!(back, rec);
                assert_eq!(back.to_verdict().unwrap(), v);
            }
        }
    }

    #[test]
    fn field_record_keeps_modulus() {
        let k = build_field(3, 2, Some("2,2,1")).unwrap();
        let r = FieldRecord::from_ctx(&k);
        assert_eq!(r.modulus.as_deref(), Some("2,2,1"));
        assert_eq!(r.build().unwrap(), k);
        let f5 = FieldCtx::prime(5).unwrap();
        assert_eq!(FieldRecord::from_ctx(&f5).modulus, None);
    }
}
