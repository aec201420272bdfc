use rayon::prelude::*;
use serde::Serialize;

use invstab::encoding::{build_field, parse_element};
use invstab::iteration::denominator;
use invstab::oracle::{run_suite, EquivalenceReport, Suite, SuiteConfig};
use invstab::report::{FieldRecord, TraceRowRecord, VerdictRecord};
use invstab::{
    decide_inverse_stability, init_states, step_state, trace_table, FieldCtx, FieldElement, Outcome,
};

use crate::args::{FieldArgs, Format, OutputArgs};
use crate::output::{csv, emit, json, note, table};
use crate::CliError;

pub const EXIT_OK: u8 = 0;
pub const EXIT_DISAGREE: u8 = 1;
pub const EXIT_UNSTABLE: u8 = 3;

fn field(args: &FieldArgs) -> Result<FieldCtx, CliError> {
    Ok(build_field(args.p, args.e, args.modulus.as_deref())?)
}

fn element(k: &FieldCtx, s: &str) -> Result<FieldElement, CliError> {
    Ok(parse_element(k, s)?)
}

/// One line of `search`, also the CSV form of `check`.
#[derive(Serialize)]
struct VerdictRow {
    xi: String,
    trace_xi: String,
    outcome: String,
    witness_n: Option<usize>,
    preperiod: Option<usize>,
    period: Option<usize>,
    state_steps: Option<usize>,
}

impl From<&VerdictRecord> for VerdictRow {
    fn from(r: &VerdictRecord) -> Self {
        VerdictRow {
            xi: r.xi.clone(),
            trace_xi: r.trace_xi.clone(),
            outcome: r.outcome.clone(),
            witness_n: r.witness_n,
            preperiod: r.preperiod,
            period: r.period,
            state_steps: r.state_steps,
        }
    }
}

fn opt(x: Option<usize>) -> String {
    x.map_or_else(|| "-".into(), |v| v.to_string())
}

pub fn check(field_args: &FieldArgs, xi: &str, out: &OutputArgs) -> Result<u8, CliError> {
    let k = field(field_args)?;
    let xi = element(&k, xi)?;
    let verdict = decide_inverse_stability(&xi)?;
    let rec = VerdictRecord::from_verdict(&verdict);
    let text = match out.format {
        Format::Json => json(&rec)?,
        Format::Csv => csv([VerdictRow::from(&rec)])?,
        Format::Text => {
            let mut lines = vec![
                format!("field      {}", rec.field.descriptor),
                format!("xi         {}", rec.xi),
                format!("Tr(xi)     {}", rec.trace_xi),
                format!("outcome    {}", rec.outcome),
            ];
            if let Some(n) = rec.witness_n {
                lines.push(format!("witness_n  {n}"));
            }
            if let (Some(mu), Some(lambda)) = (rec.preperiod, rec.period) {
                lines.push(format!("preperiod  {mu}"));
                lines.push(format!("period     {lambda}"));
            }
            lines.join("\n") + "\n"
        }
    };
    emit(out, &text)?;
    Ok(match verdict.outcome {
        Outcome::Stable => EXIT_OK,
        Outcome::Unstable | Outcome::Inapplicable => EXIT_UNSTABLE,
    })
}

#[derive(Serialize)]
struct SearchBody {
    field: FieldRecord,
    stable: usize,
    rows: Vec<VerdictRow>,
}

pub fn search(field_args: &FieldArgs, out: &OutputArgs) -> Result<u8, CliError> {
    let k = field(field_args)?;
    let xis: Vec<FieldElement> = k.elements().collect();
    let records = xis
        .par_iter()
        .map(|xi| decide_inverse_stability(xi).map(|v| VerdictRecord::from_verdict(&v)))
        .collect::<Result<Vec<_>, _>>()?;
    let rows: Vec<VerdictRow> = records.iter().map(VerdictRow::from).collect();
    let stable = rows.iter().filter(|r| r.outcome == "stable").count();
    note(
        out,
        &format!(
            "{}: {stable} of {} seeds stable",
            k.descriptor(),
            rows.len()
        ),
    );
    let text = match out.format {
        Format::Json => json(SearchBody {
            field: FieldRecord::from_ctx(&k),
            stable,
            rows,
        })?,
        Format::Csv => csv(rows)?,
        Format::Text => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.xi.clone(),
                        r.trace_xi.clone(),
                        r.outcome.clone(),
                        opt(r.witness_n),
                        opt(r.preperiod),
                        opt(r.period),
                    ]
                })
                .collect();
            table(
                &["xi", "Tr", "outcome", "witness", "preperiod", "period"],
                &cells,
            )
        }
    };
    emit(out, &text)?;
    Ok(EXIT_OK)
}

/// All traces `Tr(a_m / c_m)` for `m <= n` are nonzero.
fn criterion_holds(xi: &FieldElement, n: usize) -> Result<bool, CliError> {
    let (mut s, _) = init_states(xi);
    while s.n <= n {
        if s.ratio()?.abs_trace().is_zero() {
            return Ok(false);
        }
        s = step_state(&s, xi)?;
    }
    Ok(true)
}

#[derive(Serialize)]
struct GenerateBody {
    field: FieldRecord,
    xi: String,
    n: usize,
    degree: usize,
    poly: String,
    pretty: String,
    criterion_irreducible: bool,
    rabin_irreducible: Option<bool>,
}

pub fn generate(
    field_args: &FieldArgs,
    xi: &str,
    n: usize,
    cap: u128,
    verify: bool,
    out: &OutputArgs,
) -> Result<u8, CliError> {
    if n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    let k = field(field_args)?;
    let xi = element(&k, xi)?;
    let d = denominator(&xi, n, cap)?.monic();
    let criterion = criterion_holds(&xi, n)?;
    let rabin = if verify {
        Some(d.is_irreducible()?)
    } else {
        None
    };
    let body = GenerateBody {
        field: FieldRecord::from_ctx(&k),
        xi: xi.to_string(),
        n,
        degree: d.degree().expect("D_n is nonzero"),
        poly: d.to_string(),
        pretty: d.pretty(),
        criterion_irreducible: criterion,
        rabin_irreducible: rabin,
    };
    let text = match out.format {
        Format::Json => json(&body)?,
        Format::Csv => csv([&body])?,
        Format::Text => {
            let mut s = format!(
                "D_{n} over {} for xi = {}\ndegree {}\nirreducible (criterion) {}\n",
                body.field.descriptor, body.xi, body.degree, criterion
            );
            if let Some(r) = rabin {
                s += &format!("irreducible (rabin) {r}\n");
            }
            s += &format!("{}\n{}\n", body.pretty, body.poly);
            s
        }
    };
    emit(out, &text)?;
    if rabin.is_some_and(|r| r != criterion) {
        note(out, "criterion and Rabin test disagree");
        return Ok(EXIT_DISAGREE);
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct VerifyBody {
    agree: bool,
    reports: Vec<EquivalenceReport>,
}

#[derive(Serialize)]
struct VerifyRow<'a> {
    suite: &'a str,
    field: &'a str,
    params: &'a str,
    index: usize,
    label: &'a str,
    left: &'a str,
    right: &'a str,
    agree: bool,
}

pub fn verify(
    field_args: &FieldArgs,
    suite: &str,
    cfg: SuiteConfig,
    out: &OutputArgs,
) -> Result<u8, CliError> {
    let k = field(field_args)?;
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL
            .into_iter()
            .filter(|s| *s != Suite::Agou || k.p() == 2)
            .collect()
    } else {
        vec![Suite::parse(suite)?]
    };
    let reports: Vec<EquivalenceReport> = suites
        .par_iter()
        .map(|s| run_suite(*s, &k, &cfg))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    let agree = reports.iter().all(|r| r.agree);
    let checks: usize = reports.iter().map(|r| r.entries.len()).sum();
    note(
        out,
        &format!(
            "{} reports, {checks} comparisons, {}",
            reports.len(),
            if agree { "all agree" } else { "DISAGREEMENT" }
        ),
    );
    let text = match out.format {
        Format::Json => json(VerifyBody { agree, reports })?,
        Format::Csv => csv(reports.iter().flat_map(|r| {
            r.entries.iter().map(move |e| VerifyRow {
                suite: &r.suite,
                field: &r.field,
                params: &r.params,
                index: e.index,
                label: &e.label,
                left: &e.left,
                right: &e.right,
                agree: e.left == e.right,
            })
        }))?,
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                match r
                    .first_disagreement
                    .and_then(|i| r.entries.iter().find(|e| e.index == i))
                {
                    None => {
                        s += &format!(
                            "agree     {} {} {}: {} checks\n",
                            r.suite,
                            r.field,
                            r.params,
                            r.entries.len()
                        )
                    }
                    Some(e) => {
                        s += &format!(
                            "DISAGREE  {} {} {}: {} is {} but oracle says {}\n",
                            r.suite, r.field, r.params, e.label, e.left, e.right
                        )
                    }
                }
            }
            s
        }
    };
    emit(out, &text)?;
    Ok(if agree { EXIT_OK } else { EXIT_DISAGREE })
}

#[derive(Serialize)]
struct TraceTableBody {
    field: FieldRecord,
    xi: String,
    rows: Vec<TraceRowRecord>,
}

pub fn trace_table_cmd(
    field_args: &FieldArgs,
    xi: &str,
    n_max: usize,
    out: &OutputArgs,
) -> Result<u8, CliError> {
    let k = field(field_args)?;
    let xi = element(&k, xi)?;
    let rows: Vec<TraceRowRecord> = trace_table(&xi, n_max)?
        .iter()
        .map(TraceRowRecord::from)
        .collect();
    let text = match out.format {
        Format::Json => json(TraceTableBody {
            field: FieldRecord::from_ctx(&k),
            xi: xi.to_string(),
            rows,
        })?,
        Format::Csv => csv(rows)?,
        Format::Text => {
            let cells: Vec<Vec<String>> = rows
                .into_iter()
                .map(|r| vec![r.n.to_string(), r.a, r.c, r.d, r.ratio, r.trace])
                .collect();
            table(&["n", "a", "c", "d", "a/c", "Tr"], &cells)
        }
    };
    emit(out, &text)?;
    Ok(EXIT_OK)
}
