//! Brute-force cross-checks. Every check pairs a formula with a route that
//! shares none of its code: the trace criterion against Rabin on the iterated
//! denominators, the closed-form relative trace against a Frobenius sum in an
//! explicitly constructed extension, and so on.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::criterion::{mobius_trace_formula, trace_table};
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::iteration::{
    artin_schreier, forward_orbit_infinity, iterates, preimage_count, ProjectivePoint,
};
use crate::poly::Poly;
use crate::predicates::{agou_quartic_irreducible, wan_irreducible_p, GeneralASParams};

/// One compared pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub index: usize,
    pub label: String,
    /// Value from the formula or criterion under test.
    pub left: String,
    /// Value from the independent oracle.
    pub right: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub suite: String,
    pub field: String,
    pub params: String,
    pub n_max: Option<usize>,
    pub entries: Vec<ReportEntry>,
    pub agree: bool,
    pub first_disagreement: Option<usize>,
}

impl EquivalenceReport {
    pub fn new(
        suite: &str,
        field: &FieldCtx,
        params: String,
        n_max: Option<usize>,
        entries: Vec<ReportEntry>,
    ) -> Self {
        let first_disagreement = entries.iter().find(|e| e.left != e.right).map(|e| e.index);
        EquivalenceReport {
            suite: suite.to_string(),
            field: field.descriptor(),
            params,
            n_max,
            entries,
            agree: first_disagreement.is_none(),
            first_disagreement,
        }
    }
}

fn entry(
    index: usize,
    label: impl Into<String>,
    left: impl ToString,
    right: impl ToString,
) -> ReportEntry {
    ReportEntry {
        index,
        label: label.into(),
        left: left.to_string(),
        right: right.to_string(),
    }
}

/// `(n, D_n irreducible)` for `n = 1..=n_max`, by Rabin on the monic `D_n`.
pub fn direct_denominator_check(
    xi: &FieldElement,
    n_max: usize,
    cap: u128,
) -> Result<Vec<(usize, bool)>> {
    iterates(xi, n_max, cap)?
        .iter()
        .skip(1)
        .map(|it| Ok((it.n, it.den.monic().is_irreducible()?)))
        .collect()
}

/// For every `xi` with `Tr(xi) != 0`: at each `n <= n_max`, compares
/// "all traces up to `n` are nonzero" with "`D_n` is irreducible".
pub fn criterion_vs_direct(
    ctx: &FieldCtx,
    n_max: usize,
    cap: u128,
) -> Result<Vec<EquivalenceReport>> {
    let mut out = Vec::new();
    for xi in ctx.elements().filter(|x| !x.abs_trace().is_zero()) {
        out.push(criterion_vs_direct_single(&xi, n_max, cap)?);
    }
    Ok(out)
}

pub fn criterion_vs_direct_single(
    xi: &FieldElement,
    n_max: usize,
    cap: u128,
) -> Result<EquivalenceReport> {
    let rows = trace_table(xi, n_max)?;
    let direct = direct_denominator_check(xi, n_max, cap)?;
    let mut all_nonzero = true;
    let entries = rows
        .iter()
        .zip(&direct)
        .map(|(row, &(n, irreducible))| {
            all_nonzero &= !row.trace.is_zero();
            entry(n, format!("n={n}"), all_nonzero, irreducible)
        })
        .collect();
    Ok(EquivalenceReport::new(
        "criterion",
        xi.ctx(),
        format!("xi={xi}"),
        Some(n_max),
        entries,
    ))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelTraceCheck {
    pub formula: FieldElement,
    pub direct: FieldElement,
    pub agree: bool,
}

/// `K(gamma) = K[X]/(X^p - X + xi)` with its distinguished root.
pub struct ArtinSchreierTower {
    pub base: FieldCtx,
    pub xi: FieldElement,
    pub top: FieldCtx,
    pub gamma: FieldElement,
}

impl ArtinSchreierTower {
    pub fn new(xi: &FieldElement) -> Result<Self> {
        if xi.abs_trace().is_zero() {
            return Err(Error::IrreducibilityHypothesisViolated);
        }
        let base = xi.ctx().clone();
        let top = FieldCtx::extension(&base, &artin_schreier(xi))?;
        let gamma = top.root().expect("extension of degree p has a root");
        Ok(ArtinSchreierTower {
            base,
            xi: xi.clone(),
            top,
            gamma,
        })
    }

    /// Compare the closed-form trace of `(a gamma + b)/(c gamma + d)` with the
    /// Frobenius sum computed in `K(gamma)`.
    pub fn check(
        &self,
        a: &FieldElement,
        b: &FieldElement,
        c: &FieldElement,
        d: &FieldElement,
    ) -> Result<RelTraceCheck> {
        let formula = mobius_trace_formula(a, b, c, d, &self.xi)?;
        let lift = |v: &FieldElement| self.top.embed(v);
        let num = &(&lift(a)? * &self.gamma) + &lift(b)?;
        let den = &(&lift(c)? * &self.gamma) + &lift(d)?;
        let direct = num.try_div(&den)?.rel_trace(&self.base)?;
        Ok(RelTraceCheck {
            agree: formula == direct,
            formula,
            direct,
        })
    }
}

pub fn rel_trace_oracle(
    a: &FieldElement,
    b: &FieldElement,
    c: &FieldElement,
    d: &FieldElement,
    xi: &FieldElement,
) -> Result<RelTraceCheck> {
    if c.is_zero() && d.is_zero() {
        return Err(Error::BothZero);
    }
    ArtinSchreierTower::new(xi)?.check(a, b, c, d)
}

/// Rabin on `X^p - X + xi` against `Tr(xi) != 0`, for every `xi`.
pub fn artin_schreier_sweep(ctx: &FieldCtx) -> Result<EquivalenceReport> {
    let entries = ctx
        .elements()
        .map(|xi| {
            let rabin = artin_schreier(&xi).is_irreducible()?;
            Ok(entry(
                xi.index() as usize,
                format!("xi={xi}"),
                !xi.abs_trace().is_zero(),
                rabin,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EquivalenceReport::new(
        "artin-schreier",
        ctx,
        "all xi".into(),
        None,
        entries,
    ))
}

/// Coordinates of `x` over the subfield `k`, in the tower basis.
fn coords(x: &FieldElement, k: &FieldCtx) -> Vec<FieldElement> {
    x.digits()
        .chunks(k.abs_degree())
        .map(|c| k.from_digits(c).expect("reduced digits"))
        .collect()
}

/// Solve `sum_j lambda_j cols[j] = rhs` over `k`; `None` if inconsistent.
fn solve(
    k: &FieldCtx,
    cols: &[Vec<FieldElement>],
    rhs: &[FieldElement],
) -> Option<Vec<FieldElement>> {
    let rows = rhs.len();
    let ncols = cols.len();
    let mut m: Vec<Vec<FieldElement>> = (0..rows)
        .map(|r| {
            let mut row: Vec<_> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(pr) = (r..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][col].inv().expect("pivot is nonzero");
        for v in m[r].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v = &*v - &(&f * pv);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[ncols].is_zero()) {
        return None;
    }
    let mut sol = vec![k.zero(); ncols];
    for (i, &col) in pivots.iter().enumerate() {
        sol[col] = m[i][ncols].clone();
    }
    Some(sol)
}

/// Minimal polynomial of `alpha` over the subfield `k`, from the first linear
/// dependency among `1, alpha, alpha^2, ...`.
pub fn minimal_polynomial(alpha: &FieldElement, k: &FieldCtx) -> Result<Poly> {
    let l = alpha.ctx();
    if !l.has_subfield(k) {
        return Err(Error::NotInTower);
    }
    let dim = l.abs_degree() / k.abs_degree();
    let mut powers = vec![coords(&l.one(), k)];
    let mut cur = l.one();
    for deg in 1..=dim {
        cur = &cur * alpha;
        let target = coords(&cur, k);
        if let Some(lambda) = solve(k, &powers, &target) {
            let mut coeffs: Vec<_> = lambda.iter().map(|v| -v).collect();
            coeffs.push(k.one());
            debug_assert_eq!(coeffs.len(), deg + 1);
            return Poly::from_coeffs(k, coeffs);
        }
        powers.push(target);
    }
    unreachable!("powers beyond the dimension are dependent")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinpolyCheck {
    pub minpoly: Poly,
    pub from_minpoly: FieldElement,
    pub from_frobenius_sum: FieldElement,
    pub agree: bool,
}

/// The negated second-highest coefficient of the minimal polynomial against
/// the relative trace. `alpha` must generate its field over `k`.
pub fn minpoly_trace_oracle(alpha: &FieldElement, k: &FieldCtx) -> Result<MinpolyCheck> {
    let minpoly = minimal_polynomial(alpha, k)?;
    let deg = minpoly.degree().unwrap();
    if deg != alpha.ctx().abs_degree() / k.abs_degree() {
        return Err(Error::NotGenerating);
    }
    let from_minpoly = -minpoly.coeff(deg - 1);
    let from_frobenius_sum = alpha.rel_trace(k)?;
    Ok(MinpolyCheck {
        agree: from_minpoly == from_frobenius_sum,
        minpoly,
        from_minpoly,
        from_frobenius_sum,
    })
}

/// Rabin against the `X^p + aX + b` predicate for every `a != 0` and `b`.
pub fn wan_sweep(ctx: &FieldCtx) -> Result<EquivalenceReport> {
    let mut entries = Vec::new();
    for a in ctx.elements().skip(1) {
        for b in ctx.elements() {
            let pred = wan_irreducible_p(&a, &b, ctx)?.is_some();
            let rabin = GeneralASParams::new(1, a.clone(), b.clone())?
                .poly()
                .is_irreducible()?;
            entries.push(entry(entries.len(), format!("a={a} b={b}"), pred, rabin));
        }
    }
    Ok(EquivalenceReport::new(
        "wan",
        ctx,
        "all a != 0, b".into(),
        None,
        entries,
    ))
}

/// Rabin against the `X^4 + aX + b` predicate for every `a != 0` and `b`.
pub fn agou_sweep(ctx: &FieldCtx) -> Result<EquivalenceReport> {
    let mut entries = Vec::new();
    for a in ctx.elements().skip(1) {
        for b in ctx.elements() {
            let pred = agou_quartic_irreducible(&a, &b, ctx)?.is_some();
            let rabin = GeneralASParams::new(2, a.clone(), b.clone())?
                .poly()
                .is_irreducible()?;
            entries.push(entry(entries.len(), format!("a={a} b={b}"), pred, rabin));
        }
    }
    Ok(EquivalenceReport::new(
        "agou",
        ctx,
        "all a != 0, b".into(),
        None,
        entries,
    ))
}

pub fn random_element(ctx: &FieldCtx, rng: &mut impl Rng) -> FieldElement {
    ctx.from_index(rng.gen_range(0..ctx.order()))
}

pub fn random_nonzero(ctx: &FieldCtx, rng: &mut impl Rng) -> FieldElement {
    ctx.from_index(rng.gen_range(1..ctx.order()))
}

/// Random tuples `(a, b, c, d)` with `(c, d) != 0` and random `xi` with
/// nonzero trace, plus every `c = 0` tuple when `q^3 <= 1000`.
pub fn mobius_sweep(ctx: &FieldCtx, samples: usize, seed: u64) -> Result<EquivalenceReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let good_xi: Vec<_> = ctx
        .elements()
        .filter(|x| !x.abs_trace().is_zero())
        .collect();
    let mut towers: HashMap<u128, ArtinSchreierTower> = HashMap::new();
    let mut entries = Vec::new();
    let mut run = |xi: &FieldElement,
                   a: &FieldElement,
                   b: &FieldElement,
                   c: &FieldElement,
                   d: &FieldElement,
                   entries: &mut Vec<ReportEntry>|
     -> Result<()> {
        if let std::collections::hash_map::Entry::Vacant(e) = towers.entry(xi.index()) {
            e.insert(ArtinSchreierTower::new(xi)?);
        }
        let chk = towers[&xi.index()].check(a, b, c, d)?;
        entries.push(entry(
            entries.len(),
            format!("xi={xi} a={a} b={b} c={c} d={d}"),
            chk.formula,
            chk.direct,
        ));
        Ok(())
    };
    if ctx.order().pow(3) <= 1000 {
        let zero = ctx.zero();
        for xi in &good_xi {
            for a in ctx.elements() {
                for b in ctx.elements() {
                    for d in ctx.elements().skip(1) {
                        run(xi, &a, &b, &zero, &d, &mut entries)?;
                    }
                }
            }
        }
    }
    for _ in 0..samples {
        let xi = &good_xi[rng.gen_range(0..good_xi.len())];
        let a = random_element(ctx, &mut rng);
        let b = random_element(ctx, &mut rng);
        let (c, d) = loop {
            let c = if rng.gen_bool(0.25) {
                ctx.zero()
            } else {
                random_element(ctx, &mut rng)
            };
            let d = random_element(ctx, &mut rng);
            if !(c.is_zero() && d.is_zero()) {
                break (c, d);
            }
        };
        run(xi, &a, &b, &c, &d, &mut entries)?;
    }
    Ok(EquivalenceReport::new(
        "mobius",
        ctx,
        format!("samples={samples} seed={seed}"),
        None,
        entries,
    ))
}

/// Minimal polynomial against relative trace for random generating elements.
/// Extensions are checked over their base; prime fields over themselves
/// inside a cubic extension.
pub fn minpoly_sweep(ctx: &FieldCtx, samples: usize, seed: u64) -> Result<EquivalenceReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (top, sub) = match ctx.base() {
        Some(b) => (ctx.clone(), b.clone()),
        None => (
            FieldCtx::extension(ctx, &Poly::find_irreducible(ctx, 3)?)?,
            ctx.clone(),
        ),
    };
    let mut entries = Vec::new();
    let mut tries = 0;
    while entries.len() < samples && tries < 100 * samples {
        tries += 1;
        let alpha = random_element(&top, &mut rng);
        match minpoly_trace_oracle(&alpha, &sub) {
            Ok(chk) => entries.push(entry(
                entries.len(),
                format!("alpha={alpha}"),
                chk.from_minpoly,
                chk.from_frobenius_sum,
            )),
            Err(Error::NotGenerating) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(EquivalenceReport::new(
        "minpoly",
        &top,
        format!("over {} samples={samples} seed={seed}", sub.descriptor()),
        None,
        entries,
    ))
}

/// Rabin on `f` against Rabin on its reciprocal for random `f` with `f(0) != 0`.
pub fn reciprocal_sweep(ctx: &FieldCtx, samples: usize, seed: u64) -> Result<EquivalenceReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut entries = Vec::new();
    for i in 0..samples {
        let deg = rng.gen_range(1..=6);
        let mut coeffs: Vec<_> = (0..deg).map(|_| random_element(ctx, &mut rng)).collect();
        coeffs[0] = random_nonzero(ctx, &mut rng);
        coeffs.push(random_nonzero(ctx, &mut rng));
        let f = Poly::from_coeffs(ctx, coeffs)?;
        let rec = f.reciprocal()?;
        entries.push(entry(
            i,
            format!("f={f}"),
            f.is_irreducible()?,
            rec.is_irreducible()?,
        ));
    }
    Ok(EquivalenceReport::new(
        "reciprocal",
        ctx,
        format!("samples={samples} seed={seed}"),
        None,
        entries,
    ))
}

/// Degree, coprimality, preimage and orbit invariants for one `xi` with
/// nonzero trace.
pub fn iterate_invariants_check(
    xi: &FieldElement,
    n_max: usize,
    cap: u128,
    preimage_samples: usize,
    seed: u64,
) -> Result<EquivalenceReport> {
    let ctx = xi.ctx();
    if xi.abs_trace().is_zero() {
        return Err(Error::IrreducibilityHypothesisViolated);
    }
    let p = ctx.p() as u128;
    let mut entries = Vec::new();
    let its = iterates(xi, n_max, cap)?;
    for w in its.windows(2) {
        let (prev, it) = (&w[0], &w[1]);
        let n = it.n;
        let deg_d = it.den.degree().unwrap() as u128;
        entries.push(entry(
            entries.len(),
            format!("deg D_{n}"),
            p.pow(n as u32),
            deg_d,
        ));
        let deg_n = it.num.degree().unwrap() as u128;
        let expect_n = p * prev.den.degree().unwrap() as u128;
        entries.push(entry(entries.len(), format!("deg N_{n}"), expect_n, deg_n));
        entries.push(entry(
            entries.len(),
            format!("deg N_{n} <= deg D_{n}"),
            true,
            deg_n <= deg_d,
        ));
        let g = it.num.gcd(&it.den)?;
        entries.push(entry(
            entries.len(),
            format!("gcd(N_{n}, D_{n}) = 1"),
            true,
            g.is_one(),
        ));
        if n >= 2 {
            entries.push(entry(
                entries.len(),
                format!("deg D_{n} > deg D_{}", n - 1),
                true,
                deg_d > prev.den.degree().unwrap() as u128,
            ));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..preimage_samples {
        let gamma = random_nonzero(ctx, &mut rng);
        let count = preimage_count(xi, &ProjectivePoint::Finite(gamma.clone()))?;
        entries.push(entry(entries.len(), format!("#G^-1({gamma})"), p, count));
    }
    entries.push(entry(
        entries.len(),
        "#G^-1(inf)",
        p,
        preimage_count(xi, &ProjectivePoint::Infinity)?,
    ));
    entries.push(entry(
        entries.len(),
        "#G^-1(0)",
        1,
        preimage_count(xi, &ProjectivePoint::Finite(ctx.zero()))?,
    ));
    let hits = forward_orbit_infinity(xi, 100).contains(&ProjectivePoint::Infinity);
    entries.push(entry(
        entries.len(),
        "orbit of inf avoids inf (100 steps)",
        true,
        !hits,
    ));
    Ok(EquivalenceReport::new(
        "iterates",
        ctx,
        format!("xi={xi}"),
        Some(n_max),
        entries,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Criterion,
    Minpoly,
    Reciprocal,
    Mobius,
    ArtinSchreier,
    Iterates,
    Wan,
    Agou,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Criterion,
        Suite::Minpoly,
        Suite::Reciprocal,
        Suite::Mobius,
        Suite::ArtinSchreier,
        Suite::Iterates,
        Suite::Wan,
        Suite::Agou,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Criterion => "criterion",
            Suite::Minpoly => "minpoly",
            Suite::Reciprocal => "reciprocal",
            Suite::Mobius => "mobius",
            Suite::ArtinSchreier => "artin-schreier",
            Suite::Iterates => "iterates",
            Suite::Wan => "wan",
            Suite::Agou => "agou",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub n_max: usize,
    pub cap: u128,
    pub samples: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            n_max: 2,
            cap: crate::iteration::DEFAULT_DEGREE_CAP,
            samples: 500,
            seed: 0,
        }
    }
}

pub fn run_suite(
    suite: Suite,
    ctx: &FieldCtx,
    cfg: &SuiteConfig,
) -> Result<Vec<EquivalenceReport>> {
    match suite {
        Suite::Criterion => criterion_vs_direct(ctx, cfg.n_max, cfg.cap),
        Suite::Minpoly => Ok(vec![minpoly_sweep(ctx, cfg.samples.min(100), cfg.seed)?]),
        Suite::Reciprocal => Ok(vec![reciprocal_sweep(ctx, cfg.samples.min(200), cfg.seed)?]),
        Suite::Mobius => Ok(vec![mobius_sweep(ctx, cfg.samples, cfg.seed)?]),
        Suite::ArtinSchreier => Ok(vec![artin_schreier_sweep(ctx)?]),
        Suite::Iterates => ctx
            .elements()
            .filter(|x| !x.abs_trace().is_zero())
            .map(|xi| iterate_invariants_check(&xi, cfg.n_max, cfg.cap, 20, cfg.seed))
            .collect(),
        Suite::Wan => Ok(vec![wan_sweep(ctx)?]),
        Suite::Agou => Ok(vec![agou_sweep(ctx)?]),
    }
}
