//! Irreducibility predicates for the general binomial-plus-linear shapes
//! `X^p + aX + b` and `X^4 + aX + b`. Both search `F_q^*` by enumeration
//! and return the first witness `a_0` in index order.

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::poly::Poly;

/// Parameters of `X^(p^t) + aX + b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralASParams {
    pub t: u32,
    pub a: FieldElement,
    pub b: FieldElement,
}

impl GeneralASParams {
    pub fn new(t: u32, a: FieldElement, b: FieldElement) -> Result<Self> {
        if t == 0 {
            return Err(Error::InvalidArgument("t must be >= 1".into()));
        }
        if a.is_zero() {
            return Err(Error::AZero);
        }
        if a.ctx() != b.ctx() {
            return Err(Error::CtxMismatch);
        }
        Ok(GeneralASParams { t, a, b })
    }

    pub fn poly(&self) -> Poly {
        let k = self.a.ctx();
        let deg = (k.p() as usize).pow(self.t);
        &(&Poly::x(k).pow(deg as u64) + &Poly::monomial(&self.a, 1)) + &Poly::constant(&self.b)
    }
}

fn check(a: &FieldElement, b: &FieldElement, ctx: &FieldCtx) -> Result<()> {
    if a.ctx() != ctx || b.ctx() != ctx {
        return Err(Error::CtxMismatch);
    }
    if a.is_zero() {
        return Err(Error::AZero);
    }
    Ok(())
}

/// `X^p + aX + b` is irreducible iff `a = -a_0^(p-1)` and
/// `Tr(b / a_0^p) != 0` for some `a_0 != 0`. Returns that `a_0`.
pub fn wan_irreducible_p(
    a: &FieldElement,
    b: &FieldElement,
    ctx: &FieldCtx,
) -> Result<Option<FieldElement>> {
    check(a, b, ctx)?;
    let p = ctx.p() as u128;
    for a0 in ctx.elements().skip(1) {
        if -a0.pow(p - 1) != *a {
            continue;
        }
        if !b.try_div(&a0.pow(p))?.abs_trace().is_zero() {
            return Ok(Some(a0));
        }
    }
    Ok(None)
}

/// `X^4 + aX + b` over `F_{2^e}` is irreducible iff `e` is odd, `a = a_0^3`
/// and `Tr(b / a_0^4) != 0`. The substitution `X = a_0 Y` turns the quartic
/// into `a_0^4 (Y^4 + Y + b/a_0^4)`, which fixes the power of `a_0`.
pub fn agou_quartic_irreducible(
    a: &FieldElement,
    b: &FieldElement,
    ctx: &FieldCtx,
) -> Result<Option<FieldElement>> {
    if ctx.p() != 2 {
        return Err(Error::NotCharTwo);
    }
    check(a, b, ctx)?;
    if ctx.abs_degree().is_multiple_of(2) {
        return Ok(None);
    }
    for a0 in ctx.elements().skip(1) {
        if a0.pow(3) != *a {
            continue;
        }
        if !b.try_div(&a0.pow(4))?.abs_trace().is_zero() {
            return Ok(Some(a0));
        }
    }
    Ok(None)
}
