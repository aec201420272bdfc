//! Dense univariate polynomials over a [`FieldCtx`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{is_zero_raw, FieldCtx, FieldElement};

/// Polynomial with coefficients in `ctx`, constant term first.
///
/// Coefficients are stored back to back as flattened prime-field digits and
/// the vector never ends in a zero coefficient, so structural equality is
/// polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    ctx: FieldCtx,
    data: Vec<u32>,
}

impl Poly {
    pub(crate) fn from_raw(ctx: &FieldCtx, data: Vec<u32>) -> Self {
        debug_assert_eq!(data.len() % ctx.width(), 0);
        let mut p = Poly {
            ctx: ctx.clone(),
            data,
        };
        p.trim();
        p
    }

    pub(crate) fn raw(&self) -> &[u32] {
        &self.data
    }

    fn trim(&mut self) {
        let w = self.ctx.width();
        while self.data.len() >= w && is_zero_raw(&self.data[self.data.len() - w..]) {
            self.data.truncate(self.data.len() - w);
        }
    }

    fn w(&self) -> usize {
        self.ctx.width()
    }

    fn slot(&self, i: usize) -> &[u32] {
        let w = self.w();
        &self.data[i * w..(i + 1) * w]
    }

    pub fn zero(ctx: &FieldCtx) -> Self {
        Poly {
            ctx: ctx.clone(),
            data: Vec::new(),
        }
    }

    pub fn one(ctx: &FieldCtx) -> Self {
        Self::constant(&ctx.one())
    }

    pub fn x(ctx: &FieldCtx) -> Self {
        Self::monomial(&ctx.one(), 1)
    }

    pub fn constant(c: &FieldElement) -> Self {
        Self::from_raw(c.ctx(), c.digits().to_vec())
    }

    /// `c * X^k`.
    pub fn monomial(c: &FieldElement, k: usize) -> Self {
        let w = c.ctx().width();
        let mut data = vec![0; k * w];
        data.extend_from_slice(c.digits());
        Self::from_raw(c.ctx(), data)
    }

    pub fn from_coeffs(ctx: &FieldCtx, coeffs: Vec<FieldElement>) -> Result<Self> {
        let mut data = Vec::with_capacity(coeffs.len() * ctx.width());
        for c in &coeffs {
            if c.ctx() != ctx {
                return Err(Error::CtxMismatch);
            }
            data.extend_from_slice(c.digits());
        }
        Ok(Self::from_raw(ctx, data))
    }

    /// Polynomial whose coefficients are the images of integers, constant first.
    pub fn from_ints(ctx: &FieldCtx, coeffs: &[i64]) -> Self {
        let data = coeffs
            .iter()
            .flat_map(|&c| ctx.from_int(c).digits().to_vec())
            .collect();
        Self::from_raw(ctx, data)
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        (self.data.len() / self.w()).checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.data.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.degree() == Some(0) && self.coeff(0).is_one()
    }

    /// Coefficient of `X^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        if (i + 1) * self.w() <= self.data.len() {
            self.ctx
                .from_digits(self.slot(i))
                .expect("stored digits are reduced")
        } else {
            self.ctx.zero()
        }
    }

    pub fn coeffs(&self) -> Vec<FieldElement> {
        (0..self.data.len() / self.w())
            .map(|i| self.coeff(i))
            .collect()
    }

    pub fn leading(&self) -> Option<FieldElement> {
        self.degree().map(|d| self.coeff(d))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::CtxMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let (long, short) = if self.data.len() >= other.data.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut data = long.data.clone();
        self.ctx
            .add_assign_raw(&mut data[..short.data.len()], &short.data);
        Ok(Self::from_raw(&self.ctx, data))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut data = self.data.clone();
        if data.len() < other.data.len() {
            data.resize(other.data.len(), 0);
        }
        self.ctx
            .sub_assign_raw(&mut data[..other.data.len()], &other.data);
        Ok(Self::from_raw(&self.ctx, data))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ctx));
        }
        let w = self.w();
        let (n, m) = (self.data.len() / w, other.data.len() / w);
        let mut data = vec![0u32; (n + m - 1) * w];
        for i in 0..n {
            let a = self.slot(i);
            if is_zero_raw(a) {
                continue;
            }
            for j in 0..m {
                let b = other.slot(j);
                self.ctx
                    .mul_acc_raw(&mut data[(i + j) * w..(i + j + 1) * w], a, b);
            }
        }
        Ok(Self::from_raw(&self.ctx, data))
    }

    pub fn scale(&self, c: &FieldElement) -> Result<Self> {
        if c.ctx() != &self.ctx {
            return Err(Error::CtxMismatch);
        }
        let w = self.w();
        let data = self
            .data
            .chunks(w)
            .flat_map(|x| self.ctx.mul_raw(x, c.digits()))
            .collect();
        Ok(Self::from_raw(&self.ctx, data))
    }

    /// Scale by the inverse of the leading coefficient. The zero polynomial
    /// is returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self
                .scale(&lc.inv().expect("leading coefficient is nonzero"))
                .unwrap(),
        }
    }

    /// Quotient and remainder with `self = q * divisor + r`, `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check(divisor)?;
        let dg = divisor.degree().ok_or(Error::DivisionByZero)?;
        let w = self.w();
        let Some(df) = self.degree() else {
            return Ok((Self::zero(&self.ctx), Self::zero(&self.ctx)));
        };
        if df < dg {
            return Ok((Self::zero(&self.ctx), self.clone()));
        }
        let lc = divisor.slot(dg);
        let lc_inv = if self.ctx.one().digits() == lc {
            None
        } else {
            Some(
                self.ctx
                    .inv_raw(lc)
                    .expect("leading coefficient is nonzero"),
            )
        };
        let mut rem = self.data.clone();
        let mut quo = vec![0u32; (df - dg + 1) * w];
        for k in (dg..=df).rev() {
            let top = &rem[k * w..(k + 1) * w];
            if is_zero_raw(top) {
                continue;
            }
            let t = match &lc_inv {
                None => top.to_vec(),
                Some(inv) => self.ctx.mul_raw(top, inv),
            };
            for j in 0..=dg {
                let dj = divisor.slot(j);
                if is_zero_raw(dj) {
                    continue;
                }
                let s = self.ctx.mul_raw(&t, dj);
                let at = k - dg + j;
                self.ctx.sub_assign_raw(&mut rem[at * w..(at + 1) * w], &s);
            }
            quo[(k - dg) * w..(k - dg + 1) * w].copy_from_slice(&t);
        }
        rem.truncate(dg * w);
        Ok((
            Self::from_raw(&self.ctx, quo),
            Self::from_raw(&self.ctx, rem),
        ))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        self.divmod(divisor).map(|(_, r)| r)
    }

    pub fn derivative(&self) -> Self {
        let w = self.w();
        let n = self.data.len() / w;
        let mut data = Vec::with_capacity(self.data.len().saturating_sub(w));
        for i in 1..n {
            let mut c = self.slot(i).to_vec();
            self.ctx.scale_int_raw(&mut c, i as u64);
            data.extend(c);
        }
        Self::from_raw(&self.ctx, data)
    }

    /// Horner evaluation at a point of the coefficient field.
    pub fn eval(&self, x: &FieldElement) -> Result<FieldElement> {
        if x.ctx() != &self.ctx {
            return Err(Error::CtxMismatch);
        }
        let mut acc = self.ctx.zero();
        for c in self.coeffs().iter().rev() {
            acc = &(&acc * x) + c;
        }
        Ok(acc)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    pub fn pow(&self, mut k: u64) -> Self {
        let mut result = Self::one(&self.ctx);
        let mut b = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &b;
            }
            k >>= 1;
            if k > 0 {
                b = &b * &b;
            }
        }
        result
    }

    /// `self^k mod m` by square-and-multiply.
    pub fn powmod(&self, mut k: u128, m: &Self) -> Result<Self> {
        self.check(m)?;
        if m.is_zero() {
            return Err(Error::ZeroModulus);
        }
        let mut result = Self::one(&self.ctx).rem(m)?;
        let mut b = self.rem(m)?;
        while k > 0 {
            if k & 1 == 1 {
                result = (&result * &b).rem(m)?;
            }
            k >>= 1;
            if k > 0 {
                b = (&b * &b).rem(m)?;
            }
        }
        Ok(result)
    }

    /// `X^m f(1/X)` for `m = deg f`: the coefficient vector reversed.
    pub fn reciprocal(&self) -> Result<Self> {
        match self.degree() {
            Some(d) if d >= 1 => {}
            _ => return Err(Error::ConstantPolynomial),
        }
        let w = self.w();
        let data = self.data.chunks(w).rev().flatten().copied().collect();
        Ok(Self::from_raw(&self.ctx, data))
    }

    /// Deterministic Rabin irreducibility test over the coefficient field.
    ///
    /// With `q = |ctx|` and `m = deg f`, `f` is irreducible iff
    /// `X^(q^m) = X mod f` and `gcd(X^(q^(m/r)) - X, f) = 1` for every prime
    /// `r | m`.
    pub fn is_irreducible(&self) -> Result<bool> {
        let m = match self.degree() {
            Some(d) if d >= 1 => d,
            _ => return Err(Error::ConstantPolynomial),
        };
        if m == 1 {
            return Ok(true);
        }
        let f = self.monic();
        let q = self.ctx.order();
        let x = Self::x(&self.ctx);
        // frob[k] = X^(q^k) mod f
        let mut frob = Vec::with_capacity(m + 1);
        frob.push(x.clone());
        for k in 1..=m {
            let next = frob[k - 1].powmod(q, &f)?;
            // every irreducible factor then has degree dividing k < m
            if k < m && next == x {
                return Ok(false);
            }
            frob.push(next);
        }
        if frob[m] != x {
            return Ok(false);
        }
        for r in prime_factors(m) {
            let h = &frob[m / r] - &x;
            if !h.gcd(&f)?.is_one() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The smallest monic irreducible of the given degree, in the order that
    /// compares coefficient digit vectors starting from the constant term.
    pub fn find_irreducible(ctx: &FieldCtx, degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidArgument("degree must be >= 1".into()));
        }
        let p = ctx.p() as u32;
        let w = ctx.width();
        let mut digits = vec![0u32; degree * w];
        let one = ctx.one();
        loop {
            let mut data = digits.clone();
            data.extend_from_slice(one.digits());
            let f = Self::from_raw(ctx, data);
            if f.is_irreducible()? {
                return Ok(f);
            }
            // odometer: the last digit moves fastest
            let mut i = digits.len();
            loop {
                if i == 0 {
                    unreachable!("an irreducible of every degree exists over a finite field");
                }
                i -= 1;
                digits[i] += 1;
                if digits[i] < p {
                    break;
                }
                digits[i] = 0;
            }
        }
    }

    /// Parse the `;`-separated coefficient encoding, constant term first.
    pub fn parse(ctx: &FieldCtx, s: &str) -> Result<Self> {
        let coeffs = s
            .split(';')
            .map(|c| crate::encoding::parse_element(ctx, c))
            .collect::<Result<Vec<_>>>()?;
        Self::from_coeffs(ctx, coeffs)
    }

    /// Human-readable form such as `X^3 + 2X + (0,1)`.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let coeff = if self.ctx.is_prime_field() {
                c.to_string()
            } else {
                format!("({c})")
            };
            let term = match (i, c.is_one()) {
                (0, _) => coeff,
                (1, true) => "X".into(),
                (1, false) => format!("{coeff}X"),
                (_, true) => format!("X^{i}"),
                (_, false) => format!("{coeff}X^{i}"),
            };
            terms.push(term);
        }
        terms.join(" + ")
    }
}

pub(crate) fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "{}", self.ctx.zero());
        }
        let coeffs: Vec<String> = self.coeffs().iter().map(|c| c.to_string()).collect();
        f.write_str(&coeffs.join(";"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.ctx, self.pretty())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                self.$checked(rhs)
                    .expect("polynomials over different fields")
            }
        }
        impl $trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let mut data = self.data.clone();
        self.ctx.neg_raw(&mut data);
        Poly::from_raw(&self.ctx, data)
    }
}
