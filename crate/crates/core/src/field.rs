//! Exact arithmetic in prime fields and in towers of at most two extensions
//! above them.
//!
//! An element is stored as its flattened vector of prime-field digits: an
//! element of `K[X]/(m)` is the concatenation of its `deg m` coefficients,
//! each of which is itself a flattened element of `K`. Addition is therefore
//! digit-wise in every field of the tower, and only multiplication needs to
//! know the shape of the tower.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::Poly;

/// Default hard cap on the characteristic.
pub const DEFAULT_PRIME_CAP: u64 = 1 << 20;

/// Maximum number of extensions stacked on top of the prime field.
pub const MAX_DEPTH: usize = 2;

/// A finite field: either `F_p` or `base[X]/(modulus)`.
///
/// Cloning is cheap (reference counted). Two contexts compare equal when
/// they describe the same tower with the same moduli.
#[derive(Clone)]
pub struct FieldCtx(Arc<CtxInner>);

#[derive(PartialEq, Eq)]
struct CtxInner {
    p: u32,
    /// Degree over the prime field.
    width: usize,
    order: u128,
    depth: usize,
    ext: Option<Extension>,
}

#[derive(PartialEq, Eq)]
struct Extension {
    base: FieldCtx,
    /// Monic modulus, flattened base digits, `degree + 1` coefficients.
    modulus: Vec<u32>,
    degree: usize,
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldCtx {
    /// The prime field `F_p`, with the default cap on `p`.
    pub fn prime(p: u64) -> Result<Self> {
        Self::prime_with_cap(p, DEFAULT_PRIME_CAP)
    }

    pub fn prime_with_cap(p: u64, cap: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= cap.min(1 << 31) {
            return Err(Error::PrimeTooLarge { p, cap });
        }
        Ok(FieldCtx(Arc::new(CtxInner {
            p: p as u32,
            width: 1,
            order: p as u128,
            depth: 0,
            ext: None,
        })))
    }

    /// `base[X]/(modulus)`. The modulus must be monic and irreducible over
    /// `base`; irreducibility is checked with the Rabin test.
    pub fn extension(base: &FieldCtx, modulus: &Poly) -> Result<Self> {
        if modulus.ctx() != base {
            return Err(Error::CtxMismatch);
        }
        let degree = match modulus.degree() {
            Some(d) if d >= 1 => d,
            _ => return Err(Error::ConstantPolynomial),
        };
        if !modulus.leading().is_some_and(|c| c.is_one()) {
            return Err(Error::NotMonic);
        }
        if base.depth() + 1 > MAX_DEPTH {
            return Err(Error::DepthExceeded(MAX_DEPTH));
        }
        let order = checked_pow(base.order(), degree).ok_or(Error::FieldTooLarge)?;
        if !modulus.is_irreducible()? {
            return Err(Error::ReducibleModulus);
        }
        Ok(FieldCtx(Arc::new(CtxInner {
            p: base.0.p,
            width: base.width() * degree,
            order,
            depth: base.depth() + 1,
            ext: Some(Extension {
                base: base.clone(),
                modulus: modulus.raw().to_vec(),
                degree,
            }),
        })))
    }

    /// `F_{p^e}` over the prime field. With `modulus = None` and `e > 1` the
    /// lexicographically smallest monic irreducible of degree `e` is used;
    /// `e = 1` without a modulus yields the prime field itself.
    ///
    /// `modulus` lists prime-field coefficients, constant term first,
    /// including the leading 1.
    pub fn galois(p: u64, e: usize, modulus: Option<&[u32]>) -> Result<Self> {
        if e == 0 {
            return Err(Error::InvalidArgument(
                "extension degree must be >= 1".into(),
            ));
        }
        let fp = Self::prime(p)?;
        match modulus {
            None if e == 1 => Ok(fp),
            None => {
                let m = Poly::find_irreducible(&fp, e)?;
                Self::extension(&fp, &m)
            }
            Some(digits) => {
                if digits.len() != e + 1 {
                    return Err(Error::InvalidArgument(format!(
                        "modulus has degree {} but e = {e}",
                        digits.len().saturating_sub(1)
                    )));
                }
                let coeffs = digits
                    .iter()
                    .map(|&d| fp.from_digits(&[d]))
                    .collect::<Result<Vec<_>>>()?;
                Self::extension(&fp, &Poly::from_coeffs(&fp, coeffs)?)
            }
        }
    }

    pub fn p(&self) -> u64 {
        self.0.p as u64
    }

    /// Degree over the immediate base (1 for a prime field).
    pub fn degree(&self) -> usize {
        self.0.ext.as_ref().map_or(1, |e| e.degree)
    }

    /// Degree over the prime field.
    pub fn abs_degree(&self) -> usize {
        self.0.width
    }

    pub(crate) fn width(&self) -> usize {
        self.0.width
    }

    pub fn order(&self) -> u128 {
        self.0.order
    }

    pub fn depth(&self) -> usize {
        self.0.depth
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.ext.is_none()
    }

    pub fn base(&self) -> Option<&FieldCtx> {
        self.0.ext.as_ref().map(|e| &e.base)
    }

    pub fn prime_field(&self) -> FieldCtx {
        let mut k = self;
        while let Some(b) = k.base() {
            k = b;
        }
        k.clone()
    }

    /// The defining modulus over the base, if this is an extension.
    pub fn modulus(&self) -> Option<Poly> {
        self.0
            .ext
            .as_ref()
            .map(|e| Poly::from_raw(&e.base, e.modulus.clone()))
    }

    /// True if `k` is this field or one of the fields below it.
    pub fn has_subfield(&self, k: &FieldCtx) -> bool {
        let mut cur = Some(self);
        while let Some(c) = cur {
            if c == k {
                return true;
            }
            cur = c.base();
        }
        false
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::from_raw(self, vec![0; self.width()])
    }

    pub fn one(&self) -> FieldElement {
        let mut raw = vec![0; self.width()];
        raw[0] = 1;
        FieldElement::from_raw(self, raw)
    }

    /// Image of an integer under `Z -> F`.
    pub fn from_int(&self, k: i64) -> FieldElement {
        let mut raw = vec![0; self.width()];
        raw[0] = k.rem_euclid(self.p() as i64) as u32;
        FieldElement::from_raw(self, raw)
    }

    /// The class of `X` in `base[X]/(modulus)`. For a degree-one extension
    /// this is the unique root of the modulus, embedded from the base.
    pub fn root(&self) -> Option<FieldElement> {
        let ext = self.0.ext.as_ref()?;
        if ext.degree >= 2 {
            let bw = ext.base.width();
            let mut raw = vec![0; self.width()];
            raw[bw] = 1;
            Some(FieldElement::from_raw(self, raw))
        } else {
            let c0 = FieldElement::from_raw(&ext.base, ext.modulus[..ext.base.width()].to_vec());
            Some(self.embed(&(-c0)).expect("base embeds"))
        }
    }

    /// Element from prime-field digits (little-endian, flattened). Fewer
    /// digits than the absolute degree are zero padded.
    pub fn from_digits(&self, digits: &[u32]) -> Result<FieldElement> {
        if digits.len() > self.width() {
            return Err(Error::Parse(format!(
                "{} digits given for a field of degree {}",
                digits.len(),
                self.width()
            )));
        }
        if let Some(&d) = digits.iter().find(|&&d| d as u64 >= self.p()) {
            return Err(Error::Parse(format!(
                "digit {d} is not reduced mod {}",
                self.p()
            )));
        }
        let mut raw = digits.to_vec();
        raw.resize(self.width(), 0);
        Ok(FieldElement::from_raw(self, raw))
    }

    /// Element from its coefficients over the immediate base.
    pub fn element(&self, coeffs: &[FieldElement]) -> Result<FieldElement> {
        let Some(ext) = &self.0.ext else {
            return match coeffs {
                [c] if c.ctx == *self => Ok(c.clone()),
                [_] => Err(Error::CtxMismatch),
                _ => Err(Error::InvalidArgument(
                    "prime field elements have one coefficient".into(),
                )),
            };
        };
        if coeffs.len() != ext.degree {
            return Err(Error::InvalidArgument(format!(
                "expected {} coefficients, got {}",
                ext.degree,
                coeffs.len()
            )));
        }
        let mut raw = Vec::with_capacity(self.width());
        for c in coeffs {
            if c.ctx != ext.base {
                return Err(Error::CtxMismatch);
            }
            raw.extend_from_slice(&c.raw);
        }
        Ok(FieldElement::from_raw(self, raw))
    }

    /// The element whose digit `i` is the `i`-th base-`p` digit of `index`.
    pub fn from_index(&self, mut index: u128) -> FieldElement {
        let p = self.p() as u128;
        let raw = (0..self.width())
            .map(|_| {
                let d = (index % p) as u32;
                index /= p;
                d
            })
            .collect();
        FieldElement::from_raw(self, raw)
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order()).map(move |i| self.from_index(i))
    }

    /// Embed an element of a subfield in the tower.
    pub fn embed(&self, x: &FieldElement) -> Result<FieldElement> {
        if x.ctx == *self {
            return Ok(x.clone());
        }
        let ext = self.0.ext.as_ref().ok_or(Error::NotInTower)?;
        let inner = ext.base.embed(x)?;
        let mut raw = inner.raw;
        raw.resize(self.width(), 0);
        Ok(FieldElement::from_raw(self, raw))
    }

    /// Short descriptor such as `F_3`, `F_3^2[2,2,1]` or `F_3^2[2,2,1]^3[...]`.
    pub fn descriptor(&self) -> String {
        match &self.0.ext {
            None => format!("F_{}", self.p()),
            Some(ext) => {
                let m = Poly::from_raw(&ext.base, ext.modulus.clone());
                if ext.base.is_prime_field() {
                    let digits: Vec<String> = m.raw().iter().map(|d| d.to_string()).collect();
                    format!("F_{}^{}[{}]", self.p(), ext.degree, digits.join(","))
                } else {
                    format!("{}^{}[{}]", ext.base.descriptor(), ext.degree, m)
                }
            }
        }
    }

    // ---- raw arithmetic on flattened digit slices ----

    pub(crate) fn add_assign_raw(&self, acc: &mut [u32], x: &[u32]) {
        let p = self.0.p;
        for (a, &b) in acc.iter_mut().zip(x) {
            let s = *a + b;
            *a = if s >= p { s - p } else { s };
        }
    }

    pub(crate) fn sub_assign_raw(&self, acc: &mut [u32], x: &[u32]) {
        let p = self.0.p;
        for (a, &b) in acc.iter_mut().zip(x) {
            *a = if *a >= b { *a - b } else { *a + p - b };
        }
    }

    pub(crate) fn neg_raw(&self, x: &mut [u32]) {
        let p = self.0.p;
        for a in x.iter_mut() {
            if *a != 0 {
                *a = p - *a;
            }
        }
    }

    pub(crate) fn scale_int_raw(&self, x: &mut [u32], k: u64) {
        let p = self.p();
        let k = k % p;
        for a in x.iter_mut() {
            *a = ((*a as u64 * k) % p) as u32;
        }
    }

    pub(crate) fn mul_raw(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let mut out = vec![0; self.width()];
        self.mul_acc_raw(&mut out, x, y);
        out
    }

    /// `acc += x * y`.
    pub(crate) fn mul_acc_raw(&self, acc: &mut [u32], x: &[u32], y: &[u32]) {
        let Some(ext) = &self.0.ext else {
            let p = self.p();
            acc[0] = ((acc[0] as u64 + x[0] as u64 * y[0] as u64) % p) as u32;
            return;
        };
        let base = &ext.base;
        let bw = base.width();
        let m = ext.degree;
        let mut prod = vec![0u32; (2 * m - 1) * bw];
        for i in 0..m {
            let xi = &x[i * bw..(i + 1) * bw];
            if is_zero_raw(xi) {
                continue;
            }
            for j in 0..m {
                let yj = &y[j * bw..(j + 1) * bw];
                if is_zero_raw(yj) {
                    continue;
                }
                base.mul_acc_raw(&mut prod[(i + j) * bw..(i + j + 1) * bw], xi, yj);
            }
        }
        for k in (m..2 * m - 1).rev() {
            let t = prod[k * bw..(k + 1) * bw].to_vec();
            if is_zero_raw(&t) {
                continue;
            }
            for j in 0..m {
                let mj = &ext.modulus[j * bw..(j + 1) * bw];
                if is_zero_raw(mj) {
                    continue;
                }
                let s = base.mul_raw(&t, mj);
                base.sub_assign_raw(&mut prod[(k - m + j) * bw..(k - m + j + 1) * bw], &s);
            }
        }
        self.add_assign_raw(acc, &prod[..m * bw]);
    }

    pub(crate) fn pow_raw(&self, x: &[u32], mut k: u128) -> Vec<u32> {
        let mut result = self.one().raw;
        let mut b = x.to_vec();
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul_raw(&result, &b);
            }
            k >>= 1;
            if k > 0 {
                b = self.mul_raw(&b, &b);
            }
        }
        result
    }

    /// Inverse via `x^(q-2)`; `None` for zero.
    pub(crate) fn inv_raw(&self, x: &[u32]) -> Option<Vec<u32>> {
        if is_zero_raw(x) {
            None
        } else {
            Some(self.pow_raw(x, self.order() - 2))
        }
    }
}

pub(crate) fn is_zero_raw(x: &[u32]) -> bool {
    x.iter().all(|&d| d == 0)
}

fn checked_pow(base: u128, exp: usize) -> Option<u128> {
    let mut r: u128 = 1;
    for _ in 0..exp {
        r = r.checked_mul(base)?;
    }
    Some(r)
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for FieldCtx {}

impl Hash for FieldCtx {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.p.hash(state);
        self.0.width.hash(state);
        self.0.depth.hash(state);
    }
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor())
    }
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor())
    }
}

/// An element of a [`FieldCtx`], in canonical (fully reduced) form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    ctx: FieldCtx,
    raw: Vec<u32>,
}

impl FieldElement {
    pub(crate) fn from_raw(ctx: &FieldCtx, raw: Vec<u32>) -> Self {
        debug_assert_eq!(raw.len(), ctx.width());
        FieldElement {
            ctx: ctx.clone(),
            raw,
        }
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    /// Flattened prime-field digits, little-endian.
    pub fn digits(&self) -> &[u32] {
        &self.raw
    }

    /// Coefficients over the immediate base field.
    pub fn coeffs(&self) -> Vec<FieldElement> {
        match self.ctx.base() {
            None => vec![self.clone()],
            Some(base) => self
                .raw
                .chunks(base.width())
                .map(|c| FieldElement::from_raw(base, c.to_vec()))
                .collect(),
        }
    }

    /// Inverse of [`FieldCtx::from_index`].
    pub fn index(&self) -> u128 {
        let p = self.ctx.p() as u128;
        self.raw.iter().rev().fold(0, |acc, &d| acc * p + d as u128)
    }

    pub fn is_zero(&self) -> bool {
        is_zero_raw(&self.raw)
    }

    pub fn is_one(&self) -> bool {
        self.raw[0] == 1 && is_zero_raw(&self.raw[1..])
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
        let mut raw = self.raw.clone();
        self.ctx.add_assign_raw(&mut raw, &other.raw);
        Ok(FieldElement::from_raw(&self.ctx, raw))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut raw = self.raw.clone();
        self.ctx.sub_assign_raw(&mut raw, &other.raw);
        Ok(FieldElement::from_raw(&self.ctx, raw))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(FieldElement::from_raw(
            &self.ctx,
            self.ctx.mul_raw(&self.raw, &other.raw),
        ))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.try_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<Self> {
        self.ctx
            .inv_raw(&self.raw)
            .map(|raw| FieldElement::from_raw(&self.ctx, raw))
            .ok_or(Error::DivisionByZero)
    }

    pub fn pow(&self, k: u128) -> Self {
        FieldElement::from_raw(&self.ctx, self.ctx.pow_raw(&self.raw, k))
    }

    /// Power with a signed exponent; negative exponents invert first.
    pub fn pow_int(&self, k: i128) -> Result<Self> {
        if k >= 0 {
            Ok(self.pow(k as u128))
        } else {
            Ok(self.inv()?.pow(k.unsigned_abs()))
        }
    }

    /// `x -> x^p`.
    pub fn frobenius(&self) -> Self {
        self.pow(self.ctx.p() as u128)
    }

    /// Absolute trace `sum_i x^(p^i)`, as an element of the prime field.
    pub fn abs_trace(&self) -> FieldElement {
        let mut acc = self.raw.clone();
        let mut y = self.clone();
        for _ in 1..self.ctx.width() {
            y = y.frobenius();
            self.ctx.add_assign_raw(&mut acc, &y.raw);
        }
        FieldElement::from_raw(&self.ctx, acc)
            .project_to(&self.ctx.prime_field())
            .expect("absolute trace lies in the prime field")
    }

    /// Relative trace `sum_{i < [L:K]} x^(|K|^i)` down to a subfield `K`.
    pub fn rel_trace(&self, k: &FieldCtx) -> Result<FieldElement> {
        if !self.ctx.has_subfield(k) {
            return Err(Error::NotInTower);
        }
        let steps = self.ctx.width() / k.width();
        let mut acc = self.raw.clone();
        let mut y = self.clone();
        for _ in 1..steps {
            y = y.pow(k.order());
            self.ctx.add_assign_raw(&mut acc, &y.raw);
        }
        Ok(FieldElement::from_raw(&self.ctx, acc)
            .project_to(k)
            .expect("relative trace lies in the subfield"))
    }

    /// The preimage of `self` under the embedding of `k`, if it lies in `k`.
    pub fn project_to(&self, k: &FieldCtx) -> Option<FieldElement> {
        if self.ctx == *k {
            return Some(self.clone());
        }
        let base = self.ctx.base()?;
        if !is_zero_raw(&self.raw[base.width()..]) {
            return None;
        }
        FieldElement::from_raw(base, self.raw[..base.width()].to_vec()).project_to(k)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.raw.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs)
                    .expect("field elements from different contexts")
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let mut raw = self.raw.clone();
        self.ctx.neg_raw(&mut raw);
        FieldElement::from_raw(&self.ctx, raw)
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f9() -> FieldCtx {
        FieldCtx::galois(3, 2, Some(&[2, 2, 1])).unwrap()
    }

    fn f25() -> FieldCtx {
        FieldCtx::galois(5, 2, Some(&[2, 4, 1])).unwrap()
    }

    fn el(k: &FieldCtx, d: &[u32]) -> FieldElement {
        k.from_digits(d).unwrap()
    }

    #[test]
    fn prime_construction() {
        assert_eq!(FieldCtx::prime(3).unwrap().order(), 3);
        assert_eq!(FieldCtx::prime(5).unwrap().order(), 5);
        assert_eq!(FieldCtx::prime(4), Err(Error::NotPrime(4)));
        assert_eq!(FieldCtx::prime(1), Err(Error::NotPrime(1)));
        assert!(matches!(
            FieldCtx::prime(1_048_583),
            Err(Error::PrimeTooLarge { .. })
        ));
        assert!(FieldCtx::prime_with_cap(7, 5).is_err());
    }

    #[test]
    fn extension_construction() {
        let k = f9();
        assert_eq!(k.order(), 9);
        assert_eq!(k.root().unwrap().digits(), &[0, 1]);
        assert_eq!(f25().order(), 25);
        // X^2 + 1 has no root in F_3
        assert!(FieldCtx::galois(3, 2, Some(&[1, 0, 1])).is_ok());
        // X^2 - 1 = (X - 1)(X + 1)
        assert_eq!(
            FieldCtx::galois(3, 2, Some(&[2, 0, 1])),
            Err(Error::ReducibleModulus)
        );
        assert_eq!(
            FieldCtx::galois(3, 2, Some(&[2, 2, 2])),
            Err(Error::NotMonic)
        );
    }

    #[test]
    fn depth_cap() {
        let k = f9();
        let x = Poly::x(&k);
        // X^3 - X + w is irreducible over F_9
        let g = &(&x.pow(3) - &x) + &Poly::constant(&k.root().unwrap());
        let l = FieldCtx::extension(&k, &g).unwrap();
        assert_eq!(l.depth(), 2);
        assert_eq!(l.order(), 729);
        let lx = Poly::x(&l);
        let h = &(&lx.pow(2) - &lx) + &Poly::constant(&l.root().unwrap());
        assert_eq!(
            FieldCtx::extension(&l, &h),
            Err(Error::DepthExceeded(MAX_DEPTH))
        );
    }

    #[test]
    fn ring_ops_examples() {
        let k = f9();
        let w = k.root().unwrap();
        assert_eq!(&w * &w, el(&k, &[1, 1]));
        assert_eq!(&w + &k.zero(), w);
        let l = f25();
        let v = l.root().unwrap();
        assert_eq!(&v * &v, el(&l, &[3, 1]));
        assert_eq!(w.try_add(&v), Err(Error::CtxMismatch));
        assert_eq!(k.from_int(-1), el(&k, &[2]));
    }

    #[test]
    fn inverse_examples() {
        let k = f9();
        let w = k.root().unwrap();
        assert_eq!(w.inv().unwrap(), el(&k, &[2, 1]));
        assert_eq!(k.one().inv().unwrap(), k.one());
        let f5 = FieldCtx::prime(5).unwrap();
        assert_eq!(f5.from_int(2).inv().unwrap(), f5.from_int(3));
        assert_eq!(k.zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn pow_examples() {
        let k = f9();
        let w = k.root().unwrap();
        assert_eq!(w.pow(3), el(&k, &[1, 2]));
        assert_eq!(w.pow(0), k.one());
        let f3 = FieldCtx::prime(3).unwrap();
        assert_eq!(f3.from_int(2).pow(100), f3.one());
        assert_eq!(w.pow_int(-1).unwrap(), w.inv().unwrap());
        assert_eq!(k.zero().pow_int(-2), Err(Error::DivisionByZero));
    }

    #[test]
    fn trace_examples() {
        let k = f9();
        let f3 = k.prime_field();
        let w = k.root().unwrap();
        assert_eq!(w.abs_trace(), f3.from_int(1));
        assert_eq!(el(&k, &[2, 1]).abs_trace(), f3.from_int(2));
        let x = f3.from_int(2);
        assert_eq!(x.abs_trace(), x);
        assert_eq!(w.rel_trace(&k).unwrap(), w);
        let f5 = FieldCtx::prime(5).unwrap();
        assert_eq!(w.rel_trace(&f5), Err(Error::NotInTower));
    }

    #[test]
    fn trace_in_artin_schreier_extension() {
        // gamma root of X^3 - X + w over F_9
        let k = f9();
        let w = k.root().unwrap();
        let x = Poly::x(&k);
        let g = &(&x.pow(3) - &x) + &Poly::constant(&w);
        let l = FieldCtx::extension(&k, &g).unwrap();
        let gamma = l.root().unwrap();
        assert_eq!(gamma.rel_trace(&k).unwrap(), k.zero());
        assert_eq!(
            gamma.inv().unwrap().rel_trace(&k).unwrap(),
            w.inv().unwrap()
        );
    }

    #[test]
    fn enumeration_and_index() {
        let k = f9();
        let all: Vec<_> = k.elements().collect();
        assert_eq!(all.len(), 9);
        for (i, x) in all.iter().enumerate() {
            assert_eq!(x.index(), i as u128);
        }
        assert_eq!(all[3], k.root().unwrap());
    }

    #[test]
    fn embed_and_project() {
        let k = f9();
        let f3 = k.prime_field();
        let two = k.embed(&f3.from_int(2)).unwrap();
        assert_eq!(two, k.from_int(2));
        assert_eq!(two.project_to(&f3), Some(f3.from_int(2)));
        assert_eq!(k.root().unwrap().project_to(&f3), None);
    }

    #[test]
    fn from_digits_rejects_bad_input() {
        let k = f9();
        assert!(k.from_digits(&[3]).is_err());
        assert!(k.from_digits(&[1, 1, 1]).is_err());
        assert_eq!(k.from_digits(&[2]).unwrap(), k.from_int(2));
    }

    #[test]
    fn exhaustive_f9_inverse_and_trace_surjective() {
        let k = f9();
        let mut seen = [false; 3];
        for x in k.elements() {
            seen[x.abs_trace().digits()[0] as usize] = true;
            if !x.is_zero() {
                assert!((&x * &x.inv().unwrap()).is_one());
            }
        }
        assert!(seen.iter().all(|&s| s));
    }
}
