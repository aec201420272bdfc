//! Iterates of `G(X) = 1/g(X)` with `g(X) = X^p - X + xi`.
//!
//! `G^(n) = N_n / D_n` is built with the closed recurrence obtained by
//! substituting `N/D` into `1/g` and clearing `D^p`:
//!
//! ```text
//! N_n = D_{n-1}^p
//! D_n = N_{n-1}^p - N_{n-1} D_{n-1}^(p-1) + xi D_{n-1}^p
//! ```
//!
//! No common factor is cancelled; `gcd(N_n, D_n) = 1` is checked instead.

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::poly::Poly;

/// Default cap on `deg D_n = p^n`.
pub const DEFAULT_DEGREE_CAP: u128 = 10_000;

/// `g(X) = X^p - X + xi`.
pub fn artin_schreier(xi: &FieldElement) -> Poly {
    let ctx = xi.ctx();
    let x = Poly::x(ctx);
    &(&x.pow(ctx.p()) - &x) + &Poly::constant(xi)
}

/// `N_n / D_n` at index `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IterateFraction {
    pub n: usize,
    pub num: Poly,
    pub den: Poly,
}

impl IterateFraction {
    /// `(N_0, D_0) = (X, 1)`.
    pub fn identity(ctx: &FieldCtx) -> Self {
        IterateFraction {
            n: 0,
            num: Poly::x(ctx),
            den: Poly::one(ctx),
        }
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.num.ctx()
    }

    /// Compose once more with `1/g`.
    pub fn step(&self, xi: &FieldElement) -> Result<Self> {
        if xi.ctx() != self.ctx() {
            return Err(Error::CtxMismatch);
        }
        let p = self.ctx().p();
        let den_pm1 = self.den.pow(p - 1);
        let den_p = &den_pm1 * &self.den;
        let num = den_p.clone();
        let den = &(&self.num.pow(p) - &(&self.num * &den_pm1)) + &den_p.scale(xi)?;
        let n = self.n + 1;
        if !num.gcd(&den)?.is_one() {
            return Err(Error::GcdNotOne { n });
        }
        Ok(IterateFraction { n, num, den })
    }

    /// Evaluate `N_n(x) / D_n(x)` as a point of the projective line.
    pub fn eval(&self, x: &FieldElement) -> Result<ProjectivePoint> {
        let den = self.den.eval(x)?;
        if den.is_zero() {
            return Ok(ProjectivePoint::Infinity);
        }
        Ok(ProjectivePoint::Finite(self.num.eval(x)?.try_div(&den)?))
    }
}

fn check_cap(p: u64, n: usize, cap: u128) -> Result<()> {
    let degree = (p as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if degree > cap {
        return Err(Error::IterationTooLarge { n, degree, cap });
    }
    Ok(())
}

/// `(N_0, D_0), ..., (N_{n_max}, D_{n_max})`.
pub fn iterates(xi: &FieldElement, n_max: usize, cap: u128) -> Result<Vec<IterateFraction>> {
    check_cap(xi.ctx().p(), n_max, cap)?;
    let mut out = vec![IterateFraction::identity(xi.ctx())];
    for _ in 0..n_max {
        let next = out.last().unwrap().step(xi)?;
        out.push(next);
    }
    Ok(out)
}

/// The denominator `D_n` of the `n`-th iterate.
pub fn denominator(xi: &FieldElement, n: usize, cap: u128) -> Result<Poly> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be >= 1".into()));
    }
    Ok(iterates(xi, n, cap)?.pop().unwrap().den)
}

/// A point of `F_q ∪ {∞}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ProjectivePoint {
    Finite(FieldElement),
    Infinity,
}

/// `G(P)` with `G(∞) = 0` and `G(x) = ∞` when `g(x) = 0`.
pub fn apply_map(xi: &FieldElement, point: &ProjectivePoint) -> ProjectivePoint {
    match point {
        ProjectivePoint::Infinity => ProjectivePoint::Finite(xi.ctx().zero()),
        ProjectivePoint::Finite(x) => {
            let gx = &(&x.frobenius() - x) + xi;
            match gx.inv() {
                Ok(v) => ProjectivePoint::Finite(v),
                Err(_) => ProjectivePoint::Infinity,
            }
        }
    }
}

/// `G^(1)(∞), ..., G^(n_max)(∞)`.
pub fn forward_orbit_infinity(xi: &FieldElement, n_max: usize) -> Vec<ProjectivePoint> {
    let mut out = Vec::with_capacity(n_max);
    let mut cur = ProjectivePoint::Infinity;
    for _ in 0..n_max {
        cur = apply_map(xi, &cur);
        out.push(cur.clone());
    }
    out
}

/// Number of distinct preimages of `gamma` under `G` over the algebraic
/// closure: 1 for `gamma = 0` (the preimage is ∞), otherwise the number of
/// distinct roots of `g(X) - 1/gamma`.
pub fn preimage_count(xi: &FieldElement, gamma: &ProjectivePoint) -> Result<usize> {
    let ctx = xi.ctx();
    let g = artin_schreier(xi);
    let target = match gamma {
        ProjectivePoint::Finite(v) if v.is_zero() => return Ok(1),
        ProjectivePoint::Finite(v) => &g - &Poly::constant(&v.inv()?),
        ProjectivePoint::Infinity => g,
    };
    debug_assert_eq!(target.ctx(), ctx);
    // deg of the squarefree part; the derivative is the constant -1, never 0
    let d = target.derivative();
    let common = target.gcd(&d)?;
    Ok(target.degree().unwrap() - common.degree().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f9() -> FieldCtx {
        FieldCtx::galois(3, 2, Some(&[2, 2, 1])).unwrap()
    }

    #[test]
    fn first_step_is_g() {
        let k = f9();
        let w = k.root().unwrap();
        let it = IterateFraction::identity(&k).step(&w).unwrap();
        assert_eq!(it.num, Poly::one(&k));
        assert_eq!(it.den, artin_schreier(&w));
        assert_eq!(
            denominator(&w, 1, DEFAULT_DEGREE_CAP).unwrap(),
            artin_schreier(&w)
        );
    }

    #[test]
    fn second_denominator_matches_symbolic_form() {
        let k = f9();
        let w = k.root().unwrap();
        let g = artin_schreier(&w);
        // D_2 = 1 - g^2 + w g^3
        let expect = &(&Poly::one(&k) - &g.pow(2)) + &g.pow(3).scale(&w).unwrap();
        let d2 = denominator(&w, 2, DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(d2, expect);
        assert_eq!(d2.degree(), Some(9));
        assert_eq!(
            denominator(&w, 3, DEFAULT_DEGREE_CAP).unwrap().degree(),
            Some(27)
        );
    }

    #[test]
    fn degree_cap() {
        let k = FieldCtx::galois(5, 2, Some(&[2, 4, 1])).unwrap();
        let w = k.root().unwrap();
        assert!(matches!(
            denominator(&w, 8, DEFAULT_DEGREE_CAP),
            Err(Error::IterationTooLarge {
                n: 8,
                degree: 390_625,
                ..
            })
        ));
    }

    #[test]
    fn prime_field_second_denominator_irreducible() {
        let f3 = FieldCtx::prime(3).unwrap();
        let d2 = denominator(&f3.one(), 2, DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(d2.degree(), Some(9));
        assert!(d2.is_irreducible().unwrap());
    }

    #[test]
    fn orbit_of_infinity() {
        let k = f9();
        let w = k.root().unwrap();
        let orbit = forward_orbit_infinity(&w, 100);
        assert_eq!(orbit[0], ProjectivePoint::Finite(k.zero()));
        assert!(orbit.iter().all(|pt| *pt != ProjectivePoint::Infinity));
    }

    #[test]
    fn orbit_hits_infinity_for_some_trace_zero_xi() {
        let f4 = FieldCtx::galois(2, 2, None).unwrap();
        let hits = f4
            .elements()
            .filter(|xi| xi.abs_trace().is_zero())
            .filter(|xi| forward_orbit_infinity(xi, 20).contains(&ProjectivePoint::Infinity))
            .count();
        assert!(hits > 0);
    }

    #[test]
    fn preimage_counts() {
        let k = f9();
        let w = k.root().unwrap();
        assert_eq!(
            preimage_count(&w, &ProjectivePoint::Finite(k.zero())).unwrap(),
            1
        );
        assert_eq!(preimage_count(&w, &ProjectivePoint::Infinity).unwrap(), 3);
        for x in k.elements().skip(1) {
            assert_eq!(preimage_count(&w, &ProjectivePoint::Finite(x)).unwrap(), 3);
        }
    }

    #[test]
    fn evaluation_matches_functional_iteration() {
        let k = f9();
        let w = k.root().unwrap();
        let its = iterates(&w, 3, DEFAULT_DEGREE_CAP).unwrap();
        for x in k.elements() {
            let mut pt = ProjectivePoint::Finite(x.clone());
            for it in &its[1..] {
                pt = apply_map(&w, &pt);
                assert_eq!(it.eval(&x).unwrap(), pt);
            }
        }
    }
}
