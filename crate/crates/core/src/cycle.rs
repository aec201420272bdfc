//! Brent's cycle detection for eventually periodic sequences `x_{i+1} = f(x_i)`.

use serde::{Deserialize, Serialize};

/// Rho shape of the sequence started at `x_0`: `x_{mu+k} = x_{mu+lambda+k}`
/// for all `k >= 0`, with `mu` and `lambda >= 1` minimal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rho {
    pub preperiod: usize,
    pub period: usize,
    /// Number of calls to the successor function.
    pub evaluations: usize,
}

/// Runs Brent's algorithm. The successor may fail, in which case the error
/// is returned as soon as it occurs.
pub fn brent<T, E>(start: T, mut next: impl FnMut(&T) -> Result<T, E>) -> Result<Rho, E>
where
    T: Clone + PartialEq,
{
    let mut evaluations = 0;
    let mut step = |x: &T, evals: &mut usize| {
        *evals += 1;
        next(x)
    };

    let mut power = 1;
    let mut lambda = 1;
    let mut tortoise = start.clone();
    let mut hare = step(&start, &mut evaluations)?;
    while tortoise != hare {
        if power == lambda {
            tortoise = hare.clone();
            power *= 2;
            lambda = 0;
        }
        hare = step(&hare, &mut evaluations)?;
        lambda += 1;
    }

    let mut tortoise = start.clone();
    let mut hare = start;
    for _ in 0..lambda {
        hare = step(&hare, &mut evaluations)?;
    }
    let mut mu = 0;
    while tortoise != hare {
        tortoise = step(&tortoise, &mut evaluations)?;
        hare = step(&hare, &mut evaluations)?;
        mu += 1;
    }

    Ok(Rho {
        preperiod: mu,
        period: lambda,
        evaluations,
    })
}
