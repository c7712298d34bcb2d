//! Cohomology of twisted exterior powers of the cotangent bundle on `P^n`.
//!
//! `H^q(P^n, Omega^p(t))` is nonzero in at most one degree:
//!
//! * `t > p`: `h^0 = C(t+n-p, t) * C(t-1, p)`
//! * `t = 0`: `h^p = 1`
//! * `t < p-n`: `h^n = C(p-t, -t) * C(-t-1, n-p)`
//!
//! and zero otherwise. In particular `Omega^p(t)` is acyclic exactly for
//! `p-n <= t <= p`, `t != 0`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::cohomology::CohomologyVector;
use crate::error::{Error, Result};
use crate::exactcomb::{binom, binom_i};

/// `Omega^p_{P^n}(t)`. `Omega^0 = O` and `Omega^n(n) = O(-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FactorSheaf {
    n: u32,
    p: u32,
    t: i64,
}

impl FactorSheaf {
    pub fn new(n: u32, p: u32, t: i64) -> Result<Self> {
        if n == 0 || p > n {
            return Err(Error::InvalidFactor { n, p });
        }
        Ok(FactorSheaf { n, p, t })
    }

    /// The line bundle `O(t)` on `P^n`.
    pub fn line(n: u32, t: i64) -> Result<Self> {
        Self::new(n, 0, t)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn t(&self) -> i64 {
        self.t
    }

    pub fn rank(&self) -> BigUint {
        binom(u64::from(self.n), i64::from(self.p))
    }

    pub fn is_line_bundle(&self) -> bool {
        self.p == 0 || self.p == self.n
    }

    /// If this is a line bundle, its degree (`Omega^n(t) = O(t-n-1)`).
    pub fn line_degree(&self) -> Option<i64> {
        if self.p == 0 {
            Some(self.t)
        } else if self.p == self.n {
            Some(self.t - i64::from(self.n) - 1)
        } else {
            None
        }
    }

    /// Same sheaf with line bundles written as `O(t)`.
    pub fn normalized(self) -> Self {
        match self.line_degree() {
            Some(t) if self.p != 0 => FactorSheaf { n: self.n, p: 0, t },
            _ => self,
        }
    }

    pub fn twisted(self, by: i64) -> Self {
        FactorSheaf {
            t: self.t + by,
            ..self
        }
    }
}

impl fmt::Display for FactorSheaf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p == 0 {
            write!(f, "O({})", self.t)
        } else {
            write!(f, "Om(a={};t={})", self.p, self.t)
        }
    }
}

/// The unique nonzero entry of the Bott cohomology, if any, as `(degree, dim)`.
pub fn bott_support(f: &FactorSheaf) -> Option<(usize, BigUint)> {
    let n = i64::from(f.n);
    let p = i64::from(f.p);
    let t = f.t;
    if t > p {
        Some((0, binom_i(t + n - p, t) * binom_i(t - 1, p)))
    } else if t == 0 {
        Some((f.p as usize, BigUint::one()))
    } else if t < p - n {
        Some((f.n as usize, binom_i(p - t, -t) * binom_i(-t - 1, n - p)))
    } else {
        None
    }
}

pub fn is_acyclic(f: &FactorSheaf) -> bool {
    bott_support(f).is_none()
}

/// Full vector `h^0 .. h^n` of `Omega^p_{P^n}(t)`.
pub fn bott_cohomology(f: &FactorSheaf) -> CohomologyVector {
    match bott_support(f) {
        Some((q, h)) => CohomologyVector::concentrated(f.n as usize, q, h),
        None => CohomologyVector::zeros(f.n as usize),
    }
}

/// `Omega^{n-p}(-t)`, whose cohomology is the reverse of `f`'s.
pub fn serre_dual(f: &FactorSheaf) -> FactorSheaf {
    FactorSheaf {
        n: f.n,
        p: f.n - f.p,
        t: -f.t,
    }
}
