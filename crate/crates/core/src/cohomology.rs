use std::fmt;
use std::ops::AddAssign;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

/// Dimensions `h^0, ..., h^d` of a sheaf on a `d`-dimensional variety.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CohomologyVector(Vec<BigUint>);

impl CohomologyVector {
    pub fn zeros(dim: usize) -> Self {
        CohomologyVector(vec![BigUint::zero(); dim + 1])
    }

    pub fn from_dims(dims: Vec<BigUint>) -> Self {
        assert!(!dims.is_empty(), "a cohomology vector has at least h^0");
        CohomologyVector(dims)
    }

    /// Vector with a single nonzero entry `value` in degree `degree`.
    pub fn concentrated(dim: usize, degree: usize, value: BigUint) -> Self {
        let mut v = Self::zeros(dim);
        v.0[degree] = value;
        v
    }

    pub fn dims(&self) -> &[BigUint] {
        &self.0
    }

    /// Dimension of the underlying variety.
    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn get(&self, degree: usize) -> &BigUint {
        &self.0[degree]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Degrees with a nonzero entry.
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| !self.0[i].is_zero()).collect()
    }

    pub fn euler_characteristic(&self) -> BigInt {
        self.0.iter().enumerate().fold(BigInt::zero(), |acc, (i, h)| {
            let h = BigInt::from(h.clone());
            if i % 2 == 0 {
                acc + h
            } else {
                acc - h
            }
        })
    }

    pub fn reversed(&self) -> Self {
        CohomologyVector(self.0.iter().rev().cloned().collect())
    }

    pub fn scaled(&self, by: &BigUint) -> Self {
        CohomologyVector(self.0.iter().map(|h| h * by).collect())
    }

    /// Künneth product: `(a * b)^i = sum_{i1 + i2 = i} a^{i1} b^{i2}`.
    pub fn kunneth(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.dim() + other.dim());
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                if !b.is_zero() {
                    out.0[i + j] += a * b;
                }
            }
        }
        out
    }
}

impl AddAssign<&CohomologyVector> for CohomologyVector {
    fn add_assign(&mut self, rhs: &CohomologyVector) {
        assert_eq!(self.0.len(), rhs.0.len(), "cohomology vectors of different length");
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl fmt::Display for CohomologyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, h) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{h}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for CohomologyVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for h in &self.0 {
            seq.serialize_element(&ExactCount(h))?;
        }
        seq.end()
    }
}

/// Serializes a count as a JSON integer when it fits in `u64`, otherwise as a
/// decimal string. Either way the value is never rounded.
pub struct ExactCount<'a>(pub &'a BigUint);

impl Serialize for ExactCount<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match u64::try_from(self.0) {
            Ok(v) => serializer.serialize_u64(v),
            Err(_) => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

/// Signed counterpart of [`ExactCount`].
pub struct ExactSigned<'a>(pub &'a BigInt);

impl Serialize for ExactSigned<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match i64::try_from(self.0) {
            Ok(v) => serializer.serialize_i64(v),
            Err(_) => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

pub(crate) fn serialize_count<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    ExactCount(v).serialize(s)
}

pub(crate) fn serialize_signed<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    ExactSigned(v).serialize(s)
}
