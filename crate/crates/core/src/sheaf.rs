//! Box products of twisted cotangent powers, formal direct sums of them, and
//! their cohomology via Künneth.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use serde::{Serialize, Serializer};

use crate::bott::{bott_cohomology, is_acyclic, FactorSheaf};
pub use crate::cohomology::CohomologyVector;
use crate::error::{Error, Result};
use crate::schur::omega_product_cohomology;

/// `Omega^{p_1}(t_1) ⊠ ... ⊠ Omega^{p_s}(t_s)` on `P^{n_1} x ... x P^{n_s}`.
///
/// Factors that are line bundles are stored as `O(t)`, so `Omega^n(n)` and
/// `O(-1)` give the same atom.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoxAtom {
    factors: Vec<FactorSheaf>,
}

impl BoxAtom {
    pub fn new(factors: Vec<FactorSheaf>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Precondition("a box atom needs at least one factor".into()));
        }
        Ok(BoxAtom {
            factors: factors.into_iter().map(FactorSheaf::normalized).collect(),
        })
    }

    /// `O(c_1, ..., c_s)`.
    pub fn line(dims: &[u32], twist: &[i64]) -> Result<Self> {
        if dims.len() != twist.len() {
            return Err(Error::TwistLength {
                expected: dims.len(),
                got: twist.len(),
            });
        }
        let factors = dims
            .iter()
            .zip(twist)
            .map(|(&n, &t)| FactorSheaf::line(n, t))
            .collect::<Result<Vec<_>>>()?;
        Self::new(factors)
    }

    /// `Omega^{a_1}(a_1) ⊠ ... ⊠ Omega^{a_s}(a_s)`.
    pub fn dual_generator(dims: &[u32], a: &[u32]) -> Result<Self> {
        let factors = dims
            .iter()
            .zip(a)
            .map(|(&n, &ai)| FactorSheaf::new(n, ai, i64::from(ai)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(factors)
    }

    pub fn factors(&self) -> &[FactorSheaf] {
        &self.factors
    }

    pub fn dims(&self) -> Vec<u32> {
        self.factors.iter().map(FactorSheaf::n).collect()
    }

    pub fn rank(&self) -> BigUint {
        self.factors.iter().map(FactorSheaf::rank).product()
    }

    pub fn is_line_bundle(&self) -> bool {
        self.factors.iter().all(FactorSheaf::is_line_bundle)
    }

    /// The twist tuple if every factor is a line bundle.
    pub fn line_degrees(&self) -> Option<Vec<i64>> {
        self.factors.iter().map(FactorSheaf::line_degree).collect()
    }

    pub fn twisted(&self, c: &[i64]) -> BoxAtom {
        assert_eq!(c.len(), self.factors.len(), "twist length differs from number of factors");
        BoxAtom {
            factors: self
                .factors
                .iter()
                .zip(c)
                .map(|(f, &ci)| f.twisted(ci))
                .collect(),
        }
    }

    /// External product with another atom (factors appended).
    pub fn boxprod(&self, other: &BoxAtom) -> BoxAtom {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        BoxAtom { factors }
    }

    /// Acyclic iff at least one factor is acyclic.
    pub fn is_acyclic(&self) -> bool {
        self.factors.iter().any(is_acyclic)
    }

    pub fn cohomology(&self) -> CohomologyVector {
        let mut iter = self.factors.iter();
        let first = bott_cohomology(iter.next().expect("atoms are nonempty"));
        iter.fold(first, |acc, f| acc.kunneth(&bott_cohomology(f)))
    }

    /// Cohomology of `self (x) other`.
    pub fn tensor_cohomology(&self, other: &BoxAtom, rule: ProductRule) -> Result<CohomologyVector> {
        if self.factors.len() != other.factors.len() {
            return Err(Error::ArityMismatch {
                expected: self.factors.len(),
                got: other.factors.len(),
            });
        }
        let mut acc: Option<CohomologyVector> = None;
        for (index, (f, g)) in self.factors.iter().zip(&other.factors).enumerate() {
            if f.n() != g.n() {
                return Err(Error::DimensionMismatch {
                    index,
                    expected: f.n(),
                    got: g.n(),
                });
            }
            let v = factor_product_cohomology(index, f, g, rule)?;
            acc = Some(match acc {
                None => v,
                Some(a) => a.kunneth(&v),
            });
        }
        Ok(acc.expect("atoms are nonempty"))
    }
}

fn factor_product_cohomology(
    index: usize,
    f: &FactorSheaf,
    g: &FactorSheaf,
    rule: ProductRule,
) -> Result<CohomologyVector> {
    if let Some(c) = g.line_degree() {
        return Ok(bott_cohomology(&f.twisted(c)));
    }
    if let Some(c) = f.line_degree() {
        return Ok(bott_cohomology(&g.twisted(c)));
    }
    match rule {
        ProductRule::Strict => Err(Error::NotRepresentable {
            factor: index,
            p: f.p(),
            q: g.p(),
        }),
        ProductRule::Schur => Ok(omega_product_cohomology(f.n(), f.p(), f.t(), g.p(), g.t())),
    }
}

impl fmt::Display for BoxAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

impl Serialize for BoxAtom {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// How to evaluate `Omega^p(t) (x) Omega^q(s)` on a factor when both `p` and
/// `q` are strictly between `0` and `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductRule {
    /// Refuse: the product is not an atom.
    #[default]
    Strict,
    /// Decompose with Pieri and evaluate each summand with Borel-Weil-Bott.
    Schur,
}

/// A finite direct sum of box atoms with multiplicities, in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FormalSheaf {
    dims: Vec<u32>,
    terms: BTreeMap<BoxAtom, u64>,
}

impl FormalSheaf {
    /// The zero sheaf on `P^{n_1} x ... x P^{n_s}`.
    pub fn zero(dims: &[u32]) -> Self {
        FormalSheaf {
            dims: dims.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn from_atom(atom: BoxAtom) -> Self {
        Self::from_terms(&atom.dims(), [(atom, 1)]).expect("dims taken from the atom")
    }

    pub fn line(dims: &[u32], twist: &[i64]) -> Result<Self> {
        Ok(Self::from_atom(BoxAtom::line(dims, twist)?))
    }

    pub fn from_terms(dims: &[u32], terms: impl IntoIterator<Item = (BoxAtom, u64)>) -> Result<Self> {
        let mut sheaf = Self::zero(dims);
        for (atom, mult) in terms {
            sheaf.add_atom(atom, mult)?;
        }
        Ok(sheaf)
    }

    fn add_atom(&mut self, atom: BoxAtom, mult: u64) -> Result<()> {
        if atom.factors.len() != self.dims.len() {
            return Err(Error::ArityMismatch {
                expected: self.dims.len(),
                got: atom.factors.len(),
            });
        }
        for (index, (f, &n)) in atom.factors.iter().zip(&self.dims).enumerate() {
            if f.n() != n {
                return Err(Error::DimensionMismatch {
                    index,
                    expected: n,
                    got: f.n(),
                });
            }
        }
        if mult > 0 {
            *self.terms.entry(atom).or_insert(0) += mult;
        }
        Ok(())
    }

    pub fn direct_sum(&self, other: &FormalSheaf) -> Result<FormalSheaf> {
        let mut out = self.clone();
        for (atom, &m) in &other.terms {
            out.add_atom(atom.clone(), m)?;
        }
        Ok(out)
    }

    /// `self ⊠ other` on the product of the two ambient spaces.
    pub fn boxprod(&self, other: &FormalSheaf) -> FormalSheaf {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        let mut out = FormalSheaf::zero(&dims);
        for (a, &ma) in &self.terms {
            for (b, &mb) in &other.terms {
                *out.terms.entry(a.boxprod(b)).or_insert(0) += ma * mb;
            }
        }
        out
    }

    pub fn dims(&self) -> &[u32] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().map(|&n| n as usize).sum()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BoxAtom, u64)> {
        self.terms.iter().map(|(a, &m)| (a, m))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The single atom when the sheaf is one atom with multiplicity one.
    pub fn as_atom(&self) -> Option<&BoxAtom> {
        match self.terms.iter().next() {
            Some((a, 1)) if self.terms.len() == 1 => Some(a),
            _ => None,
        }
    }

    pub fn is_sum_of_line_bundles(&self) -> bool {
        self.terms.keys().all(BoxAtom::is_line_bundle)
    }

    pub fn rank(&self) -> BigUint {
        self.terms
            .iter()
            .map(|(a, &m)| a.rank() * m)
            .sum()
    }

    /// Twist every atom by `O(c_1, ..., c_s)`.
    pub fn twist(&self, c: &[i64]) -> FormalSheaf {
        let mut out = FormalSheaf::zero(&self.dims);
        for (a, &m) in &self.terms {
            *out.terms.entry(a.twisted(c)).or_insert(0) += m;
        }
        out
    }

    pub fn kunneth_cohomology(&self) -> CohomologyVector {
        let mut total = CohomologyVector::zeros(self.dim());
        for (a, &m) in &self.terms {
            total += &a.cohomology().scaled(&BigUint::from(m));
        }
        total
    }

    pub fn euler_characteristic(&self) -> BigInt {
        self.kunneth_cohomology().euler_characteristic()
    }

    /// Cohomology of `self (x) atom`.
    pub fn tensor_cohomology(&self, atom: &BoxAtom, rule: ProductRule) -> Result<CohomologyVector> {
        if atom.dims() != self.dims {
            return Err(Error::Precondition(format!(
                "cannot tensor a sheaf on {:?} with an atom on {:?}",
                self.dims,
                atom.dims()
            )));
        }
        let mut total = CohomologyVector::zeros(self.dim());
        for (a, &m) in &self.terms {
            total += &a.tensor_cohomology(atom, rule)?.scaled(&BigUint::from(m));
        }
        Ok(total)
    }

    /// True when `self (x) atom` can be evaluated under [`ProductRule::Strict`].
    pub fn tensor_is_representable(&self, atom: &BoxAtom) -> bool {
        self.terms.keys().all(|a| {
            a.factors
                .iter()
                .zip(&atom.factors)
                .all(|(f, g)| f.is_line_bundle() || g.is_line_bundle())
        })
    }
}

impl fmt::Display for FormalSheaf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (atom, &m)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m != 1 {
                write!(f, "{m}*")?;
            }
            write!(f, "{atom}")?;
        }
        Ok(())
    }
}

impl Serialize for FormalSheaf {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
