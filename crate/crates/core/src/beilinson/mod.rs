//! Beilinson tables, the resolutions and monads read off them, and numerical
//! checks of those complexes.
//!
//! For a bundle `V` on `X = P^{n_1} x ... x P^{n_s}` the table entries are
//! `alpha_i^{a} = h^i(V(-ih) (x) G^{a})` with `G^{a} = Omega^{a_1}(a_1) ⊠ ...`.
//! When every column of the table for `V(-qh)` is concentrated in row `q`, the
//! Beilinson complex of `V(-qh)` has the term `O(-a)^{alpha_q^{a}}` in
//! cohomological degree `q - |a|`.

mod criteria;

pub use criteria::{evaluate_criteria, CriteriaReport, Criterion, CriterionReport, NamedCount};

use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::Serialize;

use crate::cohomology::{serialize_count, CohomologyVector};
use crate::error::{Error, Result};
use crate::sheaf::{BoxAtom, FormalSheaf, ProductRule};
use crate::variety::{CollectionIndex, SegreVeronese};

/// A column entry `h^k(V(-ih) (x) G^{a}) != 0` with `k != i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OffDiagonal {
    pub row: usize,
    pub index: CollectionIndex,
    pub cohomology: CohomologyVector,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlphaTable {
    pub variety: SegreVeronese,
    pub sheaf: FormalSheaf,
    pub rule: ProductRule,
    /// Column labels, ordered by weight.
    pub indices: Vec<CollectionIndex>,
    /// `entries[i][c] = alpha_i^{indices[c]}`, `i = 0..=d`.
    #[serde(serialize_with = "serialize_rows")]
    pub entries: Vec<Vec<BigUint>>,
    pub natural: bool,
    pub off_diagonal: Vec<OffDiagonal>,
}

fn serialize_rows<S: serde::Serializer>(rows: &[Vec<BigUint>], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(rows.len()))?;
    for row in rows {
        let v = CohomologyVector::from_dims(row.clone());
        seq.serialize_element(&v)?;
    }
    seq.end()
}

impl AlphaTable {
    pub fn d(&self) -> usize {
        self.variety.dim()
    }

    pub fn get(&self, row: usize, index: &[u32]) -> Option<&BigUint> {
        let c = self.indices.iter().position(|i| i.0 == index)?;
        self.entries.get(row).map(|r| &r[c])
    }

    /// `(index, alpha_row^{index})` for every index of the given weight.
    pub fn weight_slice(&self, row: usize, weight: u32) -> Vec<(CollectionIndex, BigUint)> {
        self.indices
            .iter()
            .zip(&self.entries[row])
            .filter(|(i, _)| i.weight() == weight)
            .map(|(i, v)| (i.clone(), v.clone()))
            .collect()
    }

    fn require_natural(&self) -> Result<()> {
        match self.off_diagonal.first() {
            None => Ok(()),
            Some(o) => {
                let degree = o
                    .cohomology
                    .support()
                    .into_iter()
                    .find(|&k| k != o.row)
                    .expect("off-diagonal entry");
                Err(Error::NotNatural {
                    row: o.row,
                    column: o.index.to_string(),
                    degree,
                    dim: o.cohomology.get(degree).to_string(),
                })
            }
        }
    }
}

/// Computes the full table and scans every column for naturality.
pub fn alpha_table(sheaf: &FormalSheaf, variety: &SegreVeronese, rule: ProductRule) -> Result<AlphaTable> {
    variety.check_sheaf(sheaf)?;
    let d = variety.dim();
    let collection = variety.dual_collection();
    let mut entries = vec![vec![BigUint::zero(); collection.len()]; d + 1];
    let mut off_diagonal = Vec::new();
    for (i, row) in entries.iter_mut().enumerate() {
        let shifted = sheaf.twist(&variety.polarization(-(i as i64)));
        for (c, entry) in collection.iter().enumerate() {
            let h = shifted.tensor_cohomology(&entry.atom, rule)?;
            row[c] = h.get(i).clone();
            if h.support().iter().any(|&k| k != i) {
                off_diagonal.push(OffDiagonal {
                    row: i,
                    index: entry.index.clone(),
                    cohomology: h,
                });
            }
        }
    }
    Ok(AlphaTable {
        variety: variety.clone(),
        sheaf: sheaf.clone(),
        rule,
        indices: collection.into_iter().map(|e| e.index).collect(),
        entries,
        natural: off_diagonal.is_empty(),
        off_diagonal,
    })
}

/// `⊕ O(-a)^{mult}` over the indices of one weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexTerm {
    pub weight: u32,
    /// Cohomological degree; `V(-qh)` sits in degree 0.
    pub degree: i64,
    pub summands: Vec<Summand>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summand {
    pub index: CollectionIndex,
    #[serde(serialize_with = "serialize_count")]
    pub multiplicity: BigUint,
}

impl ComplexTerm {
    pub fn rank(&self) -> BigUint {
        self.summands.iter().map(|s| &s.multiplicity).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }
}

impl fmt::Display for ComplexTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .summands
            .iter()
            .map(|s| {
                let twist: Vec<String> = s.index.line_twist().iter().map(i64::to_string).collect();
                let mut out = format!("O({})", twist.join(","));
                if s.multiplicity != BigUint::from(1u32) {
                    out.push_str(&format!("^{}", s.multiplicity));
                }
                out
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

fn term(table: &AlphaTable, q: usize, weight: u32) -> ComplexTerm {
    let summands = table
        .weight_slice(q, weight)
        .into_iter()
        .filter(|(_, m)| !m.is_zero())
        .map(|(index, multiplicity)| Summand { index, multiplicity })
        .collect();
    ComplexTerm {
        weight,
        degree: q as i64 - i64::from(weight),
        summands,
    }
}

/// The Beilinson complex of `V(-qh)`, every weight included, zero terms kept.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BeilinsonComplex {
    pub variety: SegreVeronese,
    pub q: usize,
    /// `V(-qh)`.
    pub target: FormalSheaf,
    /// Ordered by increasing degree.
    pub terms: Vec<ComplexTerm>,
}

impl BeilinsonComplex {
    fn from_table(table: &AlphaTable, q: usize) -> Result<Self> {
        let d = table.d();
        if q > d {
            return Err(Error::QOutOfRange { q, d });
        }
        table.require_natural()?;
        let terms = (0..=d as u32).rev().map(|w| term(table, q, w)).collect();
        Ok(BeilinsonComplex {
            variety: table.variety.clone(),
            q,
            target: table.sheaf.twist(&table.variety.polarization(-(q as i64))),
            terms,
        })
    }

    /// `sum_terms (-1)^degree rank`, which must equal `rank(V)`.
    pub fn rank_sum(&self) -> BigInt {
        self.terms.iter().fold(BigInt::zero(), |acc, t| {
            let r = BigInt::from(t.rank());
            if t.degree.rem_euclid(2) == 0 {
                acc + r
            } else {
                acc - r
            }
        })
    }

    /// `sum_terms (-1)^degree chi(term(th))`.
    pub fn euler_characteristic_at(&self, t: i64) -> BigInt {
        let dims = self.variety.dims();
        let shift = self.variety.polarization(t);
        self.terms.iter().fold(BigInt::zero(), |acc, term| {
            let chi = term.summands.iter().fold(BigInt::zero(), |acc, s| {
                let twist: Vec<i64> = s.index.line_twist().iter().zip(&shift).map(|(a, b)| a + b).collect();
                let atom = BoxAtom::line(dims, &twist).expect("dims match");
                acc + atom.cohomology().euler_characteristic() * BigInt::from(s.multiplicity.clone())
            });
            if term.degree.rem_euclid(2) == 0 {
                acc + chi
            } else {
                acc - chi
            }
        })
    }

    fn verify_rank(&self) -> Result<()> {
        let expected = BigInt::from(self.target.rank());
        let got = self.rank_sum();
        if got == expected {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                expected: expected.to_string(),
                got: got.to_string(),
            })
        }
    }
}

/// Where `V(-qh)` sits in a resolution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TargetSide {
    /// `... -> T_{-1} -> T_0 -> V(-qh) -> 0`
    Cokernel,
    /// `0 -> V(-qh) -> T_0 -> T_1 -> ...`
    Kernel,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Resolution {
    pub q: usize,
    pub side: TargetSide,
    /// Nonzero terms in complex order.
    pub terms: Vec<ComplexTerm>,
    #[serde(skip)]
    pub complex: BeilinsonComplex,
}

impl fmt::Display for Resolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let target = target_label(self.q);
        let mut parts = vec!["0".to_string()];
        if self.side == TargetSide::Kernel {
            parts.push(target.clone());
        }
        parts.extend(self.terms.iter().map(ToString::to_string));
        if self.side == TargetSide::Cokernel {
            parts.push(target);
        }
        parts.push("0".into());
        f.write_str(&parts.join(" -> "))
    }
}

fn target_label(q: usize) -> String {
    if q == 0 {
        "V".into()
    } else {
        format!("V(-{q}h)")
    }
}

/// The resolution of `V(-qh)` by sums of `O(-a)`, available when all nonzero
/// terms lie on one side of degree 0 (always the case for `q = 0, 1, d` when
/// `V` is Ulrich).
pub fn build_resolution(table: &AlphaTable, q: usize) -> Result<Resolution> {
    let complex = BeilinsonComplex::from_table(table, q)?;
    let nonzero: Vec<ComplexTerm> = complex.terms.iter().filter(|t| !t.is_zero()).cloned().collect();
    let left = nonzero.iter().any(|t| t.degree < 0);
    let right = nonzero.iter().any(|t| t.degree > 0);
    let side = match (left, right) {
        (true, true) => return Err(Error::NotAResolution { q }),
        (false, true) => TargetSide::Kernel,
        _ => TargetSide::Cokernel,
    };
    complex.verify_rank()?;
    Ok(Resolution {
        q,
        side,
        terms: nonzero,
        complex,
    })
}

/// `0 -> B_1 -> M -> B_2 -> 0` with `V(-qh)` as its homology.
///
/// `b1_chain` lists weights `d, ..., q+1` (the resolution of `B_1`), `middle`
/// is weight `q` and `b2_chain` lists weights `q-1, ..., 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonadShape {
    pub q: usize,
    pub b1_chain: Vec<ComplexTerm>,
    pub middle: ComplexTerm,
    pub b2_chain: Vec<ComplexTerm>,
    #[serde(skip)]
    pub complex: BeilinsonComplex,
}

impl MonadShape {
    /// Both chains vanish, so `V(-qh)` is the middle term itself.
    pub fn is_split(&self) -> bool {
        self.b1_chain.iter().all(ComplexTerm::is_zero) && self.b2_chain.iter().all(ComplexTerm::is_zero)
    }
}

impl fmt::Display for MonadShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let chain = |c: &[ComplexTerm]| {
            let parts: Vec<String> = c.iter().filter(|t| !t.is_zero()).map(ToString::to_string).collect();
            if parts.is_empty() {
                "0".to_string()
            } else {
                parts.join(" -> ")
            }
        };
        writeln!(f, "B1: {}", chain(&self.b1_chain))?;
        writeln!(f, "M:  {}", self.middle)?;
        writeln!(f, "B2: {}", chain(&self.b2_chain))?;
        write!(f, "H:  {}", target_label(self.q))
    }
}

pub fn build_monad(table: &AlphaTable, q: usize) -> Result<MonadShape> {
    let complex = BeilinsonComplex::from_table(table, q)?;
    complex.verify_rank()?;
    let mut b1_chain = Vec::new();
    let mut b2_chain = Vec::new();
    let mut middle = None;
    for t in &complex.terms {
        match t.degree {
            0 => middle = Some(t.clone()),
            x if x < 0 => b1_chain.push(t.clone()),
            _ => b2_chain.push(t.clone()),
        }
    }
    Ok(MonadShape {
        q,
        b1_chain,
        middle: middle.expect("weight q is in range"),
        b2_chain,
        complex,
    })
}

pub fn default_probe_window(variety: &SegreVeronese) -> RangeInclusive<i64> {
    let d = variety.dim() as i64;
    -d - 2..=d + 2
}

/// Twists `t` in `window` where the alternating Euler characteristic of the
/// complex differs from `chi(V(-qh)(th))`.
pub fn chi_defects(complex: &BeilinsonComplex, window: RangeInclusive<i64>) -> Vec<i64> {
    window
        .filter(|&t| {
            let expected = complex.target.twist(&complex.variety.polarization(t)).euler_characteristic();
            complex.euler_characteristic_at(t) != expected
        })
        .collect()
}

pub fn chi_consistency(complex: &BeilinsonComplex, window: RangeInclusive<i64>) -> bool {
    chi_defects(complex, window).is_empty()
}
