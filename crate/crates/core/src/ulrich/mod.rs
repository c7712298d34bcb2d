//! Ulrich verification and the searches built on it.
//!
//! A bundle `V` on a `d`-dimensional Segre-Veronese variety is Ulrich when
//! `V(-th)` is acyclic for `t = 1, ..., d`. Such a bundle has exactly
//! `rank(V) * deg(X)` global sections, which the certificate records next to
//! the vanishing table.

mod classify;
mod pullback;
mod regularity;

pub use classify::{
    classify_ulrich_lines, classify_ulrich_omega_atoms, classify_ulrich_omega_boxes,
    AtomClassification, LineClassification, OmegaBox, OmegaBoxClassification,
};
pub use pullback::{pullback_ulrich, Pullback, ShiftSide, VeroneseBundle};
pub use regularity::{verify_regularity, RegularityFamily, RegularityReport, RegularityViolation};

use num_bigint::BigUint;
use serde::Serialize;

use crate::cohomology::serialize_count;
use crate::error::{Error, Result};
use crate::sheaf::{CohomologyVector, FormalSheaf};
use crate::variety::SegreVeronese;

/// A nonvanishing `h^degree(V(-twist h)) = dim` that rules out Ulrich.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub twist: i64,
    pub degree: usize,
    #[serde(serialize_with = "serialize_count")]
    pub dim: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UlrichCertificate {
    pub verdict: bool,
    /// First nonzero entry in `(t, i)` order, if any.
    pub witness: Option<Witness>,
    /// `table[t - 1]` is the cohomology of `V(-th)`, `t = 1..=d`.
    pub table: Vec<CohomologyVector>,
    #[serde(serialize_with = "serialize_count")]
    pub h0: BigUint,
    #[serde(serialize_with = "serialize_count")]
    pub degree_rank_product: BigUint,
}

impl UlrichCertificate {
    /// `h^0(V) = rank(V) deg(X)`; holds for every Ulrich bundle.
    pub fn generator_count_matches(&self) -> bool {
        self.h0 == self.degree_rank_product
    }

    pub(crate) fn into_error(self) -> Error {
        match self.witness {
            Some(w) => Error::NotUlrich {
                twist: -w.twist,
                degree: w.degree,
                dim: w.dim.to_string(),
            },
            None => Error::Precondition("sheaf is zero".into()),
        }
    }
}

pub fn is_ulrich(sheaf: &FormalSheaf, variety: &SegreVeronese) -> Result<UlrichCertificate> {
    variety.check_sheaf(sheaf)?;
    let d = variety.dim();
    let mut table = Vec::with_capacity(d);
    let mut witness = None;
    for t in 1..=d as i64 {
        let h = sheaf.twist(&variety.polarization(-t)).kunneth_cohomology();
        if witness.is_none() {
            if let Some(i) = h.support().first() {
                witness = Some(Witness {
                    twist: t,
                    degree: *i,
                    dim: h.get(*i).clone(),
                });
            }
        }
        table.push(h);
    }
    let h0 = sheaf.kunneth_cohomology().get(0).clone();
    Ok(UlrichCertificate {
        // the zero sheaf is not a bundle
        verdict: witness.is_none() && !sheaf.is_zero(),
        witness,
        table,
        h0,
        degree_rank_product: sheaf.rank() * variety.degree(),
    })
}

/// Like [`is_ulrich`] but fails with the witness when the verdict is negative.
pub fn require_ulrich(sheaf: &FormalSheaf, variety: &SegreVeronese) -> Result<UlrichCertificate> {
    let cert = is_ulrich(sheaf, variety)?;
    if cert.verdict {
        Ok(cert)
    } else {
        Err(cert.into_error())
    }
}
