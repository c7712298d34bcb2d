//! Regularity vanishings of Ulrich bundles on products of projective spaces.
//!
//! For `V` Ulrich, `i` the cohomological degree and any subset `S` of the
//! factors (in any order), the following vanish:
//!
//! * `h^i(V(-ih) (x) B) = 0` for `i > 0`, where `B` carries
//!   `Omega^{a_r}(a_r + 1 + j_r)` on the factors in `S` and `O(j_r)` elsewhere,
//!   all `j_r >= 0`;
//! * `h^i(V(-(i+1)h) (x) B) = 0` for `i < d`, where `B` carries
//!   `Omega^{a_r}(a_r + j_r)` on `S` and `O(j_r)` elsewhere, all `j_r <= 0`.
//!
//! `S` empty gives the two line-bundle regularity statements. The checks run
//! over the finite grid `|j_r| <= J`.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use super::require_ulrich;
use crate::bott::FactorSheaf;
use crate::cohomology::serialize_count;
use crate::error::Result;
use crate::sheaf::{BoxAtom, FormalSheaf, ProductRule};
use crate::variety::SegreVeronese;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RegularityFamily {
    /// `h^i(V(-ih)(j)) = 0`, `j >= 0`
    PositiveLines,
    /// `h^i(V(-(i+1)h)(j)) = 0`, `j <= 0`
    NegativeLines,
    /// `h^i(V(-ih) (x) Omega^a(a+1+j) ⊠ O(j')) = 0`
    PositiveOmega,
    /// `h^i(V(-(i+1)h) (x) Omega^a(a+j) ⊠ O(j')) = 0`
    NegativeOmega,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularityViolation {
    pub family: RegularityFamily,
    pub degree: usize,
    /// The multiple of `h` subtracted from `V`.
    pub shift: i64,
    pub tensor: BoxAtom,
    #[serde(serialize_with = "serialize_count")]
    pub dim: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    pub variety: SegreVeronese,
    pub sheaf: FormalSheaf,
    pub grid: u32,
    pub checks: usize,
    pub violations: Vec<RegularityViolation>,
    pub passed: bool,
}

/// Enumerates `(family, tensor atom)` pairs for one sign.
fn tensors(variety: &SegreVeronese, grid: i64, positive: bool) -> BTreeSet<(RegularityFamily, BoxAtom)> {
    let dims = variety.dims();
    let s = dims.len();
    let sign = if positive { 1 } else { -1 };
    let mut out = BTreeSet::new();
    for subset in 0u32..(1 << s) {
        // per factor: list of (p, twist offset) choices
        let choices: Vec<Vec<(u32, i64)>> = dims
            .iter()
            .enumerate()
            .map(|(r, &n)| {
                if subset & (1 << r) != 0 {
                    (0..=n)
                        .map(|a| (a, i64::from(a) + if positive { 1 } else { 0 }))
                        .collect()
                } else {
                    vec![(0, 0)]
                }
            })
            .collect();
        let family = match (subset == 0, positive) {
            (true, true) => RegularityFamily::PositiveLines,
            (true, false) => RegularityFamily::NegativeLines,
            (false, true) => RegularityFamily::PositiveOmega,
            (false, false) => RegularityFamily::NegativeOmega,
        };
        let mut idx = vec![0usize; s];
        let mut js = vec![0i64; s];
        loop {
            let factors: Vec<FactorSheaf> = (0..s)
                .map(|r| {
                    let (p, base) = choices[r][idx[r]];
                    FactorSheaf::new(dims[r], p, base + sign * js[r]).expect("p <= n")
                })
                .collect();
            out.insert((family, BoxAtom::new(factors).expect("nonempty")));
            if !advance(&mut idx, &mut js, &choices, grid) {
                break;
            }
        }
    }
    out
}

fn advance(idx: &mut [usize], js: &mut [i64], choices: &[Vec<(u32, i64)>], grid: i64) -> bool {
    for r in (0..idx.len()).rev() {
        js[r] += 1;
        if js[r] <= grid {
            return true;
        }
        js[r] = 0;
        idx[r] += 1;
        if idx[r] < choices[r].len() {
            return true;
        }
        idx[r] = 0;
    }
    false
}

/// Checks every vanishing above on the grid `0 <= |j_r| <= grid`.
///
/// Fails when `sheaf` is not Ulrich on `variety`, or when a tensor product
/// cannot be evaluated under `rule`.
pub fn verify_regularity(
    sheaf: &FormalSheaf,
    variety: &SegreVeronese,
    grid: u32,
    rule: ProductRule,
) -> Result<RegularityReport> {
    require_ulrich(sheaf, variety)?;
    let d = variety.dim();
    let grid = i64::from(grid);
    let mut checks = 0usize;
    let mut violations = Vec::new();

    for (family, tensor) in tensors(variety, grid, true) {
        for i in 1..=d {
            let shifted = sheaf.twist(&variety.polarization(-(i as i64)));
            let h = shifted.tensor_cohomology(&tensor, rule)?;
            checks += 1;
            if !h.get(i).is_zero() {
                violations.push(RegularityViolation {
                    family,
                    degree: i,
                    shift: -(i as i64),
                    tensor: tensor.clone(),
                    dim: h.get(i).clone(),
                });
            }
        }
    }
    for (family, tensor) in tensors(variety, grid, false) {
        for i in 0..d {
            let shift = -(i as i64) - 1;
            let shifted = sheaf.twist(&variety.polarization(shift));
            let h = shifted.tensor_cohomology(&tensor, rule)?;
            checks += 1;
            if !h.get(i).is_zero() {
                violations.push(RegularityViolation {
                    family,
                    degree: i,
                    shift,
                    tensor: tensor.clone(),
                    dim: h.get(i).clone(),
                });
            }
        }
    }

    Ok(RegularityReport {
        variety: variety.clone(),
        sheaf: sheaf.clone(),
        grid: grid as u32,
        checks,
        passed: violations.is_empty(),
        violations,
    })
}
