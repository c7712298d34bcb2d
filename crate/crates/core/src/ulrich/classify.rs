//! Exhaustive searches for Ulrich line bundles and Ulrich cotangent boxes.
//!
//! Each factor contributes a finite list of candidate factor sheaves (the
//! search box) plus the layer immediately outside it (the shell). Every point
//! of the box is tested; every point touching the shell is tested as well and
//! must not be Ulrich, otherwise the box was too small and the search aborts.

use std::collections::BTreeSet;

use serde::Serialize;

use super::is_ulrich;
use crate::bott::{is_acyclic, FactorSheaf};
use crate::error::{Error, Result};
use crate::sheaf::{BoxAtom, FormalSheaf};
use crate::variety::SegreVeronese;

struct FactorCandidates {
    inside: Vec<FactorSheaf>,
    shell: Vec<FactorSheaf>,
}

impl FactorCandidates {
    fn from_ranges(n: u32, ranges: &[(u32, i64, i64)]) -> Self {
        let mut inside = BTreeSet::new();
        let mut outer = BTreeSet::new();
        for &(p, lo, hi) in ranges {
            for t in lo..=hi {
                inside.insert(FactorSheaf::new(n, p, t).expect("p <= n").normalized());
            }
            for t in [lo - 1, hi + 1] {
                outer.insert(FactorSheaf::new(n, p, t).expect("p <= n").normalized());
            }
        }
        let shell = outer.difference(&inside).copied().collect();
        FactorCandidates {
            inside: inside.into_iter().collect(),
            shell,
        }
    }
}

/// Bitmask over `t = 1..=d` of the twists `f(-t k)` that are acyclic.
fn acyclic_mask(f: &FactorSheaf, k: u32, d: usize) -> u64 {
    (1..=d).fold(0u64, |mask, t| {
        if is_acyclic(&f.twisted(-(t as i64) * i64::from(k))) {
            mask | (1 << (t - 1))
        } else {
            mask
        }
    })
}

struct SearchOutcome {
    members: Vec<BoxAtom>,
    tested: usize,
    shell_tested: usize,
}

/// A box atom is Ulrich iff for each `t` some factor of `V(-th)` is acyclic,
/// so candidates are screened with per-factor bitmasks and confirmed with the
/// full certificate.
fn search(variety: &SegreVeronese, per_factor: Vec<FactorCandidates>) -> Result<SearchOutcome> {
    let d = variety.dim();
    assert!(d <= 64, "dimension too large for the search masks");
    let full = if d == 64 { u64::MAX } else { (1u64 << d) - 1 };

    // (sheaf, mask, is_shell) per factor
    let lists: Vec<Vec<(FactorSheaf, u64, bool)>> = per_factor
        .iter()
        .zip(variety.degrees())
        .map(|(c, &k)| {
            c.inside
                .iter()
                .map(|f| (*f, acyclic_mask(f, k, d), false))
                .chain(c.shell.iter().map(|f| (*f, acyclic_mask(f, k, d), true)))
                .collect()
        })
        .collect();

    let mut members = Vec::new();
    let mut tested = 0usize;
    let mut shell_tested = 0usize;
    let mut choice = vec![0usize; lists.len()];
    'outer: loop {
        let mut mask = 0u64;
        let mut on_shell = false;
        for (list, &c) in lists.iter().zip(&choice) {
            mask |= list[c].1;
            on_shell |= list[c].2;
        }
        if on_shell {
            shell_tested += 1;
        } else {
            tested += 1;
        }
        if mask == full {
            let atom = BoxAtom::new(lists.iter().zip(&choice).map(|(l, &c)| l[c].0).collect())?;
            if on_shell {
                return Err(Error::BoundTooSmall(atom.to_string()));
            }
            let cert = is_ulrich(&FormalSheaf::from_atom(atom.clone()), variety)?;
            assert!(cert.verdict, "screen and certificate disagree on {atom}");
            members.push(atom);
        }
        // odometer
        for pos in (0..choice.len()).rev() {
            choice[pos] += 1;
            if choice[pos] < lists[pos].len() {
                continue 'outer;
            }
            choice[pos] = 0;
        }
        break;
    }
    members.sort();
    Ok(SearchOutcome {
        members,
        tested,
        shell_tested,
    })
}

/// All Ulrich line bundles `O(a_1, ..., a_s)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineClassification {
    pub variety: SegreVeronese,
    /// Twist tuples, lexicographically ordered.
    pub members: Vec<Vec<i64>>,
    /// The search box is `0 <= a_i <= upper[i]`.
    pub upper: Vec<i64>,
    pub tested: usize,
    pub shell_tested: usize,
}

/// Searches `0 <= a_i <= d k_i + n_i`. An Ulrich line bundle has
/// `h^0 = deg(X) > 0`, which forces every `a_i >= 0`; the layers `a_i = -1`
/// and `a_i = d k_i + n_i + 1` are checked empty at runtime.
pub fn classify_ulrich_lines(variety: &SegreVeronese) -> Result<LineClassification> {
    let d = variety.dim() as i64;
    let upper: Vec<i64> = variety
        .dims()
        .iter()
        .zip(variety.degrees())
        .map(|(&n, &k)| d * i64::from(k) + i64::from(n))
        .collect();
    let per_factor = variety
        .dims()
        .iter()
        .zip(&upper)
        .map(|(&n, &u)| FactorCandidates::from_ranges(n, &[(0, 0, u)]))
        .collect();
    let outcome = search(variety, per_factor)?;
    let mut members: Vec<Vec<i64>> = outcome
        .members
        .iter()
        .map(|a| a.line_degrees().expect("line candidates only"))
        .collect();
    members.sort();
    Ok(LineClassification {
        variety: variety.clone(),
        members,
        upper,
        tested: outcome.tested,
        shell_tested: outcome.shell_tested,
    })
}

/// All Ulrich atoms `Omega^{a_1}(l_1) ⊠ ... ⊠ Omega^{a_s}(l_s)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AtomClassification {
    pub variety: SegreVeronese,
    pub members: Vec<BoxAtom>,
    pub tested: usize,
    pub shell_tested: usize,
}

/// Searches `l_i` in `[a_i - n_i, a_i + d k_i + n_i]` for every `0 <= a_i <= n_i`.
pub fn classify_ulrich_omega_atoms(variety: &SegreVeronese) -> Result<AtomClassification> {
    let d = variety.dim() as i64;
    let per_factor = variety
        .dims()
        .iter()
        .zip(variety.degrees())
        .map(|(&n, &k)| {
            let ranges: Vec<(u32, i64, i64)> = (0..=n)
                .map(|a| {
                    let a_i = i64::from(a);
                    let n_i = i64::from(n);
                    (a, a_i - n_i, a_i + d * i64::from(k) + n_i)
                })
                .collect();
            FactorCandidates::from_ranges(n, &ranges)
        })
        .collect();
    let outcome = search(variety, per_factor)?;
    Ok(AtomClassification {
        variety: variety.clone(),
        members: outcome.members,
        tested: outcome.tested,
        shell_tested: outcome.shell_tested,
    })
}

/// `Omega^a(l) ⊠ Omega^b(t)` with line bundles written as `a = 0` (resp. `b = 0`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct OmegaBox {
    pub a: u32,
    pub l: i64,
    pub b: u32,
    pub t: i64,
}

impl OmegaBox {
    pub fn atom(&self, variety: &SegreVeronese) -> Result<BoxAtom> {
        let n = variety.dims();
        if n.len() != 2 {
            return Err(Error::ArityMismatch { expected: 2, got: n.len() });
        }
        BoxAtom::new(vec![
            FactorSheaf::new(n[0], self.a, self.l)?,
            FactorSheaf::new(n[1], self.b, self.t)?,
        ])
    }

    pub fn is_line_bundle(&self) -> bool {
        self.a == 0 && self.b == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OmegaBoxClassification {
    pub variety: SegreVeronese,
    pub members: Vec<OmegaBox>,
    pub tested: usize,
    pub shell_tested: usize,
}

/// Two-factor case of [`classify_ulrich_omega_atoms`].
pub fn classify_ulrich_omega_boxes(variety: &SegreVeronese) -> Result<OmegaBoxClassification> {
    if variety.factors() != 2 {
        return Err(Error::Precondition(format!(
            "cotangent box classification needs two factors, got {}",
            variety.factors()
        )));
    }
    let atoms = classify_ulrich_omega_atoms(variety)?;
    let mut members: Vec<OmegaBox> = atoms
        .members
        .iter()
        .map(|atom| {
            let f = atom.factors();
            OmegaBox {
                a: f[0].p(),
                l: f[0].t(),
                b: f[1].p(),
                t: f[1].t(),
            }
        })
        .collect();
    members.sort();
    Ok(OmegaBoxClassification {
        variety: variety.clone(),
        members,
        tested: atoms.tested,
        shell_tested: atoms.shell_tested,
    })
}
