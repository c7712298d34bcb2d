//! Segre-Veronese ambient data.

use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactcomb::multinomial_degree;
use crate::sheaf::{BoxAtom, FormalSheaf};

/// `P^{n_1} x ... x P^{n_s}` embedded by `O(k_1, ..., k_s)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SegreVeronese {
    n: Vec<u32>,
    k: Vec<u32>,
}

impl SegreVeronese {
    pub fn new(n: Vec<u32>, k: Vec<u32>) -> Result<Self> {
        // validates shape and positivity
        multinomial_degree(&n, &k)?;
        Ok(SegreVeronese { n, k })
    }

    /// `P^{n_1} x ... x P^{n_s}` with `k = (1, ..., 1)`.
    pub fn segre(n: Vec<u32>) -> Result<Self> {
        let k = vec![1; n.len()];
        Self::new(n, k)
    }

    pub fn veronese(n: u32, k: u32) -> Result<Self> {
        Self::new(vec![n], vec![k])
    }

    pub fn dims(&self) -> &[u32] {
        &self.n
    }

    pub fn degrees(&self) -> &[u32] {
        &self.k
    }

    pub fn factors(&self) -> usize {
        self.n.len()
    }

    /// `d = n_1 + ... + n_s`.
    pub fn dim(&self) -> usize {
        self.n.iter().map(|&x| x as usize).sum()
    }

    pub fn is_segre(&self) -> bool {
        self.k.iter().all(|&k| k == 1)
    }

    pub fn degree(&self) -> BigUint {
        multinomial_degree(&self.n, &self.k).expect("validated at construction")
    }

    /// Twist tuple of `q h = q (k_1 h_1 + ... + k_s h_s)`.
    pub fn polarization(&self, q: i64) -> Vec<i64> {
        self.k.iter().map(|&k| q * i64::from(k)).collect()
    }

    /// Twist tuple of the canonical bundle, `(-n_1-1, ..., -n_s-1)`.
    pub fn canonical(&self) -> Vec<i64> {
        self.n.iter().map(|&n| -i64::from(n) - 1).collect()
    }

    pub fn line(&self, twist: &[i64]) -> Result<FormalSheaf> {
        FormalSheaf::line(&self.n, twist)
    }

    /// Checks that `sheaf` lives on this variety's factors.
    pub fn check_sheaf(&self, sheaf: &FormalSheaf) -> Result<()> {
        if sheaf.dims().len() != self.n.len() {
            return Err(Error::ArityMismatch {
                expected: self.n.len(),
                got: sheaf.dims().len(),
            });
        }
        for (index, (&got, &expected)) in sheaf.dims().iter().zip(&self.n).enumerate() {
            if got != expected {
                return Err(Error::DimensionMismatch { index, expected, got });
            }
        }
        Ok(())
    }

    /// All indices `(a_1, ..., a_s)`, `0 <= a_i <= n_i`, ordered by weight and
    /// then lexicographically.
    pub fn collection_indices(&self) -> Vec<CollectionIndex> {
        let mut out = vec![Vec::new()];
        for &n in &self.n {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..=n).map(move |a| {
                        let mut v = prefix.clone();
                        v.push(a);
                        v
                    })
                })
                .collect();
        }
        let mut out: Vec<CollectionIndex> = out.into_iter().map(CollectionIndex).collect();
        out.sort_by(|a, b| a.weight().cmp(&b.weight()).then_with(|| a.0.cmp(&b.0)));
        out
    }

    /// The collection `G^{a} = Omega^{a_1}(a_1) ⊠ ... ⊠ Omega^{a_s}(a_s)` paired
    /// with the line bundles `O(-a_1, ..., -a_s)`.
    pub fn dual_collection(&self) -> Vec<CollectionEntry> {
        self.collection_indices()
            .into_iter()
            .map(|index| {
                let atom = BoxAtom::dual_generator(&self.n, &index.0).expect("index within bounds");
                CollectionEntry { index, atom }
            })
            .collect()
    }
}

impl fmt::Display for SegreVeronese {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "n={};k={}", join(&self.n), join(&self.k))
    }
}

/// `(a_1, ..., a_s)` with `0 <= a_i <= n_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct CollectionIndex(pub Vec<u32>);

impl CollectionIndex {
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Twist tuple of the paired line bundle `O(-a_1, ..., -a_s)`.
    pub fn line_twist(&self) -> Vec<i64> {
        self.0.iter().map(|&a| -i64::from(a)).collect()
    }
}

impl fmt::Display for CollectionIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CollectionEntry {
    pub index: CollectionIndex,
    pub atom: BoxAtom,
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn degree_examples() {
        assert_eq!(SegreVeronese::segre(vec![2, 1]).unwrap().degree(), 3u32.into());
        assert_eq!(SegreVeronese::new(vec![1, 1], vec![2, 3]).unwrap().degree(), 12u32.into());
        assert_eq!(SegreVeronese::segre(vec![1, 1, 1]).unwrap().degree(), 6u32.into());
    }

    #[test]
    fn invalid_varieties() {
        assert!(SegreVeronese::new(vec![], vec![]).is_err());
        assert!(SegreVeronese::new(vec![1, 2], vec![1]).is_err());
        assert!(SegreVeronese::new(vec![0], vec![1]).is_err());
    }

    #[test]
    fn dual_collection_on_quadric() {
        let x = SegreVeronese::segre(vec![1, 1]).unwrap();
        let coll = x.dual_collection();
        let idx: Vec<Vec<u32>> = coll.iter().map(|e| e.index.0.clone()).collect();
        assert_eq!(idx, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        let atoms: Vec<String> = coll.iter().map(|e| e.atom.to_string()).collect();
        assert_eq!(atoms, vec!["O(0)xO(0)", "O(0)xO(-1)", "O(-1)xO(0)", "O(-1)xO(-1)"]);
    }

    #[test]
    fn dual_collection_sizes() {
        let p2 = SegreVeronese::veronese(2, 1).unwrap();
        let idx: Vec<Vec<u32>> = p2.collection_indices().into_iter().map(|i| i.0).collect();
        assert_eq!(idx, vec![vec![0], vec![1], vec![2]]);

        let x = SegreVeronese::segre(vec![2, 2]).unwrap();
        let mut counts = vec![0; 5];
        for i in x.collection_indices() {
            counts[i.weight() as usize] += 1;
        }
        assert_eq!(counts, vec![1, 2, 3, 2, 1]);

        for n in [vec![1, 2, 3], vec![3, 3], vec![4]] {
            let x = SegreVeronese::segre(n.clone()).unwrap();
            let expected: u32 = n.iter().map(|&a| a + 1).product();
            assert_eq!(x.dual_collection().len() as u32, expected);
            let max_w = x.collection_indices().iter().map(CollectionIndex::weight).max();
            assert_eq!(max_w, Some(x.dim() as u32));
        }
    }

    #[test]
    fn canonical_has_one_dimensional_top_cohomology() {
        for n in [vec![1], vec![2, 1], vec![3, 2], vec![1, 1, 2]] {
            let x = SegreVeronese::segre(n).unwrap();
            let omega = x.line(&x.canonical()).unwrap();
            let h = omega.kunneth_cohomology();
            assert!(h.get(x.dim()).is_one());
            assert_eq!(h.support(), vec![x.dim()]);
        }
    }

    #[test]
    fn display_round_trips_descriptor() {
        let x = SegreVeronese::new(vec![2, 1], vec![1, 3]).unwrap();
        assert_eq!(x.to_string(), "n=2,1;k=1,3");
        assert_eq!(x.polarization(-2), vec![-2, -6]);
    }
}
