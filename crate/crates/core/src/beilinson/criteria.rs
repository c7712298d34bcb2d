//! Hypothesis evaluators for the splitting criteria on `P^m x P^n`.
//!
//! Each criterion names a vanishing of table entries (or of one `h^1`) that
//! forces an Ulrich bundle into a specific shape. The evaluators compute the
//! vanishing, record the shape the criterion asserts, and when the input is
//! itself of that shape say so. They do not prove the converse.

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use super::alpha_table;
use crate::cohomology::serialize_count;
use crate::error::Result;
use crate::sheaf::{BoxAtom, FormalSheaf, ProductRule};
use crate::ulrich::is_ulrich;
use crate::variety::SegreVeronese;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    /// `m, n > 1`: `alpha_1^{0,2} = alpha_1^{1,1} = 0` gives `k_2 = 1`, `V = O(k_1 - 1, 1)`.
    RowOneWeightTwo,
    /// `m > 1, n = 1`: `h^1(V (x) O(-2k_1, -1-k_2)) = 0` gives `V = O(2k_1 - 1, k_2 - 1)`.
    MutatedFirst,
    /// `m > 1, n = 1`: `h^1(V (x) O(-1-k_1, -2k_2)) = 0` gives `V = O(k_1 - 1, 2k_2 - 1)`.
    MutatedSecond,
    /// `n > 1`: `alpha_m^{a,b} = 0` for `a + b = m +- 1` gives a Segre line bundle.
    MiddleRowSplit,
    /// `k_2 = 1`: `alpha_n^{a,b} = 0` for `a + b = n + 1` and for `a > 1, a + b = n`
    /// gives `V = E(nk_1) ⊠ O`.
    PulledBackFirst,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub criterion: Criterion,
    pub applicable: bool,
    /// Why the criterion does not apply, when it does not.
    pub scope: Option<String>,
    pub hypothesis: Option<bool>,
    /// The quantities whose vanishing is the hypothesis, plus context values.
    pub values: Vec<NamedCount>,
    pub conclusion: String,
    /// Whether the input already has the asserted shape.
    pub input_matches_conclusion: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedCount {
    pub name: String,
    #[serde(serialize_with = "serialize_count")]
    pub value: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriteriaReport {
    pub variety: SegreVeronese,
    pub sheaf: FormalSheaf,
    pub ulrich: bool,
    pub criteria: Vec<CriterionReport>,
}

impl CriteriaReport {
    pub fn get(&self, c: Criterion) -> &CriterionReport {
        self.criteria.iter().find(|r| r.criterion == c).expect("all criteria reported")
    }
}

fn out_of_scope(criterion: Criterion, why: String, conclusion: String) -> CriterionReport {
    CriterionReport {
        criterion,
        applicable: false,
        scope: Some(why),
        hypothesis: None,
        values: Vec::new(),
        conclusion,
        input_matches_conclusion: None,
    }
}

fn named(name: impl Into<String>, value: &BigUint) -> NamedCount {
    NamedCount {
        name: name.into(),
        value: value.clone(),
    }
}

fn h1(sheaf: &FormalSheaf, twist: &[i64]) -> BigUint {
    sheaf.twist(twist).kunneth_cohomology().get(1).clone()
}

/// Evaluates every criterion on a bundle over a two-factor variety.
///
/// Criteria whose numerical range excludes the variety are reported with a
/// scope note. A non-Ulrich input is evaluated anyway and flagged.
pub fn evaluate_criteria(sheaf: &FormalSheaf, variety: &SegreVeronese, rule: ProductRule) -> Result<CriteriaReport> {
    let ulrich = is_ulrich(sheaf, variety)?.verdict;
    let all = [
        Criterion::RowOneWeightTwo,
        Criterion::MutatedFirst,
        Criterion::MutatedSecond,
        Criterion::MiddleRowSplit,
        Criterion::PulledBackFirst,
    ];
    if variety.factors() != 2 {
        let why = format!("criteria cover two factors, the variety has {}", variety.factors());
        return Ok(CriteriaReport {
            variety: variety.clone(),
            sheaf: sheaf.clone(),
            ulrich,
            criteria: all
                .iter()
                .map(|&c| out_of_scope(c, why.clone(), String::new()))
                .collect(),
        });
    }
    let (m, n) = (variety.dims()[0], variety.dims()[1]);
    let (k1, k2) = (i64::from(variety.degrees()[0]), i64::from(variety.degrees()[1]));
    let dims = variety.dims();
    let line = |a: i64, b: i64| FormalSheaf::line(dims, &[a, b]).expect("two factors");
    let is_line = |a: i64, b: i64| *sheaf == line(a, b);

    let table = if m > 1 || n > 1 || k2 == 1 {
        Some(alpha_table(sheaf, variety, rule)?)
    } else {
        None
    };
    let alpha = |row: usize, a: u32, b: u32| -> BigUint {
        table
            .as_ref()
            .and_then(|t| t.get(row, &[a, b]))
            .cloned()
            .unwrap_or_default()
    };

    let mut criteria = Vec::new();

    // k_2 = 1, V = O(k_1 - 1, 1)
    let c1 = format!("k_2=1 and V={}", line(k1 - 1, 1));
    criteria.push(if m > 1 && n > 1 {
        let a02 = alpha(1, 0, 2);
        let a11 = alpha(1, 1, 1);
        let hyp = a02.is_zero() && a11.is_zero();
        CriterionReport {
            criterion: Criterion::RowOneWeightTwo,
            applicable: true,
            scope: None,
            hypothesis: Some(hyp),
            values: vec![named("alpha_1^{0,2}", &a02), named("alpha_1^{1,1}", &a11)],
            conclusion: c1,
            input_matches_conclusion: Some(k2 == 1 && is_line(k1 - 1, 1)),
        }
    } else {
        out_of_scope(Criterion::RowOneWeightTwo, format!("needs m>1 and n>1, got m={m}, n={n}"), c1)
    });

    // h^1 tests over the mutated collection
    let shifted = sheaf.twist(&variety.polarization(-1));
    let abc = [
        ("a", h1(&shifted, &[-k1, -1])),
        ("b", h1(&shifted, &[-k1 + 1, -1])),
        ("c", h1(&shifted, &[-1, 0])),
    ];
    for (criterion, twist, target) in [
        (Criterion::MutatedFirst, [-2 * k1, -1 - k2], (2 * k1 - 1, k2 - 1)),
        (Criterion::MutatedSecond, [-1 - k1, -2 * k2], (k1 - 1, 2 * k2 - 1)),
    ] {
        let conclusion = format!("V={}", line(target.0, target.1));
        criteria.push(if m > 1 && n == 1 {
            let v = h1(sheaf, &twist);
            let mut values = vec![named(format!("h^1(V(x)O({},{}))", twist[0], twist[1]), &v)];
            values.extend(abc.iter().map(|(k, v)| named(*k, v)));
            CriterionReport {
                criterion,
                applicable: true,
                scope: None,
                hypothesis: Some(v.is_zero()),
                values,
                conclusion,
                input_matches_conclusion: Some(is_line(target.0, target.1)),
            }
        } else {
            out_of_scope(criterion, format!("needs m>1 and n=1, got m={m}, n={n}"), conclusion)
        });
    }

    // alpha_m vanishes off weight m
    let c3 = if m == n {
        format!("k=(1,1) and V={} or V={}", line(0, i64::from(m)), line(i64::from(n), 0))
    } else {
        format!("k=(1,1) and V={}", line(0, i64::from(m)))
    };
    criteria.push(if n > 1 && m as usize <= variety.dim() {
        let t = table.as_ref().expect("computed for n > 1");
        let row = m as usize;
        let mut values = Vec::new();
        let mut hyp = true;
        for w in [m.checked_sub(1), Some(m + 1)].into_iter().flatten() {
            for (i, v) in t.weight_slice(row, w) {
                hyp &= v.is_zero();
                values.push(named(format!("alpha_{row}^{{{},{}}}", i.0[0], i.0[1]), &v));
            }
        }
        let segre = k1 == 1 && k2 == 1;
        let named = is_line(0, i64::from(m)) || (m == n && is_line(i64::from(n), 0));
        CriterionReport {
            criterion: Criterion::MiddleRowSplit,
            applicable: true,
            scope: None,
            hypothesis: Some(hyp),
            values,
            conclusion: c3,
            input_matches_conclusion: Some(segre && named),
        }
    } else {
        out_of_scope(Criterion::MiddleRowSplit, format!("needs n>1, got n={n}"), c3)
    });

    // alpha_n vanishes at weight n+1 and at weight n with a > 1
    let c4 = format!("V=E({})⊠O with E Ulrich on (P^{m},O({k1}))", i64::from(n) * k1);
    criteria.push(if k2 == 1 {
        let t = table.as_ref().expect("computed for k_2 = 1");
        let row = n as usize;
        let mut values = Vec::new();
        let mut hyp = true;
        for (i, v) in t
            .weight_slice(row, n + 1)
            .into_iter()
            .chain(t.weight_slice(row, n).into_iter().filter(|(i, _)| i.0[0] > 1))
        {
            hyp &= v.is_zero();
            values.push(named(format!("alpha_{row}^{{{},{}}}", i.0[0], i.0[1]), &v));
        }
        let pulled_back = sheaf.terms().all(|(atom, _)| trivial_second_factor(atom));
        CriterionReport {
            criterion: Criterion::PulledBackFirst,
            applicable: true,
            scope: None,
            hypothesis: Some(hyp),
            values,
            conclusion: c4,
            input_matches_conclusion: Some(pulled_back),
        }
    } else {
        out_of_scope(Criterion::PulledBackFirst, format!("needs k_2=1, got k_2={k2}"), c4)
    });

    Ok(CriteriaReport {
        variety: variety.clone(),
        sheaf: sheaf.clone(),
        ulrich,
        criteria,
    })
}

fn trivial_second_factor(atom: &BoxAtom) -> bool {
    let f = &atom.factors()[1];
    f.is_line_bundle() && f.line_degree() == Some(0)
}
