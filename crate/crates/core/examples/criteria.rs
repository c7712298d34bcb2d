//! Splitting-criteria hypotheses evaluated on concrete bundles.

use segre_ulrich::beilinson::evaluate_criteria;
use segre_ulrich::expr::{parse_sheaf, parse_variety};
use segre_ulrich::sheaf::ProductRule;

pub fn main() {
    for (xs, vs) in [
        ("n=2,1;k=1,2", "O(1)xO(1)"),
        ("n=2,1;k=2,1", "O(3)xO(0)"),
        ("n=3,2;k=1,1", "O(0)xO(3)"),
        ("n=2,2;k=1,1", "O(2)xO(0)"),
    ] {
        let x = parse_variety(xs).unwrap();
        let v = parse_sheaf(vs, &x).unwrap();
        let r = evaluate_criteria(&v, &x, ProductRule::Strict).unwrap();
        println!("{vs} on {xs} (ulrich: {})", r.ulrich);
        for c in r.criteria.iter().filter(|c| c.applicable) {
            let values: Vec<String> = c.values.iter().map(|nv| format!("{}={}", nv.name, nv.value)).collect();
            println!(
                "  {:?}: hypothesis {:?}, asserts {}, input matches {:?}",
                c.criterion,
                c.hypothesis.unwrap(),
                c.conclusion,
                c.input_matches_conclusion.unwrap()
            );
            println!("    {}", values.join(" "));
        }
    }
}
