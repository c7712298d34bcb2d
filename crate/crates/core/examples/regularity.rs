//! Regularity vanishings for Ulrich bundles on a grid of twists.

use segre_ulrich::expr::{parse_sheaf, parse_variety};
use segre_ulrich::sheaf::ProductRule;
use segre_ulrich::ulrich::verify_regularity;

pub fn main() {
    for (xs, vs) in [
        ("n=1,1;k=1,2", "O(1)xO(1)"),
        ("n=3,2;k=1,1", "O(2)xO(0)"),
        ("n=2,2;k=1,1", "Om(a=1;t=3)xOm(a=1;t=2)"),
        ("n=1,1,1;k=1,1,1", "O(0)xO(1)xO(2)"),
    ] {
        let x = parse_variety(xs).unwrap();
        let v = parse_sheaf(vs, &x).unwrap();
        let r = verify_regularity(&v, &x, 3, ProductRule::Schur).unwrap();
        println!("{vs:<26} on {xs:<16} {} checks, passed: {}", r.checks, r.passed);
        assert!(r.passed);
    }

    let x = parse_variety("n=1,1;k=1,1").unwrap();
    let err = verify_regularity(&parse_sheaf("O(0)xO(0)", &x).unwrap(), &x, 3, ProductRule::Strict).unwrap_err();
    println!("O(0)xO(0): {err}");
}
