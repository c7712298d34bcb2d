//! Cohomology of twisted cotangent sheaves and their box products.

use segre_ulrich::bott::{bott_cohomology, FactorSheaf};
use segre_ulrich::expr::{parse_sheaf, parse_variety};
use segre_ulrich::sheaf::{BoxAtom, ProductRule};

pub fn main() {
    // Bott's table for Omega^1 on P^2
    println!("h^i(P^2, Omega^1(t))");
    for t in -5..=4 {
        let f = FactorSheaf::new(2, 1, t).unwrap();
        println!("  t={t:>2}  {}", bott_cohomology(&f));
    }
    let h = bott_cohomology(&FactorSheaf::new(2, 1, 3).unwrap());
    assert_eq!(h.to_string(), "(8,0,0)");

    // Kunneth on a box product, and the Serre-dual picture
    let x = parse_variety("n=1,1;k=1,1").unwrap();
    let v = parse_sheaf("O(-2)xO(-2)", &x).unwrap();
    println!("{v}: {}", v.kunneth_cohomology());
    assert_eq!(v.kunneth_cohomology().to_string(), "(0,0,1)");

    let y = parse_variety("n=2,3;k=1,1").unwrap();
    let w = parse_sheaf("2*Om(a=1;t=0)xO(-4) + O(1)xOm(a=2;t=5)", &y).unwrap();
    println!("{w}: {}  chi={}", w.kunneth_cohomology(), w.euler_characteristic());

    // Omega^1(1) (x) Omega^1(2) on P^2 needs the Schur product rule
    let z = parse_variety("n=2;k=1").unwrap();
    let a = parse_sheaf("Om(a=1;t=1)", &z).unwrap();
    let b = BoxAtom::new(vec![FactorSheaf::new(2, 1, 2).unwrap()]).unwrap();
    assert!(a.tensor_cohomology(&b, ProductRule::Strict).is_err());
    let h = a.tensor_cohomology(&b, ProductRule::Schur).unwrap();
    println!("Om(a=1;t=1) (x) Om(a=1;t=2) on P^2: {h}");
}
