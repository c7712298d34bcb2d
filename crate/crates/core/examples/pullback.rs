//! Ulrich bundles on products pulled back from Ulrich bundles on the factors.

use segre_ulrich::expr::{parse_sheaf, parse_variety};
use segre_ulrich::ulrich::{pullback_ulrich, ShiftSide, VeroneseBundle};

fn bundle(variety: &str, sheaf: &str) -> VeroneseBundle {
    let x = parse_variety(variety).unwrap();
    VeroneseBundle::new(parse_sheaf(sheaf, &x).unwrap(), x).unwrap()
}

pub fn main() {
    let e = bundle("n=1;k=2", "O(1)");
    let f = bundle("n=1;k=3", "O(2)");
    for side in [ShiftSide::Left, ShiftSide::Right] {
        let p = pullback_ulrich(&e, Some(&f), side).unwrap();
        println!("{side:?}: {} on {}  h^0={}", p.sheaf, p.variety, p.certificate.h0);
    }

    let e = bundle("n=2;k=2", "2*Om(a=1;t=3)");
    let f = bundle("n=1;k=1", "O(0)");
    let p = pullback_ulrich(&e, Some(&f), ShiftSide::Left).unwrap();
    println!("{} on {}  rank {}", p.sheaf, p.variety, p.sheaf.rank());
    assert!(p.certificate.verdict);

    // not Ulrich on its factor: refused
    let bad = VeroneseBundle::new(parse_sheaf("O(0)", &parse_variety("n=1;k=2").unwrap()).unwrap(), parse_variety("n=1;k=2").unwrap()).unwrap();
    println!("refused: {}", pullback_ulrich(&bad, Some(&f), ShiftSide::Left).unwrap_err());
}
