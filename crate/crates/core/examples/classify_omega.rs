//! Ulrich box products of twisted cotangent sheaves.

use segre_ulrich::ulrich::{classify_ulrich_omega_atoms, classify_ulrich_omega_boxes};
use segre_ulrich::variety::SegreVeronese;

pub fn main() {
    for (n, k) in [([2, 2], [1, 1]), ([3, 2], [1, 1]), ([2, 2], [2, 2]), ([2, 2], [2, 1]), ([2, 1], [2, 1])] {
        let x = SegreVeronese::new(n.to_vec(), k.to_vec()).unwrap();
        let c = classify_ulrich_omega_boxes(&x).unwrap();
        println!("{x}");
        for b in &c.members {
            println!("  {}", b.atom(&x).unwrap());
        }
    }

    // single factors: the inputs for pullbacks
    for (n, k) in [(1, 3), (2, 2), (2, 3), (3, 1)] {
        let x = SegreVeronese::veronese(n, k).unwrap();
        let c = classify_ulrich_omega_atoms(&x).unwrap();
        let members: Vec<String> = c.members.iter().map(ToString::to_string).collect();
        println!("(P^{n},O({k})): {}", if members.is_empty() { "none".into() } else { members.join(" ") });
    }

    // three factors go through the general search
    let x = SegreVeronese::segre(vec![1, 1, 2]).unwrap();
    let c = classify_ulrich_omega_atoms(&x).unwrap();
    println!("{x}: {} members", c.members.len());
    for a in &c.members {
        println!("  {a}");
    }
}
