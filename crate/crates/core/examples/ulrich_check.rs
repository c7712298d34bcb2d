//! Ulrich certificates: the vanishing table, a witness when it fails, and the
//! generator count.

use segre_ulrich::expr::{parse_sheaf, parse_variety};
use segre_ulrich::ulrich::is_ulrich;

pub fn main() {
    let cases = [
        ("n=1,1;k=1,2", "O(1)xO(1)"),
        ("n=1,1;k=1,1", "O(0)xO(0)"),
        ("n=2,2;k=1,1", "Om(a=1;t=3)xOm(a=1;t=2)"),
        ("n=2,2;k=2,1", "Om(a=1;t=3)xO(2)"),
        ("n=2,2;k=2,2", "Om(a=1;t=3)xO(2)"),
        ("n=2,1;k=1,1", "O(1)xO(0) + 3*O(0)xO(2)"),
    ];
    for (xs, vs) in cases {
        let x = parse_variety(xs).unwrap();
        let v = parse_sheaf(vs, &x).unwrap();
        let cert = is_ulrich(&v, &x).unwrap();
        print!("{vs:<28} on {xs:<12} ulrich={:<5}", cert.verdict);
        match &cert.witness {
            Some(w) => println!("  h^{}(V(-{}h)) = {}", w.degree, w.twist, w.dim),
            None => {
                assert!(cert.generator_count_matches());
                println!("  h^0 = {} = rank * deg", cert.h0);
            }
        }
    }
}
