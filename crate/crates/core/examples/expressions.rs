//! The text forms of varieties and sheaves.

use segre_ulrich::expr::{parse_sheaf, parse_variety};

pub fn main() {
    let x = parse_variety("n=2,2;k=1,1").unwrap();
    println!("{x}: dim {}, degree {}, canonical {:?}", x.dim(), x.degree(), x.canonical());

    for text in [
        "Om(a=1;t=3)xOm(a=1;t=2)",
        "2*O(0)xO(0) + O(1)xO(1)",
        "Om(a=2;t=5) x Om(a=0;t=1)",
        "O(1)xO(1) + O(1)xO(1)",
    ] {
        let v = parse_sheaf(text, &x).unwrap();
        println!("{text:<28} -> {v}  (rank {})", v.rank());
        assert_eq!(parse_sheaf(&v.to_string(), &x).unwrap(), v);
    }

    for bad in ["O(1)", "O(1)xQ(2)", "Om(a=3;t=0)xO(0)", "O(1)xO(2) +"] {
        println!("{bad:<28} -> {}", parse_sheaf(bad, &x).unwrap_err());
    }
}
