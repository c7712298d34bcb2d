//! Beilinson alpha tables and the naturality scan.

use segre_ulrich::beilinson::alpha_table;
use segre_ulrich::expr::{parse_sheaf, parse_variety};
use segre_ulrich::sheaf::ProductRule;

pub fn main() {
    for (xs, vs) in [
        ("n=1,1;k=1,1", "O(1)xO(0)"),
        ("n=2,1;k=1,2", "O(1)xO(1)"),
        ("n=1,1;k=1,1", "O(0)xO(0)"),
        ("n=2,2;k=1,1", "Om(a=1;t=3)xOm(a=1;t=2)"),
    ] {
        let x = parse_variety(xs).unwrap();
        let v = parse_sheaf(vs, &x).unwrap();
        let t = alpha_table(&v, &x, ProductRule::Schur).unwrap();
        println!("{vs} on {xs}");
        let header: Vec<String> = t.indices.iter().map(ToString::to_string).collect();
        println!("     {}", header.join(" "));
        for (i, row) in t.entries.iter().enumerate() {
            let cells: Vec<String> = row
                .iter()
                .zip(&header)
                .map(|(v, h)| format!("{v:>w$}", w = h.len()))
                .collect();
            println!("  {i}  {}", cells.join(" "));
        }
        println!("  natural: {}", t.natural);
        if let Some(o) = t.off_diagonal.first() {
            println!("  first off-diagonal entry: row {} column {} has {}", o.row, o.index, o.cohomology);
        }
    }
}
