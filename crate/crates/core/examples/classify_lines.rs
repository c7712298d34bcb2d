//! Exhaustive search for Ulrich line bundles on two-factor varieties.

use segre_ulrich::ulrich::classify_ulrich_lines;
use segre_ulrich::variety::SegreVeronese;

pub fn main() {
    for (n, k) in [
        ([2, 1], [1, 1]),
        ([3, 2], [1, 1]),
        ([2, 1], [1, 3]),
        ([1, 1], [2, 3]),
        ([2, 2], [1, 2]),
        ([1, 3], [3, 1]),
    ] {
        let x = SegreVeronese::new(n.to_vec(), k.to_vec()).unwrap();
        let c = classify_ulrich_lines(&x).unwrap();
        let lines: Vec<String> = c
            .members
            .iter()
            .map(|a| format!("O({},{})", a[0], a[1]))
            .collect();
        println!(
            "{x:<12} {:<24} ({} tested, {} on the shell)",
            if lines.is_empty() { "none".to_string() } else { lines.join(" ") },
            c.tested,
            c.shell_tested
        );
    }

    let x = SegreVeronese::new(vec![1, 1], vec![2, 3]).unwrap();
    assert_eq!(classify_ulrich_lines(&x).unwrap().members, vec![vec![1, 5], vec![3, 2]]);
}
