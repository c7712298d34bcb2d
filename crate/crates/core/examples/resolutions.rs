//! Resolutions and monads read off the alpha table, with their numerical checks.

use segre_ulrich::beilinson::{alpha_table, build_monad, build_resolution, chi_consistency, default_probe_window};
use segre_ulrich::expr::{parse_sheaf, parse_variety};
use segre_ulrich::sheaf::ProductRule;

pub fn main() {
    let x = parse_variety("n=1,1;k=1,1").unwrap();
    let t = alpha_table(&parse_sheaf("O(1)xO(0)", &x).unwrap(), &x, ProductRule::Strict).unwrap();
    let r = build_resolution(&t, 0).unwrap();
    println!("{r}");
    assert_eq!(r.to_string(), "0 -> O(-1,0) -> O(0,0)^2 -> V -> 0");

    let x = parse_variety("n=2,2;k=1,1").unwrap();
    let v = parse_sheaf("Om(a=1;t=3)xOm(a=1;t=2)", &x).unwrap();
    let t = alpha_table(&v, &x, ProductRule::Schur).unwrap();
    let window = default_probe_window(&x);
    for q in [0, 1, x.dim()] {
        let r = build_resolution(&t, q).unwrap();
        println!("q={q}: {r}   chi ok: {}", chi_consistency(&r.complex, window.clone()));
    }
    for q in 0..=x.dim() {
        let m = build_monad(&t, q).unwrap();
        println!("\nq={q}, rank sum {}, chi ok: {}", m.complex.rank_sum(), chi_consistency(&m.complex, window.clone()));
        println!("{m}");
    }
}
