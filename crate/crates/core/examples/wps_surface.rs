//! Dual degree of the weighted projective plane P(k, m, n), with the cone
//! type and Euler obstruction at each torus-fixed point and every closed
//! formula that applies.
//!
//! Usage: cargo run --example wps_surface -- [k m n]

use toric_dual::wps::{reduce_weights, wps2_closed_formulas, wps2_cone_params, wps_report};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u64> = std::env::args().skip(1).map(|s| s.parse()).collect::<Result<_, _>>()?;
    let q = if args.len() == 3 { args } else { vec![3, 4, 5] };
    let w = reduce_weights(&q)?;
    if w.as_slice() != q.as_slice() {
        println!("P{q:?} is isomorphic to P{:?}", w.as_slice());
    }
    let s = w.as_slice();
    let report = wps_report(&w)?;
    let cones = wps2_cone_params(s[0], s[1], s[2])?;
    for ((q, t), eu) in s.iter().zip(&cones.types).zip(&report.vertex_eu) {
        println!("weight {q:>3}: cone {:<8} Eu {eu:>3}", t.to_string());
    }
    println!("degree of the dual: {}", report.degree);
    for (formula, value) in wps2_closed_formulas(s[0], s[1], s[2]) {
        println!("closed formula {formula:?}: {value}");
    }
    Ok(())
}
