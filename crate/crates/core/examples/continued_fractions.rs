//! Hirzebruch-Jung continued fractions of a (d,k)-cone: expansion, the
//! boundary points of its Newton polygon, the dual type and the resolution.
//!
//! Usage: cargo run --example continued_fractions -- [d k]

use num_bigint::BigInt;
use toric_dual::cone::{boundary_fan, cone_eu, cone_rsv, dual_cone_type, hj_eval, resolution_data, ConeType2D};

fn show(v: &[BigInt]) -> String {
    v.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(", ")
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u64> = std::env::args().skip(1).map(|s| s.parse()).collect::<Result<_, _>>()?;
    let (d, k) = match args[..] {
        [d, k] => (d, k),
        _ => (8, 5),
    };
    let t = ConeType2D::from_u64(d, k)?;
    let e = t.expansion();
    println!("type ({d},{k}): {d}/{k} = [{}]", show(e.partial_quotients()));
    println!("evaluates back to {:?}", hj_eval(&e)?);
    println!("dual type: {}", dual_cone_type(&t));
    let fan: Vec<String> = boundary_fan(&t).iter().map(|p| p.to_string()).collect();
    println!("boundary of the Newton polygon: {}", fan.join(" "));
    println!("resolution self-intersections: [{}]", show(&resolution_data(&t)));
    println!("Eu = {}, subdiagram volume = {}", cone_eu(&t), cone_rsv(&t));
    Ok(())
}
