//! Defective members of two families: lattice triangles in a box, which
//! should all be P(1,1,n) up to unimodular equivalence, and P(1, k, m, n),
//! which should be cones. Also lists singular P(1, k, m, n) whose Euler
//! obstruction is 1 everywhere.
//!
//! Usage: cargo run --release --example defectivity_scan -- [box] [bound]

use toric_dual::surface::{surface_defectivity_scan, triangles_in_box};
use toric_dual::wps::defectivity_and_conjecture_scan;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let side: i64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(4);
    let bound: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(6);

    let triangles = triangles_in_box(side);
    let total = triangles.len();
    let flagged = surface_defectivity_scan(triangles)?;
    let others = flagged.iter().filter(|d| d.p11n.is_none()).count();
    println!("triangles in [0,{side}]^2: {total}, defective: {}, not P(1,1,n): {others}", flagged.len());

    let scan = defectivity_and_conjecture_scan(bound)?;
    println!("defective P(1,k,m,n), k <= m <= n <= {bound}: {:?}", scan.defective);
    println!("all cones: {}", scan.defective_are_cone_patterns());
    println!("singular with Eu = 1 everywhere: {:?}", scan.eu_one_singular);
    println!("largest dual degree: {}", scan.max_degree);
    Ok(())
}
