//! Euler obstruction at each vertex of a lattice polygon, three ways: from
//! subdiagram volumes, from the continued fraction of the vertex cone, and
//! by counting boundary points after removing the vertex.
//!
//! Usage: cargo run --example polygon_vertex -- [x y]...

use num_bigint::BigInt;
use toric_dual::cone::cone_eu;
use toric_dual::lattice::LatticePoint;
use toric_dual::polytope::{convex_hull, remove_vertex};
use toric_dual::surface::{eu_by_boundary_count, surface_dual_degree, vertex_cone_type};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<i64> = std::env::args().skip(1).map(|s| s.parse()).collect::<Result<_, _>>()?;
    let coords = if args.is_empty() { vec![0, 0, 0, 2, 1, 3, 3, 0] } else { args };
    let points: Vec<LatticePoint> = coords.chunks(2).map(LatticePoint::from).collect();
    let p = convex_hull(&points)?;

    println!("vertex      type    Vol(P) Vol(Q)  Eu  (cone)  (count)");
    for (i, v) in p.vertices().iter().enumerate() {
        let inner = remove_vertex(&p, i).remaining.normalized_volume();
        let t = vertex_cone_type(&p, i)?;
        let by_volume = BigInt::from(2) - (p.normalized_volume() - &inner);
        let count = eu_by_boundary_count(&p, i).map_or("-".to_string(), |c| c.to_string());
        println!(
            "{:<10}  {:<6}  {:>6} {:>6}  {:>2}  {:>6}  {:>7}",
            v.to_string(),
            t.to_string(),
            p.normalized_volume(),
            inner,
            by_volume,
            cone_eu(&t),
            count
        );
    }
    let report = surface_dual_degree(&p)?;
    println!("degree of the dual: {} (defective: {})", report.degree, report.defective);
    Ok(())
}
