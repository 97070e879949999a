//! Area of a piecewise linear lattice polygon made of faces of a 3-polytope,
//! checked against Pick's formula, and the cone polygon at a vertex whose
//! weighted area gives the subdiagram volume there.
//!
//! Usage: cargo run --example pllp_pick

use toric_dual::lattice::LatticePoint;
use toric_dual::pllp::{pllp_area_check, vertex_cone_pllp, Pllp};
use toric_dual::polytope::convex_hull;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cube: Vec<LatticePoint> = (0..8i64).map(|i| LatticePoint::from([i & 1, (i >> 1) & 1, (i >> 2) & 1])).collect();
    let cube = convex_hull(&cube)?;
    let pieces: Vec<usize> = (0..cube.facets().len())
        .filter(|&f| {
            let n = cube.facets()[f].normal.coords();
            n[0] != 0.into() || n[1] != 0.into()
        })
        .take(2)
        .collect();
    let k = Pllp::new(cube, pieces)?;
    let (area, i, b, holds) = pllp_area_check(&k);
    println!("two cube faces: area {area}, interior {i}, boundary {b}, 2i + b - 2 = area: {holds}");

    let corner = convex_hull(&[[0i64, 0, 0], [3, 0, 0], [0, 3, 0], [3, 3, 6]].map(LatticePoint::from))?;
    let v = corner.vertex_index(&LatticePoint::from([0i64, 0, 0])).unwrap();
    let cone = vertex_cone_pllp(&corner, v)?;
    let (area, i, b, holds) = pllp_area_check(&cone.pllp);
    println!("Cone(e1, e2, (1,1,2)): cone polygon area {area}, interior {i}, boundary {b}, Pick: {holds}");
    println!("subdiagram volume {}, Eu {}", cone.cone_rsv(), cone.cone_eu());
    Ok(())
}
