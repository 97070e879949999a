//! Euler obstructions and dual degrees of toric surfaces given by lattice polygons.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::cone::{classify_in_z2, cone_eu, cone_rsv, dual_cone_type, resolution_data, ConeType2D};
use crate::error::{Error, Result};
use crate::lattice::{is_unimodular_basis, primitive, LatticePoint};
use crate::polytope::{convex_hull, remove_vertex, subdiagram_volume_at, LatticePolytope};
use crate::report::{DualDegreeReport, FaceReport, Terms};

/// Euler obstructions on every face of a polygon. Entries are aligned with
/// `p.vertices()` and `p.edges()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceEulerTable {
    pub eu_polytope: BigInt,
    pub eu_edges: Vec<BigInt>,
    pub eu_vertices: Vec<BigInt>,
    /// Type of each vertex cone in `M`.
    pub vertex_cones: Vec<ConeType2D>,
    pub rsv: Vec<BigInt>,
}

fn require_polygon(p: &LatticePolytope) -> Result<()> {
    if p.dim() == 2 {
        Ok(())
    } else {
        Err(Error::WrongDimension {
            expected: 2,
            actual: p.dim(),
        })
    }
}

/// Type in `M` of the cone spanned by the polygon at vertex `v`.
pub fn vertex_cone_type(p: &LatticePolytope, v: usize) -> Result<ConeType2D> {
    require_polygon(p)?;
    let apex = &p.local_vertices()[v];
    let n = p.neighbors(v);
    let u = &p.local_vertices()[n[0]] - apex;
    let w = &p.local_vertices()[n[1]] - apex;
    Ok(classify_in_z2(u.coords(), w.coords())?.0)
}

/// `1 - c`, with `c` the number of interior lattice points of `P` on the
/// boundary of `Q = Conv((P ∩ M) \ {v})`. `None` when `Q` is not a polygon.
pub fn eu_by_boundary_count(p: &LatticePolytope, v: usize) -> Option<BigInt> {
    let removal = remove_vertex(p, v);
    let q = &removal.remaining;
    if q.dim() < 2 {
        return None;
    }
    let c = removal
        .nearby_points
        .iter()
        .filter(|x| p.local_interior(x) && q.local_on_boundary(&q.frame().coords(x).expect("same plane")))
        .count();
    Some(BigInt::one() - c)
}

/// Euler obstruction at a vertex of a polygon.
///
/// Computed from the subdiagram volume, from the boundary-point count (when
/// removing the vertex leaves a polygon) and from
/// the continued fraction of the vertex cone; any disagreement is reported as
/// [`Error::OracleMismatch`].
pub fn surface_vertex_eu(p: &LatticePolytope, v: &LatticePoint) -> Result<BigInt> {
    let i = p.vertex_index(v).ok_or(Error::NotAVertex)?;
    surface_vertex_eu_at(p, i)
}

/// [`surface_vertex_eu`] for a vertex index.
pub fn surface_vertex_eu_at(p: &LatticePolytope, v: usize) -> Result<BigInt> {
    require_polygon(p)?;
    let by_volume = BigInt::from(2) - subdiagram_volume_at(p, v);
    let by_count = eu_by_boundary_count(p, v);
    let by_cone = cone_eu(&vertex_cone_type(p, v)?);
    if by_count.as_ref().is_some_and(|c| *c != by_volume) || by_volume != by_cone {
        return Err(Error::OracleMismatch(format!(
            "Eu at {}: volume {by_volume}, count {by_count:?}, cone {by_cone}",
            p.vertices()[v]
        )));
    }
    Ok(by_volume)
}

pub fn surface_euler_table(p: &LatticePolytope) -> Result<SurfaceEulerTable> {
    require_polygon(p)?;
    let n = p.vertices().len();
    let eu_vertices = (0..n).map(|v| surface_vertex_eu_at(p, v)).collect::<Result<Vec<_>>>()?;
    let vertex_cones = (0..n).map(|v| vertex_cone_type(p, v)).collect::<Result<Vec<_>>>()?;
    let rsv = vertex_cones.iter().map(cone_rsv).collect();
    Ok(SurfaceEulerTable {
        eu_polytope: BigInt::one(),
        eu_edges: vec![BigInt::one(); p.edges().len()],
        eu_vertices,
        vertex_cones,
        rsv,
    })
}

/// `3 Vol(P) - 2 E(P) + sum Eu(v)`.
pub fn surface_degree(p: &LatticePolytope) -> Result<BigInt> {
    let table = surface_euler_table(p)?;
    Ok(degree_from_table(p, &table))
}

fn degree_from_table(p: &LatticePolytope, table: &SurfaceEulerTable) -> BigInt {
    let eu_sum: BigInt = table.eu_vertices.iter().sum();
    BigInt::from(3) * p.normalized_volume() - BigInt::from(2) * p.edge_length_sum() + eu_sum
}

/// Full report: per-face Euler obstructions with cone data, the formula terms,
/// the degree of the dual variety and whether it is defective (degree 0).
pub fn surface_dual_degree(p: &LatticePolytope) -> Result<DualDegreeReport> {
    let table = surface_euler_table(p)?;
    let verts = p.vertices();
    let mut faces: Vec<FaceReport> = (0..verts.len())
        .map(|v| {
            let t = &table.vertex_cones[v];
            FaceReport {
                dim: 0,
                vertices: vec![verts[v].clone()],
                eu: table.eu_vertices[v].clone(),
                cone_type: Some(t.clone()),
                hj: Some(t.expansion()),
                rsv: Some(table.rsv[v].clone()),
                resolution: Some(resolution_data(&dual_cone_type(t))),
            }
        })
        .collect();
    faces.extend(p.edges().iter().zip(&table.eu_edges).map(|(e, eu)| FaceReport {
        dim: 1,
        vertices: e.iter().map(|&i| verts[i].clone()).collect(),
        eu: eu.clone(),
        cone_type: None,
        hj: None,
        rsv: None,
        resolution: None,
    }));
    faces.push(FaceReport {
        dim: 2,
        vertices: verts.to_vec(),
        eu: table.eu_polytope.clone(),
        cone_type: None,
        hj: None,
        rsv: None,
        resolution: None,
    });
    let degree = degree_from_table(p, &table);
    Ok(DualDegreeReport {
        input: "polygon".into(),
        faces,
        terms: Terms {
            volume: p.normalized_volume(),
            area: None,
            edges: p.edge_length_sum(),
            edge_eu_lengths: None,
            vertices: table.eu_vertices.iter().sum(),
        },
        defective: degree.is_zero(),
        degree,
    })
}

/// `Some(n)` when the polygon is unimodularly equivalent to
/// `Conv((0,0), (n,0), (0,1))`, the polygon of `P(1,1,n)`.
///
/// That happens exactly for triangles with a vertex whose primitive edge
/// directions form a lattice basis and one of whose two edges has length 1.
pub fn p11n_parameter(p: &LatticePolytope) -> Option<BigInt> {
    if p.dim() != 2 || p.vertices().len() != 3 {
        return None;
    }
    let l = p.local_vertices();
    for v in 0..3 {
        let others: Vec<usize> = (0..3).filter(|&j| j != v).collect();
        let (a, b) = (&l[others[0]] - &l[v], &l[others[1]] - &l[v]);
        let (ra, rb) = (primitive(&a).ok()?, primitive(&b).ok()?);
        if !is_unimodular_basis(&[ra, rb]).ok()? {
            continue;
        }
        let (la, lb) = (a.content(), b.content());
        if lb.is_one() {
            return Some(la);
        }
        if la.is_one() {
            return Some(lb);
        }
    }
    None
}

/// A polygon found defective by a scan, with its `P(1,1,n)` parameter if it has one.
#[derive(Clone, Debug)]
pub struct DefectiveSurface {
    pub polytope: LatticePolytope,
    pub p11n: Option<BigInt>,
}

/// Polygons from `polygons` whose dual variety has degree 0, in input order.
pub fn surface_defectivity_scan(polygons: Vec<LatticePolytope>) -> Result<Vec<DefectiveSurface>> {
    let flags: Vec<bool> = polygons
        .par_iter()
        .map(|p| surface_degree(p).map(|d| d.is_zero()))
        .collect::<Result<Vec<_>>>()?;
    Ok(polygons
        .into_iter()
        .zip(flags)
        .filter(|(_, f)| *f)
        .map(|(p, _)| DefectiveSurface {
            p11n: p11n_parameter(&p),
            polytope: p,
        })
        .collect())
}

/// Every nondegenerate triangle with vertices in `[0, max]^2`.
pub fn triangles_in_box(max: i64) -> Vec<LatticePolytope> {
    let pts: Vec<LatticePoint> = (0..=max)
        .flat_map(|x| (0..=max).map(move |y| LatticePoint::from([x, y])))
        .collect();
    let mut out = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            for k in j + 1..pts.len() {
                let p = convex_hull(&[pts[i].clone(), pts[j].clone(), pts[k].clone()])
                    .expect("three points");
                if p.dim() == 2 {
                    out.push(p);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(v: &[[i64; 2]]) -> LatticePolytope {
        let pts: Vec<LatticePoint> = v.iter().map(|c| LatticePoint::from(*c)).collect();
        convex_hull(&pts).unwrap()
    }

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn quadrilateral_vertex() {
        let p = poly(&[[0, 0], [0, 2], [1, 3], [3, 0]]);
        assert_eq!(surface_vertex_eu(&p, &[1, 3].into()).unwrap(), b(-1));
        let table = surface_euler_table(&p).unwrap();
        let mut eus = table.eu_vertices.clone();
        eus.sort();
        // (3,0) is a (3,2)-cone
        assert_eq!(eus, vec![b(-1), b(0), b(1), b(1)]);
        let r = surface_dual_degree(&p).unwrap();
        // 3*11 - 2*7 + (1 + 1 + 0 - 1)
        assert_eq!((r.degree.clone(), r.defective), (b(20), false));
    }

    #[test]
    fn smooth_and_gorenstein_vertices() {
        let p = poly(&[[0, 0], [1, 0], [0, 1]]);
        assert!(surface_euler_table(&p).unwrap().eu_vertices.iter().all(|e| *e == b(1)));
        // the cone Cone((1,0),(2,3)) at the origin has type (3,2)
        let p = poly(&[[0, 0], [1, 0], [2, 3]]);
        let t = vertex_cone_type(&p, 0).unwrap();
        assert!(t.equivalent(&ConeType2D::from_u64(3, 2).unwrap()));
        assert_eq!(surface_vertex_eu_at(&p, 0).unwrap(), b(0));
    }

    #[test]
    fn projective_plane_family() {
        for n in 1..8 {
            let p = poly(&[[0, 0], [n, 0], [0, 1]]);
            let r = surface_dual_degree(&p).unwrap();
            assert!(r.defective && r.degree == b(0));
            assert_eq!(p11n_parameter(&p), Some(b(n)));
        }
        let square = poly(&[[0, 0], [1, 0], [0, 1], [1, 1]]);
        assert_eq!(surface_degree(&square).unwrap(), b(2));
        assert_eq!(p11n_parameter(&square), None);
    }

    #[test]
    fn wrong_dimension() {
        let seg = poly(&[[0, 0], [3, 0]]);
        assert!(matches!(surface_degree(&seg), Err(Error::WrongDimension { .. })));
    }
}
