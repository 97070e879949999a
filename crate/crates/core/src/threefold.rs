//! Euler obstructions and dual degrees of toric 3-folds given by lattice
//! 3-polytopes.
//!
//! Edges are handled by projecting along the edge direction, which turns the
//! polytope near the edge into a polygon near a vertex. Vertices combine the
//! subdiagram volume of the polytope with the continued fractions of their
//! facet cones and the Euler obstructions of their edges:
//!
//! `Eu(v) = RSV(P, v) - sum_{f ∋ v} RSV(f, v) + sum_{e ∋ v} Eu(e)`.
//!
//! The degree of the dual variety is then
//! `4 Vol(P) - 3 A(P) + 2 sum Eu(e) L(e) - sum Eu(v)`.
//!
//! Polytopes whose lattice points generate a proper sublattice are first
//! rewritten in that sublattice; every result is reported for the original
//! vertices.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cone::{classify_cone, classify_in_z2, cone_eu, cone_rsv, dual_cone_type, resolution_data, ConeType2D};
use crate::error::{Error, Result};
use crate::lattice::{lattice_index, primitive, saturated_basis, LatticePoint, QuotientMap, Sublattice};
use crate::pllp::vertex_cone_pllp;
use crate::polytope::{convex_hull, subdiagram_volume_at, Face, LatticePolytope};
use crate::report::{DualDegreeReport, FaceReport, Terms};

/// Euler obstructions and cone data on every face of a 3-polytope.
///
/// Vectors are aligned with `p.vertices()`, `p.edges()` and `p.facets()` of
/// the polytope the table was computed for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreefoldEulerTable {
    pub eu_polytope: BigInt,
    pub eu_facets: Vec<BigInt>,
    pub eu_edges: Vec<BigInt>,
    /// Type of the projected cone of each edge, in `M / (edge direction)`.
    pub edge_cones: Vec<ConeType2D>,
    pub eu_vertices: Vec<BigInt>,
    /// `RSV(P, v)` for each vertex.
    pub rsv: Vec<BigInt>,
    /// For each vertex, the facets through it with the type of their cone there.
    pub facet_cones: Vec<Vec<(usize, ConeType2D)>>,
}

fn require_3d(p: &LatticePolytope) -> Result<()> {
    if p.dim() == 3 {
        Ok(())
    } else {
        Err(Error::WrongDimension {
            expected: 3,
            actual: p.dim(),
        })
    }
}

/// The polytope in its generated lattice, with maps from the original vertex,
/// edge and facet indices to the working ones.
struct Working {
    poly: LatticePolytope,
    vertex: Vec<usize>,
    edge: Vec<usize>,
    facet: Vec<usize>,
}

fn working_copy(p: &LatticePolytope) -> Working {
    let (poly, vertex) = p.in_generated_lattice();
    let edge_ids: BTreeMap<[usize; 2], usize> = poly
        .edges()
        .iter()
        .enumerate()
        .map(|(i, e)| (sorted_pair(e[0], e[1]), i))
        .collect();
    let edge = p
        .edges()
        .iter()
        .map(|e| edge_ids[&sorted_pair(vertex[e[0]], vertex[e[1]])])
        .collect();
    let facet_ids: BTreeMap<Vec<usize>, usize> = poly
        .facets()
        .iter()
        .enumerate()
        .map(|(i, f)| (sorted(f.vertices.clone()), i))
        .collect();
    let facet = p
        .facets()
        .iter()
        .map(|f| facet_ids[&sorted(f.vertices.iter().map(|&v| vertex[v]).collect())])
        .collect();
    Working {
        poly,
        vertex,
        edge,
        facet,
    }
}

fn sorted_pair(a: usize, b: usize) -> [usize; 2] {
    if a < b {
        [a, b]
    } else {
        [b, a]
    }
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

/// Projection of `P` along edge `e`: the quotient map, and the images of the
/// vertices after translating the first endpoint of the edge to the origin.
fn edge_projection(p: &LatticePolytope, e: usize) -> Result<(Vec<LatticePoint>, LatticePoint)> {
    let [a, b] = p.edges()[e];
    let local = p.local_vertices();
    let dir = primitive(&(&local[b] - &local[a]))?;
    let q = QuotientMap::new(&dir)?;
    let images = local.iter().map(|x| q.apply(&(x - &local[a]))).collect();
    Ok((images, LatticePoint::zero(2)))
}

/// Type of the cone of `P` along edge `e`, in the quotient lattice.
pub fn edge_cone_type(p: &LatticePolytope, e: usize) -> Result<ConeType2D> {
    require_3d(p)?;
    let (images, _) = edge_projection(p, e)?;
    let edge = p.edges()[e];
    let mut rays = Vec::new();
    for f in p.facets_of_edge(e) {
        let off = p.facets()[f]
            .vertices
            .iter()
            .find(|w| !edge.contains(w))
            .expect("a facet has a vertex off each of its edges");
        rays.push(images[*off].clone());
    }
    if rays.len() != 2 {
        return Err(Error::NotAnEdge);
    }
    Ok(classify_in_z2(rays[0].coords(), rays[1].coords())?.0)
}

/// `Eu(e) = f_e - 2 + sum (2 - b_i)`, with `f_e` the number of facets
/// containing the edge (always 2) and the sum over the expansion of the
/// projected cone.
fn edge_eu_from_type(p: &LatticePolytope, e: usize, t: &ConeType2D) -> BigInt {
    BigInt::from(p.facets_of_edge(e).len()) - 2 + cone_eu(t)
}

/// Euler obstruction along an edge, given by vertex indices.
pub fn edge_eu(p: &LatticePolytope, edge: [usize; 2]) -> Result<BigInt> {
    require_3d(p)?;
    let e = p
        .edges()
        .iter()
        .position(|x| sorted_pair(x[0], x[1]) == sorted_pair(edge[0], edge[1]))
        .ok_or(Error::NotAnEdge)?;
    let w = working_copy(p);
    let we = w.edge[e];
    let t = edge_cone_type(&w.poly, we)?;
    Ok(edge_eu_from_type(&w.poly, we, &t))
}

/// Type of the cone of facet `f` at its vertex `v`, in the facet's lattice.
pub fn facet_vertex_cone(p: &LatticePolytope, f: usize, v: usize) -> Result<ConeType2D> {
    let cycle = &p.facets()[f].vertices;
    let pos = cycle.iter().position(|&x| x == v).ok_or(Error::NotAVertex)?;
    let n = cycle.len();
    let local = p.local_vertices();
    let u = &local[cycle[(pos + n - 1) % n]] - &local[v];
    let w = &local[cycle[(pos + 1) % n]] - &local[v];
    let plane = saturated_basis(p.dim(), &[u.clone(), w.clone()])?;
    let lattice = Sublattice::new(p.dim(), plane.vectors().to_vec())?;
    Ok(classify_cone(&u, &w, &lattice)?.0)
}

/// `RSV(f, v)` for a facet through vertex `v`, from the continued fraction of
/// the facet cone.
pub fn facet_vertex_rsv(p: &LatticePolytope, f: usize, v: usize) -> Result<BigInt> {
    Ok(cone_rsv(&facet_vertex_cone(p, f, v)?))
}

fn table_in_working(p: &LatticePolytope) -> Result<ThreefoldEulerTable> {
    let edge_cones = (0..p.edges().len())
        .map(|e| edge_cone_type(p, e))
        .collect::<Result<Vec<_>>>()?;
    let eu_edges: Vec<BigInt> = edge_cones
        .iter()
        .enumerate()
        .map(|(e, t)| edge_eu_from_type(p, e, t))
        .collect();
    let mut eu_vertices = Vec::new();
    let mut rsv = Vec::new();
    let mut facet_cones = Vec::new();
    for v in 0..p.vertices().len() {
        let r = subdiagram_volume_at(p, v);
        rsv_diagnostics(p, v, &r);
        let cones = p
            .facets_at(v)
            .into_iter()
            .map(|f| facet_vertex_cone(p, f, v).map(|t| (f, t)))
            .collect::<Result<Vec<_>>>()?;
        let facet_term: BigInt = cones.iter().map(|(_, t)| cone_rsv(t)).sum();
        let edge_term: BigInt = p.edges_at(v).into_iter().map(|e| eu_edges[e].clone()).sum();
        eu_vertices.push(&r - facet_term + edge_term);
        rsv.push(r);
        facet_cones.push(cones);
    }
    Ok(ThreefoldEulerTable {
        eu_polytope: BigInt::one(),
        eu_facets: vec![BigInt::one(); p.facets().len()],
        eu_edges,
        edge_cones,
        eu_vertices,
        rsv,
        facet_cones,
    })
}

/// Logs a warning when the subdiagram volume of `P` at `v` differs from that
/// of the polytope doubled about `v`, or from the volume cut off the vertex
/// cone alone. Such differences are legitimate for small polytopes and only
/// serve as a diagnostic.
fn rsv_diagnostics(p: &LatticePolytope, v: usize, rsv: &BigInt) {
    if !log::log_enabled!(log::Level::Warn) {
        return;
    }
    let doubled = p.dilated_at(v, 2);
    let apex = &p.vertices()[v];
    if let Some(dv) = doubled.vertex_index(apex) {
        let r2 = subdiagram_volume_at(&doubled, dv);
        if &r2 != rsv {
            log::warn!("RSV at {apex}: {rsv} in P, {r2} in the doubled polytope");
        }
    }
    if let Ok(c) = vertex_cone_pllp(p, v) {
        let rc = c.cone_rsv();
        if &rc != rsv {
            log::warn!("RSV at {apex}: {rsv} in P, {rc} for the vertex cone");
        }
    }
}

/// Euler obstructions on all faces of a 3-polytope.
pub fn threefold_euler_table(p: &LatticePolytope) -> Result<ThreefoldEulerTable> {
    require_3d(p)?;
    let w = working_copy(p);
    let t = table_in_working(&w.poly)?;
    Ok(ThreefoldEulerTable {
        eu_polytope: t.eu_polytope,
        eu_facets: w.facet.iter().map(|&f| t.eu_facets[f].clone()).collect(),
        eu_edges: w.edge.iter().map(|&e| t.eu_edges[e].clone()).collect(),
        edge_cones: w.edge.iter().map(|&e| t.edge_cones[e].clone()).collect(),
        eu_vertices: w.vertex.iter().map(|&v| t.eu_vertices[v].clone()).collect(),
        rsv: w.vertex.iter().map(|&v| t.rsv[v].clone()).collect(),
        facet_cones: w
            .vertex
            .iter()
            .map(|&v| {
                t.facet_cones[v]
                    .iter()
                    .map(|(f, c)| (w.facet.iter().position(|x| x == f).expect("bijection"), c.clone()))
                    .collect()
            })
            .collect(),
    })
}

/// Euler obstruction at a vertex of a 3-polytope.
pub fn vertex_eu(p: &LatticePolytope, v: &LatticePoint) -> Result<BigInt> {
    let i = p.vertex_index(v).ok_or(Error::NotAVertex)?;
    Ok(threefold_euler_table(p)?.eu_vertices[i].clone())
}

fn degree_from_table(p: &LatticePolytope, t: &ThreefoldEulerTable) -> (BigInt, BigInt, BigInt) {
    let edge_term: BigInt = (0..p.edges().len()).map(|e| &t.eu_edges[e] * p.edge_length(e)).sum();
    let vertex_term: BigInt = t.eu_vertices.iter().sum();
    let area: BigInt = (0..p.facets().len()).map(|f| p.facet_area(f)).sum();
    let degree = BigInt::from(4) * p.normalized_volume() - BigInt::from(3) * &area
        + BigInt::from(2) * &edge_term
        - &vertex_term;
    (degree, edge_term, vertex_term)
}

/// Full report for a 3-polytope: per-face Euler obstructions with cone data,
/// the formula terms, the dual degree and whether it vanishes.
pub fn threefold_dual_degree(p: &LatticePolytope) -> Result<DualDegreeReport> {
    let t = threefold_euler_table(p)?;
    let verts = p.vertices();
    let mut faces: Vec<FaceReport> = (0..verts.len())
        .map(|v| FaceReport {
            dim: 0,
            vertices: vec![verts[v].clone()],
            eu: t.eu_vertices[v].clone(),
            cone_type: None,
            hj: None,
            rsv: Some(t.rsv[v].clone()),
            resolution: None,
        })
        .collect();
    for (e, ends) in p.edges().iter().enumerate() {
        let c = &t.edge_cones[e];
        faces.push(FaceReport {
            dim: 1,
            vertices: ends.iter().map(|&i| verts[i].clone()).collect(),
            eu: t.eu_edges[e].clone(),
            cone_type: Some(c.clone()),
            hj: Some(c.expansion()),
            rsv: Some(cone_rsv(c)),
            resolution: Some(resolution_data(&dual_cone_type(c))),
        });
    }
    for (f, facet) in p.facets().iter().enumerate() {
        faces.push(FaceReport {
            dim: 2,
            vertices: facet.vertices.iter().map(|&i| verts[i].clone()).collect(),
            eu: t.eu_facets[f].clone(),
            cone_type: None,
            hj: None,
            rsv: None,
            resolution: None,
        });
    }
    faces.push(FaceReport {
        dim: 3,
        vertices: verts.to_vec(),
        eu: t.eu_polytope.clone(),
        cone_type: None,
        hj: None,
        rsv: None,
        resolution: None,
    });
    let (degree, edge_eu_lengths, vertex_term) = degree_from_table(p, &t);
    Ok(DualDegreeReport {
        input: "polytope".into(),
        faces,
        terms: Terms {
            volume: p.normalized_volume(),
            area: Some((0..p.facets().len()).map(|f| p.facet_area(f)).sum()),
            edges: p.edge_length_sum(),
            edge_eu_lengths: Some(edge_eu_lengths),
            vertices: vertex_term,
        },
        defective: degree.is_zero(),
        degree,
    })
}

/// `4 Vol - 3 A + 2 sum Eu(e) L(e) - sum Eu(v)`.
pub fn threefold_degree(p: &LatticePolytope) -> Result<BigInt> {
    let t = threefold_euler_table(p)?;
    Ok(degree_from_table(p, &t).0)
}

/// Lattice points of a face of `p`, in local coordinates.
fn face_points(p: &LatticePolytope, face: &Face) -> Vec<LatticePoint> {
    let fp = p.face_polytope(face);
    fp.lattice_points()
        .iter()
        .map(|x| p.frame().coords(x).expect("face of p"))
        .collect()
}

/// `[M_outer ∩ span(inner) : M_inner]` for faces `inner ⊂ outer`, where each
/// lattice is generated by differences of the face's lattice points.
fn relative_index(outer: &[LatticePoint], inner: &[LatticePoint]) -> Result<BigInt> {
    let base = &inner[0];
    let outer_diffs: Vec<LatticePoint> = outer.iter().map(|x| x - base).collect();
    let inner_diffs: Vec<LatticePoint> = inner.iter().map(|x| x - base).filter(|x| !x.is_zero()).collect();
    if inner_diffs.is_empty() {
        return Ok(BigInt::one());
    }
    let outer_basis = Sublattice::new(base.dim(), outer_diffs)?.basis();
    let coords: Vec<LatticePoint> = inner_diffs
        .iter()
        .map(|x| {
            outer_basis
                .coords(x)
                .map(LatticePoint::new)
                .ok_or_else(|| Error::NotSublattice(format!("{x}")))
        })
        .collect::<Result<_>>()?;
    let rank = outer_basis.rank();
    let sat = saturated_basis(rank, &coords)?;
    lattice_index(
        &Sublattice::new(rank, sat.vectors().to_vec())?,
        &Sublattice::new(rank, coords)?,
    )
}

/// Subdiagram volume of `P` along edge `e`, from the projected polygon.
fn edge_rsv_by_projection(p: &LatticePolytope, e: usize) -> Result<BigInt> {
    let (images, origin) = edge_projection(p, e)?;
    let polygon = convex_hull(&images)?;
    let v = polygon.vertex_index(&origin).ok_or(Error::NotAVertex)?;
    Ok(subdiagram_volume_at(&polygon, v))
}

/// Degree of the dual variety from the general recursion: Euler obstructions
/// from relative subdiagram volumes of all face pairs, and the signed sum
/// `sum_Q (-1)^codim(Q) (dim Q + 1) Eu(Q) Vol(Q)`.
///
/// Subdiagram volumes of facets and of the polytope along an edge are taken
/// from polygons rather than from continued fractions, and relative lattice
/// indices are computed, so this is independent of [`threefold_dual_degree`].
pub fn threefold_degree_general(p: &LatticePolytope) -> Result<BigInt> {
    require_3d(p)?;
    let w = working_copy(p);
    let p = &w.poly;
    let whole = Face {
        dim: 3,
        vertex_indices: (0..p.vertices().len()).collect(),
    };
    let whole_points = face_points(p, &whole);
    let facet_faces: Vec<Face> = p
        .facets()
        .iter()
        .map(|f| Face {
            dim: 2,
            vertex_indices: sorted(f.vertices.clone()),
        })
        .collect();
    let facet_points: Vec<Vec<LatticePoint>> = facet_faces.iter().map(|f| face_points(p, f)).collect();
    let edge_points: Vec<Vec<LatticePoint>> = p
        .edges()
        .iter()
        .map(|e| {
            face_points(
                p,
                &Face {
                    dim: 1,
                    vertex_indices: e.to_vec(),
                },
            )
        })
        .collect();

    // Eu(f) = i(P, f) RSV(P, f) Eu(P), and RSV(P, f) = 1 in codimension one.
    let eu_facets = facet_points
        .iter()
        .map(|fp| relative_index(&whole_points, fp))
        .collect::<Result<Vec<_>>>()?;

    // Eu(e) = sum_f i(f,e) RSV(f,e) Eu(f) - i(P,e) RSV(P,e) Eu(P)
    let mut eu_edges = Vec::new();
    for (e, ep) in edge_points.iter().enumerate() {
        let mut eu = BigInt::zero();
        for f in p.facets_of_edge(e) {
            eu += relative_index(&facet_points[f], ep)? * &eu_facets[f];
        }
        eu -= relative_index(&whole_points, ep)? * edge_rsv_by_projection(p, e)?;
        eu_edges.push(eu);
    }

    // Eu(v) = sum_e i RSV(e,v) Eu(e) - sum_f i RSV(f,v) Eu(f) + i RSV(P,v)
    let mut eu_vertices = Vec::new();
    for v in 0..p.vertices().len() {
        let mut eu = subdiagram_volume_at(p, v);
        for e in p.edges_at(v) {
            eu += &eu_edges[e];
        }
        for f in p.facets_at(v) {
            let fp = p.face_polytope(&facet_faces[f]);
            let fv = fp.vertex_index(&p.vertices()[v]).ok_or(Error::NotAVertex)?;
            eu -= subdiagram_volume_at(&fp, fv) * &eu_facets[f];
        }
        eu_vertices.push(eu);
    }

    let mut total = BigInt::from(4) * p.normalized_volume();
    for (f, eu) in eu_facets.iter().enumerate() {
        total -= BigInt::from(3) * eu * p.facet_area(f);
    }
    for (e, eu) in eu_edges.iter().enumerate() {
        total += BigInt::from(2) * eu * p.edge_length(e);
    }
    for eu in &eu_vertices {
        total -= eu;
    }
    Ok(total)
}

fn require_isolated_at(p: &LatticePolytope, t: &ThreefoldEulerTable, v: usize) -> Result<()> {
    if let Some(e) = p.edges_at(v).into_iter().find(|&e| !t.edge_cones[e].is_smooth()) {
        let [a, b] = p.edges()[e];
        return Err(Error::NotIsolated(format!(
            "edge {}-{} has cone type {}",
            p.vertices()[a],
            p.vertices()[b],
            t.edge_cones[e]
        )));
    }
    Ok(())
}

/// For a polytope all of whose edges are smooth, checks `Eu(v) >= 1` at every
/// vertex. Fails with [`Error::NotIsolated`] otherwise.
pub fn isolated_vertex_eu_bound_check(p: &LatticePolytope) -> Result<bool> {
    let t = threefold_euler_table(p)?;
    for v in 0..p.vertices().len() {
        require_isolated_at(p, &t, v)?;
    }
    Ok(t.eu_vertices.iter().all(|e| e >= &BigInt::one()))
}

/// At a vertex whose edges are smooth: whether the vertex cone has exactly
/// three edges, whether its compact boundary has no interior lattice points,
/// and whether every compact face is at lattice distance one from the apex.
///
/// The three together hold exactly when `Eu(v) = 1`; a disagreement is
/// reported as [`Error::OracleMismatch`].
pub fn eu_equals_one_characterization(p: &LatticePolytope, v: &LatticePoint) -> Result<(bool, bool, bool)> {
    let i = p.vertex_index(v).ok_or(Error::NotAVertex)?;
    require_3d(p)?;
    let t = threefold_euler_table(p)?;
    require_isolated_at(p, &t, i)?;
    let w = working_copy(p);
    let c = vertex_cone_pllp(&w.poly, w.vertex[i])?;
    let three_edges = c.rays.len() == 3;
    let no_interior = c.pllp.internal_points().is_empty();
    let unit_heights = c.heights.iter().all(|h| h.is_one());
    let predicted = three_edges && no_interior && unit_heights;
    if predicted != t.eu_vertices[i].is_one() {
        return Err(Error::OracleMismatch(format!(
            "Eu({v}) = {} but cone conditions give {:?}",
            t.eu_vertices[i],
            (three_edges, no_interior, unit_heights)
        )));
    }
    Ok((three_edges, no_interior, unit_heights))
}
