//! Piecewise linear lattice polygons: unions of facets of a 3-polytope that
//! form a disc, and the generalized Pick identity `A = 2i + b - 2` on them.
//!
//! The vertex cone construction builds such a disc from the compact faces of
//! `Conv((C ∩ M) \ {0})` for a 3-dimensional cone `C`.

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{primitive, LatticePoint};
use crate::polytope::{convex_hull, Face, LatticePolytope};

/// A union of facets of an ambient 3-polytope, connected through edges and
/// contractible. Points are in the ambient polytope's local coordinates.
#[derive(Clone, Debug)]
pub struct Pllp {
    ambient: LatticePolytope,
    pieces: Vec<usize>,
    internal: Vec<LatticePoint>,
    boundary: Vec<LatticePoint>,
}

impl Pllp {
    /// Builds the pllp made of the listed facets of `ambient`.
    pub fn new(ambient: LatticePolytope, pieces: Vec<usize>) -> Result<Self> {
        if ambient.dim() != 3 {
            return Err(Error::WrongDimension {
                expected: 3,
                actual: ambient.dim(),
            });
        }
        let set: BTreeSet<usize> = pieces.iter().copied().collect();
        if set.is_empty() || set.len() != pieces.len() || set.iter().any(|&f| f >= ambient.facets().len()) {
            return Err(Error::NotPllp("pieces must be distinct facets".into()));
        }
        check_disc(&ambient, &set)?;

        let mut points = BTreeSet::new();
        for &f in &set {
            let face = Face {
                dim: 2,
                vertex_indices: ambient.facets()[f].vertices.clone(),
            };
            let fp = ambient.face_polytope(&face);
            for x in fp.lattice_points() {
                points.insert(ambient.frame().coords(x).expect("face lies in the polytope"));
            }
        }
        let (mut internal, mut boundary) = (Vec::new(), Vec::new());
        for x in points {
            let on_rest = ambient
                .facets()
                .iter()
                .enumerate()
                .any(|(i, f)| !set.contains(&i) && f.normal.dot(&x) == f.offset);
            if on_rest {
                boundary.push(x);
            } else {
                internal.push(x);
            }
        }
        Ok(Pllp {
            ambient,
            pieces: set.into_iter().collect(),
            internal,
            boundary,
        })
    }

    pub fn ambient(&self) -> &LatticePolytope {
        &self.ambient
    }

    pub fn pieces(&self) -> &[usize] {
        &self.pieces
    }

    pub fn internal_points(&self) -> &[LatticePoint] {
        &self.internal
    }

    pub fn boundary_points(&self) -> &[LatticePoint] {
        &self.boundary
    }

    /// Sum of the normalized areas of the pieces.
    pub fn area(&self) -> BigInt {
        self.pieces.iter().map(|&f| self.ambient.facet_area(f)).sum()
    }
}

/// Facets in `set` must be connected through shared edges and their union
/// must have Euler characteristic 1.
fn check_disc(p: &LatticePolytope, set: &BTreeSet<usize>) -> Result<()> {
    let pieces: Vec<usize> = set.iter().copied().collect();
    let shares_edge = |a: usize, b: usize| {
        let va = &p.facets()[a].vertices;
        p.facets()[b].vertices.iter().filter(|v| va.contains(v)).count() >= 2
    };
    let mut seen = vec![false; pieces.len()];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(i) = queue.pop_front() {
        for j in 0..pieces.len() {
            if !seen[j] && shares_edge(pieces[i], pieces[j]) {
                seen[j] = true;
                queue.push_back(j);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::NotPllp("pieces are not connected through edges".into()));
    }
    let verts: BTreeSet<usize> = pieces
        .iter()
        .flat_map(|&f| p.facets()[f].vertices.iter().copied())
        .collect();
    let edges = p
        .edges()
        .iter()
        .filter(|e| {
            pieces.iter().any(|&f| {
                let vs = &p.facets()[f].vertices;
                vs.contains(&e[0]) && vs.contains(&e[1])
            })
        })
        .count();
    let euler = verts.len() as i64 - edges as i64 + pieces.len() as i64;
    if euler != 1 {
        return Err(Error::NotPllp(format!("union has Euler characteristic {euler}")));
    }
    Ok(())
}

/// The generalized Pick identity on a pllp: returns `(A, i, b, A == 2i + b - 2)`.
pub fn pllp_area_check(k: &Pllp) -> (BigInt, usize, usize, bool) {
    let a = k.area();
    let (i, b) = (k.internal_points().len(), k.boundary_points().len());
    let holds = a == BigInt::from(2 * i as i64 + b as i64 - 2);
    (a, i, b, holds)
}

/// The compact boundary of `Conv((C ∩ M) \ {0})` for the cone `C` of a
/// 3-polytope at a vertex, as a pllp, with the lattice distance of each of its
/// pieces from the apex.
#[derive(Clone, Debug)]
pub struct VertexConePllp {
    pub pllp: Pllp,
    /// Primitive edge directions at the vertex, in the polytope's local coordinates.
    pub rays: Vec<LatticePoint>,
    /// Lattice distance from the apex of each piece, aligned with `pllp.pieces()`.
    pub heights: Vec<BigInt>,
}

impl VertexConePllp {
    /// Normalized volume of `C \ Conv((C ∩ M) \ {0})`: each piece contributes
    /// its area times its distance from the apex.
    pub fn cone_rsv(&self) -> BigInt {
        self.pllp
            .pieces()
            .iter()
            .zip(&self.heights)
            .map(|(&f, h)| h * self.pllp.ambient().facet_area(f))
            .sum()
    }

    /// `RSV + e - b`, the Euler obstruction of an isolated vertex computed from the cone alone.
    pub fn cone_eu(&self) -> BigInt {
        self.cone_rsv() + BigInt::from(self.rays.len()) - BigInt::from(self.pllp.boundary_points().len())
    }
}

/// Builds the pllp of the cone of `p` at vertex `v`. The polytope's lattice
/// points must generate its saturated lattice.
pub fn vertex_cone_pllp(p: &LatticePolytope, v: usize) -> Result<VertexConePllp> {
    if p.dim() != 3 {
        return Err(Error::WrongDimension {
            expected: 3,
            actual: p.dim(),
        });
    }
    let apex = &p.local_vertices()[v];
    let rays = p
        .neighbors(v)
        .into_iter()
        .map(|w| primitive(&(&p.local_vertices()[w] - apex)))
        .collect::<Result<Vec<_>>>()?;
    let origin = LatticePoint::zero(3);
    let mut corners = vec![origin.clone()];
    corners.extend(rays.iter().cloned());
    let simplex = convex_hull(&corners)?;
    let mut points: Vec<LatticePoint> = simplex
        .lattice_points()
        .iter()
        .filter(|x| !x.is_zero())
        .cloned()
        .collect();
    points.extend(rays.iter().map(|r| r.scale(&BigInt::from(2))));
    let hull = convex_hull(&points)?;
    let local_origin = hull.frame().coords(&origin).expect("full-dimensional hull");
    let mut pieces = Vec::new();
    let mut heights = Vec::new();
    for (i, f) in hull.facets().iter().enumerate() {
        let slack = f.normal.dot(&local_origin) - &f.offset;
        if slack.is_negative() {
            pieces.push(i);
            heights.push(-slack);
        }
    }
    debug_assert!(heights.iter().all(|h| !h.is_zero() && h >= &BigInt::one()));
    let pllp = Pllp::new(hull, pieces)?;
    Ok(VertexConePllp { pllp, rays, heights })
}
