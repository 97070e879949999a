//! Lattice polytopes of dimension at most 3: exact convex hulls, face
//! lattices, lattice points, normalized volumes and subdiagram volumes.
//!
//! A polytope keeps its points in two coordinate systems. Ambient coordinates
//! are what the caller passed in. Local coordinates come from a basis of the
//! integer points of the affine span, so a polytope of dimension `d` always
//! lives full-dimensionally in `Z^d` locally, whatever the ambient dimension.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{primitive, AffineLattice, LatticePoint, Sublattice};

/// A codimension-one face, with an inward primitive normal in local
/// coordinates: `normal . x >= offset` on the polytope, with equality on the face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    /// Vertex indices; in cyclic order when the facet is a polygon.
    pub vertices: Vec<usize>,
    pub normal: LatticePoint,
    pub offset: BigInt,
}

/// A face given by its dimension and sorted vertex indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face {
    pub dim: usize,
    pub vertex_indices: Vec<usize>,
}

/// `Conv` of finitely many lattice points, with its face lattice.
#[derive(Clone, Debug)]
pub struct LatticePolytope {
    ambient_dim: usize,
    frame: AffineLattice,
    vertices: Vec<LatticePoint>,
    local: Vec<LatticePoint>,
    /// Boundary cycle of a polygon; empty otherwise.
    cycle: Vec<usize>,
    edges: Vec<[usize; 2]>,
    facets: Vec<Facet>,
    lattice_points: OnceLock<Vec<LatticePoint>>,
    index: OnceLock<BigInt>,
}

fn cross(u: &LatticePoint, v: &LatticePoint) -> LatticePoint {
    let (a, b) = (u.coords(), v.coords());
    LatticePoint::new(vec![
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ])
}

fn orient3(a: &LatticePoint, b: &LatticePoint, c: &LatticePoint, d: &LatticePoint) -> BigInt {
    cross(&(b - a), &(c - a)).dot(&(d - a))
}

fn orient2(a: &LatticePoint, b: &LatticePoint, c: &LatticePoint) -> BigInt {
    let (u, v) = (b - a, c - a);
    &u.coords()[0] * &v.coords()[1] - &u.coords()[1] * &v.coords()[0]
}

/// Strict convex hull of distinct sorted points in `Z^2`, counter-clockwise.
fn hull2(pts: &[LatticePoint]) -> Vec<usize> {
    if pts.len() < 3 {
        return (0..pts.len()).collect();
    }
    let mut lower: Vec<usize> = Vec::new();
    for i in 0..pts.len() {
        while lower.len() >= 2
            && !orient2(&pts[lower[lower.len() - 2]], &pts[lower[lower.len() - 1]], &pts[i]).is_positive()
        {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for i in (0..pts.len()).rev() {
        while upper.len() >= 2
            && !orient2(&pts[upper[upper.len() - 2]], &pts[upper[upper.len() - 1]], &pts[i]).is_positive()
        {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

struct RawFacet {
    cycle: Vec<LatticePoint>,
    normal: LatticePoint,
    offset: BigInt,
}

/// Incremental hull of distinct points spanning `Z^3`; coplanar triangles are
/// merged into polygonal facets.
fn hull3(pts: &[LatticePoint]) -> Vec<RawFacet> {
    let i0 = 0;
    let i1 = (1..pts.len()).find(|&i| pts[i] != pts[i0]).expect("full rank");
    let i2 = (0..pts.len())
        .find(|&i| !cross(&(&pts[i1] - &pts[i0]), &(&pts[i] - &pts[i0])).is_zero())
        .expect("full rank");
    let i3 = (0..pts.len())
        .find(|&i| !orient3(&pts[i0], &pts[i1], &pts[i2], &pts[i]).is_zero())
        .expect("full rank");
    let mut faces: Vec<[usize; 3]> = Vec::new();
    for (a, b, c, opposite) in [(i0, i1, i2, i3), (i0, i1, i3, i2), (i0, i2, i3, i1), (i1, i2, i3, i0)] {
        if orient3(&pts[a], &pts[b], &pts[c], &pts[opposite]).is_positive() {
            faces.push([a, c, b]);
        } else {
            faces.push([a, b, c]);
        }
    }
    for (p, point) in pts.iter().enumerate() {
        if [i0, i1, i2, i3].contains(&p) {
            continue;
        }
        let visible: Vec<bool> = faces
            .iter()
            .map(|f| orient3(&pts[f[0]], &pts[f[1]], &pts[f[2]], point).is_positive())
            .collect();
        if !visible.iter().any(|&v| v) {
            continue;
        }
        let mut directed = HashSet::new();
        for (f, _) in faces.iter().zip(&visible).filter(|(_, &v)| v) {
            for j in 0..3 {
                directed.insert((f[j], f[(j + 1) % 3]));
            }
        }
        let mut next: Vec<[usize; 3]> = faces
            .iter()
            .zip(&visible)
            .filter(|(_, &v)| !v)
            .map(|(f, _)| *f)
            .collect();
        let mut horizon: Vec<(usize, usize)> = directed
            .iter()
            .filter(|(a, b)| !directed.contains(&(*b, *a)))
            .copied()
            .collect();
        horizon.sort_unstable();
        next.extend(horizon.into_iter().map(|(a, b)| [a, b, p]));
        faces = next;
    }
    let mut planes: BTreeMap<(LatticePoint, BigInt), BTreeSet<usize>> = BTreeMap::new();
    for f in &faces {
        let outward = primitive(&cross(&(&pts[f[1]] - &pts[f[0]]), &(&pts[f[2]] - &pts[f[0]])))
            .expect("hull triangles are nondegenerate");
        let offset = outward.dot(&pts[f[0]]);
        planes.entry((outward, offset)).or_default().extend(f.iter().copied());
    }
    planes
        .into_iter()
        .map(|((outward, offset), members)| {
            let drop = outward.coords().iter().position(|c| !c.is_zero()).expect("nonzero normal");
            let members: Vec<usize> = members.into_iter().collect();
            let mut projected: Vec<(LatticePoint, usize)> =
                members.iter().map(|&i| (pts[i].drop_coord(drop), i)).collect();
            projected.sort();
            let flat: Vec<LatticePoint> = projected.iter().map(|(q, _)| q.clone()).collect();
            let cycle = hull2(&flat).into_iter().map(|j| pts[projected[j].1].clone()).collect();
            RawFacet {
                cycle,
                normal: -&outward,
                offset: -offset,
            }
        })
        .collect()
}

/// Exact convex hull of a nonempty point set of intrinsic dimension at most 3.
pub fn convex_hull(points: &[LatticePoint]) -> Result<LatticePolytope> {
    let first = points.first().ok_or_else(|| Error::DimensionMismatch("no points".into()))?;
    let ambient_dim = first.dim();
    if points.iter().any(|p| p.dim() != ambient_dim) {
        return Err(Error::DimensionMismatch("points of different dimensions".into()));
    }
    let frame = AffineLattice::saturated(points)?;
    let dim = frame.rank();
    if dim > 3 {
        return Err(Error::WrongDimension {
            expected: 3,
            actual: dim,
        });
    }
    let mut local: Vec<LatticePoint> = points
        .iter()
        .map(|p| frame.coords(p).expect("points lie in their saturated span"))
        .collect();
    local.sort();
    local.dedup();
    Ok(match dim {
        0 => LatticePolytope::assemble(ambient_dim, frame, local, vec![], vec![]),
        1 => {
            let (lo, hi) = (local[0].clone(), local[local.len() - 1].clone());
            let facets = vec![
                RawFacet {
                    cycle: vec![lo.clone()],
                    normal: LatticePoint::from([1]),
                    offset: lo.coords()[0].clone(),
                },
                RawFacet {
                    cycle: vec![hi.clone()],
                    normal: LatticePoint::from([-1]),
                    offset: -hi.coords()[0].clone(),
                },
            ];
            LatticePolytope::assemble(ambient_dim, frame, vec![lo, hi], vec![], facets)
        }
        2 => {
            let cycle: Vec<LatticePoint> = hull2(&local).into_iter().map(|i| local[i].clone()).collect();
            let facets = (0..cycle.len())
                .map(|i| {
                    let (a, b) = (&cycle[i], &cycle[(i + 1) % cycle.len()]);
                    let t = b - a;
                    let n = primitive(&LatticePoint::new(vec![-t.coords()[1].clone(), t.coords()[0].clone()]))
                        .expect("distinct hull vertices");
                    let offset = n.dot(a);
                    RawFacet {
                        cycle: vec![a.clone(), b.clone()],
                        normal: n,
                        offset,
                    }
                })
                .collect();
            LatticePolytope::assemble(ambient_dim, frame, cycle.clone(), cycle, facets)
        }
        _ => {
            let facets = hull3(&local);
            let verts: BTreeSet<LatticePoint> =
                facets.iter().flat_map(|f| f.cycle.iter().cloned()).collect();
            LatticePolytope::assemble(ambient_dim, frame, verts.into_iter().collect(), vec![], facets)
        }
    })
}

impl LatticePolytope {
    fn assemble(
        ambient_dim: usize,
        frame: AffineLattice,
        local_vertices: Vec<LatticePoint>,
        cycle: Vec<LatticePoint>,
        raw_facets: Vec<RawFacet>,
    ) -> Self {
        let mut pairs: Vec<(LatticePoint, LatticePoint)> = local_vertices
            .into_iter()
            .map(|l| (frame.point(&l), l))
            .collect();
        pairs.sort();
        let lookup: BTreeMap<LatticePoint, usize> =
            pairs.iter().enumerate().map(|(i, (_, l))| (l.clone(), i)).collect();
        let (vertices, local): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
        let cycle: Vec<usize> = cycle.iter().map(|l| lookup[l]).collect();
        let facets: Vec<Facet> = raw_facets
            .into_iter()
            .map(|f| Facet {
                vertices: f.cycle.iter().map(|l| lookup[l]).collect(),
                normal: f.normal,
                offset: f.offset,
            })
            .collect();
        let dim = frame.rank();
        let mut edges: BTreeSet<[usize; 2]> = BTreeSet::new();
        match dim {
            1 => {
                edges.insert([0, 1]);
            }
            2 => {
                for f in &facets {
                    edges.insert(sorted_pair(f.vertices[0], f.vertices[1]));
                }
            }
            3 => {
                for f in &facets {
                    let n = f.vertices.len();
                    for i in 0..n {
                        edges.insert(sorted_pair(f.vertices[i], f.vertices[(i + 1) % n]));
                    }
                }
            }
            _ => {}
        }
        LatticePolytope {
            ambient_dim,
            frame,
            vertices,
            local,
            cycle,
            edges: edges.into_iter().collect(),
            facets,
            lattice_points: OnceLock::new(),
            index: OnceLock::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Intrinsic dimension.
    pub fn dim(&self) -> usize {
        self.frame.rank()
    }

    /// Vertices in ambient coordinates, sorted lexicographically.
    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    /// Vertices in local coordinates, in the same order as [`Self::vertices`].
    pub fn local_vertices(&self) -> &[LatticePoint] {
        &self.local
    }

    pub fn frame(&self) -> &AffineLattice {
        &self.frame
    }

    pub fn vertex_index(&self, v: &LatticePoint) -> Option<usize> {
        self.vertices.iter().position(|w| w == v)
    }

    /// Edges as sorted vertex-index pairs.
    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    /// Codimension-one faces.
    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Boundary cycle (counter-clockwise in local coordinates) of a polygon.
    pub fn boundary_cycle(&self) -> &[usize] {
        &self.cycle
    }

    pub fn edges_at(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len()).filter(|&e| self.edges[e].contains(&v)).collect()
    }

    pub fn facets_at(&self, v: usize) -> Vec<usize> {
        (0..self.facets.len()).filter(|&f| self.facets[f].vertices.contains(&v)).collect()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges_at(v)
            .into_iter()
            .map(|e| {
                let [a, b] = self.edges[e];
                if a == v {
                    b
                } else {
                    a
                }
            })
            .collect()
    }

    /// Facets containing both endpoints of an edge.
    pub fn facets_of_edge(&self, e: usize) -> Vec<usize> {
        let [a, b] = self.edges[e];
        (0..self.facets.len())
            .filter(|&f| self.facets[f].vertices.contains(&a) && self.facets[f].vertices.contains(&b))
            .collect()
    }

    /// All faces, by increasing dimension, including the polytope itself.
    pub fn faces(&self) -> Vec<Face> {
        let mut out: Vec<Face> = (0..self.vertices.len())
            .map(|i| Face {
                dim: 0,
                vertex_indices: vec![i],
            })
            .collect();
        out.extend(self.edges.iter().map(|e| Face {
            dim: 1,
            vertex_indices: e.to_vec(),
        }));
        if self.dim() == 3 {
            out.extend(self.facets.iter().map(|f| {
                let mut v = f.vertices.clone();
                v.sort_unstable();
                Face {
                    dim: 2,
                    vertex_indices: v,
                }
            }));
        }
        if self.dim() >= 2 {
            out.push(Face {
                dim: self.dim(),
                vertex_indices: (0..self.vertices.len()).collect(),
            });
        }
        out
    }

    /// The polytope spanned by the vertices of a face.
    pub fn face_polytope(&self, face: &Face) -> LatticePolytope {
        let pts: Vec<LatticePoint> = face.vertex_indices.iter().map(|&i| self.vertices[i].clone()).collect();
        convex_hull(&pts).expect("faces are nonempty")
    }

    /// `normal . x - offset` for a point given in ambient coordinates, or
    /// `None` if the point is off the affine span.
    pub fn facet_slack(&self, facet: &Facet, x: &LatticePoint) -> Option<BigInt> {
        self.frame.coords(x).map(|l| facet.normal.dot(&l) - &facet.offset)
    }

    pub fn contains(&self, x: &LatticePoint) -> bool {
        match self.frame.coords(x) {
            None => false,
            Some(l) if self.dim() == 0 => l == self.local[0],
            Some(l) => self.facets.iter().all(|f| !(f.normal.dot(&l) < f.offset)),
        }
    }

    /// Whether a point in local coordinates lies in the relative interior.
    pub fn local_interior(&self, l: &LatticePoint) -> bool {
        if self.dim() == 0 {
            return *l == self.local[0];
        }
        self.facets.iter().all(|f| f.normal.dot(l) > f.offset)
    }

    /// Whether a point in local coordinates lies on the relative boundary.
    pub fn local_on_boundary(&self, l: &LatticePoint) -> bool {
        self.facets.iter().any(|f| f.normal.dot(l) == f.offset)
            && self.facets.iter().all(|f| !(f.normal.dot(l) < f.offset))
    }

    /// Whether `x` lies in the relative interior.
    pub fn contains_in_interior(&self, x: &LatticePoint) -> bool {
        match self.frame.coords(x) {
            None => false,
            Some(l) if self.dim() == 0 => l == self.local[0],
            Some(l) => self.facets.iter().all(|f| f.normal.dot(&l) > f.offset),
        }
    }

    fn local_lattice_points(&self) -> Vec<LatticePoint> {
        let d = self.dim();
        if d == 0 {
            return self.local.clone();
        }
        let lo: Vec<BigInt> = (0..d)
            .map(|j| self.local.iter().map(|p| &p.coords()[j]).min().unwrap().clone())
            .collect();
        let hi: Vec<BigInt> = (0..d)
            .map(|j| self.local.iter().map(|p| &p.coords()[j]).max().unwrap().clone())
            .collect();
        let mut out = Vec::new();
        let mut cur: Vec<BigInt> = lo[..d - 1].to_vec();
        loop {
            // exact range of the last coordinate over this fibre
            let mut zlo = lo[d - 1].clone();
            let mut zhi = hi[d - 1].clone();
            let mut feasible = true;
            for f in &self.facets {
                let n = f.normal.coords();
                let partial: BigInt = cur.iter().zip(n).map(|(x, c)| x * c).sum();
                let rhs = &f.offset - partial;
                let nl = &n[d - 1];
                if nl.is_positive() {
                    zlo = zlo.max(rhs.div_ceil(nl));
                } else if nl.is_negative() {
                    zhi = zhi.min(rhs.div_floor(nl));
                } else if rhs.is_positive() {
                    feasible = false;
                    break;
                }
            }
            if feasible {
                let mut z = zlo;
                while z <= zhi {
                    let mut c = cur.clone();
                    c.push(z.clone());
                    out.push(LatticePoint::new(c));
                    z += 1;
                }
            }
            let mut k = 0;
            loop {
                if k == d - 1 {
                    return out;
                }
                if cur[k] < hi[k] {
                    cur[k] += 1;
                    break;
                }
                cur[k] = lo[k].clone();
                k += 1;
            }
        }
    }

    /// All lattice points, in lexicographic order of ambient coordinates.
    pub fn lattice_points(&self) -> &[LatticePoint] {
        self.lattice_points.get_or_init(|| {
            let mut pts: Vec<LatticePoint> =
                self.local_lattice_points().iter().map(|l| self.frame.point(l)).collect();
            pts.sort();
            pts
        })
    }

    /// Normalized volume with respect to the integer points of the affine span.
    pub fn saturated_volume(&self) -> BigInt {
        match self.dim() {
            0 => BigInt::one(),
            1 => (&self.local[1] - &self.local[0]).coords()[0].abs(),
            2 => {
                let n = self.cycle.len();
                let mut s = BigInt::zero();
                for i in 0..n {
                    let (a, b) = (&self.local[self.cycle[i]], &self.local[self.cycle[(i + 1) % n]]);
                    s += &a.coords()[0] * &b.coords()[1] - &a.coords()[1] * &b.coords()[0];
                }
                s.abs()
            }
            _ => {
                let o = &self.local[0];
                let mut s = BigInt::zero();
                for f in self.facets.iter().filter(|f| !f.vertices.contains(&0)) {
                    let a = &self.local[f.vertices[0]];
                    for w in f.vertices[1..].windows(2) {
                        s += orient3(o, a, &self.local[w[0]], &self.local[w[1]]).abs();
                    }
                }
                s
            }
        }
    }

    /// Index of the lattice affinely generated by the lattice points in the
    /// integer points of the affine span. Always 1 in dimension at most 2.
    pub fn generated_lattice_index(&self) -> BigInt {
        self.index
            .get_or_init(|| {
                if self.dim() <= 1 {
                    return BigInt::one();
                }
                let mut gens: Vec<LatticePoint> = self.local.clone();
                for &[a, b] in &self.edges {
                    let step = primitive(&(&self.local[b] - &self.local[a])).expect("distinct");
                    gens.push(&self.local[a] + &step);
                }
                let quick = Sublattice::of_differences(&gens).expect("nonempty").basis();
                if quick.index_in_ambient().is_some_and(|i| i.is_one()) {
                    return BigInt::one();
                }
                let all = self.local_lattice_points();
                Sublattice::of_differences(&all)
                    .expect("nonempty")
                    .basis()
                    .index_in_ambient()
                    .expect("lattice points span the polytope")
            })
            .clone()
    }

    /// Normalized volume with respect to the lattice generated by the lattice points.
    pub fn normalized_volume(&self) -> BigInt {
        self.saturated_volume() / self.generated_lattice_index()
    }

    /// The same polytope written in coordinates of the lattice generated by
    /// its lattice points, with the image index of every vertex. Returns a
    /// clone and the identity when that lattice is saturated.
    pub fn in_generated_lattice(&self) -> (LatticePolytope, Vec<usize>) {
        if self.generated_lattice_index().is_one() {
            return (self.clone(), (0..self.vertices.len()).collect());
        }
        let all = self.local_lattice_points();
        let gen = AffineLattice::generated_by(&all).expect("nonempty");
        let coords: Vec<LatticePoint> = self
            .local
            .iter()
            .map(|l| gen.coords(l).expect("vertices are lattice points"))
            .collect();
        let q = convex_hull(&coords).expect("same dimension");
        let map = coords
            .iter()
            .map(|c| q.vertex_index(c).expect("vertices map to vertices"))
            .collect();
        (q, map)
    }

    /// Lattice length of an edge.
    pub fn edge_length(&self, e: usize) -> BigInt {
        let [a, b] = self.edges[e];
        crate::lattice::lattice_length(&self.local[a], &self.local[b])
    }

    /// Sum of lattice lengths of all edges.
    pub fn edge_length_sum(&self) -> BigInt {
        (0..self.edges.len()).map(|e| self.edge_length(e)).sum()
    }

    /// Normalized area of a facet of a 3-polytope, in the lattice of its plane.
    pub fn facet_area(&self, f: usize) -> BigInt {
        let vs = &self.facets[f].vertices;
        let a = &self.local[vs[0]];
        let mut s = LatticePoint::zero(3);
        for w in vs[1..].windows(2) {
            s = &s + &cross(&(&self.local[w[0]] - a), &(&self.local[w[1]] - a));
        }
        s.content()
    }

    /// Number of lattice points on the relative boundary of a polygon.
    pub fn boundary_point_count(&self) -> BigInt {
        self.edge_length_sum()
    }

    /// The polytope translated so that `v` moves to the origin and scaled by `factor`.
    pub fn dilated_at(&self, v: usize, factor: i64) -> LatticePolytope {
        let f = BigInt::from(factor);
        let apex = &self.vertices[v];
        let pts: Vec<LatticePoint> =
            self.vertices.iter().map(|w| apex + &(w - apex).scale(&f)).collect();
        convex_hull(&pts).expect("same dimension")
    }
}

fn sorted_pair(a: usize, b: usize) -> [usize; 2] {
    if a < b {
        [a, b]
    } else {
        [b, a]
    }
}

/// Lattice points of `p` as a polytope in its own local coordinates.
fn local_copy(p: &LatticePolytope) -> LatticePolytope {
    convex_hull(&p.local).expect("nonempty")
}

/// `Vol(P) - Vol(Conv((P ∩ M) \ {v}))`, both measured in the lattice generated
/// by the lattice points of `P`.
///
/// Only lattice points near `v` are examined: with `r_i` the primitive edge
/// directions at `v`, the hull `H` of the other vertices and the points
/// `v + r_i` lies inside the answer, and every lattice point of `P` outside
/// `H` lies in the hull of `v` and the facets of `H` that `v` sees.
pub fn subdiagram_volume(p: &LatticePolytope, v: &LatticePoint) -> Result<BigInt> {
    let i = p.vertex_index(v).ok_or(Error::NotAVertex)?;
    Ok(subdiagram_volume_at(p, i))
}

/// The hull of `(P ∩ M) \ {v}` together with the lattice points of `P` near
/// `v` that were examined to build it, all in local coordinates of `P`.
pub struct VertexRemoval {
    pub remaining: LatticePolytope,
    pub nearby_points: Vec<LatticePoint>,
}

/// Builds [`VertexRemoval`] for vertex index `v` (see [`subdiagram_volume`]).
pub fn remove_vertex(p: &LatticePolytope, v: usize) -> VertexRemoval {
    let d = p.dim();
    let apex = &p.local[v];
    let mut seeds: Vec<LatticePoint> =
        p.local.iter().enumerate().filter(|(j, _)| *j != v).map(|(_, l)| l.clone()).collect();
    for n in p.neighbors(v) {
        seeds.push(apex + &primitive(&(&p.local[n] - apex)).expect("distinct vertices"));
    }
    if seeds.is_empty() {
        seeds.push(apex.clone());
    }
    let inner = convex_hull(&seeds).expect("nonempty");
    let region = if inner.dim() < d {
        local_copy(p)
    } else {
        let mut corner = vec![apex.clone()];
        for f in inner.facets() {
            if inner.facet_slack(f, apex).expect("same span").is_negative() {
                corner.extend(f.vertices.iter().map(|&j| inner.vertices()[j].clone()));
            }
        }
        convex_hull(&corner).expect("nonempty")
    };
    let nearby_points: Vec<LatticePoint> =
        region.lattice_points().iter().filter(|q| *q != apex).cloned().collect();
    let mut candidates: Vec<LatticePoint> = inner.vertices().to_vec();
    candidates.extend(nearby_points.iter().cloned());
    if d == 0 {
        candidates.clear();
    }
    let remaining = if candidates.is_empty() {
        // a single point: keep a placeholder of lower dimension
        convex_hull(std::slice::from_ref(apex)).expect("nonempty")
    } else {
        convex_hull(&candidates).expect("nonempty")
    };
    VertexRemoval {
        remaining,
        nearby_points,
    }
}

/// [`subdiagram_volume`] for a vertex index.
pub fn subdiagram_volume_at(p: &LatticePolytope, v: usize) -> BigInt {
    if p.dim() == 0 {
        return BigInt::one();
    }
    let removal = remove_vertex(p, v);
    let kept = if removal.remaining.dim() == p.dim() {
        removal.remaining.saturated_volume()
    } else {
        BigInt::zero()
    };
    (p.saturated_volume() - kept) / p.generated_lattice_index()
}

/// Direct evaluation of [`subdiagram_volume`] over all lattice points.
pub fn subdiagram_volume_brute(p: &LatticePolytope, v: usize) -> BigInt {
    let apex = &p.vertices[v];
    let rest: Vec<LatticePoint> = p.lattice_points().iter().filter(|q| *q != apex).cloned().collect();
    let kept = if rest.is_empty() {
        BigInt::zero()
    } else {
        let q = convex_hull(&rest).expect("nonempty");
        if q.dim() == p.dim() {
            q.saturated_volume()
        } else {
            BigInt::zero()
        }
    };
    (p.saturated_volume() - kept) / p.generated_lattice_index()
}

/// Sum of normalized facet areas of a 3-polytope.
pub fn facet_area_sum(p: &LatticePolytope) -> Result<BigInt> {
    if p.dim() != 3 {
        return Err(Error::WrongDimension {
            expected: 3,
            actual: p.dim(),
        });
    }
    Ok((0..p.facets().len()).map(|f| p.facet_area(f)).sum())
}

pub fn normalized_volume(p: &LatticePolytope) -> BigInt {
    p.normalized_volume()
}

pub fn lattice_points(p: &LatticePolytope) -> Vec<LatticePoint> {
    p.lattice_points().to_vec()
}
