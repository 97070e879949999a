//! Exact integer linear algebra over lattices of rank at most four.
//!
//! Everything here works over [`BigInt`]: Hermite and Smith normal forms,
//! membership and coordinates in a sublattice, group indices, integer kernels,
//! saturation, and the quotient map `Z^n -> Z^n / Z u` used to project a
//! polytope along an edge.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Shorthand for building a [`BigInt`] from a machine integer.
pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Extended gcd with a non-negative gcd: returns `(g, s, t)` with `s*a + t*b = g`.
pub fn egcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// A point of `Z^n`, `1 <= n <= 4` in practice.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint(Vec<BigInt>);

impl LatticePoint {
    pub fn new(coords: Vec<BigInt>) -> Self {
        LatticePoint(coords)
    }

    pub fn zero(dim: usize) -> Self {
        LatticePoint(vec![BigInt::zero(); dim])
    }

    /// The `i`-th standard basis vector of `Z^dim`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut p = Self::zero(dim);
        p.0[i] = BigInt::one();
        p
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Gcd of the coordinates (zero for the zero vector).
    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn dot(&self, other: &LatticePoint) -> BigInt {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, s: &BigInt) -> LatticePoint {
        LatticePoint(self.0.iter().map(|c| c * s).collect())
    }

    /// Exact division of every coordinate; the caller guarantees divisibility.
    pub fn div_exact(&self, s: &BigInt) -> LatticePoint {
        LatticePoint(self.0.iter().map(|c| c / s).collect())
    }

    /// Coordinates as `i64`, when they all fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.0.iter().map(ToPrimitive::to_i64).collect()
    }

    /// Drops the coordinate at `index`.
    pub fn drop_coord(&self, index: usize) -> LatticePoint {
        LatticePoint(
            self.0
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != index)
                .map(|(_, c)| c.clone())
                .collect(),
        )
    }
}

impl fmt::Debug for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl From<&[i64]> for LatticePoint {
    fn from(v: &[i64]) -> Self {
        LatticePoint(v.iter().map(|&c| BigInt::from(c)).collect())
    }
}

impl<const N: usize> From<[i64; N]> for LatticePoint {
    fn from(v: [i64; N]) -> Self {
        LatticePoint::from(&v[..])
    }
}

impl From<Vec<i64>> for LatticePoint {
    fn from(v: Vec<i64>) -> Self {
        LatticePoint::from(&v[..])
    }
}

impl<'a> Add<&'a LatticePoint> for &'a LatticePoint {
    type Output = LatticePoint;
    fn add(self, rhs: &LatticePoint) -> LatticePoint {
        debug_assert_eq!(self.dim(), rhs.dim());
        LatticePoint(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl<'a> Sub<&'a LatticePoint> for &'a LatticePoint {
    type Output = LatticePoint;
    fn sub(self, rhs: &LatticePoint) -> LatticePoint {
        debug_assert_eq!(self.dim(), rhs.dim());
        LatticePoint(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &LatticePoint {
    type Output = LatticePoint;
    fn neg(self) -> LatticePoint {
        LatticePoint(self.0.iter().map(|c| -c).collect())
    }
}

impl Mul<&LatticePoint> for &BigInt {
    type Output = LatticePoint;
    fn mul(self, rhs: &LatticePoint) -> LatticePoint {
        rhs.scale(self)
    }
}

/// `v` divided by the gcd of its coordinates.
pub fn primitive(v: &LatticePoint) -> Result<LatticePoint> {
    let g = v.content();
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(v.div_exact(&g))
}

/// Lattice length of the segment `[a, b]`: the gcd of the coordinate differences.
pub fn lattice_length(a: &LatticePoint, b: &LatticePoint) -> BigInt {
    (b - a).content()
}

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix whose rows are the given points; all points must share a dimension.
    pub fn from_rows(rows: &[LatticePoint]) -> Result<Self> {
        let cols = rows.first().map_or(0, LatticePoint::dim);
        if rows.iter().any(|r| r.dim() != cols) {
            return Err(Error::DimensionMismatch("rows of different lengths".into()));
        }
        Ok(IntegerMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flat_map(|r| r.coords().iter().cloned()).collect(),
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        let pts: Vec<LatticePoint> = rows.iter().map(|r| LatticePoint::from(*r)).collect();
        Self::from_rows(&pts)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> LatticePoint {
        LatticePoint(self.data[r * self.cols..(r + 1) * self.cols].to_vec())
    }

    pub fn row_points(&self) -> Vec<LatticePoint> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntegerMatrix) -> Result<IntegerMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let s: BigInt = (0..self.cols).map(|k| self.get(i, k) * other.get(k, j)).sum();
                out.set(i, j, s);
            }
        }
        Ok(out)
    }

    /// `self * v` for a column vector `v`.
    pub fn apply(&self, v: &LatticePoint) -> LatticePoint {
        debug_assert_eq!(self.cols, v.dim());
        LatticePoint(
            (0..self.rows)
                .map(|i| (0..self.cols).map(|k| self.get(i, k) * &v.0[k]).sum())
                .collect(),
        )
    }

    /// Determinant of a square matrix by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("determinant of non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&r| !a.get(r, k).is_zero()) {
                    Some(r) => {
                        a.swap_rows(k, r);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        Ok(sign * a.get(n - 1, n - 1))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// Replaces rows `(i, j)` by `(p*ri + q*rj, r*ri + s*rj)`.
    fn combine_rows(&mut self, i: usize, j: usize, [p, q, r, s]: [&BigInt; 4]) {
        for c in 0..self.cols {
            let (x, y) = (self.get(i, c).clone(), self.get(j, c).clone());
            self.set(i, c, p * &x + q * &y);
            self.set(j, c, r * &x + s * &y);
        }
    }

    fn add_row_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        for c in 0..self.cols {
            let v = self.get(target, c) + factor * self.get(source, c);
            self.set(target, c, v);
        }
    }

    fn add_col_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        for r in 0..self.rows {
            let v = self.get(r, target) + factor * self.get(r, source);
            self.set(r, target, v);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self.get(r, c);
            self.set(r, c, v);
        }
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{:?}", self.row(r))?;
        }
        write!(f, "]")
    }
}

/// Row-style Hermite normal form: returns `(h, u)` with `u` unimodular and `h = u * m`.
///
/// `h` is in row echelon form, pivots are positive, pivot columns strictly
/// increase, entries above a pivot lie in `[0, pivot)`, and zero rows come last.
/// If `m` is already in this form the returned `u` is the identity.
pub fn hermite_normal_form(m: &IntegerMatrix) -> (IntegerMatrix, IntegerMatrix) {
    let mut h = m.clone();
    let mut u = IntegerMatrix::identity(m.rows);
    let mut pivot_row = 0;
    for col in 0..h.cols {
        if pivot_row == h.rows {
            break;
        }
        for r in pivot_row + 1..h.rows {
            if h.get(r, col).is_zero() {
                continue;
            }
            let a = h.get(pivot_row, col).clone();
            let b = h.get(r, col).clone();
            let (g, s, t) = egcd(&a, &b);
            let (nb, na) = (-(&b / &g), &a / &g);
            h.combine_rows(pivot_row, r, [&s, &t, &nb, &na]);
            u.combine_rows(pivot_row, r, [&s, &t, &nb, &na]);
        }
        if h.get(pivot_row, col).is_zero() {
            continue;
        }
        if h.get(pivot_row, col).is_negative() {
            h.negate_row(pivot_row);
            u.negate_row(pivot_row);
        }
        let p = h.get(pivot_row, col).clone();
        for r in 0..pivot_row {
            let q = h.get(r, col).div_floor(&p);
            if !q.is_zero() {
                let nq = -q;
                h.add_row_multiple(r, pivot_row, &nq);
                u.add_row_multiple(r, pivot_row, &nq);
            }
        }
        pivot_row += 1;
    }
    (h, u)
}

/// Diagonal of the Smith normal form, length `min(rows, cols)`, with
/// `d1 | d2 | ...` and zeros last.
pub fn smith_normal_form(m: &IntegerMatrix) -> Vec<BigInt> {
    let mut a = m.clone();
    let n = a.rows.min(a.cols);
    let mut diag = Vec::with_capacity(n);
    for t in 0..n {
        // smallest nonzero entry of the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for r in t..a.rows {
            for c in t..a.cols {
                let v = a.get(r, c);
                if !v.is_zero() && best.is_none_or(|(br, bc)| v.abs() < a.get(br, bc).abs()) {
                    best = Some((r, c));
                }
            }
        }
        let Some((br, bc)) = best else {
            diag.extend(std::iter::repeat_n(BigInt::zero(), n - t));
            break;
        };
        a.swap_rows(t, br);
        a.swap_cols(t, bc);
        loop {
            let mut clean = true;
            for r in t + 1..a.rows {
                if a.get(r, t).is_zero() {
                    continue;
                }
                let q = a.get(r, t).div_floor(a.get(t, t));
                a.add_row_multiple(r, t, &-q);
                if !a.get(r, t).is_zero() {
                    a.swap_rows(t, r);
                    clean = false;
                }
            }
            for c in t + 1..a.cols {
                if a.get(t, c).is_zero() {
                    continue;
                }
                let q = a.get(t, c).div_floor(a.get(t, t));
                a.add_col_multiple(c, t, &-q);
                if !a.get(t, c).is_zero() {
                    a.swap_cols(t, c);
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            let pivot = a.get(t, t).clone();
            let offending = (t + 1..a.rows)
                .find(|&r| (t + 1..a.cols).any(|c| !a.get(r, c).is_multiple_of(&pivot)));
            match offending {
                Some(r) => a.add_row_multiple(t, r, &BigInt::one()),
                None => break,
            }
        }
        diag.push(a.get(t, t).abs());
    }
    diag
}

/// A lattice basis kept in Hermite normal form, so that membership and
/// coordinates are computed by forward substitution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBasis {
    ambient_dim: usize,
    rows: Vec<LatticePoint>,
    pivots: Vec<usize>,
}

impl LatticeBasis {
    /// Basis of the lattice generated by `generators` in `Z^ambient_dim`.
    pub fn generated_by(ambient_dim: usize, generators: &[LatticePoint]) -> Result<Self> {
        if generators.iter().any(|g| g.dim() != ambient_dim) {
            return Err(Error::DimensionMismatch("generator of wrong dimension".into()));
        }
        if generators.is_empty() {
            return Ok(LatticeBasis {
                ambient_dim,
                rows: vec![],
                pivots: vec![],
            });
        }
        let (h, _) = hermite_normal_form(&IntegerMatrix::from_rows(generators)?);
        let mut rows = Vec::new();
        let mut pivots = Vec::new();
        for r in 0..h.rows() {
            let row = h.row(r);
            if let Some(p) = row.coords().iter().position(|c| !c.is_zero()) {
                rows.push(row);
                pivots.push(p);
            }
        }
        Ok(LatticeBasis {
            ambient_dim,
            rows,
            pivots,
        })
    }

    pub fn standard(dim: usize) -> Self {
        LatticeBasis {
            ambient_dim: dim,
            rows: (0..dim).map(|i| LatticePoint::unit(dim, i)).collect(),
            pivots: (0..dim).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn vectors(&self) -> &[LatticePoint] {
        &self.rows
    }

    /// Integer coordinates of `x` in this basis, or `None` if `x` is not in the lattice.
    pub fn coords(&self, x: &LatticePoint) -> Option<Vec<BigInt>> {
        if x.dim() != self.ambient_dim {
            return None;
        }
        let mut rem = x.clone();
        let mut out = Vec::with_capacity(self.rows.len());
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let (q, r) = rem.0[p].div_rem(&row.0[p]);
            if !r.is_zero() {
                return None;
            }
            if !q.is_zero() {
                rem = &rem - &row.scale(&q);
            }
            out.push(q);
        }
        rem.is_zero().then_some(out)
    }

    pub fn contains(&self, x: &LatticePoint) -> bool {
        self.coords(x).is_some()
    }

    /// The lattice point with the given coordinates.
    pub fn point(&self, coords: &[BigInt]) -> LatticePoint {
        let mut p = LatticePoint::zero(self.ambient_dim);
        for (c, row) in coords.iter().zip(&self.rows) {
            p = &p + &row.scale(c);
        }
        p
    }

    /// Index in `Z^n` of a full-rank lattice (`None` when the rank is deficient).
    pub fn index_in_ambient(&self) -> Option<BigInt> {
        (self.rank() == self.ambient_dim)
            .then(|| self.rows.iter().zip(&self.pivots).map(|(r, &p)| r.0[p].abs()).product())
    }
}

/// A sublattice of `Z^n` given by generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sublattice {
    pub ambient_dim: usize,
    pub generators: Vec<LatticePoint>,
}

impl Sublattice {
    pub fn new(ambient_dim: usize, generators: Vec<LatticePoint>) -> Result<Self> {
        if generators.iter().any(|g| g.dim() != ambient_dim) {
            return Err(Error::DimensionMismatch("generator of wrong dimension".into()));
        }
        Ok(Sublattice {
            ambient_dim,
            generators,
        })
    }

    /// All of `Z^n`.
    pub fn full(ambient_dim: usize) -> Self {
        Sublattice {
            ambient_dim,
            generators: (0..ambient_dim).map(|i| LatticePoint::unit(ambient_dim, i)).collect(),
        }
    }

    /// The lattice generated by the differences `p - points[0]`.
    pub fn of_differences(points: &[LatticePoint]) -> Result<Self> {
        let Some(base) = points.first() else {
            return Err(Error::DimensionMismatch("no points".into()));
        };
        Self::new(base.dim(), points[1..].iter().map(|p| p - base).collect())
    }

    pub fn basis(&self) -> LatticeBasis {
        LatticeBasis::generated_by(self.ambient_dim, &self.generators)
            .expect("generators checked at construction")
    }

    pub fn rank(&self) -> usize {
        self.basis().rank()
    }
}

/// Group index `[super : sub]`, via the Smith form of `sub` written in a basis of `super`.
pub fn lattice_index(sup: &Sublattice, sub: &Sublattice) -> Result<BigInt> {
    if sup.ambient_dim != sub.ambient_dim {
        return Err(Error::NotSublattice("ambient dimensions differ".into()));
    }
    let basis = sup.basis();
    let r = basis.rank();
    let mut coords = Vec::with_capacity(sub.generators.len());
    for g in &sub.generators {
        match basis.coords(g) {
            Some(c) => coords.push(LatticePoint::new(c)),
            None => return Err(Error::NotSublattice(format!("{g} not in the super-lattice"))),
        }
    }
    if r == 0 {
        return Ok(BigInt::one());
    }
    if coords.is_empty() {
        return Err(Error::NotSublattice("rank mismatch".into()));
    }
    let diag = smith_normal_form(&IntegerMatrix::from_rows(&coords)?);
    let nonzero: Vec<&BigInt> = diag.iter().filter(|d| !d.is_zero()).collect();
    if nonzero.len() != r {
        return Err(Error::NotSublattice("rank mismatch".into()));
    }
    Ok(nonzero.into_iter().product())
}

/// Basis of the integer kernel `{x in Z^cols : m x = 0}`; the result is saturated.
pub fn integer_kernel(m: &IntegerMatrix) -> Vec<LatticePoint> {
    let (h, u) = hermite_normal_form(&m.transpose());
    (0..h.rows())
        .filter(|&r| h.row(r).is_zero())
        .map(|r| u.row(r))
        .collect()
}

/// Basis of `span_Q(vectors) ∩ Z^n`.
pub fn saturated_basis(ambient_dim: usize, vectors: &[LatticePoint]) -> Result<LatticeBasis> {
    let nonzero: Vec<LatticePoint> = vectors.iter().filter(|v| !v.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return LatticeBasis::generated_by(ambient_dim, &[]);
    }
    let annihilator = integer_kernel(&IntegerMatrix::from_rows(&nonzero)?);
    if annihilator.is_empty() {
        return Ok(LatticeBasis::standard(ambient_dim));
    }
    let span = integer_kernel(&IntegerMatrix::from_rows(&annihilator)?);
    LatticeBasis::generated_by(ambient_dim, &span)
}

/// An affine lattice `origin + L`, used to give integer coordinates to points
/// of a lower-dimensional face.
#[derive(Clone, Debug)]
pub struct AffineLattice {
    pub origin: LatticePoint,
    pub basis: LatticeBasis,
}

impl AffineLattice {
    /// All integer points of the affine span of `points`.
    pub fn saturated(points: &[LatticePoint]) -> Result<Self> {
        let origin = points.first().ok_or_else(|| Error::DimensionMismatch("no points".into()))?;
        let diffs: Vec<LatticePoint> = points.iter().map(|p| p - origin).collect();
        Ok(AffineLattice {
            origin: origin.clone(),
            basis: saturated_basis(origin.dim(), &diffs)?,
        })
    }

    /// The affine lattice generated by `points` themselves.
    pub fn generated_by(points: &[LatticePoint]) -> Result<Self> {
        let origin = points.first().ok_or_else(|| Error::DimensionMismatch("no points".into()))?;
        let diffs: Vec<LatticePoint> = points.iter().map(|p| p - origin).collect();
        Ok(AffineLattice {
            origin: origin.clone(),
            basis: LatticeBasis::generated_by(origin.dim(), &diffs)?,
        })
    }

    pub fn rank(&self) -> usize {
        self.basis.rank()
    }

    pub fn coords(&self, x: &LatticePoint) -> Option<LatticePoint> {
        self.basis.coords(&(x - &self.origin)).map(LatticePoint::new)
    }

    pub fn point(&self, coords: &LatticePoint) -> LatticePoint {
        &self.origin + &self.basis.point(coords.coords())
    }
}

/// The quotient map `Z^n -> Z^n / Z u ≅ Z^(n-1)` for a primitive `u`.
///
/// Realized by a unimodular `U` with `U u = e_1`; the image of `x` is `U x`
/// with its first coordinate dropped.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    transform: IntegerMatrix,
}

impl QuotientMap {
    pub fn new(direction: &LatticePoint) -> Result<Self> {
        if direction.is_zero() {
            return Err(Error::ZeroVector);
        }
        if !direction.content().is_one() {
            return Err(Error::NotPrimitive);
        }
        let column = IntegerMatrix::from_rows(std::slice::from_ref(direction))?.transpose();
        let (h, u) = hermite_normal_form(&column);
        debug_assert!(h.get(0, 0).is_one());
        Ok(QuotientMap { transform: u })
    }

    pub fn apply(&self, x: &LatticePoint) -> LatticePoint {
        self.transform.apply(x).drop_coord(0)
    }
}

/// Projects `points` to `Z^n / Z direction`, see [`QuotientMap`].
pub fn quotient_projection(
    direction: &LatticePoint,
    points: &[LatticePoint],
) -> Result<Vec<LatticePoint>> {
    let map = QuotientMap::new(direction)?;
    Ok(points.iter().map(|p| map.apply(p)).collect())
}

/// `|det| = 1` test for `n` vectors of `Z^n`.
pub fn is_unimodular_basis(vectors: &[LatticePoint]) -> Result<bool> {
    Ok(IntegerMatrix::from_rows(vectors)?.det()?.abs().is_one())
}

/// Lattice points of the half-open parallelepiped `{sum c_i b_i : 0 <= c_i < 1}`.
///
/// The vectors form a basis of `Z^n` exactly when this set is `{0}`. Scans the
/// bounding box, so it is meant for small vectors.
pub fn parallelepiped_points(vectors: &[LatticePoint]) -> Result<Vec<LatticePoint>> {
    let n = vectors.len();
    let m = IntegerMatrix::from_rows(vectors)?;
    if m.cols() != n {
        return Err(Error::DimensionMismatch("need n vectors in Z^n".into()));
    }
    let det = m.det()?;
    if det.is_zero() {
        return Err(Error::DegenerateCone);
    }
    // x = c * B (rows); c = x * adj(B) / det
    let adj = adjugate(&m)?;
    let (lo, hi): (Vec<BigInt>, Vec<BigInt>) = (0..n)
        .map(|j| {
            let lo: BigInt = (0..n).map(|i| m.get(i, j).min(&BigInt::zero()).clone()).sum();
            let hi: BigInt = (0..n).map(|i| m.get(i, j).max(&BigInt::zero()).clone()).sum();
            (lo, hi)
        })
        .unzip();
    let mut found = Vec::new();
    let mut cur = lo.clone();
    loop {
        let x = LatticePoint::new(cur.clone());
        let inside = (0..n).all(|i| {
            let num: BigInt = (0..n).map(|j| &x.0[j] * adj.get(j, i)).sum();
            let (num, den) = if det.is_negative() { (-num, -det.clone()) } else { (num, det.clone()) };
            !num.is_negative() && num < den
        });
        if inside {
            found.push(x);
        }
        // odometer increment
        let mut k = 0;
        loop {
            if k == n {
                return Ok(found);
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

fn adjugate(m: &IntegerMatrix) -> Result<IntegerMatrix> {
    let n = m.rows();
    let mut adj = IntegerMatrix::zeros(n, n);
    if n == 1 {
        adj.set(0, 0, BigInt::one());
        return Ok(adj);
    }
    for i in 0..n {
        for j in 0..n {
            let minor_rows: Vec<LatticePoint> = (0..n)
                .filter(|&r| r != i)
                .map(|r| m.row(r).drop_coord(j))
                .collect();
            let minor = IntegerMatrix::from_rows(&minor_rows)?.det()?;
            let sign = if (i + j) % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            // adj(B)[j][i] = cofactor(i, j)
            adj.set(j, i, sign * minor);
        }
    }
    Ok(adj)
}
