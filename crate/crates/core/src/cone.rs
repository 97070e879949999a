//! Two-dimensional rational cones: (d,k) normal forms, Hirzebruch-Jung
//! continued fractions, boundary fans and the Euler obstruction of a cone.
//!
//! A `(d,k)`-cone is `Cone(e1, k*e1 + d*e2)` for a lattice basis `(e1, e2)`,
//! with `0 <= k < d` and `gcd(d,k) = 1`. The smooth cone is `(1,0)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{egcd, IntegerMatrix, LatticePoint, Sublattice};

/// Normalized type `(d,k)` of a two-dimensional cone.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConeType2D {
    d: BigInt,
    k: BigInt,
}

impl ConeType2D {
    pub fn new(d: BigInt, k: BigInt) -> Result<Self> {
        let bad = || Error::InvalidFraction {
            d: d.to_string(),
            k: k.to_string(),
        };
        if !d.is_positive() || k.is_negative() || k >= d || !d.gcd(&k).is_one() {
            return Err(bad());
        }
        Ok(ConeType2D { d, k })
    }

    pub fn from_u64(d: u64, k: u64) -> Result<Self> {
        Self::new(BigInt::from(d), BigInt::from(k))
    }

    pub fn smooth() -> Self {
        ConeType2D {
            d: BigInt::one(),
            k: BigInt::zero(),
        }
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn k(&self) -> &BigInt {
        &self.k
    }

    /// Expansion of `d/k`, or `[1]` for the smooth cone.
    pub fn expansion(&self) -> HjExpansion {
        if self.is_smooth() {
            HjExpansion(vec![BigInt::one()])
        } else {
            hj_expand(&self.d, &self.k).expect("valid type has a valid expansion")
        }
    }

    pub fn is_smooth(&self) -> bool {
        self.d.is_one()
    }

    /// The type obtained by swapping the two rays: `k` becomes its inverse mod `d`.
    pub fn swapped(&self) -> Self {
        if self.is_smooth() {
            return self.clone();
        }
        let (_, inv, _) = egcd(&self.k, &self.d);
        ConeType2D {
            d: self.d.clone(),
            k: inv.mod_floor(&self.d),
        }
    }

    /// Equal up to the order of the rays.
    pub fn equivalent(&self, other: &ConeType2D) -> bool {
        self == other || self.swapped() == *other
    }
}

impl fmt::Display for ConeType2D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.d, self.k)
    }
}

impl Serialize for ConeType2D {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(2))?;
        seq.serialize_element(&crate::report::JsonInt(&self.d))?;
        seq.serialize_element(&crate::report::JsonInt(&self.k))?;
        seq.end()
    }
}

/// Hirzebruch-Jung continued fraction `[b1, ..., br]`, meaning `b1 - 1/(b2 - 1/(...))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HjExpansion(Vec<BigInt>);

impl HjExpansion {
    pub fn new(partial_quotients: Vec<BigInt>) -> Result<Self> {
        match partial_quotients.as_slice() {
            [] => Err(Error::InvalidExpansion("empty expansion".into())),
            [b] if b.is_positive() => Ok(HjExpansion(partial_quotients)),
            bs if bs.iter().all(|b| *b >= BigInt::from(2)) => Ok(HjExpansion(partial_quotients)),
            _ => Err(Error::InvalidExpansion(
                "entries of a longer expansion must be at least 2".into(),
            )),
        }
    }

    pub fn from_u64s(bs: &[u64]) -> Result<Self> {
        Self::new(bs.iter().map(|&b| BigInt::from(b)).collect())
    }

    pub fn partial_quotients(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `sum (2 - b_i)`.
    pub fn euler_sum(&self) -> BigInt {
        self.0.iter().map(|b| BigInt::from(2) - b).sum()
    }
}

impl Serialize for HjExpansion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(crate::report::JsonInt))
    }
}

/// Expansion of `d/k` with every entry at least 2; `[1]` for `d = k = 1`.
pub fn hj_expand(d: &BigInt, k: &BigInt) -> Result<HjExpansion> {
    if !k.is_positive() || k > d || !d.gcd(k).is_one() {
        return Err(Error::InvalidFraction {
            d: d.to_string(),
            k: k.to_string(),
        });
    }
    if d == k {
        return Ok(HjExpansion(vec![BigInt::one()]));
    }
    let (mut num, mut den) = (d.clone(), k.clone());
    let mut out = Vec::new();
    while !den.is_zero() {
        let b = num.div_ceil(&den);
        let next = &b * &den - &num;
        out.push(b);
        num = std::mem::replace(&mut den, next);
    }
    Ok(HjExpansion(out))
}

/// Value of an expansion as a reduced fraction `(numerator, denominator)`.
pub fn hj_eval(e: &HjExpansion) -> Result<(BigInt, BigInt)> {
    let e = HjExpansion::new(e.0.clone())?;
    let mut it = e.0.iter().rev();
    let mut num = it.next().expect("nonempty").clone();
    let mut den = BigInt::one();
    for b in it {
        let next = b * &num - &den;
        den = std::mem::replace(&mut num, next);
    }
    Ok((num, den))
}

fn det2(a: &[BigInt], b: &[BigInt]) -> BigInt {
    &a[0] * &b[1] - &a[1] * &b[0]
}

/// Type of `Cone(u, w)` in a rank-2 lattice, with a basis `(e1, e2)` (rows of
/// the returned matrix, in ambient coordinates) such that `u` spans `e1` and
/// `w` spans `k*e1 + d*e2`.
///
/// The rays are made primitive first. Swapping `u` and `w` replaces `k` by its
/// inverse mod `d`, which leaves the Euler obstruction unchanged.
pub fn classify_cone(
    u: &LatticePoint,
    w: &LatticePoint,
    lattice: &Sublattice,
) -> Result<(ConeType2D, IntegerMatrix)> {
    let basis = lattice.basis();
    if basis.rank() != 2 {
        return Err(Error::DimensionMismatch(format!(
            "cone lattice has rank {}, expected 2",
            basis.rank()
        )));
    }
    let coords = |x: &LatticePoint| {
        basis
            .coords(x)
            .ok_or_else(|| Error::NotSublattice(format!("{x} is not in the cone lattice")))
    };
    let (cu, cw) = (coords(u)?, coords(w)?);
    let (t, e1, e2) = classify_in_z2(&cu, &cw)?;
    let rows = [basis.point(&e1), basis.point(&e2)];
    Ok((t, IntegerMatrix::from_rows(&rows)?))
}

/// [`classify_cone`] for vectors already written in a basis of `Z^2`.
pub fn classify_in_z2(
    u: &[BigInt],
    w: &[BigInt],
) -> Result<(ConeType2D, Vec<BigInt>, Vec<BigInt>)> {
    let gu = u[0].gcd(&u[1]);
    let gw = w[0].gcd(&w[1]);
    if gu.is_zero() || gw.is_zero() {
        return Err(Error::ZeroVector);
    }
    let u: Vec<BigInt> = u.iter().map(|c| c / &gu).collect();
    let w: Vec<BigInt> = w.iter().map(|c| c / &gw).collect();
    let (_, s, t) = egcd(&u[0], &u[1]);
    // det(u, e2) = 1
    let mut e2 = vec![-t, s];
    let mut b = det2(&u, &w);
    if b.is_zero() {
        return Err(Error::DegenerateCone);
    }
    let a = det2(&w, &e2);
    if b.is_negative() {
        e2 = e2.iter().map(|c| -c).collect();
        b = -b;
    }
    let k = a.mod_floor(&b);
    let q = (&a - &k) / &b;
    let e2: Vec<BigInt> = e2.iter().zip(&u).map(|(x, y)| x + &q * y).collect();
    let k = if b.is_one() { BigInt::zero() } else { k };
    Ok((ConeType2D { d: b, k }, u, e2))
}

/// Dual type: a `(d,k)`-cone has a `(d, d-k)` dual.
pub fn dual_cone_type(t: &ConeType2D) -> ConeType2D {
    if t.is_smooth() {
        return t.clone();
    }
    ConeType2D {
        d: t.d.clone(),
        k: &t.d - &t.k,
    }
}

/// Lattice points `A_0, ..., A_{r+1}` on the compact boundary of
/// `Conv(Cone((1,0),(k,d)) ∩ Z^2 \ 0)`, from `(1,0)` to `(k,d)`.
///
/// Computed geometrically: the points of the triangle `0,(1,0),(k,d)` are
/// scanned and the chain facing the origin is extracted.
pub fn boundary_fan(t: &ConeType2D) -> Vec<LatticePoint> {
    let (d, k) = (&t.d, &t.k);
    let mut pts: Vec<(BigInt, BigInt)> = Vec::new();
    let mut y = BigInt::zero();
    while &y <= d {
        let lo: BigInt = Integer::div_ceil(&(k * &y), d);
        let rise: BigInt = d + (k - BigInt::one()) * &y;
        let hi: BigInt = Integer::div_floor(&rise, d);
        let mut x = lo;
        while x <= hi {
            if !(x.is_zero() && y.is_zero()) {
                pts.push((x.clone(), y.clone()));
            }
            x += 1;
        }
        y += 1;
    }
    // angular order around the origin, nearest first on a common ray
    pts.sort_by(|p, q| {
        let c = &p.0 * &q.1 - &p.1 * &q.0;
        match c.sign() {
            num_bigint::Sign::Plus => std::cmp::Ordering::Less,
            num_bigint::Sign::Minus => std::cmp::Ordering::Greater,
            num_bigint::Sign::NoSign => (&p.0 + &p.1).abs().cmp(&(&q.0 + &q.1).abs()),
        }
    });
    pts.dedup_by(|q, p| &p.0 * &q.1 == &p.1 * &q.0);
    let mut chain: Vec<(BigInt, BigInt)> = Vec::new();
    for p in pts {
        while chain.len() >= 2 {
            let a = &chain[chain.len() - 2];
            let b = &chain[chain.len() - 1];
            let turn = (&b.0 - &a.0) * (&p.1 - &a.1) - (&b.1 - &a.1) * (&p.0 - &a.0);
            if turn.is_positive() {
                chain.pop();
            } else {
                break;
            }
        }
        chain.push(p);
    }
    chain
        .into_iter()
        .map(|(x, y)| LatticePoint::new(vec![x, y]))
        .collect()
}

/// Self-intersections `-b_i` of the exceptional curves in the minimal
/// resolution of the surface singularity with cone type `t` in `N`.
pub fn resolution_data(t: &ConeType2D) -> Vec<BigInt> {
    if t.is_smooth() {
        return vec![];
    }
    let dual = dual_cone_type(t);
    hj_expand(&dual.d, &dual.k)
        .expect("valid type")
        .0
        .into_iter()
        .map(|b| -b)
        .collect()
}

/// Euler obstruction of a vertex whose cone in `M` has type `t`: `sum (2 - b_i)`
/// over the expansion of `d/k`, and 1 for the smooth cone.
pub fn cone_eu(t: &ConeType2D) -> BigInt {
    t.expansion().euler_sum()
}

/// Relative subdiagram volume of a cone of type `t` in `M`, equal to `2 - Eu`.
pub fn cone_rsv(t: &ConeType2D) -> BigInt {
    BigInt::from(2) - cone_eu(t)
}

/// Gorenstein singular point: `N`-type `(d,1)` with `d > 1`.
pub fn is_gorenstein(n_type: &ConeType2D) -> bool {
    !n_type.is_smooth() && n_type.k.is_one()
}

pub fn is_smooth(t: &ConeType2D) -> bool {
    t.is_smooth()
}

/// `len(hj(d, d-k)) = 1 + sum (b_i - 2)` where `[b_i] = hj(d, k)`.
pub fn hj_length_identity_check(d: &BigInt, k: &BigInt) -> Result<bool> {
    let forward = hj_expand(d, k)?;
    let backward = hj_expand(d, &(d - k))?;
    let excess: BigInt = forward.0.iter().map(|b| b - 2).sum();
    Ok(BigInt::from(backward.len()) == excess + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ct(d: u64, k: u64) -> ConeType2D {
        ConeType2D::from_u64(d, k).unwrap()
    }

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn hj(d: i64, k: i64) -> Vec<i64> {
        hj_expand(&b(d), &b(k))
            .unwrap()
            .0
            .iter()
            .map(|x| x.try_into().unwrap())
            .collect()
    }

    #[test]
    fn expansions() {
        assert_eq!(hj(8, 5), vec![2, 3, 2]);
        assert_eq!(hj(7, 1), vec![7]);
        assert_eq!(hj(5, 2), vec![3, 2]);
        assert_eq!(hj(1, 1), vec![1]);
        assert!(matches!(hj_expand(&b(4), &b(2)), Err(Error::InvalidFraction { .. })));
        assert!(matches!(hj_expand(&b(3), &b(4)), Err(Error::InvalidFraction { .. })));
    }

    #[test]
    fn evaluation() {
        let e = HjExpansion::from_u64s(&[2, 3, 2]).unwrap();
        assert_eq!(hj_eval(&e).unwrap(), (b(8), b(5)));
        assert_eq!(hj_eval(&HjExpansion::from_u64s(&[9]).unwrap()).unwrap(), (b(9), b(1)));
        for r in 1..20i64 {
            let twos = HjExpansion::from_u64s(&vec![2; r as usize]).unwrap();
            assert_eq!(hj_eval(&twos).unwrap(), (b(r + 1), b(r)));
        }
        assert!(HjExpansion::from_u64s(&[2, 1]).is_err());
        assert!(HjExpansion::from_u64s(&[]).is_err());
    }

    #[test]
    fn classify_examples() {
        let z2 = Sublattice::full(2);
        let (t, _) = classify_cone(&[1, 0].into(), &[0, 1].into(), &z2).unwrap();
        assert_eq!(t, ConeType2D::smooth());

        let (t, m) = classify_cone(&[0, -1].into(), &[3, -2].into(), &z2).unwrap();
        assert_eq!(t, ct(3, 2));
        // w = k e1 + d e2 in the returned basis
        let (e1, e2) = (m.row(0), m.row(1));
        assert_eq!(&e1.scale(&b(2)) + &e2.scale(&b(3)), LatticePoint::from([3, -2]));

        assert_eq!(
            classify_cone(&[1, 2].into(), &[2, 4].into(), &z2).unwrap_err(),
            Error::DegenerateCone
        );
    }

    #[test]
    fn classify_in_a_plane_of_z3() {
        // the facet {x = 0} of the simplex with vertices 0, 5e1, 3e2, 2e3, at (0,0,2)
        let plane = Sublattice::new(3, vec![[0, 1, 0].into(), [0, 0, 1].into()]).unwrap();
        let (t, _) = classify_cone(&[0, 0, -1].into(), &[0, 3, -2].into(), &plane).unwrap();
        assert_eq!(t, ct(3, 2));
    }

    #[test]
    fn consecutive_weights_vertex_cones() {
        // P(2k-1, 2k, 2k+1): vertex cone types (2k-1, k), (2k, 2k-1), (2k+1, 2)
        for k in 2..8u64 {
            let expect = [ct(2 * k - 1, k), ct(2 * k, 2 * k - 1), ct(2 * k + 1, 2)];
            let got = crate::wps::wps2_cone_params(2 * k - 1, 2 * k, 2 * k + 1).unwrap().types;
            assert_eq!(got.to_vec(), expect.to_vec());
        }
    }

    #[test]
    fn duality() {
        assert_eq!(dual_cone_type(&ct(8, 3)), ct(8, 5));
        assert_eq!(dual_cone_type(&ConeType2D::smooth()), ConeType2D::smooth());
        assert_eq!(dual_cone_type(&ct(5, 2)), ct(5, 3));
    }

    #[test]
    fn fan_of_eight_three() {
        let fan = boundary_fan(&ct(8, 3));
        let expect: Vec<LatticePoint> = [[1, 0], [1, 1], [1, 2], [2, 5], [3, 8]]
            .into_iter()
            .map(LatticePoint::from)
            .collect();
        assert_eq!(fan, expect);
        assert_eq!(boundary_fan(&ConeType2D::smooth()).len(), 2);
        for d in 2..30 {
            assert_eq!(boundary_fan(&ct(d, 1)).len() as u64, d + 1);
        }
    }

    #[test]
    fn resolutions() {
        assert_eq!(resolution_data(&ct(8, 3)), vec![b(-2), b(-3), b(-2)]);
        assert!(resolution_data(&ConeType2D::smooth()).is_empty());
        assert_eq!(resolution_data(&ct(6, 1)), vec![b(-2); 5]);
        assert_eq!(resolution_data(&ct(6, 5)), vec![b(-6)]);
    }

    #[test]
    fn eu_and_rsv() {
        assert_eq!((cone_eu(&ct(2, 1)), cone_rsv(&ct(2, 1))), (b(0), b(2)));
        assert_eq!((cone_eu(&ConeType2D::smooth()), cone_rsv(&ConeType2D::smooth())), (b(1), b(1)));
        assert_eq!((cone_eu(&ct(3, 2)), cone_rsv(&ct(3, 2))), (b(0), b(2)));
        assert_eq!(cone_eu(&ct(5, 1)), b(-3));
    }

    #[test]
    fn gorenstein_and_smooth() {
        assert!(is_gorenstein(&ct(3, 1)));
        assert!(is_smooth(&ConeType2D::smooth()) && !is_gorenstein(&ConeType2D::smooth()));
        assert!(!is_gorenstein(&ct(5, 2)) && !is_smooth(&ct(5, 2)));
    }

    #[test]
    fn length_identity_examples() {
        assert!(hj_length_identity_check(&b(8), &b(3)).unwrap());
        assert!(hj_length_identity_check(&b(9), &b(1)).unwrap());
        assert!(hj_length_identity_check(&b(7), &b(3)).unwrap());
    }

    fn coprime_pair() -> impl Strategy<Value = (u64, u64)> {
        (2u64..200).prop_flat_map(|d| (Just(d), 1..d)).prop_filter("coprime", |(d, k)| d.gcd(k) == 1)
    }

    proptest! {
        #[test]
        fn fan_recurrence_and_bases((d, k) in coprime_pair()) {
            let t = ct(d, k);
            let fan = boundary_fan(&t);
            let bs = hj_expand(&b(d as i64), &b((d - k) as i64)).unwrap();
            prop_assert_eq!(fan.len(), bs.len() + 2);
            for w in fan.windows(2) {
                prop_assert!(det2(w[0].coords(), w[1].coords()).is_one());
            }
            for (i, bi) in bs.partial_quotients().iter().enumerate() {
                prop_assert_eq!(&fan[i] + &fan[i + 2], fan[i + 1].scale(bi));
            }
            // Eu from the fan equals the expansion sum
            prop_assert_eq!(BigInt::from(1 - bs.len() as i64), cone_eu(&t));
        }

        #[test]
        fn swapping_rays_preserves_eu((d, k) in coprime_pair()) {
            let z2 = Sublattice::full(2);
            let u = LatticePoint::from([1, 0]);
            let w = LatticePoint::from([k as i64, d as i64]);
            let (t1, _) = classify_cone(&u, &w, &z2).unwrap();
            let (t2, _) = classify_cone(&w, &u, &z2).unwrap();
            prop_assert_eq!(&t1, &ct(d, k));
            prop_assert_eq!(t2.clone(), t1.swapped());
            prop_assert_eq!(cone_eu(&t1), cone_eu(&t2));
            prop_assert_eq!(cone_rsv(&t1), cone_rsv(&t2));
        }

        #[test]
        fn dual_is_involution((d, k) in coprime_pair()) {
            let t = ct(d, k);
            prop_assert_eq!(dual_cone_type(&dual_cone_type(&t)), t);
        }
    }
}
