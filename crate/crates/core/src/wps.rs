//! Weighted projective planes and 3-spaces.
//!
//! `P(q_0, ..., q_n)` is the toric variety of the simplex cut from the
//! positive orthant by `sum q_i x_i = lcm(q)`. When some weight is 1 that
//! coordinate is eliminated, giving `Conv(0, (lcm/q_i) e_i)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::cone::{cone_eu, ConeType2D};
use crate::error::{Error, Result};
use crate::lattice::{egcd, LatticePoint};
use crate::polytope::{convex_hull, LatticePolytope};
use crate::report::{ints, DualDegreeReport};
use crate::surface::{surface_dual_degree, surface_euler_table};
use crate::threefold::{threefold_dual_degree, threefold_euler_table};

/// Reduced weights of a weighted projective plane or 3-space: every choice of
/// all but one weight is coprime.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Weights(Vec<u64>);

fn gcd_all(q: impl IntoIterator<Item = u64>) -> u64 {
    q.into_iter().fold(0, |g, x| g.gcd(&x))
}

fn check_shape(q: &[u64]) -> Result<()> {
    if q.len() != 3 && q.len() != 4 {
        return Err(Error::InvalidWeights(format!("expected 3 or 4 weights, got {}", q.len())));
    }
    if q.contains(&0) {
        return Err(Error::InvalidWeights("weights must be positive".into()));
    }
    Ok(())
}

fn all_but(q: &[u64], i: usize) -> impl Iterator<Item = u64> + '_ {
    q.iter().enumerate().filter(move |(j, _)| *j != i).map(|(_, &x)| x)
}

impl Weights {
    /// Accepts only reduced weights; see [`reduce_weights`] otherwise.
    pub fn new(q: Vec<u64>) -> Result<Self> {
        check_shape(&q)?;
        if (0..q.len()).any(|i| gcd_all(all_but(&q, i)) != 1) {
            return Err(Error::NotReduced(q));
        }
        Ok(Weights(q))
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn lcm(&self) -> u64 {
        self.0.iter().fold(1, |l, x| l.lcm(x))
    }
}

/// The reduced weights of an isomorphic weighted projective space.
pub fn reduce_weights(q: &[u64]) -> Result<Weights> {
    check_shape(q)?;
    let mut q = q.to_vec();
    let g = gcd_all(q.iter().copied());
    q.iter_mut().for_each(|x| *x /= g);
    loop {
        let mut changed = false;
        for i in 0..q.len() {
            let g = gcd_all(all_but(&q, i));
            if g > 1 {
                for (j, x) in q.iter_mut().enumerate() {
                    if j != i {
                        *x /= g;
                    }
                }
                changed = true;
            }
        }
        if !changed {
            return Weights::new(q);
        }
    }
}

/// Vertex of the weighted projective polytope corresponding to weight `i`.
pub fn weight_vertex(w: &Weights, i: usize) -> LatticePoint {
    let q = w.as_slice();
    let l = w.lcm();
    match q.iter().position(|&x| x == 1) {
        Some(j) => {
            let mut c = vec![BigInt::zero(); q.len() - 1];
            if i != j {
                let slot = if i < j { i } else { i - 1 };
                c[slot] = BigInt::from(l / q[i]);
            }
            LatticePoint::new(c)
        }
        None => {
            let mut c = vec![BigInt::zero(); q.len()];
            c[i] = BigInt::from(l / q[i]);
            LatticePoint::new(c)
        }
    }
}

/// The polytope of `P(w)`, with the vertex of weight `i` at [`weight_vertex`].
pub fn wps_polytope(w: &Weights) -> Result<LatticePolytope> {
    let verts: Vec<LatticePoint> = (0..w.len()).map(|i| weight_vertex(w, i)).collect();
    convex_hull(&verts)
}

/// Shape of the singular locus of `P(w)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SingularLocus {
    Smooth,
    Isolated,
    PositiveDimensional,
}

pub fn singular_locus_class(w: &Weights) -> SingularLocus {
    let q = w.as_slice();
    if q.iter().all(|&x| x == 1) {
        return SingularLocus::Smooth;
    }
    let pairwise = (0..q.len()).all(|i| (i + 1..q.len()).all(|j| q[i].gcd(&q[j]) == 1));
    if pairwise {
        SingularLocus::Isolated
    } else {
        SingularLocus::PositiveDimensional
    }
}

/// Least `x >= 0` with `a + x b ≡ 0 (mod q)`.
fn least_solution(a: u64, b: u64, q: u64) -> Result<u64> {
    if q == 1 {
        return Ok(0);
    }
    let (a, b, q) = (BigInt::from(a), BigInt::from(b), BigInt::from(q));
    let (g, s, _) = egcd(&b, &q);
    if !(&a % &g).is_zero() {
        return Err(Error::Unsolvable(format!("{a} + x*{b} = 0 mod {q}")));
    }
    let modulus = &q / &g;
    let x = (-(&a / &g) * s).mod_floor(&modulus);
    Ok(x.try_into().expect("bounded by a weight"))
}

/// Cone data of `P(k, m, n)` for pairwise coprime weights: the least
/// solutions `a, b, c` of `m + a n ≡ 0 (k)`, `n + b k ≡ 0 (m)`,
/// `k + c m ≡ 0 (n)`, and the vertex cone types `(k, k-a)`, `(m, m-b)`,
/// `(n, n-c)` in `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wps2Cones {
    pub params: [u64; 3],
    pub types: [ConeType2D; 3],
}

pub fn wps2_cone_params(k: u64, m: u64, n: u64) -> Result<Wps2Cones> {
    let w = [k, m, n];
    let mut params = [0; 3];
    let mut types: [ConeType2D; 3] = std::array::from_fn(|_| ConeType2D::smooth());
    for i in 0..3 {
        let (q, next, after) = (w[i], w[(i + 1) % 3], w[(i + 2) % 3]);
        if q == 0 {
            return Err(Error::InvalidWeights("weights must be positive".into()));
        }
        let x = least_solution(next, after, q)?;
        params[i] = x;
        if q > 1 {
            types[i] = ConeType2D::from_u64(q, q - x)?;
        }
    }
    Ok(Wps2Cones { params, types })
}

/// `3kmn - 2(k+m+n) + sum Eu`, the dual degree of `P(k, m, n)` for pairwise
/// coprime weights.
pub fn wps2_dual_degree(k: u64, m: u64, n: u64) -> Result<BigInt> {
    let cones = wps2_cone_params(k, m, n)?;
    let eu: BigInt = cones.types.iter().map(cone_eu).sum();
    let (k, m, n) = (BigInt::from(k), BigInt::from(m), BigInt::from(n));
    Ok(BigInt::from(3) * &k * &m * &n - BigInt::from(2) * (k + m + n) + eu)
}

/// Families of weighted projective planes with a closed dual degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosedFormula {
    /// `(m, n, m + n)`: `3mn(m+n) - 5(m+n) + 4`.
    SumOfTwo,
    /// `(2k-1, 2k, 2k+1)`: `24k^3 - 20k + 3`.
    ConsecutiveAroundEven,
    /// `(m-2, m, m+2)` with `m` odd: `3m^3 - 19m + 3`.
    StepTwoAroundOdd,
    /// `(m, n, m + 2n)` with `m` odd: `6mn^2 + 3m^2 n - 7n - 9m/2 + 5/2`.
    OddPlusTwice,
}

/// Every closed formula that applies to the weights (in any order), with its value.
pub fn wps2_closed_formulas(k: u64, m: u64, n: u64) -> Vec<(ClosedFormula, BigInt)> {
    let mut s = [k, m, n];
    s.sort_unstable();
    let [a, b] = [BigInt::from(s[0]), BigInt::from(s[1])];
    let (a64, b64, c64) = (s[0], s[1], s[2]);
    let mut out = Vec::new();
    if a64 + b64 == c64 {
        let sum = &a + &b;
        out.push((ClosedFormula::SumOfTwo, BigInt::from(3) * &a * &b * &sum - BigInt::from(5) * &sum + 4));
    }
    if b64 == a64 + 1 && c64 == b64 + 1 && a64 % 2 == 1 {
        let h = BigInt::from(a64.div_ceil(2));
        out.push((ClosedFormula::ConsecutiveAroundEven, BigInt::from(24) * h.pow(3) - BigInt::from(20) * &h + 3));
    }
    if a64 >= 1 && b64 == a64 + 2 && c64 == b64 + 2 && b64 % 2 == 1 {
        out.push((ClosedFormula::StepTwoAroundOdd, BigInt::from(3) * b.pow(3) - BigInt::from(19) * &b + 3));
    }
    let odd_plus_twice = |m: &BigInt, n: &BigInt| {
        (BigInt::from(12) * m * n * n + BigInt::from(6) * m * m * n - BigInt::from(14) * n - BigInt::from(9) * m + 5) / 2
    };
    if a64 % 2 == 1 && c64 == a64 + 2 * b64 {
        out.push((ClosedFormula::OddPlusTwice, odd_plus_twice(&a, &b)));
    } else if b64 % 2 == 1 && c64 == b64 + 2 * a64 {
        out.push((ClosedFormula::OddPlusTwice, odd_plus_twice(&b, &a)));
    }
    out
}

/// Closed-form cone data at the vertex of weight `k` of `P(1, k, m, n)`.
///
/// `facets` holds the types of the three facet cones there (the facet not
/// through the origin first) and `edges` those of the three edges (the edge
/// to the origin, always smooth, first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexConeData {
    pub facets: [ConeType2D; 3],
    pub edges: [ConeType2D; 3],
}

fn cone_type_mod(d: u64, k: u64) -> Result<ConeType2D> {
    if d == 1 {
        Ok(ConeType2D::smooth())
    } else {
        ConeType2D::from_u64(d, k % d)
    }
}

fn vertex_cone_data(k: u64, m: u64, n: u64) -> Result<VertexConeData> {
    let (gm, gn) = (m.gcd(&k), n.gcd(&k));
    let slanted = {
        let d = k / (gm * gn);
        // least c >= 0 with c (n / gn) ≡ -m (mod k / gn)
        let c = least_solution(m, n / gn, k / gn)?;
        let num = k - c * gn;
        if !num.is_multiple_of(gm * gn) {
            return Err(Error::Unsolvable(format!("slanted facet at weight {k} of (1,{k},{m},{n})")));
        }
        cone_type_mod(d, num / (gm * gn))?
    };
    Ok(VertexConeData {
        facets: [slanted, cone_type_mod(k / gm, m / gm)?, cone_type_mod(k / gn, n / gn)?],
        edges: [ConeType2D::smooth(), cone_type_mod(gn, m)?, cone_type_mod(gm, n)?],
    })
}

/// Closed-form cone data at the vertices of weights `k, m, n` of `P(1, k, m, n)`.
pub fn wps3_local_cone_data(k: u64, m: u64, n: u64) -> Result<[VertexConeData; 3]> {
    Weights::new(vec![1, k, m, n])?;
    Ok([
        vertex_cone_data(k, m, n)?,
        vertex_cone_data(m, n, k)?,
        vertex_cone_data(n, k, m)?,
    ])
}

/// `(Vol, A, E)` of `P(1, k, m, n)` for pairwise coprime `k, m, n`:
/// `k^2 m^2 n^2`, `kmn(1 + k + m + n)` and `k + m + n + km + kn + mn`.
pub fn wps3_isolated_closed_terms(k: u64, m: u64, n: u64) -> Result<(BigInt, BigInt, BigInt)> {
    let w = Weights::new(vec![1, k, m, n])?;
    if singular_locus_class(&w) == SingularLocus::PositiveDimensional {
        return Err(Error::NotIsolated(format!("P(1,{k},{m},{n})")));
    }
    let (k, m, n) = (BigInt::from(k), BigInt::from(m), BigInt::from(n));
    let kmn = &k * &m * &n;
    let vol = &kmn * &kmn;
    let area = &kmn * (BigInt::one() + &k + &m + &n);
    let edges = &k + &m + &n + &k * &m + &k * &n + &m * &n;
    Ok((vol, area, edges))
}

/// Euler obstructions and dual degree of `P(w)`, with vertex data aligned with
/// the weights.
#[derive(Clone, Debug, Serialize)]
pub struct WpsReport {
    pub weights: Weights,
    pub singular_locus: SingularLocus,
    #[serde(serialize_with = "ints")]
    pub vertex_eu: Vec<BigInt>,
    #[serde(serialize_with = "ints")]
    pub vertex_rsv: Vec<BigInt>,
    #[serde(serialize_with = "crate::report::int")]
    pub degree: BigInt,
    pub defective: bool,
    /// Every vertex and edge has Euler obstruction 1.
    pub all_eu_one: bool,
    pub report: DualDegreeReport,
}

/// Computes the report from the polytope and checks it against the closed
/// forms that apply; a disagreement is an [`Error::OracleMismatch`].
pub fn wps_report(w: &Weights) -> Result<WpsReport> {
    let p = wps_polytope(w)?;
    let q = w.as_slice();
    let index_of = |i: usize| p.vertex_index(&weight_vertex(w, i)).expect("weight vertices are vertices");
    let (report, vertex_eu, vertex_rsv, edges_one) = if q.len() == 3 {
        let t = surface_euler_table(&p)?;
        let report = surface_dual_degree(&p)?;
        let expected = wps2_dual_degree(q[0], q[1], q[2])?;
        if expected != report.degree {
            return Err(Error::OracleMismatch(format!(
                "P{q:?}: degree {} from the polygon, {expected} from the cone formula",
                report.degree
            )));
        }
        for (formula, value) in wps2_closed_formulas(q[0], q[1], q[2]) {
            if value != report.degree {
                return Err(Error::OracleMismatch(format!("P{q:?}: {formula:?} gives {value}, polygon {}", report.degree)));
            }
        }
        let eu: Vec<BigInt> = (0..3).map(|i| t.eu_vertices[index_of(i)].clone()).collect();
        let rsv = (0..3).map(|i| t.rsv[index_of(i)].clone()).collect();
        (report, eu, rsv, true)
    } else {
        let t = threefold_euler_table(&p)?;
        let report = threefold_dual_degree(&p)?;
        if let Some(j) = q.iter().position(|&x| x == 1) {
            let others: Vec<usize> = (0..4).filter(|&i| i != j).collect();
            let [k, m, n] = [q[others[0]], q[others[1]], q[others[2]]];
            let closed = wps3_local_cone_data(k, m, n)?;
            for (slot, data) in closed.iter().enumerate() {
                check_vertex_cones(&p, &t, index_of(others[slot]), data, q)?;
            }
            if singular_locus_class(w) != SingularLocus::PositiveDimensional {
                let (vol, area, edges) = wps3_isolated_closed_terms(k, m, n)?;
                let got = (
                    report.terms.volume.clone(),
                    report.terms.area.clone().expect("3-fold reports have an area"),
                    report.terms.edges.clone(),
                );
                if got != (vol.clone(), area.clone(), edges.clone()) {
                    return Err(Error::OracleMismatch(format!(
                        "P{q:?}: terms {got:?} from the polytope, {:?} closed",
                        (vol, area, edges)
                    )));
                }
            }
        }
        let eu: Vec<BigInt> = (0..4).map(|i| t.eu_vertices[index_of(i)].clone()).collect();
        let rsv = (0..4).map(|i| t.rsv[index_of(i)].clone()).collect();
        (report, eu, rsv, t.eu_edges.iter().all(|e| e.is_one()))
    };
    let all_eu_one = edges_one && vertex_eu.iter().all(|e: &BigInt| e.is_one());
    Ok(WpsReport {
        weights: w.clone(),
        singular_locus: singular_locus_class(w),
        vertex_eu,
        vertex_rsv,
        degree: report.degree.clone(),
        defective: report.defective,
        all_eu_one,
        report,
    })
}

/// Compares multisets of cone types up to the order of the rays.
fn same_types(a: &[ConeType2D], b: &[ConeType2D]) -> bool {
    let mut used = vec![false; b.len()];
    a.len() == b.len()
        && a.iter().all(|x| {
            match (0..b.len()).find(|&j| !used[j] && x.equivalent(&b[j])) {
                Some(j) => {
                    used[j] = true;
                    true
                }
                None => false,
            }
        })
}

fn check_vertex_cones(
    p: &LatticePolytope,
    t: &crate::threefold::ThreefoldEulerTable,
    v: usize,
    data: &VertexConeData,
    q: &[u64],
) -> Result<()> {
    let facets: Vec<ConeType2D> = t.facet_cones[v].iter().map(|(_, c)| c.clone()).collect();
    let edges: Vec<ConeType2D> = p.edges_at(v).into_iter().map(|e| t.edge_cones[e].clone()).collect();
    if !same_types(&facets, &data.facets) || !same_types(&edges, &data.edges) {
        let show = |v: &[ConeType2D]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ");
        return Err(Error::OracleMismatch(format!(
            "P{q:?} at {}: facets [{}] edges [{}], closed form facets [{}] edges [{}]",
            p.vertices()[v],
            show(&facets),
            show(&edges),
            show(&data.facets),
            show(&data.edges)
        )));
    }
    Ok(())
}

/// Which rows of the `P(1, k, m, n)` table to produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFilter {
    All,
    /// Pairwise coprime `k, m, n`.
    Isolated,
    NonIsolated,
}

/// One table row: `k m n`, then `Eu` and `RSV` at the vertices of weights `k, m, n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub weights: [u64; 3],
    #[serde(serialize_with = "ints")]
    pub eu: Vec<BigInt>,
    #[serde(serialize_with = "ints")]
    pub rsv: Vec<BigInt>,
}

impl TableRow {
    /// Space-separated `k m n E1 E2 E3 R1 R2 R3`.
    pub fn to_line(&self) -> String {
        let mut cols: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
        cols.extend(self.eu.iter().map(|e| e.to_string()));
        cols.extend(self.rsv.iter().map(|e| e.to_string()));
        cols.join(" ")
    }
}

/// `k <= m <= n <= max` with `gcd(k, m, n) = 1`, in lexicographic order.
pub fn reduced_triples(max: u64) -> Vec<[u64; 3]> {
    let mut out = Vec::new();
    for k in 1..=max {
        for m in k..=max {
            for n in m..=max {
                if gcd_all([k, m, n]) == 1 {
                    out.push([k, m, n]);
                }
            }
        }
    }
    out
}

fn pairwise_coprime(t: &[u64; 3]) -> bool {
    t[0].gcd(&t[1]) == 1 && t[0].gcd(&t[2]) == 1 && t[1].gcd(&t[2]) == 1
}

pub fn table_row(k: u64, m: u64, n: u64) -> Result<TableRow> {
    let r = wps_report(&Weights::new(vec![1, k, m, n])?)?;
    Ok(TableRow {
        weights: [k, m, n],
        eu: r.vertex_eu[1..].to_vec(),
        rsv: r.vertex_rsv[1..].to_vec(),
    })
}

/// Rows of the `P(1, k, m, n)` table for `k <= m <= n <= max`.
pub fn wps_table(max: u64, filter: TableFilter) -> Result<Vec<TableRow>> {
    let triples: Vec<[u64; 3]> = reduced_triples(max)
        .into_iter()
        .filter(|t| match filter {
            TableFilter::All => true,
            TableFilter::Isolated => pairwise_coprime(t),
            TableFilter::NonIsolated => !pairwise_coprime(t),
        })
        .collect();
    triples.par_iter().map(|t| table_row(t[0], t[1], t[2])).collect()
}

pub fn format_table(rows: &[TableRow]) -> String {
    rows.iter().map(|r| r.to_line() + "\n").collect()
}

/// `P(1, k, m, n)` with `k <= m <= n` is a cone over a lower-dimensional
/// weighted projective space: `P(1,1,m,lm)` or `P(1,k,m,km)`.
pub fn is_cone_pattern(t: &[u64; 3]) -> bool {
    let [k, m, n] = *t;
    (k == 1 && n % m == 0) || n == k * m
}

/// Defective and all-`Eu = 1` members of the family `P(1, k, m, n)`.
#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub bound: u64,
    /// Weights `(1, k, m, n)` whose dual variety is not a hypersurface.
    pub defective: Vec<[u64; 4]>,
    /// Weights matching a cone pattern.
    pub cone_patterns: Vec<[u64; 4]>,
    /// Singular members on which every vertex and edge has `Eu = 1`.
    pub eu_one_singular: Vec<[u64; 4]>,
    #[serde(serialize_with = "crate::report::int")]
    pub max_degree: BigInt,
}

impl ScanReport {
    pub fn defective_are_cone_patterns(&self) -> bool {
        self.defective == self.cone_patterns
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Scans `P(1, k, m, n)` for `k <= m <= n <= bound`.
pub fn defectivity_and_conjecture_scan(bound: u64) -> Result<ScanReport> {
    let triples = reduced_triples(bound);
    let reports: Vec<WpsReport> = triples
        .par_iter()
        .map(|t| wps_report(&Weights::new(vec![1, t[0], t[1], t[2]])?))
        .collect::<Result<_>>()?;
    let full = |t: &[u64; 3]| [1, t[0], t[1], t[2]];
    let mut out = ScanReport {
        bound,
        defective: Vec::new(),
        cone_patterns: Vec::new(),
        eu_one_singular: Vec::new(),
        max_degree: BigInt::zero(),
    };
    for (t, r) in triples.iter().zip(&reports) {
        if r.defective {
            out.defective.push(full(t));
        }
        if is_cone_pattern(t) {
            out.cone_patterns.push(full(t));
        }
        if r.all_eu_one && r.singular_locus != SingularLocus::Smooth {
            out.eu_one_singular.push(full(t));
        }
        if r.degree > out.max_degree {
            out.max_degree = r.degree.clone();
        }
    }
    Ok(out)
}

impl Serialize for Wps2Cones {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Wps2Cones", 2)?;
        st.serialize_field("params", &self.params)?;
        st.serialize_field("types", &self.types)?;
        st.end()
    }
}
