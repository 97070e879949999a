#![allow(dead_code)]

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use toric_dual::lattice::{IntegerMatrix, LatticePoint};
use toric_dual::polytope::{convex_hull, LatticePolytope};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn pt(c: &[i64]) -> LatticePoint {
    LatticePoint::from(c)
}

pub fn hull(points: &[&[i64]]) -> LatticePolytope {
    convex_hull(&points.iter().map(|c| pt(c)).collect::<Vec<_>>()).unwrap()
}

pub fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Full-dimensional hull of a few random points in `[0, max]^dim`.
pub fn random_polytope(rng: &mut ChaCha8Rng, dim: usize, max: i64, count: usize) -> LatticePolytope {
    loop {
        let pts: Vec<LatticePoint> = (0..count)
            .map(|_| LatticePoint::from((0..dim).map(|_| rng.gen_range(0..=max)).collect::<Vec<i64>>()))
            .collect();
        let p = convex_hull(&pts).unwrap();
        if p.dim() == dim {
            return p;
        }
    }
}

/// Random unimodular matrix built from elementary row operations.
pub fn random_unimodular(rng: &mut ChaCha8Rng, dim: usize) -> IntegerMatrix {
    let mut m = IntegerMatrix::identity(dim);
    for _ in 0..3 * dim {
        let i = rng.gen_range(0..dim);
        let mut j = rng.gen_range(0..dim);
        while j == i {
            j = rng.gen_range(0..dim);
        }
        let c = big(rng.gen_range(-2..=2));
        for col in 0..dim {
            let v = m.get(i, col) + &c * m.get(j, col);
            m.set(i, col, v);
        }
        if rng.gen_bool(0.3) {
            for col in 0..dim {
                let v = -m.get(i, col);
                m.set(i, col, v);
            }
        }
    }
    m
}

/// Image of `p` under `x -> m x + t`.
pub fn transform(p: &LatticePolytope, m: &IntegerMatrix, t: &LatticePoint) -> LatticePolytope {
    let pts: Vec<LatticePoint> = p.vertices().iter().map(|v| &m.apply(v) + t).collect();
    convex_hull(&pts).unwrap()
}

pub fn read_golden(name: &str) -> Vec<String> {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap().lines().map(str::to_owned).collect()
}

/// Rows whose values are corrected relative to the reference table, as
/// `(reference, computed)`.
pub const CORRECTED_ROWS: [(&str, &str); 2] = [
    ("3 5 6 0 3 1 2 11 4", "3 5 6 0 3 0 2 11 4"),
    ("4 5 6 2 1 2 8 7 5", "4 5 6 2 1 0 8 7 5"),
];
