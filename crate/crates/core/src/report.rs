//! Machine-readable reports. Integers are written as JSON numbers when they
//! fit in 64 bits and as decimal strings otherwise.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::cone::{ConeType2D, HjExpansion};
use crate::lattice::LatticePoint;

/// Borrowed big integer with the JSON encoding described above.
pub struct JsonInt<'a>(pub &'a BigInt);

impl Serialize for JsonInt<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl Serialize for LatticePoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coords().iter().map(JsonInt))
    }
}

pub(crate) fn int<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    JsonInt(v).serialize(s)
}

pub(crate) fn opt_int<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => JsonInt(v).serialize(s),
        None => s.serialize_none(),
    }
}

pub(crate) fn ints<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(JsonInt))
}

pub(crate) fn opt_ints<S: Serializer>(v: &Option<Vec<BigInt>>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => ints(v, s),
        None => s.serialize_none(),
    }
}

/// Per-face data: Euler obstruction and, where defined, the cone type of the
/// face, its continued fraction, subdiagram volume and resolution.
#[derive(Clone, Debug, Serialize)]
pub struct FaceReport {
    pub dim: usize,
    pub vertices: Vec<LatticePoint>,
    #[serde(serialize_with = "int")]
    pub eu: BigInt,
    pub cone_type: Option<ConeType2D>,
    pub hj: Option<HjExpansion>,
    #[serde(serialize_with = "opt_int")]
    pub rsv: Option<BigInt>,
    #[serde(serialize_with = "opt_ints")]
    pub resolution: Option<Vec<BigInt>>,
}

/// The volume, area and edge terms of the degree formula.
///
/// `edges` is the plain sum of lattice lengths; `edge_eu_lengths` is the sum
/// of `Eu(e) * L(e)` used for 3-folds; `vertices` is the sum of vertex Euler
/// obstructions.
#[derive(Clone, Debug, Serialize)]
pub struct Terms {
    #[serde(serialize_with = "int")]
    pub volume: BigInt,
    #[serde(serialize_with = "opt_int")]
    pub area: Option<BigInt>,
    #[serde(serialize_with = "int")]
    pub edges: BigInt,
    #[serde(serialize_with = "opt_int")]
    pub edge_eu_lengths: Option<BigInt>,
    #[serde(serialize_with = "int")]
    pub vertices: BigInt,
}

/// Euler obstructions on all faces and the degree of the dual variety.
#[derive(Clone, Debug, Serialize)]
pub struct DualDegreeReport {
    pub input: String,
    pub faces: Vec<FaceReport>,
    pub terms: Terms,
    #[serde(serialize_with = "int")]
    pub degree: BigInt,
    pub defective: bool,
}

impl DualDegreeReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Faces of the given dimension.
    pub fn faces_of_dim(&self, dim: usize) -> impl Iterator<Item = &FaceReport> {
        self.faces.iter().filter(move |f| f.dim == dim)
    }

    /// Euler obstruction of the face with exactly these vertices.
    pub fn eu_of(&self, vertices: &[LatticePoint]) -> Option<&BigInt> {
        self.faces.iter().find(|f| f.vertices == vertices).map(|f| &f.eu)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_values_become_strings() {
        let small = BigInt::from(-3);
        let big = BigInt::from(u64::MAX) * 10;
        assert_eq!(serde_json::to_string(&JsonInt(&small)).unwrap(), "-3");
        assert_eq!(
            serde_json::to_string(&JsonInt(&big)).unwrap(),
            format!("\"{big}\"")
        );
        let p = LatticePoint::from([1, -2]);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[1,-2]");
    }
}
