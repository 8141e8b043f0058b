//! One-parameter subgroups of the two-torus acting on the plane.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cocharacter (0, 0) does not define a one-parameter subgroup")]
pub struct ZeroCocharacter;

/// `t ↦ (t^alpha, t^beta)`, acting on points by `(x, y) ↦ (t^alpha x, t^beta y)`.
///
/// Equivalently a Z-grading of `k[x, y]` with `deg x = alpha`, `deg y = beta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "CocharacterJson", into = "CocharacterJson")]
pub struct Cocharacter {
    alpha: i64,
    beta: i64,
}

#[derive(Serialize, Deserialize)]
struct CocharacterJson {
    alpha: i64,
    beta: i64,
}

impl TryFrom<CocharacterJson> for Cocharacter {
    type Error = ZeroCocharacter;
    fn try_from(j: CocharacterJson) -> Result<Self, Self::Error> {
        Cocharacter::new(j.alpha, j.beta)
    }
}

impl From<Cocharacter> for CocharacterJson {
    fn from(c: Cocharacter) -> Self {
        CocharacterJson { alpha: c.alpha, beta: c.beta }
    }
}

impl Cocharacter {
    pub fn new(alpha: i64, beta: i64) -> Result<Self, ZeroCocharacter> {
        if alpha == 0 && beta == 0 {
            Err(ZeroCocharacter)
        } else {
            Ok(Cocharacter { alpha, beta })
        }
    }

    pub fn alpha(&self) -> i64 {
        self.alpha
    }

    pub fn beta(&self) -> i64 {
        self.beta
    }

    /// `alpha * w_x + beta * w_y`.
    pub fn pairing(&self, weight: (i64, i64)) -> i64 {
        self.alpha * weight.0 + self.beta * weight.1
    }

    /// Degree of `x^i y^j` in the induced grading.
    pub fn degree(&self, i: u32, j: u32) -> i64 {
        self.pairing((i as i64, j as i64))
    }

    /// `(-M + 1, -M)`: its cells are the Gröbner cells of the negative degree
    /// lexicographic order once `M` exceeds every relevant total degree.
    pub fn negative_deglex(big_m: i64) -> Self {
        Cocharacter { alpha: -big_m + 1, beta: -big_m }
    }
}

impl fmt::Display for Cocharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.alpha, self.beta)
    }
}
