//! Exact computations with spread-out Hilbert–Burch matrices on the Hilbert
//! scheme of points in the plane.

pub mod poly;
pub mod linalg;
pub mod torus;
pub mod groebner;
pub mod cells;
pub mod harness;
