//! Plane curves over `F_{q^2}` and their rational intersections with the
//! Hermitian curve.

pub mod arith;
pub mod constructions;
pub mod curvefile;
pub mod error;
pub mod field;
pub mod plane;
pub mod search;
pub mod splitting;
pub mod unipoly;

pub use error::{Error, Result};
pub use field::{make_field, Elem, Field};
pub use unipoly::UniPoly;
