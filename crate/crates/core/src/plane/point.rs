use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Elem, ElemRepr, Field};

/// A point of `P^2`, normalized so the leftmost nonzero coordinate is 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjPoint([Elem; 3]);

impl ProjPoint {
    pub fn new(field: &Field, coords: [Elem; 3]) -> Result<ProjPoint> {
        let lead = coords
            .iter()
            .copied()
            .find(|c| !c.is_zero())
            .ok_or_else(|| Error::InvalidParameter("the zero vector is not a point".into()))?;
        let inv = field.inv(lead)?;
        Ok(ProjPoint(coords.map(|c| field.mul(c, inv))))
    }

    pub fn coords(&self) -> [Elem; 3] {
        self.0
    }

    pub fn to_record(&self, field: &Field) -> PointRecord {
        PointRecord(self.0.map(|c| field.to_repr(c)))
    }
}

/// Serialized point: three elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointRecord(pub [ElemRepr; 3]);

/// Calls `visit` on one representative of every point of `P^2(F)`: the
/// affine chart `(x, y, 1)` (x outer, y inner, encoding order), then
/// `(x, 1, 0)`, then `(1, 0, 0)`. Representatives in the first two charts are
/// not normalized; use [`ProjPoint::new`] when a canonical point is needed.
pub fn for_each_chart_point(field: &Field, mut visit: impl FnMut([Elem; 3])) {
    for x in field.elements() {
        for y in field.elements() {
            visit([x, y, Elem::ONE]);
        }
    }
    for x in field.elements() {
        visit([x, Elem::ONE, Elem::ZERO]);
    }
    visit([Elem::ONE, Elem::ZERO, Elem::ZERO]);
}

/// All `Q^2 + Q + 1` points of `P^2(F_Q)` in chart order, normalized.
pub fn enumerate_proj_points(field: &Field) -> Vec<ProjPoint> {
    let mut out = Vec::with_capacity(num_proj_points(field) as usize);
    for_each_chart_point(field, |p| {
        out.push(ProjPoint::new(field, p).expect("chart points are nonzero"))
    });
    out
}

pub fn num_proj_points(field: &Field) -> u64 {
    let q = field.order() as u64;
    q * q + q + 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;
    use std::collections::HashSet;

    #[test]
    fn point_counts() {
        assert_eq!(enumerate_proj_points(&make_field(2, 2).unwrap()).len(), 21);
        assert_eq!(enumerate_proj_points(&make_field(3, 2).unwrap()).len(), 91);
    }

    #[test]
    fn no_duplicates() {
        let f = make_field(2, 4).unwrap();
        let pts = enumerate_proj_points(&f);
        let set: HashSet<_> = pts.iter().collect();
        assert_eq!(set.len(), pts.len());
        assert!(pts.iter().all(|p| p.coords().iter().find(|c| !c.is_zero()) == Some(&Elem::ONE)));
    }

    #[test]
    fn normalization_is_scale_invariant() {
        let f = make_field(5, 2).unwrap();
        let raw = [f.gen_pow(3), Elem::ZERO, f.gen_pow(7)];
        let a = ProjPoint::new(&f, raw).unwrap();
        for l in f.nonzero_elements() {
            assert_eq!(ProjPoint::new(&f, raw.map(|c| f.mul(c, l))).unwrap(), a);
        }
        assert!(ProjPoint::new(&f, [Elem::ZERO; 3]).is_err());
    }
}
