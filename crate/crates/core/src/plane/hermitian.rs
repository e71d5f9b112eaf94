use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::form::TernaryForm;
use super::point::{for_each_chart_point, PointRecord, ProjPoint};
use crate::error::{Error, Result};
use crate::field::{quadratic_field, Elem, Field};

/// Projective model of the Hermitian curve over `F_{q^2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Model {
    /// `Y^q Z + Y Z^q - X^{q+1}`
    H1,
    /// `X^{q+1} + Y^{q+1} + Z^{q+1}`
    H2,
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Model::H1 => "H1",
            Model::H2 => "H2",
        })
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Model> {
        match s.to_ascii_uppercase().as_str() {
            "H1" => Ok(Model::H1),
            "H2" => Ok(Model::H2),
            _ => Err(Error::Parse(format!("unknown Hermitian model {s:?}"))),
        }
    }
}

pub fn hermitian_model(q: u64, model: Model) -> Result<TernaryForm> {
    let field = quadratic_field(q)?;
    let q = q as u32;
    let minus_one = field.neg(Elem::ONE);
    match model {
        Model::H1 => TernaryForm::new(
            &field,
            q + 1,
            [([0, q, 1], Elem::ONE), ([0, 1, q], Elem::ONE), ([q + 1, 0, 0], minus_one)],
        ),
        Model::H2 => TernaryForm::new(
            &field,
            q + 1,
            [([q + 1, 0, 0], Elem::ONE), ([0, q + 1, 0], Elem::ONE), ([0, 0, q + 1], Elem::ONE)],
        ),
    }
}

/// Common zeros of `forms` in `P^2(F)`, in chart order.
pub fn common_points(field: &Field, forms: &[&TernaryForm]) -> Vec<ProjPoint> {
    let mut out = Vec::new();
    for_each_chart_point(field, |p| {
        if forms.iter().all(|g| g.eval(p).is_zero()) {
            out.push(ProjPoint::new(field, p).expect("chart points are nonzero"));
        }
    });
    out
}

/// Rational points of a single form, in chart order.
pub fn points_on(form: &TernaryForm) -> Vec<ProjPoint> {
    common_points(form.field(), &[form])
}

/// Outcome of intersecting a curve with the Hermitian curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionReport {
    pub q: u64,
    pub d: u32,
    pub model: Model,
    pub count: u64,
    /// The extremal value `d(q+1)`.
    pub target: u64,
    pub achieved: bool,
    /// Set when the curve contains the Hermitian curve as a component, so
    /// the count is not an honest intersection number bound.
    pub degenerate: bool,
    pub curve: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<PointRecord>>,
}

/// A Hermitian curve together with its `q^3 + 1` rational points.
#[derive(Clone, Debug)]
pub struct HermitianCurve {
    q: u64,
    model: Model,
    form: TernaryForm,
    points: Vec<ProjPoint>,
}

impl HermitianCurve {
    pub fn new(q: u64, model: Model) -> Result<HermitianCurve> {
        let form = hermitian_model(q, model)?;
        let points = rational_points(form.field(), q, model)?;
        Ok(HermitianCurve { q, model, form, points })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn model(&self) -> Model {
        self.model
    }

    pub fn form(&self) -> &TernaryForm {
        &self.form
    }

    pub fn field(&self) -> &Field {
        self.form.field()
    }

    /// Rational points in chart order.
    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    /// Rational points of `curve` lying on this Hermitian curve.
    pub fn intersect(&self, curve: &TernaryForm, keep_points: bool) -> Result<IntersectionReport> {
        self.intersect_described(curve, &curve.to_string(), keep_points)
    }

    pub fn intersect_described(
        &self,
        curve: &TernaryForm,
        descriptor: &str,
        keep_points: bool,
    ) -> Result<IntersectionReport> {
        if curve.field() != self.field() {
            return Err(Error::MixedFields);
        }
        if curve.is_zero() {
            return Err(Error::InvalidParameter("the zero form is not a curve".into()));
        }
        let hits: Vec<ProjPoint> = self
            .points
            .iter()
            .copied()
            .filter(|p| curve.eval(p.coords()).is_zero())
            .collect();
        let degenerate = self.is_component_of(curve)?;
        let d = curve.degree();
        let target = d as u64 * (self.q + 1);
        let count = hits.len() as u64;
        let field = self.field();
        Ok(IntersectionReport {
            q: self.q,
            d,
            model: self.model,
            count,
            target,
            achieved: !degenerate && count == target,
            degenerate,
            curve: descriptor.to_string(),
            points: keep_points.then(|| hits.iter().map(|p| p.to_record(field)).collect()),
        })
    }

    /// Whether the Hermitian form divides `curve`.
    pub fn is_component_of(&self, curve: &TernaryForm) -> Result<bool> {
        if curve.degree() < self.form.degree() {
            return Ok(false);
        }
        Ok(curve.exact_div(&self.form)?.is_some())
    }
}

/// Points found from the norm and trace fibres rather than a full scan of the
/// plane; the order matches [`points_on`].
fn rational_points(field: &Field, q: u64, model: Model) -> Result<Vec<ProjPoint>> {
    let mut out = Vec::with_capacity((q * q * q + 1) as usize);
    match model {
        Model::H1 => {
            // Y^q + Y = X^{q+1} in the chart Z = 1.
            let mut by_trace: Vec<Vec<Elem>> = vec![Vec::new(); field.order() as usize];
            for y in field.elements() {
                by_trace[field.trace(y)?.index() as usize].push(y);
            }
            for x in field.elements() {
                let n = field.norm(x)?;
                for &y in &by_trace[n.index() as usize] {
                    out.push(ProjPoint::new(field, [x, y, Elem::ONE])?);
                }
            }
            out.push(ProjPoint::new(field, [Elem::ZERO, Elem::ONE, Elem::ZERO])?);
        }
        Model::H2 => {
            let minus_one = field.neg(Elem::ONE);
            for x in field.elements() {
                let s = field.sub(minus_one, field.norm(x)?);
                if s.is_zero() {
                    out.push(ProjPoint::new(field, [x, Elem::ZERO, Elem::ONE])?);
                } else {
                    for y in field.norm_preimages(s)? {
                        out.push(ProjPoint::new(field, [x, y, Elem::ONE])?);
                    }
                }
            }
            for x in field.norm_preimages(minus_one)? {
                out.push(ProjPoint::new(field, [x, Elem::ONE, Elem::ZERO])?);
            }
        }
    }
    Ok(out)
}
