//! JSON curve files: `{q, d, model, terms: [{i, j, k, coeff}], descriptor?}`.

use serde::{Deserialize, Serialize};

use crate::constructions::{Construction, ConstructionDescriptor};
use crate::error::{Error, Result};
use crate::field::{quadratic_field, ElemRepr};
use crate::plane::{Model, TernaryForm};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub i: u32,
    pub j: u32,
    pub k: u32,
    pub coeff: ElemRepr,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveFile {
    pub q: u64,
    pub d: u32,
    pub model: Model,
    pub terms: Vec<TermRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub descriptor: Option<ConstructionDescriptor>,
}

impl CurveFile {
    /// Terms are written in descending monomial order with coefficient lists.
    pub fn from_form(q: u64, model: Model, form: &TernaryForm) -> CurveFile {
        let field = form.field();
        let mut terms: Vec<TermRecord> = form
            .terms()
            .map(|(e, c)| TermRecord {
                i: e[0],
                j: e[1],
                k: e[2],
                coeff: field.to_repr(c),
            })
            .collect();
        terms.reverse();
        CurveFile {
            q,
            d: form.degree(),
            model,
            terms,
            descriptor: None,
        }
    }

    pub fn from_construction(c: &Construction) -> CurveFile {
        let mut file = CurveFile::from_form(c.descriptor.q, c.descriptor.model, &c.form);
        file.descriptor = Some(c.descriptor.clone());
        file
    }

    pub fn to_form(&self) -> Result<TernaryForm> {
        let field = quadratic_field(self.q)?;
        let terms = self
            .terms
            .iter()
            .map(|t| Ok(([t.i, t.j, t.k], field.from_repr(&t.coeff)?)))
            .collect::<Result<Vec<_>>>()?;
        let form = TernaryForm::new(&field, self.d, terms)?;
        if form.is_zero() {
            return Err(Error::Parse("curve file has no nonzero terms".into()));
        }
        Ok(form)
    }

    pub fn parse(text: &str) -> Result<CurveFile> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("curve file: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("curve files serialize")
    }
}
