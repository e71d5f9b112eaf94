//! Exhaustive scans over every projective degree-`d` form for tiny `(q, d)`.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::plane::{
    monomials_desc, reducibility_search, Exps, HermitianCurve, Model, Reducibility, TernaryForm,
    DEFAULT_BUDGET,
};

/// Largest projective form space an exhaustive negative search will scan.
pub const SEARCH_GUARD: u128 = 10_000_000;

/// Number of forms of degree `d` over `F_Q` up to scaling: `(Q^M - 1)/(Q - 1)`.
pub fn projective_form_count(big_q: u64, d: u32) -> Option<u128> {
    let m = (d + 1) * (d + 2) / 2;
    let qq = big_q as u128;
    qq.checked_pow(m).map(|p| (p - 1) / (qq - 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StopReason {
    Completed,
    LimitReached,
    /// The scan hit its form budget before finishing.
    BudgetExhausted,
    /// `d(q+1) > q^3 + 1`, so no form can reach the target.
    CapacityBound,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub q: u64,
    pub d: u32,
    pub model: Model,
    pub total_forms_scanned: u64,
    pub target: u64,
    /// Forms (normalized) meeting the Hermitian curve in exactly `d(q+1)` points.
    #[serde(serialize_with = "forms_as_text")]
    pub achievers: Vec<TernaryForm>,
    #[serde(serialize_with = "forms_as_text")]
    pub irreducible_achievers: Vec<TernaryForm>,
    pub stop_reason: StopReason,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wallclock_ms: Option<u128>,
}

fn forms_as_text<S: serde::Serializer>(forms: &[TernaryForm], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(forms.iter().map(|f| f.to_string()))
}

/// How a single form fares against the Hermitian curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormScore {
    pub count: u64,
    pub achieves: bool,
    pub shares_component: bool,
    pub irreducible: Option<bool>,
}

/// Hermitian points and monomial values shared by every candidate form.
struct Scanner {
    field: Field,
    hermitian: HermitianCurve,
    basis: Vec<Exps>,
    /// `values[m][P]` = monomial `m` at Hermitian point `P`.
    values: Vec<Vec<Elem>>,
    target: u64,
}

impl Scanner {
    fn new(q: u64, d: u32, model: Model) -> Result<Scanner> {
        let hermitian = HermitianCurve::new(q, model)?;
        let field = hermitian.field().clone();
        let basis = monomials_desc(d);
        let values = basis
            .iter()
            .map(|&e| {
                let mono = TernaryForm::monomial(&field, Elem::ONE, e);
                hermitian.points().iter().map(|p| mono.eval(p.coords())).collect()
            })
            .collect();
        Ok(Scanner {
            field,
            hermitian,
            basis,
            values,
            target: d as u64 * (q + 1),
        })
    }

    fn form(&self, lead: usize, digits: &[usize], elems: &[Elem]) -> TernaryForm {
        let d = self.basis[0][0];
        let terms = std::iter::once((self.basis[lead], Elem::ONE)).chain(
            digits
                .iter()
                .enumerate()
                .map(|(i, &dg)| (self.basis[lead + 1 + i], elems[dg])),
        );
        TernaryForm::new(&self.field, d, terms).expect("valid monomials")
    }

    fn score(&self, form: &TernaryForm, classify: bool) -> Result<FormScore> {
        let count = self
            .hermitian
            .points()
            .iter()
            .filter(|p| form.eval(p.coords()).is_zero())
            .count() as u64;
        let shares_component = self.hermitian.is_component_of(form)?;
        let achieves = count == self.target && !shares_component;
        let irreducible = if achieves && classify {
            Some(matches!(reducibility_search(form, DEFAULT_BUDGET)?, Reducibility::Irreducible))
        } else {
            None
        };
        Ok(FormScore {
            count,
            achieves,
            shares_component,
            irreducible,
        })
    }

    /// Scans the block of forms whose leading monomial is `basis[lead]`,
    /// calling `hit` on every form whose zero count equals the target. Stops
    /// early when `hit` returns false or `max_forms` forms were visited.
    fn scan_block(
        &self,
        lead: usize,
        max_forms: u64,
        mut hit: impl FnMut(TernaryForm) -> Result<bool>,
    ) -> Result<(u64, bool)> {
        let f = &self.field;
        let elems: Vec<Elem> = f.elements().collect();
        let free = self.basis.len() - lead - 1;
        let mut digits = vec![0usize; free];
        let mut val = self.values[lead].clone();
        let mut scanned = 0u64;
        loop {
            if scanned >= max_forms {
                return Ok((scanned, false));
            }
            scanned += 1;
            let zeros = val.iter().filter(|v| v.is_zero()).count() as u64;
            if zeros == self.target && !hit(self.form(lead, &digits, &elems))? {
                return Ok((scanned, false));
            }
            // Odometer step, last position fastest, updating values in place.
            let mut pos = free;
            loop {
                if pos == 0 {
                    return Ok((scanned, true));
                }
                pos -= 1;
                let old = elems[digits[pos]];
                digits[pos] = (digits[pos] + 1) % elems.len();
                let new = elems[digits[pos]];
                let delta = f.sub(new, old);
                for (v, &m) in val.iter_mut().zip(&self.values[lead + 1 + pos]) {
                    *v = f.add(*v, f.mul(delta, m));
                }
                if digits[pos] != 0 {
                    break;
                }
            }
        }
    }
}

/// Every projective form of degree `d` over `F_{q^2}`, scored against the
/// Hermitian curve; achievers are classified by a complete factor search.
pub fn exhaustive_negative_search(q: u64, d: u32, model: Model) -> Result<SearchReport> {
    let start = Instant::now();
    let big_q = q * q;
    let forms = projective_form_count(big_q, d).unwrap_or(u128::MAX);
    if forms > SEARCH_GUARD {
        return Err(Error::SearchTooLarge {
            forms,
            guard: SEARCH_GUARD,
        });
    }
    let scanner = Scanner::new(q, d, model)?;
    let blocks: Vec<Result<(u64, Vec<TernaryForm>)>> = (0..scanner.basis.len())
        .into_par_iter()
        .map(|lead| {
            let mut found = Vec::new();
            let (n, _) = scanner.scan_block(lead, u64::MAX, |g| {
                found.push(g);
                Ok(true)
            })?;
            Ok((n, found))
        })
        .collect();
    let mut scanned = 0;
    let mut achievers = Vec::new();
    let mut irreducible = Vec::new();
    for block in blocks {
        let (n, found) = block?;
        scanned += n;
        for g in found {
            let score = scanner.score(&g, true)?;
            if !score.achieves {
                continue;
            }
            if score.irreducible == Some(true) {
                irreducible.push(g.canonical());
            }
            achievers.push(g.canonical());
        }
    }
    Ok(SearchReport {
        q,
        d,
        model,
        total_forms_scanned: scanned,
        target: scanner.target,
        achievers,
        irreducible_achievers: irreducible,
        stop_reason: StopReason::Completed,
        wallclock_ms: Some(start.elapsed().as_millis()),
    })
}

/// Same scan in the same order, stopping after `limit` irreducible achievers
/// or `max_forms` forms. Reducible achievers met on the way are kept.
pub fn positive_witness_search(
    q: u64,
    d: u32,
    model: Model,
    limit: usize,
    max_forms: u64,
) -> Result<SearchReport> {
    let start = Instant::now();
    let target = d as u64 * (q + 1);
    let mut report = SearchReport {
        q,
        d,
        model,
        total_forms_scanned: 0,
        target,
        achievers: Vec::new(),
        irreducible_achievers: Vec::new(),
        stop_reason: StopReason::Completed,
        wallclock_ms: None,
    };
    if target > q * q * q + 1 {
        report.stop_reason = StopReason::CapacityBound;
        report.wallclock_ms = Some(start.elapsed().as_millis());
        return Ok(report);
    }
    let scanner = Scanner::new(q, d, model)?;
    let mut remaining = max_forms;
    for lead in 0..scanner.basis.len() {
        let mut achievers = Vec::new();
        let mut irreducible = Vec::new();
        let (n, finished) = scanner.scan_block(lead, remaining, |g| {
            let score = scanner.score(&g, true)?;
            if score.achieves {
                achievers.push(g.canonical());
                if score.irreducible == Some(true) {
                    irreducible.push(g.canonical());
                }
            }
            Ok(report.irreducible_achievers.len() + irreducible.len() < limit)
        })?;
        report.total_forms_scanned += n;
        report.achievers.extend(achievers);
        report.irreducible_achievers.extend(irreducible);
        remaining -= n;
        if report.irreducible_achievers.len() >= limit {
            report.stop_reason = StopReason::LimitReached;
            break;
        }
        if !finished {
            report.stop_reason = StopReason::BudgetExhausted;
            break;
        }
    }
    report.wallclock_ms = Some(start.elapsed().as_millis());
    Ok(report)
}

/// Scores one form the same way the scans do.
pub fn score_form(q: u64, model: Model, form: &TernaryForm) -> Result<FormScore> {
    let scanner = Scanner::new(q, form.degree(), model)?;
    if form.field() != &scanner.field {
        return Err(Error::MixedFields);
    }
    scanner.score(form, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{even_half_curve, sporadic_cubic};

    #[test]
    fn form_counts() {
        assert_eq!(projective_form_count(4, 2), Some(1365));
        assert_eq!(projective_form_count(9, 2), Some(66430));
        assert_eq!(projective_form_count(4, 3), Some(349525));
    }

    #[test]
    fn conics_over_f4() {
        let r = exhaustive_negative_search(2, 2, Model::H2).unwrap();
        assert_eq!(r.total_forms_scanned, 1365);
        assert!(r.irreducible_achievers.is_empty());
        // Pairs of distinct secant lines meet H in 6 points unless they cross on it.
        assert!(!r.achievers.is_empty());
        for g in &r.achievers {
            assert_eq!(score_form(2, Model::H2, g).unwrap().count, 6);
        }
    }

    #[test]
    fn guard_applies() {
        assert!(matches!(
            exhaustive_negative_search(3, 3, Model::H2),
            Err(Error::SearchTooLarge { .. })
        ));
    }

    #[test]
    fn positive_conic_q4_agrees_with_construction() {
        let r = positive_witness_search(4, 2, Model::H1, 1, SEARCH_GUARD as u64).unwrap();
        assert_eq!(r.stop_reason, StopReason::LimitReached);
        assert_eq!(r.irreducible_achievers.len(), 1);
        let c = even_half_curve(4).unwrap();
        let s = score_form(4, Model::H1, &c.form).unwrap();
        assert!(s.achieves);
        assert_eq!(s.irreducible, Some(true));
    }

    #[test]
    fn capacity_bound() {
        let r = positive_witness_search(2, 4, Model::H2, 1, 1000).unwrap();
        assert_eq!(r.stop_reason, StopReason::CapacityBound);
        assert_eq!(r.total_forms_scanned, 0);
    }

    #[test]
    fn sporadic_cubic_scores() {
        let c = sporadic_cubic(3).unwrap();
        let s = score_form(3, Model::H2, &c.form).unwrap();
        assert_eq!(s.count, 12);
        assert_eq!(s.irreducible, Some(true));
    }
}
