//! The trinomials `A t^d + t + 1` over `F_q`: how many `A` make them split,
//! closed forms for small `d`, and bounds from the genus of the splitting
//! field.

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{gcd, prime_power, prime_powers_up_to};
use crate::error::{Error, Result};
use crate::field::{field_of_order, quadratic_field, Elem, Embedding, Field};
use crate::unipoly::UniPoly;

/// Values `A ∈ F_q^*` for which `A t^d + t + 1` has `d` distinct roots in `F_q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitCountReport {
    pub q: u64,
    pub d: u32,
    pub count: u64,
    /// Encodings of the splitting `A`, increasing.
    pub witnesses: Vec<Elem>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
}

impl SplitCountReport {
    fn with_closed_form(mut self, value: Option<u64>) -> SplitCountReport {
        self.closed_form = value;
        self.agree = value.map(|v| v == self.count);
        self
    }
}

fn splitting_values(field: &Field, q: u64, d: u32) -> Result<Vec<Elem>> {
    let mut out = Vec::new();
    for a in field.nonzero_elements() {
        if UniPoly::trinomial(field, a, d as usize).splits_over(q)? {
            out.push(a);
        }
    }
    Ok(out)
}

/// `N_d(q)` by testing every `A`. Includes the closed form when one is known
/// (`d = 3, 4`).
pub fn count_splitting_a(q: u64, d: u32) -> Result<SplitCountReport> {
    if d < 2 {
        return Err(Error::DegreeOutOfRange(d));
    }
    let field = field_of_order(q)?;
    let witnesses = splitting_values(&field, q, d)?;
    let closed = match d {
        3 => Some(n3_closed_form(q)?),
        4 => Some(n4_closed_form(q)?),
        _ => None,
    };
    Ok(SplitCountReport {
        q,
        d,
        count: witnesses.len() as u64,
        witnesses,
        closed_form: None,
        agree: None,
    }
    .with_closed_form(closed))
}

/// Image of `a ∈ F_q` (encoded in `field_of_order(q)`) inside `F_{q^2}`.
pub fn lift_to_quadratic(q: u64, a: Elem) -> Result<Elem> {
    let small = field_of_order(q)?;
    small.elem(a.index() as u64)?;
    let big = quadratic_field(q)?;
    Ok(Embedding::new(&small, &big)?.apply(a))
}

/// `⌊(q-2)/6⌋`.
pub fn n3_closed_form(q: u64) -> Result<u64> {
    prime_power(q)?;
    Ok(q.saturating_sub(2) / 6)
}

/// The same count split by the class of `q` mod 6 and characteristic 3.
pub fn n3_piecewise(q: u64) -> Result<u64> {
    prime_power(q)?;
    let num = if q.is_multiple_of(3) {
        q - 3
    } else {
        match q % 6 {
            1 => q - 7,
            2 => q - 2,
            4 => q - 4,
            _ => q - 5,
        }
    };
    Ok(num / 6)
}

pub fn n4_closed_form(q: u64) -> Result<u64> {
    let (p, e) = prime_power(q)?;
    Ok(if p == 2 {
        if e % 2 == 1 {
            0
        } else {
            (q - 4) / 12
        }
    } else if q % 24 == 23 {
        (q + 1) / 24
    } else {
        q.saturating_sub(2) / 24
    })
}

/// `e` with `n = p^e`, if any.
fn log_p(n: u64, p: u64) -> Option<u32> {
    let mut e = 0;
    let mut m = n;
    while m > 1 {
        if !m.is_multiple_of(p) {
            return None;
        }
        m /= p;
        e += 1;
    }
    (n >= 1).then_some(e)
}

/// For `d = p^e` with `p` the characteristic: some `A` splits iff
/// `F_{p^e} ⊆ F_q` with index greater than 1.
pub fn exists_split_pe(q: u64, d: u32) -> Result<bool> {
    let (p, m) = prime_power(q)?;
    let e = log_p(d as u64, p)
        .filter(|&e| e >= 1)
        .ok_or_else(|| Error::InvalidParameter(format!("d={d} is not a power of {p}")))?;
    Ok(m % e == 0 && m / e > 1)
}

/// For `d = p^e + 1`: some `A` splits iff `F_{p^e} ⊆ F_q` with index
/// greater than 2.
pub fn exists_split_pe_plus_one(q: u64, d: u32) -> Result<bool> {
    let (p, m) = prime_power(q)?;
    let e = (d >= 2)
        .then(|| log_p(d as u64 - 1, p))
        .flatten()
        .filter(|&e| e >= 1)
        .ok_or_else(|| Error::InvalidParameter(format!("d-1={} is not a power of {p}", d as i64 - 1)))?;
    Ok(m % e == 0 && m / e > 2)
}

/// Whichever subfield criterion fits `d` in the characteristic of `F_q`.
pub fn subfield_prediction(q: u64, d: u32) -> Result<Option<bool>> {
    if let Ok(v) = exists_split_pe(q, d) {
        return Ok(Some(v));
    }
    if let Ok(v) = exists_split_pe_plus_one(q, d) {
        return Ok(Some(v));
    }
    prime_power(q)?;
    Ok(None)
}

/// Two roots `T1, T2 = ρ T1` of `A t^d + t + 1` determined by their ratio.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RhoPoint {
    pub a: Elem,
    pub t1: Elem,
    pub t2: Elem,
}

/// `T1 = -(ρ^d - 1)/(ρ^d - ρ)`, `T2 = ρ T1`, `A = -(T1 + 1)/T1^d`; `None`
/// when a denominator vanishes.
pub fn rho_parametrization(field: &Field, d: u32, rho: Elem) -> Option<RhoPoint> {
    let f = field;
    let rd = f.pow(rho, d as u64);
    let den = f.sub(rd, rho);
    let den2 = f.sub(f.pow(rho, d as u64 - 1), Elem::ONE);
    if den.is_zero() || den2.is_zero() {
        return None;
    }
    let t1 = f.neg(f.div(f.sub(rd, Elem::ONE), den).ok()?);
    if t1.is_zero() {
        return None;
    }
    let t2 = f.mul(t1, rho);
    let a = f.neg(f.div(f.add(t1, Elem::ONE), f.pow(t1, d as u64)).ok()?);
    Some(RhoPoint { a, t1, t2 })
}

/// `A t^d + t + 1` at `t`.
pub fn trinomial_value(field: &Field, d: u32, a: Elem, t: Elem) -> Elem {
    let f = field;
    f.add(f.add(f.mul(a, f.pow(t, d as u64)), t), Elem::ONE)
}

/// `B = -(ρ^d - ρ)/(ρ - 1)^{d+1}`, which turns `A t^d + t + 1` into
/// `(Bt)^d - Bt - B` when `d` is a power of the characteristic.
pub fn b_transform(field: &Field, d: u32, rho: Elem) -> Option<Elem> {
    let f = field;
    let num = f.sub(f.pow(rho, d as u64), rho);
    let den = f.pow(f.sub(rho, Elem::ONE), d as u64 + 1);
    f.div(num, den).ok().map(|b| f.neg(b))
}

/// `((σ-1)/(σ-ρ))^{d-2}` for `σ = t3/t1`.
pub fn sigma_ratio_power(field: &Field, d: u32, rho: Elem, t1: Elem, t3: Elem) -> Option<Elem> {
    let f = field;
    let sigma = f.div(t3, t1).ok()?;
    let r = f.div(f.sub(sigma, Elem::ONE), f.sub(sigma, rho)).ok()?;
    Some(f.pow(r, d as u64 - 2))
}

fn factorial(n: u32) -> i128 {
    (1..=n as i128).product()
}

/// Genus `1 + (d^2 - 5d + 2)(d-2)!/4` of the splitting field of
/// `A t^d + t + 1` over `F_q(A)` when `gcd(q, d(d-1)) = 1`.
pub fn genus_fd(d: u32) -> Result<i128> {
    if !(3..=30).contains(&d) {
        return Err(Error::DegreeOutOfRange(d));
    }
    let d_ = d as i128;
    let num = (d_ * d_ - 5 * d_ + 2) * factorial(d - 2);
    if num % 4 != 0 {
        return Err(Error::NonIntegral(format!("genus numerator {num} for d={d}")));
    }
    Ok(1 + num / 4)
}

/// `(1/d + 1/(d-1) + 1/2) d!`: rational places that can sit over the three
/// ramified places.
pub fn ramified_place_bound(d: u32) -> Result<i128> {
    if !(3..=30).contains(&d) {
        return Err(Error::DegreeOutOfRange(d));
    }
    Ok(factorial(d - 1) + d as i128 * factorial(d - 2) + factorial(d) / 2)
}

/// `q + 1 - ⌊2√q⌋ g_d - C_d`; positive means some `A` splits.
pub fn serre_margin(q: u64, d: u32) -> Result<i128> {
    let g = genus_fd(d)?;
    let c = ramified_place_bound(d)?;
    let s = (4 * q).isqrt() as i128;
    Ok(q as i128 + 1 - s * g - c)
}

/// Largest integer `q` at which the Serre-bound inequality fails; it holds
/// for every larger `q`.
///
/// With `s = √q` the inequality follows from `s^2 - 2 g s - (C - 1) > 0`, which
/// holds for all `s` past its larger root. The scan starts just below `s*^2`
/// for the least integer `s*` past that root and walks down.
pub fn serre_split_threshold(d: u32) -> Result<u64> {
    let g = genus_fd(d)?;
    let c = ramified_place_bound(d)?;
    let mut s: i128 = 0;
    while s * s - 2 * g * s - (c - 1) <= 0 {
        s += 1;
    }
    let start = (s * s) as u64;
    for q in (1..start).rev() {
        if serre_margin(q, d)? <= 0 {
            return Ok(q);
        }
    }
    Ok(0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurveyRow {
    pub q: u64,
    pub count: u64,
}

/// `N_d(q)` for every prime power `q_min <= q <= q_max`, optionally only
/// those with `gcd(q, filter) = 1`.
pub fn survey_split(d: u32, q_min: u64, q_max: u64, gcd_filter: Option<u64>) -> Result<Vec<SurveyRow>> {
    if d < 2 {
        return Err(Error::DegreeOutOfRange(d));
    }
    let qs: Vec<u64> = prime_powers_up_to(q_max)
        .into_iter()
        .filter(|&q| q >= q_min && gcd_filter.is_none_or(|g| gcd(q, g) == 1))
        .collect();
    qs.par_iter()
        .map(|&q| {
            let field = field_of_order(q)?;
            let count = splitting_values(&field, q, d)?.len() as u64;
            Ok(SurveyRow { q, count })
        })
        .collect()
}
