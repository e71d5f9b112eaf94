//! The full verification matrix: every counting formula, construction,
//! survey, and exhaustive search, each checked against its claimed value.

use std::collections::BTreeSet;
use std::fmt::Display;
use std::time::Instant;

use anyhow::Result;
use hermitian_core::arith::{prime_power, prime_powers_up_to};
use hermitian_core::constructions::{
    degree_q_alpha, degree_q_curve, even_half_curve, full_point_curve, monomial_curve,
    monomial_fast_count, odd_half_curve, odd_half_params, secant_fan_curve, sporadic_cubic,
    sporadic_quartic, Construction, SPORADIC_CUBIC_QS, SPORADIC_QUARTIC_QS,
};
use hermitian_core::field::quadratic_field;
use hermitian_core::plane::{
    absolute_irreducibility_status, AbsoluteIrreducibility, HermitianCurve, Model, TernaryForm,
    DEFAULT_BUDGET,
};
use hermitian_core::search::exhaustive_negative_search;
use hermitian_core::splitting::{
    b_transform, count_splitting_a, genus_fd, n3_closed_form, n3_piecewise, n4_closed_form,
    rho_parametrization, serre_split_threshold, sigma_ratio_power, subfield_prediction,
    survey_split, trinomial_value,
};
use hermitian_core::{Elem, UniPoly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::output::Record;

pub struct Claim {
    pub number: u32,
    pub name: &'static str,
    pub tags: &'static [&'static str],
    pub reference: &'static str,
    pub expected: &'static str,
    run: fn(&mut Tally) -> Result<()>,
}

impl Claim {
    pub fn id(&self) -> String {
        format!("{:02}.{}", self.number, self.name)
    }

    /// Matches the number, the name, or any tag.
    pub fn selected_by(&self, key: &str) -> bool {
        let key = key.trim().to_ascii_lowercase();
        key == self.number.to_string()
            || key == format!("{:02}", self.number)
            || key == self.name
            || key == self.id()
            || self.tags.contains(&key.as_str())
    }
}

/// Collected outcomes of one claim's sub-checks.
#[derive(Default)]
pub struct Tally {
    checks: usize,
    failures: Vec<String>,
    notes: Vec<(String, String)>,
}

impl Tally {
    fn holds(&mut self, label: impl Display, ok: bool) {
        self.checks += 1;
        if !ok {
            self.failures.push(label.to_string());
        }
    }

    fn eq<T: PartialEq + Display>(&mut self, label: impl Display, expected: T, observed: T) {
        let ok = expected == observed;
        self.holds(format!("{label}: expected {expected}, got {observed}"), ok);
    }

    fn note(&mut self, label: impl Display, text: impl Display) {
        self.notes.push((label.to_string(), text.to_string()));
    }

    fn observed(&self) -> String {
        if self.failures.is_empty() {
            return format!("{} of {} checks hold", self.checks, self.checks);
        }
        const SHOWN: usize = 8;
        let mut s = format!(
            "{} of {} checks fail: {}",
            self.failures.len(),
            self.checks,
            self.failures.iter().take(SHOWN).cloned().collect::<Vec<_>>().join("; ")
        );
        if self.failures.len() > SHOWN {
            s.push_str("; ...");
        }
        s
    }
}

pub fn claims() -> Vec<Claim> {
    vec![
        Claim {
            number: 1,
            name: "hermitian-points",
            tags: &["hermitian"],
            reference: "Hermitian curve has q^3+1 rational points over F_{q^2}",
            expected: "q^3+1 points for q in {2,3,4,5,7,8,9}, models H1 and H2",
            run: hermitian_points,
        },
        Claim {
            number: 2,
            name: "n3-closed-form",
            tags: &["d3", "splitting"],
            reference: "N_3(q) = floor((q-2)/6)",
            expected: "brute force equals floor((q-2)/6) for prime powers q <= 64; piecewise table agrees up to 10^4",
            run: n3_claim,
        },
        Claim {
            number: 3,
            name: "n4-closed-form",
            tags: &["d4", "splitting"],
            reference: "N_4(q) piecewise closed form",
            expected: "brute force equals the closed form for prime powers q <= 64",
            run: n4_claim,
        },
        Claim {
            number: 4,
            name: "subfield-criteria",
            tags: &["splitting", "d2", "d3", "d4", "d5"],
            reference: "d = p^e splits iff [F_q:F_{p^e}] > 1; d = p^e+1 iff [F_q:F_{p^e}] > 2",
            expected: "criterion agrees with N_d(q) > 0 on the listed (d, q) grid",
            run: subfield_claim,
        },
        Claim {
            number: 5,
            name: "negative-searches",
            tags: &["search", "d2", "d3"],
            reference: "no irreducible curve achieves d(q+1) for (q,d) in {(2,2),(3,2),(2,3)}",
            expected: "1365 / 66430 / 349525 forms scanned, no irreducible achievers",
            run: negative_claim,
        },
        Claim {
            number: 6,
            name: "sporadic-cubics",
            tags: &["d3", "constructions"],
            reference: "tabulated cubics meet H in 3(q+1) points for q in {3,4,5,7}",
            expected: "count 3(q+1) and absolutely irreducible",
            run: cubic_claim,
        },
        Claim {
            number: 7,
            name: "sporadic-quartics",
            tags: &["d4", "constructions"],
            reference: "tabulated quartics meet H in 4(q+1) points for q in {5,9,11,13,17,19,25}",
            expected: "some primitive omega gives count 4(q+1)",
            run: quartic_claim,
        },
        Claim {
            number: 8,
            name: "secant-fan",
            tags: &["constructions"],
            reference: "secant fan curves achieve d(q+1) for q+1 <= d <= q^2-q",
            expected: "count d(q+1) for q in {3,4,5}; certified absolutely irreducible for d <= 5",
            run: secant_fan_claim,
        },
        Claim {
            number: 9,
            name: "full-point",
            tags: &["constructions"],
            reference: "a degree q^2-q+1 curve through all q^3+1 Hermitian points",
            expected: "count q^3+1 for q in {3,4,5}; q=2 reported only",
            run: full_point_claim,
        },
        Claim {
            number: 10,
            name: "degree-q",
            tags: &["constructions"],
            reference: "a degree-q curve meets H in q(q+1) points",
            expected: "count q(q+1) for q in {3,4,5,7}",
            run: degree_q_claim,
        },
        Claim {
            number: 11,
            name: "even-half",
            tags: &["constructions"],
            reference: "for even q a degree q/2 curve meets H in (q/2)(q+1) points",
            expected: "count (q/2)(q+1) for q in {4,8,16}",
            run: even_half_claim,
        },
        Claim {
            number: 12,
            name: "odd-half",
            tags: &["constructions"],
            reference: "for odd q a degree (q+1)/2 curve meets H in ((q+1)/2)(q+1) points",
            expected: "parameters exist and count ((q+1)/2)(q+1) for q in {17,19,23,25,27,29}; q <= 13 reported only",
            run: odd_half_claim,
        },
        Claim {
            number: 13,
            name: "d5-survey",
            tags: &["d5", "survey"],
            reference: "N_5(q) = 0 last at q = 131 among gcd(q,20) = 1",
            expected: "positive exactly at {67,79,83,101,103,107,109,113,121,127} in [67,131]; N_5(131) = 0; positive on (131,500]",
            run: d5_claim,
        },
        Claim {
            number: 14,
            name: "d6-survey",
            tags: &["d6", "survey"],
            reference: "N_6(q) > 0 for q > 1877 with gcd(q,30) = 1",
            expected: "N_6(1877) = 0; positive on (1877,2500]",
            run: d6_claim,
        },
        Claim {
            number: 15,
            name: "genus-thresholds",
            tags: &["genus", "d3", "d4", "d5", "d6"],
            reference: "g_d = 1 + (d^2-5d+2)(d-2)!/4 and the Serre-bound threshold",
            expected: "g = 0, 0, 4, 49 for d = 3..6; thresholds 233 (d=5) and 10766 (d=6)",
            run: genus_claim,
        },
        Claim {
            number: 16,
            name: "properties",
            tags: &["properties"],
            reference: "Euler identity, monomial fast count, ratio parametrization, norm and trace",
            expected: "all identities hold exactly",
            run: property_claim,
        },
    ]
}

pub struct RunResult {
    pub records: Vec<Record>,
    pub all_pass: bool,
}

/// Runs the selected claims in order; a claim whose code errors is a failure.
pub fn run(only: &[String], timings: bool) -> Result<RunResult> {
    let all = claims();
    let selected: Vec<&Claim> = all
        .iter()
        .filter(|c| only.is_empty() || only.iter().any(|k| c.selected_by(k)))
        .collect();
    if selected.is_empty() {
        anyhow::bail!("--only {only:?} matches no claim");
    }
    let mut records = Vec::new();
    let mut all_pass = true;
    for claim in selected {
        let start = Instant::now();
        let mut tally = Tally::default();
        let result = (claim.run)(&mut tally);
        let millis = start.elapsed().as_millis();
        let (observed, pass) = match result {
            Ok(()) => (tally.observed(), tally.failures.is_empty()),
            Err(e) => (format!("error: {e}"), false),
        };
        all_pass &= pass;
        let mut r = record(&claim.id(), claim.reference, claim.expected, &observed, Value::Bool(pass));
        if timings {
            r.insert("millis".into(), json!(millis));
        }
        records.push(r);
        for (label, text) in &tally.notes {
            let id = format!("{}/{}", claim.id(), label);
            records.push(record(&id, claim.reference, "reported only", text, Value::Null));
        }
    }
    Ok(RunResult { records, all_pass })
}

fn record(id: &str, reference: &str, expected: &str, observed: &str, pass: Value) -> Record {
    let mut r = Record::new();
    r.insert("claim_id".into(), json!(id));
    r.insert("reference".into(), json!(reference));
    r.insert("expected".into(), json!(expected));
    r.insert("observed".into(), json!(observed));
    r.insert("pass".into(), pass);
    r
}

fn count_of(c: &Construction) -> Result<u64> {
    Ok(c.hermitian()?.intersect(&c.form, false)?.count)
}

fn hermitian_points(t: &mut Tally) -> Result<()> {
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        for model in [Model::H1, Model::H2] {
            let h = HermitianCurve::new(q, model)?;
            t.eq(format!("q={q} {model}"), q * q * q + 1, h.points().len() as u64);
            let on = h.points().iter().all(|p| h.form().eval(p.coords()).is_zero());
            t.holds(format!("q={q} {model}: a listed point is off the curve"), on);
        }
    }
    Ok(())
}

fn n3_claim(t: &mut Tally) -> Result<()> {
    for q in prime_powers_up_to(64) {
        t.eq(format!("N_3({q})"), n3_closed_form(q)?, count_splitting_a(q, 3)?.count);
    }
    let bad: Vec<u64> = prime_powers_up_to(10_000)
        .into_iter()
        .filter(|&q| n3_piecewise(q).ok() != n3_closed_form(q).ok())
        .collect();
    t.holds(format!("piecewise table differs at {bad:?}"), bad.is_empty());
    Ok(())
}

fn n4_claim(t: &mut Tally) -> Result<()> {
    for q in prime_powers_up_to(64) {
        t.eq(format!("N_4({q})"), n4_closed_form(q)?, count_splitting_a(q, 4)?.count);
    }
    for (q, v) in [(16, 1), (23, 1), (8, 0), (25, 0)] {
        t.eq(format!("N_4({q}) brute force"), v, count_splitting_a(q, 4)?.count);
    }
    Ok(())
}

/// The `(d, q)` grid on which the subfield criteria are compared.
pub const SUBFIELD_GRID: &[(u32, &[u64])] = &[
    (2, &[2, 4, 8, 16, 32]),
    (3, &[2, 4, 8, 16, 32, 64, 3, 9, 27, 81]),
    (4, &[4, 16, 64, 3, 9, 27, 81]),
    (5, &[5, 25, 4, 16, 64]),
    (9, &[3, 9, 27, 81]),
];

fn subfield_claim(t: &mut Tally) -> Result<()> {
    for &(d, qs) in SUBFIELD_GRID {
        for &q in qs {
            let brute = count_splitting_a(q, d)?.count > 0;
            match subfield_prediction(q, d)? {
                Some(p) => t.eq(format!("d={d} q={q}"), brute, p),
                None => t.holds(format!("d={d} q={q}: no criterion applies"), false),
            }
        }
    }
    Ok(())
}

fn negative_claim(t: &mut Tally) -> Result<()> {
    for (q, d, forms) in [(2, 2, 1365u64), (3, 2, 66430), (2, 3, 349525)] {
        let r = exhaustive_negative_search(q, d, Model::H2)?;
        t.eq(format!("(q,d)=({q},{d}) forms"), forms, r.total_forms_scanned);
        t.eq(format!("(q,d)=({q},{d}) irreducible achievers"), 0, r.irreducible_achievers.len());
        t.note(
            format!("q={q},d={d}"),
            format!("{} reducible achievers", r.achievers.len()),
        );
    }
    Ok(())
}

fn cubic_claim(t: &mut Tally) -> Result<()> {
    for q in SPORADIC_CUBIC_QS {
        let c = sporadic_cubic(q)?;
        t.eq(format!("q={q} count"), 3 * (q + 1), count_of(&c)?);
        let status = absolute_irreducibility_status(&c.form, DEFAULT_BUDGET)?;
        t.holds(format!("q={q}: {}", status.label()), status.is_certified());
    }
    Ok(())
}

fn quartic_claim(t: &mut Tally) -> Result<()> {
    for q in SPORADIC_QUARTIC_QS {
        match sporadic_quartic(q)? {
            Some(c) => {
                t.eq(format!("q={q} count"), 4 * (q + 1), count_of(&c)?);
                if !c.descriptor.parameters.is_empty() {
                    t.note(format!("q={q}"), c.descriptor.to_string());
                }
            }
            None => t.holds(format!("q={q}: no primitive omega works"), false),
        }
    }
    Ok(())
}

fn secant_fan_claim(t: &mut Tally) -> Result<()> {
    for q in [3u64, 4, 5] {
        for d in q as u32 + 1..=(q * q - q) as u32 {
            let c = secant_fan_curve(q, d)?;
            t.eq(format!("q={q} d={d}"), d as u64 * (q + 1), count_of(&c)?);
            if d <= 5 {
                let status = absolute_irreducibility_status(&c.form, DEFAULT_BUDGET)?;
                t.holds(format!("q={q} d={d}: {}", status.label()), status.is_certified());
            }
        }
    }
    Ok(())
}

fn describe_status(status: &AbsoluteIrreducibility) -> String {
    match status {
        AbsoluteIrreducibility::Reducible { factor } => format!("reducible, factor {factor}"),
        AbsoluteIrreducibility::Undetermined { reason } => format!("undetermined ({reason})"),
        AbsoluteIrreducibility::Certified { .. } => status.label().to_string(),
    }
}

fn full_point_claim(t: &mut Tally) -> Result<()> {
    for q in [3u64, 4, 5] {
        t.eq(format!("q={q}"), q * q * q + 1, count_of(&full_point_curve(q)?)?);
    }
    let c = full_point_curve(2)?;
    let status = absolute_irreducibility_status(&c.form, DEFAULT_BUDGET)?;
    t.note("q=2", format!("{} points, {}", count_of(&c)?, describe_status(&status)));
    Ok(())
}

fn degree_q_claim(t: &mut Tally) -> Result<()> {
    for q in [3u64, 4, 5, 7] {
        let c = degree_q_curve(q, degree_q_alpha(q)?)?;
        t.eq(format!("q={q}"), q * (q + 1), count_of(&c)?);
    }
    Ok(())
}

fn even_half_claim(t: &mut Tally) -> Result<()> {
    for q in [4u64, 8, 16] {
        t.eq(format!("q={q}"), q / 2 * (q + 1), count_of(&even_half_curve(q)?)?);
    }
    Ok(())
}

fn odd_half_claim(t: &mut Tally) -> Result<()> {
    for q in [3u64, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29] {
        let target = q.div_ceil(2) * (q + 1);
        let outcome = match odd_half_params(q)? {
            Some((a, b, _)) => Some(count_of(&odd_half_curve(q, a, b)?)?),
            None => None,
        };
        if q <= 13 {
            let text = match outcome {
                Some(n) => format!("parameters found, count {n} of {target}"),
                None => "no parameters".to_string(),
            };
            t.note(format!("q={q}"), text);
        } else {
            match outcome {
                Some(n) => t.eq(format!("q={q}"), target, n),
                None => t.holds(format!("q={q}: no parameters"), false),
            }
        }
    }
    Ok(())
}

fn d5_claim(t: &mut Tally) -> Result<()> {
    let rows = survey_split(5, 67, 500, Some(20))?;
    let positive: BTreeSet<u64> = rows
        .iter()
        .filter(|r| r.q <= 131 && r.count > 0)
        .map(|r| r.q)
        .collect();
    let expected: BTreeSet<u64> = [67, 79, 83, 101, 103, 107, 109, 113, 121, 127].into();
    t.eq("positive set in [67,131]", format!("{expected:?}"), format!("{positive:?}"));
    let at_131 = rows.iter().find(|r| r.q == 131).map(|r| r.count);
    t.holds(format!("N_5(131) is {at_131:?}, expected Some(0)"), at_131 == Some(0));
    for r in rows.iter().filter(|r| r.q > 131) {
        t.holds(format!("N_5({}) = 0", r.q), r.count > 0);
    }
    Ok(())
}

fn d6_claim(t: &mut Tally) -> Result<()> {
    let rows = survey_split(6, 1877, 2500, Some(30))?;
    let at_1877 = rows.iter().find(|r| r.q == 1877).map(|r| r.count);
    t.holds(format!("N_6(1877) is {at_1877:?}, expected Some(0)"), at_1877 == Some(0));
    for r in rows.iter().filter(|r| r.q > 1877) {
        t.holds(format!("N_6({}) = 0", r.q), r.count > 0);
    }
    Ok(())
}

fn genus_claim(t: &mut Tally) -> Result<()> {
    for (d, g) in [(3, 0), (4, 0), (5, 4), (6, 49)] {
        t.eq(format!("g_{d}"), g, genus_fd(d)?);
    }
    t.eq("threshold d=5", 233, serre_split_threshold(5)?);
    t.eq("threshold d=6", 10766, serre_split_threshold(6)?);
    Ok(())
}

fn property_claim(t: &mut Tally) -> Result<()> {
    euler_identity(t)?;
    monomial_fast_path(t)?;
    ratio_identities(t)?;
    norm_trace(t)?;
    Ok(())
}

/// `X F_X + Y F_Y + Z F_Z = d F` on pseudo-random forms from a fixed seed.
fn euler_identity(t: &mut Tally) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x4865_726d);
    let qs = [2u64, 3, 4, 5, 7, 8, 9];
    let mut bad = 0;
    for _ in 0..1000 {
        let q = qs[rng.gen_range(0..qs.len())];
        let d = rng.gen_range(1..=6u32);
        let field = quadratic_field(q)?;
        let terms = hermitian_core::plane::monomials_desc(d)
            .into_iter()
            .map(|e| Ok((e, field.elem(rng.gen_range(0..field.order() as u64))?)))
            .collect::<hermitian_core::Result<Vec<_>>>()?;
        let f = TernaryForm::new(&field, d, terms)?;
        let [fx, fy, fz] = f.partials();
        let lhs = TernaryForm::x(&field)
            .mul(&fx)?
            .add(&TernaryForm::y(&field).mul(&fy)?)?
            .add(&TernaryForm::z(&field).mul(&fz)?)?;
        if lhs != f.scale(field.from_int(d as i64)) {
            bad += 1;
        }
    }
    t.eq("Euler identity failures", 0, bad);
    Ok(())
}

fn monomial_fast_path(t: &mut Tally) -> Result<()> {
    for q in [2u64, 3, 4, 5, 7, 8] {
        let h = HermitianCurve::new(q, Model::H2)?;
        for d in 1..=6 {
            for alpha in h.field().nonzero_elements() {
                let fast = monomial_fast_count(q, d, alpha)?;
                let slow = h.intersect(&monomial_curve(q, d, alpha)?.form, false)?.count;
                t.eq(format!("monomial q={q} d={d} alpha={}", alpha.index()), slow, fast);
            }
        }
    }
    Ok(())
}

/// `e >= 1` with `n = p^e`.
fn p_exponent(n: u64, p: u64) -> Option<u32> {
    let mut e = 0;
    let mut m = n;
    while m > 1 && m.is_multiple_of(p) {
        m /= p;
        e += 1;
    }
    (m == 1 && e >= 1).then_some(e)
}

/// Parametrized roots, the additive shift for `d = p^e`, and the third-root
/// identity for `d = p^e + 1`, for every `ρ` in `F_{q^2}`.
fn ratio_identities(t: &mut Tally) -> Result<()> {
    for q in prime_powers_up_to(16) {
        let (p, _) = prime_power(q)?;
        let field = quadratic_field(q)?;
        let big_q = field.order() as u64;
        for d in 2..=6u32 {
            let pe = p_exponent(d as u64, p);
            let pe1 = p_exponent(d as u64 - 1, p);
            for rho in field.elements() {
                let Some(pt) = rho_parametrization(&field, d, rho) else {
                    continue;
                };
                let label = format!("q={q} d={d} rho={}", rho.index());
                t.holds(format!("{label}: T1 not a root"), trinomial_value(&field, d, pt.a, pt.t1).is_zero());
                t.holds(format!("{label}: T2 not a root"), trinomial_value(&field, d, pt.a, pt.t2).is_zero());
                if pe.is_some() {
                    let b = b_transform(&field, d, rho).expect("rho != 1 here");
                    let minus_b_pow = field.neg(field.pow(b, d as u64 - 1));
                    t.holds(format!("{label}: A != -B^(d-1)"), pt.a == minus_b_pow);
                    // a ranges over F_{p^e} ∩ F_{q^2}: the roots of a^d = a.
                    let shifts: Vec<Elem> = field
                        .elements()
                        .filter(|&a| field.pow(a, d as u64) == a)
                        .collect();
                    let roots: BTreeSet<Elem> = shifts
                        .iter()
                        .map(|&a| field.add(pt.t1, field.div(a, b).expect("b != 0")))
                        .collect();
                    let all_roots = roots.iter().all(|&r| trinomial_value(&field, d, pt.a, r).is_zero());
                    t.holds(format!("{label}: shifted T1 not a root"), all_roots);
                    t.eq(format!("{label}: distinct shifts"), shifts.len(), roots.len());
                }
                if pe1.is_some() {
                    let poly = UniPoly::trinomial(&field, pt.a, d as usize);
                    for t3 in poly.roots_in_field(big_q)? {
                        if t3 == pt.t1 || t3 == pt.t2 {
                            continue;
                        }
                        let v = sigma_ratio_power(&field, d, rho, pt.t1, t3);
                        t.holds(format!("{label} t3={}: sigma identity", t3.index()), v == Some(rho));
                    }
                }
            }
        }
    }
    Ok(())
}

fn norm_trace(t: &mut Tally) -> Result<()> {
    for q in prime_powers_up_to(16) {
        let field = quadratic_field(q)?;
        let n = |x| field.norm(x).expect("quadratic");
        let tr = |x| field.trace(x).expect("quadratic");
        let mut norm_fibre = vec![0u64; field.order() as usize];
        let mut trace_fibre = vec![0u64; field.order() as usize];
        let mut ok = true;
        for x in field.elements() {
            ok &= field.in_subfield(n(x), q as u32) && field.in_subfield(tr(x), q as u32);
            norm_fibre[n(x).index() as usize] += 1;
            trace_fibre[tr(x).index() as usize] += 1;
            for y in field.elements() {
                ok &= n(field.mul(x, y)) == field.mul(n(x), n(y));
                ok &= tr(field.add(x, y)) == field.add(tr(x), tr(y));
            }
        }
        t.holds(format!("q={q}: norm/trace homomorphism or image"), ok);
        for s in field.subfield_elements(q)? {
            t.eq(format!("q={q} trace fibre {}", s.index()), q, trace_fibre[s.index() as usize]);
            if s.is_zero() {
                continue;
            }
            let pre = field.norm_preimages(s)?;
            t.eq(format!("q={q} norm fibre {}", s.index()), q + 1, norm_fibre[s.index() as usize]);
            t.holds(format!("q={q} norm preimages of {}", s.index()), pre.len() as u64 == q + 1 && pre.iter().all(|&y| n(y) == s));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claims_are_numbered_in_order() {
        let all = claims();
        assert_eq!(all.len(), 16);
        assert!(all.iter().enumerate().all(|(i, c)| c.number as usize == i + 1));
    }

    #[test]
    fn selection_by_number_name_and_tag() {
        let all = claims();
        let pick = |key: &str| -> Vec<u32> {
            all.iter().filter(|c| c.selected_by(key)).map(|c| c.number).collect()
        };
        assert_eq!(pick("d3"), vec![2, 4, 5, 6, 15]);
        assert_eq!(pick("7"), vec![7]);
        assert_eq!(pick("07"), vec![7]);
        assert_eq!(pick("secant-fan"), vec![8]);
        assert_eq!(pick("14.d6-survey"), vec![14]);
        assert!(pick("nothing").is_empty());
    }

    #[test]
    fn failing_checks_are_summarized() {
        let mut t = Tally::default();
        t.eq("a", 1, 1);
        t.eq("b", 2, 3);
        assert_eq!(t.observed(), "1 of 2 checks fail: b: expected 2, got 3");
    }
}
