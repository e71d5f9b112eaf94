use super::form::{monomial_index_desc, monomials_desc, num_monomials, Exps, TernaryForm};
use super::point::{for_each_chart_point, ProjPoint};
use crate::error::{Error, Result};
use crate::field::{Elem, Field};

/// Default number of candidate factors a search may visit per degree.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reducibility {
    /// No factor of degree `1..=d/2` exists over the coefficient field.
    Irreducible,
    Factor {
        factor: TernaryForm,
        cofactor: TernaryForm,
    },
    /// Candidate factors of this degree were too many to enumerate.
    BudgetExceeded { degree: u32 },
}

/// Looks for a factor of `f` over its coefficient field by trying every
/// candidate of degree `k <= d/2`.
///
/// Linear candidates are always tried. For `k >= 2` the search runs only if
/// `Q^{M_k - 1} <= budget`, where `M_k` is the number of degree-`k`
/// monomials.
pub fn reducibility_search(f: &TernaryForm, budget: u128) -> Result<Reducibility> {
    if f.is_zero() {
        return Err(Error::InvalidParameter("the zero form has no factorization".into()));
    }
    let d = f.degree();
    let q = f.field().order() as u128;
    for k in 1..=d / 2 {
        if k >= 2 {
            let exceeds = q
                .checked_pow(num_monomials(k) as u32 - 1)
                .is_none_or(|cost| cost > budget);
            if exceeds {
                return Ok(Reducibility::BudgetExceeded { degree: k });
            }
        }
        if let Some((factor, cofactor)) = search_degree(f, k) {
            return Ok(Reducibility::Factor {
                factor: factor.canonical(),
                cofactor,
            });
        }
    }
    Ok(Reducibility::Irreducible)
}

fn divides(a: Exps, b: Exps) -> bool {
    (0..3).all(|v| a[v] <= b[v])
}

/// Exhaustive search for a degree-`k` factor, candidates normalized so the
/// lexicographically leading coefficient is 1.
fn search_degree(f: &TernaryForm, k: u32) -> Option<(TernaryForm, TernaryForm)> {
    let field = f.field();
    let d = f.degree();
    let basis_k = monomials_desc(k);
    let basis_d = monomials_desc(d);
    let qdeg = d - k;
    let basis_u = monomials_desc(qdeg);

    let mut dense = vec![Elem::ZERO; basis_d.len()];
    for (e, c) in f.terms() {
        dense[monomial_index_desc(e)] = c;
    }
    let f_lead = basis_d[dense.iter().position(|c| !c.is_zero())?];
    let f_trail = basis_d[dense.iter().rposition(|c| !c.is_zero())?];

    // product[u][b] = index of basis_u[u] * basis_k[b] in basis_d.
    let product: Vec<Vec<usize>> = basis_u
        .iter()
        .map(|u| {
            basis_k
                .iter()
                .map(|b| monomial_index_desc([u[0] + b[0], u[1] + b[1], u[2] + b[2]]))
                .collect()
        })
        .collect();

    let m = basis_k.len();
    let elems: Vec<Elem> = field.elements().collect();
    let mut rem = vec![Elem::ZERO; basis_d.len()];
    let mut quot = vec![Elem::ZERO; basis_u.len()];
    let mut terms: Vec<(usize, Elem)> = Vec::with_capacity(m);

    for lead in 0..m {
        if !divides(basis_k[lead], f_lead) {
            continue;
        }
        let free = m - lead - 1;
        let mut digits = vec![0usize; free];
        loop {
            terms.clear();
            terms.push((lead, Elem::ONE));
            for (off, &dg) in digits.iter().enumerate() {
                if dg != 0 {
                    terms.push((lead + 1 + off, elems[dg]));
                }
            }
            let trail = basis_k[terms.last().expect("leading term").0];
            if divides(trail, f_trail)
                && try_divide(field, &dense, &basis_d, basis_k[lead], &terms, &product, &mut rem, &mut quot)
            {
                let g = TernaryForm::new(field, k, terms.iter().map(|&(b, c)| (basis_k[b], c)))
                    .expect("valid monomials");
                let h = TernaryForm::new(
                    field,
                    qdeg,
                    quot.iter().enumerate().map(|(u, &c)| (basis_u[u], c)),
                )
                .expect("valid monomials");
                return Some((g, h));
            }
            if !advance(&mut digits, elems.len()) {
                break;
            }
        }
    }
    None
}

/// Odometer step with the last digit fastest; false once it wraps.
fn advance(digits: &mut [usize], base: usize) -> bool {
    for dg in digits.iter_mut().rev() {
        *dg += 1;
        if *dg < base {
            return true;
        }
        *dg = 0;
    }
    false
}

#[allow(clippy::too_many_arguments)]
fn try_divide(
    field: &Field,
    dense: &[Elem],
    basis_d: &[Exps],
    lead: Exps,
    terms: &[(usize, Elem)],
    product: &[Vec<usize>],
    rem: &mut [Elem],
    quot: &mut [Elem],
) -> bool {
    rem.copy_from_slice(dense);
    quot.fill(Elem::ZERO);
    for idx in 0..rem.len() {
        let c = rem[idx];
        if c.is_zero() {
            continue;
        }
        let e = basis_d[idx];
        if !divides(lead, e) {
            return false;
        }
        let u = monomial_index_desc([e[0] - lead[0], e[1] - lead[1], e[2] - lead[2]]);
        quot[u] = c;
        let row = &product[u];
        for &(b, gc) in terms {
            let t = row[b];
            rem[t] = field.sub(rem[t], field.mul(c, gc));
        }
    }
    true
}

pub fn is_singular_point(f: &TernaryForm, p: [Elem; 3]) -> bool {
    f.eval(p).is_zero() && f.partials().iter().all(|g| g.eval(p).is_zero())
}

/// First nonsingular rational point of `f` in chart order.
pub fn find_smooth_point(f: &TernaryForm) -> Option<ProjPoint> {
    let field = f.field();
    let partials = f.partials();
    let mut found = None;
    for_each_chart_point(field, |p| {
        if found.is_none()
            && f.eval(p).is_zero()
            && partials.iter().any(|g| !g.eval(p).is_zero())
        {
            found = Some(ProjPoint::new(field, p).expect("chart points are nonzero"));
        }
    });
    found
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AbsoluteIrreducibility {
    /// Irreducible over the coefficient field with a smooth rational point,
    /// which rules out splitting into conjugate components.
    Certified { smooth_point: ProjPoint },
    Reducible { factor: TernaryForm },
    Undetermined { reason: String },
}

impl AbsoluteIrreducibility {
    pub fn is_certified(&self) -> bool {
        matches!(self, AbsoluteIrreducibility::Certified { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            AbsoluteIrreducibility::Certified { .. } => "absolutely-irreducible",
            AbsoluteIrreducibility::Reducible { .. } => "reducible",
            AbsoluteIrreducibility::Undetermined { .. } => "undetermined",
        }
    }
}

pub fn absolute_irreducibility_status(f: &TernaryForm, budget: u128) -> Result<AbsoluteIrreducibility> {
    match reducibility_search(f, budget)? {
        Reducibility::Factor { factor, .. } => Ok(AbsoluteIrreducibility::Reducible { factor }),
        Reducibility::BudgetExceeded { degree } => Ok(AbsoluteIrreducibility::Undetermined {
            reason: format!("degree-{degree} factor search exceeds the budget"),
        }),
        Reducibility::Irreducible => Ok(match find_smooth_point(f) {
            Some(smooth_point) => AbsoluteIrreducibility::Certified { smooth_point },
            None => AbsoluteIrreducibility::Undetermined {
                reason: "no nonsingular rational point".into(),
            },
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{make_field, Embedding};
    use crate::plane::hermitian::{hermitian_model, Model};
    use proptest::prelude::*;

    fn lin(f: &Field, a: u32, b: u32, c: u32) -> TernaryForm {
        TernaryForm::linear(f, f.elem(a as u64).unwrap(), f.elem(b as u64).unwrap(), f.elem(c as u64).unwrap())
    }

    #[test]
    fn product_of_lines_is_found() {
        let f = make_field(3, 2).unwrap();
        let g = lin(&f, 1, 2, 3).mul(&lin(&f, 0, 1, 5)).unwrap().mul(&lin(&f, 4, 0, 1)).unwrap();
        match reducibility_search(&g, DEFAULT_BUDGET).unwrap() {
            Reducibility::Factor { factor, cofactor } => {
                assert_eq!(factor.degree(), 1);
                assert!(factor.mul(&cofactor).unwrap().projectively_eq(&g));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn conic_times_conic() {
        let f = make_field(2, 2).unwrap();
        let c1 = TernaryForm::from_int_terms(&f, 2, &[(1, [2, 0, 0]), (1, [1, 1, 0]), (1, [0, 1, 1])]).unwrap();
        let c2 = TernaryForm::from_int_terms(&f, 2, &[(1, [0, 2, 0]), (1, [1, 0, 1]), (1, [0, 0, 2])]).unwrap();
        assert_eq!(reducibility_search(&c1, DEFAULT_BUDGET).unwrap(), Reducibility::Irreducible);
        match reducibility_search(&c1.mul(&c2).unwrap(), DEFAULT_BUDGET).unwrap() {
            Reducibility::Factor { factor, .. } => assert_eq!(factor.degree(), 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn hermitian_curves_are_certified() {
        for q in [2, 3] {
            for model in [Model::H1, Model::H2] {
                let h = hermitian_model(q, model).unwrap();
                assert!(absolute_irreducibility_status(&h, DEFAULT_BUDGET).unwrap().is_certified());
            }
        }
    }

    #[test]
    fn conjugate_lines_have_no_smooth_point() {
        // X^2 + XY + Y^2 over F_2 splits only over F_4 and is singular at [0:0:1].
        let f = make_field(2, 1).unwrap();
        let g = TernaryForm::from_int_terms(&f, 2, &[(1, [2, 0, 0]), (1, [1, 1, 0]), (1, [0, 2, 0])]).unwrap();
        assert_eq!(reducibility_search(&g, DEFAULT_BUDGET).unwrap(), Reducibility::Irreducible);
        assert!(matches!(
            absolute_irreducibility_status(&g, DEFAULT_BUDGET).unwrap(),
            AbsoluteIrreducibility::Undetermined { .. }
        ));
    }

    #[test]
    fn budget_is_reported() {
        // Conics over F_9 fit (9^5 candidates), cubics do not (9^9).
        let f = make_field(3, 2).unwrap();
        let g = TernaryForm::from_int_terms(&f, 6, &[(1, [6, 0, 0]), (1, [0, 6, 0]), (1, [0, 0, 6]), (1, [1, 2, 3])]).unwrap();
        assert_eq!(
            reducibility_search(&g, DEFAULT_BUDGET).unwrap(),
            Reducibility::BudgetExceeded { degree: 3 }
        );
    }

    #[test]
    fn singular_points() {
        let f = make_field(7, 1).unwrap();
        // Nodal cubic Y^2 Z - X^3 - X^2 Z.
        let g = TernaryForm::from_int_terms(&f, 3, &[(1, [0, 2, 1]), (-1, [3, 0, 0]), (-1, [2, 0, 1])]).unwrap();
        assert!(is_singular_point(&g, [Elem::ZERO, Elem::ZERO, Elem::ONE]));
        assert!(!is_singular_point(&g, [f.from_int(-1), Elem::ZERO, Elem::ONE]));
        assert!(!is_singular_point(&g, [Elem::ONE, Elem::ONE, Elem::ONE]));
    }

    fn arb_form(f: Field, d: u32) -> impl Strategy<Value = TernaryForm> {
        let n = num_monomials(d);
        let order = f.order();
        proptest::collection::vec(0..order, n).prop_map(move |cs| {
            TernaryForm::new(
                &f,
                d,
                monomials_desc(d).into_iter().zip(cs).map(|(e, c)| (e, f.elem(c as u64).unwrap())),
            )
            .unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn euler_identity(g in arb_form(make_field(5, 2).unwrap(), 4)) {
            let f = g.field().clone();
            let [gx, gy, gz] = g.partials();
            let lhs = TernaryForm::x(&f).mul(&gx).unwrap()
                .add(&TernaryForm::y(&f).mul(&gy).unwrap()).unwrap()
                .add(&TernaryForm::z(&f).mul(&gz).unwrap()).unwrap();
            let rhs = g.scale(f.from_int(4));
            prop_assert!(lhs.sub(&rhs).unwrap().is_zero());
        }

        #[test]
        fn found_factors_divide(g in arb_form(make_field(2, 2).unwrap(), 2), h in arb_form(make_field(2, 2).unwrap(), 2)) {
            prop_assume!(!g.is_zero() && !h.is_zero());
            let prod = g.mul(&h).unwrap();
            match reducibility_search(&prod, DEFAULT_BUDGET).unwrap() {
                Reducibility::Factor { factor, cofactor } => {
                    prop_assert!(factor.mul(&cofactor).unwrap().projectively_eq(&prod));
                }
                other => prop_assert!(false, "{:?}", other),
            }
        }

        /// A form over F_4 with no linear factor must also have no linear
        /// factor defined over F_4 after lifting to F_16.
        #[test]
        fn irreducible_verdict_is_sound(g in arb_form(make_field(2, 2).unwrap(), 3)) {
            prop_assume!(!g.is_zero());
            let small = g.field().clone();
            let big = make_field(2, 4).unwrap();
            let emb = Embedding::new(&small, &big).unwrap();
            let lifted = g.map_field(&emb).unwrap();
            let elems: Vec<Elem> = small.elements().collect();
            let mut rational_lines = Vec::new();
            for &a in &elems {
                for &b in &elems {
                    for &c in &elems {
                        if !(a.is_zero() && b.is_zero() && c.is_zero()) {
                            rational_lines.push(TernaryForm::linear(&big, emb.apply(a), emb.apply(b), emb.apply(c)));
                        }
                    }
                }
            }
            let has_line = rational_lines.iter().any(|l| lifted.exact_div(l).unwrap().is_some());
            let verdict = reducibility_search(&g, DEFAULT_BUDGET).unwrap();
            prop_assert_eq!(has_line, verdict != Reducibility::Irreducible);
        }
    }
}
