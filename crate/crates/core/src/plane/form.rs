use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Elem, Embedding, Field};

/// Exponents of `X^i Y^j Z^k`.
pub type Exps = [u32; 3];

/// A homogeneous polynomial in `X, Y, Z` over a finite field.
///
/// Terms are kept in a map ordered lexicographically on `(i, j, k)`; zero
/// coefficients are never stored. The zero form is allowed (it shows up as a
/// partial derivative) and vanishes everywhere.
#[derive(Clone, PartialEq, Eq)]
pub struct TernaryForm {
    field: Field,
    degree: u32,
    terms: BTreeMap<Exps, Elem>,
}

impl fmt::Debug for TernaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for TernaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, &c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut factors = Vec::new();
            if c != Elem::ONE || e.iter().all(|&x| x == 0) {
                factors.push(self.field.display(c));
            }
            for (name, &pow) in ["X", "Y", "Z"].iter().zip(e) {
                match pow {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{pow}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl TernaryForm {
    /// Builds a form from `(exponents, coefficient)` pairs; repeated monomials
    /// are summed and zero results dropped.
    pub fn new(
        field: &Field,
        degree: u32,
        terms: impl IntoIterator<Item = (Exps, Elem)>,
    ) -> Result<TernaryForm> {
        let mut map = BTreeMap::new();
        for (e, c) in terms {
            if e.iter().sum::<u32>() != degree {
                return Err(Error::BadMonomial { exps: e, degree });
            }
            if c.index() >= field.order() {
                return Err(Error::ElementOutOfRange {
                    index: c.index() as u64,
                    order: field.order(),
                });
            }
            let entry = map.entry(e).or_insert(Elem::ZERO);
            *entry = field.add(*entry, c);
        }
        map.retain(|_, c| !c.is_zero());
        Ok(TernaryForm {
            field: field.clone(),
            degree,
            terms: map,
        })
    }

    /// Convenience constructor with integer coefficients read in the prime field.
    pub fn from_int_terms(field: &Field, degree: u32, terms: &[(i64, Exps)]) -> Result<TernaryForm> {
        TernaryForm::new(field, degree, terms.iter().map(|&(c, e)| (e, field.from_int(c))))
    }

    pub fn zero(field: &Field, degree: u32) -> TernaryForm {
        TernaryForm {
            field: field.clone(),
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(field: &Field, c: Elem, e: Exps) -> TernaryForm {
        TernaryForm::new(field, e.iter().sum(), [(e, c)]).expect("exponents sum to the degree")
    }

    /// The linear form `a X + b Y + c Z`.
    pub fn linear(field: &Field, a: Elem, b: Elem, c: Elem) -> TernaryForm {
        TernaryForm::new(field, 1, [([1, 0, 0], a), ([0, 1, 0], b), ([0, 0, 1], c)])
            .expect("linear exponents")
    }

    pub fn x(field: &Field) -> TernaryForm {
        TernaryForm::monomial(field, Elem::ONE, [1, 0, 0])
    }

    pub fn y(field: &Field) -> TernaryForm {
        TernaryForm::monomial(field, Elem::ONE, [0, 1, 0])
    }

    pub fn z(field: &Field) -> TernaryForm {
        TernaryForm::monomial(field, Elem::ONE, [0, 0, 1])
    }

    pub fn constant(field: &Field, c: Elem) -> TernaryForm {
        TernaryForm::monomial(field, c, [0, 0, 0])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Exps, Elem)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coeff(&self, e: Exps) -> Elem {
        self.terms.get(&e).copied().unwrap_or(Elem::ZERO)
    }

    fn check(&self, other: &TernaryForm) -> Result<()> {
        if self.field != other.field {
            return Err(Error::MixedFields);
        }
        Ok(())
    }

    pub fn add(&self, other: &TernaryForm) -> Result<TernaryForm> {
        self.check(other)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.degree != other.degree {
            return Err(Error::InvalidParameter(format!(
                "adding forms of degrees {} and {}",
                self.degree, other.degree
            )));
        }
        TernaryForm::new(&self.field, self.degree, self.terms().chain(other.terms()))
    }

    pub fn neg(&self) -> TernaryForm {
        self.scale(self.field.neg(Elem::ONE))
    }

    pub fn sub(&self, other: &TernaryForm) -> Result<TernaryForm> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: Elem) -> TernaryForm {
        let f = &self.field;
        TernaryForm::new(f, self.degree, self.terms().map(|(e, x)| (e, f.mul(x, c))))
            .expect("same monomials")
    }

    pub fn mul(&self, other: &TernaryForm) -> Result<TernaryForm> {
        self.check(other)?;
        let f = &self.field;
        let mut acc: BTreeMap<Exps, Elem> = BTreeMap::new();
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                let e = [a[0] + b[0], a[1] + b[1], a[2] + b[2]];
                let entry = acc.entry(e).or_insert(Elem::ZERO);
                *entry = f.add(*entry, f.mul(ca, cb));
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(TernaryForm {
            field: f.clone(),
            degree: self.degree + other.degree,
            terms: acc,
        })
    }

    pub fn pow(&self, n: u32) -> TernaryForm {
        let mut acc = TernaryForm::constant(&self.field, Elem::ONE);
        for _ in 0..n {
            acc = acc.mul(self).expect("same field");
        }
        acc
    }

    /// Value at `(x, y, z)`.
    pub fn eval(&self, p: [Elem; 3]) -> Elem {
        let f = &self.field;
        self.terms.iter().fold(Elem::ZERO, |acc, (e, &c)| {
            let mut t = c;
            for (&v, &k) in p.iter().zip(e) {
                if k > 0 {
                    t = f.mul(t, f.pow(v, k as u64));
                }
            }
            f.add(acc, t)
        })
    }

    /// Formal partial derivative in variable `var` (0 = X, 1 = Y, 2 = Z).
    pub fn partial(&self, var: usize) -> TernaryForm {
        let f = &self.field;
        let degree = self.degree.saturating_sub(1);
        let terms = self.terms().filter(|(e, _)| e[var] > 0).map(|(mut e, c)| {
            let k = e[var];
            e[var] -= 1;
            (e, f.mul(f.from_int(k as i64), c))
        });
        TernaryForm::new(f, degree, terms).expect("exponents drop by one")
    }

    pub fn partials(&self) -> [TernaryForm; 3] {
        [self.partial(0), self.partial(1), self.partial(2)]
    }

    /// Scalar multiple whose least monomial (lexicographic on `(i,j,k)`) has
    /// coefficient 1.
    pub fn canonical(&self) -> TernaryForm {
        match self.terms.values().next() {
            None => self.clone(),
            Some(&c) => self.scale(self.field.inv(c).expect("stored coefficients are nonzero")),
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.terms.values().next().is_none_or(|&c| c == Elem::ONE)
    }

    /// Whether the two forms differ by a nonzero scalar.
    pub fn projectively_eq(&self, other: &TernaryForm) -> bool {
        self.field == other.field && self.degree == other.degree && self.canonical() == other.canonical()
    }

    /// Coefficients pushed through a field embedding.
    pub fn map_field(&self, emb: &Embedding) -> Result<TernaryForm> {
        if emb.source() != &self.field {
            return Err(Error::MixedFields);
        }
        TernaryForm::new(emb.target(), self.degree, self.terms().map(|(e, c)| (e, emb.apply(c))))
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder. Uses the lexicographic order `X > Y > Z`.
    pub fn exact_div(&self, divisor: &TernaryForm) -> Result<Option<TernaryForm>> {
        self.check(divisor)?;
        let (&lead_e, &lead_c) = divisor
            .terms
            .iter()
            .next_back()
            .ok_or(Error::DivisionByZero)?;
        if divisor.degree > self.degree {
            return Ok(if self.is_zero() { Some(TernaryForm::zero(&self.field, 0)) } else { None });
        }
        let f = &self.field;
        let lead_inv = f.inv(lead_c)?;
        let mut rem = self.terms.clone();
        let mut quot = BTreeMap::new();
        while let Some((&e, &c)) = rem.iter().next_back() {
            if (0..3).any(|v| e[v] < lead_e[v]) {
                return Ok(None);
            }
            let u = [e[0] - lead_e[0], e[1] - lead_e[1], e[2] - lead_e[2]];
            let s = f.mul(c, lead_inv);
            quot.insert(u, s);
            for (g, &gc) in &divisor.terms {
                let m = [u[0] + g[0], u[1] + g[1], u[2] + g[2]];
                let entry = rem.entry(m).or_insert(Elem::ZERO);
                *entry = f.sub(*entry, f.mul(s, gc));
                if entry.is_zero() {
                    rem.remove(&m);
                }
            }
        }
        Ok(Some(TernaryForm {
            field: f.clone(),
            degree: self.degree - divisor.degree,
            terms: quot,
        }))
    }
}

/// Monomials of degree `n` in lexicographically descending order
/// (`X^n` first, `Z^n` last).
pub fn monomials_desc(n: u32) -> Vec<Exps> {
    let mut out = Vec::with_capacity(((n + 1) * (n + 2) / 2) as usize);
    for i in (0..=n).rev() {
        for j in (0..=n - i).rev() {
            out.push([i, j, n - i - j]);
        }
    }
    out
}

/// Position of `e` in [`monomials_desc`] for its degree.
pub fn monomial_index_desc(e: Exps) -> usize {
    let n = e[0] + e[1] + e[2];
    let a = (n - e[0]) as usize;
    a * (a + 1) / 2 + (n - e[0] - e[1]) as usize
}

pub fn num_monomials(n: u32) -> usize {
    ((n + 1) * (n + 2) / 2) as usize
}
