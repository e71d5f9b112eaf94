//! Univariate polynomials over a finite field and the splitting oracle.
//!
//! A polynomial `f` with `deg f = n` *splits* over `F_q` when it has `n`
//! distinct roots there. Since `t^q - t` is the squarefree product of all
//! `t - a` with `a` in `F_q`, the number of distinct `F_q`-roots of `f` is
//! `deg gcd(f, t^q - t)`, and `f` splits exactly when `f | t^q - t`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

/// Dense polynomial; `coeffs[i]` multiplies `t^i`. Empty means zero.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    field: Field,
    coeffs: Vec<Elem>,
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl UniPoly {
    pub fn new(field: &Field, mut coeffs: Vec<Elem>) -> UniPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &Field) -> UniPoly {
        UniPoly::new(field, Vec::new())
    }

    pub fn constant(field: &Field, c: Elem) -> UniPoly {
        UniPoly::new(field, vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(field: &Field, c: Elem, k: usize) -> UniPoly {
        let mut v = vec![Elem::ZERO; k + 1];
        v[k] = c;
        UniPoly::new(field, v)
    }

    /// The variable `t`.
    pub fn t(field: &Field) -> UniPoly {
        UniPoly::monomial(field, Elem::ONE, 1)
    }

    /// `a t^d + t + 1`.
    pub fn trinomial(field: &Field, a: Elem, d: usize) -> UniPoly {
        let mut v = vec![Elem::ZERO; d.max(1) + 1];
        v[0] = Elem::ONE;
        v[1] = field.add(v[1], Elem::ONE);
        v[d] = field.add(v[d], a);
        UniPoly::new(field, v)
    }

    /// `prod (t - r)`.
    pub fn from_roots(field: &Field, roots: &[Elem]) -> UniPoly {
        roots.iter().fold(UniPoly::constant(field, Elem::ONE), |acc, &r| {
            acc.mul(&UniPoly::new(field, vec![field.neg(r), Elem::ONE]))
                .expect("same field")
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(Elem::ZERO)
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    fn same_field(&self, other: &UniPoly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn add(&self, other: &UniPoly) -> Result<UniPoly> {
        self.same_field(other)?;
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        Ok(UniPoly::new(f, v))
    }

    pub fn neg(&self) -> UniPoly {
        let f = &self.field;
        UniPoly::new(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn sub(&self, other: &UniPoly) -> Result<UniPoly> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: Elem) -> UniPoly {
        let f = &self.field;
        UniPoly::new(f, self.coeffs.iter().map(|&x| f.mul(x, c)).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> Result<UniPoly> {
        self.same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(UniPoly::zero(&self.field));
        }
        let f = &self.field;
        let mut v = vec![Elem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                v[i + j] = f.add(v[i + j], f.mul(a, b));
            }
        }
        Ok(UniPoly::new(f, v))
    }

    /// Euclidean division `self = quot * divisor + rem` with `deg rem < deg divisor`.
    pub fn divrem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        self.same_field(divisor)?;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let f = &self.field;
        let lead_inv = f.inv(divisor.leading())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((UniPoly::zero(f), self.clone()));
        }
        let mut quot = vec![Elem::ZERO; rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = f.mul(rem[k], lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[k - dd] = c;
            for (i, &b) in divisor.coeffs.iter().enumerate() {
                let idx = k - dd + i;
                rem[idx] = f.sub(rem[idx], f.mul(c, b));
            }
        }
        rem.truncate(dd);
        Ok((UniPoly::new(f, quot), UniPoly::new(f, rem)))
    }

    pub fn rem(&self, divisor: &UniPoly) -> Result<UniPoly> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Formal derivative; terms whose exponent is divisible by `p` vanish.
    pub fn derivative(&self) -> UniPoly {
        let f = &self.field;
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(f.from_int(i as i64), c))
            .collect();
        UniPoly::new(f, v)
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading()).expect("nonzero leading coefficient");
        self.scale(inv)
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &UniPoly) -> Result<UniPoly> {
        self.same_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    pub fn eval(&self, x: Elem) -> Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// `t^e mod self` by repeated squaring.
    pub fn frobenius_power_mod(&self, e: u64) -> Result<UniPoly> {
        let d = self.degree().ok_or(Error::ConstantPolynomial)?;
        if d == 0 {
            return Err(Error::ConstantPolynomial);
        }
        let mut ctx = PowModCtx::new(self);
        let r = ctx.t_pow(e);
        Ok(UniPoly::new(&self.field, r))
    }

    /// Number of distinct roots of `self` in the subfield `F_q` of its
    /// coefficient field, as `deg gcd(self, t^q - t)`.
    pub fn count_distinct_roots(&self, q: u64) -> Result<usize> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        if d == 0 {
            return Ok(0);
        }
        self.check_subfield(q)?;
        let tq = self.frobenius_power_mod(q)?;
        let h = tq.sub(&UniPoly::t(&self.field))?;
        Ok(self.gcd(&h)?.degree().unwrap_or(0))
    }

    /// Whether `self` has `deg self` distinct roots in `F_q`, i.e. whether
    /// `t^q = t` modulo `self`.
    pub fn splits_over(&self, q: u64) -> Result<bool> {
        let d = self.degree().ok_or(Error::ConstantPolynomial)?;
        if d == 0 {
            return Err(Error::ConstantPolynomial);
        }
        self.check_subfield(q)?;
        let mut ctx = PowModCtx::new(self);
        Ok(ctx.t_pow_is_t(q))
    }

    /// Distinct roots in `F_q`, by evaluation scan, in encoding order.
    pub fn roots_in_field(&self, q: u64) -> Result<Vec<Elem>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let sub = self.field.subfield_elements(q)?;
        Ok(sub.into_iter().filter(|&x| self.eval(x).is_zero()).collect())
    }

    fn check_subfield(&self, q: u64) -> Result<()> {
        let f = &self.field;
        let order = f.order() as u64;
        // q must be p^k with k | m
        let mut pk = f.characteristic() as u64;
        let mut k = 1;
        while pk < q {
            pk *= f.characteristic() as u64;
            k += 1;
        }
        if pk != q || !f.degree().is_multiple_of(k) {
            return Err(Error::NoSubfield {
                order: order as u32,
                q,
            });
        }
        Ok(())
    }

    /// Text form `c_k*t^k + .. + c_0`, coefficients in element syntax.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let f = &self.field;
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, &c)| {
                let cs = f.display(c);
                match i {
                    0 => cs,
                    1 => format!("{cs}*t"),
                    _ => format!("{cs}*t^{i}"),
                }
            })
            .collect();
        terms.join(" + ")
    }

    /// Parses the text form. Terms are joined by `+` or `-`; each term is
    /// `c`, `c*t`, `c*t^k`, `t` or `t^k` where `c` uses element syntax.
    pub fn parse(field: &Field, s: &str) -> Result<UniPoly> {
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut depth = 0i32;
        let mut cur = String::new();
        let mut negative = false;
        for ch in s.chars() {
            match ch {
                '[' => {
                    depth += 1;
                    cur.push(ch);
                }
                ']' => {
                    depth -= 1;
                    cur.push(ch);
                }
                '+' | '-' if depth == 0 && !cur.trim().is_empty() && !cur.trim_end().ends_with('^') => {
                    terms.push((negative, std::mem::take(&mut cur)));
                    negative = ch == '-';
                }
                '-' if depth == 0 && cur.trim().is_empty() => negative = !negative,
                _ => cur.push(ch),
            }
        }
        if !cur.trim().is_empty() {
            terms.push((negative, cur));
        }
        if terms.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut acc = UniPoly::zero(field);
        for (neg, term) in terms {
            let term = term.trim();
            let (coeff_txt, power) = match term.find('t') {
                None => (term, 0usize),
                Some(pos) => {
                    let head = term[..pos].trim().trim_end_matches('*').trim();
                    let tail = term[pos + 1..].trim();
                    let k = if tail.is_empty() {
                        1
                    } else {
                        tail.strip_prefix('^')
                            .and_then(|e| e.trim().parse().ok())
                            .ok_or_else(|| Error::Parse(format!("bad exponent in {term:?}")))?
                    };
                    (if head.is_empty() { "1" } else { head }, k)
                }
            };
            let mut c = field.parse_elem(coeff_txt)?;
            if neg {
                c = field.neg(c);
            }
            acc = acc.add(&UniPoly::monomial(field, c, power))?;
        }
        Ok(acc)
    }
}

/// Buffers for computing powers of `t` modulo a fixed monic polynomial.
struct PowModCtx<'a> {
    field: &'a Field,
    /// Monic modulus, ascending.
    modulus: Vec<Elem>,
    n: usize,
    prod: Vec<Elem>,
}

impl<'a> PowModCtx<'a> {
    fn new(f: &'a UniPoly) -> PowModCtx<'a> {
        let monic = f.monic();
        let n = monic.coeffs.len() - 1;
        PowModCtx {
            field: &f.field,
            modulus: monic.coeffs,
            n,
            prod: vec![Elem::ZERO; 2 * n],
        }
    }

    /// `a * b mod modulus` for `a, b` of length `n`.
    fn mulmod(&mut self, a: &[Elem], b: &[Elem], out: &mut [Elem]) {
        let f = self.field;
        let n = self.n;
        self.prod.iter_mut().for_each(|c| *c = Elem::ZERO);
        for (i, &x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                self.prod[i + j] = f.add(self.prod[i + j], f.mul(x, y));
            }
        }
        for k in (n..2 * n - 1).rev() {
            let c = self.prod[k];
            if c.is_zero() {
                continue;
            }
            for i in 0..n {
                let idx = k - n + i;
                self.prod[idx] = f.sub(self.prod[idx], f.mul(c, self.modulus[i]));
            }
        }
        out.copy_from_slice(&self.prod[..n]);
    }

    /// `t mod modulus` as a length-`n` vector.
    fn t_reduced(&self) -> Vec<Elem> {
        let mut v = vec![Elem::ZERO; self.n];
        if self.n >= 2 {
            v[1] = Elem::ONE;
        } else {
            // modulus t + c0: t = -c0
            v[0] = self.field.neg(self.modulus[0]);
        }
        v
    }

    fn t_pow(&mut self, mut e: u64) -> Vec<Elem> {
        let mut acc = vec![Elem::ZERO; self.n];
        acc[0] = Elem::ONE;
        let mut base = self.t_reduced();
        let mut tmp = vec![Elem::ZERO; self.n];
        while e > 0 {
            if e & 1 == 1 {
                self.mulmod(&acc, &base, &mut tmp);
                std::mem::swap(&mut acc, &mut tmp);
            }
            e >>= 1;
            if e > 0 {
                self.mulmod(&base, &base, &mut tmp);
                std::mem::swap(&mut base, &mut tmp);
            }
        }
        acc
    }

    fn t_pow_is_t(&mut self, e: u64) -> bool {
        let r = self.t_pow(e);
        r == self.t_reduced()
    }
}
