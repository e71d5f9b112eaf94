//! Finite fields `F_{p^m}` with a canonical, reproducible construction.
//!
//! An element is stored as its integer encoding `sum c_i p^i`, where
//! `c_0, .., c_{m-1}` are its coordinates in the power basis of a root of the
//! field modulus. The modulus is the monic irreducible polynomial of degree
//! `m` with the smallest encoding of its lower coefficients, and the
//! generator is the primitive element with the smallest encoding. Building
//! the same `(p, m)` twice therefore yields identical fields, and `Field`
//! values compare equal exactly when their `(p, m)` agree.
//!
//! Arithmetic goes through the owning [`Field`]; elements are plain `Copy`
//! indices. Containers that hold elements (polynomials, forms) carry their
//! field and reject mixed-field operands.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::arith::{factorize, is_prime};
use crate::error::{Error, Result};

pub const MAX_EXTENSION_DEGREE: u32 = 16;
pub const MAX_ORDER: u64 = 1 << 24;
/// Fields up to this order get exp/log/Zech tables.
const TABLE_LIMIT: u32 = 1 << 20;
const NO_LOG: u32 = u32::MAX;

/// A field element, identified by its integer encoding. Serializes as that
/// integer.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    /// Integer encoding `sum c_i p^i`.
    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Prime,
    Binary,
    General,
}

struct Tables {
    /// `exp[i] = g^i`, stored twice over so sums of two logs need no reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
    /// `zech[k] = log(1 + g^k)`, or `NO_LOG` when `1 + g^k = 0`.
    zech: Vec<u32>,
}

struct Inner {
    p: u32,
    m: u32,
    order: u32,
    kind: Kind,
    modulus: Vec<u32>,
    generator: Elem,
    /// Distinct primes dividing `order - 1`.
    group_primes: Vec<u64>,
    pow_p: Vec<u32>,
    tables: Option<Tables>,
}

/// A finite field `F_{p^m}`. Cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.p == other.0.p && self.0.m == other.0.m)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{}", self.0.p, self.0.m)
    }
}

fn cache() -> &'static Mutex<HashMap<(u32, u32), Field>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Field>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Builds (or fetches) the canonical field `F_{p^m}`.
pub fn make_field(p: u64, m: u32) -> Result<Field> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m == 0 || m > MAX_EXTENSION_DEGREE {
        return Err(Error::DegreeOutOfRange(m));
    }
    let order = (p as u128).pow(m);
    if order > MAX_ORDER as u128 {
        return Err(Error::OrderTooLarge { p, m });
    }
    let key = (p as u32, m);
    if let Some(f) = cache().lock().expect("field cache poisoned").get(&key) {
        return Ok(f.clone());
    }
    let field = Field(Arc::new(Inner::build(p as u32, m)));
    cache()
        .lock()
        .expect("field cache poisoned")
        .entry(key)
        .or_insert(field.clone());
    Ok(field)
}

/// Builds `F_{q^2}` for a prime power `q`.
pub fn quadratic_field(q: u64) -> Result<Field> {
    let (p, e) = crate::arith::prime_power(q)?;
    make_field(p, 2 * e)
}

/// Builds `F_q` for a prime power `q`.
pub fn field_of_order(q: u64) -> Result<Field> {
    let (p, e) = crate::arith::prime_power(q)?;
    make_field(p, e)
}

// ---- polynomials over F_p as coefficient vectors, used during construction ----

fn fp_trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn fp_inv(a: u32, p: u32) -> u32 {
    let mut r = 1u64;
    let mut b = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    r as u32
}

/// Remainder of `a` modulo a monic-or-not nonzero `b` over `F_p`.
fn fp_rem(mut a: Vec<u32>, b: &[u32], p: u32) -> Vec<u32> {
    fp_trim(&mut a);
    let db = b.len() - 1;
    let lead_inv = fp_inv(b[db], p) as u64;
    while a.len() > db {
        let da = a.len() - 1;
        let c = a[da] as u64 * lead_inv % p as u64;
        for (i, &bi) in b.iter().enumerate() {
            let idx = da - db + i;
            a[idx] = ((a[idx] as u64 + (p as u64 - c) * bi as u64) % p as u64) as u32;
        }
        fp_trim(&mut a);
    }
    a
}

fn fp_mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    fp_rem(prod.into_iter().map(|c| c as u32).collect(), m, p)
}

fn fp_gcd(mut a: Vec<u32>, mut b: Vec<u32>, p: u32) -> Vec<u32> {
    fp_trim(&mut a);
    fp_trim(&mut b);
    while !b.is_empty() {
        let r = fp_rem(a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Ben-Or irreducibility test: `gcd(x^{p^i} - x, f) = 1` for `i <= m/2`.
fn fp_is_irreducible(f: &[u32], p: u32) -> bool {
    let m = f.len() - 1;
    if m <= 1 {
        return m == 1;
    }
    let x = vec![0, 1];
    let mut xp = x.clone();
    for _ in 0..m / 2 {
        // xp <- xp^p mod f
        let mut acc = vec![1u32];
        let mut base = xp.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = fp_mulmod(&acc, &base, f, p);
            }
            base = fp_mulmod(&base, &base, f, p);
            e >>= 1;
        }
        xp = acc;
        let mut diff = xp.clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        fp_trim(&mut diff);
        if diff.is_empty() {
            return false;
        }
        let g = fp_gcd(f.to_vec(), diff, p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

/// Decodes the lower coefficients of a monic degree-`m` polynomial from `code`.
fn monic_from_code(code: u32, p: u32, m: u32) -> Vec<u32> {
    let mut v = Vec::with_capacity(m as usize + 1);
    let mut c = code;
    for _ in 0..m {
        v.push(c % p);
        c /= p;
    }
    v.push(1);
    v
}

impl Inner {
    fn build(p: u32, m: u32) -> Inner {
        let order = p.pow(m);
        let kind = if m == 1 {
            Kind::Prime
        } else if p == 2 {
            Kind::Binary
        } else {
            Kind::General
        };
        let modulus = if m == 1 {
            vec![0, 1]
        } else {
            (0..order)
                .map(|code| monic_from_code(code, p, m))
                .find(|f| fp_is_irreducible(f, p))
                .expect("an irreducible polynomial of every degree exists")
        };
        let pow_p = (0..m).map(|i| p.pow(i)).collect();
        let group_primes = factorize(order as u64 - 1).into_iter().map(|(l, _)| l).collect();
        let mut inner = Inner {
            p,
            m,
            order,
            kind,
            modulus,
            generator: Elem::ONE,
            group_primes,
            pow_p,
            tables: None,
        };
        inner.generator = (1..order)
            .map(Elem)
            .find(|&x| inner.is_primitive_slow(x))
            .expect("the multiplicative group is cyclic");
        if order <= TABLE_LIMIT {
            inner.tables = Some(inner.build_tables());
        }
        inner
    }

    fn digits(&self, x: Elem) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.m as usize);
        let mut c = x.0;
        for _ in 0..self.m {
            v.push(c % self.p);
            c /= self.p;
        }
        v
    }

    fn encode(&self, digits: &[u32]) -> Elem {
        Elem(digits.iter().zip(&self.pow_p).map(|(&c, &pp)| c * pp).sum())
    }

    fn add_digitwise(&self, a: Elem, b: Elem) -> Elem {
        let p = self.p;
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0;
        for &pp in &self.pow_p {
            out += ((x % p + y % p) % p) * pp;
            x /= p;
            y /= p;
        }
        Elem(out)
    }

    fn neg_digitwise(&self, a: Elem) -> Elem {
        let p = self.p;
        let mut x = a.0;
        let mut out = 0;
        for &pp in &self.pow_p {
            out += ((p - x % p) % p) * pp;
            x /= p;
        }
        Elem(out)
    }

    fn mul_slow(&self, a: Elem, b: Elem) -> Elem {
        match self.kind {
            Kind::Prime => Elem((a.0 as u64 * b.0 as u64 % self.p as u64) as u32),
            _ => {
                if a.0 == 0 || b.0 == 0 {
                    return Elem::ZERO;
                }
                let r = fp_mulmod(&self.digits(a), &self.digits(b), &self.modulus, self.p);
                self.encode(&r)
            }
        }
    }

    fn pow_slow(&self, a: Elem, mut e: u64) -> Elem {
        let mut acc = Elem::ONE;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }

    fn is_primitive_slow(&self, x: Elem) -> bool {
        if x.is_zero() {
            return false;
        }
        let n1 = self.order as u64 - 1;
        self.group_primes
            .iter()
            .all(|&l| self.pow_slow(x, n1 / l) != Elem::ONE)
    }

    fn build_tables(&self) -> Tables {
        let n1 = (self.order - 1) as usize;
        let mut exp = vec![0u32; 2 * n1];
        let mut log = vec![NO_LOG; self.order as usize];
        let mut cur = Elem::ONE;
        for i in 0..n1 {
            exp[i] = cur.0;
            exp[i + n1] = cur.0;
            log[cur.0 as usize] = i as u32;
            cur = self.mul_slow(cur, self.generator);
        }
        let one_plus = |v: u32| -> u32 {
            match self.kind {
                Kind::Prime => (v + 1) % self.p,
                Kind::Binary => v ^ 1,
                Kind::General => self.add_digitwise(Elem(v), Elem::ONE).0,
            }
        };
        let zech = (0..n1)
            .map(|k| {
                let s = one_plus(exp[k]);
                if s == 0 {
                    NO_LOG
                } else {
                    log[s as usize]
                }
            })
            .collect();
        Tables { exp, log, zech }
    }
}

impl Field {
    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.m
    }

    pub fn order(&self) -> u32 {
        self.0.order
    }

    /// Monic modulus, coefficients in ascending degree.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn generator(&self) -> Elem {
        self.0.generator
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    /// The element with the given integer encoding.
    pub fn elem(&self, index: u64) -> Result<Elem> {
        if index >= self.0.order as u64 {
            return Err(Error::ElementOutOfRange {
                index,
                order: self.0.order,
            });
        }
        Ok(Elem(index as u32))
    }

    /// Image of an integer under `Z -> F_p -> F_{p^m}`.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.0.p as i64) as u32)
    }

    /// All elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.0.order).map(Elem)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (1..self.0.order).map(Elem)
    }

    pub fn coeffs(&self, x: Elem) -> Vec<u32> {
        self.0.digits(x)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Elem> {
        if coeffs.len() > self.0.m as usize {
            return Err(Error::Parse(format!(
                "{} coordinates for a degree-{} field",
                coeffs.len(),
                self.0.m
            )));
        }
        if let Some(&c) = coeffs.iter().find(|&&c| c >= self.0.p) {
            return Err(Error::Parse(format!("residue {c} not reduced mod {}", self.0.p)));
        }
        Ok(self.0.encode(coeffs))
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let inner = &*self.0;
        match inner.kind {
            Kind::Prime => {
                let s = a.0 + b.0;
                Elem(if s >= inner.p { s - inner.p } else { s })
            }
            Kind::Binary => Elem(a.0 ^ b.0),
            Kind::General => {
                if a.0 == 0 {
                    return b;
                }
                if b.0 == 0 {
                    return a;
                }
                match &inner.tables {
                    Some(t) => {
                        let n1 = inner.order - 1;
                        let la = t.log[a.0 as usize];
                        let lb = t.log[b.0 as usize];
                        let k = if lb >= la { lb - la } else { lb + n1 - la };
                        let z = t.zech[k as usize];
                        if z == NO_LOG {
                            Elem::ZERO
                        } else {
                            Elem(t.exp[(la + z) as usize])
                        }
                    }
                    None => inner.add_digitwise(a, b),
                }
            }
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        let inner = &*self.0;
        match inner.kind {
            Kind::Prime => Elem(if a.0 == 0 { 0 } else { inner.p - a.0 }),
            Kind::Binary => a,
            Kind::General => inner.neg_digitwise(a),
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        let inner = &*self.0;
        if inner.kind == Kind::Prime {
            return Elem((a.0 as u64 * b.0 as u64 % inner.p as u64) as u32);
        }
        match &inner.tables {
            Some(t) => Elem(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize]),
            None => inner.mul_slow(a, b),
        }
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, self.0.order as u64 - 2))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e` by square-and-multiply, with `0^0 = 1`.
    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        let inner = &*self.0;
        match &inner.tables {
            Some(t) => {
                let n1 = (inner.order - 1) as u64;
                let l = t.log[a.0 as usize] as u64 * (e % n1) % n1;
                Elem(t.exp[l as usize])
            }
            None => inner.pow_slow(a, e),
        }
    }

    /// Discrete logarithm to the canonical generator.
    pub fn log(&self, a: Elem) -> Option<u32> {
        if a.is_zero() {
            return None;
        }
        match &self.0.tables {
            Some(t) => Some(t.log[a.0 as usize]),
            None => {
                let g = self.0.generator;
                let mut cur = Elem::ONE;
                for k in 0..self.0.order - 1 {
                    if cur == a {
                        return Some(k);
                    }
                    cur = self.mul(cur, g);
                }
                None
            }
        }
    }

    /// `generator^k`.
    pub fn gen_pow(&self, k: u64) -> Elem {
        self.pow(self.0.generator, k)
    }

    /// `x^{p^k}`.
    pub fn frobenius(&self, x: Elem, k: u32) -> Elem {
        let k = k % self.0.m;
        self.pow(x, (self.0.p as u64).pow(k))
    }

    pub fn multiplicative_order(&self, x: Elem) -> Option<u64> {
        if x.is_zero() {
            return None;
        }
        let mut ord = self.0.order as u64 - 1;
        for &l in &self.0.group_primes {
            while ord.is_multiple_of(l) && self.pow(x, ord / l) == Elem::ONE {
                ord /= l;
            }
        }
        Some(ord)
    }

    pub fn is_primitive(&self, x: Elem) -> bool {
        if x.is_zero() {
            return false;
        }
        let n1 = self.0.order as u64 - 1;
        self.0.group_primes.iter().all(|&l| self.pow(x, n1 / l) != Elem::ONE)
    }

    /// All generators of the multiplicative group, in encoding order.
    pub fn primitive_elements(&self) -> impl Iterator<Item = Elem> + '_ {
        self.nonzero_elements().filter(move |&x| self.is_primitive(x))
    }

    /// `q` such that this field is `F_{q^2}`.
    pub fn quadratic_base(&self) -> Result<u32> {
        if !self.0.m.is_multiple_of(2) {
            return Err(Error::NotQuadratic {
                p: self.0.p,
                m: self.0.m,
            });
        }
        Ok(self.0.p.pow(self.0.m / 2))
    }

    /// Norm to the index-2 subfield, `x^{q+1}`.
    pub fn norm(&self, x: Elem) -> Result<Elem> {
        let q = self.quadratic_base()? as u64;
        Ok(self.pow(x, q + 1))
    }

    /// Trace to the index-2 subfield, `x^q + x`.
    pub fn trace(&self, x: Elem) -> Result<Elem> {
        let q = self.quadratic_base()? as u64;
        Ok(self.add(self.pow(x, q), x))
    }

    /// Whether `x` lies in the subfield with `q` elements.
    pub fn in_subfield(&self, x: Elem, q: u32) -> bool {
        self.pow(x, q as u64) == x
    }

    fn check_subfield(&self, q: u64) -> Result<u32> {
        let mut k = 0;
        let mut pk = 1u64;
        while pk < q {
            pk *= self.0.p as u64;
            k += 1;
        }
        if pk != q || k == 0 || !self.0.m.is_multiple_of(k) {
            return Err(Error::NoSubfield {
                order: self.0.order,
                q,
            });
        }
        Ok(q as u32)
    }

    /// The `q` elements fixed by `x -> x^q`, in encoding order.
    pub fn subfield_elements(&self, q: u64) -> Result<Vec<Elem>> {
        let q = self.check_subfield(q)?;
        let n1 = self.0.order as u64 - 1;
        let step = n1 / (q as u64 - 1);
        let zeta = self.gen_pow(step);
        let mut out = Vec::with_capacity(q as usize);
        out.push(Elem::ZERO);
        let mut cur = Elem::ONE;
        for _ in 0..q - 1 {
            out.push(cur);
            cur = self.mul(cur, zeta);
        }
        out.sort_unstable();
        Ok(out)
    }

    /// The `q + 1` solutions of `y^{q+1} = s` for nonzero `s` in `F_q`, sorted.
    pub fn norm_preimages(&self, s: Elem) -> Result<Vec<Elem>> {
        let q = self.quadratic_base()?;
        if s.is_zero() {
            return Err(Error::ZeroNorm);
        }
        if !self.in_subfield(s, q) {
            return Err(Error::NotInSubfield { q });
        }
        let k = self.log(s).expect("nonzero element has a log") as u64;
        let q = q as u64;
        // F_q^* = <g^{q+1}>, so k is a multiple of q+1.
        let base = self.gen_pow(k / (q + 1));
        let zeta = self.gen_pow(q - 1);
        let mut out = Vec::with_capacity(q as usize + 1);
        let mut cur = base;
        for _ in 0..=q {
            out.push(cur);
            cur = self.mul(cur, zeta);
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Parses `"0"`, `"w^k"`, `"w"`, a coefficient list `"[c0, c1, ..]"`, or a
    /// bare integer (read as a prime-field residue).
    pub fn parse_elem(&self, s: &str) -> Result<Elem> {
        let s = s.trim();
        if s == "0" {
            return Ok(Elem::ZERO);
        }
        if s == "w" {
            return Ok(self.generator());
        }
        if let Some(k) = s.strip_prefix("w^") {
            let k: u64 = k
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?;
            return Ok(self.gen_pow(k));
        }
        if let Some(body) = s.strip_prefix('[').and_then(|b| b.strip_suffix(']')) {
            let coeffs = body
                .split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad residue {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            return self.from_coeffs(&coeffs);
        }
        let n: i64 = s
            .parse()
            .map_err(|_| Error::Parse(format!("unrecognised field element {s:?}")))?;
        Ok(self.from_int(n))
    }

    pub fn to_repr(&self, x: Elem) -> ElemRepr {
        ElemRepr::Coeffs(self.coeffs(x))
    }

    pub fn from_repr(&self, r: &ElemRepr) -> Result<Elem> {
        match r {
            ElemRepr::Coeffs(c) => self.from_coeffs(c),
            ElemRepr::Text(s) => self.parse_elem(s),
        }
    }

    /// Short display: the coefficient list, e.g. `[1,2]`.
    pub fn display(&self, x: Elem) -> String {
        let c = self.coeffs(x);
        if c.len() == 1 {
            return c[0].to_string();
        }
        let parts: Vec<String> = c.iter().map(u32::to_string).collect();
        format!("[{}]", parts.join(","))
    }
}

/// Serialized form of an element: coordinates `[c_0, .., c_{m-1}]`, or text
/// `"w^k"` / `"0"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElemRepr {
    Coeffs(Vec<u32>),
    Text(String),
}

/// The field homomorphism `F_{p^k} -> F_{p^m}` for `k | m` sending the modulus
/// root of the small field to the smallest-encoded root in the large one.
#[derive(Clone)]
pub struct Embedding {
    small: Field,
    big: Field,
    image: Vec<Elem>,
}

impl Embedding {
    pub fn new(small: &Field, big: &Field) -> Result<Embedding> {
        if small.characteristic() != big.characteristic() || !big.degree().is_multiple_of(small.degree()) {
            return Err(Error::NoSubfield {
                order: big.order(),
                q: small.order() as u64,
            });
        }
        let p = big.characteristic() as i64;
        let modulus = small.modulus();
        let eval = |r: Elem| {
            modulus.iter().rev().fold(Elem::ZERO, |acc, &c| {
                big.add(big.mul(acc, r), big.from_int(c as i64))
            })
        };
        let root = big
            .elements()
            .find(|&r| eval(r).is_zero())
            .expect("the small modulus splits in the big field");
        let powers: Vec<Elem> = (0..small.degree()).map(|i| big.pow(root, i as u64)).collect();
        let image = small
            .elements()
            .map(|x| {
                small
                    .coeffs(x)
                    .iter()
                    .zip(&powers)
                    .fold(Elem::ZERO, |acc, (&c, &rp)| {
                        big.add(acc, big.mul(big.from_int(c as i64 % p), rp))
                    })
            })
            .collect();
        Ok(Embedding {
            small: small.clone(),
            big: big.clone(),
            image,
        })
    }

    pub fn apply(&self, x: Elem) -> Elem {
        self.image[x.0 as usize]
    }

    pub fn source(&self) -> &Field {
        &self.small
    }

    pub fn target(&self) -> &Field {
        &self.big
    }
}
