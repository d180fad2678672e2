//! Arithmetic in finite fields GF(p^k) at desk scale (q <= 2^16).
//!
//! Elements are stored in power-basis coordinates (c0, c1, ..., c_{k-1}) packed
//! into a single integer c0 + c1*p + ... + c_{k-1}*p^{k-1}. Multiplication and
//! inversion go through discrete-log tables built once per field; addition is
//! digitwise, so zero needs no special casing anywhere.
//!
//! Fields constructed twice with the same (p, k, modulus) share an identity, so
//! their elements interoperate; elements of genuinely different fields are
//! rejected (see [`Field::add`] and friends).

use crate::error::{Error, Result};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

/// Largest supported field size.
pub const MAX_FIELD_SIZE: u64 = 1 << 16;

/// An element of a specific [`Field`], packed in power-basis coordinates.
///
/// Elements remember which field they came from; mixing elements of different
/// fields is a programming error and panics with a clear message.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct FieldElement {
    field_id: u32,
    packed: u32,
}

impl FieldElement {
    /// The packed power-basis encoding: c0 + c1*p + ... + c_{k-1}*p^{k-1}.
    pub fn packed(self) -> u64 {
        self.packed as u64
    }

    pub fn is_zero(self) -> bool {
        self.packed == 0
    }
}

struct FieldRepr {
    id: u32,
    p: u64,
    k: u32,
    q: u64,
    /// Monic modulus c0 + c1 x + ... + c_k x^k (c_k = 1). For prime fields this
    /// is the trivial `x`, kept only so the accessor has something to return.
    modulus: Vec<u64>,
    /// Packed value of the designated primitive element.
    primitive: u32,
    /// exp[e] = primitive^e for e in 0..q-1.
    exp: Vec<u32>,
    /// log[v] = e with primitive^e = v; log[0] is a sentinel (never read).
    log: Vec<u32>,
    /// frob[v] = v^p.
    frob: Vec<u32>,
}

/// A finite field GF(p^k). Cheap to clone; all arithmetic lives here.
#[derive(Clone)]
pub struct Field(Arc<FieldRepr>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.id == other.0.id
    }
}
impl Eq for Field {}

/// `GF(p)` for prime fields; `GF(p^k;modulus=c0,...,ck)` for extensions, which
/// pins the representation so the string parses back to the identical field.
impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.k == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            let coeffs: Vec<String> = self.0.modulus.iter().map(u64::to_string).collect();
            write!(f, "GF({}^{};modulus={})", self.0.p, self.0.k, coeffs.join(","))
        }
    }
}

/// Registry mapping (p, k, modulus) to a shared field id, so structurally equal
/// fields built independently still interoperate.
type FieldKey = (u64, u32, Vec<u64>);

fn registry() -> &'static Mutex<HashMap<FieldKey, u32>> {
    static REGISTRY: OnceLock<Mutex<HashMap<FieldKey, u32>>> = OnceLock::new();
    REGISTRY.get_or_init(|| Mutex::new(HashMap::new()))
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Factor q as p^k with p prime, if possible.
fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut m = q;
            let mut k = 0u32;
            while m.is_multiple_of(p) {
                m /= p;
                k += 1;
            }
            return if m == 1 { Some((p, k)) } else { None };
        }
        p += 1;
    }
    Some((q, 1)) // q itself is prime
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Dense polynomial helpers over GF(p) used only during field construction.
mod polys {
    /// Trim trailing zeros.
    pub fn norm(mut v: Vec<u64>) -> Vec<u64> {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    pub fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut r = norm(a.to_vec());
        let b = norm(b.to_vec());
        let db = b.len() - 1;
        let lead_inv = mod_inv(b[db], p);
        while r.len() > db {
            let dr = r.len() - 1;
            let f = (r[dr] * lead_inv) % p;
            for (i, &bi) in b.iter().enumerate() {
                let idx = dr - db + i;
                r[idx] = (r[idx] + p - f * bi % p) % p;
            }
            r = norm(r);
            if r.is_empty() {
                break;
            }
        }
        r
    }

    pub fn mod_inv(a: u64, p: u64) -> u64 {
        // p is prime and a != 0: Fermat.
        pow_mod(a % p, p - 2, p)
    }

    pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
        if m == 2 {
            return if e == 0 { 1 % m } else { b % m };
        }
        let mut acc = 1u64;
        b %= m;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % m;
            }
            b = b * b % m;
            e >>= 1;
        }
        acc
    }

    /// Is the monic polynomial irreducible over GF(p)? Exhaustive trial
    /// division by all monic polynomials of degree 1..=deg/2.
    pub fn is_irreducible(f: &[u64], p: u64) -> bool {
        let deg = f.len() - 1;
        if deg == 0 {
            return false;
        }
        for d in 1..=deg / 2 {
            // enumerate monic divisors of degree d: p^d candidates
            let count = p.pow(d as u32);
            for mut code in 0..count {
                let mut cand = Vec::with_capacity(d + 1);
                for _ in 0..d {
                    cand.push(code % p);
                    code /= p;
                }
                cand.push(1);
                if rem(f, &cand, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

impl Field {
    /// Build GF(q) with the default modulus (q = p^k, q <= 2^16).
    ///
    /// The default modulus for GF(9) is x^2 + 2x + 2 (with primitive w = class
    /// of x); for other extensions it is the lexicographically smallest monic
    /// irreducible polynomial, highest coefficient compared first, whose root
    /// x is primitive.
    pub fn new(q: u64) -> Result<Field> {
        let (p, k) = prime_power(q).ok_or(Error::NotPrimePower { q })?;
        if q > MAX_FIELD_SIZE {
            return Err(Error::FieldTooLarge { q, bound: MAX_FIELD_SIZE });
        }
        if k == 1 {
            Self::build(p, 1, vec![0, 1])
        } else {
            let modulus = default_modulus(p, k, q)?;
            Self::build(p, k, modulus)
        }
    }

    /// Build GF(p^k) with an explicit monic modulus c0 + c1 x + ... + c_k x^k
    /// (`modulus` lists c0..=c_k; c_k must be 1 and every c_i < p).
    pub fn with_modulus(p: u64, k: u32, modulus: &[u64]) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime { p });
        }
        let show = || format!("{modulus:?}");
        if k == 0 || modulus.len() != k as usize + 1 {
            return Err(Error::BadModulus { modulus: show(), p, k });
        }
        if *modulus.last().unwrap() != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::BadModulus { modulus: show(), p, k });
        }
        if k > 1 && !polys::is_irreducible(modulus, p) {
            return Err(Error::ReducibleModulus { modulus: show(), p });
        }
        // Prime fields never consult the modulus; canonicalize it so that two
        // GF(p) handles always interoperate.
        let modulus = if k == 1 { vec![0, 1] } else { modulus.to_vec() };
        Self::build(p, k, modulus)
    }

    fn build(p: u64, k: u32, modulus: Vec<u64>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime { p });
        }
        let q = p.checked_pow(k).filter(|&q| q <= MAX_FIELD_SIZE).ok_or(
            Error::FieldTooLarge { q: p.saturating_pow(k), bound: MAX_FIELD_SIZE },
        )?;
        let id = {
            let mut reg = registry().lock().unwrap();
            let next = reg.len() as u32;
            *reg.entry((p, k, modulus.clone())).or_insert(next)
        };

        // Raw polynomial multiplication mod the modulus, on packed values.
        let unpack = |v: u64| -> Vec<u64> {
            let mut v = v;
            (0..k).map(|_| { let d = v % p; v /= p; d }).collect()
        };
        let pack = |c: &[u64]| -> u64 { c.iter().rev().fold(0, |acc, &d| acc * p + d) };
        let mulraw = |a: u64, b: u64| -> u64 {
            if k == 1 {
                return a * b % p;
            }
            let (ca, cb) = (unpack(a), unpack(b));
            let mut prod = vec![0u64; 2 * k as usize - 1];
            for (i, &x) in ca.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in cb.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            // reduce: x^k = -(c0 + ... + c_{k-1} x^{k-1})
            for d in (k as usize..prod.len()).rev() {
                let f = prod[d];
                if f == 0 {
                    continue;
                }
                prod[d] = 0;
                for i in 0..k as usize {
                    let sub = f * modulus[i] % p;
                    prod[d - k as usize + i] = (prod[d - k as usize + i] + p - sub) % p;
                }
            }
            pack(&prod[..k as usize])
        };
        let powraw = |mut b: u64, mut e: u64| -> u64 {
            let mut acc = 1u64;
            while e > 0 {
                if e & 1 == 1 {
                    acc = mulraw(acc, b);
                }
                b = mulraw(b, b);
                e >>= 1;
            }
            acc
        };

        // Designated primitive element: prefer x (packed p) in extensions,
        // else scan packed values upward for the first of order q-1.
        let rs = prime_factors(q - 1);
        let is_primitive = |g: u64| -> bool {
            g != 0 && rs.iter().all(|&r| powraw(g, (q - 1) / r) != 1)
        };
        let primitive = if q == 2 {
            1
        } else if k > 1 && is_primitive(p) {
            p
        } else {
            (2..q).find(|&g| is_primitive(g)).expect("GF(q)* is cyclic")
        };

        let mut exp = vec![0u32; (q - 1) as usize];
        let mut log = vec![0u32; q as usize];
        let mut acc = 1u64;
        for (e, slot) in exp.iter_mut().enumerate() {
            *slot = acc as u32;
            log[acc as usize] = e as u32;
            acc = mulraw(acc, primitive);
        }
        debug_assert_eq!(acc, 1, "primitive element must have order q-1");
        let frob = (0..q).map(|v| powraw(v, p) as u32).collect();

        Ok(Field(Arc::new(FieldRepr {
            id,
            p,
            k,
            q,
            modulus,
            primitive: primitive as u32,
            exp,
            log,
            frob,
        })))
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }
    pub fn k(&self) -> u32 {
        self.0.k
    }
    pub fn q(&self) -> u64 {
        self.0.q
    }
    pub fn is_extension(&self) -> bool {
        self.0.k > 1
    }
    /// Modulus coefficients c0..=c_k (monic). Trivially `x` for prime fields.
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn zero(&self) -> FieldElement {
        self.el(0)
    }
    pub fn one(&self) -> FieldElement {
        self.el(1)
    }
    /// The designated generator of the multiplicative group.
    pub fn primitive(&self) -> FieldElement {
        self.el(self.0.primitive)
    }

    /// primitive^e (e may be any integer; exponents reduce mod q-1).
    pub fn primitive_power(&self, e: i64) -> FieldElement {
        let m = (self.0.q - 1) as i64;
        let e = e.rem_euclid(m.max(1)) as usize;
        self.el(self.0.exp[e % self.0.exp.len()])
    }

    /// Discrete log of a nonzero element with respect to the primitive.
    pub fn log(&self, a: FieldElement) -> Result<u64> {
        self.guard(a);
        if a.packed == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.0.log[a.packed as usize] as u64)
    }

    /// Element from power-basis coordinates (c0, c1, ...); missing high
    /// coordinates are zero, and every coordinate is reduced mod p.
    pub fn element(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() > self.0.k as usize {
            return Err(Error::Shape {
                reason: format!(
                    "{} coordinates for a degree-{} extension",
                    coeffs.len(),
                    self.0.k
                ),
            });
        }
        let mut packed = 0u64;
        for (i, &c) in coeffs.iter().enumerate() {
            packed += (c % self.0.p) * self.0.p.pow(i as u32);
        }
        Ok(self.el(packed as u32))
    }

    /// Power-basis coordinates of an element (length k).
    pub fn coeffs(&self, a: FieldElement) -> Vec<u64> {
        self.guard(a);
        let mut v = a.packed as u64;
        (0..self.0.k)
            .map(|_| {
                let d = v % self.0.p;
                v /= self.0.p;
                d
            })
            .collect()
    }

    /// Embed an integer from the prime subfield (reduced mod p).
    pub fn from_int(&self, c: u64) -> FieldElement {
        self.el((c % self.0.p) as u32)
    }

    /// All q elements in packed order (zero first).
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.0.q).map(move |v| self.el(v as u32))
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.guard(a);
        self.guard(b);
        self.el(self.addv(a.packed, b.packed))
    }
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.guard(a);
        self.guard(b);
        self.el(self.subv(a.packed, b.packed))
    }
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.guard(a);
        self.el(self.negv(a.packed))
    }
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.guard(a);
        self.guard(b);
        self.el(self.mulv(a.packed, b.packed))
    }
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        self.guard(a);
        if a.packed == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.el(self.invv(a.packed)))
    }
    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        self.guard(a);
        self.el(self.powv(a.packed, e))
    }
    /// The Frobenius map a -> a^p.
    pub fn frobenius(&self, a: FieldElement) -> FieldElement {
        self.guard(a);
        self.el(self.frobv(a.packed))
    }

    // ---- raw-value arithmetic used by matrices / convolutions ------------

    #[inline]
    pub(crate) fn addv(&self, a: u32, b: u32) -> u32 {
        let r = &*self.0;
        if r.p == 2 {
            return a ^ b;
        }
        if r.k == 1 {
            return ((a as u64 + b as u64) % r.p) as u32;
        }
        let (mut a, mut b, mut out, mut mult) = (a as u64, b as u64, 0u64, 1u64);
        for _ in 0..r.k {
            out += (a % r.p + b % r.p) % r.p * mult;
            a /= r.p;
            b /= r.p;
            mult *= r.p;
        }
        out as u32
    }

    #[inline]
    pub(crate) fn negv(&self, a: u32) -> u32 {
        let r = &*self.0;
        if r.p == 2 {
            return a;
        }
        let (mut a, mut out, mut mult) = (a as u64, 0u64, 1u64);
        for _ in 0..r.k {
            out += (r.p - a % r.p) % r.p * mult;
            a /= r.p;
            mult *= r.p;
        }
        out as u32
    }

    #[inline]
    pub(crate) fn subv(&self, a: u32, b: u32) -> u32 {
        self.addv(a, self.negv(b))
    }

    #[inline]
    pub(crate) fn mulv(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let r = &*self.0;
        let e = r.log[a as usize] as u64 + r.log[b as usize] as u64;
        r.exp[(e % (r.q - 1)) as usize]
    }

    #[inline]
    pub(crate) fn invv(&self, a: u32) -> u32 {
        let r = &*self.0;
        debug_assert!(a != 0);
        let e = (r.q - 1 - r.log[a as usize] as u64) % (r.q - 1);
        r.exp[e as usize]
    }

    pub(crate) fn powv(&self, a: u32, e: u64) -> u32 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let r = &*self.0;
        let le = (r.log[a as usize] as u128 * e as u128 % (r.q - 1) as u128) as usize;
        r.exp[le]
    }

    #[inline]
    pub(crate) fn frobv(&self, a: u32) -> u32 {
        self.0.frob[a as usize]
    }

    #[inline]
    pub(crate) fn el(&self, packed: u32) -> FieldElement {
        debug_assert!((packed as u64) < self.0.q);
        FieldElement { field_id: self.0.id, packed }
    }

    #[inline]
    pub(crate) fn raw(&self, a: FieldElement) -> u32 {
        self.guard(a);
        a.packed
    }

    #[inline]
    fn guard(&self, a: FieldElement) {
        assert!(
            a.field_id == self.0.id,
            "element of another field used with GF({})",
            self.0.q
        );
    }

    /// Does this element belong to this field?
    pub fn owns(&self, a: FieldElement) -> bool {
        a.field_id == self.0.id
    }

    // ---- literals ---------------------------------------------------------

    /// Parse a field literal: a base-10 integer below p (the prime subfield),
    /// or `w<e>` / `w` for powers of the primitive element (extensions only).
    pub fn parse_literal(&self, s: &str) -> Result<FieldElement> {
        let t = s.trim();
        let err = |msg: String| Error::Parse { pos: 0, message: msg };
        if let Some(rest) = t.strip_prefix('w') {
            if !self.is_extension() {
                return Err(err(format!("`{t}`: prime fields use integer literals")));
            }
            let e: i64 = if rest.is_empty() {
                1
            } else {
                rest.parse().map_err(|_| err(format!("bad exponent in `{t}`")))?
            };
            return Ok(self.primitive_power(e));
        }
        let v: u64 = t.parse().map_err(|_| err(format!("bad field literal `{t}`")))?;
        if v >= self.0.p {
            return Err(err(format!(
                "literal {v} is outside the prime subfield of GF({})",
                self.0.q
            )));
        }
        Ok(self.from_int(v))
    }

    /// Render an element as a literal that [`Field::parse_literal`] accepts:
    /// prime-subfield values as integers, others as `w<e>`.
    pub fn literal(&self, a: FieldElement) -> String {
        self.guard(a);
        if (a.packed as u64) < self.0.p {
            return a.packed.to_string();
        }
        format!("w{}", self.0.log[a.packed as usize])
    }
}

/// Spec'd default modulus: GF(9) is pinned to x^2 + 2x + 2; any other
/// extension takes the lexicographically smallest monic irreducible with x
/// primitive (highest-degree coefficient most significant in the comparison).
fn default_modulus(p: u64, k: u32, q: u64) -> Result<Vec<u64>> {
    if (p, k) == (3, 2) {
        return Ok(vec![2, 2, 1]);
    }
    let rs = prime_factors(q - 1);
    let mut digits = vec![0u64; k as usize]; // c_{k-1} .. c_0, most significant first
    loop {
        // advance like an odometer over (c_{k-1}, ..., c_0)
        let mut i = k as usize;
        loop {
            if i == 0 {
                return Err(Error::InvalidGroup {
                    reason: format!("no primitive polynomial of degree {k} over GF({p})"),
                });
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
        }
        let mut modulus: Vec<u64> = digits.iter().rev().copied().collect();
        modulus.push(1);
        if !polys::is_irreducible(&modulus, p) {
            continue;
        }
        // x primitive under this modulus?
        let f = Field::build(p, k, modulus.clone());
        if let Ok(f) = f {
            let x = f.el(p as u32);
            if rs.iter().all(|&r| f.powv(f.raw(x), (q - 1) / r) != 1) {
                return Ok(modulus);
            }
        }
    }
}
