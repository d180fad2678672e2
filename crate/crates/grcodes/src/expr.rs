//! Text forms for fields, groups, group ring elements, and bivariate
//! polynomials.
//!
//! - Field specs: `GF(q)`, `GF(p^k)`, or `GF(p^k;modulus=c0,c1,...,ck)` with
//!   modulus coefficients in ascending power order.
//! - Group specs: `C<n>`, `D<m>`, `Q<4n>`, semidirect `C<l>sd<k>C<m>`, and
//!   direct products joined with `x` (`C5xC3`, `C3xD3`), optionally followed
//!   by a listing selector `:form=f<1-4>`, `:inner=<factor>`, or
//!   `:order=<f1,f2,...>` (factors 1-based).
//! - Elements: `+`-separated terms `coeff*word` where the coefficient is a
//!   field literal (`2`, `w3`) and the word multiplies single-letter
//!   generators with decimal exponents (`x2y`, `a3b`, `e` for the identity).
//!   A bare word means coefficient 1; a bare literal means a multiple of the
//!   identity.
//! - Bivariate polynomials: `+`-separated monomials `x<i>y<j>` with an
//!   optional field-literal coefficient (`x4y2`, `2x3`, `w3y`, `1`).

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::group::{GroupKind, GroupSpec, GroupTable, Listing};
use crate::ring::GroupRingElement;
use crate::twod::BivarPoly;
use std::str::FromStr;
use std::sync::Arc;

fn parse_err(pos: usize, message: impl Into<String>) -> Error {
    Error::Parse { pos, message: message.into() }
}

fn shift(err: Error, off: usize) -> Error {
    match err {
        Error::Parse { pos, message } => Error::Parse { pos: pos + off, message },
        other => other,
    }
}

fn parse_number<T: FromStr>(s: &str, pos: usize, what: &str) -> Result<T> {
    s.parse().map_err(|_| {
        if s.is_empty() {
            parse_err(pos, format!("expected {what}"))
        } else {
            parse_err(pos, format!("`{s}` is not a valid {what}"))
        }
    })
}

/// Splits q into (p, k) with q = p^k, p prime, or reports q as not a prime
/// power. Primality itself is re-validated by the field constructor.
fn prime_power_split(q: u64) -> Result<(u64, u32)> {
    if q < 2 {
        return Err(Error::NotPrimePower { q });
    }
    let mut p = 2u64;
    while p.saturating_mul(p) <= q {
        if q.is_multiple_of(p) {
            break;
        }
        p += 1;
    }
    if p.saturating_mul(p) > q {
        return Ok((q, 1));
    }
    let mut k = 0u32;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        k += 1;
    }
    if r == 1 {
        Ok((p, k))
    } else {
        Err(Error::NotPrimePower { q })
    }
}

/// Parses a field spec such as `GF(9)`, `GF(3^2)`, or
/// `GF(3^2;modulus=2,2,1)` and builds the field.
pub fn parse_field(s: &str) -> Result<Field> {
    let t = s.trim();
    let off = s.len() - s.trim_start().len();
    let inner = t
        .strip_prefix("GF(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| parse_err(off, "expected a field spec of the form GF(...)"))?;
    let mut parts = inner.split(';');
    let base = parts.next().unwrap_or("").trim();
    let base_pos = off + 3;
    if base.is_empty() {
        return Err(parse_err(base_pos, "expected a field size"));
    }
    let (p, k) = match base.split_once('^') {
        Some((ps, ks)) => {
            let p: u64 = parse_number(ps.trim(), base_pos, "prime")?;
            let k: u32 = parse_number(ks.trim(), base_pos + ps.len() + 1, "exponent")?;
            (p, k)
        }
        None => {
            let q: u64 = parse_number(base, base_pos, "field size")?;
            prime_power_split(q)?
        }
    };
    let mut modulus: Option<Vec<u64>> = None;
    for opt in parts {
        let (key, value) = opt
            .split_once('=')
            .ok_or_else(|| parse_err(off, format!("expected key=value, got `{opt}`")))?;
        match key.trim() {
            "modulus" => {
                let coeffs: Result<Vec<u64>> = value
                    .split(',')
                    .map(|c| parse_number(c.trim(), off, "modulus coefficient"))
                    .collect();
                modulus = Some(coeffs?);
            }
            other => {
                return Err(parse_err(off, format!("unknown field option `{other}`")));
            }
        }
    }
    match modulus {
        Some(m) => Field::with_modulus(p, k, &m),
        None => {
            let q = p
                .checked_pow(k)
                .ok_or_else(|| parse_err(base_pos, "field size out of range"))?;
            Field::new(q)
        }
    }
}

fn parse_listing(s: &str, off: usize) -> Result<Listing> {
    let (key, value) = s
        .split_once('=')
        .ok_or_else(|| parse_err(off, "expected form=, inner=, or order= after `:`"))?;
    let vpos = off + key.len() + 1;
    match key.trim() {
        "form" => {
            let f = value
                .trim()
                .strip_prefix('f')
                .ok_or_else(|| parse_err(vpos, "expected f1..f4"))?;
            let n: u8 = parse_number(f, vpos, "form number")?;
            if !(1..=4).contains(&n) {
                return Err(parse_err(vpos, "form number must be between 1 and 4"));
            }
            Ok(Listing::Form(n))
        }
        "inner" => {
            let i: usize = parse_number(value.trim(), vpos, "factor index")?;
            if i == 0 {
                return Err(parse_err(vpos, "factor indices are 1-based"));
            }
            Ok(Listing::Inner(i - 1))
        }
        "order" => {
            let mut order = Vec::new();
            for part in value.split(',') {
                let i: usize = parse_number(part.trim(), vpos, "factor index")?;
                if i == 0 {
                    return Err(parse_err(vpos, "factor indices are 1-based"));
                }
                order.push(i - 1);
            }
            Ok(Listing::Order(order))
        }
        other => Err(parse_err(off, format!("unknown listing selector `{other}`"))),
    }
}

fn parse_atom(s: &str, off: usize) -> Result<GroupKind> {
    let t = s.trim();
    let off = off + (s.len() - s.trim_start().len());
    let expected = "expected C<n>, D<m>, Q<4n>, or C<l>sd<k>C<m>";
    let family = match t.chars().next() {
        Some(c @ ('C' | 'D' | 'Q')) => c,
        _ => return Err(parse_err(off, expected)),
    };
    let digits_end = t[1..]
        .find(|c: char| !c.is_ascii_digit())
        .map(|i| i + 1)
        .unwrap_or(t.len());
    let n: usize = parse_number(&t[1..digits_end], off + 1, "group order")?;
    let rest = &t[digits_end..];
    match (family, rest) {
        ('C', "") => Ok(GroupKind::Cyclic(n)),
        ('D', "") => Ok(GroupKind::Dihedral(n)),
        ('Q', "") => {
            if !n.is_multiple_of(4) {
                return Err(parse_err(off + 1, "quaternion order must be a multiple of 4"));
            }
            Ok(GroupKind::Quaternion(n / 4))
        }
        ('C', tail) => {
            let body = tail
                .strip_prefix("sd")
                .ok_or_else(|| parse_err(off + digits_end, expected))?;
            let (ks, ms) = body
                .split_once('C')
                .ok_or_else(|| parse_err(off + digits_end + 2, "expected C<m> after sd<k>"))?;
            let k: usize = parse_number(ks, off + digits_end + 2, "twist exponent")?;
            let m: usize = parse_number(ms, off + digits_end + 3 + ks.len(), "group order")?;
            Ok(GroupKind::Semidirect { l: n, m, k })
        }
        _ => Err(parse_err(off + digits_end, expected)),
    }
}

/// Parses a group spec such as `D11:form=f2`, `C5xC3:inner=2`, or
/// `C5sd2C4`.
pub fn parse_group(s: &str) -> Result<GroupSpec> {
    let t = s.trim();
    let off = s.len() - s.trim_start().len();
    if t.is_empty() {
        return Err(parse_err(off, "empty group spec"));
    }
    let (structure, listing) = match t.split_once(':') {
        Some((a, b)) => {
            let listing = parse_listing(b, off + a.len() + 1)?;
            (a, listing)
        }
        None => (t, Listing::Default),
    };
    let mut kinds = Vec::new();
    let mut pos = off;
    for part in structure.split('x') {
        kinds.push(parse_atom(part, pos)?);
        pos += part.len() + 1;
    }
    let kind = if kinds.len() == 1 {
        kinds.pop().unwrap()
    } else {
        GroupKind::Product(kinds.into_iter().map(GroupSpec::new).collect())
    };
    Ok(GroupSpec::with_listing(kind, listing))
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<GroupSpec> {
        parse_group(s)
    }
}

/// Parses a group ring element such as `e + y2 + x2y2` or
/// `w*a + w3*a2b + 2`.
pub fn parse_element(
    field: &Field,
    group: &Arc<GroupTable>,
    s: &str,
) -> Result<GroupRingElement> {
    let mut out = GroupRingElement::zero(field, group);
    let mut pos = 0usize;
    for part in s.split('+') {
        let term = part.trim();
        let term_off = pos + (part.len() - part.trim_start().len());
        pos += part.len() + 1;
        if term.is_empty() {
            return Err(parse_err(term_off, "empty term"));
        }
        let (coeff, word, word_off) = match term.split_once('*') {
            Some((lit, word)) => {
                let c = field
                    .parse_literal(lit.trim())
                    .map_err(|e| shift(e, term_off))?;
                (c, word.trim(), term_off + lit.len() + 1)
            }
            None => {
                let first = term.chars().next().unwrap();
                if first.is_ascii_digit() || first == 'w' {
                    let c = field.parse_literal(term).map_err(|e| shift(e, term_off))?;
                    (c, "e", term_off)
                } else {
                    (field.one(), term, term_off)
                }
            }
        };
        if word.is_empty() {
            return Err(parse_err(word_off, "expected a group word after `*`"));
        }
        let i = group.index_of_word(word).map_err(|e| shift(e, word_off))?;
        out.set_coeff(i, field.add(out.coeff(i), coeff));
    }
    Ok(out)
}

/// Parses a bivariate polynomial such as `x4y4 + x4y2 + 1` or `2x3y + w3x`.
pub fn parse_bivar(field: &Field, s: &str) -> Result<BivarPoly> {
    let mut terms: Vec<(u32, u32, FieldElement)> = Vec::new();
    let mut pos = 0usize;
    for part in s.split('+') {
        let term = part.trim();
        let term_off = pos + (part.len() - part.trim_start().len());
        pos += part.len() + 1;
        if term.is_empty() {
            return Err(parse_err(term_off, "empty term"));
        }
        let split_at = term.find(['x', 'y']).unwrap_or(term.len());
        let (head, mono) = term.split_at(split_at);
        let head = head.trim_end();
        let head = head.strip_suffix('*').map(str::trim_end).unwrap_or(head);
        let coeff = if head.is_empty() {
            if mono.is_empty() {
                return Err(parse_err(term_off, "empty term"));
            }
            field.one()
        } else {
            field.parse_literal(head).map_err(|e| shift(e, term_off))?
        };
        let (mut i, mut j) = (0u32, 0u32);
        let bytes = mono.as_bytes();
        let mut at = 0usize;
        while at < bytes.len() {
            let var = bytes[at] as char;
            if var != 'x' && var != 'y' {
                return Err(parse_err(
                    term_off + split_at + at,
                    format!("unexpected `{var}` in monomial"),
                ));
            }
            at += 1;
            let start = at;
            while at < bytes.len() && bytes[at].is_ascii_digit() {
                at += 1;
            }
            let e: u32 = if start == at {
                1
            } else {
                parse_number(&mono[start..at], term_off + split_at + start, "exponent")?
            };
            if var == 'x' {
                i += e;
            } else {
                j += e;
            }
        }
        terms.push((i, j, coeff));
    }
    Ok(BivarPoly::from_terms(field, &terms))
}
