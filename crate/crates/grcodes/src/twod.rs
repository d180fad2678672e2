//! Bivariate polynomials and two-dimensional cyclic codes.
//!
//! The quotient ring R = F_q[x,y]/(x^l - 1, y^m - 1) models codes of length
//! l*m that are closed under both the row shift (multiply by x) and the
//! column shift (multiply by y) of the l x m coefficient array. A principal
//! code <g> with g dividing F = (x^l - 1)(y^m - 1) has the explicit basis
//! { x^i y^j g : 0 <= i < l - a, 0 <= j < m - b } where (a, b) is the
//! componentwise degree pair of g, so its dimension is (l - a)(m - b).
//!
//! Divisibility in F_q[x,y] is decided by division by the single divisor
//! under the lexicographic term order with x > y; a one-element set is a
//! Groebner basis of its principal ideal, so a zero remainder is a complete
//! criterion and no general Groebner machinery is needed.

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::matrix::Matrix;
use std::collections::BTreeMap;
use std::fmt;

/// A sparse bivariate polynomial over a finite field.
///
/// Terms map exponent pairs `(i, j)` (for `x^i y^j`) to nonzero
/// coefficients; the zero polynomial has no terms. The `BTreeMap` key order
/// is exactly the lexicographic term order with x > y, so the last entry is
/// the leading term.
#[derive(Clone, PartialEq, Eq)]
pub struct BivarPoly {
    field: Field,
    terms: BTreeMap<(u32, u32), u32>,
}

impl BivarPoly {
    /// The zero polynomial.
    pub fn zero(field: &Field) -> BivarPoly {
        BivarPoly {
            field: field.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial 1.
    pub fn one(field: &Field) -> BivarPoly {
        BivarPoly::constant(field, field.one())
    }

    /// A constant polynomial.
    pub fn constant(field: &Field, c: FieldElement) -> BivarPoly {
        let mut p = BivarPoly::zero(field);
        p.add_raw(0, 0, field.raw(c));
        p
    }

    /// The monomial `c * x^i y^j`.
    pub fn monomial(field: &Field, c: FieldElement, i: u32, j: u32) -> BivarPoly {
        let mut p = BivarPoly::zero(field);
        p.add_raw(i, j, field.raw(c));
        p
    }

    /// Builds a polynomial from `(x_exp, y_exp, coefficient)` triples,
    /// summing repeated exponent pairs and dropping zero totals.
    pub fn from_terms(field: &Field, terms: &[(u32, u32, FieldElement)]) -> BivarPoly {
        let mut p = BivarPoly::zero(field);
        for &(i, j, c) in terms {
            p.add_raw(i, j, field.raw(c));
        }
        p
    }

    /// The relation polynomial F = (x^l - 1)(y^m - 1) whose divisors
    /// generate the principal two-dimensional cyclic codes.
    pub fn relation(field: &Field, l: u32, m: u32) -> BivarPoly {
        let one = field.one();
        let minus = field.neg(one);
        BivarPoly::from_terms(field, &[(l, m, one), (l, 0, minus), (0, m, minus), (0, 0, one)])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Nonzero terms as `(x_exp, y_exp, coefficient)` in ascending
    /// lexicographic order (x before y).
    pub fn terms(&self) -> Vec<(u32, u32, FieldElement)> {
        self.terms
            .iter()
            .map(|(&(i, j), &c)| (i, j, self.field.el(c)))
            .collect()
    }

    /// Coefficient of `x^i y^j` (zero when absent).
    pub fn coeff(&self, i: u32, j: u32) -> FieldElement {
        self.field.el(self.terms.get(&(i, j)).copied().unwrap_or(0))
    }

    /// Largest x-exponent, or `None` for the zero polynomial.
    pub fn deg_x(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    /// Largest y-exponent, or `None` for the zero polynomial.
    pub fn deg_y(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    /// Componentwise degree pair `(deg_x, deg_y)`, or `None` for zero.
    pub fn degree(&self) -> Option<(u32, u32)> {
        if self.is_zero() {
            None
        } else {
            Some((self.deg_x().unwrap(), self.deg_y().unwrap()))
        }
    }

    fn add_raw(&mut self, i: u32, j: u32, c: u32) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert(0);
        *entry = self.field.addv(*entry, c);
        if *entry == 0 {
            self.terms.remove(&(i, j));
        }
    }

    fn check_field(&self, other: &BivarPoly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &BivarPoly) -> Result<BivarPoly> {
        self.check_field(other)?;
        let mut out = self.clone();
        for (&(i, j), &c) in &other.terms {
            out.add_raw(i, j, c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> BivarPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = self.field.negv(*c);
        }
        out
    }

    pub fn sub(&self, other: &BivarPoly) -> Result<BivarPoly> {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: FieldElement) -> BivarPoly {
        let sv = self.field.raw(s);
        let mut out = BivarPoly::zero(&self.field);
        for (&(i, j), &c) in &self.terms {
            out.add_raw(i, j, self.field.mulv(c, sv));
        }
        out
    }

    /// Product in the full polynomial ring F_q[x,y].
    pub fn mul(&self, other: &BivarPoly) -> Result<BivarPoly> {
        self.check_field(other)?;
        let mut out = BivarPoly::zero(&self.field);
        for (&(i1, j1), &c1) in &self.terms {
            for (&(i2, j2), &c2) in &other.terms {
                out.add_raw(i1 + i2, j1 + j2, self.field.mulv(c1, c2));
            }
        }
        Ok(out)
    }

    /// Image in the quotient ring: x-exponents reduced mod `l`, y-exponents
    /// mod `m`, with coefficients of merged terms summed.
    pub fn reduce_exponents(&self, l: u32, m: u32) -> BivarPoly {
        let mut out = BivarPoly::zero(&self.field);
        for (&(i, j), &c) in &self.terms {
            out.add_raw(i % l, j % m, c);
        }
        out
    }

    /// Product in the quotient ring F_q[x,y]/(x^l - 1, y^m - 1).
    pub fn mul_mod(&self, other: &BivarPoly, l: u32, m: u32) -> Result<BivarPoly> {
        Ok(self.mul(other)?.reduce_exponents(l, m))
    }

    /// Division with remainder by a single divisor under the lexicographic
    /// term order with x > y: returns `(quotient, remainder)` with
    /// `self = quotient * divisor + remainder` and no term of the remainder
    /// divisible by the divisor's leading monomial.
    pub fn divrem(&self, divisor: &BivarPoly) -> Result<(BivarPoly, BivarPoly)> {
        self.check_field(divisor)?;
        let (&(di, dj), &dc) = divisor
            .terms
            .last_key_value()
            .ok_or(Error::PolynomialDomain {
                reason: "division by the zero polynomial".into(),
            })?;
        let dc_inv = self.field.invv(dc);
        let mut quo = BivarPoly::zero(&self.field);
        let mut rem = BivarPoly::zero(&self.field);
        let mut f = self.clone();
        while let Some((&(fi, fj), &fc)) = f.terms.last_key_value() {
            if fi >= di && fj >= dj {
                let (ti, tj) = (fi - di, fj - dj);
                let tc = self.field.mulv(fc, dc_inv);
                quo.add_raw(ti, tj, tc);
                for (&(gi, gj), &gc) in &divisor.terms {
                    let prod = self.field.mulv(tc, gc);
                    f.add_raw(ti + gi, tj + gj, self.field.negv(prod));
                }
            } else {
                rem.add_raw(fi, fj, fc);
                f.terms.remove(&(fi, fj));
            }
        }
        Ok((quo, rem))
    }

    /// Whether `self` divides `other` in F_q[x,y].
    pub fn divides(&self, other: &BivarPoly) -> Result<bool> {
        Ok(other.divrem(self)?.1.is_zero())
    }

    /// Exact quotient `self / divisor`; errors when the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &BivarPoly) -> Result<BivarPoly> {
        let (quo, rem) = self.divrem(divisor)?;
        if rem.is_zero() {
            Ok(quo)
        } else {
            Err(Error::NotDivisible {
                divisor: divisor.to_string(),
                dividend: self.to_string(),
            })
        }
    }

    /// Reciprocal polynomial: exponents reflected through the componentwise
    /// degree maxima, `f*(x, y) = sum f_{i,j} x^(deg_x - i) y^(deg_y - j)`.
    pub fn reciprocal(&self) -> Result<BivarPoly> {
        let (dx, dy) = self.degree().ok_or(Error::PolynomialDomain {
            reason: "the zero polynomial has no reciprocal".into(),
        })?;
        let mut out = BivarPoly::zero(&self.field);
        for (&(i, j), &c) in &self.terms {
            out.add_raw(dx - i, dy - j, c);
        }
        Ok(out)
    }

    fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::with_capacity(self.terms.len());
        for (&(i, j), &c) in self.terms.iter().rev() {
            let lit = self.field.literal(self.field.el(c));
            let mut mono = String::new();
            match i {
                0 => {}
                1 => mono.push('x'),
                _ => mono.push_str(&format!("x{i}")),
            }
            match j {
                0 => {}
                1 => mono.push('y'),
                _ => mono.push_str(&format!("y{j}")),
            }
            if mono.is_empty() {
                parts.push(lit);
            } else if lit == "1" {
                parts.push(mono);
            } else {
                parts.push(format!("{lit}{mono}"));
            }
        }
        parts.join(" + ")
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivarPoly({})", self.render())
    }
}

/// A principal two-dimensional cyclic code `<g>` in
/// F_q[x,y]/(x^l - 1, y^m - 1), realized as a linear code of length `l * m`.
///
/// Codeword vectors place the coefficient of `x^i y^j` at position
/// `i + l * j`, i.e. the l x m coefficient array is stored row-major with
/// one row per y-exponent.
pub struct TwoDCyclicCode {
    field: Field,
    l: u32,
    m: u32,
    g: BivarPoly,
    code: LinearCode,
}

impl TwoDCyclicCode {
    /// Builds the code generated by `g`, which must be nonzero in the
    /// quotient ring and divide F = (x^l - 1)(y^m - 1).
    ///
    /// The generator matrix rows are the non-wrapping shifts `x^i y^j g`
    /// for `0 <= i < l - a`, `0 <= j < m - b` with `(a, b) = deg(g)`, listed
    /// with `i` varying fastest. The dimension reported by the code is the
    /// matrix rank; [`TwoDCyclicCode::matches_formula`] flags whether it
    /// agrees with the predicted `(l - a)(m - b)`.
    pub fn new(l: u32, m: u32, g: &BivarPoly) -> Result<TwoDCyclicCode> {
        if l == 0 || m == 0 {
            return Err(Error::Shape {
                reason: "side lengths must be positive".into(),
            });
        }
        let length = (l as usize) * (m as usize);
        if length > crate::group::MAX_GROUP_ORDER {
            return Err(Error::Shape {
                reason: format!(
                    "code length {length} exceeds the supported bound {}",
                    crate::group::MAX_GROUP_ORDER
                ),
            });
        }
        let field = g.field().clone();
        let g = g.reduce_exponents(l, m);
        if g.is_zero() {
            return Err(Error::PolynomialDomain {
                reason: "the generator reduces to zero in the quotient ring".into(),
            });
        }
        let relation = BivarPoly::relation(&field, l, m);
        if !g.divides(&relation)? {
            return Err(Error::NotDivisible {
                divisor: g.to_string(),
                dividend: relation.to_string(),
            });
        }
        let (a, b) = g.degree().unwrap();
        let (shifts_x, shifts_y) = ((l - a) as usize, (m - b) as usize);
        let mut gen = Matrix::zero(&field, shifts_x * shifts_y, length);
        for jj in 0..shifts_y {
            for ii in 0..shifts_x {
                let row = jj * shifts_x + ii;
                for (i, j, c) in g.terms() {
                    let col = (ii + i as usize) + (l as usize) * (jj + j as usize);
                    gen.set(row, col, c);
                }
            }
        }
        Ok(TwoDCyclicCode {
            field,
            l,
            m,
            g,
            code: LinearCode::from_generator(gen),
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// The generator polynomial, reduced into the quotient ring.
    pub fn generator_poly(&self) -> &BivarPoly {
        &self.g
    }

    /// The underlying linear code of length `l * m`.
    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    /// Code length `l * m`.
    pub fn length(&self) -> usize {
        self.code.length()
    }

    /// Dimension by matrix rank (authoritative).
    pub fn dimension(&self) -> usize {
        self.code.dimension()
    }

    /// The predicted dimension `(l - a)(m - b)` from the generator degrees.
    pub fn formula_dimension(&self) -> usize {
        let (a, b) = self.g.degree().unwrap();
        ((self.l - a) as usize) * ((self.m - b) as usize)
    }

    /// Whether the rank agrees with [`TwoDCyclicCode::formula_dimension`].
    pub fn matches_formula(&self) -> bool {
        self.dimension() == self.formula_dimension()
    }

    /// The relation polynomial F = (x^l - 1)(y^m - 1).
    pub fn relation(&self) -> BivarPoly {
        BivarPoly::relation(&self.field, self.l, self.m)
    }

    /// The cofactor h with F = g * h.
    pub fn h(&self) -> BivarPoly {
        self.relation()
            .div_exact(&self.g)
            .expect("the constructor verified that g divides the relation polynomial")
    }

    /// The reciprocal cofactor h*, reduced into the quotient ring. Zero
    /// exactly when the star code is the zero code (which happens when the
    /// generator is constant in one of the variables).
    pub fn star_generator(&self) -> BivarPoly {
        self.h()
            .reciprocal()
            .expect("h is nonzero because F is nonzero")
            .reduce_exponents(self.l, self.m)
    }

    /// The star code C* = <h*> as a linear code (the zero code when h*
    /// vanishes in the quotient ring). C* is always contained in the
    /// Euclidean dual of C.
    pub fn star_code(&self) -> LinearCode {
        let hs = self.star_generator();
        if hs.is_zero() {
            let length = self.length();
            return LinearCode::from_generator(Matrix::zero(&self.field, 0, length));
        }
        let star = TwoDCyclicCode::new(self.l, self.m, &hs)
            .expect("h* divides the relation polynomial whenever it is nonzero");
        star.code
    }

    /// The star code as a full two-dimensional cyclic code; errors when h*
    /// vanishes in the quotient ring (zero star code).
    pub fn dual_star(&self) -> Result<TwoDCyclicCode> {
        let hs = self.star_generator();
        if hs.is_zero() {
            return Err(Error::PolynomialDomain {
                reason: "the star generator vanishes in the quotient ring (zero star code)".into(),
            });
        }
        TwoDCyclicCode::new(self.l, self.m, &hs)
    }

    /// Whether C* is contained in C, decided by the divisibility criterion
    /// `g * g^reciprocal | F` and cross-checked against direct row-space
    /// containment. The two agree exactly when both dimensions are positive,
    /// so a zero star code is rejected.
    pub fn contains_star(&self) -> Result<bool> {
        let star = self.star_code();
        if star.dimension() == 0 {
            return Err(Error::PolynomialDomain {
                reason: "the star code is zero; the containment criterion needs positive \
                         dimensions on both sides"
                    .into(),
            });
        }
        let gg = self.g.mul(&self.g.reciprocal()?)?;
        let by_division = gg.divides(&self.relation())?;
        let by_rows = star.is_subcode_of(&self.code)?;
        assert_eq!(
            by_division, by_rows,
            "divisibility and row-space routes must agree on star containment"
        );
        Ok(by_rows)
    }

    /// Whether F divides `g * g^reciprocal`. This is sufficient for
    /// self-orthogonality but not necessary: over GF(2) with l = 4, m = 3,
    /// the code generated by (x^2 + 1)(y + 1) is self-orthogonal although
    /// the divisibility fails.
    pub fn self_orthogonality_criterion(&self) -> Result<bool> {
        let gg = self.g.mul(&self.g.reciprocal()?)?;
        self.relation().divides(&gg)
    }

    /// Whether C is contained in its Euclidean dual, decided directly from
    /// the generator matrix (G * G^T = O). When the divisibility criterion
    /// holds it must agree, and that implication is asserted.
    pub fn is_self_orthogonal(&self) -> bool {
        let gen = self.code.generator();
        let gram = gen.mul(&gen.transpose()).expect("G and G^T are conformable");
        let orthogonal = gram.is_zero();
        let criterion = self
            .self_orthogonality_criterion()
            .expect("g is nonzero by construction");
        if criterion {
            assert!(
                orthogonal,
                "the divisibility criterion must imply matrix self-orthogonality"
            );
        }
        orthogonal
    }

    /// Whether applying the x-shift and the y-shift to every generator row
    /// stays inside the code; true for every valid generator.
    pub fn is_shift_closed(&self) -> bool {
        let gen = self.code.generator();
        let (l, m) = (self.l as usize, self.m as usize);
        for r in 0..gen.rows() {
            let row = gen.row(r);
            let mut xshift = vec![self.field.zero(); row.len()];
            let mut yshift = vec![self.field.zero(); row.len()];
            for j in 0..m {
                for i in 0..l {
                    let v = row[i + l * j];
                    xshift[(i + 1) % l + l * j] = v;
                    yshift[i + l * ((j + 1) % m)] = v;
                }
            }
            let ok = self.code.contains(&xshift).expect("same field")
                && self.code.contains(&yshift).expect("same field");
            if !ok {
                return false;
            }
        }
        true
    }

    /// The length-`l*m` codeword vector of a polynomial (reduced into the
    /// quotient ring first).
    pub fn vector_of(&self, f: &BivarPoly) -> Result<Vec<FieldElement>> {
        if *f.field() != self.field {
            return Err(Error::FieldMismatch);
        }
        let reduced = f.reduce_exponents(self.l, self.m);
        let mut v = vec![self.field.zero(); self.length()];
        for (i, j, c) in reduced.terms() {
            v[i as usize + (self.l as usize) * (j as usize)] = c;
        }
        Ok(v)
    }

    /// The polynomial whose codeword vector is `v`.
    pub fn poly_of(&self, v: &[FieldElement]) -> Result<BivarPoly> {
        if v.len() != self.length() {
            return Err(Error::Shape {
                reason: format!("expected a vector of length {}, got {}", self.length(), v.len()),
            });
        }
        let l = self.l as usize;
        let terms: Vec<(u32, u32, FieldElement)> = v
            .iter()
            .enumerate()
            .map(|(pos, &c)| ((pos % l) as u32, (pos / l) as u32, c))
            .collect();
        Ok(BivarPoly::from_terms(&self.field, &terms))
    }
}
