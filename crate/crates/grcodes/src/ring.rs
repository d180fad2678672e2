//! Elements of a group ring F_q G and their matrix images.
//!
//! An element is a coefficient vector indexed by the group's listing. The map
//! sigma sends a = sum_i alpha_i g_i to the n x n matrix with
//! M[i][j] = alpha at g_i^{-1} g_j; it is an injective ring homomorphism, so
//! identities checked on elements can be cross-checked on matrices and vice
//! versa.

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::group::GroupTable;
use crate::matrix::Matrix;
use std::fmt;
use std::sync::Arc;

/// An element of F_q G for one field and one listed group.
#[derive(Clone)]
pub struct GroupRingElement {
    field: Field,
    group: Arc<GroupTable>,
    coeffs: Vec<u32>,
}

impl PartialEq for GroupRingElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.group.same_group(&other.group)
            && self.coeffs == other.coeffs
    }
}
impl Eq for GroupRingElement {}

impl GroupRingElement {
    pub fn zero(field: &Field, group: &Arc<GroupTable>) -> GroupRingElement {
        GroupRingElement {
            field: field.clone(),
            group: Arc::clone(group),
            coeffs: vec![0; group.order()],
        }
    }

    /// Element with the given coefficients, one per listing position.
    pub fn new(
        field: &Field,
        group: &Arc<GroupTable>,
        coeffs: &[FieldElement],
    ) -> Result<GroupRingElement> {
        if coeffs.len() != group.order() {
            return Err(Error::Shape {
                reason: format!(
                    "{} coefficients for a group of order {}",
                    coeffs.len(),
                    group.order()
                ),
            });
        }
        let mut e = Self::zero(field, group);
        for (slot, &c) in e.coeffs.iter_mut().zip(coeffs) {
            if !field.owns(c) {
                return Err(Error::FieldMismatch);
            }
            *slot = field.raw(c);
        }
        Ok(e)
    }

    /// Element from (word, coefficient) terms; repeated words accumulate.
    pub fn from_terms(
        field: &Field,
        group: &Arc<GroupTable>,
        terms: &[(&str, FieldElement)],
    ) -> Result<GroupRingElement> {
        let mut e = Self::zero(field, group);
        for &(word, c) in terms {
            if !field.owns(c) {
                return Err(Error::FieldMismatch);
            }
            let i = group.index_of_word(word)?;
            e.coeffs[i] = field.addv(e.coeffs[i], field.raw(c));
        }
        Ok(e)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.field.el(self.coeffs[i])
    }

    pub fn coeffs(&self) -> Vec<FieldElement> {
        self.coeffs.iter().map(|&v| self.field.el(v)).collect()
    }

    pub fn set_coeff(&mut self, i: usize, v: FieldElement) {
        self.coeffs[i] = self.field.raw(v);
    }

    pub(crate) fn from_raw(field: &Field, group: &Arc<GroupTable>, coeffs: Vec<u32>) -> Self {
        debug_assert_eq!(coeffs.len(), group.order());
        GroupRingElement { field: field.clone(), group: Arc::clone(group), coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&v| v == 0)
    }

    /// Number of nonzero coefficients.
    pub fn support_weight(&self) -> usize {
        self.coeffs.iter().filter(|&&v| v != 0).count()
    }

    fn check_compatible(&self, other: &GroupRingElement) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if !self.group.same_group(&other.group) {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &GroupRingElement) -> Result<GroupRingElement> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (a, &b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a = self.field.addv(*a, b);
        }
        Ok(out)
    }

    pub fn neg(&self) -> GroupRingElement {
        let mut out = self.clone();
        for a in out.coeffs.iter_mut() {
            *a = self.field.negv(*a);
        }
        out
    }

    pub fn sub(&self, other: &GroupRingElement) -> Result<GroupRingElement> {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: FieldElement) -> GroupRingElement {
        let s = self.field.raw(s);
        let mut out = self.clone();
        for a in out.coeffs.iter_mut() {
            *a = self.field.mulv(*a, s);
        }
        out
    }

    /// Product in the group ring: (ab) at g = sum over g_i g_j = g of a_i b_j.
    pub fn mul(&self, other: &GroupRingElement) -> Result<GroupRingElement> {
        self.check_compatible(other)?;
        let f = &self.field;
        let g = &self.group;
        let mut out = Self::zero(f, g);
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let k = g.mul(i, j);
                out.coeffs[k] = f.addv(out.coeffs[k], f.mulv(a, b));
            }
        }
        Ok(out)
    }

    /// The transpose a^T = sum_i alpha_i g_i^{-1}; sigma(a^T) = sigma(a)^T.
    pub fn transpose(&self) -> GroupRingElement {
        let mut out = Self::zero(&self.field, &self.group);
        for (i, &a) in self.coeffs.iter().enumerate() {
            out.coeffs[self.group.inv(i)] = a;
        }
        out
    }

    /// Coefficientwise a -> a^p (identity over prime fields).
    pub fn frobenius(&self) -> GroupRingElement {
        let mut out = self.clone();
        for a in out.coeffs.iter_mut() {
            *a = self.field.frobv(*a);
        }
        out
    }

    /// The matrix image: row i, column j holds the coefficient of
    /// g_i^{-1} g_j.
    pub fn sigma(&self) -> Matrix {
        let n = self.group.order();
        Matrix::from_fn(&self.field, n, n, |i, j| {
            self.field.el(self.coeffs[self.group.mul(self.group.inv(i), j)])
        })
    }

    /// Terms rendered as `coeff*word` joined by ` + `, zero coefficients
    /// skipped; the zero element renders as `0`.
    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let word = self.group.word(i);
            let lit = self.field.literal(self.field.el(c));
            parts.push(match (lit.as_str(), word) {
                (_, "e") => lit.clone(),
                ("1", w) => w.to_string(),
                (_, w) => format!("{lit}*{w}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupRingElement({} over {:?} {})", self.render(), self.field, self.group.spec())
    }
}
