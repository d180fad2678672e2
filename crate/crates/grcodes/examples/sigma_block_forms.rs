//! The matrix image of a group ring element and the block shapes different
//! listings produce.
//!
//! For an element a = sum_i alpha_i g_i over a listed group {g_1, .., g_n},
//! the image sigma(a) has (i, j) entry alpha at g_i^{-1} g_j, so row i holds
//! the coefficients of g_i^{-1} a. Over a cyclic group this is a circulant;
//! over a dihedral group, listing rotations before reflections splits the
//! matrix into circulant and reversed-circulant blocks.
//!
//! ```bash
//! cargo run --example sigma_block_forms
//! ```

use grcodes::group::GroupTable;
use grcodes::ring::GroupRingElement;
use grcodes::{parse_element, parse_field, parse_group};
use std::error::Error;
use std::sync::Arc;

fn show(label: &str, a: &GroupRingElement) {
    let m = a.sigma();
    println!("{label}: a = {a}");
    print!("{m}");
    println!();
}

fn main() -> Result<(), Box<dyn Error>> {
    let f2 = parse_field("GF(2)")?;
    let f3 = parse_field("GF(3)")?;

    // Cyclic: every row is the previous one shifted right, a circulant.
    let c5 = Arc::new(GroupTable::build(&parse_group("C5")?)?);
    show("C5 circulant", &parse_element(&f2, &c5, "1 + x + x3")?);

    // Dihedral, rotations first (form f1): [[A, B], [B^T-like, A']] blocks —
    // the upper-left block is circulant in the rotation coefficients, the
    // upper-right reversed-circulant in the reflection coefficients.
    let d4 = Arc::new(GroupTable::build(&parse_group("D4:form=f1")?)?);
    show("D4 form f1", &parse_element(&f3, &d4, "1 + 2*a + a2 + b + 2*ba2")?);

    // The same element under the interleaved listing (form f3) scrambles the
    // blocks but generates an equivalent code (same parameters, permuted
    // coordinates).
    let d4i = Arc::new(GroupTable::build(&parse_group("D4:form=f3")?)?);
    show("D4 form f3", &parse_element(&f3, &d4i, "1 + 2*a + a2 + b + 2*a2b")?);

    // Direct product C3 x C3: a block-circulant of circulants.
    let c9 = Arc::new(GroupTable::build(&parse_group("C3xC3")?)?);
    show("C3xC3", &parse_element(&f2, &c9, "1 + xy + x2y2")?);

    // Transposition in the ring matches transposition of the image:
    // sigma(a^T) = sigma(a)^T.
    let a = parse_element(&f3, &d4, "1 + 2*a + a2 + b + 2*ba2")?;
    assert_eq!(a.transpose().sigma(), a.sigma().transpose());
    println!("sigma(a^T) = sigma(a)^T holds for the D4 element above");

    // And multiplication becomes matrix multiplication:
    // sigma(a b) = sigma(a) sigma(b).
    let b = parse_element(&f3, &d4, "2 + ba + a3")?;
    assert_eq!(a.mul(&b)?.sigma(), a.sigma().mul(&b.sigma())?);
    println!("sigma(a b) = sigma(a) sigma(b) holds for the same pair");
    Ok(())
}
