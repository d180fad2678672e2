//! A pair of elements over GF(2) D5 with a b^T = b a^T, certifying the
//! [[10, 1, 4]]_2 stabilizer code generated by [sigma(a) | sigma(b)].
//!
//! For a pair the certificate is the ring identity a b^T = b a^T, which is
//! equivalent to the stacked matrix [M_a | M_b] being self-orthogonal under
//! the symplectic form on length 2n. The stabilizer code has length n and
//! dimension n - rank, with distance measured in symplectic weight over the
//! dual minus the code.
//!
//! ```bash
//! cargo run --example symplectic_pair_qecc
//! ```

use grcodes::code::DistanceOptions;
use grcodes::group::GroupTable;
use grcodes::ortho::{check_symplectic_pair, derive_symplectic_pair};
use grcodes::{parse_element, parse_field, parse_group};
use std::error::Error;
use std::sync::Arc;

fn main() -> Result<(), Box<dyn Error>> {
    let f2 = parse_field("GF(2)")?;
    let d5 = Arc::new(GroupTable::build(&parse_group("D5:form=f1")?)?);
    let a = parse_element(&f2, &d5, "1 + a + a2 + a3 + ba + ba2")?;
    let b = parse_element(&f2, &d5, "1 + b + ba + ba3")?;
    println!("a = {a}");
    println!("b = {b}\n");

    // The two sides of the pair condition agree in the group ring.
    let ab_t = a.mul(&b.transpose())?;
    let ba_t = b.mul(&a.transpose())?;
    println!("a b^T = {ab_t}");
    println!("b a^T = {ba_t}");
    assert_eq!(ab_t, ba_t);

    let cert = check_symplectic_pair(&a, &b)?;
    println!("pair certificate holds: {}\n", cert.holds);

    let qecc = derive_symplectic_pair(&a, &b, &DistanceOptions::default())?;
    let (c, q) = (&qecc.classical, &qecc.quantum);
    println!(
        "stacked ingredient:  [{}, {}, {}] over GF(2) (Hamming)",
        c.length, c.dimension, c.distance
    );
    println!(
        "stabilizer code:     [[{}, {}, {}]]_{}  (distance exact: {})",
        q.length, q.dimension, q.distance, q.base, q.distance_exact
    );
    println!("distance witness:    ({})", qecc.distance_witness.join(", "));
    Ok(())
}
