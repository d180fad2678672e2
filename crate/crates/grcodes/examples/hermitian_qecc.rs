//! A Hermitian self-orthogonal element over GF(9) D5 and the [[10, 2, 4]]_3
//! stabilizer code it certifies.
//!
//! Over GF(p^2) the Hermitian condition is a (a^p)^T = 0, where a^p raises
//! every coefficient to the p-th power. A coefficient list written in terms
//! of "a primitive element w" is ambiguous: w could denote any primitive
//! root, i.e. any w^e with gcd(e, 8) = 1. This example tries all four
//! readings and derives the quantum code for those that certify.
//!
//! ```bash
//! cargo run --example hermitian_qecc
//! ```

use grcodes::group::GroupTable;
use grcodes::code::DistanceOptions;
use grcodes::ortho::{check_hermitian, derive_hermitian};
use grcodes::ring::GroupRingElement;
use grcodes::{parse_field, parse_group};
use std::error::Error;
use std::sync::Arc;

// Exponent template: coefficient at listing position i is w^(EXPONENTS[i] * e)
// under the reading w -> w^e; `None` marks a zero coefficient (none here).
// Exponents 0 and 4 are the prime-subfield values 1 and 2, which every
// reading fixes.
const EXPONENTS: [u32; 10] = [0, 5, 4, 6, 3, 2, 6, 7, 7, 7];

fn main() -> Result<(), Box<dyn Error>> {
    let f9 = parse_field("GF(9)")?;
    let d5 = Arc::new(GroupTable::build(&parse_group("D5:form=f1")?)?);

    for e in [1u32, 3, 5, 7] {
        let mut a = GroupRingElement::zero(&f9, &d5);
        for (i, &c) in EXPONENTS.iter().enumerate() {
            a.set_coeff(i, f9.primitive_power((c * e) as i64));
        }
        let cert = check_hermitian(&a)?;
        println!("reading w -> w^{e}: a = {a}");
        println!("  hermitian certificate holds: {}", cert.holds);
        if cert.holds {
            let qecc = derive_hermitian(&a, &DistanceOptions::default())?;
            let (c, q) = (&qecc.classical, &qecc.quantum);
            println!(
                "  [{}, {}, {}] over GF(9)  ->  [[{}, {}, {}]]_{}",
                c.length, c.dimension, c.distance, q.length, q.dimension, q.distance, q.base
            );
        }
        println!();
    }
    Ok(())
}
