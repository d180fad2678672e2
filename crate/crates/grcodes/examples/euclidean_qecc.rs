//! A Euclidean self-orthogonal element over C5 x C3 and the [[15, 7, 3]]
//! stabilizer code it certifies.
//!
//! The element a satisfies a a^T = 0, so the rows of sigma(a) span a code
//! contained in its Euclidean dual; the CSS construction then yields a
//! quantum code with n = 15, k = n - 2 dim C, and distance measured over
//! the dual minus the code.
//!
//! ```bash
//! cargo run --example euclidean_qecc
//! ```

use grcodes::code::{DistanceOptions, LinearCode, Metric};
use grcodes::group::GroupTable;
use grcodes::ortho::{check_euclidean, check_euclidean_corollary, derive_euclidean};
use grcodes::{parse_element, parse_field, parse_group};
use std::error::Error;
use std::sync::Arc;

fn main() -> Result<(), Box<dyn Error>> {
    let f2 = parse_field("GF(2)")?;
    let group = Arc::new(GroupTable::build(&parse_group("C5xC3:inner=2")?)?);
    let a = parse_element(&f2, &group, "1 + y2 + x2 + x2y2 + x3y + x3y2 + x4y + x4y2")?;
    println!("a     = {a}");
    println!("a^T   = {}", a.transpose());
    println!("a a^T = {}", a.mul(&a.transpose())?);

    let cert = check_euclidean(&a);
    println!("euclidean certificate holds: {}", cert.holds);

    // This element is not symmetric, so the sufficient condition
    // (a = a^T and a^2 = 0) does not apply even though a a^T = 0.
    let sufficient = check_euclidean_corollary(&a);
    println!("corollary (a = a^T, a^2 = 0) holds: {}\n", sufficient.holds);

    let code = LinearCode::from_group_ring(&a);
    let params = code.params(Metric::Hamming, &DistanceOptions::default())?;
    println!(
        "classical ingredient: [{}, {}, {}] over GF(2)",
        params.length, params.dimension, params.distance
    );

    let qecc = derive_euclidean(&a, &DistanceOptions::default())?;
    let q = &qecc.quantum;
    println!(
        "stabilizer code:      [[{}, {}, {}]]_{}  (distance exact: {})",
        q.length, q.dimension, q.distance, q.base, q.distance_exact
    );
    println!("distance witness:     ({})", qecc.distance_witness.join(", "));

    // The witness lies in the dual but outside the code, which is exactly
    // what the distance of a non-degenerate CSS code measures.
    let witness: Vec<_> = qecc
        .distance_witness
        .iter()
        .map(|lit| f2.parse_literal(lit))
        .collect::<Result<_, _>>()?;
    let dual = code.dual_euclidean();
    assert!(dual.contains(&witness)? && !code.contains(&witness)?);
    println!("the witness lies in the dual but not in the code");
    Ok(())
}
