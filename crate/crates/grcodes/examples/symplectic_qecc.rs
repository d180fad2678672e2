//! A symplectic self-orthogonal element over GF(3) D11 whose code equals its
//! symplectic dual, yielding the degenerate [[11, 0, 5]]_3 stabilizer code.
//!
//! Over an even-order group the image sigma(a) is an n x n matrix with
//! n = 2m, read as m qudit-pair columns. The certificate is
//! M Omega M^T = 0 for the symplectic form Omega; the stabilizer code has
//! length m and dimension m - dim C. Here dim C = 11 = m, so the quantum
//! code encodes nothing — its "distance" is the minimum symplectic weight
//! of the stabilizer itself (a degenerate, dual-gap-free situation the
//! report flags explicitly).
//!
//! ```bash
//! cargo run --example symplectic_qecc
//! ```

use grcodes::code::{DistanceOptions, LinearCode, Metric};
use grcodes::group::GroupTable;
use grcodes::ortho::{check_symplectic_matrix, derive_symplectic};
use grcodes::{parse_element, parse_field, parse_group};
use std::error::Error;
use std::sync::Arc;

fn main() -> Result<(), Box<dyn Error>> {
    let f3 = parse_field("GF(3)")?;
    let d11 = Arc::new(GroupTable::build(&parse_group("D11:form=f1")?)?);
    let a = parse_element(
        &f3,
        &d11,
        "a2 + 2*a4 + a5 + 2*a6 + 2*a7 + 2*a8 + 2*a9 + 2*a10 \
         + 2*b + 2*ba + 2*ba2 + 2*ba3 + 2*ba4 + 2*ba5 + 2*ba6 + 2*ba7 + 2*ba8 + 2*ba9 + 2*ba10",
    )?;
    println!("a = {a}\n");

    let cert = check_symplectic_matrix(&a)?;
    println!("symplectic certificate holds: {}", cert.holds);

    let code = LinearCode::from_group_ring(&a);
    let hamming = code.params(Metric::Hamming, &DistanceOptions::default())?;
    println!(
        "classical ingredient: [{}, {}, {}] over GF(3) (Hamming)",
        hamming.length, hamming.dimension, hamming.distance
    );

    // The code coincides with its symplectic dual.
    let dual = code.dual_symplectic()?;
    println!("code equals its symplectic dual: {}", dual.same_code(&code));

    let qecc = derive_symplectic(&a, &DistanceOptions::default())?;
    let q = &qecc.quantum;
    println!(
        "stabilizer code:      [[{}, {}, {}]]_{}  degenerate_dual_gap = {}",
        q.length, q.dimension, q.distance, q.base, q.degenerate_dual_gap
    );
    println!(
        "distance witness (symplectic weight {}): ({})",
        q.distance,
        qecc.distance_witness.join(", ")
    );
    Ok(())
}
