//! Build finite fields and group listings and print their structure.
//!
//! ```bash
//! cargo run --example field_and_group_tables
//! ```

use grcodes::group::GroupTable;
use grcodes::{parse_field, parse_group};
use std::error::Error;

fn main() -> Result<(), Box<dyn Error>> {
    // GF(9) = GF(3)[x] / (x^2 + 2x + 2), with w the class of x. Every nonzero
    // element is a power of w; prime-subfield values print as plain digits.
    let f9 = parse_field("GF(9)")?;
    println!("{f9}: q = {}, p = {}, k = {}", f9.q(), f9.p(), f9.k());
    let powers: Vec<String> = (0..8).map(|e| f9.literal(f9.primitive_power(e))).collect();
    println!("  powers of w: {}", powers.join(", "));
    let w = f9.primitive();
    let sum = f9.add(w, f9.one());
    println!("  w + 1 = {}   w * w = {}", f9.literal(sum), f9.literal(f9.mul(w, w)));

    // The same field pinned explicitly to its modulus: the two constructions
    // interoperate because they share a representation.
    let pinned = parse_field("GF(3^2;modulus=2,2,1)")?;
    assert_eq!(pinned, f9);
    println!("  GF(3^2;modulus=2,2,1) is the same field\n");

    // A dihedral group of order 10 in the listing {e, a, .., a4, b, ba, .., ba4}.
    let d5 = GroupTable::build(&parse_group("D5")?)?;
    println!("{} of order {}", d5.spec(), d5.order());
    println!("  words: {}", d5.words().join(", "));
    let inverses: Vec<&str> = (0..d5.order()).map(|i| d5.word(d5.inv(i))).collect();
    println!("  inverses: {}", inverses.join(", "));

    // Products respect listing choices: `inner=2` nests the second factor
    // innermost, so C5 x C3 lists e, y, y2, x, xy, xy2, ...
    let c15 = GroupTable::build(&parse_group("C5xC3:inner=2")?)?;
    println!("\n{} of order {}", c15.spec(), c15.order());
    println!("  first six words: {}", c15.words()[..6].join(", "));

    // A few Cayley-table rows of D5: b * a = ba4... in this presentation
    // ab = ba^{-1}, which the table encodes positionally.
    println!("\nproducts in {}:", d5.spec());
    for (x, y) in [("a", "b"), ("b", "a"), ("ba", "ba"), ("a4", "a")] {
        let i = d5.index_of_word(x)?;
        let j = d5.index_of_word(y)?;
        println!("  {x} * {y} = {}", d5.word(d5.mul(i, j)));
    }

    // The quaternion group Q8 = {e, a, a2, a3, b, ab, a2b, a3b} with
    // b^2 = a^2 and ba = a^3 b.
    let q8 = GroupTable::build(&parse_group("Q8")?)?;
    println!("\n{} of order {}", q8.spec(), q8.order());
    let b = q8.index_of_word("b")?;
    let a = q8.index_of_word("a")?;
    println!("  b * b = {}", q8.word(q8.mul(b, b)));
    println!("  b * a = {}", q8.word(q8.mul(b, a)));
    Ok(())
}
