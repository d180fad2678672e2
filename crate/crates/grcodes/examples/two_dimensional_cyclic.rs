//! Two-dimensional cyclic codes: bivariate generators, reciprocals, and a
//! dual-containing [180, 88] binary code.
//!
//! A 2D-cyclic code of area l x m is an ideal of
//! GF(q)[x, y] / (x^l - 1, y^m - 1). A bivariate divisor g of
//! F = (x^l - 1)(y^m - 1) generates a code whose basis consists of the
//! non-wrapping shifts x^i y^j g, so the dimension is (l - deg_x g)(m - deg_y g).
//! Writing F = g h, the reciprocal code C* = <h*> controls dual containment:
//! C* is a subcode of C exactly when g g* divides F (whenever C* is nonzero).
//!
//! ```bash
//! cargo run --example two_dimensional_cyclic
//! ```

use grcodes::code::{DistanceOptions, Metric};
use grcodes::twod::TwoDCyclicCode;
use grcodes::{parse_bivar, parse_field};
use std::error::Error;

fn main() -> Result<(), Box<dyn Error>> {
    let f2 = parse_field("GF(2)")?;

    // --- Reciprocals are multiplicative in the full polynomial ring -------
    let f1 = parse_bivar(&f2, "x5y4 + x5y2 + x5")?;
    let f2p = parse_bivar(&f2, "x6y5 + x6y4 + y4")?;
    println!("f1          = {f1}");
    println!("f2          = {f2p}");
    println!("f1 f2       = {}", f1.mul(&f2p)?);
    println!("f1*         = {}", f1.reciprocal()?);
    println!("f2*         = {}", f2p.reciprocal()?);
    let lhs = f1.mul(&f2p)?.reciprocal()?;
    let rhs = f1.reciprocal()?.mul(&f2p.reciprocal()?)?;
    assert_eq!(lhs, rhs);
    println!("(f1 f2)*    = {lhs}   (equals f1* f2*)");

    // ... but not in the quotient ring, where reduction can cut degrees
    // before the reflection happens.
    let quotient = f1.mul_mod(&f2p, 8, 6)?;
    let quotient_star = quotient.reciprocal()?;
    assert_ne!(quotient_star, rhs.reduce_exponents(8, 6));
    println!("in GF(2)[x,y]/(x^8-1, y^6-1) the identity fails:");
    println!("  (f1 f2 mod)* = {quotient_star}");
    println!("  f1* f2* mod  = {}\n", rhs.reduce_exponents(8, 6));

    // --- A [180, 88] dual-containing code ---------------------------------
    let g = parse_bivar(&f2, "x4y4 + x4y2 + x4 + x3y4 + x3y2 + x3 + y4 + y2 + 1")?;
    let code = TwoDCyclicCode::new(15, 12, &g)?;
    println!("g  = {g}");
    println!("C  = [{}, {}]  (formula dimension matches: {})",
        code.length(), code.dimension(), code.matches_formula());
    println!("h  = F / g has {} terms", code.h().term_count());
    println!("h* = {}", code.star_generator());

    let gg = g.mul(&g.reciprocal()?)?;
    println!("g g* has {} terms and divides F: {}",
        gg.term_count(),
        gg.reduce_exponents(15, 12).divides(&code.relation())?);

    // C* = <h*> is a subcode of C, so the Euclidean dual of C is contained
    // in C up to the correspondence C^perp = C*^(reversed); concretely the
    // reciprocal code sits inside the dual.
    println!("C* is a subcode of C: {}", code.contains_star()?);
    let star = code.dual_star()?;
    let opts = DistanceOptions::default();
    let star_params = star.code().params(Metric::Hamming, &opts)?;
    println!(
        "C* = [{}, {}, {}]  (distance exact: {})",
        star_params.length, star_params.dimension, star_params.distance, star_params.distance_exact
    );
    assert!(star.code().is_subcode_of(&code.code().dual_euclidean())?);

    // C itself is not self-orthogonal: that stronger property needs F | g g*.
    println!("C self-orthogonal: {}", code.is_self_orthogonal());

    // --- The divisibility criterion is sufficient, not necessary ----------
    // Over l = 4, m = 3 the code generated by (x^2 + 1)(y + 1) is
    // self-orthogonal even though F does not divide g g*.
    let small = TwoDCyclicCode::new(4, 3, &parse_bivar(&f2, "x2y + x2 + y + 1")?)?;
    println!(
        "\n[{}, {}] with g = {}: self-orthogonal = {}, criterion F | g g* = {}",
        small.length(),
        small.dimension(),
        small.generator_poly(),
        small.is_self_orthogonal(),
        small.self_orthogonality_criterion()?
    );

    // The smallest self-orthogonal 2D-cyclic code, where the criterion does
    // bite: g = (x + 1)(y + 1) over area 2 x 2.
    let tiny = TwoDCyclicCode::new(2, 2, &parse_bivar(&f2, "xy + x + y + 1")?)?;
    let tiny_params = tiny.code().params(Metric::Hamming, &opts)?;
    println!(
        "[{}, {}, {}] with g = {}: self-orthogonal = {}, criterion = {}",
        tiny_params.length,
        tiny_params.dimension,
        tiny_params.distance,
        tiny.generator_poly(),
        tiny.is_self_orthogonal(),
        tiny.self_orthogonality_criterion()?
    );
    Ok(())
}
