//! End-to-end acceptance suite: one test per criterion, each printing a
//! single pass line (the harness itself reports failures). Frozen expected
//! values were computed with an independent implementation before these
//! tests were written.

mod fixtures;

use grcodes::code::{DistanceOptions, LinearCode, Metric};
use grcodes::field::{Field, FieldElement};
use grcodes::matrix::Matrix;
use grcodes::group::GroupTable;
use grcodes::ortho::{
    check_euclidean, check_hermitian, check_symplectic_matrix, check_symplectic_pair,
    derive_euclidean, derive_hermitian, derive_symplectic, derive_symplectic_pair,
};
use grcodes::ring::GroupRingElement;
use grcodes::search::{SearchConfig, SearchKind, SearchMode};
use grcodes::twod::{BivarPoly, TwoDCyclicCode};
use grcodes::{parse_bivar, parse_element, parse_field, parse_group, run_search, to_jsonl};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;
use std::time::{Duration, Instant};

fn table(spec: &str) -> Arc<GroupTable> {
    Arc::new(GroupTable::build(&parse_group(spec).unwrap()).unwrap())
}

fn random_element(rng: &mut ChaCha8Rng, field: &Field, group: &Arc<GroupTable>) -> GroupRingElement {
    let values: Vec<FieldElement> = field.elements().collect();
    let mut a = GroupRingElement::zero(field, group);
    for i in 0..group.order() {
        a.set_coeff(i, values[rng.gen_range(0..values.len())]);
    }
    a
}

fn pass(criterion: u32, label: &str, started: Instant, limit: Duration) {
    let elapsed = started.elapsed();
    assert!(
        elapsed < limit,
        "criterion {criterion} took {} ms, over the {} ms limit",
        elapsed.as_millis(),
        limit.as_millis()
    );
    println!("criterion {criterion} ({label}): pass in {} ms", elapsed.as_millis());
}

#[test]
fn criterion_01_sigma_homomorphism_suite() {
    let started = Instant::now();
    let cases = [
        ("GF(2)", "C7"),
        ("GF(3)", "D4"),
        ("GF(2)", "C5xC3"),
        ("GF(2)", "C3xD3"),
        ("GF(9)", "D5"),
        ("GF(2)", "Q8"),
        ("GF(2)", "C5sd2C4"),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0x51E_0001);
    for (field_spec, group_spec) in cases {
        let field = parse_field(field_spec).unwrap();
        let group = table(group_spec);
        for _ in 0..200 {
            let a = random_element(&mut rng, &field, &group);
            let b = random_element(&mut rng, &field, &group);
            assert_eq!(
                a.mul(&b).unwrap().sigma(),
                a.sigma().mul(&b.sigma()).unwrap(),
                "sigma(ab) = sigma(a) sigma(b) over {field_spec} {group_spec}"
            );
            assert_eq!(
                a.transpose().sigma(),
                a.sigma().transpose(),
                "sigma(a^T) = sigma(a)^T over {field_spec} {group_spec}"
            );
        }
    }
    pass(1, "sigma homomorphism suite", started, Duration::from_secs(5));
}

/// The explicit dihedral block constructions: with rotations listed first,
/// the four n x n blocks of the pattern are circulant / reverse-circulant in
/// the combinations fixed by where the reflection sits in the words.
fn dihedral_pattern(n: usize, reflection_on_left: bool) -> Vec<Vec<usize>> {
    let rot = |d: usize| d % n;
    let refl = |s: usize| n + s % n;
    (0..2 * n)
        .map(|i| {
            (0..2 * n)
                .map(|j| {
                    let (ri, rj) = (i % n, j % n);
                    match (i < n, j < n, reflection_on_left) {
                        (true, true, _) | (false, false, true) => rot(n + rj - ri),
                        (false, false, false) => rot(n + ri - rj),
                        (true, false, true) | (false, true, true) => refl(ri + rj),
                        (true, false, false) => refl(n + rj - ri),
                        (false, true, false) => refl(n + ri - rj),
                    }
                })
                .collect()
        })
        .collect()
}

#[test]
fn criterion_02_block_form_suite() {
    let started = Instant::now();

    // Dihedral forms f1 (b a^k words) and f2 (a^k b words) for three sizes.
    for n in [3usize, 5, 8] {
        let f1 = table(&format!("D{n}:form=f1"));
        assert_eq!(f1.sigma_pattern(), dihedral_pattern(n, true), "D{n} form f1");
        let f2 = table(&format!("D{n}:form=f2"));
        assert_eq!(f2.sigma_pattern(), dihedral_pattern(n, false), "D{n} form f2");
    }

    // Frozen product-listing patterns (1-based in the fixtures).
    fn assert_pattern<const N: usize>(spec: &str, expected: &[[u16; N]; N]) {
        let got = table(spec).sigma_pattern();
        assert_eq!(got.len(), N, "{spec} order");
        for i in 0..N {
            for j in 0..N {
                assert_eq!(
                    got[i][j] + 1,
                    expected[i][j] as usize,
                    "{spec} pattern entry ({i}, {j})"
                );
            }
        }
    }
    assert_pattern("C3xC5:form=f1", &fixtures::C3XC5_F1);
    assert_pattern("C3xC5:form=f2", &fixtures::C3XC5_F2);
    assert_pattern("C3xD3:form=f1", &fixtures::C3XD3_F1);
    assert_pattern("C2xD5:form=f2", &fixtures::C2XD5_F2);
    assert_pattern("C5xD3:form=f3", &fixtures::C5XD3_F3);
    assert_pattern("C2xD5:form=f4", &fixtures::C2XD5_F4);

    pass(2, "block form suite", started, Duration::from_secs(2));
}

#[test]
fn criterion_03_euclidean_qecc() {
    let started = Instant::now();
    let f2 = parse_field("GF(2)").unwrap();
    let group = table("C5xC3:inner=2");
    let a =
        parse_element(&f2, &group, "1 + y2 + x2 + x2y2 + x3y + x3y2 + x4y + x4y2").unwrap();
    assert!(a.mul(&a.transpose()).unwrap().support_weight() == 0, "a a^T = 0");
    assert!(check_euclidean(&a).holds);

    let opts = DistanceOptions { budget: 1 << 12, fallback_samples: None, seed: 0, early_stop: None };
    let qecc = derive_euclidean(&a, &opts).unwrap();
    let c = &qecc.classical;
    assert_eq!((c.length, c.dimension, c.distance, c.distance_exact), (15, 4, 8, true));
    let q = &qecc.quantum;
    assert_eq!((q.length, q.dimension, q.distance), (15, 7, 3));
    assert!(q.distance_exact, "quantum distance scanned exactly over the 2^11 dual codewords");
    assert_eq!(q.base, 2);
    assert!(!q.degenerate_dual_gap);
    pass(3, "euclidean [[15,7,3]]_2", started, Duration::from_secs(1));
}

#[test]
fn criterion_04_hermitian_qecc() {
    let started = Instant::now();
    let f9 = parse_field("GF(9)").unwrap();
    let d5 = table("D5:form=f1");
    // Coefficient exponent template; reading w -> w^e multiplies exponents
    // by e. Entries 0 and 4 are the subfield values 1 and 2.
    let exponents: [u32; 10] = [0, 5, 4, 6, 3, 2, 6, 7, 7, 7];
    let mut holding = Vec::new();
    for e in [1u32, 3, 5, 7] {
        let mut a = GroupRingElement::zero(&f9, &d5);
        for (i, &c) in exponents.iter().enumerate() {
            a.set_coeff(i, f9.primitive_power((c * e) as i64));
        }
        if check_hermitian(&a).unwrap().holds {
            holding.push(e);
            assert!(
                a.mul(&a.frobenius().transpose()).unwrap().support_weight() == 0,
                "a (a^3)^T = 0 in the ring"
            );
            let opts =
                DistanceOptions { budget: 1 << 20, fallback_samples: None, seed: 0, early_stop: None };
            let qecc = derive_hermitian(&a, &opts).unwrap();
            let c = &qecc.classical;
            assert_eq!((c.length, c.dimension, c.distance, c.distance_exact), (10, 4, 6, true));
            let q = &qecc.quantum;
            assert_eq!((q.length, q.dimension, q.distance, q.base), (10, 2, 4, 3));
            assert!(q.distance_exact, "distance scanned exactly over the 9^6 dual codewords");
        }
    }
    assert_eq!(holding, vec![1, 3], "exactly the readings w -> w^1 and w -> w^3 certify");
    pass(4, "hermitian [[10,2,4]]_3", started, Duration::from_secs(30));
}

#[test]
fn criterion_05_symplectic_qecc() {
    let started = Instant::now();
    let f3 = parse_field("GF(3)").unwrap();
    let d11 = table("D11:form=f1");
    let a = parse_element(
        &f3,
        &d11,
        "a2 + 2*a4 + a5 + 2*a6 + 2*a7 + 2*a8 + 2*a9 + 2*a10 \
         + 2*b + 2*ba + 2*ba2 + 2*ba3 + 2*ba4 + 2*ba5 + 2*ba6 + 2*ba7 + 2*ba8 + 2*ba9 + 2*ba10",
    )
    .unwrap();
    assert!(check_symplectic_matrix(&a).unwrap().holds, "M Omega M^T = O");

    let opts = DistanceOptions { budget: 1 << 18, fallback_samples: None, seed: 0, early_stop: None };
    let qecc = derive_symplectic(&a, &opts).unwrap();
    let c = &qecc.classical;
    assert_eq!((c.length, c.dimension, c.distance, c.distance_exact), (22, 11, 6, true));
    let q = &qecc.quantum;
    assert_eq!((q.length, q.dimension, q.distance, q.base), (11, 0, 5, 3));
    assert!(q.distance_exact);
    assert!(q.degenerate_dual_gap, "the code equals its symplectic dual");
    pass(5, "symplectic [[11,0,5]]_3 degenerate", started, Duration::from_secs(30));
}

#[test]
fn criterion_06_symplectic_pair_qecc() {
    let started = Instant::now();
    let f2 = parse_field("GF(2)").unwrap();
    let d5 = table("D5:form=f1");
    let a = parse_element(&f2, &d5, "1 + a + a2 + a3 + ba + ba2").unwrap();
    let b = parse_element(&f2, &d5, "1 + b + ba + ba3").unwrap();
    assert_eq!(
        a.mul(&b.transpose()).unwrap(),
        b.mul(&a.transpose()).unwrap(),
        "a b^T = b a^T"
    );
    assert!(check_symplectic_pair(&a, &b).unwrap().holds);

    let opts = DistanceOptions { budget: 1 << 12, fallback_samples: None, seed: 0, early_stop: None };
    let qecc = derive_symplectic_pair(&a, &b, &opts).unwrap();
    let c = &qecc.classical;
    assert_eq!((c.length, c.dimension, c.distance, c.distance_exact), (20, 9, 6, true));
    let q = &qecc.quantum;
    assert_eq!((q.length, q.dimension, q.distance, q.base), (10, 1, 4, 2));
    assert!(q.distance_exact);
    pass(6, "symplectic pair [[10,1,4]]_2", started, Duration::from_secs(5));
}

fn grid(xs: &[u32], ys: &[u32]) -> Vec<(u32, u32)> {
    let mut out: Vec<(u32, u32)> =
        xs.iter().flat_map(|&i| ys.iter().map(move |&j| (i, j))).collect();
    out.sort_unstable();
    out
}

fn exponents(p: &BivarPoly) -> Vec<(u32, u32)> {
    p.terms().into_iter().map(|(i, j, _)| (i, j)).collect()
}

#[test]
fn criterion_07_two_dimensional_example() {
    let started = Instant::now();
    let f2 = parse_field("GF(2)").unwrap();
    let g = parse_bivar(&f2, "x4y4 + x4y2 + x4 + x3y4 + x3y2 + x3 + y4 + y2 + 1").unwrap();
    let code = TwoDCyclicCode::new(15, 12, &g).unwrap();
    assert_eq!(code.dimension(), 88, "dimension by rank");
    assert!(code.matches_formula());

    // h and h* term for term.
    assert_eq!(
        exponents(&code.h()),
        grid(&[11, 10, 9, 8, 6, 4, 3, 0], &[8, 6, 2, 0]),
        "h = F / g"
    );
    assert_eq!(
        exponents(&code.star_generator()),
        grid(&[11, 8, 7, 5, 3, 2, 1, 0], &[8, 6, 2, 0]),
        "h* term for term"
    );

    // g* and the 21-term product g g*, term for term.
    let g_star = g.reciprocal().unwrap();
    assert_eq!(exponents(&g_star), grid(&[4, 1, 0], &[4, 2, 0]), "g*");
    let gg = g.mul(&g_star).unwrap();
    assert_eq!(exponents(&gg), grid(&[8, 7, 5, 4, 3, 1, 0], &[8, 4, 0]), "g g* term for term");
    assert!(gg.reduce_exponents(15, 12).divides(&code.relation()).unwrap());
    assert!(code.contains_star().unwrap(), "dual-containing verdict");

    // C* = [180, 16, 32] with the distance scanned exactly over 2^16 codewords.
    let star = code.dual_star().unwrap();
    let opts = DistanceOptions { budget: 1 << 16, fallback_samples: None, seed: 0, early_stop: None };
    let star_params = star.code().params(Metric::Hamming, &opts).unwrap();
    assert_eq!(
        (star_params.length, star_params.dimension, star_params.distance),
        (180, 16, 32)
    );
    assert!(star_params.distance_exact);

    // A weight-6 codeword of C itself, found by seeded information-set
    // search within 10^6 samples. The exact distance of a [180, 88] code is
    // out of reach; the upper bound is what the search certifies.
    let found = code
        .code()
        .min_weight_upper_bound(Metric::Hamming, 1_000_000, 2024, Some(6))
        .unwrap();
    assert_eq!(found.weight, 6, "weight-6 codeword located");
    assert!(!found.exact);
    assert!(code.code().contains(&found.witness).unwrap());
    pass(7, "two-dimensional [180,88] example", started, Duration::from_secs(60));
}

#[test]
fn criterion_08_reciprocal_remark() {
    let started = Instant::now();
    let f2 = parse_field("GF(2)").unwrap();
    let f1 = parse_bivar(&f2, "x5y4 + x5y2 + x5").unwrap();
    let f2p = parse_bivar(&f2, "x6y5 + x6y4 + y4").unwrap();

    // The four printed polynomials: both reciprocals, the full-ring product,
    // and the quotient-ring product over l = 8, m = 6.
    assert_eq!(
        f1.reciprocal().unwrap(),
        parse_bivar(&f2, "y4 + y2 + 1").unwrap(),
        "f1*"
    );
    assert_eq!(
        f2p.reciprocal().unwrap(),
        parse_bivar(&f2, "x6y + y + 1").unwrap(),
        "f2*"
    );
    let full = f1.mul(&f2p).unwrap();
    assert_eq!(
        full,
        parse_bivar(&f2, "x11y9 + x11y8 + x11y7 + x11y6 + x11y5 + x11y4 + x5y8 + x5y6 + x5y4")
            .unwrap(),
        "f1 f2 in the full ring"
    );
    let quotient = f1.mul_mod(&f2p, 8, 6).unwrap();
    assert_eq!(
        quotient,
        parse_bivar(&f2, "x5y4 + x5y2 + x5 + x3y5 + x3y4 + x3y3 + x3y2 + x3y + x3").unwrap(),
        "f1 f2 in the quotient ring"
    );

    // Multiplicativity holds in the full ring and fails in the quotient.
    let star_product = f1.reciprocal().unwrap().mul(&f2p.reciprocal().unwrap()).unwrap();
    assert_eq!(full.reciprocal().unwrap(), star_product, "(f1 f2)* = f1* f2*");
    assert_ne!(
        quotient.reciprocal().unwrap(),
        star_product.reduce_exponents(8, 6),
        "the identity fails after reduction"
    );
    pass(8, "reciprocal product identities", started, Duration::from_secs(5));
}

fn naive_min_weight(code: &LinearCode, metric: Metric) -> Option<usize> {
    let field = code.field();
    let values: Vec<FieldElement> = field.elements().collect();
    let basis = code.basis();
    let (k, n) = (basis.rows(), basis.cols());
    if k == 0 {
        return None;
    }
    let mut best: Option<usize> = None;
    let mut message = vec![0usize; k];
    loop {
        // advance the odometer
        let mut t = 0;
        while t < k {
            message[t] += 1;
            if message[t] < values.len() {
                break;
            }
            message[t] = 0;
            t += 1;
        }
        if t == k {
            break;
        }
        let mut word = vec![field.zero(); n];
        for (r, &digit) in message.iter().enumerate() {
            if digit == 0 {
                continue;
            }
            for (c, slot) in word.iter_mut().enumerate() {
                *slot = field.add(*slot, field.mul(values[digit], basis.get(r, c)));
            }
        }
        let w = metric.weight(&word);
        if w > 0 && best.is_none_or(|b| w < b) {
            best = Some(w);
        }
    }
    best
}

fn random_poly(rng: &mut ChaCha8Rng, field: &Field, terms: usize, max_deg: u32) -> BivarPoly {
    let values: Vec<FieldElement> = field.elements().collect();
    let picks: Vec<(u32, u32, FieldElement)> = (0..terms)
        .map(|_| {
            (
                rng.gen_range(0..=max_deg),
                rng.gen_range(0..=max_deg),
                values[rng.gen_range(1..values.len())],
            )
        })
        .collect();
    BivarPoly::from_terms(field, &picks)
}

fn random_matrix(rng: &mut ChaCha8Rng, field: &Field, rows: usize, cols: usize) -> Matrix {
    let values: Vec<FieldElement> = field.elements().collect();
    let mut m = Matrix::zero(field, rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m.set(i, j, values[rng.gen_range(0..values.len())]);
        }
    }
    m
}

#[test]
fn criterion_09_property_suites() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x51E_0009);
    let mut cases = 0usize;

    // Reciprocals are multiplicative in the full bivariate ring.
    for q in [2u64, 3, 4, 5, 9] {
        let field = parse_field(&format!("GF({q})")).unwrap();
        for _ in 0..80 {
            let terms_f = rng.gen_range(1..=6);
            let terms_g = rng.gen_range(1..=6);
            let f = random_poly(&mut rng, &field, terms_f, 5);
            let g = random_poly(&mut rng, &field, terms_g, 5);
            if f.is_zero() || g.is_zero() {
                continue;
            }
            let lhs = f.mul(&g).unwrap().reciprocal().unwrap();
            let rhs = f.reciprocal().unwrap().mul(&g.reciprocal().unwrap()).unwrap();
            assert_eq!(lhs, rhs, "(fg)* = f* g* over GF({q})");
            cases += 1;
        }
    }

    // dim C + dim C-dual = n for all three inner products; quadratic
    // extension fields so the Hermitian dual exists.
    for q in [4u64, 9] {
        let field = parse_field(&format!("GF({q})")).unwrap();
        for _ in 0..150 {
            let n = 2 * rng.gen_range(1..=5usize);
            let k = rng.gen_range(1..=n);
            let code = LinearCode::from_generator(random_matrix(&mut rng, &field, k, n));
            let d = code.dimension();
            assert_eq!(code.dual_euclidean().dimension(), n - d, "euclidean dual dimension");
            assert_eq!(
                code.dual_hermitian().unwrap().dimension(),
                n - d,
                "hermitian dual dimension"
            );
            assert_eq!(
                code.dual_symplectic().unwrap().dimension(),
                n - d,
                "symplectic dual dimension"
            );
            cases += 3;
        }
    }

    // min_weight against a naive full re-enumeration, both metrics.
    let opts = DistanceOptions { budget: 1 << 22, fallback_samples: None, seed: 0, early_stop: None };
    for q in [2u64, 3, 4] {
        let field = parse_field(&format!("GF({q})")).unwrap();
        for i in 0..70 {
            let n = 2 * rng.gen_range(2..=6usize);
            let k = rng.gen_range(1..=6usize.min(n));
            let code = LinearCode::from_generator(random_matrix(&mut rng, &field, k, n));
            if code.dimension() == 0 {
                continue;
            }
            let metric = if i % 2 == 0 { Metric::Hamming } else { Metric::Symplectic };
            let fast = code.min_weight(metric, &opts).unwrap();
            assert!(fast.exact);
            assert_eq!(Some(fast.weight), naive_min_weight(&code, metric), "min weight oracle");
            assert_eq!(metric.weight(&fast.witness), fast.weight, "witness attains the weight");
            cases += 1;
        }
    }

    // Shift closure for every divisor of (x^4 - 1)(y^3 - 1) over GF(2) that
    // generates a nonzero code: subset products of the irreducible factors
    // (x + 1)^4 and (y + 1)(y^2 + y + 1).
    let f2 = parse_field("GF(2)").unwrap();
    let xp1 = parse_bivar(&f2, "x + 1").unwrap();
    let yp1 = parse_bivar(&f2, "y + 1").unwrap();
    let yy1 = parse_bivar(&f2, "y2 + y + 1").unwrap();
    let mut scanned = 0;
    for a in 0..=4u32 {
        for b in 0..=1u32 {
            for c in 0..=1u32 {
                let mut g = BivarPoly::one(&f2);
                for _ in 0..a {
                    g = g.mul(&xp1).unwrap();
                }
                for _ in 0..b {
                    g = g.mul(&yp1).unwrap();
                }
                for _ in 0..c {
                    g = g.mul(&yy1).unwrap();
                }
                if g.reduce_exponents(4, 3).is_zero() {
                    continue;
                }
                let code = TwoDCyclicCode::new(4, 3, &g).unwrap();
                assert!(code.is_shift_closed(), "shift closure for exponents ({a},{b},{c})");
                assert!(code.matches_formula());
                scanned += 1;
                cases += 1;
            }
        }
    }
    assert_eq!(scanned, 12, "every nonzero-code divisor scanned");

    assert!(cases >= 1000, "at least 1000 property cases, got {cases}");
    pass(9, "property suites", started, Duration::from_secs(120));
}

#[test]
fn criterion_10_search_determinism() {
    let started = Instant::now();
    let config = SearchConfig {
        field: "GF(2)".into(),
        group: "D5".into(),
        kind: SearchKind::SymplecticPair,
        mode: SearchMode::Random,
        max_support_weight: 6,
        seed: 42,
        budget: 256,
        distance_budget: 1 << 16,
    };
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(|| run_search(&config).unwrap());
    let many = rayon::ThreadPoolBuilder::new()
        .num_threads(rayon::current_num_threads().max(4))
        .build()
        .unwrap()
        .install(|| run_search(&config).unwrap());
    let left = to_jsonl(&single);
    let right = to_jsonl(&many);
    assert!(!left.is_empty(), "the search finds at least one record");
    assert_eq!(left.as_bytes(), right.as_bytes(), "byte-identical JSON lines");
    pass(10, "search determinism across thread counts", started, Duration::from_secs(60));
}
