//! JSON report builders shared by the command-line interface and the
//! integration tests.
//!
//! Every builder returns a [`serde_json::Value`] whose shape is pinned by
//! `schemas/report.schema.json`; a schema test keeps the two in sync. Reports
//! are plain data — rendering (stdout, files) is the caller's business.

use crate::code::{CodeParams, DistanceOptions, LinearCode, Metric};
use crate::error::Result;
use crate::field::Field;
use crate::group::GroupTable;
use crate::matrix::Matrix;
use crate::ortho::{OrthoCertificate, QeccDerivation};
use crate::ring::GroupRingElement;
use crate::twod::{BivarPoly, TwoDCyclicCode};
use serde_json::{json, Map, Value};

/// Cayley and arithmetic tables are embedded only up to this side length;
/// beyond it the report notes `tables_omitted` instead of shipping megabytes.
pub const MAX_TABLE_SIDE: usize = 64;

/// Rows of a matrix rendered as field literals.
pub fn matrix_rows(m: &Matrix) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|i| {
            Value::Array(
                (0..m.cols())
                    .map(|j| Value::String(m.field().literal(m.get(i, j))))
                    .collect(),
            )
        })
        .collect();
    Value::Array(rows)
}

/// The `code` report: a group ring element, its code parameters, and the
/// sigma image that generates the code.
pub fn code_report(element: &GroupRingElement, params: &CodeParams, generator: &Matrix) -> Value {
    json!({
        "report": "code",
        "field": element.field().to_string(),
        "group": element.group().spec().to_string(),
        "element": element.to_string(),
        "params": params,
        "generator": matrix_rows(generator),
    })
}

fn qecc_common(a: &GroupRingElement, b: Option<&GroupRingElement>) -> Map<String, Value> {
    let mut out = Map::new();
    out.insert("report".into(), "qecc".into());
    out.insert("field".into(), a.field().to_string().into());
    out.insert("group".into(), a.group().spec().to_string().into());
    out.insert("element".into(), a.to_string().into());
    if let Some(b) = b {
        out.insert("element_b".into(), b.to_string().into());
    }
    out
}

/// The `qecc` report for a holding certificate: certificate, quantum
/// parameters with the classical ingredient nested inside, and the codeword
/// witnessing the distance.
pub fn qecc_report(
    a: &GroupRingElement,
    b: Option<&GroupRingElement>,
    derivation: &QeccDerivation,
) -> Value {
    let mut quantum = serde_json::to_value(&derivation.quantum).expect("qecc params serialize");
    quantum.as_object_mut().expect("qecc params form an object").insert(
        "classical".into(),
        serde_json::to_value(&derivation.classical).expect("code params serialize"),
    );
    let mut out = qecc_common(a, b);
    out.insert(
        "certificate".into(),
        serde_json::to_value(&derivation.certificate).expect("certificate serializes"),
    );
    out.insert("qecc".into(), quantum);
    out.insert("distance_witness".into(), json!(derivation.distance_witness));
    Value::Object(out)
}

/// The `qecc` report for a failed certificate: no parameters are derived, the
/// offending product entries are listed instead.
pub fn qecc_failure_report(
    a: &GroupRingElement,
    b: Option<&GroupRingElement>,
    cert: &OrthoCertificate,
) -> Value {
    let mut out = qecc_common(a, b);
    out.insert(
        "certificate".into(),
        serde_json::to_value(cert).expect("certificate serializes"),
    );
    Value::Object(out)
}

/// `[n, k]`, with the distance appended only once it is known exactly.
fn params_triple(p: &CodeParams) -> Value {
    if p.distance_exact {
        json!([p.length, p.dimension, p.distance])
    } else {
        json!([p.length, p.dimension])
    }
}

fn distance_entry(p: &CodeParams) -> Value {
    json!({ "d": p.distance, "exact": p.distance_exact })
}

fn zero_dim_params(code: &LinearCode) -> Value {
    json!([code.length(), 0])
}

/// The `twod` report. When `g` does not divide the relation polynomial the
/// report carries `divides: false` and stops there — a verdict, not an error.
/// `dual_containing` is `null` when the reciprocal code is zero, because the
/// containment equivalence only speaks about nonzero reciprocal codes.
pub fn twod_report(
    field: &Field,
    l: u32,
    m: u32,
    g: &BivarPoly,
    opts: &DistanceOptions,
) -> Result<Value> {
    let g = g.reduce_exponents(l, m);
    let relation = BivarPoly::relation(field, l, m);
    let mut out = Map::new();
    out.insert("report".into(), "twod".into());
    out.insert("field".into(), field.to_string().into());
    out.insert("q".into(), field.q().into());
    out.insert("l".into(), l.into());
    out.insert("m".into(), m.into());
    out.insert("g".into(), g.to_string().into());
    out.insert("F".into(), relation.to_string().into());
    if !g.divides(&relation)? {
        out.insert("divides".into(), false.into());
        return Ok(Value::Object(out));
    }
    out.insert("divides".into(), true.into());

    let code = TwoDCyclicCode::new(l, m, &g)?;
    out.insert("h".into(), code.h().to_string().into());
    out.insert("dimension_formula_matches".into(), code.matches_formula().into());
    out.insert("shift_closed".into(), code.is_shift_closed().into());

    let c_params = code.code().params(Metric::Hamming, opts)?;
    out.insert("C".into(), params_triple(&c_params));
    out.insert("C_distance".into(), distance_entry(&c_params));

    let star_gen = code.star_generator();
    let star = code.star_code();
    if star.dimension() == 0 {
        out.insert("Cstar".into(), zero_dim_params(&star));
        out.insert("dual_containing".into(), Value::Null);
    } else {
        out.insert("h_star".into(), star_gen.to_string().into());
        let s_params = star.params(Metric::Hamming, opts)?;
        out.insert("Cstar".into(), params_triple(&s_params));
        out.insert("Cstar_distance".into(), distance_entry(&s_params));
        out.insert("dual_containing".into(), code.contains_star()?.into());
    }
    out.insert("self_orthogonal".into(), code.is_self_orthogonal().into());
    out.insert(
        "self_orthogonal_criterion".into(),
        code.self_orthogonality_criterion()?.into(),
    );
    Ok(Value::Object(out))
}

/// The `field-table` report: structure constants and, for small fields, full
/// addition and multiplication tables in literal form.
pub fn field_table_report(field: &Field) -> Value {
    let literals: Vec<String> = field.elements().map(|e| field.literal(e)).collect();
    let mut out = Map::new();
    out.insert("report".into(), "field-table".into());
    out.insert("field".into(), field.to_string().into());
    out.insert("q".into(), field.q().into());
    out.insert("p".into(), field.p().into());
    out.insert("k".into(), field.k().into());
    out.insert("modulus".into(), json!(field.modulus()));
    out.insert("primitive".into(), field.literal(field.primitive()).into());
    out.insert("elements".into(), json!(literals));
    if field.q() as usize <= MAX_TABLE_SIDE {
        let table = |op: &dyn Fn(usize, usize) -> String| -> Value {
            let els: Vec<_> = field.elements().collect();
            Value::Array(
                (0..els.len())
                    .map(|i| {
                        Value::Array((0..els.len()).map(|j| Value::String(op(i, j))).collect())
                    })
                    .collect(),
            )
        };
        let els: Vec<_> = field.elements().collect();
        out.insert(
            "add".into(),
            table(&|i, j| field.literal(field.add(els[i], els[j]))),
        );
        out.insert(
            "mul".into(),
            table(&|i, j| field.literal(field.mul(els[i], els[j]))),
        );
    } else {
        out.insert("tables_omitted".into(), true.into());
    }
    Value::Object(out)
}

/// The `group-table` report: the listing, inverses, generator orders, and for
/// small groups the full Cayley table in word form.
pub fn group_table_report(table: &GroupTable) -> Value {
    let n = table.order();
    let words: Vec<&str> = (0..n).map(|i| table.word(i)).collect();
    let generators: Vec<Value> = table
        .generators()
        .map(|(name, pos)| {
            let mut order = 1usize;
            let mut acc = pos;
            while acc != table.identity() {
                acc = table.mul(acc, pos);
                order += 1;
            }
            json!({ "name": name, "word_order": order })
        })
        .collect();
    let mut out = Map::new();
    out.insert("report".into(), "group-table".into());
    out.insert("group".into(), table.spec().to_string().into());
    out.insert("order".into(), n.into());
    out.insert("identity".into(), table.word(table.identity()).into());
    out.insert("words".into(), json!(words));
    out.insert(
        "inverse".into(),
        json!((0..n).map(|i| table.word(table.inv(i))).collect::<Vec<_>>()),
    );
    out.insert("generators".into(), Value::Array(generators));
    if n <= MAX_TABLE_SIDE {
        out.insert(
            "mul".into(),
            Value::Array(
                (0..n)
                    .map(|i| {
                        Value::Array(
                            (0..n)
                                .map(|j| Value::String(table.word(table.mul(i, j)).into()))
                                .collect(),
                        )
                    })
                    .collect(),
            ),
        );
    } else {
        out.insert("tables_omitted".into(), true.into());
    }
    Value::Object(out)
}
