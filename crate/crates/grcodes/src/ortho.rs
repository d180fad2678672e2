//! Self-orthogonality certificates for group ring elements and the quantum
//! code parameters they yield.
//!
//! Every certificate is evaluated along two independent routes — once in the
//! group ring and once on matrix images (or, where no ring route exists, via
//! an explicit subcode test) — and the routes are asserted to agree, so a bug
//! in either layer surfaces immediately instead of producing a wrong
//! certificate.

use crate::code::{CodeParams, Distance, DistanceOptions, LinearCode, Metric};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::GroupRingElement;
use serde::Serialize;

/// Which inner product (and which sufficient condition) a certificate tests.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertKind {
    /// a a^T = 0, equivalently M M^T = O.
    Euclidean,
    /// The sufficient condition a = a^T and a^2 = 0 (implies Euclidean).
    EuclideanCorollary,
    /// a (a^p)^T = 0 over GF(p^2), equivalently M conj(M)^T = O.
    Hermitian,
    /// M Omega M^T = O for the symplectic form on even-order groups.
    #[serde(rename = "symplectic")]
    SymplecticMatrix,
    /// a b^T = b a^T for a pair, equivalently [M_a | M_b] is symplectically
    /// self-orthogonal.
    SymplecticPair,
}

impl CertKind {
    pub fn name(&self) -> &'static str {
        match self {
            CertKind::Euclidean => "euclidean",
            CertKind::EuclideanCorollary => "euclidean-corollary",
            CertKind::Hermitian => "hermitian",
            CertKind::SymplecticMatrix => "symplectic",
            CertKind::SymplecticPair => "symplectic-pair",
        }
    }
}

impl std::fmt::Display for CertKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for CertKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<CertKind> {
        match s {
            "euclidean" => Ok(CertKind::Euclidean),
            "euclidean-corollary" => Ok(CertKind::EuclideanCorollary),
            "hermitian" => Ok(CertKind::Hermitian),
            "symplectic" => Ok(CertKind::SymplecticMatrix),
            "symplectic-pair" => Ok(CertKind::SymplecticPair),
            other => Err(Error::Parse {
                pos: 0,
                message: format!(
                    "unknown certificate kind `{other}` (expected euclidean, \
                     euclidean-corollary, hermitian, symplectic, or symplectic-pair)"
                ),
            }),
        }
    }
}

/// The outcome of a certificate check. `residual` counts the nonzero entries
/// of the product matrix that has to vanish; it is 0 whenever the certificate
/// holds (for the corollary it can also be 0 while `holds` is false, when the
/// square vanishes but the element is not symmetric). `residual_terms` lists
/// the first few offending entries as `(row,col)=value`.
#[derive(Clone, Debug, Serialize)]
pub struct OrthoCertificate {
    pub kind: CertKind,
    pub holds: bool,
    pub residual: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub residual_terms: Vec<String>,
}

const MAX_LISTED_RESIDUALS: usize = 16;

fn residual_terms(product: &Matrix) -> Vec<String> {
    let field = product.field();
    let mut terms = Vec::new();
    'scan: for i in 0..product.rows() {
        for j in 0..product.cols() {
            let v = product.get(i, j);
            if !v.is_zero() {
                terms.push(format!("({i},{j})={}", field.literal(v)));
                if terms.len() == MAX_LISTED_RESIDUALS {
                    break 'scan;
                }
            }
        }
    }
    terms
}

/// Does a a^T vanish? Computed in the ring and on matrices, cross-checked.
pub fn check_euclidean(a: &GroupRingElement) -> OrthoCertificate {
    let ring = a.mul(&a.transpose()).expect("one element is always compatible with itself");
    let m = a.sigma();
    let product = m.mul(&m.transpose()).expect("sigma images are square");
    assert_eq!(ring.sigma(), product, "ring and matrix routes must agree");
    OrthoCertificate {
        kind: CertKind::Euclidean,
        holds: product.is_zero(),
        residual: product.count_nonzero(),
        residual_terms: residual_terms(&product),
    }
}

/// The sufficient condition a = a^T and a^2 = 0.
pub fn check_euclidean_corollary(a: &GroupRingElement) -> OrthoCertificate {
    let symmetric = *a == a.transpose();
    let square = a.mul(a).expect("one element is always compatible with itself");
    let m = a.sigma();
    let product = m.mul(&m).expect("sigma images are square");
    assert_eq!(square.sigma(), product, "ring and matrix routes must agree");
    OrthoCertificate {
        kind: CertKind::EuclideanCorollary,
        holds: symmetric && product.is_zero(),
        residual: product.count_nonzero(),
        residual_terms: residual_terms(&product),
    }
}

/// Does a (a^p)^T vanish over GF(p^2)?
pub fn check_hermitian(a: &GroupRingElement) -> Result<OrthoCertificate> {
    let f = a.field();
    if f.k() != 2 {
        return Err(Error::NotQuadraticExtension { p: f.p(), k: f.k() });
    }
    let ring = a.mul(&a.frobenius().transpose())?;
    let m = a.sigma();
    let product = m.mul(&m.entrywise_frobenius().transpose())?;
    assert_eq!(ring.sigma(), product, "ring and matrix routes must agree");
    Ok(OrthoCertificate {
        kind: CertKind::Hermitian,
        holds: product.is_zero(),
        residual: product.count_nonzero(),
        residual_terms: residual_terms(&product),
    })
}

/// Does M Omega M^T vanish, where M is the matrix image over an even-order
/// group? Cross-checked against the containment of the row space in its
/// symplectic dual.
pub fn check_symplectic_matrix(a: &GroupRingElement) -> Result<OrthoCertificate> {
    let n = a.group().order();
    if !n.is_multiple_of(2) {
        return Err(Error::OddSymplecticLength { n });
    }
    let m = a.sigma();
    let omega = Matrix::omega(a.field(), n / 2);
    let product = m.mul(&omega)?.mul(&m.transpose())?;
    let code = LinearCode::from_generator(m);
    let contained = code.is_subcode_of(&code.dual_symplectic()?)?;
    assert_eq!(product.is_zero(), contained, "form and containment routes must agree");
    Ok(OrthoCertificate {
        kind: CertKind::SymplecticMatrix,
        holds: product.is_zero(),
        residual: product.count_nonzero(),
        residual_terms: residual_terms(&product),
    })
}

/// Does a b^T = b a^T hold for the pair? Equivalently [M_a | M_b] is
/// symplectically self-orthogonal.
pub fn check_symplectic_pair(
    a: &GroupRingElement,
    b: &GroupRingElement,
) -> Result<OrthoCertificate> {
    let ring = a.mul(&b.transpose())?.sub(&b.mul(&a.transpose())?)?;
    let n = a.group().order();
    let stacked = a.sigma().hstack(&b.sigma())?;
    let omega = Matrix::omega(a.field(), n);
    let product = stacked.mul(&omega)?.mul(&stacked.transpose())?;
    assert_eq!(ring.sigma(), product, "ring and matrix routes must agree");
    Ok(OrthoCertificate {
        kind: CertKind::SymplecticPair,
        holds: product.is_zero(),
        residual: product.count_nonzero(),
        residual_terms: residual_terms(&product),
    })
}

/// Stabilizer code parameters [[n, k, d]]_base.
#[derive(Clone, Debug, Serialize)]
pub struct QeccParams {
    #[serde(rename = "n")]
    pub length: usize,
    #[serde(rename = "k")]
    pub dimension: usize,
    #[serde(rename = "d")]
    pub distance: usize,
    #[serde(rename = "d_exact")]
    pub distance_exact: bool,
    #[serde(rename = "base_q")]
    pub base: u64,
    pub construction: CertKind,
    /// True when the dual equals the code itself, so the distance is the
    /// minimum weight of the dual rather than of the set difference.
    pub degenerate_dual_gap: bool,
}

/// A full derivation: the certificate, the classical ingredient, the quantum
/// parameters, and a codeword witnessing the distance.
#[derive(Clone, Debug, Serialize)]
pub struct QeccDerivation {
    pub certificate: OrthoCertificate,
    pub classical: CodeParams,
    pub quantum: QeccParams,
    /// The distance witness, rendered as field literals.
    pub distance_witness: Vec<String>,
}

fn ensure_holds(cert: &OrthoCertificate) -> Result<()> {
    if cert.holds {
        return Ok(());
    }
    Err(Error::CertificateFailed {
        kind: cert.kind.name().into(),
        residual: format!("{} nonzero entries in the product matrix", cert.residual),
    })
}

/// The parts of the stabilizer parameters fixed before the distance scan.
struct QuantumShape {
    metric: Metric,
    base: u64,
    length: usize,
    dimension: usize,
}

fn finish(
    cert: OrthoCertificate,
    code: &LinearCode,
    dual: &LinearCode,
    shape: QuantumShape,
    opts: &DistanceOptions,
) -> Result<QeccDerivation> {
    assert!(
        code.is_subcode_of(dual)?,
        "a holding certificate must put the code inside its dual"
    );
    let classical = code.params(Metric::Hamming, opts)?;
    let degenerate = dual.same_code(code);
    let d: Distance = if degenerate {
        dual.min_weight(shape.metric, opts)?
    } else {
        dual.min_weight_excluding(code, shape.metric, opts)?
    };
    let f = code.field();
    let construction = cert.kind;
    Ok(QeccDerivation {
        certificate: cert,
        classical,
        quantum: QeccParams {
            length: shape.length,
            dimension: shape.dimension,
            distance: d.weight,
            distance_exact: d.exact,
            base: shape.base,
            construction,
            degenerate_dual_gap: degenerate,
        },
        distance_witness: d.witness.iter().map(|&x| f.literal(x)).collect(),
    })
}

/// [[n, n - 2k, d]]_q from a Euclidean-self-orthogonal element; d is the
/// minimum Hamming weight of the Euclidean dual minus the code.
pub fn derive_euclidean(
    a: &GroupRingElement,
    opts: &DistanceOptions,
) -> Result<QeccDerivation> {
    derive_css(a, check_euclidean(a), opts)
}

fn derive_css(
    a: &GroupRingElement,
    cert: OrthoCertificate,
    opts: &DistanceOptions,
) -> Result<QeccDerivation> {
    ensure_holds(&cert)?;
    let code = LinearCode::from_group_ring(a);
    let dual = code.dual_euclidean();
    let n = code.length();
    let qdim = n - 2 * code.dimension();
    let shape = QuantumShape { metric: Metric::Hamming, base: a.field().q(), length: n, dimension: qdim };
    finish(cert, &code, &dual, shape, opts)
}

/// [[n, n - 2k, d]]_p from a Hermitian-self-orthogonal element over GF(p^2).
pub fn derive_hermitian(
    a: &GroupRingElement,
    opts: &DistanceOptions,
) -> Result<QeccDerivation> {
    let cert = check_hermitian(a)?;
    ensure_holds(&cert)?;
    let code = LinearCode::from_group_ring(a);
    let dual = code.dual_hermitian()?;
    let n = code.length();
    let qdim = n - 2 * code.dimension();
    let shape = QuantumShape { metric: Metric::Hamming, base: a.field().p(), length: n, dimension: qdim };
    finish(cert, &code, &dual, shape, opts)
}

/// [[n/2, n/2 - k, d_s]]_q from one element over an even-order group, reading
/// the matrix image as symplectic vectors of length n.
pub fn derive_symplectic(
    a: &GroupRingElement,
    opts: &DistanceOptions,
) -> Result<QeccDerivation> {
    let cert = check_symplectic_matrix(a)?;
    ensure_holds(&cert)?;
    let code = LinearCode::from_group_ring(a);
    let dual = code.dual_symplectic()?;
    let qlen = code.length() / 2;
    let qdim = qlen - code.dimension();
    let shape = QuantumShape { metric: Metric::Symplectic, base: a.field().q(), length: qlen, dimension: qdim };
    finish(cert, &code, &dual, shape, opts)
}

/// [[n, n - k, d_s]]_q from a commuting pair (a, b) via the stacked generator
/// [M_a | M_b] over a group of order n.
pub fn derive_symplectic_pair(
    a: &GroupRingElement,
    b: &GroupRingElement,
    opts: &DistanceOptions,
) -> Result<QeccDerivation> {
    let cert = check_symplectic_pair(a, b)?;
    ensure_holds(&cert)?;
    let code = LinearCode::from_generator(a.sigma().hstack(&b.sigma())?);
    let dual = code.dual_symplectic()?;
    let qlen = a.group().order();
    let qdim = qlen - code.dimension();
    let shape = QuantumShape { metric: Metric::Symplectic, base: a.field().q(), length: qlen, dimension: qdim };
    finish(cert, &code, &dual, shape, opts)
}

/// Dispatch on the certificate kind; `b` is only consulted (and required) for
/// [`CertKind::SymplecticPair`].
pub fn derive(
    kind: CertKind,
    a: &GroupRingElement,
    b: Option<&GroupRingElement>,
    opts: &DistanceOptions,
) -> Result<QeccDerivation> {
    match kind {
        CertKind::Euclidean => derive_euclidean(a, opts),
        CertKind::EuclideanCorollary => derive_css(a, check_euclidean_corollary(a), opts),
        CertKind::Hermitian => derive_hermitian(a, opts),
        CertKind::SymplecticMatrix => derive_symplectic(a, opts),
        CertKind::SymplecticPair => {
            let b = b.ok_or_else(|| Error::Shape {
                reason: "the symplectic pair construction needs a second element".into(),
            })?;
            derive_symplectic_pair(a, b, opts)
        }
    }
}
