//! Reproducible searches for group ring elements that certify quantum codes.
//!
//! A search enumerates (or samples) candidate elements over a fixed field and
//! group, keeps those whose self-orthogonality certificate holds, derives the
//! classical and quantum parameters for each survivor, and emits records in a
//! canonical order. The whole pipeline is deterministic for a fixed config:
//! candidate generation is sequential and seeded, evaluation fans out over a
//! worker pool, and the output is sorted independently of scheduling.

use crate::code::{CodeParams, DistanceOptions};
use crate::error::{Error, Result};
use crate::expr::{parse_field, parse_group};
use crate::field::Field;
use crate::group::GroupTable;
use crate::ortho::{derive, CertKind, QeccParams};
use crate::ring::GroupRingElement;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

/// Which self-orthogonality certificate the search filters on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchKind {
    Euclidean,
    Hermitian,
    Symplectic,
    SymplecticPair,
}

impl SearchKind {
    pub fn cert_kind(self) -> CertKind {
        match self {
            SearchKind::Euclidean => CertKind::Euclidean,
            SearchKind::Hermitian => CertKind::Hermitian,
            SearchKind::Symplectic => CertKind::SymplecticMatrix,
            SearchKind::SymplecticPair => CertKind::SymplecticPair,
        }
    }

    /// Whether candidates are pairs (a, b) rather than single elements.
    pub fn is_pair(self) -> bool {
        matches!(self, SearchKind::SymplecticPair)
    }

    pub fn name(self) -> &'static str {
        match self {
            SearchKind::Euclidean => "euclidean",
            SearchKind::Hermitian => "hermitian",
            SearchKind::Symplectic => "symplectic",
            SearchKind::SymplecticPair => "symplectic-pair",
        }
    }
}

impl fmt::Display for SearchKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SearchKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<SearchKind> {
        match s {
            "euclidean" => Ok(SearchKind::Euclidean),
            "hermitian" => Ok(SearchKind::Hermitian),
            "symplectic" => Ok(SearchKind::Symplectic),
            "symplectic-pair" => Ok(SearchKind::SymplecticPair),
            other => Err(Error::Parse {
                pos: 0,
                message: format!(
                    "unknown kind `{other}` (expected euclidean, hermitian, symplectic, \
                     or symplectic-pair)"
                ),
            }),
        }
    }
}

/// How candidates are produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMode {
    /// Every element (pair) of support weight 1..=max, with the first
    /// nonzero coefficient fixed to 1 (scalar multiples generate the same
    /// code, so one representative per ray suffices).
    ExhaustiveByWeight,
    /// `budget` seeded random draws.
    Random,
}

impl fmt::Display for SearchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchMode::ExhaustiveByWeight => "exhaustive-by-weight",
            SearchMode::Random => "random",
        })
    }
}

impl FromStr for SearchMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<SearchMode> {
        match s {
            "exhaustive-by-weight" | "exhaustive" => Ok(SearchMode::ExhaustiveByWeight),
            "random" => Ok(SearchMode::Random),
            other => Err(Error::Parse {
                pos: 0,
                message: format!(
                    "unknown mode `{other}` (expected exhaustive-by-weight or random)"
                ),
            }),
        }
    }
}

/// A fully specified search; hashing its canonical JSON identifies the run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchConfig {
    pub field: String,
    pub group: String,
    pub kind: SearchKind,
    pub mode: SearchMode,
    pub max_support_weight: usize,
    pub seed: u64,
    /// Candidate-count cap: exhaustive enumeration must fit under it, random
    /// mode draws exactly this many candidates.
    pub budget: u64,
    /// Codeword-enumeration cap for each distance computation.
    pub distance_budget: u64,
}

impl SearchConfig {
    /// SHA-256 of the canonical JSON serialization, as lowercase hex.
    pub fn hash(&self) -> String {
        let json = serde_json::to_string(self).expect("config serializes");
        hex::encode(Sha256::digest(json.as_bytes()))
    }
}

/// One surviving candidate with its derived parameters.
#[derive(Clone, Debug, Serialize)]
pub struct SearchRecord {
    pub candidate_index: u64,
    pub element: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub element_b: Option<String>,
    pub certificate: CertKind,
    pub classical: CodeParams,
    pub quantum: QeccParams,
    pub config_hash: String,
}

/// A candidate: one coefficient vector, or the concatenation of two for the
/// pair construction.
struct Candidate {
    index: u64,
    coeffs: Vec<u32>,
}

fn split_candidate(
    field: &Field,
    group: &Arc<GroupTable>,
    coeffs: &[u32],
    pair: bool,
) -> (GroupRingElement, Option<GroupRingElement>) {
    let n = group.order();
    if pair {
        let a = GroupRingElement::from_raw(field, group, coeffs[..n].to_vec());
        let b = GroupRingElement::from_raw(field, group, coeffs[n..].to_vec());
        (a, Some(b))
    } else {
        (GroupRingElement::from_raw(field, group, coeffs.to_vec()), None)
    }
}

/// Number of support-weight `1..=max_weight` rays (first nonzero coefficient
/// pinned to 1): the sum of C(len, w) * (q-1)^(w-1), saturating on overflow.
fn exhaustive_total(len: usize, q: u64, max_weight: usize) -> u128 {
    let mut total: u128 = 0;
    let mut binom: u128 = 1;
    let mut scale: u128 = 1;
    for w in 1..=max_weight.min(len) {
        binom = match binom.checked_mul((len - w + 1) as u128) {
            Some(v) => v / w as u128,
            None => return u128::MAX,
        };
        let Some(layer) = binom.checked_mul(scale) else {
            return u128::MAX;
        };
        let Some(sum) = total.checked_add(layer) else {
            return u128::MAX;
        };
        total = sum;
        scale = match scale.checked_mul(q as u128 - 1) {
            Some(v) => v,
            None => return u128::MAX,
        };
    }
    total
}

/// Generates every coefficient vector of length `len` with support weight in
/// `1..=max_weight` and first nonzero coefficient 1; errors up front when
/// more than `budget` candidates would exist.
fn exhaustive_candidates(
    len: usize,
    q: u64,
    max_weight: usize,
    budget: u64,
) -> Result<Vec<Vec<u32>>> {
    let total = exhaustive_total(len, q, max_weight);
    if total > budget as u128 {
        return Err(Error::BudgetExceeded { required: total, budget: budget as u128 });
    }
    let nonzero = (q - 1) as u32;
    let mut out: Vec<Vec<u32>> = Vec::with_capacity(total as usize);
    for w in 1..=max_weight.min(len) {
        // Positions chosen by the standard next-combination walk.
        let mut support: Vec<usize> = (0..w).collect();
        loop {
            // Coefficients: position support[0] is fixed to 1; the rest run
            // through all nonzero values like an odometer.
            let mut digits = vec![1u32; w];
            loop {
                let mut coeffs = vec![0u32; len];
                for (slot, &pos) in support.iter().enumerate() {
                    coeffs[pos] = digits[slot];
                }
                out.push(coeffs);
                let mut slot = w;
                loop {
                    if slot == 1 {
                        digits = Vec::new();
                        break;
                    }
                    slot -= 1;
                    digits[slot] += 1;
                    if digits[slot] <= nonzero {
                        break;
                    }
                    digits[slot] = 1;
                }
                if digits.is_empty() {
                    break;
                }
            }
            // Advance the support combination.
            let mut i = w;
            loop {
                if i == 0 {
                    support = Vec::new();
                    break;
                }
                i -= 1;
                if support[i] < len - (w - i) {
                    support[i] += 1;
                    for j in i + 1..w {
                        support[j] = support[j - 1] + 1;
                    }
                    break;
                }
            }
            if support.is_empty() {
                break;
            }
        }
    }
    Ok(out)
}

/// Draws `budget` seeded random coefficient vectors with support weight in
/// `1..=max_weight` and first nonzero coefficient 1.
fn random_candidates(len: usize, q: u64, max_weight: usize, budget: u64, seed: u64) -> Vec<Vec<u32>> {
    let nonzero = (q - 1) as u32;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut positions: Vec<usize> = (0..len).collect();
    let mut out = Vec::with_capacity(budget as usize);
    for _ in 0..budget {
        let w = rng.gen_range(1..=max_weight.min(len));
        positions.shuffle(&mut rng);
        let mut support: Vec<usize> = positions[..w].to_vec();
        support.sort_unstable();
        let mut coeffs = vec![0u32; len];
        for (slot, &pos) in support.iter().enumerate() {
            coeffs[pos] = if slot == 0 { 1 } else { rng.gen_range(1..=nonzero) };
        }
        out.push(coeffs);
    }
    out
}

/// Runs a search and returns its records in canonical order: better codes
/// first (classical k, then d), ties broken by candidate index.
pub fn run_search(config: &SearchConfig) -> Result<Vec<SearchRecord>> {
    let field = parse_field(&config.field)?;
    let spec = parse_group(&config.group)?;
    let group = Arc::new(GroupTable::build(&spec)?);
    let pair = config.kind.is_pair();
    let len = group.order() * if pair { 2 } else { 1 };
    if config.max_support_weight == 0 {
        return Ok(Vec::new());
    }

    let vectors = match config.mode {
        SearchMode::ExhaustiveByWeight => {
            exhaustive_candidates(len, field.q(), config.max_support_weight, config.budget)?
        }
        SearchMode::Random => random_candidates(
            len,
            field.q(),
            config.max_support_weight,
            config.budget,
            config.seed,
        ),
    };
    let candidates: Vec<Candidate> = vectors
        .into_iter()
        .enumerate()
        .map(|(i, coeffs)| Candidate { index: i as u64, coeffs })
        .collect();

    let opts = DistanceOptions {
        budget: config.distance_budget as u128,
        seed: config.seed,
        ..DistanceOptions::default()
    };
    let cert_kind = config.kind.cert_kind();
    let config_hash = config.hash();

    let evaluated: Vec<Result<Option<SearchRecord>>> = candidates
        .par_iter()
        .map(|cand| {
            let (a, b) = split_candidate(&field, &group, &cand.coeffs, pair);
            match derive(cert_kind, &a, b.as_ref(), &opts) {
                Ok(derivation) => Ok(Some(SearchRecord {
                    candidate_index: cand.index,
                    element: a.to_string(),
                    element_b: b.map(|e| e.to_string()),
                    certificate: derivation.certificate.kind,
                    classical: derivation.classical,
                    quantum: derivation.quantum,
                    config_hash: config_hash.clone(),
                })),
                Err(Error::CertificateFailed { .. }) => Ok(None),
                Err(other) => Err(other),
            }
        })
        .collect();

    let mut records = Vec::new();
    for item in evaluated {
        if let Some(record) = item? {
            records.push(record);
        }
    }
    records.sort_by(|x, y| {
        (y.classical.dimension, y.classical.distance, x.candidate_index).cmp(&(
            x.classical.dimension,
            x.classical.distance,
            y.candidate_index,
        ))
    });
    Ok(records)
}

/// Serializes records as JSON lines (one record per line, newline after
/// each), the append-friendly on-disk format.
pub fn to_jsonl(records: &[SearchRecord]) -> String {
    let mut out = String::new();
    for record in records {
        out.push_str(&serde_json::to_string(record).expect("record serializes"));
        out.push('\n');
    }
    out
}
