//! Linear codes over finite fields: row spaces of generator matrices, duals
//! under the Euclidean, Hermitian, and symplectic inner products, and minimum
//! weight computation.
//!
//! The exact minimum weight walks every message with a reflected q-ary Gray
//! code, so each codeword costs one scaled row addition; the walk is chunked
//! over the most significant message digit and the chunks are evaluated in
//! parallel, with results folded in a fixed order so the answer (witness
//! included) never depends on the thread count. When the message space
//! exceeds the budget, a randomized information-set scan gives an upper bound
//! instead, clearly marked as inexact.

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::matrix::{Matrix, RowEchelon};
use crate::ring::GroupRingElement;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

/// Which weight function distances are measured in.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Metric {
    Hamming,
    /// For even length 2m: the number of positions i < m where the pair
    /// (v[i], v[m+i]) is not (0, 0).
    Symplectic,
}

impl Metric {
    pub fn weight(&self, v: &[FieldElement]) -> usize {
        match self {
            Metric::Hamming => v.iter().filter(|x| !x.is_zero()).count(),
            Metric::Symplectic => {
                let m = v.len() / 2;
                (0..m).filter(|&i| !v[i].is_zero() || !v[m + i].is_zero()).count()
            }
        }
    }

    #[inline]
    pub(crate) fn weight_raw(&self, v: &[u32]) -> usize {
        match self {
            Metric::Hamming => v.iter().filter(|&&x| x != 0).count(),
            Metric::Symplectic => {
                let m = v.len() / 2;
                (0..m).filter(|&i| v[i] != 0 || v[m + i] != 0).count()
            }
        }
    }
}

/// Controls for minimum-weight computation.
#[derive(Clone, Debug)]
pub struct DistanceOptions {
    /// Largest message count the exact scan may enumerate.
    pub budget: u128,
    /// Candidate budget for the randomized fallback when the exact scan is
    /// over budget; `None` surfaces [`Error::BudgetExceeded`] instead.
    pub fallback_samples: Option<u64>,
    /// Seed for the randomized fallback.
    pub seed: u64,
    /// Stop the randomized path once a word of at most this weight is found.
    pub early_stop: Option<usize>,
}

impl Default for DistanceOptions {
    fn default() -> Self {
        DistanceOptions {
            budget: 1 << 24,
            fallback_samples: Some(1 << 20),
            seed: 0xD15C0,
            early_stop: None,
        }
    }
}

/// A minimum-weight result: `exact` records whether every codeword was
/// inspected or the weight is only a randomized upper bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distance {
    pub weight: usize,
    pub exact: bool,
    /// A codeword attaining `weight`.
    pub witness: Vec<FieldElement>,
}

/// Classical code parameters [n, k, d].
#[derive(Clone, Debug, Serialize)]
pub struct CodeParams {
    #[serde(rename = "n")]
    pub length: usize,
    #[serde(rename = "k")]
    pub dimension: usize,
    #[serde(rename = "d")]
    pub distance: usize,
    #[serde(rename = "exact")]
    pub distance_exact: bool,
    pub metric: Metric,
}

/// The row space of a generator matrix. Keeps both the matrix as given and
/// its reduced row echelon form (the canonical basis used for membership,
/// equality, and enumeration).
#[derive(Clone)]
pub struct LinearCode {
    gen: Matrix,
    ech: RowEchelon,
}

impl std::fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "LinearCode[n={}, k={}] over {:?}",
            self.length(),
            self.dimension(),
            self.field()
        )
    }
}

impl LinearCode {
    pub fn from_generator(gen: Matrix) -> LinearCode {
        let ech = gen.rref();
        LinearCode { gen, ech }
    }

    /// The code generated by the matrix image of a group ring element.
    pub fn from_group_ring(a: &GroupRingElement) -> LinearCode {
        Self::from_generator(a.sigma())
    }

    pub fn field(&self) -> &crate::field::Field {
        self.gen.field()
    }
    pub fn length(&self) -> usize {
        self.gen.cols()
    }
    pub fn dimension(&self) -> usize {
        self.ech.rank()
    }

    /// The generator matrix as originally given (possibly redundant rows).
    pub fn generator(&self) -> &Matrix {
        &self.gen
    }
    /// The canonical (reduced row echelon) basis.
    pub fn basis(&self) -> &Matrix {
        self.ech.matrix()
    }
    pub fn echelon(&self) -> &RowEchelon {
        &self.ech
    }

    pub fn contains(&self, v: &[FieldElement]) -> Result<bool> {
        self.ech.contains(v)
    }

    pub fn is_subcode_of(&self, other: &LinearCode) -> Result<bool> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        if self.length() != other.length() {
            return Err(Error::Shape {
                reason: format!("lengths {} and {} differ", self.length(), other.length()),
            });
        }
        for r in 0..self.dimension() {
            if !other.ech.contains_raw(self.basis().raw_row(r)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Same row space? (The reduced echelon basis is canonical.)
    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.field() == other.field() && self.basis() == other.basis()
    }

    /// Dual under the Euclidean inner product sum u_i v_i.
    pub fn dual_euclidean(&self) -> LinearCode {
        Self::from_generator(self.ech.right_kernel())
    }

    /// Dual under the Hermitian inner product sum u_i v_i^p over GF(p^2).
    pub fn dual_hermitian(&self) -> Result<LinearCode> {
        let f = self.field();
        if f.k() != 2 {
            return Err(Error::NotQuadraticExtension { p: f.p(), k: f.k() });
        }
        // v is Hermitian-orthogonal to all rows of G iff G^(p) v^T = 0, since
        // applying Frobenius to sum g_i v_i^p = 0 gives sum g_i^p v_i = 0.
        Ok(Self::from_generator(self.basis().entrywise_frobenius().right_kernel()))
    }

    /// Dual under the symplectic form <u, v> = u Omega v^T on even length.
    pub fn dual_symplectic(&self) -> Result<LinearCode> {
        let n = self.length();
        if !n.is_multiple_of(2) {
            return Err(Error::OddSymplecticLength { n });
        }
        let omega = Matrix::omega(self.field(), n / 2);
        Ok(Self::from_generator(self.basis().mul(&omega)?.right_kernel()))
    }

    /// Minimum weight over all nonzero codewords.
    pub fn min_weight(&self, metric: Metric, opts: &DistanceOptions) -> Result<Distance> {
        self.min_weight_impl(None, metric, opts)
    }

    /// Minimum weight over nonzero codewords *outside* `sub`.
    pub fn min_weight_excluding(
        &self,
        sub: &LinearCode,
        metric: Metric,
        opts: &DistanceOptions,
    ) -> Result<Distance> {
        if self.field() != sub.field() {
            return Err(Error::FieldMismatch);
        }
        if self.length() != sub.length() {
            return Err(Error::Shape {
                reason: format!("lengths {} and {} differ", self.length(), sub.length()),
            });
        }
        self.min_weight_impl(Some(sub.echelon()), metric, opts)
    }

    /// Randomized upper bound on the minimum weight: repeated random column
    /// permutations, row reduction, and inspection of the reduced rows and
    /// their pairwise combinations. Deterministic for a fixed seed.
    pub fn min_weight_upper_bound(
        &self,
        metric: Metric,
        samples: u64,
        seed: u64,
        early_stop: Option<usize>,
    ) -> Result<Distance> {
        self.check_metric(metric)?;
        self.isd(None, metric, samples, seed, early_stop)
            .map(|(weight, witness)| Distance {
                weight,
                exact: false,
                witness: self.lift(&witness),
            })
            .ok_or(Error::EmptyEnumeration)
    }

    fn check_metric(&self, metric: Metric) -> Result<()> {
        if metric == Metric::Symplectic && !self.length().is_multiple_of(2) {
            return Err(Error::OddSymplecticLength { n: self.length() });
        }
        Ok(())
    }

    fn lift(&self, raw: &[u32]) -> Vec<FieldElement> {
        raw.iter().map(|&v| self.field().el(v)).collect()
    }

    fn min_weight_impl(
        &self,
        exclude: Option<&RowEchelon>,
        metric: Metric,
        opts: &DistanceOptions,
    ) -> Result<Distance> {
        self.check_metric(metric)?;
        let k = self.dimension();
        if k == 0 {
            return Err(Error::EmptyEnumeration);
        }
        let required = (self.field().q() as u128)
            .checked_pow(k as u32)
            .unwrap_or(u128::MAX);
        if required <= opts.budget {
            return self
                .exact_scan(exclude, metric)
                .map(|(weight, witness)| Distance {
                    weight,
                    exact: true,
                    witness: self.lift(&witness),
                })
                .ok_or(Error::EmptyEnumeration);
        }
        match opts.fallback_samples {
            None => Err(Error::BudgetExceeded { required, budget: opts.budget }),
            Some(samples) => self
                .isd(exclude, metric, samples, opts.seed, opts.early_stop)
                .map(|(weight, witness)| Distance {
                    weight,
                    exact: false,
                    witness: self.lift(&witness),
                })
                .ok_or(Error::EmptyEnumeration),
        }
    }

    /// Visit every codeword once. Messages run over the echelon basis; the
    /// most significant digit indexes a chunk, and inside a chunk the
    /// remaining digits follow the reflected Gray order, so consecutive
    /// codewords differ by one scaled basis row.
    fn exact_scan(
        &self,
        exclude: Option<&RowEchelon>,
        metric: Metric,
    ) -> Option<(usize, Vec<u32>)> {
        let f = self.field();
        let q = f.q() as u32;
        let basis = self.ech.matrix();
        let k = basis.rows();

        let chunk = |v: u32| -> Option<(usize, Vec<u32>)> {
            let mut word: Vec<u32> = basis
                .raw_row(k - 1)
                .iter()
                .map(|&x| f.mulv(v, x))
                .collect();
            let mut nonzero_digits = usize::from(v != 0);
            let mut best: Option<(usize, Vec<u32>)> = None;
            let inner = k - 1;
            let mut digit = vec![0u32; inner];
            let mut focus: Vec<usize> = (0..=inner).collect();
            let mut dir = vec![1i64; inner];
            loop {
                if nonzero_digits > 0 {
                    let w = metric.weight_raw(&word);
                    if best.as_ref().is_none_or(|(bw, _)| w < *bw)
                        && exclude.is_none_or(|e| !e.contains_raw(&word))
                    {
                        best = Some((w, word.clone()));
                    }
                }
                if inner == 0 {
                    break;
                }
                let j = focus[0];
                focus[0] = 0;
                if j == inner {
                    break;
                }
                let old = digit[j];
                let new = (old as i64 + dir[j]) as u32;
                digit[j] = new;
                let delta = f.subv(new, old);
                for (w, &b) in word.iter_mut().zip(basis.raw_row(j)) {
                    if b != 0 {
                        *w = f.addv(*w, f.mulv(delta, b));
                    }
                }
                match (old == 0, new == 0) {
                    (true, false) => nonzero_digits += 1,
                    (false, true) => nonzero_digits -= 1,
                    _ => {}
                }
                if new == 0 || new == q - 1 {
                    dir[j] = -dir[j];
                    focus[j] = focus[j + 1];
                    focus[j + 1] = j + 1;
                }
            }
            best
        };

        (0..q)
            .into_par_iter()
            .map(chunk)
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .fold(None, |acc: Option<(usize, Vec<u32>)>, item| match acc {
                Some(best) if best.0 <= item.0 => Some(best),
                _ => Some(item),
            })
    }

    fn isd(
        &self,
        exclude: Option<&RowEchelon>,
        metric: Metric,
        samples: u64,
        seed: u64,
        early_stop: Option<usize>,
    ) -> Option<(usize, Vec<u32>)> {
        let f = self.field();
        let q = f.q() as u32;
        let basis = self.ech.matrix();
        let (k, n) = (basis.rows(), basis.cols());
        if k == 0 {
            return None;
        }
        let mut best: Option<(usize, Vec<u32>)> = None;
        let mut used = 0u64;
        let mut round = 0u64;
        'rounds: while used < samples {
            let mut rng = ChaCha8Rng::seed_from_u64(splitmix64(seed.wrapping_add(round)));
            round += 1;
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let permuted = Matrix::from_fn(f, k, n, |r, c| basis.get(r, perm[c]));
            let reduced = permuted.rref();
            let rows = reduced.matrix();
            let consider = |cand_permuted: &[u32], best: &mut Option<(usize, Vec<u32>)>| {
                let mut cand = vec![0u32; n];
                for (c, &p) in perm.iter().enumerate() {
                    cand[p] = cand_permuted[c];
                }
                let w = metric.weight_raw(&cand);
                if w > 0
                    && best.as_ref().is_none_or(|(bw, _)| w < *bw)
                    && exclude.is_none_or(|e| !e.contains_raw(&cand))
                {
                    *best = Some((w, cand));
                }
            };
            for r in 0..rows.rows() {
                if used >= samples {
                    break 'rounds;
                }
                used += 1;
                consider(rows.raw_row(r), &mut best);
                if stop_early(&best, early_stop) {
                    break 'rounds;
                }
            }
            let mut combo = vec![0u32; n];
            for r1 in 0..rows.rows() {
                for r2 in r1 + 1..rows.rows() {
                    for lambda in 1..q {
                        if used >= samples {
                            break 'rounds;
                        }
                        used += 1;
                        for (t, (&a, &b)) in
                            rows.raw_row(r1).iter().zip(rows.raw_row(r2)).enumerate()
                        {
                            combo[t] = f.addv(a, f.mulv(lambda, b));
                        }
                        consider(&combo, &mut best);
                        if stop_early(&best, early_stop) {
                            break 'rounds;
                        }
                    }
                }
            }
        }
        best
    }

    /// [n, k, d] with the chosen metric and distance controls.
    pub fn params(&self, metric: Metric, opts: &DistanceOptions) -> Result<CodeParams> {
        let d = self.min_weight(metric, opts)?;
        Ok(CodeParams {
            length: self.length(),
            dimension: self.dimension(),
            distance: d.weight,
            distance_exact: d.exact,
            metric,
        })
    }
}

fn stop_early(best: &Option<(usize, Vec<u32>)>, early_stop: Option<usize>) -> bool {
    match (best, early_stop) {
        (Some((w, _)), Some(target)) => *w <= target,
        _ => false,
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E3779B97F4A7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D049BB133111EB);
    x ^ (x >> 31)
}
