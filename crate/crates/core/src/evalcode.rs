//! Evaluation codes C_X(d) and their parameters.
//!
//! Row `i` of the generator matrix is the `i`-th degree-d monomial in
//! graded-lex order evaluated at the points of X. Points carry a first
//! coordinate of 1, so dividing by `t_1^d` changes nothing and evaluation is
//! plain monomial evaluation.
//!
//! Minimum distance and weight distribution are computed exhaustively from
//! the reduced basis. Only messages whose first nonzero entry is 1 are
//! visited, since scaling a codeword by a unit keeps its weight. The message
//! space is split into [`MessageChunk`]s so callers can fan the work out.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::gfq::{Elem, FiniteField};
use crate::linalg::{axpy, EchelonBasis, Matrix};
use crate::toricset::ToricSet;
use crate::{check_budget, checked_pow, Error, Result};

/// Degree-`d` monomials in `s` variables in graded-lex order: `t_1^d` first,
/// then descending lexicographic order of exponent vectors.
pub fn monomials(s: usize, d: u32) -> Monomials {
    let current = (s > 0).then(|| {
        let mut e = vec![0; s];
        e[0] = d;
        e
    });
    Monomials { current }
}

/// Number of degree-`d` monomials in `s` variables, C(d + s - 1, s - 1).
pub fn monomial_count(s: usize, d: u32) -> Option<u128> {
    if s == 0 {
        return Some(0);
    }
    let (n, k) = (d as u128 + s as u128 - 1, (s - 1) as u128);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

pub struct Monomials {
    current: Option<Vec<u32>>,
}

impl Iterator for Monomials {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let out = self.current.take()?;
        let s = out.len();
        // Rightmost position before the last with a positive exponent.
        if let Some(i) = (0..s.saturating_sub(1)).rev().find(|&i| out[i] > 0) {
            let mut next = out.clone();
            let tail: u32 = next[i + 1..].iter().sum();
            next[i] -= 1;
            next[i + 1] = tail + 1;
            for e in next[i + 2..].iter_mut() {
                *e = 0;
            }
            self.current = Some(next);
        }
        Some(out)
    }
}

/// Discrete logs of every coordinate of every point.
fn point_logs(x: &ToricSet) -> Vec<Vec<u64>> {
    let f = x.field();
    x.points()
        .iter()
        .map(|p| p.coords().iter().map(|&c| f.log(c).expect("unit coordinate") as u64).collect())
        .collect()
}

fn evaluate_monomial(field: &FiniteField, logs: &[Vec<u64>], exps: &[u32]) -> Vec<Elem> {
    logs.iter()
        .map(|pl| {
            let l: u64 = pl.iter().zip(exps).map(|(&a, &e)| a * e as u64).sum();
            field.exp(l)
        })
        .collect()
}

/// The matrix of ev_d: one row per degree-d monomial, one column per point.
pub fn evaluation_matrix(x: &ToricSet, d: u32) -> Matrix {
    let logs = point_logs(x);
    let field = x.field();
    Matrix::from_rows(
        x.len(),
        monomials(x.ambient_dim(), d).map(|m| evaluate_monomial(field, &logs, &m)),
    )
}

/// dim C_X(d), the Hilbert function of S/I(X) at d.
pub fn hilbert_function(x: &ToricSet, d: u32) -> usize {
    if d == 0 {
        return usize::from(!x.is_empty());
    }
    let logs = point_logs(x);
    let mut basis = EchelonBasis::new(x.field(), x.len());
    for m in monomials(x.ambient_dim(), d) {
        if basis.is_full() {
            break;
        }
        basis.insert(evaluate_monomial(x.field(), &logs, &m));
    }
    basis.rank()
}

/// Smallest d with dim C_X(d) = |X|. The evaluation matrix for each probed
/// degree (monomials × points) must fit in `budget` entries.
pub fn regularity_index(x: &ToricSet, budget: u64) -> Result<u32> {
    let m = x.len();
    for d in 0.. {
        if d > 0 {
            let entries = monomial_count(x.ambient_dim(), d).and_then(|c| c.checked_mul(m as u128));
            check_budget(entries, budget)?;
        }
        if hilbert_function(x, d) == m {
            return Ok(d);
        }
    }
    unreachable!()
}

/// A slice of the projective message space: messages whose first nonzero
/// coordinate is a 1 at `lead`, followed by the fixed digits `prefix`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MessageChunk {
    pub lead: usize,
    pub prefix: Vec<Elem>,
}

#[derive(Clone, Debug)]
pub struct LinearCode {
    field: FiniteField,
    generator: Matrix,
    basis: Matrix,
    min_distance: Option<usize>,
    weights: Option<BTreeMap<usize, u64>>,
}

impl LinearCode {
    /// C_X(d) for a nonempty X.
    pub fn from_toric(x: &ToricSet, d: u32) -> Result<Self> {
        if x.is_empty() {
            return Err(Error::OutOfRange("empty point set"));
        }
        Ok(Self::from_generator(x.field(), evaluation_matrix(x, d)))
    }

    pub fn from_generator(field: &FiniteField, generator: Matrix) -> Self {
        let basis = crate::linalg::row_reduce(field, &generator);
        LinearCode { field: field.clone(), generator, basis, min_distance: None, weights: None }
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    pub fn dimension(&self) -> usize {
        self.basis.rows()
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    /// Reduced row echelon basis of the code.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// (q^k - 1)/(q - 1), the number of codewords visited by the searches.
    pub fn projective_message_count(&self) -> Option<u128> {
        let q = self.field.order() as u128;
        Some((checked_pow(q, self.dimension() as u32)? - 1) / (q - 1))
    }

    fn check_search_budget(&self, budget: u64) -> Result<()> {
        if self.dimension() == 0 {
            return Err(Error::OutOfRange("zero code has no nonzero codeword"));
        }
        check_budget(self.projective_message_count(), budget).map(|_| ())
    }

    /// Splits the message space into at least `target` chunks where possible.
    pub fn message_chunks(&self, target: usize) -> Vec<MessageChunk> {
        let q = self.field.order() as usize;
        let k = self.dimension();
        let mut depth = 0usize;
        let mut span = 1usize;
        while span < target && depth + 1 < k {
            span = span.saturating_mul(q);
            depth += 1;
        }
        let mut chunks = Vec::new();
        for lead in 0..k {
            let t = depth.min(k - 1 - lead);
            let mut digits = vec![0u16; t];
            loop {
                chunks.push(MessageChunk {
                    lead,
                    prefix: digits.iter().map(|&v| Elem::new(v)).collect(),
                });
                let mut i = 0;
                while i < t {
                    digits[i] += 1;
                    if (digits[i] as usize) < q {
                        break;
                    }
                    digits[i] = 0;
                    i += 1;
                }
                if i == t {
                    break;
                }
            }
        }
        chunks
    }

    /// Visits the weight of every codeword in `chunk`, stepping through the
    /// free digits in reflected Gray order so each step adds one scaled row.
    /// Stops early when `visit` returns `false`.
    pub fn scan_chunk<F: FnMut(usize) -> bool>(&self, chunk: &MessageChunk, mut visit: F) {
        let f = &self.field;
        let q = f.order() as usize;
        let first_free = chunk.lead + 1 + chunk.prefix.len();
        let mut word = self.basis.row(chunk.lead).to_vec();
        for (j, &c) in chunk.prefix.iter().enumerate() {
            axpy(f, &mut word, c, self.basis.row(chunk.lead + 1 + j));
        }
        let free: Vec<&[Elem]> = (first_free..self.dimension()).map(|r| self.basis.row(r)).collect();
        let weight = |w: &[Elem]| w.iter().filter(|e| !e.is_zero()).count();
        let mut digit = vec![0usize; free.len()];
        let mut rising = vec![true; free.len()];
        if !visit(weight(&word)) {
            return;
        }
        loop {
            let mut j = 0;
            loop {
                if j == free.len() {
                    return;
                }
                if (rising[j] && digit[j] + 1 < q) || (!rising[j] && digit[j] > 0) {
                    break;
                }
                rising[j] = !rising[j];
                j += 1;
            }
            let old = digit[j];
            let new = if rising[j] { old + 1 } else { old - 1 };
            digit[j] = new;
            let delta = f.sub(Elem::new(new as u16), Elem::new(old as u16));
            axpy(f, &mut word, delta, free[j]);
            if !visit(weight(&word)) {
                return;
            }
        }
    }

    /// Minimum weight within a chunk, stopping once `floor` is reached.
    pub fn chunk_min_weight(&self, chunk: &MessageChunk, floor: usize) -> usize {
        let mut best = usize::MAX;
        self.scan_chunk(chunk, |w| {
            best = best.min(w);
            best > floor
        });
        best
    }

    /// Adds the weights of the chunk's codewords to `hist` (indexed by weight).
    pub fn chunk_histogram(&self, chunk: &MessageChunk, hist: &mut [u64]) {
        self.scan_chunk(chunk, |w| {
            hist[w] += 1;
            true
        });
    }

    /// Exact minimum distance by exhaustive search.
    pub fn minimum_distance(&self, budget: u64) -> Result<usize> {
        if let Some(d) = self.min_distance {
            return Ok(d);
        }
        self.check_search_budget(budget)?;
        let mut best = usize::MAX;
        for chunk in self.message_chunks(1) {
            best = best.min(self.chunk_min_weight(&chunk, 1));
            if best <= 1 {
                break;
            }
        }
        Ok(best)
    }

    /// Number of codewords of each weight, the zero word included.
    pub fn weight_distribution(&self, budget: u64) -> Result<BTreeMap<usize, u64>> {
        if let Some(w) = &self.weights {
            return Ok(w.clone());
        }
        self.check_search_budget(budget)?;
        let mut hist = vec![0u64; self.length() + 1];
        for chunk in self.message_chunks(1) {
            self.chunk_histogram(&chunk, &mut hist);
        }
        Ok(self.distribution_from_projective(&hist))
    }

    /// Full weight distribution from a histogram over projective messages.
    pub fn distribution_from_projective(&self, hist: &[u64]) -> BTreeMap<usize, u64> {
        let units = self.field.unit_order() as u64;
        let mut out = BTreeMap::new();
        out.insert(0, 1);
        for (w, &c) in hist.iter().enumerate() {
            if c > 0 {
                *out.entry(w).or_insert(0) += c * units;
            }
        }
        out
    }

    pub fn cached_minimum_distance(&self) -> Option<usize> {
        self.min_distance
    }

    pub fn set_minimum_distance(&mut self, d: usize) {
        self.min_distance = Some(d);
    }

    pub fn cache_minimum_distance(&mut self, budget: u64) -> Result<usize> {
        let d = self.minimum_distance(budget)?;
        self.min_distance = Some(d);
        Ok(d)
    }

    pub fn cache_weight_distribution(&mut self, budget: u64) -> Result<&BTreeMap<usize, u64>> {
        let w = self.weight_distribution(budget)?;
        if self.min_distance.is_none() {
            self.min_distance = w.keys().copied().find(|&k| k > 0);
        }
        Ok(self.weights.insert(w))
    }

    /// d <= n - k + 1.
    pub fn satisfies_singleton(&self, distance: usize) -> bool {
        distance >= 1 && distance + self.dimension() <= self.length() + 1
    }
}
