//! Sparse multivariate polynomials over GF(q).

use alloc::collections::btree_map::{BTreeMap, Entry};
use alloc::vec;
use alloc::vec::Vec;

use crate::gfq::{Elem, FiniteField};
use crate::{Error, Result};

/// Exponent vector → nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Elem>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    /// Linear form `Σ coeffs[i] * t_{i+1}`.
    pub fn linear(field: &FiniteField, coeffs: &[Elem]) -> Self {
        let mut p = Self::zero(coeffs.len());
        for (i, &c) in coeffs.iter().enumerate() {
            let mut e = vec![0; coeffs.len()];
            e[i] = 1;
            p.add_term(field, e, c);
        }
        p
    }

    pub fn from_terms(
        field: &FiniteField,
        nvars: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, Elem)>,
    ) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::ArityMismatch { expected: nvars, found: e.len() });
            }
            p.add_term(field, e, c);
        }
        Ok(p)
    }

    /// Adds `coeff * x^exponents`, collecting like terms.
    pub fn add_term(&mut self, field: &FiniteField, exponents: Vec<u32>, coeff: Elem) {
        debug_assert_eq!(exponents.len(), self.nvars);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exponents) {
            Entry::Occupied(mut slot) => {
                let sum = field.add(*slot.get(), coeff);
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], Elem)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> Elem {
        self.terms.get(exponents).copied().unwrap_or(Elem::ZERO)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Homogeneous degree, or an error if terms of different degree occur.
    /// The zero polynomial is homogeneous of degree 0.
    pub fn homogeneous_degree(&self) -> Result<u32> {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let Some(d) = degrees.next() else { return Ok(0) };
        if degrees.all(|x| x == d) {
            Ok(d)
        } else {
            Err(Error::NotHomogeneous)
        }
    }

    pub fn evaluate(&self, field: &FiniteField, point: &[Elem]) -> Elem {
        debug_assert_eq!(point.len(), self.nvars);
        self.terms.iter().fold(Elem::ZERO, |acc, (e, &c)| {
            let term = e
                .iter()
                .zip(point)
                .fold(c, |t, (&k, &x)| if k == 0 { t } else { field.mul(t, field.pow(x, k as u64)) });
            field.add(acc, term)
        })
    }
}
