//! Dense matrices over GF(q) and reduced row echelon form.

use alloc::vec;
use alloc::vec::Vec;

use crate::gfq::{Elem, FiniteField};

/// Row-major dense matrix of canonical encodings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Elem::ZERO; rows * cols] }
    }

    pub fn from_rows(cols: usize, rows: impl IntoIterator<Item = Vec<Elem>>) -> Self {
        let mut data = Vec::new();
        let mut count = 0;
        for r in rows {
            assert_eq!(r.len(), cols, "row length");
            data.extend_from_slice(&r);
            count += 1;
        }
        Matrix { rows: count, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Elem] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[Elem]> {
        // chunks_exact panics on a zero chunk size.
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }
}

/// `dst += factor * src`, elementwise.
pub(crate) fn axpy(field: &FiniteField, dst: &mut [Elem], factor: Elem, src: &[Elem]) {
    for (d, &s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d = field.add(*d, field.mul(factor, s));
        }
    }
}

/// Row space kept in reduced row echelon form while rows are inserted.
///
/// Each stored row has a leading 1 in its pivot column and zeros in every
/// other stored pivot column, so the final basis is the unique RREF of the
/// span regardless of insertion order.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: FiniteField,
    cols: usize,
    rows: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(field: &FiniteField, cols: usize) -> Self {
        EchelonBasis { field: field.clone(), cols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    /// Reduces `row` against the basis; keeps it if independent.
    pub fn insert(&mut self, mut row: Vec<Elem>) -> bool {
        assert_eq!(row.len(), self.cols, "row length");
        let f = &self.field;
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            let c = row[p];
            if !c.is_zero() {
                axpy(f, &mut row, f.neg(c), r);
            }
        }
        let Some(pivot) = row.iter().position(|e| !e.is_zero()) else {
            return false;
        };
        let scale = f.inv(row[pivot]).expect("nonzero pivot");
        for e in row.iter_mut() {
            *e = f.mul(*e, scale);
        }
        for r in self.rows.iter_mut() {
            let c = r[pivot];
            if !c.is_zero() {
                axpy(f, r, f.neg(c), &row);
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, row);
        true
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The basis rows ordered by pivot column.
    pub fn into_matrix(self) -> Matrix {
        Matrix::from_rows(self.cols, self.rows)
    }
}

/// Rank over GF(q) by row reduction.
pub fn rank(field: &FiniteField, m: &Matrix) -> usize {
    row_reduce(field, m).rows()
}

/// The nonzero rows of the reduced row echelon form of `m`.
pub fn row_reduce(field: &FiniteField, m: &Matrix) -> Matrix {
    let mut basis = EchelonBasis::new(field, m.cols());
    for r in m.iter_rows() {
        if basis.is_full() {
            break;
        }
        basis.insert(r.to_vec());
    }
    basis.into_matrix()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(v: &[u16]) -> Vec<Elem> {
        v.iter().map(|&x| Elem::new(x)).collect()
    }

    #[test]
    fn rref_over_gf3() {
        let f = FiniteField::new(3, 1).unwrap();
        let m = Matrix::from_rows(3, [e(&[1, 2, 0]), e(&[2, 1, 0]), e(&[0, 1, 1]), e(&[1, 0, 1])]);
        let r = row_reduce(&f, &m);
        assert_eq!(r.rows(), 2);
        assert_eq!(r.row(0), &e(&[1, 0, 1])[..]);
        assert_eq!(r.row(1), &e(&[0, 1, 1])[..]);
        assert_eq!(rank(&f, &m), 2);
    }

    #[test]
    fn rref_is_order_independent() {
        let f = FiniteField::new(2, 2).unwrap();
        let rows = [e(&[1, 2, 3, 0]), e(&[0, 3, 1, 2]), e(&[1, 1, 1, 1]), e(&[2, 3, 0, 1])];
        let a = row_reduce(&f, &Matrix::from_rows(4, rows.clone()));
        let b = row_reduce(&f, &Matrix::from_rows(4, rows.iter().rev().cloned()));
        assert_eq!(a, b);
    }

    #[test]
    fn zero_and_identity() {
        let f = FiniteField::new(5, 1).unwrap();
        assert_eq!(rank(&f, &Matrix::zeros(3, 4)), 0);
        let id = Matrix::from_rows(3, (0..3).map(|i| {
            let mut r = vec![Elem::ZERO; 3];
            r[i] = Elem::new(4);
            r
        }));
        assert_eq!(rank(&f, &id), 3);
    }
}
