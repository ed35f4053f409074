//! Dense exact linear algebra over the coefficient fields.

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldMatrix {
    pub field: Field,
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<FieldElement>>,
}

impl FieldMatrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> FieldMatrix {
        FieldMatrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![vec![field.zero(); cols]; rows],
        }
    }

    pub fn identity(field: &Field, n: usize) -> FieldMatrix {
        let mut m = FieldMatrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i][i] = field.one();
        }
        m
    }

    pub fn from_rows(field: &Field, data: Vec<Vec<FieldElement>>) -> FieldMatrix {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        assert!(data.iter().all(|r| r.len() == cols));
        FieldMatrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn mul(&self, other: &FieldMatrix) -> FieldMatrix {
        assert_eq!(self.cols, other.rows);
        let f = &self.field;
        let mut out = FieldMatrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.data[i][k].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let p = f.mul(&self.data[i][k], &other.data[k][j]);
                    out.data[i][j] = f.add(&out.data[i][j], &p);
                }
            }
        }
        out
    }

    pub fn trace(&self) -> FieldElement {
        assert_eq!(self.rows, self.cols);
        let f = &self.field;
        let mut t = f.zero();
        for i in 0..self.rows {
            t = f.add(&t, &self.data[i][i]);
        }
        t
    }

    pub fn column(&self, j: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|i| self.data[i][j].clone()).collect()
    }

    pub fn from_columns(field: &Field, rows: usize, cols: Vec<Vec<FieldElement>>) -> FieldMatrix {
        let ncols = cols.len();
        let mut m = FieldMatrix::zeros(field, rows, ncols);
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for i in 0..rows {
                m.data[i][j] = c[i].clone();
            }
        }
        m
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Result<Vec<usize>> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..self.rows).find(|&i| !self.data[i][c].is_zero()) else {
                continue;
            };
            self.data.swap(r, p);
            let inv = f.inv(&self.data[r][c])?;
            for j in c..self.cols {
                self.data[r][j] = f.mul(&self.data[r][j], &inv);
            }
            for i in 0..self.rows {
                if i != r && !self.data[i][c].is_zero() {
                    let factor = self.data[i][c].clone();
                    for j in c..self.cols {
                        let s = f.mul(&factor, &self.data[r][j]);
                        self.data[i][j] = f.sub(&self.data[i][j], &s);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        Ok(pivots)
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(self.clone().rref()?.len())
    }

    /// Basis of the right kernel, one column vector per free column.
    pub fn kernel_basis(&self) -> Result<Vec<Vec<FieldElement>>> {
        let f = self.field.clone();
        let mut m = self.clone();
        let pivots = m.rref()?;
        let mut basis = Vec::new();
        let mut piv_of_col = vec![None; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            piv_of_col[c] = Some(r);
        }
        for free in 0..self.cols {
            if piv_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = f.neg(&m.data[r][free]);
            }
            basis.push(v);
        }
        Ok(basis)
    }

    /// Independent columns of self: the original columns at the pivot
    /// positions of the echelon form.
    pub fn column_space_basis(&self) -> Result<Vec<Vec<FieldElement>>> {
        let pivots = self.clone().rref()?;
        Ok(pivots.iter().map(|&c| self.column(c)).collect())
    }
}

/// Solve B * X = C where the columns of B are linearly independent; errors if
/// some column of C lies outside the span.
pub fn solve_matrix(b: &FieldMatrix, c: &FieldMatrix) -> Result<FieldMatrix> {
    assert_eq!(b.rows, c.rows);
    let f = b.field.clone();
    let mut aug = FieldMatrix::zeros(&f, b.rows, b.cols + c.cols);
    for i in 0..b.rows {
        for j in 0..b.cols {
            aug.data[i][j] = b.data[i][j].clone();
        }
        for j in 0..c.cols {
            aug.data[i][b.cols + j] = c.data[i][j].clone();
        }
    }
    let pivots = aug.rref()?;
    // every pivot must land inside the B block, one per column
    if pivots.len() != b.cols || pivots.iter().any(|&c| c >= b.cols) {
        return Err(Error::Internal(
            "solve_matrix: right-hand side outside the column span".into(),
        ));
    }
    let mut x = FieldMatrix::zeros(&f, b.cols, c.cols);
    for (r, &pc) in pivots.iter().enumerate() {
        for j in 0..c.cols {
            x.data[pc][j] = aug.data[r][b.cols + j].clone();
        }
    }
    Ok(x)
}

/// Trace of an endomorphism `g` of the ambient space restricted to the
/// subspace spanned by the columns of `basis` (assumed invariant).
pub fn restricted_trace(g: &FieldMatrix, basis: &FieldMatrix) -> Result<FieldElement> {
    if basis.cols == 0 {
        return Ok(g.field.zero());
    }
    let image = g.mul(basis);
    let x = solve_matrix(basis, &image)?;
    Ok(x.trace())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use num::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn qm(field: &Field, rows: &[&[i64]]) -> FieldMatrix {
        FieldMatrix::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_and_rank() {
        let f = FieldSpec::rational();
        let mut m = qm(&f, &[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let pivots = m.rref().unwrap();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(m.data[0][0], f.from_i64(1));
        assert_eq!(m.data[0][1], f.from_i64(0));
        // row reduce by hand: rows (1,2,3),(1,0,1) give (1,0,1),(0,1,1)
        assert_eq!(m.data[0][2], f.from_i64(1));
        assert_eq!(m.data[1][2], f.from_rational(q(1, 1)));
    }

    #[test]
    fn kernel_of_rank_deficient_map() {
        let f = FieldSpec::rational();
        let m = qm(&f, &[&[1, 2, 3], &[2, 4, 6]]);
        let k = m.kernel_basis().unwrap();
        assert_eq!(k.len(), 2);
        for v in &k {
            let col = FieldMatrix::from_columns(&f, 3, vec![v.clone()]);
            assert!(m.mul(&col).data.iter().all(|r| r[0].is_zero()));
        }
    }

    #[test]
    fn solve_and_restricted_trace() {
        let f = FieldSpec::rational();
        // g = [[0,1],[1,0]] swaps coordinates; restricted to span{(1,1)} it
        // is the identity, on span{(1,-1)} it is -1
        let g = qm(&f, &[&[0, 1], &[1, 0]]);
        let plus = qm(&f, &[&[1], &[1]]);
        let minus = qm(&f, &[&[1], &[-1]]);
        assert_eq!(restricted_trace(&g, &plus).unwrap(), f.from_i64(1));
        assert_eq!(restricted_trace(&g, &minus).unwrap(), f.from_i64(-1));
        let both = qm(&f, &[&[1, 1], &[1, -1]]);
        assert_eq!(restricted_trace(&g, &both).unwrap(), f.from_i64(0));
        // inconsistent system rejected
        let b = qm(&f, &[&[1], &[0]]);
        let c = qm(&f, &[&[0], &[1]]);
        assert!(solve_matrix(&b, &c).is_err());
    }

    #[test]
    fn column_space_basis_picks_original_columns() {
        let f = FieldSpec::rational();
        let m = qm(&f, &[&[1, 2, 0], &[2, 4, 1]]);
        let b = m.column_space_basis().unwrap();
        assert_eq!(b.len(), 2);
        assert_eq!(b[0], vec![f.from_i64(1), f.from_i64(2)]);
        assert_eq!(b[1], vec![f.from_i64(0), f.from_i64(1)]);
    }
}
