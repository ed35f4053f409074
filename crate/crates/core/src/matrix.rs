//! Graded free modules and matrices of polynomials between them.

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::poly::{LinearSubstitution, Polynomial};
use crate::ring::Ring;

/// Graded free module, described by its generator degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeModule {
    pub degrees: Vec<i64>,
}

impl FreeModule {
    pub fn new(degrees: Vec<i64>) -> FreeModule {
        FreeModule { degrees }
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }
}

/// Matrix of polynomials, graded-homogeneous: entry (k, j) is zero or
/// homogeneous of degree source.deg(j) - target.deg(k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    pub ring: Ring,
    pub target: FreeModule,
    pub source: FreeModule,
    /// Row-major: entries[k][j] maps source generator j into target slot k.
    pub entries: Vec<Vec<Polynomial>>,
}

impl PolyMatrix {
    pub fn new(
        ring: &Ring,
        target: FreeModule,
        source: FreeModule,
        entries: Vec<Vec<Polynomial>>,
    ) -> Result<PolyMatrix> {
        let m = PolyMatrix {
            ring: ring.clone(),
            target,
            source,
            entries,
        };
        m.check_graded()?;
        Ok(m)
    }

    fn check_graded(&self) -> Result<()> {
        if self.entries.len() != self.target.rank() {
            return Err(Error::Usage("matrix row count mismatch".into()));
        }
        for (k, row) in self.entries.iter().enumerate() {
            if row.len() != self.source.rank() {
                return Err(Error::Usage("matrix column count mismatch".into()));
            }
            for (j, f) in row.iter().enumerate() {
                if f.is_zero() {
                    continue;
                }
                let want = self.source.degrees[j] - self.target.degrees[k];
                match f.homogeneous_degree() {
                    Some(d) if i64::from(d) == want => {}
                    _ => {
                        return Err(Error::Usage(format!(
                            "entry ({k}, {j}) is not homogeneous of degree {want}"
                        )))
                    }
                }
            }
        }
        Ok(())
    }

    /// 1 x g row matrix with target R (degree 0) and source degrees read off
    /// the homogeneous generators.
    pub fn from_row(ring: &Ring, gens: &[Polynomial]) -> Result<PolyMatrix> {
        let mut degrees = Vec::with_capacity(gens.len());
        for g in gens {
            let d = g
                .homogeneous_degree()
                .ok_or_else(|| Error::Usage("generators must be homogeneous and nonzero".into()))?;
            degrees.push(i64::from(d));
        }
        PolyMatrix::new(
            ring,
            FreeModule::new(vec![0]),
            FreeModule::new(degrees),
            vec![gens.to_vec()],
        )
    }

    pub fn identity(ring: &Ring, module: &FreeModule) -> PolyMatrix {
        let r = module.rank();
        let entries = (0..r)
            .map(|k| {
                (0..r)
                    .map(|j| {
                        if k == j {
                            Polynomial::one(ring)
                        } else {
                            Polynomial::zero(ring)
                        }
                    })
                    .collect()
            })
            .collect();
        PolyMatrix {
            ring: ring.clone(),
            target: module.clone(),
            source: module.clone(),
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.target.rank()
    }

    pub fn cols(&self) -> usize {
        self.source.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|f| f.is_zero())
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        self.entries.iter().map(|row| row[j].clone()).collect()
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols() != other.rows() {
            return Err(Error::Usage("matrix product shape mismatch".into()));
        }
        let ring = &self.ring;
        let mut entries = vec![vec![Polynomial::zero(ring); other.cols()]; self.rows()];
        for k in 0..self.rows() {
            for j in 0..other.cols() {
                let mut acc = Polynomial::zero(ring);
                for l in 0..self.cols() {
                    if self.entries[k][l].is_zero() || other.entries[l][j].is_zero() {
                        continue;
                    }
                    acc = acc.add(&self.entries[k][l].mul(&other.entries[l][j]));
                }
                entries[k][j] = acc;
            }
        }
        PolyMatrix::new(ring, self.target.clone(), other.source.clone(), entries)
    }

    pub fn sub(&self, other: &PolyMatrix) -> PolyMatrix {
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(r1, r2)| r1.iter().zip(r2).map(|(a, b)| a.sub(b)).collect())
            .collect();
        PolyMatrix {
            ring: self.ring.clone(),
            target: self.target.clone(),
            source: self.source.clone(),
            entries,
        }
    }

    /// Entrywise image under a degree-preserving substitution.
    pub fn apply_substitution(&self, s: &LinearSubstitution) -> PolyMatrix {
        let max_degree = self
            .entries
            .iter()
            .flatten()
            .filter_map(|f| f.total_degree())
            .max()
            .unwrap_or(0);
        let images = s.monomial_images(max_degree);
        PolyMatrix {
            ring: self.ring.clone(),
            target: self.target.clone(),
            source: self.source.clone(),
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|f| s.apply_cached(f, &images)).collect())
                .collect(),
        }
    }

    /// Trace of the degree-0 (constant) part, per internal degree of the
    /// shared generator degrees; caller guarantees target == source shape.
    pub fn constant_diagonal_trace_by_degree(&self) -> Vec<(i64, FieldElement)> {
        let field = &self.ring.field;
        let mut degrees: Vec<i64> = self.source.degrees.clone();
        degrees.sort_unstable();
        degrees.dedup();
        degrees
            .into_iter()
            .map(|d| {
                let mut acc = field.zero();
                for (k, &dk) in self.source.degrees.iter().enumerate() {
                    if dk == d {
                        acc = field.add(&acc, &self.entries[k][k].constant_term());
                    }
                }
                (d, acc)
            })
            .collect()
    }
}

/// n x |fs| matrix of partial derivatives d f_j / d x_i.
pub fn jacobian(ring: &Ring, fs: &[Polynomial]) -> Result<PolyMatrix> {
    if fs.is_empty() {
        return Err(Error::Usage("jacobian of an empty list".into()));
    }
    let n = ring.nvars();
    let mut source = Vec::with_capacity(fs.len());
    for f in fs {
        // constants have zero jacobian columns; give them degree 1 to keep the
        // grading consistent
        let d = f.homogeneous_degree().map(i64::from).unwrap_or(1);
        source.push(d);
    }
    let entries = (0..n)
        .map(|i| fs.iter().map(|f| f.partial_derivative(i)).collect())
        .collect();
    PolyMatrix::new(
        ring,
        FreeModule::new(vec![1; n]),
        FreeModule::new(source),
        entries,
    )
}

/// Cofactor determinant of a square polynomial matrix (small sizes).
pub fn determinant(ring: &Ring, m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    if n == 0 {
        return Polynomial::one(ring);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = Polynomial::zero(ring);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, f)| f.clone())
                    .collect()
            })
            .collect();
        let cof = m[0][j].mul(&determinant(ring, &minor));
        det = if j % 2 == 0 {
            det.add(&cof)
        } else {
            det.sub(&cof)
        };
    }
    det
}

/// c * det(matrix of second partials of f).
pub fn hessian_det_scaled(ring: &Ring, f: &Polynomial, c: &FieldElement) -> Polynomial {
    let n = ring.nvars();
    let firsts: Vec<Polynomial> = (0..n).map(|i| f.partial_derivative(i)).collect();
    let hess: Vec<Vec<Polynomial>> = (0..n)
        .map(|i| (0..n).map(|j| firsts[j].partial_derivative(i)).collect())
        .collect();
    determinant(ring, &hess).scale(c)
}

/// All k x k minors in row-major lexicographic order of index subsets;
/// zero minors dropped.
pub fn minors(k: usize, m: &PolyMatrix) -> Result<Vec<Polynomial>> {
    let (rows, cols) = (m.rows(), m.cols());
    if k < 1 || k > rows.min(cols) {
        return Err(Error::Usage(format!("minor size {k} out of range")));
    }
    let row_sets = subsets(rows, k);
    let col_sets = subsets(cols, k);
    let mut out = Vec::new();
    for rs in &row_sets {
        for cs in &col_sets {
            let sub: Vec<Vec<Polynomial>> = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| m.entries[r][c].clone()).collect())
                .collect();
            let d = determinant(&m.ring, &sub);
            if !d.is_zero() {
                out.push(d);
            }
        }
    }
    Ok(out)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
