//! Minimal graded free resolutions.
//!
//! Syzygies are taken one homological degree at a time; after each step the
//! new differential is pruned of unit entries before the next syzygy
//! computation, so every stored differential is minimal and the length bound
//! of the ambient ring applies.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::groebner::syzygies;
use crate::matrix::{FreeModule, PolyMatrix};
use crate::poly::Polynomial;
use crate::ring::Ring;

#[derive(Debug, Clone)]
pub struct ChainComplex {
    pub ring: Ring,
    pub f0: FreeModule,
    /// differentials[i] is d_{i+1}: F_{i+1} -> F_i.
    pub differentials: Vec<PolyMatrix>,
}

impl ChainComplex {
    /// Homological length: largest i with F_i nonzero.
    pub fn length(&self) -> usize {
        self.differentials.len()
    }

    pub fn module(&self, i: usize) -> FreeModule {
        if i == 0 {
            self.f0.clone()
        } else if i <= self.differentials.len() {
            self.differentials[i - 1].source.clone()
        } else {
            FreeModule::new(vec![])
        }
    }

    /// d_i for 1 <= i <= length.
    pub fn differential(&self, i: usize) -> &PolyMatrix {
        &self.differentials[i - 1]
    }

    pub fn verify(&self) -> Result<()> {
        for w in self.differentials.windows(2) {
            if !w[0].mul(&w[1])?.is_zero() {
                return Err(Error::Internal(
                    "consecutive differentials do not compose to zero".into(),
                ));
            }
        }
        Ok(())
    }

    pub fn is_minimal(&self) -> bool {
        self.differentials.iter().all(|d| {
            d.entries
                .iter()
                .flatten()
                .all(|e| e.is_zero() || !e.is_constant())
        })
    }

    /// Graded Betti numbers: rank of F_i in each generating degree.
    pub fn betti_table(&self) -> Vec<BTreeMap<i64, usize>> {
        (0..=self.length())
            .map(|i| {
                let mut row = BTreeMap::new();
                for &d in &self.module(i).degrees {
                    *row.entry(d).or_insert(0) += 1;
                }
                row
            })
            .collect()
    }
}

/// Remove one unit entry at (k0, j0) of `d` by column and row operations,
/// dropping generator j0 of the source and k0 of the target. The matching
/// column of the previous differential is zero by exactness and is dropped.
fn prune_entry(
    prev: Option<&mut PolyMatrix>,
    d: &mut PolyMatrix,
    k0: usize,
    j0: usize,
) -> Result<()> {
    let ring = d.ring.clone();
    let c = d.entries[k0][j0].constant_term();
    let cinv = ring.field.inv(&c)?;
    let mut e = d.entries.clone();
    // clear the pivot row
    for j in 0..d.cols() {
        if j == j0 || e[k0][j].is_zero() {
            continue;
        }
        let q = e[k0][j].scale(&cinv);
        for k in 0..d.rows() {
            let s = q.mul(&e[k][j0]);
            e[k][j] = e[k][j].sub(&s);
        }
    }
    // clear the pivot column against the original column entries
    let col0: Vec<Polynomial> = (0..d.rows()).map(|k| d.entries[k][j0].clone()).collect();
    for k in 0..d.rows() {
        if k == k0 || col0[k].is_zero() {
            continue;
        }
        let q = col0[k].scale(&cinv);
        for j in 0..d.cols() {
            let s = q.mul(&e[k0][j]);
            e[k][j] = e[k][j].sub(&s);
        }
    }
    if let Some(prev) = prev {
        // the new basis vector replacing target generator k0 lies in the
        // image of d, so the previous differential kills it
        let mut check = vec![Polynomial::zero(&ring); prev.rows()];
        for (k, ck) in col0.iter().enumerate() {
            let q = ck.scale(&cinv);
            for r in 0..prev.rows() {
                let s = prev.entries[r][k].mul(&q);
                check[r] = check[r].add(&s);
            }
        }
        if check.iter().any(|p| !p.is_zero()) {
            return Err(Error::Internal(
                "pruned generator survives in the previous differential".into(),
            ));
        }
        let mut pe = prev.entries.clone();
        for row in &mut pe {
            row.remove(k0);
        }
        let mut src = prev.source.degrees.clone();
        src.remove(k0);
        *prev = PolyMatrix::new(&ring, prev.target.clone(), FreeModule::new(src), pe)?;
    }
    e.remove(k0);
    for row in &mut e {
        row.remove(j0);
    }
    let mut tgt = d.target.degrees.clone();
    tgt.remove(k0);
    let mut src = d.source.degrees.clone();
    src.remove(j0);
    *d = PolyMatrix::new(&ring, FreeModule::new(tgt), FreeModule::new(src), e)?;
    Ok(())
}

/// Drop columns that are identically zero; they present the zero element as
/// a generator and can appear after pruning removes a duplicate relation.
fn drop_zero_columns(d: &mut PolyMatrix) -> Result<()> {
    let keep: Vec<usize> = (0..d.cols())
        .filter(|&j| d.entries.iter().any(|row| !row[j].is_zero()))
        .collect();
    if keep.len() == d.cols() {
        return Ok(());
    }
    let entries: Vec<Vec<Polynomial>> = d
        .entries
        .iter()
        .map(|row| keep.iter().map(|&j| row[j].clone()).collect())
        .collect();
    let src = FreeModule::new(keep.iter().map(|&j| d.source.degrees[j]).collect());
    *d = PolyMatrix::new(&d.ring, d.target.clone(), src, entries)?;
    Ok(())
}

/// Eliminate every unit entry of `d`, updating `prev` consistently.
fn prune(mut prev: Option<&mut PolyMatrix>, d: &mut PolyMatrix) -> Result<()> {
    loop {
        let mut pivot = None;
        'scan: for k in 0..d.rows() {
            for j in 0..d.cols() {
                let e = &d.entries[k][j];
                if !e.is_zero() && e.is_constant() {
                    pivot = Some((k, j));
                    break 'scan;
                }
            }
        }
        let Some((k, j)) = pivot else {
            drop_zero_columns(d)?;
            return Ok(());
        };
        prune_entry(prev.as_deref_mut(), d, k, j)?;
    }
}

/// Minimal free resolution of coker(presentation).
pub fn free_resolution(presentation: &PolyMatrix) -> Result<ChainComplex> {
    let ring = presentation.ring.clone();
    let mut d1 = presentation.clone();
    prune(None, &mut d1)?;
    let f0 = d1.target.clone();
    let mut diffs: Vec<PolyMatrix> = Vec::new();
    if d1.cols() > 0 {
        diffs.push(d1);
    }
    let cap = ring.nvars() + 2;
    while let Some(last) = diffs.last() {
        if diffs.len() > cap {
            return Err(Error::Internal(
                "resolution exceeds the length bound of the ring".into(),
            ));
        }
        let mut next = syzygies(last)?;
        let prev = diffs.last_mut().unwrap();
        prune(Some(prev), &mut next)?;
        if next.cols() == 0 {
            break;
        }
        diffs.push(next);
    }
    let complex = ChainComplex {
        ring,
        f0,
        differentials: diffs,
    };
    complex.verify()?;
    if !complex.is_minimal() {
        return Err(Error::Internal("resolution failed to minimize".into()));
    }
    Ok(complex)
}

/// Resolution of the quotient of the ring by an ideal, presented by a single
/// row of generators.
pub fn resolve_quotient(ring: &Ring, gens: &[Polynomial]) -> Result<ChainComplex> {
    let row = PolyMatrix::from_row(ring, gens)?;
    free_resolution(&row)
}
