//! Buchberger's algorithm for submodules of graded free modules, with
//! transition tracking, syzygy extraction, and lifting through surjections.
//!
//! Everything runs on augmented vectors in R^t (+) R^s under a block
//! order that eliminates the first t components: reducing an augmented
//! column (m_j, e_j) keeps the identity block1 = M * block2, so basis tails
//! are transition data, elements with vanishing first block are syzygies,
//! and division of (b, 0) yields a lift of b through M.

use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashSet, VecDeque};

use crate::budget;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::matrix::{FreeModule, PolyMatrix};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::Ring;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModTerm {
    pub coeff: FieldElement,
    pub mono: Monomial,
    pub comp: usize,
}

/// Element of a free module: sparse terms sorted strictly descending in the
/// ambient module order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ModPoly {
    pub terms: Vec<ModTerm>,
}

/// Module monomial order: components below `split` dominate the rest
/// (elimination of the first block); within a block the base order decides,
/// ties broken by smaller component.
#[derive(Debug, Clone)]
pub struct ModuleOrder {
    pub base: MonomialOrder,
    pub split: usize,
    /// Generator degree per component, used for homogeneous pair selection.
    pub comp_degrees: Vec<i64>,
}

impl ModuleOrder {
    pub fn cmp_term(&self, a: (&Monomial, usize), b: (&Monomial, usize)) -> Ordering {
        let ba = a.1 >= self.split;
        let bb = b.1 >= self.split;
        if ba != bb {
            // the eliminated block is greater
            return if ba {
                Ordering::Less
            } else {
                Ordering::Greater
            };
        }
        self.base.cmp(a.0, b.0).then_with(|| b.1.cmp(&a.1))
    }
}

impl ModPoly {
    pub fn zero() -> ModPoly {
        ModPoly { terms: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&ModTerm> {
        self.terms.first()
    }

    pub fn from_terms(order: &ModuleOrder, field: &Field, mut terms: Vec<ModTerm>) -> ModPoly {
        terms.sort_by(|a, b| order.cmp_term((&b.mono, b.comp), (&a.mono, a.comp)));
        let mut out: Vec<ModTerm> = Vec::with_capacity(terms.len());
        for t in terms {
            if let Some(last) = out.last_mut() {
                if last.mono == t.mono && last.comp == t.comp {
                    last.coeff = field.add(&last.coeff, &t.coeff);
                    continue;
                }
            }
            out.push(t);
        }
        out.retain(|t| !t.coeff.is_zero());
        ModPoly { terms: out }
    }

    /// The part of the element living in components >= split, shifted down.
    pub fn block2(&self, split: usize) -> Vec<ModTerm> {
        self.terms
            .iter()
            .filter(|t| t.comp >= split)
            .map(|t| ModTerm {
                coeff: t.coeff.clone(),
                mono: t.mono.clone(),
                comp: t.comp - split,
            })
            .collect()
    }

    pub fn block1_is_zero(&self, split: usize) -> bool {
        self.terms.iter().all(|t| t.comp >= split)
    }

    fn scale(&self, field: &Field, c: &FieldElement) -> ModPoly {
        ModPoly {
            terms: self
                .terms
                .iter()
                .map(|t| ModTerm {
                    coeff: field.mul(&t.coeff, c),
                    mono: t.mono.clone(),
                    comp: t.comp,
                })
                .collect(),
        }
    }
}

/// work - c * x^shift * g, where work is sorted descending; returns sorted.
fn sub_scaled(
    order: &ModuleOrder,
    field: &Field,
    work: &VecDeque<ModTerm>,
    g: &ModPoly,
    c: &FieldElement,
    shift: &Monomial,
) -> VecDeque<ModTerm> {
    let mut out = VecDeque::with_capacity(work.len() + g.terms.len());
    let mut wi = work.iter().peekable();
    let mut gi = g.terms.iter().peekable();
    loop {
        match (wi.peek(), gi.peek()) {
            (None, None) => break,
            (Some(_), None) => {
                out.push_back((*wi.next().unwrap()).clone());
            }
            (None, Some(_)) => {
                let t = gi.next().unwrap();
                out.push_back(ModTerm {
                    coeff: field.neg(&field.mul(&t.coeff, c)),
                    mono: t.mono.mul(shift),
                    comp: t.comp,
                });
            }
            (Some(w), Some(t)) => {
                let tm = t.mono.mul(shift);
                match order.cmp_term((&w.mono, w.comp), (&tm, t.comp)) {
                    Ordering::Greater => out.push_back((*wi.next().unwrap()).clone()),
                    Ordering::Less => {
                        let t = gi.next().unwrap();
                        out.push_back(ModTerm {
                            coeff: field.neg(&field.mul(&t.coeff, c)),
                            mono: tm,
                            comp: t.comp,
                        });
                    }
                    Ordering::Equal => {
                        let w = wi.next().unwrap();
                        let t = gi.next().unwrap();
                        let coeff = field.sub(&w.coeff, &field.mul(&t.coeff, c));
                        if !coeff.is_zero() {
                            out.push_back(ModTerm {
                                coeff,
                                mono: tm,
                                comp: t.comp,
                            });
                        }
                    }
                }
            }
        }
    }
    out
}

/// Shared state for a module Groebner computation.
pub struct Engine {
    pub field: Field,
    pub order: ModuleOrder,
}

impl Engine {
    /// Full normal form against block-1 leading terms of `basis` (monic).
    /// Divisors are tried in stored order, or reversed when `reverse` is set.
    pub fn reduce(&self, f: &ModPoly, basis: &[ModPoly], reverse: bool) -> ModPoly {
        let mut done: Vec<ModTerm> = Vec::new();
        let mut work: VecDeque<ModTerm> = f.terms.iter().cloned().collect();
        'outer: while let Some(t) = work.front() {
            if t.comp < self.order.split {
                let idx: Box<dyn Iterator<Item = usize>> = if reverse {
                    Box::new((0..basis.len()).rev())
                } else {
                    Box::new(0..basis.len())
                };
                for k in idx {
                    let lt = basis[k].lead().expect("basis elements are nonzero");
                    if lt.comp == t.comp && lt.mono.divides(&t.mono) {
                        let shift = t.mono.div(&lt.mono).unwrap();
                        let c = t.coeff.clone();
                        work = sub_scaled(&self.order, &self.field, &work, &basis[k], &c, &shift);
                        continue 'outer;
                    }
                }
            }
            done.push(work.pop_front().unwrap());
        }
        ModPoly { terms: done }
    }

    fn spoly(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        let la = a.lead().unwrap();
        let lb = b.lead().unwrap();
        debug_assert_eq!(la.comp, lb.comp);
        let l = la.mono.lcm(&lb.mono);
        let sa = l.div(&la.mono).unwrap();
        let sb = l.div(&lb.mono).unwrap();
        // both monic
        let mut terms: Vec<ModTerm> = a
            .terms
            .iter()
            .map(|t| ModTerm {
                coeff: t.coeff.clone(),
                mono: t.mono.mul(&sa),
                comp: t.comp,
            })
            .collect();
        terms.extend(b.terms.iter().map(|t| ModTerm {
            coeff: self.field.neg(&t.coeff),
            mono: t.mono.mul(&sb),
            comp: t.comp,
        }));
        ModPoly::from_terms(&self.order, &self.field, terms)
    }

    /// Multiply an augmented vector by a plain polynomial (component 0 data).
    fn mul_ring_poly(&self, v: &ModPoly, p: &[(FieldElement, Monomial)]) -> ModPoly {
        let mut terms = Vec::with_capacity(v.terms.len() * p.len());
        for (c, m) in p {
            for t in &v.terms {
                terms.push(ModTerm {
                    coeff: self.field.mul(&t.coeff, c),
                    mono: t.mono.mul(m),
                    comp: t.comp,
                });
            }
        }
        ModPoly::from_terms(&self.order, &self.field, terms)
    }
}

pub struct GbOutput {
    pub engine: Engine,
    /// Reduced monic basis; every lead lies in the first block, sorted
    /// ascending by lead term.
    pub basis: Vec<ModPoly>,
    /// Kernel generators over the second block (components shifted to 0..s),
    /// only populated when syzygies were requested.
    pub syzygies: Vec<ModPoly>,
}

/// Buchberger with normal selection (lowest degree pair first) and the chain
/// criterion; the coprimality criterion additionally applies when the first
/// block has rank 1 (ring polynomials).
pub fn buchberger_core(
    field: &Field,
    gens: Vec<ModPoly>,
    order: ModuleOrder,
    want_syz: bool,
) -> Result<GbOutput> {
    let engine = Engine {
        field: field.clone(),
        order,
    };
    let split = engine.order.split;
    let product_criterion = split == 1;
    let mut basis: Vec<ModPoly> = Vec::new();
    let mut syzygies: Vec<ModPoly> = Vec::new();
    // (degree, i, j) min-heap; done holds processed or skipped pairs
    let mut pairs: BinaryHeap<std::cmp::Reverse<(i64, usize, usize)>> = BinaryHeap::new();
    let mut done: HashSet<(usize, usize)> = HashSet::new();

    let insert = |basis: &mut Vec<ModPoly>,
                  syzygies: &mut Vec<ModPoly>,
                  pairs: &mut BinaryHeap<std::cmp::Reverse<(i64, usize, usize)>>,
                  engine: &Engine,
                  r: ModPoly|
     -> Result<()> {
        if r.block1_is_zero(split) {
            if want_syz && !r.is_zero() {
                syzygies.push(r);
            }
            return Ok(());
        }
        let lc = r.lead().unwrap().coeff.clone();
        let monic = r.scale(&engine.field, &engine.field.inv(&lc)?);
        let new_idx = basis.len();
        let new_lead = monic.lead().unwrap().clone();
        for (k, g) in basis.iter().enumerate() {
            let lt = g.lead().unwrap();
            if lt.comp == new_lead.comp {
                let lcm = lt.mono.lcm(&new_lead.mono);
                let deg = i64::from(lcm.degree()) + engine.order.comp_degrees[lt.comp];
                pairs.push(std::cmp::Reverse((deg, k, new_idx)));
            }
        }
        basis.push(monic);
        Ok(())
    };

    for g in &gens {
        budget::check()?;
        let r = engine.reduce(g, &basis, false);
        insert(&mut basis, &mut syzygies, &mut pairs, &engine, r)?;
    }

    while let Some(std::cmp::Reverse((_, i, j))) = pairs.pop() {
        budget::check()?;
        if !done.insert((i, j)) {
            continue;
        }
        let (li, lj) = (
            basis[i].lead().unwrap().clone(),
            basis[j].lead().unwrap().clone(),
        );
        let lcm = li.mono.lcm(&lj.mono);
        // chain criterion
        let mut skip = false;
        for (k, g) in basis.iter().enumerate() {
            if k == i || k == j {
                continue;
            }
            let lt = g.lead().unwrap();
            if lt.comp == li.comp && lt.mono.divides(&lcm) {
                let p1 = (i.min(k), i.max(k));
                let p2 = (j.min(k), j.max(k));
                if done.contains(&p1) && done.contains(&p2) {
                    skip = true;
                    break;
                }
            }
        }
        if skip {
            continue;
        }
        // coprimality criterion, with its closed-form syzygy when tracking
        if product_criterion && li.mono.coprime(&lj.mono) {
            if want_syz {
                let pi: Vec<(FieldElement, Monomial)> = basis[i]
                    .terms
                    .iter()
                    .filter(|t| t.comp < split)
                    .map(|t| (t.coeff.clone(), t.mono.clone()))
                    .collect();
                let pj: Vec<(FieldElement, Monomial)> = basis[j]
                    .terms
                    .iter()
                    .filter(|t| t.comp < split)
                    .map(|t| (t.coeff.clone(), t.mono.clone()))
                    .collect();
                let a = engine.mul_ring_poly(&basis[i], &pj);
                let b = engine.mul_ring_poly(&basis[j], &pi);
                let s = ModPoly::from_terms(
                    &engine.order,
                    &engine.field,
                    a.terms
                        .into_iter()
                        .chain(b.terms.into_iter().map(|t| ModTerm {
                            coeff: engine.field.neg(&t.coeff),
                            mono: t.mono,
                            comp: t.comp,
                        }))
                        .collect(),
                );
                if !s.block1_is_zero(split) {
                    return Err(Error::Internal(
                        "Koszul syzygy has nonzero first block".into(),
                    ));
                }
                if !s.is_zero() {
                    syzygies.push(s);
                }
            }
            continue;
        }
        let s = engine.spoly(&basis[i], &basis[j]);
        let r = engine.reduce(&s, &basis, false);
        insert(&mut basis, &mut syzygies, &mut pairs, &engine, r)?;
    }

    // interreduce: drop elements whose lead is divisible by another kept lead
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        let li = basis[i].lead().unwrap().clone();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let lj = basis[j].lead().unwrap();
            if lj.comp == li.comp && lj.mono.divides(&li.mono) && (lj.mono != li.mono || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut reduced: Vec<ModPoly> = basis
        .iter()
        .zip(&keep)
        .filter(|(_, k)| **k)
        .map(|(g, _)| g.clone())
        .collect();
    // tail-reduce each element against the others
    for i in 0..reduced.len() {
        let mut others: Vec<ModPoly> = Vec::with_capacity(reduced.len() - 1);
        others.extend(reduced[..i].iter().cloned());
        others.extend(reduced[i + 1..].iter().cloned());
        reduced[i] = engine.reduce(&reduced[i], &others, false);
    }
    reduced.sort_by(|a, b| {
        let la = a.lead().unwrap();
        let lb = b.lead().unwrap();
        engine
            .order
            .cmp_term((&la.mono, la.comp), (&lb.mono, lb.comp))
    });

    if want_syz {
        // residual relations of the original generators against the final basis
        for g in &gens {
            let r = engine.reduce(g, &reduced, false);
            if !r.block1_is_zero(split) {
                return Err(Error::Internal(
                    "input generator does not reduce to zero against its basis".into(),
                ));
            }
            if !r.is_zero() {
                syzygies.push(r);
            }
        }
    }

    // a degenerate input generator is recorded both at insertion and by the
    // residual pass; keep one copy
    let mut unique: Vec<ModPoly> = Vec::with_capacity(syzygies.len());
    for s in syzygies {
        if !unique.contains(&s) {
            unique.push(s);
        }
    }

    Ok(GbOutput {
        engine,
        basis: reduced,
        syzygies: unique,
    })
}

// ---------------------------------------------------------------------------
// ring-level wrappers
// ---------------------------------------------------------------------------

/// Reduced Groebner basis of an ideal, with optional transition tracking.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub ring: Ring,
    pub order: MonomialOrder,
    pub elements: Vec<Polynomial>,
    /// transition[k][i]: basis element k = sum_i input_i * transition[k][i].
    pub transition: Option<Vec<Vec<Polynomial>>>,
}

fn poly_to_mod(order: &ModuleOrder, field: &Field, f: &Polynomial, comp: usize) -> ModPoly {
    ModPoly::from_terms(
        order,
        field,
        f.terms
            .iter()
            .map(|(c, m)| ModTerm {
                coeff: c.clone(),
                mono: m.clone(),
                comp,
            })
            .collect(),
    )
}

fn mod_to_poly(ring: &Ring, terms: &[ModTerm]) -> Polynomial {
    Polynomial::from_terms(
        ring,
        terms
            .iter()
            .map(|t| (t.coeff.clone(), t.mono.clone()))
            .collect(),
    )
}

/// Buchberger for a list of ring polynomials.
pub fn buchberger(
    gens: &[Polynomial],
    ring: &Ring,
    order: MonomialOrder,
    track: bool,
) -> Result<GroebnerBasis> {
    let n_in = gens.len();
    let morder = ModuleOrder {
        base: order,
        split: 1,
        comp_degrees: vec![0; 1 + n_in],
    };
    let field = &ring.field;
    let mut aug = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let mut v = poly_to_mod(&morder, field, g, 0);
        v.terms.push(ModTerm {
            coeff: field.one(),
            mono: Monomial::one(ring.nvars()),
            comp: 1 + i,
        });
        let terms = std::mem::take(&mut v.terms);
        aug.push(ModPoly::from_terms(&morder, field, terms));
    }
    let out = buchberger_core(field, aug, morder, false)?;
    let mut elements = Vec::new();
    let mut transition = Vec::new();
    for b in &out.basis {
        let head: Vec<ModTerm> = b.terms.iter().filter(|t| t.comp == 0).cloned().collect();
        elements.push(mod_to_poly(ring, &head));
        if track {
            let mut row = vec![Polynomial::zero(ring); n_in];
            for t in &b.terms {
                if t.comp >= 1 {
                    row[t.comp - 1] = row[t.comp - 1].add(&Polynomial::monomial_term(
                        ring,
                        t.coeff.clone(),
                        t.mono.clone(),
                    ));
                }
            }
            transition.push(row);
        }
    }
    Ok(GroebnerBasis {
        ring: ring.clone(),
        order,
        elements,
        transition: if track { Some(transition) } else { None },
    })
}

impl GroebnerBasis {
    fn engine(&self) -> (Engine, Vec<ModPoly>) {
        let order = ModuleOrder {
            base: self.order,
            split: 1,
            comp_degrees: vec![0],
        };
        let basis = self
            .elements
            .iter()
            .map(|g| poly_to_mod(&order, &self.ring.field, g, 0))
            .collect();
        (
            Engine {
                field: self.ring.field.clone(),
                order,
            },
            basis,
        )
    }

    /// Remainder of multivariate division; deterministic, divisors tried in
    /// the stored basis order.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let (engine, basis) = self.engine();
        let v = poly_to_mod(&engine.order, &self.ring.field, f, 0);
        let r = engine.reduce(&v, &basis, false);
        mod_to_poly(&self.ring, &r.terms)
    }

    pub fn reduces_to_zero(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Two reduced monic bases present the same ideal iff they are equal.
    pub fn same_ideal(&self, other: &GroebnerBasis) -> bool {
        self.order == other.order && self.elements == other.elements
    }
}

// ---------------------------------------------------------------------------
// matrix-level operations
// ---------------------------------------------------------------------------

/// Groebner basis of the column module of a matrix, retaining augmentation
/// tails so columns of other matrices can be divided (lifted) against it.
pub struct MatrixGb {
    pub ring: Ring,
    pub target: FreeModule,
    engine: Engine,
    basis: Vec<ModPoly>,
    pub syzygies: Vec<ModPoly>,
    ncols: usize,
}

pub fn matrix_gb(m: &PolyMatrix, want_syz: bool) -> Result<MatrixGb> {
    let t = m.rows();
    let s = m.cols();
    let ring = &m.ring;
    let field = &ring.field;
    let mut comp_degrees = m.target.degrees.clone();
    comp_degrees.extend_from_slice(&m.source.degrees);
    let order = ModuleOrder {
        base: ring.order,
        split: t,
        comp_degrees,
    };
    let mut gens = Vec::with_capacity(s);
    for j in 0..s {
        let mut terms: Vec<ModTerm> = Vec::new();
        for (k, row) in m.entries.iter().enumerate() {
            for (c, mono) in &row[j].terms {
                terms.push(ModTerm {
                    coeff: c.clone(),
                    mono: mono.clone(),
                    comp: k,
                });
            }
        }
        terms.push(ModTerm {
            coeff: field.one(),
            mono: Monomial::one(ring.nvars()),
            comp: t + j,
        });
        gens.push(ModPoly::from_terms(&order, field, terms));
    }
    let out = buchberger_core(field, gens, order, want_syz)?;
    Ok(MatrixGb {
        ring: ring.clone(),
        target: m.target.clone(),
        engine: out.engine,
        basis: out.basis,
        syzygies: out.syzygies,
        ncols: s,
    })
}

impl MatrixGb {
    /// Solve D * X = B column by column; errors if some column of B is not in
    /// the column image of D. With `reverse`, divisors are tried in reversed
    /// stored order (the lift may differ, the Betti characters may not).
    pub fn lift(&self, b: &PolyMatrix, reverse: bool) -> Result<PolyMatrix> {
        let field = &self.ring.field;
        if b.target != self.target {
            return Err(Error::Usage("lift target mismatch".into()));
        }
        let split = self.engine.order.split;
        let mut cols: Vec<Vec<Polynomial>> = Vec::with_capacity(b.cols());
        for j in 0..b.cols() {
            let mut terms: Vec<ModTerm> = Vec::new();
            for (k, row) in b.entries.iter().enumerate() {
                for (c, mono) in &row[j].terms {
                    terms.push(ModTerm {
                        coeff: c.clone(),
                        mono: mono.clone(),
                        comp: k,
                    });
                }
            }
            let v = ModPoly::from_terms(&self.engine.order, field, terms);
            let r = self.engine.reduce(&v, &self.basis, reverse);
            if !r.block1_is_zero(split) {
                return Err(Error::NotInImage { column: j });
            }
            // (b, 0) - combination = (0, s)  =>  X column = -s
            let mut col = vec![Polynomial::zero(&self.ring); self.ncols];
            for t in r.block2(split) {
                col[t.comp] = col[t.comp].add(&Polynomial::monomial_term(
                    &self.ring,
                    field.neg(&t.coeff),
                    t.mono,
                ));
            }
            cols.push(col);
        }
        let entries: Vec<Vec<Polynomial>> = (0..self.ncols)
            .map(|k| (0..b.cols()).map(|j| cols[j][k].clone()).collect())
            .collect();
        PolyMatrix::new(
            &self.ring,
            FreeModule::new(self.engine.order.comp_degrees[split..].to_vec()),
            b.source.clone(),
            entries,
        )
    }

    /// Does this column module contain the given column vector?
    pub fn contains(&self, col: &[Polynomial]) -> bool {
        let field = &self.ring.field;
        let mut terms: Vec<ModTerm> = Vec::new();
        for (k, f) in col.iter().enumerate() {
            for (c, mono) in &f.terms {
                terms.push(ModTerm {
                    coeff: c.clone(),
                    mono: mono.clone(),
                    comp: k,
                });
            }
        }
        let v = ModPoly::from_terms(&self.engine.order, field, terms);
        let r = self.engine.reduce(&v, &self.basis, false);
        r.block1_is_zero(self.engine.order.split)
    }
}

/// Generators of the kernel of the column map of `m`, as a graded matrix with
/// target = source(m). Columns sorted by (degree, discovery order).
pub fn syzygies(m: &PolyMatrix) -> Result<PolyMatrix> {
    let gb = matrix_gb(m, true)?;
    let ring = &m.ring;
    let split = m.rows();
    let mut cols: Vec<(i64, Vec<Polynomial>)> = Vec::new();
    for s in &gb.syzygies {
        let terms = s.block2(split);
        if terms.is_empty() {
            continue;
        }
        let deg = i64::from(terms[0].mono.degree()) + m.source.degrees[terms[0].comp];
        let mut col = vec![Polynomial::zero(ring); m.cols()];
        for t in terms {
            col[t.comp] =
                col[t.comp].add(&Polynomial::monomial_term(ring, t.coeff.clone(), t.mono));
        }
        cols.push((deg, col));
    }
    cols.sort_by_key(|(d, _)| *d);
    let degrees: Vec<i64> = cols.iter().map(|(d, _)| *d).collect();
    let entries: Vec<Vec<Polynomial>> = (0..m.cols())
        .map(|k| cols.iter().map(|(_, c)| c[k].clone()).collect())
        .collect();
    PolyMatrix::new(ring, m.source.clone(), FreeModule::new(degrees), entries)
}

/// One-shot lift of B through D.
pub fn lift_through(d: &PolyMatrix, b: &PolyMatrix) -> Result<PolyMatrix> {
    matrix_gb(d, false)?.lift(b, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialOrder;
    use crate::parse::poly_parse;
    use crate::ring::RingContext;

    fn gb(gens: &[&str], ring: &Ring) -> GroebnerBasis {
        let ps: Vec<Polynomial> = gens.iter().map(|s| poly_parse(s, ring).unwrap()).collect();
        buchberger(&ps, ring, MonomialOrder::Grevlex, false).unwrap()
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let r = RingContext::rational(&["x1", "x2", "x3", "x4"]);
        let quadrics = ["x1*x2", "x1*x3", "x2*x3", "x1*x4", "x2*x4", "x3*x4"];
        let g = gb(&quadrics, &r);
        assert_eq!(g.elements.len(), 6);
        assert!(g.reduces_to_zero(&poly_parse("x1*x2*x3", &r).unwrap()));
        assert_eq!(
            g.normal_form(&poly_parse("x1^2", &r).unwrap()),
            poly_parse("x1^2", &r).unwrap()
        );
    }

    #[test]
    fn s_pair_produces_z_cubed() {
        let r = RingContext::rational(&["x", "y", "z"]);
        let g = gb(&["x*y+z^2", "y*z"], &r);
        assert!(g.elements.contains(&poly_parse("z^3", &r).unwrap()));
        // two division steps by hand: xyz -> -z^3
        assert_eq!(
            g.normal_form(&poly_parse("x*y*z", &r).unwrap()),
            Polynomial::zero(&r)
        );
        // xyz = z*(xy + z^2) - z^3, so its normal form against {xy+z^2, yz}
        // alone (no completion) is -z^3
        let partial = GroebnerBasis {
            ring: r.clone(),
            order: MonomialOrder::Grevlex,
            elements: vec![
                poly_parse("x*y+z^2", &r).unwrap(),
                poly_parse("y*z", &r).unwrap(),
            ],
            transition: None,
        };
        assert_eq!(
            partial.normal_form(&poly_parse("x*y*z", &r).unwrap()),
            poly_parse("-z^3", &r).unwrap()
        );
    }

    #[test]
    fn normal_form_idempotent() {
        let r = RingContext::rational(&["x", "y", "z"]);
        let g = gb(&["x*y+z^2", "y*z"], &r);
        let f = poly_parse("x^2*y^2+x*y*z+z^4+x", &r).unwrap();
        let n1 = g.normal_form(&f);
        assert_eq!(g.normal_form(&n1), n1);
    }

    #[test]
    fn tracked_transition_identity() {
        let r = RingContext::rational(&["x", "y", "z"]);
        let gens = vec![
            poly_parse("x*y+z^2", &r).unwrap(),
            poly_parse("y*z", &r).unwrap(),
        ];
        let g = buchberger(&gens, &r, MonomialOrder::Grevlex, true).unwrap();
        let trans = g.transition.as_ref().unwrap();
        for (k, b) in g.elements.iter().enumerate() {
            let mut acc = Polynomial::zero(&r);
            for (i, f) in gens.iter().enumerate() {
                acc = acc.add(&f.mul(&trans[k][i]));
            }
            assert_eq!(&acc, b, "basis element {k} is input * transition");
        }
    }

    #[test]
    fn koszul_syzygy_of_two_variables() {
        let r = RingContext::rational(&["x", "y"]);
        let m = PolyMatrix::from_row(
            &r,
            &[poly_parse("x", &r).unwrap(), poly_parse("y", &r).unwrap()],
        )
        .unwrap();
        let s = syzygies(&m).unwrap();
        assert_eq!(s.cols(), 1);
        let prod = m.mul(&s).unwrap();
        assert!(prod.is_zero());
        // column is (-y, x) up to sign/scale
        let c = s.column(0);
        assert_eq!(
            c[0].mul(&poly_parse("x", &r).unwrap()),
            c[1].mul(&poly_parse("y", &r).unwrap()).neg()
        );
    }

    #[test]
    fn syzygies_of_squarefree_quadrics() {
        let r = RingContext::rational(&["x1", "x2", "x3", "x4"]);
        let gens: Vec<Polynomial> = ["x1*x2", "x1*x3", "x2*x3", "x1*x4", "x2*x4", "x3*x4"]
            .iter()
            .map(|s| poly_parse(s, &r).unwrap())
            .collect();
        let m = PolyMatrix::from_row(&r, &gens).unwrap();
        let s = syzygies(&m).unwrap();
        assert!(m.mul(&s).unwrap().is_zero());
        // all syzygies of a degree-2 monomial ideal here live in degree 3
        assert!(s.source.degrees.iter().all(|&d| d == 3));
    }

    #[test]
    fn syzygy_with_zero_column() {
        let r = RingContext::rational(&["x", "y"]);
        let m = PolyMatrix::new(
            &r,
            FreeModule::new(vec![0]),
            FreeModule::new(vec![1, 1]),
            vec![vec![poly_parse("x", &r).unwrap(), Polynomial::zero(&r)]],
        )
        .unwrap();
        let s = syzygies(&m).unwrap();
        // the unit vector on the zero column must appear in the kernel
        let has_unit = (0..s.cols()).any(|j| {
            let c = s.column(j);
            c[0].is_zero() && c[1].is_constant() && !c[1].is_zero()
        });
        assert!(has_unit);
    }

    #[test]
    fn lift_through_examples() {
        let r = RingContext::rational(&["x", "y"]);
        let d = PolyMatrix::from_row(
            &r,
            &[poly_parse("x", &r).unwrap(), poly_parse("y", &r).unwrap()],
        )
        .unwrap();
        // lift of D through itself satisfies D*X = D
        let x = lift_through(&d, &d).unwrap();
        assert_eq!(d.mul(&x).unwrap(), d);
        // B = (xy) lifts, any exact solution accepted
        let b = PolyMatrix::from_row(&r, &[poly_parse("x*y", &r).unwrap()]).unwrap();
        let x = lift_through(&d, &b).unwrap();
        assert_eq!(d.mul(&x).unwrap(), b);
        // x^2 + y is not in the image as a graded column: not homogeneous of
        // one degree; use 1 instead: not in (x, y)
        let c = PolyMatrix::new(
            &r,
            FreeModule::new(vec![0]),
            FreeModule::new(vec![0]),
            vec![vec![Polynomial::one(&r)]],
        )
        .unwrap();
        assert!(matches!(
            lift_through(&d, &c),
            Err(Error::NotInImage { .. })
        ));
    }

    #[test]
    fn klein_generators_reduce_to_zero() {
        let r = RingContext::rational(&["x", "y", "z"]);
        let f4 = poly_parse("x^3*y+y^3*z+z^3*x", &r).unwrap();
        let c = r
            .field
            .from_rational(num::BigRational::new((-1).into(), 54.into()));
        let f6 = crate::matrix::hessian_det_scaled(&r, &f4, &c);
        let g = buchberger(&[f4.clone(), f6.clone()], &r, MonomialOrder::Grevlex, false).unwrap();
        assert!(g.reduces_to_zero(&f4));
        assert!(g.reduces_to_zero(&f6));
        assert!(!g.elements.is_empty());
    }
}
