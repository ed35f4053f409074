//! Finite group actions on resolutions: propagation of the action through a
//! minimal free resolution and the resulting trace (character) data.

use std::collections::BTreeMap;

use crate::budget;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::groebner::{matrix_gb, MatrixGb};
use crate::ideal::{standard_monomials, Ideal};
use crate::linalg::FieldMatrix;
use crate::matrix::PolyMatrix;
use crate::monomial::Monomial;
use crate::poly::{LinearSubstitution, Polynomial};
use crate::resolution::ChainComplex;
use crate::ring::Ring;
use crate::unipoly::{reverse_char_poly, UniPoly};

/// A list of ring automorphisms given by linear substitutions, one per group
/// element of interest (typically conjugacy class representatives).
#[derive(Debug, Clone)]
pub struct GroupAction {
    pub ring: Ring,
    pub names: Vec<String>,
    pub subs: Vec<LinearSubstitution>,
    /// When the listed elements are class representatives, their class sizes
    /// and the group order enable inner products.
    pub class_sizes: Option<Vec<u64>>,
    pub group_order: Option<u64>,
}

impl GroupAction {
    pub fn new(
        ring: &Ring,
        names: Vec<String>,
        subs: Vec<LinearSubstitution>,
    ) -> Result<GroupAction> {
        if names.len() != subs.len() {
            return Err(Error::Usage("one name per group element required".into()));
        }
        Ok(GroupAction {
            ring: ring.clone(),
            names,
            subs,
            class_sizes: None,
            group_order: None,
        })
    }

    pub fn with_class_data(
        mut self,
        class_sizes: Vec<u64>,
        group_order: u64,
    ) -> Result<GroupAction> {
        if class_sizes.len() != self.subs.len() {
            return Err(Error::Usage(
                "one class size per listed element required".into(),
            ));
        }
        self.class_sizes = Some(class_sizes);
        self.group_order = Some(group_order);
        Ok(self)
    }

    pub fn class_data(&self) -> Result<(&[u64], u64)> {
        match (&self.class_sizes, self.group_order) {
            (Some(s), Some(o)) => Ok((s, o)),
            _ => Err(Error::Usage(
                "class sizes and group order are required for inner products".into(),
            )),
        }
    }

    pub fn len(&self) -> usize {
        self.subs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subs.is_empty()
    }

    pub fn identity_index(&self) -> Option<usize> {
        self.subs.iter().position(|s| s.is_identity())
    }

    /// Every substitution must map the ideal into itself.
    pub fn check_ideal_invariance(&self, ideal: &Ideal) -> Result<()> {
        let gb = ideal.gb()?;
        for (name, sub) in self.names.iter().zip(&self.subs) {
            for g in &ideal.gens {
                if !gb.reduces_to_zero(&sub.apply(g)) {
                    return Err(Error::Invariance {
                        element: name.clone(),
                        detail: format!("image of {} leaves the ideal", g.render()),
                    });
                }
            }
        }
        Ok(())
    }
}

/// Betti characters: for each homological degree i and internal degree j the
/// trace of every group element on Tor_i in degree j.
#[derive(Debug, Clone)]
pub struct BettiCharacterTable {
    pub field: Field,
    pub names: Vec<String>,
    /// rows[i][j] = traces in element order.
    pub rows: Vec<BTreeMap<i64, Vec<FieldElement>>>,
}

impl BettiCharacterTable {
    pub fn value(&self, i: usize, j: i64, element: usize) -> FieldElement {
        self.rows
            .get(i)
            .and_then(|r| r.get(&j))
            .map(|v| v[element].clone())
            .unwrap_or_else(|| self.field.zero())
    }

    /// Internal degrees of each homological row, ascending.
    pub fn degrees(&self, i: usize) -> Vec<i64> {
        self.rows[i].keys().copied().collect()
    }
}

fn run_per_element<T, F>(n: usize, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(usize) -> Result<T> + Sync,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        let deadline = budget::current_deadline();
        (0..n)
            .into_par_iter()
            .map(|e| budget::with_deadline(deadline, || f(e)))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// Commuting square data for one group element: matrices A_0..A_len with
/// d_i * A_i = A_{i-1} * sigma(d_i).
pub fn propagate_element(
    complex: &ChainComplex,
    gbs: &[MatrixGb],
    sub: &LinearSubstitution,
    name: &str,
    reverse_lift: bool,
) -> Result<Vec<PolyMatrix>> {
    propagate_element_upto(complex, gbs, sub, name, reverse_lift, complex.length())
}

fn propagate_element_upto(
    complex: &ChainComplex,
    gbs: &[MatrixGb],
    sub: &LinearSubstitution,
    name: &str,
    reverse_lift: bool,
    upto: usize,
) -> Result<Vec<PolyMatrix>> {
    let ring = &complex.ring;
    let mut maps = Vec::with_capacity(upto + 1);
    maps.push(PolyMatrix::identity(ring, &complex.f0));
    for i in 1..=upto {
        budget::check()?;
        let d = complex.differential(i);
        let b = maps[i - 1].mul(&d.apply_substitution(sub))?;
        let a = match gbs[i - 1].lift(&b, reverse_lift) {
            Ok(a) => a,
            Err(Error::NotInImage { column }) => {
                return Err(Error::Invariance {
                    element: name.to_string(),
                    detail: format!(
                        "column {column} of the twisted differential in homological degree {i} \
                         is not in the image; the action does not preserve the module"
                    ),
                })
            }
            Err(e) => return Err(e),
        };
        maps.push(a);
    }
    Ok(maps)
}

/// Betti characters of the action on the resolved module, with control over
/// the division order used inside the lifts (the lifts may change, the
/// traces may not).
pub fn betti_characters_opts(
    complex: &ChainComplex,
    action: &GroupAction,
    reverse_lift: bool,
) -> Result<BettiCharacterTable> {
    let field = &complex.ring.field;
    let mut gbs = Vec::with_capacity(complex.length());
    for i in 1..=complex.length() {
        gbs.push(matrix_gb(complex.differential(i), false)?);
    }
    let all = run_per_element(action.len(), |e| {
        let maps = propagate_element(
            complex,
            &gbs,
            &action.subs[e],
            &action.names[e],
            reverse_lift,
        )?;
        let traces: Vec<Vec<(i64, FieldElement)>> = maps
            .iter()
            .map(|a| a.constant_diagonal_trace_by_degree())
            .collect();
        Ok(traces)
    })?;
    let mut rows: Vec<BTreeMap<i64, Vec<FieldElement>>> = Vec::new();
    for i in 0..=complex.length() {
        let mut row: BTreeMap<i64, Vec<FieldElement>> = BTreeMap::new();
        for &d in &complex.module(i).degrees {
            row.entry(d)
                .or_insert_with(|| vec![field.zero(); action.len()]);
        }
        for (e, per_element) in all.iter().enumerate() {
            for (d, tr) in &per_element[i] {
                if let Some(v) = row.get_mut(d) {
                    v[e] = tr.clone();
                }
            }
        }
        rows.push(row);
    }
    Ok(BettiCharacterTable {
        field: field.clone(),
        names: action.names.clone(),
        rows,
    })
}

pub fn betti_characters(
    complex: &ChainComplex,
    action: &GroupAction,
) -> Result<BettiCharacterTable> {
    betti_characters_opts(complex, action, false)
}

/// The traces in homological degree i only, propagating just A_0..A_i.
pub fn betti_characters_at(
    complex: &ChainComplex,
    action: &GroupAction,
    i: usize,
) -> Result<BTreeMap<i64, Vec<FieldElement>>> {
    if i > complex.length() {
        return Err(Error::Usage(format!(
            "homological degree {i} exceeds the resolution length {}",
            complex.length()
        )));
    }
    let field = &complex.ring.field;
    let mut gbs = Vec::with_capacity(i);
    for k in 1..=i {
        gbs.push(matrix_gb(complex.differential(k), false)?);
    }
    let traces = run_per_element(action.len(), |e| {
        let maps =
            propagate_element_upto(complex, &gbs, &action.subs[e], &action.names[e], false, i)?;
        Ok(maps[i].constant_diagonal_trace_by_degree())
    })?;
    let mut row: BTreeMap<i64, Vec<FieldElement>> = BTreeMap::new();
    for &d in &complex.module(i).degrees {
        row.entry(d)
            .or_insert_with(|| vec![field.zero(); action.len()]);
    }
    for (e, per_element) in traces.iter().enumerate() {
        for (d, tr) in per_element {
            if let Some(v) = row.get_mut(d) {
                v[e] = tr.clone();
            }
        }
    }
    Ok(row)
}

/// Graded subquotient (A + B)/B of the ring; `numerator` None means the full
/// quotient R/B.
#[derive(Debug, Clone)]
pub struct SubquotientModule {
    pub numerator: Option<Ideal>,
    pub denominator: Ideal,
}

impl SubquotientModule {
    pub fn quotient(denominator: Ideal) -> SubquotientModule {
        SubquotientModule {
            numerator: None,
            denominator,
        }
    }

    pub fn subquotient(numerator: Ideal, denominator: Ideal) -> SubquotientModule {
        SubquotientModule {
            numerator: Some(numerator),
            denominator,
        }
    }

    /// The denominator must sit inside the numerator, and both must be
    /// preserved by every listed element.
    pub fn validate(&self, action: &GroupAction) -> Result<()> {
        if let Some(num) = &self.numerator {
            for b in &self.denominator.gens {
                if !num.contains(b)? {
                    return Err(Error::Containment(format!(
                        "denominator generator {} is not in the numerator",
                        b.render()
                    )));
                }
            }
            action.check_ideal_invariance(num)?;
        }
        action.check_ideal_invariance(&self.denominator)
    }
}

fn poly_coords(
    f: &Polynomial,
    index: &std::collections::HashMap<Monomial, usize>,
    dim: usize,
    field: &Field,
) -> Result<Vec<FieldElement>> {
    let mut v = vec![field.zero(); dim];
    for (c, m) in &f.terms {
        let Some(&i) = index.get(m) else {
            return Err(Error::Internal(
                "normal form leaves the standard monomial span".into(),
            ));
        };
        v[i] = c.clone();
    }
    Ok(v)
}

/// Echelonized basis of one graded piece of a subquotient, in coordinates
/// indexed by the standard monomials of the denominator.
struct GradedPiece {
    std_mons: Vec<Monomial>,
    index: std::collections::HashMap<Monomial, usize>,
    pivots: Vec<usize>,
    basis: Vec<Vec<FieldElement>>,
}

fn graded_piece(module: &SubquotientModule, degree: u32, ring: &Ring) -> Result<GradedPiece> {
    let field = &ring.field;
    let gb = module.denominator.gb()?;
    let std_mons = standard_monomials(&module.denominator, degree)?;
    let dim = std_mons.len();
    let index: std::collections::HashMap<Monomial, usize> = std_mons
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect();

    // spanning set of the graded piece, reduced to normal form
    let mut span: Vec<Vec<FieldElement>> = Vec::new();
    match &module.numerator {
        None => {
            for m in &std_mons {
                let f = Polynomial::monomial_term(ring, field.one(), m.clone());
                span.push(poly_coords(&f, &index, dim, field)?);
            }
        }
        Some(num) => {
            for g in &num.gens {
                let d = g.homogeneous_degree().ok_or_else(|| {
                    Error::Usage("subquotient numerator generators must be homogeneous".into())
                })?;
                if d > degree {
                    continue;
                }
                for m in Monomial::all_of_degree(ring.nvars(), degree - d) {
                    let f =
                        gb.normal_form(&g.mul(&Polynomial::monomial_term(ring, field.one(), m)));
                    if !f.is_zero() {
                        span.push(poly_coords(&f, &index, dim, field)?);
                    }
                }
            }
        }
    }
    let mut echelon = FieldMatrix::from_rows(field, span);
    if echelon.rows == 0 {
        echelon = FieldMatrix::zeros(field, 0, dim);
    }
    let pivots = echelon.rref()?;
    let basis: Vec<Vec<FieldElement>> = echelon.data[..pivots.len()].to_vec();
    Ok(GradedPiece {
        std_mons,
        index,
        pivots,
        basis,
    })
}

/// Trace of one group element on a graded piece, with the images of the
/// degree-`degree` monomials under the element supplied by the caller.
fn trace_on_piece(
    module: &SubquotientModule,
    piece: &GradedPiece,
    degree: u32,
    name: &str,
    sub: &LinearSubstitution,
    images: &std::collections::HashMap<Monomial, Polynomial>,
    ring: &Ring,
) -> Result<FieldElement> {
    let field = &ring.field;
    let gb = module.denominator.gb()?;
    let dim = piece.std_mons.len();
    let mut trace = field.zero();
    for (r, row) in piece.basis.iter().enumerate() {
        budget::check()?;
        // rebuild the basis polynomial, act, reduce, read coordinates
        let mut f = Polynomial::zero(ring);
        for (i, c) in row.iter().enumerate() {
            if !c.is_zero() {
                f = f.add(&Polynomial::monomial_term(
                    ring,
                    c.clone(),
                    piece.std_mons[i].clone(),
                ));
            }
        }
        let image = gb.normal_form(&sub.apply_cached(&f, images));
        let mut v = poly_coords(&image, &piece.index, dim, field)?;
        // subtract the span components; in reduced echelon coordinates
        // the coefficient along basis row r' is v[pivots[r']]
        let mut coord_r = field.zero();
        for (rp, &p) in piece.pivots.iter().enumerate() {
            let c = v[p].clone();
            if rp == r {
                coord_r = c.clone();
            }
            if !c.is_zero() {
                for (i, b) in piece.basis[rp].iter().enumerate() {
                    let s = field.mul(&c, b);
                    v[i] = field.sub(&v[i], &s);
                }
            }
        }
        if v.iter().any(|c| !c.is_zero()) {
            return Err(Error::Invariance {
                element: name.to_string(),
                detail: format!("degree {degree} piece of the subquotient is not preserved"),
            });
        }
        trace = field.add(&trace, &coord_r);
    }
    Ok(trace)
}

/// Trace of every group element on the degree-`degree` graded piece of the
/// subquotient. Errors with `Invariance` if the action does not preserve it.
pub fn module_character(
    module: &SubquotientModule,
    degree: u32,
    action: &GroupAction,
) -> Result<Vec<FieldElement>> {
    let ring = &action.ring;
    module.validate(action)?;
    let piece = graded_piece(module, degree, ring)?;
    let mut out = Vec::with_capacity(action.len());
    for (name, sub) in action.names.iter().zip(&action.subs) {
        budget::check()?;
        let images = sub.monomial_images(degree);
        out.push(trace_on_piece(
            module, &piece, degree, name, sub, &images, ring,
        )?);
    }
    Ok(out)
}

/// Traces of every group element on the graded pieces of degree 0 through
/// `bound`. Equivalent to calling `module_character` once per degree, but
/// the monomial images of each element are advanced incrementally, one
/// linear-form product per monomial, instead of being rebuilt per degree.
pub fn module_character_series(
    module: &SubquotientModule,
    bound: u32,
    action: &GroupAction,
) -> Result<Vec<Vec<FieldElement>>> {
    let ring = &action.ring;
    module.validate(action)?;
    let n = ring.nvars();
    let unit = Polynomial::constant(ring, ring.field.one());
    let mut levels: Vec<std::collections::HashMap<Monomial, Polynomial>> = action
        .subs
        .iter()
        .map(|_| std::collections::HashMap::from([(Monomial::one(n), unit.clone())]))
        .collect();
    let mut out = Vec::with_capacity(bound as usize + 1);
    for degree in 0..=bound {
        budget::check()?;
        let piece = graded_piece(module, degree, ring)?;
        let mut row = Vec::with_capacity(action.len());
        for (e, (name, sub)) in action.names.iter().zip(&action.subs).enumerate() {
            row.push(trace_on_piece(
                module, &piece, degree, name, sub, &levels[e], ring,
            )?);
        }
        out.push(row);
        if degree < bound {
            for (e, sub) in action.subs.iter().enumerate() {
                levels[e] = sub.next_monomial_level(&levels[e], degree + 1);
            }
        }
    }
    Ok(out)
}

/// One side-by-side comparison per group element of the two power series
/// computations of the equivariant Hilbert series: from graded pieces of the
/// quotient versus from the Betti character table.
pub fn molien_check(
    complex: &ChainComplex,
    action: &GroupAction,
    quotient_of: &Ideal,
    bound: Option<u32>,
) -> Result<Vec<(String, bool)>> {
    let field = &complex.ring.field;
    let table = betti_characters_opts(complex, action, false)?;
    let max_j = table
        .rows
        .iter()
        .flat_map(|r| r.keys())
        .copied()
        .max()
        .unwrap_or(0)
        .max(0) as u32;
    let bound = bound.unwrap_or(max_j + complex.ring.nvars() as u32 + 1);
    let module = SubquotientModule::quotient(quotient_of.clone());
    let graded = module_character_series(&module, bound, action)?;
    let mut out = Vec::with_capacity(action.len());
    for (e, name) in action.names.iter().enumerate() {
        // numerator from the resolution: sum of (-1)^i beta_{i,j}(g) t^j
        let mut num = vec![field.zero(); bound as usize + 1];
        for (i, row) in table.rows.iter().enumerate() {
            for (j, vals) in row {
                if *j < 0 || *j > i64::from(bound) {
                    continue;
                }
                let v = &vals[e];
                num[*j as usize] = if i % 2 == 0 {
                    field.add(&num[*j as usize], v)
                } else {
                    field.sub(&num[*j as usize], v)
                };
            }
        }
        let numerator = UniPoly::from_coeffs(field, num);
        let det = reverse_char_poly(field, &action.subs[e].matrix())?;
        let hilbert = UniPoly::from_coeffs(field, graded.iter().map(|g| g[e].clone()).collect());
        let product = hilbert.mul(&det).truncate(bound as usize);
        out.push((name.clone(), product == numerator.truncate(bound as usize)));
    }
    Ok(out)
}
