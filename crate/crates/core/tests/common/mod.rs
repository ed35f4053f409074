//! Shared fixtures and independent linear-algebra oracles.

#![allow(dead_code)]

use charres::equivariant::GroupAction;
use charres::field::{Field, FieldElement};
use charres::ideal::{standard_monomials, Ideal};
use charres::linalg::{restricted_trace, FieldMatrix};
use charres::parse::poly_parse;
use charres::poly::LinearSubstitution;
use charres::ring::{Ring, RingContext};
use charres::Monomial;

pub fn ideal(ring: &Ring, gens: &[&str]) -> Ideal {
    Ideal::new(
        ring,
        gens.iter().map(|s| poly_parse(s, ring).unwrap()).collect(),
    )
}

/// R = Q[x1..x4], all squarefree quadrics, S4 representatives ordered
/// 4-cycle, 3-cycle, double transposition, transposition, identity.
pub fn symmetric_shifted() -> (Ring, Ideal, GroupAction) {
    let r = RingContext::rational(&["x1", "x2", "x3", "x4"]);
    let i = ideal(&r, &["x1*x2", "x1*x3", "x1*x4", "x2*x3", "x2*x4", "x3*x4"]);
    let perms: [[usize; 4]; 5] = [
        [1, 2, 3, 0],
        [1, 2, 0, 3],
        [1, 0, 3, 2],
        [1, 0, 2, 3],
        [0, 1, 2, 3],
    ];
    let names = ["(1234)", "(123)", "(12)(34)", "(12)", "id"];
    let subs = perms
        .iter()
        .map(|p| permutation_sub(&r, p))
        .collect::<Vec<_>>();
    let action = GroupAction::new(&r, names.iter().map(|s| s.to_string()).collect(), subs)
        .unwrap()
        .with_class_data(vec![6, 8, 3, 6, 1], 24)
        .unwrap();
    (r, i, action)
}

/// S3 on R/(xy, xz, yz): representatives id, transposition, 3-cycle.
pub fn edge_ideal_s3() -> (Ring, Ideal, GroupAction) {
    let r = RingContext::rational(&["x", "y", "z"]);
    let i = ideal(&r, &["x*y", "x*z", "y*z"]);
    let subs = vec![
        permutation_sub(&r, &[0, 1, 2]),
        permutation_sub(&r, &[1, 0, 2]),
        permutation_sub(&r, &[1, 2, 0]),
    ];
    let action =
        GroupAction::new(&r, vec!["id".into(), "(12)".into(), "(123)".into()], subs).unwrap();
    (r, i, action)
}

pub struct Klein {
    pub ring: Ring,
    pub f4: charres::Polynomial,
    pub f6: charres::Polynomial,
    pub ideal: Ideal,
    pub action: GroupAction,
}

/// Q(ζ7), the Klein quartic data, and the order-168 simple group acting on
/// the configuration of 24 points; elements ordered id, i, h, j, g, g⁻¹.
pub fn klein() -> Klein {
    use charres::field::cyclotomic_field_7;
    use charres::parse::element_parse;

    let kk = cyclotomic_field_7();
    let r = RingContext::new(kk.clone(), vec!["x".into(), "y".into(), "z".into()]).unwrap();
    let f4 = poly_parse("x^3*y+y^3*z+z^3*x", &r).unwrap();
    let scale = kk.from_rational(num::BigRational::new((-1).into(), 54.into()));
    let f6 = charres::matrix::hessian_det_scaled(&r, &f4, &scale);
    let e = |s: &str| element_parse(s, &kk).unwrap();
    let m = |rows: [[&str; 3]; 3]| -> Vec<Vec<FieldElement>> {
        rows.iter()
            .map(|row| row.iter().map(|s| e(s)).collect())
            .collect()
    };
    let scaled = |mat: Vec<Vec<FieldElement>>, c: &FieldElement| -> Vec<Vec<FieldElement>> {
        mat.iter()
            .map(|row| row.iter().map(|v| kk.mul(v, c)).collect())
            .collect()
    };
    let gmat = m([["a^4", "0", "0"], ["0", "a^2", "0"], ["0", "0", "a"]]);
    let hmat = m([["0", "1", "0"], ["0", "0", "1"], ["1", "0", "0"]]);
    let c7 = e("2*a^4+2*a^2+2*a+1");
    let imat = scaled(
        m([
            ["a-a^6", "a^2-a^5", "a^4-a^3"],
            ["a^2-a^5", "a^4-a^3", "a-a^6"],
            ["a^4-a^3", "a-a^6", "a^2-a^5"],
        ]),
        &kk.div(&c7, &kk.from_i64(7)).unwrap(),
    );
    let jmat = scaled(
        m([
            ["a^5-a^4", "1-a^5", "1-a^3"],
            ["1-a^5", "a^6-a^2", "1-a^6"],
            ["1-a^3", "1-a^6", "a^3-a"],
        ]),
        &kk.neg(&kk.inv(&c7).unwrap()),
    );
    let sub = |mat: &[Vec<FieldElement>]| LinearSubstitution::from_matrix(&r, mat).unwrap();
    let g = sub(&gmat);
    let jac = charres::matrix::jacobian(&r, &[f4.clone(), f6.clone()]).unwrap();
    let ideal = Ideal::new(&r, charres::matrix::minors(2, &jac).unwrap());
    let action = GroupAction::new(
        &r,
        vec![
            "id".into(),
            "i".into(),
            "h".into(),
            "j".into(),
            "g".into(),
            "g'".into(),
        ],
        vec![
            LinearSubstitution::identity(&r),
            sub(&imat),
            sub(&hmat),
            sub(&jmat),
            g.clone(),
            g.pow(6),
        ],
    )
    .unwrap();
    Klein {
        ring: r,
        f4,
        f6,
        ideal,
        action,
    }
}

pub fn permutation_sub(ring: &Ring, p: &[usize]) -> LinearSubstitution {
    let images = p
        .iter()
        .map(|&k| charres::Polynomial::var(ring, k))
        .collect();
    LinearSubstitution::new(ring, images).unwrap()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    fn rec(out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>, start: usize, n: usize, k: usize) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(out, cur, v + 1, n, k);
            cur.pop();
        }
    }
    rec(&mut out, &mut Vec::new(), 0, n, k);
    out
}

fn det(field: &Field, a: &[Vec<FieldElement>]) -> FieldElement {
    let n = a.len();
    if n == 0 {
        return field.one();
    }
    if n == 1 {
        return a[0][0].clone();
    }
    let mut out = field.zero();
    for (c, entry) in a[0].iter().enumerate() {
        let minor: Vec<Vec<FieldElement>> = a[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(cc, _)| *cc != c)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let mut term = field.mul(entry, &det(field, &minor));
        if c % 2 == 1 {
            term = field.neg(&term);
        }
        out = field.add(&out, &term);
    }
    out
}

/// Basis of the degree-j strand of K_i ⊗ R/I: pairs (standard monomial of
/// degree j − i, i-subset of variables).
struct Strand {
    monomials: Vec<Monomial>,
    sets: Vec<Vec<usize>>,
}

impl Strand {
    fn dim(&self) -> usize {
        self.monomials.len() * self.sets.len()
    }

    fn index(&self, m: &Monomial, s: &[usize]) -> Option<usize> {
        let mi = self.monomials.iter().position(|x| x == m)?;
        let si = self.sets.iter().position(|x| x == s)?;
        Some(mi * self.sets.len() + si)
    }
}

fn strand(ideal: &Ideal, i: usize, j: i64) -> Strand {
    let n = ideal.ring.nvars();
    let monomials = if j < i as i64 {
        Vec::new()
    } else {
        standard_monomials(ideal, (j - i as i64) as u32).unwrap()
    };
    Strand {
        monomials,
        sets: subsets(n, i),
    }
}

/// Coordinates of the normal form of `p` against the strand's standard
/// monomials; panics if a residual term escapes the expected degree.
fn nf_coords(
    ideal: &Ideal,
    target: &Strand,
    p: &charres::Polynomial,
) -> Vec<(usize, FieldElement)> {
    let nf = ideal.gb().unwrap().normal_form(p);
    nf.terms
        .iter()
        .map(|(c, m)| {
            let mi = target
                .monomials
                .iter()
                .position(|x| x == m)
                .expect("normal form lies in the standard monomial span");
            (mi, c.clone())
        })
        .collect()
}

/// Koszul differential D_i on the degree-j strand, as a matrix into the
/// (i−1, j) strand.
fn koszul_differential(ideal: &Ideal, dom: &Strand, cod: &Strand, field: &Field) -> FieldMatrix {
    let ring = &ideal.ring;
    let mut cols = Vec::with_capacity(dom.dim());
    for m in &dom.monomials {
        for s in &dom.sets {
            let mut col = vec![field.zero(); cod.dim()];
            for (k, &v) in s.iter().enumerate() {
                let prod = charres::Polynomial::var(ring, v).mul(
                    &charres::Polynomial::monomial_term(ring, field.one(), m.clone()),
                );
                let rest: Vec<usize> = s.iter().copied().filter(|&w| w != v).collect();
                let si = cod.sets.iter().position(|x| *x == rest).unwrap();
                for (mi, c) in nf_coords(ideal, cod, &prod) {
                    let idx = mi * cod.sets.len() + si;
                    let mut term = c;
                    if k % 2 == 1 {
                        term = field.neg(&term);
                    }
                    col[idx] = field.add(&col[idx], &term);
                }
            }
            cols.push(col);
        }
    }
    FieldMatrix::from_columns(field, cod.dim(), cols)
}

/// Matrix of g acting on the degree-j strand: substitution on the module
/// part, i-th exterior power on the Koszul part.
fn group_matrix(
    ideal: &Ideal,
    st: &Strand,
    sub: &LinearSubstitution,
    field: &Field,
) -> FieldMatrix {
    let ring = &ideal.ring;
    let a = sub.matrix();
    let mut cols = Vec::with_capacity(st.dim());
    for m in &st.monomials {
        let image = sub.apply(&charres::Polynomial::monomial_term(
            ring,
            field.one(),
            m.clone(),
        ));
        let mcoords = nf_coords(ideal, st, &image);
        for s in &st.sets {
            let mut col = vec![field.zero(); st.dim()];
            for t in &st.sets {
                // Λ^i entry: determinant of the (rows t, cols s) submatrix
                let block: Vec<Vec<FieldElement>> = t
                    .iter()
                    .map(|&r| s.iter().map(|&c| a[r][c].clone()).collect())
                    .collect();
                let d = det(field, &block);
                if d == field.zero() {
                    continue;
                }
                let si = st.sets.iter().position(|x| x == t).unwrap();
                for (mi, c) in &mcoords {
                    let idx = mi * st.sets.len() + si;
                    col[idx] = field.add(&col[idx], &field.mul(c, &d));
                }
            }
            cols.push(col);
        }
    }
    FieldMatrix::from_columns(field, st.dim(), cols)
}

/// Trace of `sub` on Tor_i(R/I, k)_j, computed as homology of the Koszul
/// complex tensored with R/I: trace on ker D_i minus trace on im D_{i+1}.
pub fn koszul_tor_trace(ideal: &Ideal, sub: &LinearSubstitution, i: usize, j: i64) -> FieldElement {
    let field = ideal.ring.field.clone();
    let st = strand(ideal, i, j);
    if st.dim() == 0 {
        return field.zero();
    }
    let g = group_matrix(ideal, &st, sub, &field);
    let ker: Vec<Vec<FieldElement>> = if i == 0 {
        (0..st.dim())
            .map(|k| {
                let mut v = vec![field.zero(); st.dim()];
                v[k] = field.one();
                v
            })
            .collect()
    } else {
        let cod = strand(ideal, i - 1, j);
        koszul_differential(ideal, &st, &cod, &field)
            .kernel_basis()
            .unwrap()
    };
    let above = strand(ideal, i + 1, j);
    let image: Vec<Vec<FieldElement>> = if above.dim() == 0 {
        Vec::new()
    } else {
        koszul_differential(ideal, &above, &st, &field)
            .column_space_basis()
            .unwrap()
    };
    let ker_m = FieldMatrix::from_columns(&field, st.dim(), ker);
    let im_m = FieldMatrix::from_columns(&field, st.dim(), image);
    let t_ker = restricted_trace(&g, &ker_m).unwrap();
    let t_im = restricted_trace(&g, &im_m).unwrap();
    field.sub(&t_ker, &t_im)
}

/// Dimension of the degree-d component of the ideal generated by `gens`,
/// as the rank of the span of monomial multiples over all degree-d monomials.
pub fn span_rank(ring: &Ring, gens: &[charres::Polynomial], degree: u32) -> usize {
    let field = ring.field.clone();
    let ambient = Monomial::all_of_degree(ring.nvars(), degree);
    let mut rows = Vec::new();
    for g in gens {
        let Some(d) = g.homogeneous_degree() else {
            continue;
        };
        let d = d as u32;
        if d > degree {
            continue;
        }
        for m in Monomial::all_of_degree(ring.nvars(), degree - d) {
            let p = charres::Polynomial::monomial_term(ring, field.one(), m).mul(g);
            let mut row = vec![field.zero(); ambient.len()];
            for (c, mm) in &p.terms {
                let idx = ambient.iter().position(|x| x == mm).unwrap();
                row[idx] = c.clone();
            }
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return 0;
    }
    FieldMatrix::from_rows(&field, rows).rank().unwrap()
}

/// Dimension of (R/B)_d, independent of the standard-monomial machinery.
pub fn quotient_dim(ring: &Ring, b: &Ideal, degree: u32) -> usize {
    Monomial::all_of_degree(ring.nvars(), degree).len() - span_rank(ring, &b.gens, degree)
}
