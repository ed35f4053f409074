//! Multivariate polynomials over a `FieldSpec`, in canonical form: terms
//! strictly decreasing in the ring's monomial order, no zero coefficients.

use std::cmp::Ordering;
use std::collections::HashMap;

use num::BigRational;

use crate::error::{Error, Result};
use crate::field::{element_to_string, FieldElement};
use crate::monomial::Monomial;
use crate::ring::Ring;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    pub ring: Ring,
    /// (coefficient, monomial), sorted strictly descending.
    pub terms: Vec<(FieldElement, Monomial)>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: vec![],
        }
    }

    pub fn constant(ring: &Ring, c: FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(c, Monomial::one(ring.nvars()))],
        }
    }

    pub fn one(ring: &Ring) -> Polynomial {
        Polynomial::constant(ring, ring.field.one())
    }

    pub fn var(ring: &Ring, i: usize) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(ring.field.one(), Monomial::var(ring.nvars(), i))],
        }
    }

    pub fn monomial_term(ring: &Ring, c: FieldElement, m: Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(c, m)],
        }
    }

    /// Canonicalize an arbitrary term list: sort, merge, drop zeros.
    pub fn from_terms(ring: &Ring, mut terms: Vec<(FieldElement, Monomial)>) -> Polynomial {
        terms.sort_by(|a, b| ring.order.cmp(&b.1, &a.1));
        let mut out: Vec<(FieldElement, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            if let Some(last) = out.last_mut() {
                if last.1 == m {
                    last.0 = ring.field.add(&last.0, &c);
                    continue;
                }
            }
            out.push((c, m));
        }
        out.retain(|(c, _)| !c.is_zero());
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<(&FieldElement, &Monomial)> {
        self.terms.first().map(|(c, m)| (c, m))
    }

    /// Constant coefficient (the coefficient of the monomial 1).
    pub fn constant_term(&self) -> FieldElement {
        self.terms
            .iter()
            .find(|(_, m)| m.is_one())
            .map(|(c, _)| c.clone())
            .unwrap_or_else(|| self.ring.field.zero())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(_, m)| m.is_one())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(_, m)| m.degree()).max()
    }

    /// The common degree of all terms, if the polynomial is homogeneous.
    /// The zero polynomial is homogeneous of every degree (returns None).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.1.degree();
        if self.terms.iter().all(|(_, m)| m.degree() == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let ring = &self.ring;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match ring.order.cmp(&self.terms[i].1, &other.terms[j].1) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ring.field.add(&self.terms[i].0, &other.terms[j].0);
                    if !c.is_zero() {
                        out.push((c, self.terms[i].1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(c, m)| (self.ring.field.neg(c), m.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(a, m)| (self.ring.field.mul(a, c), m.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let ring = &self.ring;
        let mut acc: Vec<(FieldElement, Monomial)> =
            Vec::with_capacity(self.terms.len() * other.terms.len());
        for (c1, m1) in &self.terms {
            for (c2, m2) in &other.terms {
                acc.push((ring.field.mul(c1, c2), m1.mul(m2)));
            }
        }
        Polynomial::from_terms(ring, acc)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one(&self.ring);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn partial_derivative(&self, var: usize) -> Polynomial {
        let ring = &self.ring;
        let mut terms = Vec::new();
        for (c, m) in &self.terms {
            let e = m.exps()[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[var] -= 1;
            let factor = ring.field.from_i64(e as i64);
            terms.push((ring.field.mul(c, &factor), Monomial::from_exps(&exps)));
        }
        Polynomial::from_terms(ring, terms)
    }

    /// Exact division by `divisor`; errors if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Polynomial> {
        let ring = &self.ring;
        let (dc, dm) = divisor
            .lead()
            .ok_or_else(|| Error::Internal("exact division by zero polynomial".into()))?;
        let dc_inv = ring.field.inv(dc)?;
        let mut rem = self.clone();
        let mut quo_terms: Vec<(FieldElement, Monomial)> = Vec::new();
        while let Some((rc, rm)) = rem.lead() {
            let q_m = rm
                .div(dm)
                .ok_or_else(|| Error::Internal("exact division failed".into()))?;
            let q_c = ring.field.mul(rc, &dc_inv);
            let t = Polynomial::monomial_term(ring, q_c.clone(), q_m.clone());
            rem = rem.sub(&t.mul(divisor));
            quo_terms.push((q_c, q_m));
        }
        Ok(Polynomial::from_terms(ring, quo_terms))
    }

    /// Render in the expression grammar; re-parseable, terms in descending
    /// order of the ring's monomial order.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (c, m)) in self.terms.iter().enumerate() {
            let cs = element_to_string(&self.ring.field, c);
            let multi_term = cs[1..].contains('+') || cs[1..].contains('-');
            let mono = render_monomial(&self.ring, m);
            let body = if m.is_one() {
                if multi_term {
                    format!("({cs})")
                } else {
                    cs.clone()
                }
            } else if multi_term {
                format!("({cs})*{mono}")
            } else if cs == "1" {
                mono.clone()
            } else if cs == "-1" {
                format!("-{mono}")
            } else {
                format!("{cs}*{mono}")
            };
            if idx == 0 {
                out.push_str(&body);
            } else if body.starts_with('-') {
                out.push_str(&body);
            } else {
                out.push('+');
                out.push_str(&body);
            }
        }
        out
    }
}

fn render_monomial(ring: &Ring, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ring.variables[i].clone()),
            _ => parts.push(format!("{}^{}", ring.variables[i], e)),
        }
    }
    parts.join("*")
}

/// Degree-preserving linear substitution endomorphism: each variable maps to
/// a k-linear combination of variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSubstitution {
    pub ring: Ring,
    pub images: Vec<Polynomial>,
}

impl LinearSubstitution {
    pub fn new(ring: &Ring, images: Vec<Polynomial>) -> Result<LinearSubstitution> {
        if images.len() != ring.nvars() {
            return Err(Error::Usage(format!(
                "substitution needs {} images, got {}",
                ring.nvars(),
                images.len()
            )));
        }
        for (i, f) in images.iter().enumerate() {
            let linear = f.terms.iter().all(|(_, m)| m.degree() == 1);
            if !linear {
                return Err(Error::Usage(format!(
                    "image of variable '{}' is not homogeneous linear",
                    ring.variables[i]
                )));
            }
        }
        Ok(LinearSubstitution {
            ring: ring.clone(),
            images,
        })
    }

    pub fn identity(ring: &Ring) -> LinearSubstitution {
        LinearSubstitution {
            ring: ring.clone(),
            images: (0..ring.nvars())
                .map(|i| Polynomial::var(ring, i))
                .collect(),
        }
    }

    /// sigma_A with the j-th column of A as the image of the j-th variable,
    /// so that sigma_A . sigma_B = sigma_{AB}.
    pub fn from_matrix(ring: &Ring, a: &[Vec<FieldElement>]) -> Result<LinearSubstitution> {
        let n = ring.nvars();
        if a.len() != n || a.iter().any(|row| row.len() != n) {
            return Err(Error::Usage(format!("expected a {n}x{n} matrix")));
        }
        let images = (0..n)
            .map(|j| {
                let terms = (0..n)
                    .map(|i| (a[i][j].clone(), Monomial::var(n, i)))
                    .collect();
                Polynomial::from_terms(ring, terms)
            })
            .collect();
        LinearSubstitution::new(ring, images)
    }

    /// Matrix of the substitution on the variables: A[i][j] = coefficient of
    /// x_i in the image of x_j.
    pub fn matrix(&self) -> Vec<Vec<FieldElement>> {
        let n = self.ring.nvars();
        let mut a = vec![vec![self.ring.field.zero(); n]; n];
        for (j, f) in self.images.iter().enumerate() {
            for (c, m) in &f.terms {
                let i = m.exps().iter().position(|&e| e == 1).unwrap();
                a[i][j] = c.clone();
            }
        }
        a
    }

    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        let ring = &self.ring;
        let mut out = Polynomial::zero(ring);
        for (c, m) in &f.terms {
            let mut prod = Polynomial::constant(ring, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    prod = prod.mul(&self.images[i].pow(e));
                }
            }
            out = out.add(&prod);
        }
        out
    }

    /// Images of every monomial of total degree at most `degree`, built
    /// degree by degree: each image is one product of a lower-degree image
    /// with a variable image, so shared subproducts are computed once.
    pub fn monomial_images(&self, degree: u32) -> HashMap<Monomial, Polynomial> {
        let ring = &self.ring;
        let n = ring.nvars();
        let mut table = HashMap::new();
        let mut level = HashMap::new();
        level.insert(
            Monomial::one(n),
            Polynomial::constant(ring, ring.field.one()),
        );
        table.extend(level.clone());
        for d in 1..=degree {
            level = self.next_monomial_level(&level, d);
            table.extend(level.iter().map(|(m, f)| (m.clone(), f.clone())));
        }
        table
    }

    /// From the images of the monomials of degree `degree - 1`, the images
    /// of the monomials of degree `degree`.
    pub fn next_monomial_level(
        &self,
        level: &HashMap<Monomial, Polynomial>,
        degree: u32,
    ) -> HashMap<Monomial, Polynomial> {
        let n = self.ring.nvars();
        let mut next = HashMap::new();
        for m in Monomial::all_of_degree(n, degree) {
            let mut exps = m.exps().to_vec();
            let k = exps.iter().position(|&e| e > 0).unwrap();
            exps[k] -= 1;
            let img = level[&Monomial::from_exps(&exps)].mul(&self.images[k]);
            next.insert(m, img);
        }
        next
    }

    /// `apply` reading monomial images from a `monomial_images` table.
    /// Monomials beyond the table fall back to direct expansion.
    pub fn apply_cached(
        &self,
        f: &Polynomial,
        table: &HashMap<Monomial, Polynomial>,
    ) -> Polynomial {
        let ring = &self.ring;
        let mut out = Polynomial::zero(ring);
        for (c, m) in &f.terms {
            match table.get(m) {
                Some(img) => out = out.add(&img.scale(c)),
                None => {
                    let mut prod = Polynomial::constant(ring, c.clone());
                    for (i, &e) in m.exps().iter().enumerate() {
                        if e > 0 {
                            prod = prod.mul(&self.images[i].pow(e));
                        }
                    }
                    out = out.add(&prod);
                }
            }
        }
        out
    }

    /// self . other: first apply `other`, then `self`.
    pub fn compose(&self, other: &LinearSubstitution) -> LinearSubstitution {
        LinearSubstitution {
            ring: self.ring.clone(),
            images: other.images.iter().map(|f| self.apply(f)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, f)| *f == Polynomial::var(&self.ring, i))
    }

    pub fn pow(&self, e: u32) -> LinearSubstitution {
        let mut out = LinearSubstitution::identity(&self.ring);
        for _ in 0..e {
            out = self.compose(&out);
        }
        out
    }

    /// If this substitution permutes the variables, the permutation p with
    /// x_j mapping to x_{p[j]}.
    pub fn permutation(&self) -> Option<Vec<usize>> {
        let mut p = Vec::with_capacity(self.images.len());
        for f in &self.images {
            if f.terms.len() != 1 {
                return None;
            }
            let (c, m) = &f.terms[0];
            if !c.is_one() || m.degree() != 1 {
                return None;
            }
            p.push(m.exps().iter().position(|&e| e == 1).unwrap());
        }
        let mut seen = vec![false; p.len()];
        for &i in &p {
            if seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(p)
    }
}

/// Convenience: rational constant polynomial.
pub fn rational_const(ring: &Ring, q: BigRational) -> Polynomial {
    Polynomial::constant(ring, ring.field.from_rational(q))
}
