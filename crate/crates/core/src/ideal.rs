//! Ideals with a cached reduced Groebner basis and the derived operations:
//! sums, products, powers, intersections, colon ideals, saturation, and
//! symbolic powers.

use std::sync::OnceLock;

use crate::error::Result;
use crate::groebner::{buchberger, GroebnerBasis};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::Ring;

#[derive(Debug, Clone)]
pub struct Ideal {
    pub ring: Ring,
    pub gens: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
}

/// Transport a polynomial into the same ring extended by a leading
/// elimination variable.
fn extend_poly(ring_ext: &Ring, f: &Polynomial) -> Polynomial {
    Polynomial::from_terms(
        ring_ext,
        f.terms
            .iter()
            .map(|(c, m)| (c.clone(), m.prepend_zeros(1)))
            .collect(),
    )
}

fn restrict_poly(ring: &Ring, f: &Polynomial) -> Polynomial {
    Polynomial::from_terms(
        ring,
        f.terms
            .iter()
            .map(|(c, m)| (c.clone(), m.drop_first(1)))
            .collect(),
    )
}

impl Ideal {
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Ideal {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal {
            ring: ring.clone(),
            gens,
            gb: OnceLock::new(),
        }
    }

    pub fn maximal(ring: &Ring) -> Ideal {
        let gens = (0..ring.nvars())
            .map(|i| Polynomial::var(ring, i))
            .collect();
        Ideal::new(ring, gens)
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn gb(&self) -> Result<&GroebnerBasis> {
        if self.gb.get().is_none() {
            let g = buchberger(&self.gens, &self.ring, self.ring.order, false)?;
            let _ = self.gb.set(g);
        }
        Ok(self.gb.get().unwrap())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.gb()?.reduces_to_zero(f))
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        let gb = self.gb()?;
        Ok(other.gens.iter().all(|g| gb.reduces_to_zero(g)))
    }

    /// Equality of ideals via equality of reduced Groebner bases.
    pub fn same(&self, other: &Ideal) -> Result<bool> {
        Ok(self.gb()?.same_ideal(other.gb()?))
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.contains(&Polynomial::one(&self.ring))?)
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f.mul(g));
            }
        }
        Ideal::new(&self.ring, gens)
    }

    pub fn power(&self, m: u32) -> Ideal {
        if m == 0 {
            return Ideal::new(&self.ring, vec![Polynomial::one(&self.ring)]);
        }
        let mut acc = self.clone();
        for _ in 1..m {
            acc = acc.product(self);
        }
        acc
    }

    /// Intersection by elimination: generate t*I + (1-t)*J in R[t] with t
    /// ahead of every ring variable, keep basis elements free of t.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::new(&self.ring, vec![]));
        }
        let ring_ext = self.ring.with_elim_var();
        let t = Polynomial::var(&ring_ext, 0);
        let one_minus_t = Polynomial::one(&ring_ext).sub(&t);
        let mut gens = Vec::new();
        for f in &self.gens {
            gens.push(t.mul(&extend_poly(&ring_ext, f)));
        }
        for g in &other.gens {
            gens.push(one_minus_t.mul(&extend_poly(&ring_ext, g)));
        }
        let gb = buchberger(&gens, &ring_ext, ring_ext.order, false)?;
        let kept = gb
            .elements
            .iter()
            .filter(|f| f.terms.iter().all(|(_, m)| m.exps()[0] == 0))
            .map(|f| restrict_poly(&self.ring, f))
            .collect();
        Ok(Ideal::new(&self.ring, kept))
    }

    /// Colon ideal self : other, intersecting (self : f) over the generators.
    pub fn quotient(&self, other: &Ideal) -> Result<Ideal> {
        if other.is_zero() {
            return Ok(Ideal::new(&self.ring, vec![Polynomial::one(&self.ring)]));
        }
        let mut acc: Option<Ideal> = None;
        for f in &other.gens {
            let principal = Ideal::new(&self.ring, vec![f.clone()]);
            let inter = self.intersection(&principal)?;
            let divided: Vec<Polynomial> = inter
                .gens
                .iter()
                .map(|g| g.div_exact(f))
                .collect::<Result<_>>()?;
            let part = Ideal::new(&self.ring, divided);
            acc = Some(match acc {
                None => part,
                Some(a) => a.intersection(&part)?,
            });
        }
        Ok(acc.unwrap())
    }

    /// Iterated colon until the reduced basis stabilizes.
    pub fn saturate(&self, other: &Ideal) -> Result<Ideal> {
        let mut current = self.clone();
        loop {
            let next = current.quotient(other)?;
            if next.same(&current)? {
                return Ok(current);
            }
            current = next;
        }
    }

    /// m-th symbolic power: saturation of the ordinary power at the ideal of
    /// all variables.
    pub fn symbolic_power(&self, m: u32) -> Result<Ideal> {
        self.power(m).saturate(&Ideal::maximal(&self.ring))
    }
}

/// Monomial k-basis of the degree-d graded piece of R/I, as the standard
/// monomials of the given degree.
pub fn standard_monomials(ideal: &Ideal, degree: u32) -> Result<Vec<Monomial>> {
    let gb = ideal.gb()?;
    let leads: Vec<Monomial> = gb
        .elements
        .iter()
        .map(|g| g.lead().unwrap().1.clone())
        .collect();
    let all = Monomial::all_of_degree(ideal.ring.nvars(), degree);
    Ok(all
        .into_iter()
        .filter(|m| !leads.iter().any(|l| l.divides(m)))
        .collect())
}
