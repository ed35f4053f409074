//! Exponent vectors and monomial orders.

use std::cmp::Ordering;

use smallvec::SmallVec;

/// Exponent vector in the ambient ring; degree is the coordinate sum
/// (standard grading, every variable in degree 1).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u32; 8]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn var(nvars: usize, i: usize) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.exps[i] = 1;
        m
    }

    pub fn from_exps(exps: &[u32]) -> Monomial {
        Monomial {
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial {
                exps: self
                    .exps
                    .iter()
                    .zip(&other.exps)
                    .map(|(a, b)| a - b)
                    .collect(),
            })
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Append extra leading variables (used for elimination rings).
    pub fn prepend_zeros(&self, k: usize) -> Monomial {
        let mut exps = SmallVec::from_elem(0, k);
        exps.extend_from_slice(&self.exps);
        Monomial { exps }
    }

    pub fn drop_first(&self, k: usize) -> Monomial {
        Monomial {
            exps: SmallVec::from_slice(&self.exps[k..]),
        }
    }

    /// Every monomial in `nvars` variables of the given total degree, in
    /// lexicographic order of exponent vectors.
    pub fn all_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
        fn rec(out: &mut Vec<Monomial>, prefix: &mut Vec<u32>, left: u32, nvars: usize) {
            if prefix.len() + 1 == nvars {
                prefix.push(left);
                out.push(Monomial::from_exps(prefix));
                prefix.pop();
                return;
            }
            for e in (0..=left).rev() {
                prefix.push(e);
                rec(out, prefix, left - e, nvars);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if nvars == 0 {
            if degree == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        rec(&mut out, &mut Vec::new(), degree, nvars);
        out
    }
}

/// Total orders on monomials of a fixed ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic with the declared variable order.
    Grevlex,
    Lex,
    /// Block order eliminating the first `count` variables:
    /// grevlex on the first block, ties broken by grevlex on the rest.
    ElimFirst(usize),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => grevlex(&a.exps, &b.exps),
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::ElimFirst(k) => grevlex(&a.exps[..*k], &b.exps[..*k])
                .then_with(|| grevlex(&a.exps[*k..], &b.exps[*k..])),
        }
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    // reverse lex: scanning from the last variable, the first difference
    // decides, with the smaller exponent being the larger monomial
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        match x.cmp(y) {
            Ordering::Equal => {}
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}
