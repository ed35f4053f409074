//! Univariate polynomials in a formal variable t with field coefficients,
//! used for reversed characteristic polynomials and Hilbert-series checks.

use crate::error::{Error, Result};
use crate::field::{element_to_string, Field, FieldElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    pub field: Field,
    /// Low-to-high coefficients; trailing zeros trimmed.
    pub coeffs: Vec<FieldElement>,
}

impl UniPoly {
    pub fn zero(field: &Field) -> UniPoly {
        UniPoly {
            field: field.clone(),
            coeffs: vec![],
        }
    }

    pub fn one(field: &Field) -> UniPoly {
        UniPoly {
            field: field.clone(),
            coeffs: vec![field.one()],
        }
    }

    pub fn from_coeffs(field: &Field, coeffs: Vec<FieldElement>) -> UniPoly {
        let mut p = UniPoly {
            field: field.clone(),
            coeffs,
        };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeff(&self, k: usize) -> FieldElement {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| self.field.add(&self.coeff(k), &other.coeff(k)))
            .collect();
        UniPoly::from_coeffs(&self.field, coeffs)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| self.field.sub(&self.coeff(k), &other.coeff(k)))
            .collect();
        UniPoly::from_coeffs(&self.field, coeffs)
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return UniPoly::zero(&self.field);
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = self.field.add(&coeffs[i + j], &self.field.mul(a, b));
            }
        }
        UniPoly::from_coeffs(&self.field, coeffs)
    }

    pub fn truncate(&self, bound: usize) -> UniPoly {
        UniPoly::from_coeffs(
            &self.field,
            self.coeffs.iter().take(bound + 1).cloned().collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let cs = element_to_string(&self.field, c);
                match k {
                    0 => cs,
                    1 => format!("({cs})*t"),
                    _ => format!("({cs})*t^{k}"),
                }
            })
            .collect();
        parts.join(" + ")
    }
}

/// det(Id - t*A) for a square matrix A of field elements, by cofactor
/// expansion over the polynomial ring in t.
pub fn reverse_char_poly(field: &Field, a: &[Vec<FieldElement>]) -> Result<UniPoly> {
    let n = a.len();
    if a.iter().any(|row| row.len() != n) {
        return Err(Error::Usage(
            "reverse_char_poly needs a square matrix".into(),
        ));
    }
    let entries: Vec<Vec<UniPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let diag = if i == j { field.one() } else { field.zero() };
                    UniPoly::from_coeffs(field, vec![diag, field.neg(&a[i][j])])
                })
                .collect()
        })
        .collect();
    Ok(uni_det(field, &entries))
}

fn uni_det(field: &Field, m: &[Vec<UniPoly>]) -> UniPoly {
    let n = m.len();
    if n == 0 {
        return UniPoly::one(field);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = UniPoly::zero(field);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<UniPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let cof = m[0][j].mul(&uni_det(field, &minor));
        det = if j % 2 == 0 {
            det.add(&cof)
        } else {
            det.sub(&cof)
        };
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{cyclotomic_field_7, FieldSpec};

    #[test]
    fn identity_matrix() {
        let f = FieldSpec::rational();
        let id: Vec<Vec<FieldElement>> = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| if i == j { f.one() } else { f.zero() })
                    .collect()
            })
            .collect();
        let p = reverse_char_poly(&f, &id).unwrap();
        // (1 - t)^3 = 1 - 3t + 3t^2 - t^3
        assert_eq!(
            p.coeffs,
            vec![f.one(), f.from_i64(-3), f.from_i64(3), f.from_i64(-1)]
        );
        assert_eq!(p.coeff(0), f.one());
    }

    #[test]
    fn diagonal_cyclotomic() {
        let f = cyclotomic_field_7();
        let d = [f.gen_power(4), f.gen_power(2), f.gen_power(1)];
        let a: Vec<Vec<FieldElement>> = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| if i == j { d[i].clone() } else { f.zero() })
                    .collect()
            })
            .collect();
        let p = reverse_char_poly(&f, &a).unwrap();
        let mut expect = UniPoly::one(&f);
        for x in &d {
            expect = expect.mul(&UniPoly::from_coeffs(&f, vec![f.one(), f.neg(x)]));
        }
        assert_eq!(p, expect);
    }

    #[test]
    fn four_cycle_permutation() {
        let f = FieldSpec::rational();
        // permutation matrix of the 4-cycle x1->x2->x3->x4: column j is e_{j+1 mod 4}
        let mut a = vec![vec![f.zero(); 4]; 4];
        for j in 0..4 {
            a[(j + 1) % 4][j] = f.one();
        }
        let p = reverse_char_poly(&f, &a).unwrap();
        // 1 - t^4, derived by cofactor expansion by hand
        assert_eq!(
            p.coeffs,
            vec![f.one(), f.zero(), f.zero(), f.zero(), f.from_i64(-1)]
        );
        assert!(reverse_char_poly(&f, &a[..3]).is_err());
    }
}
