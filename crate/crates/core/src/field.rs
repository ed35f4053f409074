//! Exact arithmetic in Q and in extensions Q[a]/(f(a)).
//!
//! Elements are stored as canonical representatives of residue classes:
//! coefficient vectors of length d = deg f, always fully reduced.

use std::fmt;
use std::sync::Arc;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldKind {
    Rational,
    Extension,
}

/// Coefficient field: Q, or Q[a]/(f(a)) for a monic f.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    kind: FieldKind,
    generator: Option<String>,
    /// Monic minimal polynomial, low-to-high coefficients, length d + 1.
    /// For the rational field this is the formal polynomial `a`.
    min_poly: Vec<BigRational>,
    cyclotomic_order: Option<u64>,
}

pub type Field = Arc<FieldSpec>;

/// Element of a `FieldSpec`: coefficient vector of length d (d = 1 over Q).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    pub coeffs: Vec<BigRational>,
}

impl FieldSpec {
    pub fn rational() -> Field {
        Arc::new(FieldSpec {
            kind: FieldKind::Rational,
            generator: None,
            min_poly: vec![BigRational::zero(), BigRational::one()],
            cyclotomic_order: None,
        })
    }

    /// Extension field Q[a]/(f). `min_poly` is low-to-high and must be monic
    /// of degree >= 1. If `cyclotomic_order` m is given, f must divide a^m - 1.
    pub fn extension(
        generator: &str,
        min_poly: Vec<BigRational>,
        cyclotomic_order: Option<u64>,
    ) -> Result<Field> {
        let d = min_poly.len().checked_sub(1).unwrap_or(0);
        if d < 1 {
            return Err(Error::Usage("min-poly must have degree >= 1".into()));
        }
        if !min_poly[d].is_one() {
            return Err(Error::Usage("min-poly must be monic".into()));
        }
        if let Some(m) = cyclotomic_order {
            if m == 0 {
                return Err(Error::Usage("cyclotomic order must be positive".into()));
            }
            // a^m - 1 mod f must vanish
            let mut am = vec![BigRational::zero(); m as usize + 1];
            am[m as usize] = BigRational::one();
            am[0] = -BigRational::one();
            let (_, r) = upoly_divrem(&am, &min_poly);
            if !r.iter().all(|c| c.is_zero()) {
                return Err(Error::Usage(format!(
                    "min-poly does not divide {generator}^{m} - 1"
                )));
            }
        }
        Ok(Arc::new(FieldSpec {
            kind: FieldKind::Extension,
            generator: Some(generator.to_string()),
            min_poly,
            cyclotomic_order,
        }))
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn generator_name(&self) -> Option<&str> {
        self.generator.as_deref()
    }

    pub fn cyclotomic_order(&self) -> Option<u64> {
        self.cyclotomic_order
    }

    /// Extension degree d; 1 for the rationals.
    pub fn degree(&self) -> usize {
        self.min_poly.len() - 1
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coeffs: vec![BigRational::zero(); self.degree()],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_rational(BigRational::one())
    }

    pub fn from_rational(&self, q: BigRational) -> FieldElement {
        let mut coeffs = vec![BigRational::zero(); self.degree()];
        coeffs[0] = q;
        FieldElement { coeffs }
    }

    pub fn from_i64(&self, n: i64) -> FieldElement {
        self.from_rational(BigRational::from(BigInt::from(n)))
    }

    /// a^k reduced mod the minimal polynomial.
    pub fn gen_power(&self, k: usize) -> FieldElement {
        let mut v = vec![BigRational::zero(); k + 1];
        v[k] = BigRational::one();
        self.reduce(v)
    }

    fn reduce(&self, v: Vec<BigRational>) -> FieldElement {
        let (_, r) = upoly_divrem(&v, &self.min_poly);
        let mut coeffs = r;
        coeffs.resize(self.degree(), BigRational::zero());
        FieldElement { coeffs }
    }

    fn check_len(&self, x: &FieldElement) {
        assert_eq!(
            x.coeffs.len(),
            self.degree(),
            "field element does not belong to this field"
        );
    }

    pub fn add(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        self.check_len(x);
        self.check_len(y);
        FieldElement {
            coeffs: x.coeffs.iter().zip(&y.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        self.check_len(x);
        self.check_len(y);
        FieldElement {
            coeffs: x.coeffs.iter().zip(&y.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self, x: &FieldElement) -> FieldElement {
        FieldElement {
            coeffs: x.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        self.check_len(x);
        self.check_len(y);
        let d = self.degree();
        if d == 1 {
            return FieldElement {
                coeffs: vec![&x.coeffs[0] * &y.coeffs[0]],
            };
        }
        let mut prod = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in x.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] += a * b;
            }
        }
        self.reduce(prod)
    }

    /// Multiplicative inverse by extended Euclid on (representative, min-poly).
    pub fn inv(&self, x: &FieldElement) -> Result<FieldElement> {
        self.check_len(x);
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.degree() == 1 {
            return Ok(FieldElement {
                coeffs: vec![x.coeffs[0].recip()],
            });
        }
        let (g, s) = upoly_ext_gcd(&x.coeffs, &self.min_poly);
        // g = s * x + t * f; for an irreducible f and x != 0, g is a nonzero constant
        if upoly_degree(&g) != Some(0) {
            return Err(Error::ReducibleMinPoly);
        }
        let c = g[0].recip();
        let scaled: Vec<BigRational> = s.iter().map(|a| a * &c).collect();
        Ok(self.reduce(scaled))
    }

    pub fn div(&self, x: &FieldElement, y: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(x, &self.inv(y)?))
    }

    /// Complex conjugation: identity over Q; over a cyclotomic field of order
    /// m, the automorphism a -> a^(m-1).
    pub fn conjugate(&self, x: &FieldElement) -> Result<FieldElement> {
        self.check_len(x);
        match self.kind {
            FieldKind::Rational => Ok(x.clone()),
            FieldKind::Extension => {
                let m = self.cyclotomic_order.ok_or(Error::UnsupportedConjugation)? as usize;
                // a^m = 1 in this field, so a^k maps to a^(k(m-1) mod m)
                let mut v = vec![BigRational::zero(); m];
                for (k, c) in x.coeffs.iter().enumerate() {
                    if !c.is_zero() {
                        v[k * (m - 1) % m] += c;
                    }
                }
                Ok(self.reduce(v))
            }
        }
    }

    /// The rational value of x, if x lies in the prime field.
    pub fn as_rational(&self, x: &FieldElement) -> Option<BigRational> {
        if x.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(x.coeffs[0].clone())
        } else {
            None
        }
    }
}

impl FieldElement {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }
}

/// Render a rational in lowest terms, integer form when the denominator is 1.
pub fn rational_to_string(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Render a field element in the expression grammar, e.g. "2*a^4+2/7*a+1".
pub fn element_to_string(field: &FieldSpec, x: &FieldElement) -> String {
    let gen = field.generator_name().unwrap_or("a");
    let mut parts: Vec<String> = Vec::new();
    for (k, c) in x.coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let abs = c.abs();
        let coeff = rational_to_string(&abs);
        let body = if k == 0 {
            coeff
        } else {
            let p = if k == 1 {
                gen.to_string()
            } else {
                format!("{gen}^{k}")
            };
            if abs.is_one() {
                p
            } else {
                format!("{coeff}*{p}")
            }
        };
        if parts.is_empty() {
            parts.push(if c.is_negative() {
                format!("-{body}")
            } else {
                body
            });
        } else {
            parts.push(format!(
                "{}{}",
                if c.is_negative() { "-" } else { "+" },
                body
            ));
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.concat()
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // generator name is not known here; use "a"
        let mut parts: Vec<String> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            parts.push(format!("{}*a^{}", c, k));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+"))
        }
    }
}

// --- univariate polynomials over Q, low-to-high coefficient vectors ---

pub(crate) fn upoly_degree(p: &[BigRational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn upoly_trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.len() > 0 && p.last().unwrap().is_zero() {
        p.pop();
    }
    p
}

/// Quotient and remainder of a by b (b nonzero).
pub(crate) fn upoly_divrem(
    a: &[BigRational],
    b: &[BigRational],
) -> (Vec<BigRational>, Vec<BigRational>) {
    let db = upoly_degree(b).expect("division by the zero polynomial");
    let lead = b[db].clone();
    let mut r: Vec<BigRational> = a.to_vec();
    let mut q = vec![BigRational::zero(); a.len()];
    loop {
        let dr = match upoly_degree(&r) {
            Some(d) if d >= db => d,
            _ => break,
        };
        let c = &r[dr] / &lead;
        let shift = dr - db;
        q[shift] = c.clone();
        for (i, bc) in b.iter().enumerate() {
            if !bc.is_zero() {
                let t = &c * bc;
                r[i + shift] -= t;
            }
        }
    }
    (upoly_trim(q), upoly_trim(r))
}

/// Returns (g, s) with g = gcd(a, b) and g = s*a + t*b for some t.
fn upoly_ext_gcd(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r0 = upoly_trim(a.to_vec());
    let mut r1 = upoly_trim(b.to_vec());
    let mut s0 = vec![BigRational::one()];
    let mut s1: Vec<BigRational> = vec![];
    while !r1.is_empty() {
        let (q, r) = upoly_divrem(&r0, &r1);
        let s = upoly_sub(&s0, &upoly_mul(&q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    (r0, s0)
}

fn upoly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    upoly_trim(out)
}

fn upoly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    upoly_trim(out)
}

/// The cyclotomic-style field Q(z_7) used throughout the tests: Q[a]/(Phi_7).
pub fn cyclotomic_field_7() -> Field {
    let ones = vec![BigRational::one(); 7];
    FieldSpec::extension("a", ones, Some(7)).expect("Phi_7 is a valid minimal polynomial")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rational_arithmetic() {
        let f = FieldSpec::rational();
        let x = f.from_rational(q(3, 5));
        let y = f.from_rational(q(2, 5));
        assert_eq!(f.add(&x, &y), f.one());
        assert!(f.sub(&x, &x).is_zero());
        assert_eq!(f.mul(&x, &f.inv(&x).unwrap()), f.one());
        assert_eq!(f.conjugate(&x).unwrap(), x);
    }

    #[test]
    fn gen_power_wraps_in_cyclotomic() {
        let f = cyclotomic_field_7();
        // a * a^6 = a^7 = 1 mod Phi_7
        let a = f.gen_power(1);
        let a6 = f.gen_power(6);
        assert_eq!(f.mul(&a, &a6), f.one());
        assert!(f.mul(&f.zero(), &a).is_zero());
    }

    /// Independent oracle: expand s^2 as a plain univariate product and reduce
    /// mod Phi_7 by long division, without going through FieldSpec::mul.
    #[test]
    fn sqrt_minus_seven_element() {
        let f = cyclotomic_field_7();
        // s = 2a^4 + 2a^2 + 2a + 1
        let mut s = f.zero();
        for (k, c) in [(4i64, 2i64), (2, 2), (1, 2), (0, 1)] {
            let t = f.mul(&f.gen_power(k as usize), &f.from_i64(c));
            s = f.add(&s, &t);
        }
        // oracle: naive convolution + long division
        let sv = vec![q(1, 1), q(2, 1), q(2, 1), q(0, 1), q(2, 1), q(0, 1)];
        let mut conv = vec![BigRational::zero(); 11];
        for i in 0..6 {
            for j in 0..6 {
                conv[i + j] += &sv[i] * &sv[j];
            }
        }
        let phi: Vec<BigRational> = vec![BigRational::one(); 7];
        let (_, r) = upoly_divrem(&conv, &phi);
        let mut expect = r;
        expect.resize(6, BigRational::zero());
        let got = f.mul(&s, &s);
        assert_eq!(got.coeffs, expect);
        // and by hand that oracle value is -7
        assert_eq!(got, f.from_i64(-7));
        // hence s^{-1} = -s/7
        let inv = f.inv(&s).unwrap();
        let mut minus_s_over_7 = f.mul(&s, &f.from_rational(q(-1, 7)));
        assert_eq!(inv, minus_s_over_7);
        minus_s_over_7 = f.mul(&minus_s_over_7, &s);
        assert_eq!(minus_s_over_7, f.one());
    }

    #[test]
    fn conjugation_involution_and_homomorphism() {
        let f = cyclotomic_field_7();
        let a = f.gen_power(1);
        assert_eq!(f.conjugate(&a).unwrap(), f.gen_power(6));
        let sym = f.add(&a, &f.gen_power(6));
        assert_eq!(f.conjugate(&sym).unwrap(), sym);
        let x = f.add(&f.gen_power(3), &f.from_i64(2));
        let y = f.sub(&f.gen_power(5), &f.from_i64(4));
        assert_eq!(f.conjugate(&f.conjugate(&x).unwrap()).unwrap(), x);
        assert_eq!(
            f.conjugate(&f.mul(&x, &y)).unwrap(),
            f.mul(&f.conjugate(&x).unwrap(), &f.conjugate(&y).unwrap())
        );
    }

    #[test]
    fn conjugation_requires_cyclotomic_data() {
        let f = FieldSpec::extension("b", vec![q(-2, 1), q(0, 1), q(1, 1)], None).unwrap();
        let b = f.gen_power(1);
        assert!(matches!(
            f.conjugate(&b),
            Err(Error::UnsupportedConjugation)
        ));
    }

    #[test]
    fn inv_of_zero_fails() {
        let f = FieldSpec::rational();
        assert!(matches!(f.inv(&f.zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn reducible_min_poly_detected_lazily() {
        // a^2 - 1 is reducible; a - 1 is a zero divisor
        let f = FieldSpec::extension("a", vec![q(-1, 1), q(0, 1), q(1, 1)], None).unwrap();
        let x = f.sub(&f.gen_power(1), &f.one());
        assert!(matches!(f.inv(&x), Err(Error::ReducibleMinPoly)));
    }

    #[test]
    fn cyclotomic_order_checked_at_construction() {
        // a^2 + 1 does not divide a^3 - 1
        assert!(FieldSpec::extension("a", vec![q(1, 1), q(0, 1), q(1, 1)], Some(3)).is_err());
    }

    #[test]
    fn render_round_values() {
        let f = cyclotomic_field_7();
        let mut s = f.zero();
        for (k, c) in [(4usize, 2i64), (2, 2), (1, 2), (0, 1)] {
            s = f.add(&s, &f.mul(&f.gen_power(k), &f.from_i64(c)));
        }
        assert_eq!(element_to_string(&f, &s), "2*a^4+2*a^2+2*a+1");
        let t = f.mul(&s, &f.from_rational(q(1, 7)));
        assert_eq!(element_to_string(&f, &t), "2/7*a^4+2/7*a^2+2/7*a+1/7");
    }
}
