//! Irreducible characters of symmetric groups via the Murnaghan-Nakayama
//! recursion, and character inner products for decomposing traces.

use num::BigRational;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::poly::LinearSubstitution;

/// Partitions of n with parts descending, listed in descending
/// lexicographic order: (n) first, (1, ..., 1) last.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(out: &mut Vec<Vec<usize>>, prefix: &mut Vec<usize>, left: usize, max: usize) {
        if left == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in (1..=left.min(max)).rev() {
            prefix.push(p);
            rec(out, prefix, left - p, p);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut out, &mut Vec::new(), n, n);
    out
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Centralizer order z_mu = prod over part sizes k of k^m_k * m_k!.
fn z_mu(mu: &[usize]) -> u64 {
    let mut z = 1u64;
    let mut i = 0;
    while i < mu.len() {
        let k = mu[i];
        let mut m = 0;
        while i < mu.len() && mu[i] == k {
            m += 1;
            i += 1;
        }
        z *= (k as u64).pow(m as u32) * factorial(m);
    }
    z
}

/// Number of permutations in S_n with cycle type mu.
pub fn class_size(n: usize, mu: &[usize]) -> u64 {
    factorial(n) / z_mu(mu)
}

/// Murnaghan-Nakayama: sum over removals of a border strip of size mu[0]
/// from lambda, signed by (-1)^(strip height), of the value on the rest.
/// Strips are located through first-column beta numbers: removing a strip of
/// size r moves one beta number down by r.
fn mn_value(lambda: &[usize], mu: &[usize]) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    let r = mu[0];
    let l = lambda.len();
    let beta: Vec<usize> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (l - 1 - i))
        .collect();
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r {
            continue;
        }
        let nb = b - r;
        if beta.contains(&nb) {
            continue;
        }
        let height = beta.iter().filter(|&&x| nb < x && x < b).count();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        let mut nbeta = beta.clone();
        nbeta[idx] = nb;
        nbeta.sort_unstable_by(|a, b| b.cmp(a));
        let nl = nbeta.len();
        let mut parts: Vec<usize> = nbeta
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (nl - 1 - i))
            .collect();
        parts.retain(|&p| p > 0);
        total += sign * mn_value(&parts, &mu[1..]);
    }
    total
}

/// Character table of S_n. Rows are irreducible characters indexed by
/// partitions in descending lexicographic order (trivial first, sign last);
/// columns are cycle types in ascending lexicographic order (identity
/// first).
#[derive(Debug, Clone)]
pub struct SymmetricGroupTable {
    pub field: Field,
    pub n: usize,
    pub irreps: Vec<Vec<usize>>,
    pub classes: Vec<Vec<usize>>,
    pub class_sizes: Vec<u64>,
    pub group_order: u64,
    /// values[row][col].
    pub values: Vec<Vec<FieldElement>>,
}

pub fn symmetric_group_table(field: &Field, n: usize) -> Result<SymmetricGroupTable> {
    if n == 0 || n > 8 {
        return Err(Error::Usage(format!(
            "symmetric group table supported for 1 <= n <= 8, got {n}"
        )));
    }
    let irreps = partitions(n);
    let mut classes = irreps.clone();
    classes.reverse();
    let class_sizes: Vec<u64> = classes.iter().map(|mu| class_size(n, mu)).collect();
    let values = irreps
        .iter()
        .map(|lambda| {
            classes
                .iter()
                .map(|mu| field.from_i64(mn_value(lambda, mu)))
                .collect()
        })
        .collect();
    Ok(SymmetricGroupTable {
        field: field.clone(),
        n,
        irreps,
        classes,
        class_sizes,
        group_order: factorial(n),
        values,
    })
}

/// (1/|G|) sum over classes of size * x * conj(y).
pub fn character_inner_product(
    field: &Field,
    x: &[FieldElement],
    y: &[FieldElement],
    class_sizes: &[u64],
    group_order: u64,
) -> Result<FieldElement> {
    if x.len() != y.len() || x.len() != class_sizes.len() {
        return Err(Error::Usage(
            "characters and class sizes must have matching lengths".into(),
        ));
    }
    let mut acc = field.zero();
    for ((a, b), &size) in x.iter().zip(y).zip(class_sizes) {
        let term = field.mul(a, &field.conjugate(b)?);
        let scaled = field.mul(&term, &field.from_i64(size as i64));
        acc = field.add(&acc, &scaled);
    }
    let inv_order = field.from_rational(BigRational::new(1.into(), (group_order as i64).into()));
    Ok(field.mul(&acc, &inv_order))
}

impl SymmetricGroupTable {
    /// Multiplicity of each irreducible in a character given in this table's
    /// class order.
    pub fn decompose(&self, values: &[FieldElement]) -> Result<Vec<(Vec<usize>, FieldElement)>> {
        self.irreps
            .iter()
            .zip(&self.values)
            .map(|(lambda, row)| {
                let m = character_inner_product(
                    &self.field,
                    values,
                    row,
                    &self.class_sizes,
                    self.group_order,
                )?;
                Ok((lambda.clone(), m))
            })
            .collect()
    }

    pub fn class_index(&self, cycle_type: &[usize]) -> Option<usize> {
        self.classes.iter().position(|mu| mu == cycle_type)
    }
}

/// Cycle type of a substitution that permutes the variables, parts
/// descending; None if it is not a variable permutation.
pub fn cycle_type(sub: &LinearSubstitution) -> Option<Vec<usize>> {
    let perm = sub.permutation()?;
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut parts = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        parts.push(len);
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Some(parts)
}
