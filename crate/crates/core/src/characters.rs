//! Irreducible characters of symmetric groups.
//!
//! Two independent routes: the hook row from Jackson's generating polynomial,
//! and a memoised Murnaghan–Nakayama recursion on beta-sets.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;

use crate::error::{HurwitzError, Result};
use crate::exact_arith::{factorial, Rat};
use crate::partitions::{partitions_of, Partition};

/// `(χ^{[1^j, d-j]}(β))_{j=0..d-1}`.
pub fn hook_char_row(beta: &Partition) -> Result<Vec<i64>> {
    if beta.is_empty() {
        return Err(HurwitzError::InvalidPartition(
            "hook row of the empty partition".into(),
        ));
    }
    let d = beta.size() as usize;
    // ∏_j (1 - y^j)^{a_j} as a dense integer polynomial
    let mut poly = vec![0i64; d + 1];
    poly[0] = 1;
    for &part in beta.parts() {
        let p = part as usize;
        for i in (p..=d).rev() {
            poly[i] -= poly[i - p];
        }
    }
    // divide by (1 - y): quotient coefficients are prefix sums
    let mut quotient = Vec::with_capacity(d);
    let mut acc = 0i64;
    for &c in &poly[..d] {
        acc += c;
        quotient.push(acc);
    }
    if acc + poly[d] != 0 {
        return Err(HurwitzError::Internal(format!(
            "Jackson polynomial for {beta} not divisible by 1 - y"
        )));
    }
    Ok(quotient
        .into_iter()
        .enumerate()
        .map(|(j, q)| if j % 2 == 0 { q } else { -q })
        .collect())
}

type CharCache = RwLock<HashMap<(Partition, Partition), i64>>;

fn char_cache() -> &'static CharCache {
    static CACHE: OnceLock<CharCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `χ^λ(μ)` by border-strip removal, removing the largest part of `μ` first.
pub fn mn_char(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(HurwitzError::SizeMismatch(format!(
            "character χ^{lambda}({mu}) needs equal sizes"
        )));
    }
    Ok(mn_rec(lambda, mu.parts()))
}

fn mn_rec(lambda: &Partition, mu: &[u32]) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), Partition::from(mu));
    if let Some(v) = char_cache()
        .read()
        .expect("character cache poisoned")
        .get(&key)
    {
        return *v;
    }
    let k = mu[0];
    let rest = &mu[1..];
    let n = lambda.len();
    let beta: Vec<i64> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i64 + (n - 1 - i) as i64)
        .collect();
    let mut total = 0i64;
    for &b in &beta {
        let target = b - k as i64;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let height = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut next: Vec<i64> = beta
            .iter()
            .map(|&c| if c == b { target } else { c })
            .collect();
        next.sort_unstable_by(|a, b| b.cmp(a));
        let m = next.len();
        let shape: Vec<u32> = next
            .iter()
            .enumerate()
            .map(|(i, &c)| (c - (m - 1 - i) as i64) as u32)
            .filter(|&p| p > 0)
            .collect();
        let sub = mn_rec(&Partition::from(shape.as_slice()), rest);
        total += if height % 2 == 0 { sub } else { -sub };
    }
    char_cache()
        .write()
        .expect("character cache poisoned")
        .insert(key, total);
    total
}

/// Dimension by the hook length formula.
pub fn dim_irrep(lambda: &Partition) -> BigInt {
    factorial(lambda.size()) / lambda.hook_product()
}

/// `(∏|C_i|)/d! · ∑_λ ∏_i χ^λ(C_i) / dim(λ)^{k-2}`, the character side of
/// Frobenius' count of tuples with product 1.
pub fn frobenius_character_sum(classes: &[Partition]) -> Result<Rat> {
    let d = classes
        .first()
        .map(|c| c.size())
        .ok_or_else(|| HurwitzError::InvalidArgument("no classes".into()))?;
    if let Some(bad) = classes.iter().find(|c| c.size() != d) {
        return Err(HurwitzError::SizeMismatch(format!(
            "{bad} is not of size {d}"
        )));
    }
    let k = classes.len() as i32;
    let prefactor: Rat = classes
        .iter()
        .map(|c| Rat::from(c.class_size()))
        .product::<Rat>()
        / Rat::from(factorial(d));
    let mut sum = Rat::zero();
    for lambda in partitions_of(d) {
        let mut term = Rat::from(dim_irrep(&lambda)).powi(2 - k);
        for c in classes {
            term *= Rat::from(mn_char(&lambda, c)?);
        }
        sum += term;
    }
    Ok(prefactor * sum)
}
