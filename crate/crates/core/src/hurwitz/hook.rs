//! Closed form for hook-shape numbers `W̃_{d,m}(θ_{i,d'}; (d), θ_{j,d})`,
//! where `W̃ = ∏k_i! · W̄`.

use num_bigint::BigInt;

use crate::error::{HurwitzError, Result};
use crate::exact_arith::{binom, factorial, Rat};
use crate::partitions::Partition;

/// `χ^{[1^k, d-k]}(θ_{j,d}) = C(d-j-1, k) + (-1)^{j-1} C(d-j-1, k-j)`, with
/// generalized binomials.
pub fn hook_char_closed(d: u32, k: u32, j: u32) -> BigInt {
    let top = d as i64 - j as i64 - 1;
    let second = binom(top, k as i64 - j as i64);
    let second = if j % 2 == 1 { second } else { -second };
    binom(top, k as i64) + second
}

/// The same expression with both binomials added.
pub fn hook_char_as_printed(d: u32, k: u32, j: u32) -> BigInt {
    let top = d as i64 - j as i64 - 1;
    binom(top, k as i64) + binom(top, k as i64 - j as i64)
}

fn check_indices(d: u32, m: u32, dprime: u32, i: u32, j: u32) -> Result<()> {
    if i == 0 || i > dprime || j == 0 || j > d || m == 0 || m > d {
        return Err(HurwitzError::InvalidArgument(format!(
            "hook indices out of range: d={d} m={m} d'={dprime} i={i} j={j}"
        )));
    }
    Ok(())
}

fn w_hook_with(
    d: u32,
    m: u32,
    dprime: u32,
    i: u32,
    j: u32,
    chi: fn(u32, u32, u32) -> BigInt,
) -> Result<Rat> {
    check_indices(d, m, dprime, i, j)?;
    let mut sum = Rat::zero();
    for k in 0..d {
        let tail = binom(d as i64 - k as i64 - 1, (d - m) as i64);
        let c = chi(d, k, j);
        if tail == BigInt::from(0) || c == BigInt::from(0) {
            continue;
        }
        let p = Rat::new(2 * (d - k) as i64 - 1, 2).pow(i) - Rat::new(-2 * k as i64 - 1, 2).pow(i);
        let term = p * Rat::from(c * tail);
        sum += if k % 2 == 0 { term } else { -term };
    }
    let theta = Partition::theta(j, d);
    Ok(
        Rat::from(theta.class_size()) * Rat::from(d).powi(dprime as i32 - i as i32 - 1) * sum
            / Rat::from(factorial(m)),
    )
}

pub fn w_hook(d: u32, m: u32, dprime: u32, i: u32, j: u32) -> Result<Rat> {
    w_hook_with(d, m, dprime, i, j, hook_char_closed)
}

pub fn w_hook_as_printed(d: u32, m: u32, dprime: u32, i: u32, j: u32) -> Result<Rat> {
    w_hook_with(d, m, dprime, i, j, hook_char_as_printed)
}
