//! Classical integer and rational sequences.
//!
//! Bernoulli convention: B_1 = -1/2, i.e. the generating function x/(e^x - 1).

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact_arith::{Rat, TruncSeries};

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Falling factorial `(a)_n = a(a-1)...(a-n+1)` for any integer `a`.
pub fn falling(a: i64, n: u32) -> BigInt {
    (0..n as i64).fold(BigInt::one(), |acc, i| acc * (a - i))
}

/// Binomial coefficient with integer (possibly negative) upper index.
/// A negative lower index gives 0.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    falling(n, k as u32) / factorial(k as u32)
}

pub fn multinomial(parts: &[u32]) -> BigInt {
    let total: u32 = parts.iter().sum();
    parts
        .iter()
        .fold(factorial(total), |acc, p| acc / factorial(*p))
}

type Triangle = RwLock<Vec<Vec<BigInt>>>;

/// Grow a memoised triangle `t[n][k]` up to row `n` using `rule(prev_row, n)`.
fn triangle_entry(
    cell: &'static OnceLock<Triangle>,
    n: u32,
    k: u32,
    rule: fn(&[BigInt], usize) -> Vec<BigInt>,
) -> BigInt {
    let lock = cell.get_or_init(|| RwLock::new(vec![vec![BigInt::one()]]));
    let n = n as usize;
    {
        let rows = lock.read().expect("stirling table poisoned");
        if n < rows.len() {
            return rows[n].get(k as usize).cloned().unwrap_or_default();
        }
    }
    let mut rows = lock.write().expect("stirling table poisoned");
    while rows.len() <= n {
        let next = rule(rows.last().expect("nonempty"), rows.len());
        rows.push(next);
    }
    rows[n].get(k as usize).cloned().unwrap_or_default()
}

/// Stirling numbers of the second kind S(k, m).
pub fn stirling2(k: u32, m: u32) -> BigInt {
    static TABLE: OnceLock<Triangle> = OnceLock::new();
    triangle_entry(&TABLE, k, m, |prev, n| {
        (0..=n)
            .map(|j| {
                let left = if j >= 1 {
                    prev[j - 1].clone()
                } else {
                    BigInt::zero()
                };
                let up = prev.get(j).cloned().unwrap_or_default();
                left + up * j
            })
            .collect()
    })
}

/// Signless Stirling numbers of the first kind: permutations of [n] with k cycles.
pub fn stirling1_unsigned(n: u32, k: u32) -> BigInt {
    static TABLE: OnceLock<Triangle> = OnceLock::new();
    triangle_entry(&TABLE, n, k, |prev, n| {
        (0..=n)
            .map(|j| {
                let left = if j >= 1 {
                    prev[j - 1].clone()
                } else {
                    BigInt::zero()
                };
                let up = prev.get(j).cloned().unwrap_or_default();
                left + up * (n - 1)
            })
            .collect()
    })
}

/// `x/(e^x - 1)` truncated at `x^cap`.
fn bernoulli_kernel(cap: u32) -> TruncSeries {
    // (e^x - 1)/x = sum x^k/(k+1)!
    let coeffs: Vec<Rat> = (0..=cap)
        .map(|k| Rat::from(factorial(k + 1)).recip())
        .collect();
    TruncSeries::univariate("x", cap, &coeffs)
        .recip()
        .expect("constant term is 1")
}

/// Bernoulli polynomial of order `order` at `z`: n! [x^n] (x/(e^x-1))^N e^{xz}.
pub fn bernoulli_poly_order(n: u32, order: u32, z: &Rat) -> Rat {
    let kernel = bernoulli_kernel(n).pow(order);
    let shift = TruncSeries::univariate("x", n, &[Rat::zero(), z.clone()])
        .exp()
        .expect("no constant term");
    let c = kernel.mul(&shift).coeff(&[n]).expect("within cap");
    c * Rat::from(factorial(n))
}

/// Classical Bernoulli numbers B_n (B_1 = -1/2).
pub fn bernoulli(n: u32) -> Rat {
    static TABLE: OnceLock<RwLock<Vec<Rat>>> = OnceLock::new();
    let lock = TABLE.get_or_init(|| RwLock::new(Vec::new()));
    if let Some(b) = lock
        .read()
        .expect("bernoulli table poisoned")
        .get(n as usize)
    {
        return b.clone();
    }
    let mut table = lock.write().expect("bernoulli table poisoned");
    if table.len() <= n as usize {
        let kernel = bernoulli_kernel(n);
        *table = (0..=n)
            .map(|k| kernel.coeff(&[k]).expect("within cap") * Rat::from(factorial(k)))
            .collect();
    }
    table[n as usize].clone()
}

/// ζ(-k) for k ≥ 0.
pub fn zeta_neg(k: u32) -> Rat {
    if k == 0 {
        return Rat::new(-1, 2);
    }
    -bernoulli(k + 1) / Rat::from(k + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stirling_examples() {
        assert_eq!(stirling2(3, 2), BigInt::from(3));
        assert_eq!(stirling2(5, 5), BigInt::one());
        assert_eq!(stirling2(4, 0), BigInt::zero());
        assert_eq!(stirling2(0, 0), BigInt::one());
        assert_eq!(stirling1_unsigned(4, 2), BigInt::from(11));
        assert_eq!(stirling1_unsigned(6, 6), BigInt::one());
        assert_eq!(stirling1_unsigned(3, 0), BigInt::zero());
    }

    /// Independent oracle: count set partitions and permutations directly.
    #[test]
    fn stirling_against_enumeration() {
        fn set_partitions(n: usize, m: usize) -> u64 {
            // restricted growth strings
            fn go(i: usize, n: usize, used: usize, m: usize) -> u64 {
                if i == n {
                    return (used == m) as u64;
                }
                (0..=used.min(m.saturating_sub(1)))
                    .map(|b| go(i + 1, n, used.max(b + 1), m))
                    .sum()
            }
            if n == 0 {
                return (m == 0) as u64;
            }
            go(0, n, 0, m)
        }
        fn perms_with_cycles(n: usize, k: usize) -> u64 {
            fn cycles(p: &[usize]) -> usize {
                let mut seen = vec![false; p.len()];
                let mut c = 0;
                for s in 0..p.len() {
                    if !seen[s] {
                        c += 1;
                        let mut i = s;
                        while !seen[i] {
                            seen[i] = true;
                            i = p[i];
                        }
                    }
                }
                c
            }
            fn heap(k: usize, a: &mut Vec<usize>, target: usize, acc: &mut u64) {
                if k <= 1 {
                    *acc += (cycles(a) == target) as u64;
                    return;
                }
                for i in 0..k {
                    heap(k - 1, a, target, acc);
                    if k.is_multiple_of(2) {
                        a.swap(i, k - 1);
                    } else {
                        a.swap(0, k - 1);
                    }
                }
            }
            let mut a: Vec<usize> = (0..n).collect();
            let mut acc = 0;
            heap(n, &mut a, k, &mut acc);
            acc
        }
        for n in 1..=6u32 {
            for m in 0..=n {
                assert_eq!(
                    stirling2(n, m),
                    BigInt::from(set_partitions(n as usize, m as usize))
                );
                assert_eq!(
                    stirling1_unsigned(n, m),
                    BigInt::from(perms_with_cycles(n as usize, m as usize))
                );
            }
        }
    }

    #[test]
    fn stirling_orthogonality() {
        for n in 0..=12u32 {
            for m in 0..=12u32 {
                let s: BigInt = (0..=n)
                    .map(|k| {
                        let sign = if (n - k) % 2 == 0 { 1 } else { -1 };
                        stirling1_unsigned(n, k) * stirling2(k, m) * sign
                    })
                    .sum();
                assert_eq!(s, BigInt::from((n == m) as i32), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(0), Rat::one());
        assert_eq!(bernoulli(1), Rat::new(-1, 2));
        assert_eq!(bernoulli(2), Rat::new(1, 6));
        assert_eq!(bernoulli(3), Rat::zero());
        assert_eq!(bernoulli(4), Rat::new(-1, 30));
        assert_eq!(bernoulli(12), Rat::new(-691, 2730));
    }

    #[test]
    fn bernoulli_poly_examples() {
        let z = Rat::new(3, 7);
        assert_eq!(bernoulli_poly_order(0, 4, &z), Rat::one());
        assert_eq!(bernoulli_poly_order(2, 1, &Rat::zero()), Rat::new(1, 6));
        assert_eq!(bernoulli_poly_order(1, 1, &z), &z - Rat::half());
        // B_2^{(2)} = (x/(e^x-1))^2 at order 2: 1 - x + 5x^2/12 → 5/6
        assert_eq!(bernoulli_poly_order(2, 2, &Rat::zero()), Rat::new(5, 6));
    }

    #[test]
    fn bernoulli_expansion_identity() {
        let zs = [Rat::zero(), Rat::half(), Rat::one(), Rat::new(-3, 7)];
        for n in 0..=10u32 {
            for order in 1..=5u32 {
                for z in &zs {
                    let rhs: Rat = (0..=n)
                        .map(|k| {
                            Rat::from(binom(n as i64, k as i64))
                                * bernoulli_poly_order(k, order, &Rat::zero())
                                * z.pow(n - k)
                        })
                        .sum();
                    assert_eq!(bernoulli_poly_order(n, order, z), rhs);
                }
            }
        }
    }

    #[test]
    fn zeta_values() {
        assert_eq!(zeta_neg(0), Rat::new(-1, 2));
        assert_eq!(zeta_neg(1), Rat::new(-1, 12));
        assert_eq!(zeta_neg(2), Rat::zero());
        assert_eq!(zeta_neg(3), Rat::new(1, 120));
    }

    #[test]
    fn generalized_binomials() {
        assert_eq!(binom(-1, 3), BigInt::from(-1));
        assert_eq!(binom(-1, 4), BigInt::from(1));
        assert_eq!(binom(5, -1), BigInt::zero());
        assert_eq!(binom(3, 5), BigInt::zero());
        assert_eq!(binom(7, 3), BigInt::from(35));
        assert_eq!(falling(4, 6), BigInt::zero());
        assert_eq!(multinomial(&[2, 1, 1]), BigInt::from(12));
    }
}
