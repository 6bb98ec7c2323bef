//! One-part double numbers `H_{d,d}(K; (d), β)` through the sinh expansion.

use std::collections::BTreeMap;

use crate::error::{HurwitzError, Result};
use crate::exact_arith::{factorial, Rat, TruncSeries};
use crate::partitions::Partition;

use super::onepart::u_coefficients;

/// `ξ_{2j} = [x^{2j}] log(sinh x / x)` for `2j <= order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SinhExpansion {
    order: u32,
    xi: BTreeMap<u32, Rat>,
}

impl SinhExpansion {
    pub fn new(order: u32) -> SinhExpansion {
        let coeffs: Vec<Rat> = (0..=order)
            .map(|n| {
                if n % 2 == 0 {
                    Rat::from(factorial(n + 1)).recip()
                } else {
                    Rat::zero()
                }
            })
            .collect();
        let log = TruncSeries::univariate("x", order, &coeffs)
            .log()
            .expect("constant term is 1");
        let xi = (2..=order)
            .step_by(2)
            .map(|n| (n, log.coeff(&[n]).expect("within cap")))
            .collect();
        SinhExpansion { order, xi }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// `ξ_n` for even `n`; `None` past the truncation order or for odd `n`.
    pub fn xi(&self, n: u32) -> Option<&Rat> {
        self.xi.get(&n)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&u32, &Rat)> {
        self.xi.iter()
    }
}

/// `S_n(β) = -1 + ∑_k β_k^n`.
fn power_sum_shift(beta: &Partition, n: u32) -> Rat {
    beta.parts()
        .iter()
        .map(|&b| Rat::from(b).pow(n))
        .sum::<Rat>()
        - Rat::one()
}

pub fn h_double_onepart(d: u32, k: &Partition, beta: &Partition) -> Result<Rat> {
    if d == 0 || beta.size() != d {
        return Err(HurwitzError::ProfileNotOfDegree {
            profile: beta.to_string(),
            d,
        });
    }
    let top = k.size() - k.len() as u32;
    let n = beta.len() as u32;
    let a = u_coefficients(k)?;
    let sinh = SinhExpansion::new(top);

    // exp(∑_j ξ_{2j} S_{2j} (y/2)^{2j}) · e^{-dy/2}
    let mut exponent = vec![Rat::zero(); top as usize + 1];
    if top >= 1 {
        exponent[1] = Rat::new(-(d as i64), 2);
    }
    for (&e, xi) in sinh.iter() {
        exponent[e as usize] += xi * power_sum_shift(beta, e) / Rat::from(2).pow(e);
    }
    let series = TruncSeries::univariate("y", top, &exponent).exp()?;

    let dd = Rat::from(d);
    let mut sum = Rat::zero();
    for (t, at) in a.iter().enumerate() {
        let t = t as u32;
        // [y^t] y^{n-1} F = [y^{t-n+1}] F
        if at.is_zero() || t + 1 < n {
            continue;
        }
        sum += at * Rat::from(factorial(t)) / dd.pow(t) * series.coeff(&[t + 1 - n])?;
    }
    let weight: Rat = k
        .multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &b)| Rat::from(factorial(b)) / Rat::from(factorial(i as u32).pow(b)))
        .product();
    Ok(dd.powi(k.size() as i32 - 1) / Rat::from(beta.aut()) * weight * sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hurwitz::h_onepart;
    use crate::partitions::{part, partitions_of, partitions_up_to};

    #[test]
    fn xi_values() {
        let s = SinhExpansion::new(8);
        assert_eq!(s.xi(2), Some(&Rat::new(1, 6)));
        assert_eq!(s.xi(4), Some(&Rat::new(-1, 180)));
        assert_eq!(s.xi(2).unwrap() / Rat::from(4), Rat::new(1, 24));
        assert_eq!(s.xi(3), None);
        assert_eq!(s.xi(10), None);
        // stable under raising the order
        let t = SinhExpansion::new(12);
        for (n, v) in s.iter() {
            assert_eq!(t.xi(*n), Some(v));
        }
    }

    #[test]
    fn double_matches_onepart() {
        for d in 1..=6u32 {
            for k in partitions_up_to(5) {
                for beta in partitions_of(d) {
                    assert_eq!(
                        h_double_onepart(d, &k, &beta).unwrap(),
                        h_onepart(d, d, &k, &beta).unwrap(),
                        "d={d} K={k} β={beta}"
                    );
                }
            }
        }
    }

    #[test]
    fn double_examples() {
        assert_eq!(
            h_double_onepart(2, &part(&[2]), &part(&[1, 1])).unwrap(),
            Rat::new(1, 2)
        );
        for d in 1..=6u32 {
            assert_eq!(
                h_double_onepart(d, &Partition::empty(), &part(&[d])).unwrap(),
                Rat::new(1, d as i64)
            );
        }
    }
}
