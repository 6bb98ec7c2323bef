//! Hurwitz numbers with completed cycles.
//!
//! `W̄` is the character-sum ingredient; quasi numbers `H_{d,m}` (the last,
//! unspecified profile has exactly `m` cycles) follow from it by an
//! alternating Stirling transform.

mod double;
mod genfunc;
mod hook;
mod onepart;

use rayon::prelude::*;

use crate::characters::{dim_irrep, mn_char};
use crate::error::{HurwitzError, Result};
use crate::exact_arith::{factorial, stirling1_unsigned, stirling2, Rat};
use crate::partitions::{partitions_of, Partition};
use crate::shifted::{p_shift, p_star_constant};

pub use double::{h_double_onepart, SinhExpansion};
pub use genfunc::{genfunc_check, GenFuncReport};
pub use hook::{hook_char_as_printed, hook_char_closed, w_hook, w_hook_as_printed};
pub use onepart::{
    bernoulli_lhs, bernoulli_ratio, bernoulli_rhs, h_onepart, h_onepart_with, standard_corollary,
    standard_corollary_as_printed, w_onepart, Engine,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HurwitzQuery {
    pub d: u32,
    pub m: u32,
    /// Completed-cycle orders `k_1 >= ... >= k_s`.
    pub k: Partition,
    pub profiles: Vec<Partition>,
    pub starred: bool,
}

impl HurwitzQuery {
    pub fn new(
        d: u32,
        m: u32,
        k: Partition,
        profiles: Vec<Partition>,
        starred: bool,
    ) -> Result<HurwitzQuery> {
        let q = HurwitzQuery {
            d,
            m,
            k,
            profiles,
            starred,
        };
        q.validate()?;
        Ok(q)
    }

    /// The one-part query `H_{d,m}(K; (d), β)`.
    pub fn one_part(d: u32, m: u32, k: Partition, beta: Partition) -> Result<HurwitzQuery> {
        HurwitzQuery::new(d, m, k, vec![Partition::full(d.max(1)), beta], false)
    }

    pub fn validate(&self) -> Result<()> {
        if self.d == 0 {
            return Err(HurwitzError::InvalidArgument(
                "degree must be positive".into(),
            ));
        }
        if self.m == 0 || self.m > self.d {
            return Err(HurwitzError::InvalidArgument(format!(
                "m = {} must lie in [1, {}]",
                self.m, self.d
            )));
        }
        check_profiles(self.d, &self.profiles)
    }

    /// Genus from `2g - 2 + 2d = ∑(k_i - 1) + ∑(d - ℓ(μ^i)) + (d - m)`.
    pub fn genus(&self) -> Rat {
        let mut rhs: i64 = self.k.parts().iter().map(|&k| k as i64 - 1).sum();
        rhs += self
            .profiles
            .iter()
            .map(|p| self.d as i64 - p.len() as i64)
            .sum::<i64>();
        rhs += self.d as i64 - self.m as i64;
        Rat::new(rhs + 2 - 2 * self.d as i64, 2)
    }
}

pub(crate) fn check_profiles(d: u32, profiles: &[Partition]) -> Result<()> {
    match profiles.iter().find(|p| p.size() != d) {
        Some(bad) => Err(HurwitzError::ProfileNotOfDegree {
            profile: bad.to_string(),
            d,
        }),
        None => Ok(()),
    }
}

/// `∏_i p_{k_i}(λ) / k_i!`, the eigenvalue of the completed cycles on λ.
pub(crate) fn completed_eigenvalue(k: &Partition, lambda: &Partition) -> Rat {
    k.parts()
        .iter()
        .map(|&ki| p_shift(ki, lambda) / Rat::from(factorial(ki)))
        .product()
}

fn signed(r: Rat, odd: bool) -> Rat {
    if odd {
        -r
    } else {
        r
    }
}

/// `W̄_{d,m}(K; μ^1..μ^r)`. Vanishes for `m > d`.
pub fn w_bar(d: u32, m: u32, k: &Partition, profiles: &[Partition]) -> Result<Rat> {
    check_profiles(d, profiles)?;
    let r = profiles.len() as i32;
    let sum = partitions_of(d)
        .par_iter()
        .map(|lambda| {
            let c = lambda.c_coeff(m);
            if c.is_zero() {
                return Ok(Rat::zero());
            }
            let mut term = c * Rat::from(dim_irrep(lambda)).powi(1 - r);
            for mu in profiles {
                term *= Rat::from(mu.class_size()) * Rat::from(mn_char(lambda, mu)?);
            }
            Ok(term * completed_eigenvalue(k, lambda))
        })
        .collect::<Result<Vec<Rat>>>()?
        .into_iter()
        .sum::<Rat>();
    Ok(sum / Rat::from(factorial(d) * factorial(m)))
}

pub fn w_general(q: &HurwitzQuery) -> Result<Rat> {
    q.validate()?;
    w_bar(q.d, q.m, &q.k, &q.profiles)
}

/// `H_{d,m} = ∑_i (-1)^i [m+i, m] W̄_{d,m+i}` (completed cycles unstarred).
pub fn h_quasi(q: &HurwitzQuery) -> Result<Rat> {
    q.validate()?;
    h_quasi_parts(q.d, q.m, &q.k, &q.profiles)
}

pub(crate) fn h_quasi_parts(d: u32, m: u32, k: &Partition, profiles: &[Partition]) -> Result<Rat> {
    let mut total = Rat::zero();
    for i in 0..=(d - m) {
        let w = w_bar(d, m + i, k, profiles)?;
        total += signed(Rat::from(stirling1_unsigned(m + i, m)) * w, i % 2 == 1);
    }
    Ok(total)
}

/// The same number by downward recursion `H_{d,m} = W̄_{d,m} - ∑_{k>m} S(k,m) H_{d,k}`.
pub fn h_quasi_recursive(q: &HurwitzQuery) -> Result<Rat> {
    q.validate()?;
    let d = q.d;
    let mut h = vec![Rat::zero(); d as usize + 1];
    for j in (q.m..=d).rev() {
        let mut v = w_bar(d, j, &q.k, &q.profiles)?;
        for i in j + 1..=d {
            v -= Rat::from(stirling2(i, j)) * &h[i as usize];
        }
        h[j as usize] = v;
    }
    Ok(h[q.m as usize].clone())
}

/// Sum over subsets of the K-indices whose starred constant is removed.
/// `eval` receives the reduced K.
fn star_expand(k: &Partition, mut eval: impl FnMut(&Partition) -> Result<Rat>) -> Result<Rat> {
    let parts = k.parts();
    // ζ(-k) vanishes for even k >= 2, so only those indices can be removed
    let active: Vec<usize> = (0..parts.len())
        .filter(|&i| !p_star_constant(parts[i]).is_zero())
        .collect();
    let mut total = Rat::zero();
    for mask in 0u64..(1u64 << active.len()) {
        let mut coeff = Rat::one();
        let mut removed = vec![false; parts.len()];
        for (bit, &idx) in active.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                removed[idx] = true;
                coeff *= p_star_constant(parts[idx]) / Rat::from(factorial(parts[idx]));
            }
        }
        let rest: Vec<u32> = parts
            .iter()
            .zip(&removed)
            .filter(|(_, r)| !**r)
            .map(|(p, _)| *p)
            .collect();
        total += coeff * eval(&Partition::from(rest.as_slice()))?;
    }
    Ok(total)
}

/// Quasi number with starred completed cycles.
pub fn h_star(q: &HurwitzQuery) -> Result<Rat> {
    q.validate()?;
    if !q.starred {
        return Err(HurwitzError::InvalidArgument(
            "h_star needs a starred query".into(),
        ));
    }
    star_expand(&q.k, |k| h_quasi_parts(q.d, q.m, k, &q.profiles))
}

/// Dispatch on the starred flag.
pub fn compute(q: &HurwitzQuery) -> Result<Rat> {
    if q.starred {
        h_star(q)
    } else {
        h_quasi(q)
    }
}

/// Ordinary (non-quasi) `H_d(K; μ^1..μ^r) = ∑_λ (dim λ/d!)^2 ∏|C|χ/dim ∏ p_k/k!`.
pub fn h_plain(d: u32, k: &Partition, profiles: &[Partition]) -> Result<Rat> {
    check_profiles(d, profiles)?;
    let dfact = Rat::from(factorial(d));
    partitions_of(d)
        .par_iter()
        .map(|lambda| {
            let dim = Rat::from(dim_irrep(lambda));
            let mut term = (&dim / &dfact).pow(2);
            for mu in profiles {
                term *= Rat::from(mu.class_size()) * Rat::from(mn_char(lambda, mu)?) / &dim;
            }
            Ok(term * completed_eigenvalue(k, lambda))
        })
        .collect::<Result<Vec<Rat>>>()
        .map(|v| v.into_iter().sum())
}

pub fn h_star_plain(d: u32, k: &Partition, profiles: &[Partition]) -> Result<Rat> {
    star_expand(k, |k| h_plain(d, k, profiles))
}

/// Stationary sector via the GW/H shift: `H*_d((k_i + 1); μ)` together with
/// the genus solved from `2g - 2 + 2d = ∑k_i + ∑(d - ℓ(μ^i))` (possibly
/// non-integral).
pub fn gw_sector(d: u32, k_gw: &[u32], profiles: &[Partition]) -> Result<(Rat, Rat)> {
    if d == 0 {
        return Err(HurwitzError::InvalidArgument(
            "degree must be positive".into(),
        ));
    }
    check_profiles(d, profiles)?;
    let shifted: Vec<u32> = k_gw.iter().map(|k| k + 1).collect();
    let value = h_star_plain(d, &Partition::from(shifted.as_slice()), profiles)?;
    let rhs: i64 = k_gw.iter().map(|&k| k as i64).sum::<i64>()
        + profiles
            .iter()
            .map(|p| d as i64 - p.len() as i64)
            .sum::<i64>();
    Ok((value, Rat::new(rhs + 2 - 2 * d as i64, 2)))
}

/// True when the dimension constraint forces a half-integral genus for the
/// one-part query, i.e. `∑(k_i-1) + (d-1) + (d-ℓ(β)) + (d-m)` is odd.
pub fn parity_forces_zero(d: u32, m: u32, k: &Partition, beta: &Partition) -> bool {
    let total: i64 = k.parts().iter().map(|&x| x as i64 - 1).sum::<i64>()
        + (d as i64 - 1)
        + (d as i64 - beta.len() as i64)
        + (d as i64 - m as i64);
    total % 2 != 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{part, partitions_up_to};

    #[test]
    fn w_general_examples() {
        for d in 2..=6u32 {
            let full = vec![part(&[d])];
            assert_eq!(
                w_bar(d, d, &Partition::empty(), &full).unwrap(),
                Rat::zero()
            );
            assert_eq!(
                w_bar(d, 1, &Partition::empty(), &full).unwrap(),
                Rat::new(1, d as i64)
            );
            let two = vec![part(&[d]), part(&[d])];
            assert_eq!(
                w_bar(d, d, &Partition::empty(), &two).unwrap(),
                Rat::new(1, d as i64)
            );
            for m in d + 1..=d + 2 {
                assert_eq!(w_bar(d, m, &part(&[2]), &two).unwrap(), Rat::zero());
            }
        }
        assert_eq!(
            w_bar(2, 2, &part(&[2]), &[part(&[2]), part(&[1, 1])]).unwrap(),
            Rat::new(1, 2)
        );
    }

    #[test]
    fn h_quasi_examples() {
        let q = |m| {
            HurwitzQuery::new(
                3,
                m,
                Partition::empty(),
                vec![part(&[2, 1]), part(&[2, 1])],
                false,
            )
            .unwrap()
        };
        assert_eq!(h_quasi(&q(1)).unwrap(), Rat::one());
        assert_eq!(h_quasi(&q(3)).unwrap(), Rat::new(1, 2));
        let top = q(3);
        assert_eq!(h_quasi(&top).unwrap(), w_general(&top).unwrap());
    }

    #[test]
    fn quasi_sum_and_recursion_agree() {
        for d in 1..=5u32 {
            for k in partitions_up_to(4) {
                for beta in partitions_of(d) {
                    for m in 1..=d {
                        let q = HurwitzQuery::one_part(d, m, k.clone(), beta.clone()).unwrap();
                        assert_eq!(h_quasi(&q).unwrap(), h_quasi_recursive(&q).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn quasi_sums_to_plain() {
        // ∑_m H_{d,m}(K; μ) = ∑_{μ'} H_d(K; μ, μ') over all last profiles
        for d in 1..=4u32 {
            for k in partitions_up_to(3) {
                for beta in partitions_of(d) {
                    let profiles = vec![part(&[d]), beta.clone()];
                    let quasi: Rat = (1..=d)
                        .map(|m| {
                            let q = HurwitzQuery::new(d, m, k.clone(), profiles.clone(), false)
                                .unwrap();
                            h_quasi(&q).unwrap()
                        })
                        .sum();
                    let plain: Rat = partitions_of(d)
                        .iter()
                        .map(|mu| {
                            let mut p = profiles.clone();
                            p.push(mu.clone());
                            h_plain(d, &k, &p).unwrap()
                        })
                        .sum();
                    assert_eq!(quasi, plain);
                }
            }
        }
    }

    #[test]
    fn star_examples() {
        let profiles = vec![part(&[3]), part(&[2, 1])];
        for m in 1..=3 {
            let plain = HurwitzQuery::new(3, m, part(&[2, 2]), profiles.clone(), false).unwrap();
            let star = HurwitzQuery {
                starred: true,
                ..plain.clone()
            };
            assert_eq!(h_star(&star).unwrap(), h_quasi(&plain).unwrap());

            let k3 = HurwitzQuery::new(3, m, part(&[3]), profiles.clone(), true).unwrap();
            let bare =
                HurwitzQuery::new(3, m, Partition::empty(), profiles.clone(), false).unwrap();
            let expect = h_quasi(&HurwitzQuery {
                starred: false,
                ..k3.clone()
            })
            .unwrap()
                + Rat::new(7, 5760) * h_quasi(&bare).unwrap();
            assert_eq!(h_star(&k3).unwrap(), expect);

            let empty = HurwitzQuery {
                starred: true,
                ..bare.clone()
            };
            assert_eq!(h_star(&empty).unwrap(), h_quasi(&bare).unwrap());
        }
        let unstarred = HurwitzQuery::new(3, 1, part(&[3]), profiles, false).unwrap();
        assert!(h_star(&unstarred).is_err());
    }

    #[test]
    fn gw_sector_examples() {
        for d in 1..=5u32 {
            let (v, g) = gw_sector(d, &[], &[part(&[d]), part(&[d])]).unwrap();
            assert_eq!(v, Rat::new(1, d as i64));
            assert_eq!(g, Rat::zero());
        }
        let profiles = vec![part(&[3]), part(&[2, 1])];
        let (v, _) = gw_sector(3, &[1, 1], &profiles).unwrap();
        assert_eq!(v, h_plain(3, &part(&[2, 2]), &profiles).unwrap());
    }

    #[test]
    fn gw_sector_parity() {
        for d in 1..=5u32 {
            for k in partitions_up_to(3) {
                let k_gw: Vec<u32> = k.parts().to_vec();
                for mu in partitions_of(d) {
                    let profiles = vec![part(&[d]), mu];
                    let (v, g) = gw_sector(d, &k_gw, &profiles).unwrap();
                    if !g.is_integer() {
                        assert!(v.is_zero(), "d={d} k={k} {profiles:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn validation() {
        assert!(HurwitzQuery::new(3, 4, Partition::empty(), vec![], false).is_err());
        assert!(HurwitzQuery::new(3, 0, Partition::empty(), vec![], false).is_err());
        assert!(matches!(
            HurwitzQuery::new(3, 1, Partition::empty(), vec![part(&[2])], false),
            Err(HurwitzError::ProfileNotOfDegree { .. })
        ));
    }
}
