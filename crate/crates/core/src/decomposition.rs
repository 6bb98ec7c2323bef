//! Homogeneous bivariate polynomials `ρ(β) = ∏(x^{β_i} - y^{β_i})` and their
//! coordinates in the hook basis `ρ(θ_{1,d}), …, ρ(θ_{d,d})`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{HurwitzError, Result};
use crate::exact_arith::{factorial, falling, multinomial, stirling1_unsigned, Rat};
use crate::hurwitz::w_hook;
use crate::partitions::Partition;

/// `∑_i a_i x^i y^{d-i}`.
#[derive(Clone, PartialEq, Eq)]
pub struct BiPoly {
    coeffs: Vec<Rat>,
}

impl BiPoly {
    pub fn new(coeffs: Vec<Rat>) -> BiPoly {
        assert!(!coeffs.is_empty(), "degree needs at least one coefficient");
        BiPoly { coeffs }
    }

    pub fn zero(d: u32) -> BiPoly {
        BiPoly::new(vec![Rat::zero(); d as usize + 1])
    }

    pub fn degree(&self) -> u32 {
        self.coeffs.len() as u32 - 1
    }

    /// Coefficient of `x^i y^{d-i}`.
    pub fn coeff(&self, i: u32) -> &Rat {
        &self.coeffs[i as usize]
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Membership in the subspace with coefficient sum zero.
    pub fn in_v_hat(&self) -> bool {
        self.coeffs.iter().cloned().sum::<Rat>().is_zero()
    }

    /// `p(y, x)`.
    pub fn swap(&self) -> BiPoly {
        BiPoly::new(self.coeffs.iter().rev().cloned().collect())
    }

    pub fn scale(&self, c: &Rat) -> BiPoly {
        BiPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn add(&self, other: &BiPoly) -> BiPoly {
        assert_eq!(self.degree(), other.degree(), "degrees differ");
        BiPoly::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn mul(&self, other: &BiPoly) -> BiPoly {
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        BiPoly::new(out)
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        let d = self.degree();
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, a)| a * x.pow(i as u32) * y.pow(d - i as u32))
            .sum()
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

pub fn rho_poly(beta: &Partition) -> Result<BiPoly> {
    if beta.is_empty() {
        return Err(HurwitzError::InvalidPartition(
            "ρ of the empty partition".into(),
        ));
    }
    let mut acc = BiPoly::new(vec![Rat::one()]);
    for &b in beta.parts() {
        let mut f = BiPoly::zero(b);
        f.coeffs[0] = Rat::from(-1);
        f.coeffs[b as usize] = Rat::one();
        acc = acc.mul(&f);
    }
    Ok(acc)
}

/// `ρ^k_β = ∑_{b_1+…+b_n = k, b_i >= 1} (k; b) ∏ (β_i)_{b_i}`.
pub fn rho_k(beta: &Partition, k: u32) -> BigInt {
    let parts = beta.parts();
    if parts.is_empty() {
        return BigInt::from(u32::from(k == 0));
    }
    let mut total = BigInt::zero();
    let mut b = vec![0u32; parts.len()];
    compositions(parts, k, 0, &mut b, &mut total);
    total
}

fn compositions(parts: &[u32], k: u32, idx: usize, b: &mut [u32], total: &mut BigInt) {
    let n = parts.len();
    let remaining_slots = (n - idx - 1) as u32;
    if idx + 1 == n {
        // (β)_{b} vanishes for b > β, so the last part takes whatever is left
        if k >= 1 && k <= parts[idx] {
            b[idx] = k;
            let falls: BigInt = parts
                .iter()
                .zip(b.iter())
                .map(|(&p, &bi)| falling(p as i64, bi))
                .product();
            *total += multinomial(b) * falls;
        }
        return;
    }
    if k < 1 + remaining_slots {
        return;
    }
    for bi in 1..=(k - remaining_slots).min(parts[idx]) {
        b[idx] = bi;
        compositions(parts, k - bi, idx + 1, b, total);
    }
}

/// `d^k/dx^k ∏(x^{β_i} - 1)` at `x = 1`.
pub fn rho_k_derivative(beta: &Partition, k: u32) -> BigInt {
    let mut poly = vec![BigInt::from(1)];
    for &b in beta.parts() {
        let mut next = vec![BigInt::zero(); poly.len() + b as usize];
        for (i, c) in poly.iter().enumerate() {
            next[i + b as usize] += c;
            next[i] -= c;
        }
        poly = next;
    }
    poly.iter()
        .enumerate()
        .map(|(j, c)| c * falling(j as i64, k))
        .sum()
}

/// `ρ^k_{θ_{i,d}} = (k)_{d-i} (i)_{k-d+i}` for `k > d - i`, else 0.
pub fn rho_k_theta(i: u32, d: u32, k: u32) -> BigInt {
    if k + i <= d {
        return BigInt::zero();
    }
    falling(k as i64, d - i) * falling(i as i64, k + i - d)
}

/// Hook-basis coordinates `a_1..a_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompCoeffs {
    pub d: u32,
    pub a: BTreeMap<u32, Rat>,
}

impl DecompCoeffs {
    pub fn get(&self, i: u32) -> Rat {
        self.a.get(&i).cloned().unwrap_or_else(Rat::zero)
    }

    /// `∑_i a_i ρ(θ_{i,d})`.
    pub fn reconstruct(&self) -> BiPoly {
        let mut acc = BiPoly::zero(self.d);
        for (&i, a) in &self.a {
            let theta = rho_poly(&Partition::theta(i, self.d)).expect("θ is non-empty");
            acc = acc.add(&theta.scale(a));
        }
        acc
    }
}

fn solve(beta: &Partition, indices: impl Iterator<Item = u32>) -> Result<DecompCoeffs> {
    if beta.is_empty() {
        return Err(HurwitzError::InvalidPartition("decomposition of ∅".into()));
    }
    let d = beta.size();
    let mut a: BTreeMap<u32, Rat> = BTreeMap::new();
    for i in indices {
        let k = d + 1 - i;
        let mut rhs = Rat::from(rho_k(beta, k));
        for (&j, aj) in &a {
            rhs -= aj * Rat::from(rho_k_theta(j, d, k));
        }
        let diag = rho_k_theta(i, d, k);
        let ai = rhs / Rat::from(diag);
        if !ai.is_zero() {
            a.insert(i, ai);
        }
    }
    Ok(DecompCoeffs { d, a })
}

/// Forward substitution over every index `i = d, d-1, …, 1`.
pub fn decompose_full(beta: &Partition) -> Result<DecompCoeffs> {
    let d = beta.size();
    solve(beta, (1..=d).rev())
}

/// Only the indices `i = d-c+1, d-c-1, … >= 1` with `c = ℓ(β)`; the other
/// coordinates vanish.
pub fn decompose_reduced(beta: &Partition) -> Result<DecompCoeffs> {
    let d = beta.size() as i64;
    let c = beta.len() as i64;
    let top = d - c + 1;
    solve(beta, (1..=top).rev().step_by(2).map(|i| i as u32))
}

type DecompCache = RwLock<HashMap<Partition, DecompCoeffs>>;

/// Cached reduced decomposition.
pub fn decompose(beta: &Partition) -> Result<DecompCoeffs> {
    static CACHE: OnceLock<DecompCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(v) = cache
        .read()
        .expect("decomposition cache poisoned")
        .get(beta)
    {
        return Ok(v.clone());
    }
    let v = decompose_reduced(beta)?;
    cache
        .write()
        .expect("decomposition cache poisoned")
        .insert(beta.clone(), v.clone());
    Ok(v)
}

/// The weight relating hook-basis coordinates to Hurwitz numbers:
/// `|C_β| / |C_{θ_{j,d}}|`.
pub fn inferred_u(beta: &Partition, j: u32) -> Rat {
    Rat::from(beta.class_size()) / Rat::from(Partition::theta(j, beta.size()).class_size())
}

/// `H̃_{d,m}(θ_{i,d'}; θ_{j,d}) = ∑_l (-1)^l [m+l, m] W̃_{d,m+l}`.
fn h_tilde_hook(d: u32, m: u32, dprime: u32, i: u32, j: u32) -> Result<Rat> {
    let mut total = Rat::zero();
    for l in 0..=(d - m) {
        let term = Rat::from(stirling1_unsigned(m + l, m)) * w_hook(d, m + l, dprime, i, j)?;
        total += if l % 2 == 0 { term } else { -term };
    }
    Ok(total)
}

/// `H_{d,m}(K; (d), β)` reduced to hook-shape numbers through both
/// decompositions.
pub fn h_via_hooks(d: u32, m: u32, k: &Partition, beta: &Partition) -> Result<Rat> {
    if k.is_empty() {
        return Err(HurwitzError::InvalidArgument(
            "h_via_hooks needs a non-empty K".into(),
        ));
    }
    if beta.size() != d {
        return Err(HurwitzError::ProfileNotOfDegree {
            profile: beta.to_string(),
            d,
        });
    }
    if m == 0 || m > d {
        return Err(HurwitzError::InvalidArgument(format!(
            "m = {m} must lie in [1, {d}]"
        )));
    }
    let dprime = k.size();
    let ak = decompose(k)?;
    let ab = decompose(beta)?;
    let mut total = Rat::zero();
    for (&i, aik) in &ak.a {
        for (&j, ajb) in &ab.a {
            total += aik * ajb * inferred_u(beta, j) * h_tilde_hook(d, m, dprime, i, j)?;
        }
    }
    let kfact: BigInt = k.parts().iter().map(|&x| factorial(x)).product();
    Ok(total / Rat::from(kfact))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hurwitz::{h_double_onepart, h_onepart};
    use crate::partitions::{part, partitions_of, partitions_up_to};
    use crate::shifted::p_shift;

    fn ints(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| Rat::from(x)).collect()
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho_poly(&part(&[1])).unwrap().coeffs(), &ints(&[-1, 1])[..]);
        assert_eq!(
            rho_poly(&part(&[2, 1])).unwrap().coeffs(),
            &ints(&[1, -1, -1, 1])[..]
        );
        for d in 1..=6u32 {
            let r = rho_poly(&part(&[d])).unwrap();
            for i in 0..=d {
                let expect = if i == d {
                    1
                } else if i == 0 {
                    -1
                } else {
                    0
                };
                assert_eq!(r.coeff(i), &Rat::from(expect));
            }
        }
        assert!(rho_poly(&Partition::empty()).is_err());
    }

    #[test]
    fn rho_k_examples() {
        assert_eq!(rho_k(&part(&[2, 1]), 2), BigInt::from(4));
        assert_eq!(rho_k(&part(&[2, 1]), 1), BigInt::zero());
        for d in 1..=7u32 {
            for i in 1..=d {
                for k in 0..=d {
                    assert_eq!(rho_k(&Partition::theta(i, d), k), rho_k_theta(i, d, k));
                }
            }
        }
    }

    #[test]
    fn rho_k_dual_computation() {
        for d in 1..=10u32 {
            for beta in partitions_of(d) {
                for k in 0..=d {
                    assert_eq!(
                        rho_k(&beta, k),
                        rho_k_derivative(&beta, k),
                        "β={beta} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn decomposition_examples() {
        let a = decompose(&part(&[2, 1])).unwrap();
        assert_eq!(a.a, BTreeMap::from([(2, Rat::one())]));
        for d in 1..=6u32 {
            let a = decompose(&part(&[d])).unwrap();
            assert_eq!(a.a, BTreeMap::from([(d, Rat::one())]));
        }
        let a = decompose(&part(&[2, 2])).unwrap();
        assert_eq!(a.get(4), Rat::zero());
        assert_eq!(a.get(2), Rat::zero());
        assert_eq!(a.get(3), Rat::new(4, 3));
        assert_eq!(a.get(1), Rat::new(-1, 3));
        assert_eq!(a.reconstruct(), rho_poly(&part(&[2, 2])).unwrap());
    }

    #[test]
    fn basis_symmetry_and_vanishing() {
        for d in 1..=12u32 {
            for beta in partitions_of(d) {
                let rho = rho_poly(&beta).unwrap();
                assert!(rho.in_v_hat());
                let sign = Rat::from(if beta.len() % 2 == 0 { 1 } else { -1 });
                assert_eq!(rho.swap().scale(&sign), rho);
                let full = decompose_full(&beta).unwrap();
                assert_eq!(full.reconstruct(), rho, "β={beta}");
                assert_eq!(decompose_reduced(&beta).unwrap(), full);
                let l = beta.len() as u32;
                for i in 1..=d {
                    let zero = (i + l >= d + 2) || (d + l - i).is_multiple_of(2) && d >= i + l;
                    if zero {
                        assert!(full.get(i).is_zero(), "β={beta} i={i}");
                    }
                }
            }
        }
    }

    #[test]
    fn evaluation_bridge() {
        for k in partitions_up_to(6).into_iter().filter(|k| !k.is_empty()) {
            let rho = rho_poly(&k).unwrap();
            for d in 1..=7u32 {
                for j in 0..d {
                    let x = Rat::new(2 * (d - j) as i64 - 1, 2);
                    let y = Rat::new(-2 * j as i64 - 1, 2);
                    let hook = Partition::hook(j, d);
                    let p: Rat = k.parts().iter().map(|&ki| p_shift(ki, &hook)).product();
                    assert_eq!(rho.eval(&x, &y), p);
                }
            }
        }
    }

    #[test]
    fn pipeline_equality() {
        for d in 1..=5u32 {
            for k in partitions_up_to(4).into_iter().filter(|k| !k.is_empty()) {
                for beta in partitions_of(d) {
                    for m in 1..=d {
                        assert_eq!(
                            h_via_hooks(d, m, &k, &beta).unwrap(),
                            h_onepart(d, m, &k, &beta).unwrap(),
                            "d={d} m={m} K={k} β={beta}"
                        );
                    }
                }
            }
        }
        assert_eq!(
            h_via_hooks(4, 2, &part(&[2, 2]), &part(&[2, 2])).unwrap(),
            h_onepart(4, 2, &part(&[2, 2]), &part(&[2, 2])).unwrap()
        );
        assert_eq!(
            h_via_hooks(5, 5, &part(&[3, 2]), &part(&[3, 1, 1])).unwrap(),
            h_double_onepart(5, &part(&[3, 2]), &part(&[3, 1, 1])).unwrap()
        );
        assert!(h_via_hooks(3, 1, &Partition::empty(), &part(&[3])).is_err());
    }
}
