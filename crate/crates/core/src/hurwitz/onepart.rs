//! One-part quasi-triple numbers `W̄_{d,q}(K; (d), β)` by three routes.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;

use crate::characters::hook_char_row;
use crate::error::{HurwitzError, Result};
use crate::exact_arith::{binom, factorial, falling, stirling1_unsigned, Rat, TruncSeries};
use crate::partitions::Partition;
use crate::shifted::p_shift;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Engine {
    /// Hook-only character sum.
    #[default]
    CharacterSum,
    /// Series extraction from `U` and `e^{-y/2} V_β`.
    GeneratingFunction,
}

fn check_beta(d: u32, beta: &Partition) -> Result<()> {
    if d == 0 || beta.size() != d {
        return Err(HurwitzError::ProfileNotOfDegree {
            profile: beta.to_string(),
            d,
        });
    }
    Ok(())
}

fn check_q(d: u32, q: u32) -> Result<()> {
    if q == 0 || q > d {
        return Err(HurwitzError::InvalidArgument(format!(
            "cycle count {q} must lie in [1, {d}]"
        )));
    }
    Ok(())
}

pub fn w_onepart(d: u32, q: u32, k: &Partition, beta: &Partition, engine: Engine) -> Result<Rat> {
    check_beta(d, beta)?;
    check_q(d, q)?;
    match engine {
        Engine::CharacterSum => engine_character_sum(d, q, k, beta),
        Engine::GeneratingFunction => engine_generating_function(d, q, k, beta),
    }
}

fn engine_character_sum(d: u32, q: u32, k: &Partition, beta: &Partition) -> Result<Rat> {
    let row = hook_char_row(beta)?;
    let mut sum = Rat::zero();
    for (j, &chi) in row.iter().enumerate() {
        let ff = falling(d as i64 - j as i64 - 1, d - q);
        if chi == 0 || ff == BigInt::from(0) {
            continue;
        }
        let hook = Partition::hook(j as u32, d);
        let mut term = Rat::from(chi) * Rat::from(ff);
        for &ki in k.parts() {
            term *= p_shift(ki, &hook) / Rat::from(factorial(ki));
        }
        sum += if j % 2 == 0 { term } else { -term };
    }
    let pre = Rat::from(factorial(q - 1) * beta.class_size() * binom(d as i64 - 1, q as i64 - 1))
        / Rat::from(factorial(q) * factorial(d));
    Ok(pre * sum)
}

/// Multiplicities `b_i` of `K`, indexed `1..=largest` (entry 0 unused).
fn k_mult(k: &Partition) -> Vec<u32> {
    let mut m = k.multiplicities();
    if m.is_empty() {
        m.push(0);
    }
    m
}

/// `A_t = [t^b z^t] exp(∑_i t_i((1+z)^i - z^i))` for `t = 0..=d'-s`.
pub(crate) fn u_coefficients(k: &Partition) -> Result<Vec<Rat>> {
    let b = k_mult(k);
    let top = k.size() - k.len() as u32;
    let names: Vec<String> = (1..b.len())
        .map(|i| format!("t{i}"))
        .chain(["z".to_string()])
        .collect();
    let vars: Vec<&str> = names.iter().map(String::as_str).collect();
    let mut caps: Vec<u32> = b[1..].to_vec();
    caps.push(top);
    let z_idx = vars.len() - 1;

    let mut exponent = TruncSeries::zero(&vars, &caps);
    for i in 1..b.len() {
        if b[i] == 0 {
            continue;
        }
        // t_i · ((1+z)^i - z^i) = t_i · ∑_{j<i} C(i,j) z^j
        for j in 0..i as u32 {
            let mut e = vec![0; vars.len()];
            e[i - 1] = 1;
            e[z_idx] = j;
            exponent = exponent.add(&TruncSeries::monomial(
                &vars,
                &caps,
                &e,
                Rat::from(binom(i as i64, j as i64)),
            ));
        }
    }
    let u = exponent.exp()?;
    let mut exps: Vec<u32> = b[1..].to_vec();
    exps.push(0);
    (0..=top)
        .map(|t| {
            exps[z_idx] = t;
            u.coeff(&exps)
        })
        .collect()
}

/// `e^{c y}` truncated at `y^cap`.
fn exp_y(c: &Rat, cap: u32) -> TruncSeries {
    let coeffs: Vec<Rat> = (0..=cap)
        .map(|n| c.pow(n) / Rat::from(factorial(n)))
        .collect();
    TruncSeries::univariate("y", cap, &coeffs)
}

fn poly_mul(a: &[TruncSeries], b: &[TruncSeries]) -> Vec<TruncSeries> {
    let zero = TruncSeries::zero(&["y"], &[a[0].caps()[0]]);
    let mut out = vec![zero; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    out
}

/// `∂_x^order [∏_v (x^v - e^{-v y})^{a_v} / (x - e^{-y})]` at `x = 1`, as a
/// series in `y` up to `cap`. The quotient is an exact polynomial in `x`.
pub(crate) fn v_derivative(beta: &Partition, order: u32, cap: u32) -> Result<TruncSeries> {
    let zero = TruncSeries::zero(&["y"], &[cap]);
    let one = TruncSeries::constant(&["y"], &[cap], Rat::one());
    let mut numer = vec![one.clone()];
    for &v in beta.parts() {
        let mut factor = vec![zero.clone(); v as usize + 1];
        factor[0] = exp_y(&Rat::from(-(v as i64)), cap).scale(&Rat::from(-1));
        factor[v as usize] = one.clone();
        numer = poly_mul(&numer, &factor);
    }
    // synthetic division by (x - c), c = e^{-y}
    let c = exp_y(&Rat::from(-1), cap);
    let n = numer.len() - 1;
    let mut quot = vec![zero.clone(); n];
    let mut acc = zero.clone();
    for j in (1..=n).rev() {
        acc = numer[j].add(&c.mul(&acc));
        quot[j - 1] = acc.clone();
    }
    let remainder = numer[0].add(&c.mul(&acc));
    if !remainder.is_zero() {
        return Err(HurwitzError::Internal(format!(
            "V_{beta} is not divisible by x - e^(-y)"
        )));
    }
    let mut out = zero;
    for (j, qj) in quot.iter().enumerate() {
        let ff = falling(j as i64, order);
        if ff != BigInt::from(0) {
            out = out.add(&qj.scale(&Rat::from(ff)));
        }
    }
    Ok(out)
}

/// `∏_i b_i! / (i!)^{b_i}` over the multiplicities of K.
fn k_weight(k: &Partition) -> Rat {
    k_mult(k)
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &b)| Rat::from(factorial(b)) / Rat::from(factorial(i as u32).pow(b)))
        .product()
}

fn engine_generating_function(d: u32, q: u32, k: &Partition, beta: &Partition) -> Result<Rat> {
    let top = k.size() - k.len() as u32;
    let a = u_coefficients(k)?;
    let g = exp_y(&Rat::new(-1, 2), top).mul(&v_derivative(beta, d - q, top)?);
    let dd = Rat::from(d);
    let mut sum = Rat::zero();
    for (t, at) in a.iter().enumerate() {
        if at.is_zero() {
            continue;
        }
        let t = t as u32;
        sum += at * Rat::from(factorial(t)) / dd.pow(t) * g.coeff(&[t])?;
    }
    let pre = Rat::from(beta.class_size()) * dd.powi(k.size() as i32 - 1) * k_weight(k)
        / Rat::from(factorial(q) * factorial(d - q));
    Ok(pre * sum)
}

/// `H_{d,m}(K; (d), β) = ∑_i (-1)^i [m+i, m] W̄_{d,m+i}`.
pub fn h_onepart(d: u32, m: u32, k: &Partition, beta: &Partition) -> Result<Rat> {
    h_onepart_with(d, m, k, beta, Engine::CharacterSum)
}

pub fn h_onepart_with(
    d: u32,
    m: u32,
    k: &Partition,
    beta: &Partition,
    engine: Engine,
) -> Result<Rat> {
    check_beta(d, beta)?;
    check_q(d, m)?;
    let mut total = Rat::zero();
    for i in 0..=(d - m) {
        let term = Rat::from(stirling1_unsigned(m + i, m)) * w_onepart(d, m + i, k, beta, engine)?;
        total += if i % 2 == 0 { term } else { -term };
    }
    Ok(total)
}

type OrderTable = RwLock<HashMap<u32, Vec<Rat>>>;

/// Higher-order Bernoulli numbers `B^{(order)}_j` for `j <= cap`.
fn bernoulli_order_numbers(order: u32, cap: u32) -> Vec<Rat> {
    static TABLE: OnceLock<OrderTable> = OnceLock::new();
    let lock = TABLE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(v) = lock.read().expect("bernoulli table poisoned").get(&order) {
        if v.len() > cap as usize {
            return v.clone();
        }
    }
    let den: Vec<Rat> = (0..=cap)
        .map(|j| Rat::from(factorial(j + 1)).recip())
        .collect();
    let kernel = TruncSeries::univariate("x", cap, &den)
        .recip()
        .expect("constant term is 1")
        .pow(order);
    let v: Vec<Rat> = (0..=cap)
        .map(|j| kernel.coeff(&[j]).expect("within cap") * Rat::from(factorial(j)))
        .collect();
    lock.write()
        .expect("bernoulli table poisoned")
        .insert(order, v.clone());
    v
}

fn bernoulli_poly_cached(n: u32, order: u32, z: &Rat) -> Rat {
    let nums = bernoulli_order_numbers(order, n);
    (0..=n)
        .map(|j| Rat::from(binom(n as i64, j as i64)) * &nums[j as usize] * z.pow(n - j))
        .sum()
}

/// The Bernoulli-expression right side, evaluated exactly as stated (with
/// its `(d-m)!` prefactor).
pub fn bernoulli_rhs(d: u32, m: u32, k: &Partition, beta: &Partition) -> Result<Rat> {
    check_beta(d, beta)?;
    check_q(d, m)?;
    let a = u_coefficients(k)?;
    let parts = beta.parts();
    let n = parts.len();
    let prod_beta: BigInt = parts.iter().map(|&p| BigInt::from(p)).product();
    let pre = Rat::from(factorial(d - m) * factorial(d) * BigInt::from(d).pow(k.size()))
        / Rat::from(factorial(m) * prod_beta)
        * k_weight(k);
    let dd = Rat::from(d);
    let mut total = Rat::zero();
    for (t, at) in a.iter().enumerate() {
        if at.is_zero() {
            continue;
        }
        let t = t as u32;
        let mut inner = Rat::zero();
        for r in 0..=(d - m) {
            for mask in 0u32..(1 << n) {
                let chosen: u32 = (0..n)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| parts[i])
                    .sum();
                let bn = binom(chosen as i64, (d - m - r) as i64);
                if bn == BigInt::from(0) {
                    continue;
                }
                let size = mask.count_ones() as usize;
                let z = Rat::half() + Rat::from(d - chosen);
                let term = Rat::from(bn) / Rat::from(factorial(r + 1 + t))
                    * bernoulli_poly_cached(r + 1 + t, r + 1, &z);
                inner += if (n - size + 1 + t as usize).is_multiple_of(2) {
                    term
                } else {
                    -term
                };
            }
        }
        total += at * Rat::from(factorial(t)) / dd.pow(t) * inner;
    }
    Ok(pre * total)
}

/// The Bernoulli-expression left side `W̄_{d,m} · d · Aut(β)`.
pub fn bernoulli_lhs(d: u32, m: u32, k: &Partition, beta: &Partition) -> Result<Rat> {
    Ok(w_onepart(d, m, k, beta, Engine::CharacterSum)? * Rat::from(d) * Rat::from(beta.aut()))
}

/// `lhs / rhs`, or `None` when the right side vanishes.
pub fn bernoulli_ratio(d: u32, m: u32, k: &Partition, beta: &Partition) -> Result<Option<Rat>> {
    let rhs = bernoulli_rhs(d, m, k, beta)?;
    if rhs.is_zero() {
        return Ok(None);
    }
    Ok(Some(bernoulli_lhs(d, m, k, beta)? / rhs))
}

/// Closed form of `W̄_{d,q}([2^s]; (d), β)`:
/// `s!·|C_β| d^{s-1}/(q!(d-q)!) · [y^s] ∂_x^{d-q} e^{(d-1)y/2} V_β |_{x=1}`.
pub fn standard_corollary(d: u32, q: u32, s: u32, beta: &Partition) -> Result<Rat> {
    Ok(standard_corollary_as_printed(d, q, s, beta)? * Rat::from(factorial(s)))
}

/// The same closed form without the `s!`.
pub fn standard_corollary_as_printed(d: u32, q: u32, s: u32, beta: &Partition) -> Result<Rat> {
    check_beta(d, beta)?;
    check_q(d, q)?;
    let g = exp_y(&Rat::new(d as i64 - 1, 2), s).mul(&v_derivative(beta, d - q, s)?);
    Ok(
        Rat::from(beta.class_size()) * Rat::from(d).powi(s as i32 - 1) * g.coeff(&[s])?
            / Rat::from(factorial(q) * factorial(d - q)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hurwitz::{h_quasi, parity_forces_zero, HurwitzQuery};
    use crate::partitions::{part, partitions_of, partitions_up_to};

    #[test]
    fn engines_agree() {
        for d in 1..=6u32 {
            for k in partitions_up_to(4) {
                for beta in partitions_of(d) {
                    for q in 1..=d {
                        let a = w_onepart(d, q, &k, &beta, Engine::CharacterSum).unwrap();
                        let b = w_onepart(d, q, &k, &beta, Engine::GeneratingFunction).unwrap();
                        assert_eq!(a, b, "d={d} q={q} K={k} β={beta}");
                    }
                }
            }
        }
    }

    #[test]
    fn onepart_examples() {
        let b11 = part(&[1, 1]);
        for engine in [Engine::CharacterSum, Engine::GeneratingFunction] {
            assert_eq!(
                w_onepart(2, 2, &part(&[2]), &b11, engine).unwrap(),
                Rat::new(1, 2)
            );
        }
        assert_eq!(h_onepart(2, 2, &part(&[2]), &b11).unwrap(), Rat::new(1, 2));
        assert!(w_onepart(3, 1, &part(&[2]), &b11, Engine::CharacterSum).is_err());
    }

    #[test]
    fn onepart_matches_quasi_and_parity() {
        for d in 1..=5u32 {
            for k in partitions_up_to(4) {
                for beta in partitions_of(d) {
                    for m in 1..=d {
                        let v = h_onepart(d, m, &k, &beta).unwrap();
                        let q = HurwitzQuery::one_part(d, m, k.clone(), beta.clone()).unwrap();
                        assert_eq!(v, h_quasi(&q).unwrap());
                        if parity_forces_zero(d, m, &k, &beta) {
                            assert!(v.is_zero());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn standard_corollary_with_factorial() {
        for d in 1..=6u32 {
            for s in 0..=3u32 {
                let k = Partition::from(vec![2; s as usize].as_slice());
                for beta in partitions_of(d) {
                    for q in 1..=d {
                        let w = w_onepart(d, q, &k, &beta, Engine::CharacterSum).unwrap();
                        assert_eq!(w, standard_corollary(d, q, s, &beta).unwrap());
                    }
                }
            }
        }
        assert_eq!(
            standard_corollary_as_printed(3, 2, 2, &part(&[2, 1])).unwrap(),
            Rat::new(9, 2)
        );
        assert_eq!(
            standard_corollary(3, 2, 2, &part(&[2, 1])).unwrap(),
            Rat::from(9)
        );
    }

    #[test]
    fn bernoulli_ratio_is_inverse_factorial() {
        for d in 1..=5u32 {
            for k in partitions_up_to(3) {
                for beta in partitions_of(d) {
                    for m in 1..=d {
                        let lhs = bernoulli_lhs(d, m, &k, &beta).unwrap();
                        let rhs = bernoulli_rhs(d, m, &k, &beta).unwrap();
                        assert_eq!(
                            lhs * Rat::from(factorial(d - m)),
                            rhs,
                            "d={d} m={m} K={k} β={beta}"
                        );
                    }
                }
            }
        }
    }
}
