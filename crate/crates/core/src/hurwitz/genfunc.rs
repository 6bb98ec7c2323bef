//! Coefficientwise check of the generating function over K for one-part numbers.

use crate::error::Result;
use crate::exact_arith::{binom, factorial, stirling1_unsigned, Rat, TruncSeries};
use crate::partitions::Partition;

use super::onepart::{h_onepart, v_derivative};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GenFuncReport {
    /// Number of `t`-monomials compared.
    pub checked: usize,
    /// `(b, lhs, rhs)` for every monomial `t^b` whose coefficients differ.
    pub mismatches: Vec<(Vec<u32>, Rat, Rat)>,
}

impl GenFuncReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn multi_indices(caps: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for &c in caps {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=c).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out
}

fn k_from_mult(b: &[u32]) -> Partition {
    let mut parts = Vec::new();
    for (i, &bi) in b.iter().enumerate() {
        parts.extend(std::iter::repeat_n(i as u32 + 1, bi as usize));
    }
    Partition::from(parts.as_slice())
}

/// Compare both sides for every `t^b` with `b_i <= caps[i-1]`.
pub fn genfunc_check(d: u32, m: u32, beta: &Partition, caps: &[u32]) -> Result<GenFuncReport> {
    let dd = Rat::from(d);
    let monomials = multi_indices(caps);

    // z only reaches ∑(i-1)b_i
    let top: u32 = caps.iter().enumerate().map(|(i, &c)| i as u32 * c).sum();
    let names: Vec<String> = (1..=caps.len())
        .map(|i| format!("t{i}"))
        .chain(["z".into()])
        .collect();
    let vars: Vec<&str> = names.iter().map(String::as_str).collect();
    let mut all_caps = caps.to_vec();
    all_caps.push(top);
    let z_idx = caps.len();
    let mut exponent = TruncSeries::zero(&vars, &all_caps);
    for i in 1..=caps.len() {
        for j in 0..i as u32 {
            let mut e = vec![0; vars.len()];
            e[i - 1] = 1;
            e[z_idx] = j;
            exponent = exponent.add(&TruncSeries::monomial(
                &vars,
                &all_caps,
                &e,
                Rat::from(binom(i as i64, j as i64)),
            ));
        }
    }
    let u = exponent.exp()?;

    // [y^t] ∑_i (-1)^i [m+i, m] C(d, m+i) ∂^{d-m-i} e^{-y/2} V_β |_{x=1}
    let half = TruncSeries::univariate(
        "y",
        top,
        &(0..=top)
            .map(|n| Rat::new(-1, 2).pow(n) / Rat::from(factorial(n)))
            .collect::<Vec<_>>(),
    );
    let mut g = TruncSeries::zero(&["y"], &[top]);
    for i in 0..=(d - m) {
        let c = Rat::from(stirling1_unsigned(m + i, m) * binom(d as i64, (m + i) as i64));
        let c = if i % 2 == 0 { c } else { -c };
        g = g.add(&half.mul(&v_derivative(beta, d - m - i, top)?).scale(&c));
    }
    let pre = Rat::from(beta.class_size()) / Rat::from(factorial(d));

    let mut report = GenFuncReport::default();
    for b in monomials {
        let mut lhs = h_onepart(d, m, &k_from_mult(&b), beta)?;
        for (idx, &bi) in b.iter().enumerate() {
            let i = idx as u32 + 1;
            lhs *= Rat::from(factorial(i).pow(bi)) / (dd.pow(i * bi) * Rat::from(factorial(bi)));
        }
        let mut rhs = Rat::zero();
        let mut exps = b.clone();
        exps.push(0);
        for t in 0..=top {
            exps[z_idx] = t;
            let ut = u.coeff(&exps)?;
            if ut.is_zero() {
                continue;
            }
            rhs += ut * Rat::from(factorial(t)) / dd.pow(t + 1) * g.coeff(&[t])?;
        }
        rhs *= &pre;
        report.checked += 1;
        if lhs != rhs {
            report.mismatches.push((b, lhs, rhs));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{part, partitions_of};

    #[test]
    fn examples() {
        let r = genfunc_check(2, 1, &part(&[1, 1]), &[2, 2]).unwrap();
        assert!(r.ok(), "{r:?}");
        assert_eq!(r.checked, 9);
        let r = genfunc_check(3, 1, &part(&[3]), &[2, 1, 1]).unwrap();
        assert!(r.ok(), "{r:?}");
        assert!(genfunc_check(3, 2, &part(&[3]), &[]).unwrap().ok());
    }

    #[test]
    fn small_range() {
        for d in 1..=4u32 {
            for beta in partitions_of(d) {
                for m in 1..=d {
                    let r = genfunc_check(d, m, &beta, &[2, 1, 1]).unwrap();
                    assert!(r.ok(), "d={d} m={m} β={beta}: {r:?}");
                }
            }
        }
    }
}
