//! Exact polynomial fitting of one-part numbers, lowest-stratum coefficients
//! and the string/dilaton relations between them.

use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{HurwitzError, Result};
use crate::exact_arith::{bernoulli, factorial, linalg, Rat};
use crate::hurwitz::{h_double_onepart, h_onepart};
use crate::partitions::{partitions_of, Partition};

/// Sparse polynomial over [`Rat`] in named variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl MultiPoly {
    pub fn new(vars: Vec<String>) -> MultiPoly {
        MultiPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rat) {
        assert_eq!(exps.len(), self.vars.len());
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps.clone()).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    /// Largest total degree present; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    /// Distinct total degrees carrying a nonzero coefficient.
    pub fn degrees(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.terms.keys().map(|e| e.iter().sum()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&k, x)| acc * x.pow(k))
            })
            .sum()
    }

    /// Invariant under every permutation of the variables (checked on
    /// adjacent transpositions).
    pub fn is_symmetric(&self) -> bool {
        (1..self.vars.len()).all(|i| {
            self.terms.iter().all(|(e, c)| {
                let mut f = e.clone();
                f.swap(i - 1, i);
                self.coeff(&f) == *c
            })
        })
    }
}

/// Monomial coefficients of the polynomial through `(1, v_0), …, (R, v_{R-1})`.
fn newton_1d(values: &[Rat]) -> Vec<Rat> {
    let n = values.len();
    let mut dd = values.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / Rat::from(level as u32);
        }
    }
    // Horner on the Newton form with nodes 1..n
    let mut poly = vec![Rat::zero(); n];
    for j in (0..n).rev() {
        // poly = poly·(x - (j+1)) + dd[j]
        let node = Rat::from(j as u32 + 1);
        let mut next = vec![Rat::zero(); n];
        for (k, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k + 1 < n {
                next[k + 1] += c;
            }
            next[k] -= c * &node;
        }
        next[0] += &dd[j];
        poly = next;
    }
    poly
}

/// Tensor Newton interpolation of `f` on `[1, R]^n`: returns the polynomial
/// with every partial degree `< R`.
pub fn interpolate_grid<F>(vars: Vec<String>, radius: u32, f: F) -> Result<MultiPoly>
where
    F: Fn(&[u32]) -> Result<Rat> + Sync,
{
    let n = vars.len();
    let r = radius as usize;
    let size = r.pow(n as u32);
    let index = |mut flat: usize| -> Vec<u32> {
        let mut p = vec![0u32; n];
        for slot in p.iter_mut().rev() {
            *slot = (flat % r) as u32;
            flat /= r;
        }
        p
    };
    let mut data: Vec<Rat> = (0..size)
        .into_par_iter()
        .map(|flat| {
            let p: Vec<u32> = index(flat).into_iter().map(|x| x + 1).collect();
            f(&p)
        })
        .collect::<Result<_>>()?;
    for axis in 0..n {
        let stride = r.pow((n - 1 - axis) as u32);
        for start in 0..size {
            if !(start / stride).is_multiple_of(r) {
                continue;
            }
            let fiber: Vec<Rat> = (0..r).map(|j| data[start + j * stride].clone()).collect();
            for (j, c) in newton_1d(&fiber).into_iter().enumerate() {
                data[start + j * stride] = c;
            }
        }
    }
    let mut poly = MultiPoly::new(vars);
    for (flat, c) in data.into_iter().enumerate() {
        poly.add_term(index(flat), c);
    }
    Ok(poly)
}

/// `H_{d,d}(K; (d), β) · Aut(β) · d` at an ordered tuple β.
pub fn double_value(k: &Partition, beta: &[u32]) -> Result<Rat> {
    let beta = Partition::new(beta.to_vec())?;
    let d = beta.size();
    Ok(h_double_onepart(d, k, &beta)? * Rat::from(beta.aut()) * Rat::from(d))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleFit {
    pub k: Partition,
    pub n: usize,
    pub radius: u32,
    pub poly: MultiPoly,
    /// Claimed window `[s, ∑k_i - n + 1]`.
    pub window: (i64, i64),
}

impl DoubleFit {
    pub fn vanishes(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn within_window(&self) -> bool {
        self.poly
            .degrees()
            .iter()
            .all(|&g| (g as i64) >= self.window.0 && (g as i64) <= self.window.1)
    }

    /// The window ends are attained (a nonzero polynomial only).
    pub fn window_attained(&self) -> bool {
        self.poly.min_degree().map(i64::from) == Some(self.window.0)
            && self.poly.degree().map(i64::from) == Some(self.window.1)
    }

    /// Every degree present has the parity of the top of the window.
    pub fn parity_ok(&self) -> bool {
        self.poly
            .degrees()
            .iter()
            .all(|&g| (self.window.1 - g as i64) % 2 == 0)
    }
}

fn window(k: &Partition, n: usize) -> (i64, i64) {
    (k.len() as i64, k.size() as i64 - n as i64 + 1)
}

fn beta_vars(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("b{i}")).collect()
}

/// Fit `β ↦ H_{|β|,|β|}(K; β) Aut(β) |β|` on `[1, radius]^n`. Fails when the
/// interpolant exceeds total degree `∑k_i - n + 1`.
pub fn fit_double_poly(k: &Partition, n: usize, radius: u32) -> Result<DoubleFit> {
    if n == 0 || k.is_empty() {
        return Err(HurwitzError::InvalidArgument(
            "needs n >= 1 and non-empty K".into(),
        ));
    }
    let window = window(k, n);
    if (radius as i64) < window.1 + 1 {
        return Err(HurwitzError::InvalidArgument(format!(
            "radius {radius} cannot resolve degree {}",
            window.1
        )));
    }
    let poly = interpolate_grid(beta_vars(n), radius, |b| double_value(k, b))?;
    if let Some(deg) = poly.degree() {
        if deg as i64 > window.1.max(0) {
            return Err(HurwitzError::Internal(format!(
                "K={k}, n={n}: interpolant has degree {deg} > {}",
                window.1
            )));
        }
    }
    Ok(DoubleFit {
        k: k.clone(),
        n,
        radius,
        poly,
        window,
    })
}

/// Grid points of `[1, radius]^n` where the fit disagrees with a direct
/// evaluation: `(β, fitted, direct)`.
pub fn double_out_of_sample(fit: &DoubleFit, radius: u32) -> Result<Vec<(Vec<u32>, Rat, Rat)>> {
    let n = fit.n;
    let points: Vec<Vec<u32>> = (0..(radius as usize).pow(n as u32))
        .map(|mut flat| {
            let mut p = vec![0u32; n];
            for slot in p.iter_mut().rev() {
                *slot = (flat % radius as usize) as u32 + 1;
                flat /= radius as usize;
            }
            p
        })
        .collect();
    let bad: Vec<Option<(Vec<u32>, Rat, Rat)>> = points
        .into_par_iter()
        .map(|p| {
            let x: Vec<Rat> = p.iter().map(|&v| Rat::from(v)).collect();
            let fitted = fit.poly.eval(&x);
            let direct = double_value(&fit.k, &p)?;
            Ok((fitted != direct).then_some((p, fitted, direct)))
        })
        .collect::<Result<_>>()?;
    Ok(bad.into_iter().flatten().collect())
}

type FitCache = RwLock<HashMap<(Partition, usize), MultiPoly>>;

fn cached_fit(k: &Partition, n: usize) -> Result<MultiPoly> {
    static CACHE: OnceLock<FitCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    let key = (k.clone(), n);
    if let Some(p) = cache.read().expect("fit cache poisoned").get(&key) {
        return Ok(p.clone());
    }
    let top = window(k, n).1.max(0) as u32;
    let poly = fit_double_poly(k, n, top + 1)?.poly;
    cache
        .write()
        .expect("fit cache poisoned")
        .insert(key, poly.clone());
    Ok(poly)
}

/// `⟨⟨τ_{z_1}, …, τ_{z_n}, Λ_{2g}⟩⟩_g^K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WittenSymbol {
    pub z: Vec<u32>,
    pub k: Partition,
    pub g: u32,
}

impl WittenSymbol {
    /// The symbol with `g` determined by `∑k_i = s + 2g + n - 1`.
    pub fn new(z: Vec<u32>, k: Partition) -> Result<WittenSymbol> {
        let n = z.len() as i64;
        let s = k.len() as i64;
        let two_g = k.size() as i64 - s - n + 1;
        if z.is_empty() || k.is_empty() || two_g < 0 || two_g % 2 != 0 {
            return Err(HurwitzError::InvalidArgument(format!(
                "no integral genus for K={k} with {n} points"
            )));
        }
        let w = WittenSymbol {
            z,
            k,
            g: (two_g / 2) as u32,
        };
        w.validate()?;
        Ok(w)
    }

    pub fn validate(&self) -> Result<()> {
        let s = self.k.len() as u32;
        let n = self.z.len() as u32;
        if self.z.iter().sum::<u32>() != s {
            return Err(HurwitzError::InvalidArgument(format!(
                "∑z = {} is off the lowest stratum s = {s}",
                self.z.iter().sum::<u32>()
            )));
        }
        if self.k.size() + 1 != s + 2 * self.g + n {
            return Err(HurwitzError::InvalidArgument(format!(
                "genus {} does not match K={} with {n} points",
                self.g, self.k
            )));
        }
        Ok(())
    }
}

/// `(-1)^g [β^z] H_{d,d}(K; (d), β) Aut(β) d`, read off an exact fit.
pub fn witten_lowest_coeff(w: &WittenSymbol) -> Result<Rat> {
    w.validate()?;
    let c = cached_fit(&w.k, w.z.len())?.coeff(&w.z);
    Ok(if w.g.is_multiple_of(2) { c } else { -c })
}

/// `∏ i^{b_i} / ∏ (i!)^{b_i}` over the parts of K.
fn k_ratio(k: &Partition) -> Rat {
    k.parts()
        .iter()
        .map(|&i| Rat::from(i) / Rat::from(factorial(i)))
        .product()
}

fn genus_factor(g: u32) -> Rat {
    let two = Rat::from(2);
    let p = two.powi(2 * g as i32 - 1);
    (&p - Rat::one()) / (p * Rat::from(factorial(2 * g))) * bernoulli(2 * g).abs()
}

/// `C_g^K` with `(∑_i (i-1) b_i)!`.
pub fn lambda_g_constant(k: &Partition, g: u32) -> Rat {
    let n: u32 = k.parts().iter().map(|&i| i - 1).sum();
    k_ratio(k) * Rat::from(factorial(n)) * genus_factor(g)
}

/// `C_g^K` with `∏_i ((i-1) b_i)!`, as stated.
pub fn lambda_g_constant_as_printed(k: &Partition, g: u32) -> Rat {
    let mult = k.multiplicities();
    let prod: BigInt = mult
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &b)| factorial((i as u32 - 1) * b))
        .product();
    k_ratio(k) * Rat::from(prod) * genus_factor(g)
}

/// Both sides of one string or dilaton instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub lhs: Rat,
    /// Right side with the stated prefactor `((x-1)(b_x+1))_{x-1}/(x-1)!`.
    pub rhs_printed: Rat,
    /// Right side with `(N+x-1)_{x-1}/(x-1)!`, `N = ∑(i-1)b_i`.
    pub rhs_corrected: Rat,
}

impl RelationCheck {
    pub fn holds_printed(&self) -> bool {
        self.lhs == self.rhs_printed
    }

    pub fn holds_corrected(&self) -> bool {
        self.lhs == self.rhs_corrected
    }
}

fn falling_ratio(top: u32, x: u32) -> Rat {
    Rat::from(crate::exact_arith::falling(top as i64, x - 1)) / Rat::from(factorial(x - 1))
}

fn prefactors(k: &Partition, x: u32) -> (Rat, Rat) {
    let bx = k.parts().iter().filter(|&&p| p == x).count() as u32;
    let n: u32 = k.parts().iter().map(|&i| i - 1).sum();
    (
        falling_ratio((x - 1) * (bx + 1), x),
        falling_ratio(n + x - 1, x),
    )
}

fn augmented(k: &Partition, x: u32) -> Partition {
    let mut parts = k.parts().to_vec();
    parts.push(x);
    Partition::from(parts.as_slice())
}

/// String relation for base `K`, insertions `z` (`∑z = s + 1`) and extra part `x`:
/// `⟨⟨τ_0^{x-1}, τ_z⟩⟩^{K∪x} = P · ∑_i ⟨⟨…, τ_{z_i - 1}, …⟩⟩^K`.
pub fn check_string(k: &Partition, z: &[u32], x: u32) -> Result<RelationCheck> {
    if x == 0 {
        return Err(HurwitzError::InvalidArgument("x must be positive".into()));
    }
    if z.iter().sum::<u32>() != k.len() as u32 + 1 {
        return Err(HurwitzError::InvalidArgument(
            "string needs ∑z = s + 1".into(),
        ));
    }
    let two_g = k.size() as i64 - k.len() as i64 - z.len() as i64 + 1;
    if z.is_empty() || k.is_empty() || two_g < 0 || two_g % 2 != 0 {
        return Err(HurwitzError::InvalidArgument(format!(
            "no integral genus for K={k} with {} points",
            z.len()
        )));
    }
    let g = (two_g / 2) as u32;
    let mut lhs_z = vec![0; x as usize - 1];
    lhs_z.extend_from_slice(z);
    let lhs = witten_lowest_coeff(&WittenSymbol {
        z: lhs_z,
        k: augmented(k, x),
        g,
    })?;
    let mut sum = Rat::zero();
    for i in 0..z.len() {
        if z[i] == 0 {
            continue;
        }
        let mut zi = z.to_vec();
        zi[i] -= 1;
        sum += witten_lowest_coeff(&WittenSymbol {
            z: zi,
            k: k.clone(),
            g,
        })?;
    }
    let (printed, corrected) = prefactors(k, x);
    Ok(RelationCheck {
        lhs,
        rhs_printed: printed * &sum,
        rhs_corrected: corrected * sum,
    })
}

/// Dilaton relation, `x >= 2`, `∑z = s`:
/// `⟨⟨τ_0^{x-2}, τ_1, τ_z⟩⟩^{K∪x} = (s+1) P ⟨⟨τ_z⟩⟩^K`.
pub fn check_dilaton(k: &Partition, z: &[u32], x: u32) -> Result<RelationCheck> {
    if x < 2 {
        return Err(HurwitzError::InvalidArgument("dilaton needs x >= 2".into()));
    }
    let base = WittenSymbol::new(z.to_vec(), k.clone())?;
    let mut lhs_z = vec![0; x as usize - 2];
    lhs_z.push(1);
    lhs_z.extend_from_slice(z);
    let lhs = witten_lowest_coeff(&WittenSymbol {
        z: lhs_z,
        k: augmented(k, x),
        g: base.g,
    })?;
    let rhs = Rat::from(k.len() as u32 + 1) * witten_lowest_coeff(&base)?;
    let (printed, corrected) = prefactors(k, x);
    Ok(RelationCheck {
        lhs,
        rhs_printed: printed * &rhs,
        rhs_corrected: corrected * rhs,
    })
}

/// Compositions of `total` into `n` nonnegative parts, lexicographic.
pub fn weak_compositions(total: u32, n: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in weak_compositions(total - first, n - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Compositions of `total` into `n` positive parts.
fn compositions(total: u32, n: usize) -> Vec<Vec<u32>> {
    if total < n as u32 {
        return vec![];
    }
    weak_compositions(total - n as u32, n)
        .into_iter()
        .map(|c| c.into_iter().map(|x| x + 1).collect())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplexFit {
    pub points: usize,
    /// Smallest total degree admitting an exact interpolant.
    pub degree: u32,
    pub bound: u32,
}

impl SimplexFit {
    pub fn within_bound(&self) -> bool {
        self.degree <= self.bound
    }
}

fn monomials_up_to(nvars: usize, deg: u32) -> Vec<Vec<u32>> {
    (0..=deg)
        .flat_map(|t| weak_compositions(t, nvars))
        .collect()
}

/// Lowest degree of an exact interpolant through the given points.
fn minimal_degree_fit(points: &[(Vec<u32>, Rat)]) -> u32 {
    let nvars = points.first().map_or(0, |p| p.0.len());
    let mut deg = 0;
    loop {
        let monos = monomials_up_to(nvars, deg);
        let a: Vec<Vec<Rat>> = points
            .iter()
            .map(|(p, _)| {
                monos
                    .iter()
                    .map(|e| {
                        e.iter()
                            .zip(p)
                            .fold(Rat::one(), |acc, (&k, &x)| acc * Rat::from(x).pow(k))
                    })
                    .collect()
            })
            .collect();
        let b: Vec<Rat> = points.iter().map(|(_, v)| v.clone()).collect();
        if linalg::solve_any(&a, &b).is_some() {
            return deg;
        }
        deg += 1;
    }
}

/// Consistency check on the simplices `∑k = d'` (`s` parts) and `∑β = d`
/// (`n` parts): minimal-degree interpolants of `H_{d,m}(K;(d),β)·d·Aut(β)`
/// and of `∏k_i!` times it, against the bound `d + d'`.
pub fn fit_triple_poly(
    d: u32,
    m: u32,
    n: usize,
    s: usize,
    dprime: u32,
) -> Result<(SimplexFit, SimplexFit)> {
    let mut plain = Vec::new();
    let mut tilde = Vec::new();
    for kc in compositions(dprime, s) {
        let k = Partition::new(kc.clone())?;
        let kfact: BigInt = kc.iter().map(|&x| factorial(x)).product();
        for bc in compositions(d, n) {
            let beta = Partition::new(bc.clone())?;
            let v = h_onepart(d, m, &k, &beta)? * Rat::from(d) * Rat::from(beta.aut());
            let mut point = kc.clone();
            point.extend(&bc);
            tilde.push((point.clone(), &v * Rat::from(kfact.clone())));
            plain.push((point, v));
        }
    }
    let report = |pts: &[(Vec<u32>, Rat)]| SimplexFit {
        points: pts.len(),
        degree: if pts.is_empty() {
            0
        } else {
            minimal_degree_fit(pts)
        },
        bound: d + dprime,
    };
    Ok((report(&plain), report(&tilde)))
}

/// For fixed K, the minimal interpolant in β of `H_{d,m}(K;(d),β)·d·Aut(β)`
/// over compositions of `d` into `n` parts, against the bound `2g`.
pub fn fit_triple_beta(d: u32, m: u32, n: usize, k: &Partition) -> Result<SimplexFit> {
    let mut pts = Vec::new();
    for bc in compositions(d, n) {
        let beta = Partition::new(bc.clone())?;
        let v = h_onepart(d, m, k, &beta)? * Rat::from(d) * Rat::from(beta.aut());
        pts.push((bc, v));
    }
    // 2g - 2 + 2d = ∑(k_i - 1) + (d - 1) + (d - n) + (d - m)
    let two_g = k.parts().iter().map(|&x| x as i64 - 1).sum::<i64>() + 3 * d as i64
        - 1
        - n as i64
        - m as i64
        - 2 * d as i64
        + 2;
    Ok(SimplexFit {
        points: pts.len(),
        degree: if pts.is_empty() {
            0
        } else {
            minimal_degree_fit(&pts)
        },
        bound: two_g.max(0) as u32,
    })
}

/// All strata `(K, n)` with `|K| <= max_size`, `n <= max_n` and a nonnegative
/// integral genus equal to `g`.
pub fn lambda_g_strata(g: u32, max_size: u32, max_n: usize) -> Vec<(Partition, usize)> {
    let mut out = Vec::new();
    for size in 1..=max_size {
        for k in partitions_of(size) {
            for n in 1..=max_n {
                let two_g = k.size() as i64 - k.len() as i64 - n as i64 + 1;
                if two_g == 2 * g as i64 {
                    out.push((k.clone(), n));
                }
            }
        }
    }
    out
}
