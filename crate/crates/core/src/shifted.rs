//! Shifted power sums, the f-basis and completed cycles.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use crate::characters::{dim_irrep, mn_char};
use crate::error::{HurwitzError, Result};
use crate::exact_arith::{binom, factorial, linalg, zeta_neg, Rat};
use crate::partitions::{partitions_of, Partition};

/// Finite Rat-linear combination of conjugacy classes, keyed by un-padded
/// partitions of any size.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct ClassVector {
    terms: BTreeMap<Partition, Rat>,
}

impl ClassVector {
    pub fn new() -> ClassVector {
        ClassVector::default()
    }

    pub fn add_term(&mut self, key: Partition, c: Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn get(&self, key: &Partition) -> Rat {
        self.terms.get(key).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rat) -> ClassVector {
        let mut out = ClassVector::new();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    pub fn add(&self, other: &ClassVector) -> ClassVector {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    /// View in degree `d`: every key padded with ones, merging keys that lift
    /// to the same class; keys larger than `d` are dropped.
    pub fn lift(&self, d: u32) -> BTreeMap<Partition, Rat> {
        let mut out: BTreeMap<Partition, Rat> = BTreeMap::new();
        for (k, v) in &self.terms {
            if let Some(p) = k.pad_to(d) {
                *out.entry(p).or_insert_with(Rat::zero) += v;
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }
}

impl fmt::Debug for ClassVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// `p_k(λ) = ∑_i [(λ_i - i + 1/2)^k - (-i + 1/2)^k]`.
pub fn p_shift(k: u32, lambda: &Partition) -> Rat {
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(idx, &part)| {
            let i = idx as i64 + 1;
            Rat::new(2 * (part as i64 - i) + 1, 2).pow(k) - Rat::new(1 - 2 * i, 2).pow(k)
        })
        .sum()
}

/// The constant `(1 - 2^{-k}) ζ(-k)` separating `p*_k` from `p_k`.
pub fn p_star_constant(k: u32) -> Rat {
    (Rat::one() - Rat::from(2).powi(-(k as i32))) * zeta_neg(k)
}

pub fn p_star(k: u32, lambda: &Partition) -> Rat {
    p_shift(k, lambda) + p_star_constant(k)
}

/// `f_μ(λ) = C(|λ|,|μ|) |C_μ| χ^λ(μ↑) / dim λ`; zero when `|μ| > |λ|`.
pub fn f_eval(mu: &Partition, lambda: &Partition) -> Rat {
    if mu.is_empty() {
        return Rat::one();
    }
    let Some(lifted) = mu.pad_to(lambda.size()) else {
        return Rat::zero();
    };
    let chi = mn_char(lambda, &lifted).expect("sizes agree after padding");
    Rat::from(binom(lambda.size() as i64, mu.size() as i64))
        * Rat::from(mu.class_size())
        * Rat::from(chi)
        / Rat::from(dim_irrep(lambda))
}

/// Coefficients `κ_{(k),μ}` of `p_k = ∑_μ κ_{(k),μ} f_μ`, solved size block by
/// size block (f_μ vanishes on partitions smaller than μ).
pub fn kappa(k: u32) -> Result<ClassVector> {
    if k == 0 {
        return Err(HurwitzError::InvalidArgument(
            "completed cycle needs k >= 1".into(),
        ));
    }
    let mut solved = ClassVector::new();
    for n in 0..=k {
        let block = partitions_of(n);
        let matrix: Vec<Vec<Rat>> = block
            .iter()
            .map(|lambda| block.iter().map(|mu| f_eval(mu, lambda)).collect())
            .collect();
        let rhs: Vec<Rat> = block
            .iter()
            .map(|lambda| {
                let known: Rat = solved.iter().map(|(mu, c)| c * f_eval(mu, lambda)).sum();
                p_shift(k, lambda) - known
            })
            .collect();
        let x = linalg::solve_square(&matrix, &rhs).ok_or_else(|| {
            HurwitzError::Internal(format!("f-basis block of size {n} is singular"))
        })?;
        for (mu, c) in block.into_iter().zip(x) {
            solved.add_term(mu, c);
        }
    }
    Ok(solved)
}

type CycleCache = RwLock<HashMap<(u32, bool), ClassVector>>;

/// The completed k-cycle `(1/k!) φ^{-1}(p_k)`, optionally starred.
pub fn completed_cycle(k: u32, starred: bool) -> Result<ClassVector> {
    static CACHE: OnceLock<CycleCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(v) = cache
        .read()
        .expect("cycle cache poisoned")
        .get(&(k, starred))
    {
        return Ok(v.clone());
    }
    let kfact = Rat::from(factorial(k));
    let mut cycle = kappa(k)?.scale(&kfact.recip());
    if starred {
        cycle.add_term(Partition::empty(), p_star_constant(k) / &kfact);
    }
    cache
        .write()
        .expect("cycle cache poisoned")
        .insert((k, starred), cycle.clone());
    Ok(cycle)
}
