//! Brute-force ground truth over explicit symmetric groups.
//!
//! Permutations are image arrays on `0..d`; a product `a·b` applies `b`
//! first. Class functions are dense vectors indexed by element rank.

use std::collections::HashMap;
use std::ops::{Add, Mul};
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{HurwitzError, Result};
use crate::exact_arith::{factorial, Rat};
use crate::hurwitz::{check_profiles, HurwitzQuery};
use crate::partitions::{partitions_of, Partition};
use crate::shifted::completed_cycle;

pub const DEFAULT_CAP: u32 = 6;
pub const MAX_CAP: u32 = 7;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn from_images(images: Vec<u8>) -> Result<Perm> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i as usize >= images.len() || seen[i as usize] {
                return Err(HurwitzError::InvalidArgument(format!(
                    "{images:?} is not a bijection"
                )));
            }
            seen[i as usize] = true;
        }
        Ok(Perm(images))
    }

    pub fn identity(d: u32) -> Perm {
        Perm((0..d as u8).collect())
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.len() as u32
    }

    /// `self · other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Perm(inv)
    }

    pub fn cycle_type(&self) -> Partition {
        let mut seen = vec![false; self.0.len()];
        let mut parts = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i] as usize;
                len += 1;
            }
            parts.push(len);
        }
        Partition::new(parts).expect("cycle lengths are positive")
    }
}

/// All of `S_d` with a rank index and, for `d <= 6`, a full product table.
pub struct SymmetricGroup {
    d: u32,
    elems: Vec<Perm>,
    index: HashMap<Perm, u32>,
    types: Vec<Partition>,
    table: Option<Vec<u16>>,
}

impl SymmetricGroup {
    fn build(d: u32) -> SymmetricGroup {
        let mut elems = Vec::new();
        let mut current: Vec<u8> = (0..d as u8).collect();
        loop {
            elems.push(Perm(current.clone()));
            if !next_permutation(&mut current) {
                break;
            }
        }
        let index: HashMap<Perm, u32> = elems
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        let types = elems.iter().map(Perm::cycle_type).collect();
        let n = elems.len();
        let table = (d <= 6).then(|| {
            let mut t = vec![0u16; n * n];
            t.par_chunks_mut(n).enumerate().for_each(|(a, row)| {
                for (b, slot) in row.iter_mut().enumerate() {
                    *slot = index[&elems[a].compose(&elems[b])] as u16;
                }
            });
            t
        });
        SymmetricGroup {
            d,
            elems,
            index,
            types,
            table,
        }
    }

    /// Shared, lazily built group of degree `d`.
    pub fn get(d: u32) -> Arc<SymmetricGroup> {
        static GROUPS: OnceLock<RwLock<HashMap<u32, Arc<SymmetricGroup>>>> = OnceLock::new();
        let lock = GROUPS.get_or_init(|| RwLock::new(HashMap::new()));
        if let Some(g) = lock.read().expect("group cache poisoned").get(&d) {
            return g.clone();
        }
        let g = Arc::new(SymmetricGroup::build(d));
        lock.write()
            .expect("group cache poisoned")
            .entry(d)
            .or_insert(g)
            .clone()
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elems[i]
    }

    pub fn rank(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    pub fn cycle_type(&self, i: usize) -> &Partition {
        &self.types[i]
    }

    /// Rank of `elem(a) · elem(b)`.
    pub fn product(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.elems.len() + b] as usize,
            None => self.index[&self.elems[a].compose(&self.elems[b])] as usize,
        }
    }

    pub fn indicator<T: Clone + Zero>(&self, class: &Partition, one: T) -> Vec<T> {
        self.types
            .iter()
            .map(|t| if t == class { one.clone() } else { T::zero() })
            .collect()
    }

    /// `(f * g)(x) = ∑_{a·b = x} f(a) g(b)`.
    pub fn convolve<T>(&self, f: &[T], g: &[T]) -> Vec<T>
    where
        T: Clone + Zero + Send + Sync + for<'a> Add<&'a T, Output = T>,
        for<'a> &'a T: Mul<&'a T, Output = T>,
    {
        let n = self.elems.len();
        let g_support: Vec<usize> = (0..n).filter(|&b| !g[b].is_zero()).collect();
        let chunk = n.div_ceil(rayon::current_num_threads().max(1) * 4).max(1);
        (0..n)
            .collect::<Vec<_>>()
            .par_chunks(chunk)
            .map(|rows| {
                let mut acc = vec![T::zero(); n];
                for &a in rows {
                    if f[a].is_zero() {
                        continue;
                    }
                    for &b in &g_support {
                        let x = self.product(a, b);
                        acc[x] = acc[x].clone() + &(&f[a] * &g[b]);
                    }
                }
                acc
            })
            .reduce(
                || vec![T::zero(); n],
                |mut x, y| {
                    for (a, b) in x.iter_mut().zip(y.iter()) {
                        if !b.is_zero() {
                            *a = a.clone() + b;
                        }
                    }
                    x
                },
            )
    }
}

fn next_permutation(v: &mut [u8]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// How a class `C_η` with `|η| < d` acts inside `S_d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Lift {
    /// Sum over pairs (support `S` with `|S| = |η|`, permutation of `S` of
    /// type `η`), extended by the identity. This is the element whose central
    /// character is `f_η`.
    #[default]
    Supports,
    /// The plain class sum of `η` padded with ones.
    PaddedClass,
}

/// Number of `|η|`-subsets `S` such that `p` fixes every point outside `S`
/// and restricts to a permutation of type `η` on `S`.
fn supports(p: &Perm, eta: &Partition) -> u64 {
    let d = p.degree() as usize;
    let size = eta.size() as usize;
    if size > d {
        return 0;
    }
    let moved: Vec<usize> = (0..d).filter(|&i| p.images()[i] as usize != i).collect();
    let fixed: Vec<usize> = (0..d).filter(|&i| p.images()[i] as usize == i).collect();
    if moved.len() > size {
        return 0;
    }
    // S = moved points plus some fixed points; enumerate the fixed ones
    let need = size - moved.len();
    let mut count = 0;
    for mask in 0u32..(1 << fixed.len()) {
        if mask.count_ones() as usize != need {
            continue;
        }
        let mut in_s = vec![true; d];
        for (bit, &f) in fixed.iter().enumerate() {
            in_s[f] = mask >> bit & 1 == 1;
        }
        let mut on_s: Vec<u32> = Vec::new();
        let mut seen = vec![false; d];
        for start in 0..d {
            if !in_s[start] || seen[start] {
                continue;
            }
            let (mut len, mut i) = (0, start);
            while !seen[i] {
                seen[i] = true;
                i = p.images()[i] as usize;
                len += 1;
            }
            on_s.push(len);
        }
        if Partition::from(on_s.as_slice()) == *eta {
            count += 1;
        }
    }
    count
}

/// Degree-capped brute-force evaluator.
#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    cap: u32,
}

impl Default for Oracle {
    fn default() -> Oracle {
        Oracle { cap: DEFAULT_CAP }
    }
}

impl Oracle {
    pub fn with_cap(cap: u32) -> Result<Oracle> {
        if cap > MAX_CAP {
            return Err(HurwitzError::OracleCapExceeded {
                d: cap,
                cap: MAX_CAP,
            });
        }
        Ok(Oracle { cap })
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    fn group(&self, d: u32) -> Result<Arc<SymmetricGroup>> {
        if d > self.cap {
            return Err(HurwitzError::OracleCapExceeded { d, cap: self.cap });
        }
        if d == 0 {
            return Err(HurwitzError::InvalidArgument(
                "degree must be positive".into(),
            ));
        }
        Ok(SymmetricGroup::get(d))
    }

    /// Frequency vector of the products `σ_1 ⋯ σ_t`, `σ_i ∈ C_i`.
    fn product_counts(&self, d: u32, classes: &[Partition]) -> Result<Vec<u128>> {
        let g = self.group(d)?;
        check_profiles(d, classes)?;
        let mut acc = g.indicator(&Partition::identity(d), 1u128);
        for c in classes {
            acc = g.convolve(&acc, &g.indicator(c, 1u128));
        }
        Ok(acc)
    }

    /// `ξ_{d,m}(C_1..C_t)`: tuples whose product has exactly `m` cycles.
    pub fn xi_count(&self, d: u32, m: u32, classes: &[Partition]) -> Result<u128> {
        let counts = self.product_counts(d, classes)?;
        let g = self.group(d)?;
        Ok((0..g.order())
            .filter(|&i| g.cycle_type(i).len() == m as usize)
            .map(|i| counts[i])
            .sum())
    }

    /// `N_{C_1..C_k}`: tuples with product the identity.
    pub fn frobenius_count(&self, classes: &[Partition]) -> Result<u128> {
        let d = classes
            .first()
            .map(|c| c.size())
            .ok_or_else(|| HurwitzError::InvalidArgument("no classes".into()))?;
        let counts = self.product_counts(d, classes)?;
        let g = self.group(d)?;
        Ok(counts[g.rank(&Perm::identity(d)).expect("identity present")])
    }

    /// Factorizations of a fixed full cycle into `d - 1` transpositions.
    pub fn single_hurwitz_check(&self, d: u32) -> Result<u128> {
        if d < 2 {
            return Err(HurwitzError::InvalidArgument("needs d >= 2".into()));
        }
        let transposition = Partition::new([vec![2], vec![1; d as usize - 2]].concat())?;
        let classes = vec![transposition; d as usize - 1];
        let counts = self.product_counts(d, &classes)?;
        let g = self.group(d)?;
        let cycle = Perm((1..d as u8).chain([0]).collect());
        Ok(counts[g.rank(&cycle).expect("cycle present")])
    }

    /// Rat-weighted class functions: one per completed cycle, then one
    /// indicator per profile.
    fn factors(&self, q: &HurwitzQuery, g: &SymmetricGroup, lift: Lift) -> Result<Vec<Vec<Rat>>> {
        let mut out = Vec::new();
        for &k in q.k.parts() {
            let cycle = completed_cycle(k, q.starred)?;
            let mut f = vec![Rat::zero(); g.order()];
            for (i, slot) in f.iter_mut().enumerate() {
                let elem = g.element(i);
                for (eta, c) in cycle.iter() {
                    let n = match lift {
                        Lift::Supports => supports(elem, eta),
                        Lift::PaddedClass => {
                            u64::from(eta.pad_to(q.d).as_ref() == Some(g.cycle_type(i)))
                        }
                    };
                    if n > 0 {
                        *slot += c * Rat::from(n);
                    }
                }
            }
            out.push(f);
        }
        for mu in &q.profiles {
            out.push(g.indicator(mu, Rat::one()));
        }
        Ok(out)
    }

    fn weighted_product(
        &self,
        q: &HurwitzQuery,
        lift: Lift,
    ) -> Result<(Arc<SymmetricGroup>, Vec<Rat>)> {
        q.validate()?;
        let g = self.group(q.d)?;
        if q.k.len() as u32 > self.cap {
            return Err(HurwitzError::OracleCapExceeded {
                d: q.k.len() as u32,
                cap: self.cap,
            });
        }
        let mut acc = g.indicator(&Partition::identity(q.d), Rat::one());
        for f in self.factors(q, &g, lift)? {
            acc = g.convolve(&acc, &f);
        }
        Ok((g, acc))
    }

    /// Quasi number by definition: weighted tuples whose product has `m`
    /// cycles, over `d!`.
    pub fn h_by_definition(&self, q: &HurwitzQuery) -> Result<Rat> {
        self.h_by_definition_with(q, Lift::Supports)
    }

    pub fn h_by_definition_with(&self, q: &HurwitzQuery, lift: Lift) -> Result<Rat> {
        let (g, acc) = self.weighted_product(q, lift)?;
        let total: Rat = (0..g.order())
            .filter(|&i| g.cycle_type(i).len() == q.m as usize)
            .map(|i| acc[i].clone())
            .sum();
        Ok(total / Rat::from(factorial(q.d)))
    }

    /// `h_by_definition` for every `m = 1..=d` from one weighted product
    /// (entry `m - 1`); `q.m` is ignored.
    pub fn h_by_definition_all_m(&self, q: &HurwitzQuery) -> Result<Vec<Rat>> {
        let (g, acc) = self.weighted_product(q, Lift::Supports)?;
        let mut out = vec![Rat::zero(); q.d as usize];
        for (i, v) in acc.into_iter().enumerate() {
            out[g.cycle_type(i).len() - 1] += v;
        }
        let dfact = Rat::from(factorial(q.d));
        Ok(out.into_iter().map(|v| v / &dfact).collect())
    }

    /// Same number as a sum over a closing class `μ` with `ℓ(μ) = m` of
    /// weighted tuples with identity product.
    pub fn h_by_closing_class(&self, q: &HurwitzQuery) -> Result<Rat> {
        let (g, acc) = self.weighted_product(q, Lift::Supports)?;
        let id = g.rank(&Perm::identity(q.d)).expect("identity present");
        let mut total = Rat::zero();
        for mu in partitions_of(q.d)
            .into_iter()
            .filter(|mu| mu.len() == q.m as usize)
        {
            let closed = g.convolve(&acc, &g.indicator(&mu, Rat::one()));
            total += &closed[id];
        }
        Ok(total / Rat::from(factorial(q.d)))
    }
}
