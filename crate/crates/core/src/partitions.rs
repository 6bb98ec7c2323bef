//! Integer partitions: enumeration, class statistics and Young-diagram data.
//!
//! Cells are `(row, column)`, 1-based, English convention; content is
//! `column - row`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{HurwitzError, Result};
use crate::exact_arith::{binom, factorial, Rat};

/// A weakly decreasing list of positive integers (possibly empty).
///
/// Ordering is by size descending, then reverse-lexicographic, so `[3]`
/// precedes `[2,1]` precedes `[1,1,1]` precedes `[2]`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Canonicalise arbitrary positive parts (sorted decreasingly).
    pub fn new(mut parts: Vec<u32>) -> Result<Partition> {
        if parts.contains(&0) {
            return Err(HurwitzError::InvalidPartition(format!(
                "{parts:?} contains a zero part"
            )));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    /// `(d)`, the full-cycle class.
    pub fn full(d: u32) -> Partition {
        assert!(d > 0);
        Partition(vec![d])
    }

    /// `[1^d]`.
    pub fn identity(d: u32) -> Partition {
        Partition(vec![1; d as usize])
    }

    /// The hook `[1^k, d-k]` for `0 <= k < d`.
    pub fn hook(k: u32, d: u32) -> Partition {
        assert!(k < d, "hook [1^{k},{}] needs k < d", d - k);
        let mut v = vec![d - k];
        v.extend(std::iter::repeat_n(1, k as usize));
        Partition(v)
    }

    /// `theta_{i,d} = [1^{d-i}, i]` for `1 <= i <= d`.
    pub fn theta(i: u32, d: u32) -> Partition {
        assert!(i >= 1 && i <= d, "theta_{{{i},{d}}} out of range");
        Partition::hook(d - i, d)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn largest(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// `m[i]` = number of parts equal to `i`, for `i` in `0..=largest`.
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut m = vec![0; self.largest() as usize + 1];
        for &p in &self.0 {
            m[p as usize] += 1;
        }
        m
    }

    /// Pad with ones up to size `d` (the lift `eta^{up d}`).
    pub fn pad_to(&self, d: u32) -> Option<Partition> {
        let s = self.size();
        (s <= d).then(|| {
            let mut v = self.0.clone();
            v.extend(std::iter::repeat_n(1, (d - s) as usize));
            Partition(v)
        })
    }

    /// Remove all parts equal to 1.
    pub fn strip_ones(&self) -> Partition {
        Partition(self.0.iter().copied().filter(|&p| p > 1).collect())
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.largest();
        Partition(
            (1..=cols)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
                .collect(),
        )
    }

    /// Sign of the class as a permutation: `(-1)^{|mu| - l(mu)}`.
    pub fn sign(&self) -> i64 {
        if (self.size() as usize - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// `z = ∏ i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        self.multiplicities()
            .iter()
            .enumerate()
            .skip(1)
            .fold(BigInt::one(), |acc, (i, &m)| {
                acc * BigInt::from(i).pow(m) * factorial(m)
            })
    }

    /// `Aut = ∏ m_i!`.
    pub fn aut(&self) -> BigInt {
        self.multiplicities()
            .iter()
            .skip(1)
            .fold(BigInt::one(), |acc, &m| acc * factorial(m))
    }

    /// Size of the conjugacy class of S_|λ| with this cycle type.
    pub fn class_size(&self) -> BigInt {
        factorial(self.size()) / self.z()
    }

    pub fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &row)| (1..=row).map(move |j| (i as u32 + 1, j)))
    }

    pub fn content(&self, cell: (u32, u32)) -> i64 {
        cell.1 as i64 - cell.0 as i64
    }

    pub fn hook_length(&self, cell: (u32, u32)) -> u32 {
        let (i, j) = cell;
        let arm = self.0[i as usize - 1] - j;
        let leg = self.0.iter().skip(i as usize).filter(|&&p| p >= j).count() as u32;
        arm + leg + 1
    }

    pub fn hook_product(&self) -> BigInt {
        self.cells()
            .fold(BigInt::one(), |acc, c| acc * self.hook_length(c))
    }

    /// `m_{λ,m} = ∏_u (m + c(u)) / h(u)`.
    pub fn m_coeff(&self, m: u32) -> Rat {
        let num = self
            .cells()
            .fold(BigInt::one(), |acc, c| acc * (m as i64 + self.content(c)));
        Rat::new(num, self.hook_product())
    }

    /// `c_{λ,m} = ∑_k (-1)^k C(m,k) m_{λ,m-k}`.
    pub fn c_coeff(&self, m: u32) -> Rat {
        (0..=m)
            .map(|k| {
                let term = Rat::from(binom(m as i64, k as i64)) * self.m_coeff(m - k);
                if k % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum()
    }

    /// Hook `[1^k, d-k]` → `Some(k)`.
    pub fn hook_leg(&self) -> Option<u32> {
        (!self.is_empty() && self.0[1..].iter().all(|&p| p == 1)).then(|| self.len() as u32 - 1)
    }
}

/// All partitions of `d` in reverse-lexicographic order (`[d]` first).
pub fn partitions_of(d: u32) -> Vec<Partition> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(d, d, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `d` with exactly `n` parts, in the same order.
pub fn partitions_with_len(d: u32, n: usize) -> Vec<Partition> {
    partitions_of(d)
        .into_iter()
        .filter(|p| p.len() == n)
        .collect()
}

/// All partitions of size at most `max`, in [`Partition`] order.
pub fn partitions_up_to(max: u32) -> Vec<Partition> {
    let mut v: Vec<Partition> = (0..=max).flat_map(partitions_of).collect();
    v.sort();
    v
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .size()
            .cmp(&self.size())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = HurwitzError;

    /// Accepts `"[3,1,1]"`, `"3,1,1"` and `"[]"`; parts are re-sorted.
    fn from_str(s: &str) -> Result<Partition> {
        let inner = s.trim();
        let inner = inner
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .unwrap_or(inner)
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| HurwitzError::InvalidPartition(format!("bad part in {s:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Partition::new(parts)
    }
}

impl From<&[u32]> for Partition {
    fn from(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).expect("positive parts")
    }
}

/// Shorthand for tests and examples: `part(&[2, 1])`.
pub fn part(parts: &[u32]) -> Partition {
    Partition::from(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Euler's pentagonal recurrence, independent of the generator.
    fn pentagonal_counts(n: usize) -> Vec<i64> {
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for m in 1..=n {
            let mut k = 1i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > m {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                p[m] += sign * p[m - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= m {
                    p[m] += sign * p[m - g2];
                }
                k += 1;
            }
        }
        p
    }

    #[test]
    fn counts_match_pentagonal() {
        let p = pentagonal_counts(30);
        for d in 0..=30u32 {
            assert_eq!(partitions_of(d).len() as i64, p[d as usize], "d={d}");
        }
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(10).len(), 42);
    }

    #[test]
    fn reverse_lex_order() {
        let strs: Vec<String> = partitions_of(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(strs, ["[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]);
        let mut all = partitions_up_to(3);
        all.dedup();
        let strs: Vec<String> = all.iter().map(|p| p.to_string()).collect();
        assert_eq!(
            strs,
            ["[3]", "[2,1]", "[1,1,1]", "[2]", "[1,1]", "[1]", "[]"]
        );
    }

    #[test]
    fn text_round_trip() {
        assert_eq!(
            "[3,1,1]".parse::<Partition>().unwrap().to_string(),
            "[3,1,1]"
        );
        assert_eq!("1,3,1".parse::<Partition>().unwrap(), part(&[3, 1, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[2,0]".parse::<Partition>().is_err());
        assert!("[a]".parse::<Partition>().is_err());
    }

    #[test]
    fn class_statistics() {
        assert_eq!(part(&[5]).class_size(), BigInt::from(24));
        assert_eq!(part(&[2, 1]).class_size(), BigInt::from(3));
        assert_eq!(Partition::identity(6).class_size(), BigInt::one());
        assert_eq!(part(&[2, 2, 1]).z(), BigInt::from(8));
        assert_eq!(part(&[2, 2, 1]).aut(), BigInt::from(2));
        for d in 0..=10 {
            let total: BigInt = partitions_of(d).iter().map(|p| p.class_size()).sum();
            assert_eq!(total, factorial(d));
        }
    }

    #[test]
    fn hook_length_dimension_is_integral() {
        for d in 1..=10 {
            for p in partitions_of(d) {
                let dim = Rat::new(factorial(d), p.hook_product());
                assert!(dim.is_integer() && !dim.is_negative() && !dim.is_zero());
            }
        }
        assert_eq!(part(&[2, 2]).hook_product(), BigInt::from(12));
    }

    #[test]
    fn m_coeff_examples() {
        for m in 0..8u32 {
            assert_eq!(part(&[1]).m_coeff(m), Rat::from(m));
            for d in 1..=5u32 {
                assert_eq!(
                    Partition::identity(d).m_coeff(m),
                    Rat::from(binom(m as i64, d as i64))
                );
                assert_eq!(
                    part(&[d]).m_coeff(m),
                    Rat::from(binom((m + d) as i64 - 1, d as i64))
                );
            }
        }
    }

    #[test]
    fn c_coeff_examples() {
        assert_eq!(part(&[1]).c_coeff(1), Rat::one());
        assert_eq!(part(&[2, 2]).c_coeff(1), Rat::zero());
    }

    #[test]
    fn c_coeff_on_hooks() {
        for d in 1..=9u32 {
            for k in 0..d {
                for m in 1..=d {
                    let expect = binom(d as i64 - 1, m as i64 - 1) * binom(m as i64 - 1, k as i64);
                    assert_eq!(Partition::hook(k, d).c_coeff(m), Rat::from(expect));
                }
            }
        }
    }

    #[test]
    fn hooks_and_thetas() {
        assert_eq!(Partition::hook(2, 5), part(&[3, 1, 1]));
        assert_eq!(Partition::theta(5, 5), part(&[5]));
        assert_eq!(Partition::theta(1, 4), Partition::identity(4));
        assert_eq!(part(&[3, 1, 1]).hook_leg(), Some(2));
        assert_eq!(part(&[2, 2]).hook_leg(), None);
        assert_eq!(part(&[3, 1]).conjugate(), part(&[2, 1, 1]));
        assert_eq!(part(&[2]).pad_to(4), Some(part(&[2, 1, 1])));
        assert_eq!(part(&[3]).pad_to(2), None);
    }
}
