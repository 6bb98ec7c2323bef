//! Sparse truncated multivariate power series over [`Rat`].
//!
//! Every variable carries its own exponent cap. Products keep the smaller cap
//! of the two operands per variable, so a coefficient that was never computed
//! can never be read back as a silent zero: [`TruncSeries::coeff`] refuses any
//! exponent past a cap.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{HurwitzError, Result};
use crate::exact_arith::Rat;

#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries {
    vars: Vec<String>,
    caps: Vec<u32>,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl TruncSeries {
    pub fn zero(vars: &[&str], caps: &[u32]) -> TruncSeries {
        assert_eq!(vars.len(), caps.len(), "one cap per variable");
        TruncSeries {
            vars: vars.iter().map(|v| v.to_string()).collect(),
            caps: caps.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], caps: &[u32], c: Rat) -> TruncSeries {
        let mut s = TruncSeries::zero(vars, caps);
        s.add_term(vec![0; vars.len()], c);
        s
    }

    /// `c · var^e`, dropped if `e` exceeds that variable's cap.
    pub fn monomial(vars: &[&str], caps: &[u32], exps: &[u32], c: Rat) -> TruncSeries {
        let mut s = TruncSeries::zero(vars, caps);
        s.add_term(exps.to_vec(), c);
        s
    }

    pub fn var(vars: &[&str], caps: &[u32], name: &str) -> TruncSeries {
        let idx = vars
            .iter()
            .position(|v| *v == name)
            .unwrap_or_else(|| panic!("unknown variable {name}"));
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        TruncSeries::monomial(vars, caps, &e, Rat::one())
    }

    /// Univariate series from a dense coefficient list `c[0] + c[1] v + ...`.
    pub fn univariate(var: &str, cap: u32, coeffs: &[Rat]) -> TruncSeries {
        let mut s = TruncSeries::zero(&[var], &[cap]);
        for (i, c) in coeffs.iter().enumerate() {
            s.add_term(vec![i as u32], c.clone());
        }
        s
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn caps(&self) -> &[u32] {
        &self.caps
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    fn within_caps(&self, exps: &[u32]) -> bool {
        exps.iter().zip(&self.caps).all(|(e, c)| e <= c)
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Rat) {
        if c.is_zero() || !self.within_caps(&exps) {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    /// Coefficient of the monomial with exponents `exps`.
    pub fn coeff(&self, exps: &[u32]) -> Result<Rat> {
        if exps.len() != self.vars.len() || !self.within_caps(exps) {
            return Err(HurwitzError::SeriesCapExceeded {
                exps: exps.to_vec(),
                caps: self.caps.clone(),
            });
        }
        Ok(self.terms.get(exps).cloned().unwrap_or_else(Rat::zero))
    }

    pub fn constant_term(&self) -> Rat {
        self.terms
            .get(&vec![0; self.vars.len()])
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    /// Collect the coefficient of `var^e` as a series in the remaining variables.
    pub fn extract(&self, name: &str, e: u32) -> Result<TruncSeries> {
        let idx = self
            .var_index(name)
            .ok_or_else(|| HurwitzError::InvalidArgument(format!("no variable {name}")))?;
        if e > self.caps[idx] {
            let mut exps = vec![0; self.vars.len()];
            exps[idx] = e;
            return Err(HurwitzError::SeriesCapExceeded {
                exps,
                caps: self.caps.clone(),
            });
        }
        let vars: Vec<&str> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != idx)
            .map(|(_, v)| v.as_str())
            .collect();
        let caps: Vec<u32> = self
            .caps
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != idx)
            .map(|(_, c)| *c)
            .collect();
        let mut out = TruncSeries::zero(&vars, &caps);
        for (k, v) in &self.terms {
            if k[idx] == e {
                let mut rest = k.clone();
                rest.remove(idx);
                out.terms.insert(rest, v.clone());
            }
        }
        Ok(out)
    }

    fn check_compatible(&self, other: &TruncSeries) {
        assert_eq!(self.vars, other.vars, "series over different variables");
    }

    fn min_caps(&self, other: &TruncSeries) -> Vec<u32> {
        self.caps
            .iter()
            .zip(&other.caps)
            .map(|(a, b)| *a.min(b))
            .collect()
    }

    fn empty_like(&self, caps: Vec<u32>) -> TruncSeries {
        TruncSeries {
            vars: self.vars.clone(),
            caps,
            terms: BTreeMap::new(),
        }
    }

    pub fn add(&self, other: &TruncSeries) -> TruncSeries {
        self.check_compatible(other);
        let mut out = self.empty_like(self.min_caps(other));
        for (k, v) in self.terms.iter().chain(other.terms.iter()) {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &TruncSeries) -> TruncSeries {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, c: &Rat) -> TruncSeries {
        let mut out = self.empty_like(self.caps.clone());
        if c.is_zero() {
            return out;
        }
        for (k, v) in &self.terms {
            out.terms.insert(k.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &TruncSeries) -> TruncSeries {
        self.check_compatible(other);
        let mut out = self.empty_like(self.min_caps(other));
        for (ka, va) in &self.terms {
            for (kb, vb) in &other.terms {
                let e: Vec<u32> = ka.iter().zip(kb).map(|(a, b)| a + b).collect();
                if out.within_caps(&e) {
                    out.add_term(e, va * vb);
                }
            }
        }
        out
    }

    /// Upper bound on how many factors of a series without constant term can
    /// survive truncation.
    fn nilpotency_bound(&self) -> u32 {
        self.caps.iter().sum::<u32>() + 1
    }

    fn without_constant(&self) -> TruncSeries {
        let mut g = self.clone();
        g.terms.remove(&vec![0; self.vars.len()]);
        g
    }

    /// `∑_k c_k g^k` for a series `g` without constant term.
    fn compose_nilpotent(g: &TruncSeries, coeff: impl Fn(u32) -> Rat) -> TruncSeries {
        let one = TruncSeries::constant(
            &g.vars.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
            &g.caps,
            Rat::one(),
        );
        let mut out = one.scale(&coeff(0));
        let mut power = one;
        for k in 1..=g.nilpotency_bound() {
            power = power.mul(g);
            if power.is_zero() {
                break;
            }
            let c = coeff(k);
            if !c.is_zero() {
                out = out.add(&power.scale(&c));
            }
        }
        out
    }

    /// `exp(f)`; the constant term of `f` must vanish.
    pub fn exp(&self) -> Result<TruncSeries> {
        if !self.constant_term().is_zero() {
            return Err(HurwitzError::InvalidArgument(
                "exp of a series with nonzero constant term".into(),
            ));
        }
        let mut fact = vec![Rat::one()];
        for k in 1..=self.nilpotency_bound() {
            let next = &fact[k as usize - 1] * Rat::from(k);
            fact.push(next);
        }
        Ok(TruncSeries::compose_nilpotent(self, |k| {
            fact[k as usize].recip()
        }))
    }

    /// `log(f)`; the constant term of `f` must be 1.
    pub fn log(&self) -> Result<TruncSeries> {
        if !self.constant_term().is_one() {
            return Err(HurwitzError::InvalidArgument(
                "log of a series whose constant term is not 1".into(),
            ));
        }
        let g = self.without_constant();
        Ok(TruncSeries::compose_nilpotent(&g, |k| {
            if k == 0 {
                Rat::zero()
            } else {
                let sign = if k % 2 == 1 { 1 } else { -1 };
                Rat::new(sign, k)
            }
        }))
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn recip(&self) -> Result<TruncSeries> {
        let c = self.constant_term();
        if c.is_zero() {
            return Err(HurwitzError::InvalidArgument(
                "reciprocal of a series with zero constant term".into(),
            ));
        }
        let cinv = c.recip();
        // 1/f = (1/c) · 1/(1 + g) with g = f/c - 1
        let g = self.without_constant().scale(&cinv);
        let inv =
            TruncSeries::compose_nilpotent(
                &g,
                |k| {
                    if k % 2 == 0 {
                        Rat::one()
                    } else {
                        -Rat::one()
                    }
                },
            );
        Ok(inv.scale(&cinv))
    }

    pub fn pow(&self, n: u32) -> TruncSeries {
        let mut result = TruncSeries::constant(
            &self.vars.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
            &self.caps,
            Rat::one(),
        );
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        result
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncSeries{:?}{:?} ", self.vars, self.caps)?;
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exp_y(cap: u32) -> TruncSeries {
        TruncSeries::var(&["y"], &[cap], "y").exp().unwrap()
    }

    #[test]
    fn exp_coefficients() {
        let e = exp_y(5);
        assert_eq!(e.coeff(&[4]).unwrap(), Rat::new(1, 24));
        assert!(e.coeff(&[6]).is_err());
    }

    #[test]
    fn log_inverts_exp() {
        let vars = ["a", "b"];
        let caps = [3, 4];
        let f = TruncSeries::var(&vars, &caps, "a").add(
            &TruncSeries::var(&vars, &caps, "b")
                .pow(2)
                .scale(&Rat::new(-2, 3)),
        );
        assert_eq!(f.exp().unwrap().log().unwrap(), f);
    }

    #[test]
    fn recip_of_geometric() {
        let one = TruncSeries::constant(&["y"], &[6], Rat::one());
        let f = one.sub(&TruncSeries::var(&["y"], &[6], "y"));
        let r = f.recip().unwrap();
        for k in 0..=6 {
            assert_eq!(r.coeff(&[k]).unwrap(), Rat::one());
        }
    }

    #[test]
    fn product_takes_smaller_cap() {
        let a = TruncSeries::constant(&["y"], &[3], Rat::one());
        let b = TruncSeries::constant(&["y"], &[7], Rat::one());
        assert_eq!(a.mul(&b).caps(), &[3]);
        assert!(a.mul(&b).coeff(&[5]).is_err());
    }

    #[test]
    fn extract_drops_variable() {
        let vars = ["t", "z"];
        let caps = [2, 2];
        let f = TruncSeries::monomial(&vars, &caps, &[1, 2], Rat::from(5));
        let g = f.extract("z", 2).unwrap();
        assert_eq!(g.vars(), &["t".to_string()]);
        assert_eq!(g.coeff(&[1]).unwrap(), Rat::from(5));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        const VARS: [&str; 2] = ["u", "v"];
        const CAPS: [u32; 2] = [3, 2];

        fn series() -> impl Strategy<Value = TruncSeries> {
            proptest::collection::vec(((0u32..=3, 0u32..=2), -20i64..20, 1i64..6), 0..6).prop_map(
                |terms| {
                    let mut s = TruncSeries::zero(&VARS, &CAPS);
                    for ((a, b), p, q) in terms {
                        s = s.add(&TruncSeries::monomial(
                            &VARS,
                            &CAPS,
                            &[a, b],
                            Rat::new(p, q),
                        ));
                    }
                    s
                },
            )
        }

        proptest! {
            #[test]
            fn mul_commutes(a in series(), b in series()) {
                prop_assert_eq!(a.mul(&b), b.mul(&a));
            }

            #[test]
            fn mul_associates(a in series(), b in series(), c in series()) {
                prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            }

            #[test]
            fn recip_is_inverse(a in series(), c in 1i64..9) {
                let f = a.without_constant().add(&TruncSeries::constant(&VARS, &CAPS, Rat::from(c)));
                let one = TruncSeries::constant(&VARS, &CAPS, Rat::one());
                prop_assert_eq!(f.mul(&f.recip().unwrap()), one);
            }
        }
    }
}
