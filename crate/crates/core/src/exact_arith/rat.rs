//! Arbitrary-precision exact rationals.
//!
//! [`Rat`] is a thin newtype over [`num_rational::BigRational`]. It is always
//! kept in lowest terms with a positive denominator, and its text form is the
//! fixed `"p/q"` layout used by every JSON and CSV emitter in this crate
//! (`"3/1"`, never `"3"`; `"-7/5760"`, never a decimal).

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::HurwitzError;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Rat {
        let denom = denom.into();
        assert!(!denom.is_zero(), "zero denominator");
        Rat(BigRational::new(numer.into(), denom))
    }

    pub fn from_int(n: impl Into<BigInt>) -> Rat {
        Rat(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Rat {
        Rat(BigRational::zero())
    }

    pub fn one() -> Rat {
        Rat(BigRational::one())
    }

    pub fn half() -> Rat {
        Rat::new(1, 2)
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Rat {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rat(self.0.recip())
    }

    pub fn pow(&self, exp: u32) -> Rat {
        Rat(num_traits::pow(self.0.clone(), exp as usize))
    }

    /// Integer power allowing negative exponents (base must be nonzero then).
    pub fn powi(&self, exp: i32) -> Rat {
        if exp >= 0 {
            self.pow(exp as u32)
        } else {
            self.recip().pow(exp.unsigned_abs())
        }
    }

    /// The integer value if this rational is integral.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.to_integer())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|n| n.to_i64())
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rat {
    type Err = HurwitzError;

    /// Accepts `"p/q"` or a bare integer `"p"`.
    fn from_str(s: &str) -> Result<Rat, HurwitzError> {
        let bad = || HurwitzError::Parse(format!("not a rational: {s:?}"));
        let s = s.trim();
        match s.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().map_err(|_| bad())?;
                let q: BigInt = q.trim().parse().map_err(|_| bad())?;
                if q.is_zero() {
                    return Err(bad());
                }
                Ok(Rat::new(p, q))
            }
            None => Ok(Rat::from_int(s.parse::<BigInt>().map_err(|_| bad())?)),
        }
    }
}

macro_rules! from_ints {
    ($($t:ty),*) => {$(
        impl From<$t> for Rat {
            fn from(n: $t) -> Rat {
                Rat::from_int(n)
            }
        }
    )*};
}
from_ints!(i32, i64, u32, u64, usize, i128, u128);

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Rat {
        Rat::from_int(n)
    }
}

impl From<BigRational> for Rat {
    fn from(r: BigRational) -> Rat {
        Rat(r)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $atr:ident, $amethod:ident) => {
        impl $tr<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0.$method(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat(self.0.$method(&rhs.0))
            }
        }
        impl<'a> $tr<Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $tr<&'b Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &'b Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl $atr<Rat> for Rat {
            fn $amethod(&mut self, rhs: Rat) {
                self.0.$amethod(rhs.0);
            }
        }
        impl<'a> $atr<&'a Rat> for Rat {
            fn $amethod(&mut self, rhs: &'a Rat) {
                self.0.$amethod(&rhs.0);
            }
        }
    };
}
binop!(Add, add, AddAssign, add_assign);
binop!(Sub, sub, SubAssign, sub_assign);
binop!(Mul, mul, MulAssign, mul_assign);
binop!(Div, div, DivAssign, div_assign);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Zero for Rat {
    fn zero() -> Rat {
        Rat::zero()
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Rat {
    fn one() -> Rat {
        Rat::one()
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rat> for Rat {
    fn sum<I: Iterator<Item = &'a Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

impl Product for Rat {
    fn product<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::one(), |acc, x| acc * x)
    }
}
