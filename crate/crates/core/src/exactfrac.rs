//! Exact rationals extended by a single point at infinity.
//!
//! `ExtFrac` is the value type for tangle fractions, slot fractions and slopes.
//! Finite values are reduced with a positive denominator, so structural equality
//! is value equality. `∞` is the unique value with denominator zero and prints as
//! `1/0`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtFrac {
    Finite(BigRational),
    Infinity,
}

impl ExtFrac {
    /// Builds `num/den`, reducing and moving the sign onto the numerator.
    /// A zero denominator with nonzero numerator gives `∞`.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let (num, den) = (num.into(), den.into());
        match (num.is_zero(), den.is_zero()) {
            (true, true) => Err(Error::ZeroOverZero),
            (false, true) => Ok(ExtFrac::Infinity),
            _ => Ok(ExtFrac::Finite(BigRational::new(num, den))),
        }
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        ExtFrac::Finite(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        ExtFrac::integer(0)
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtFrac::Infinity)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtFrac::Finite(r) if r.is_zero())
    }

    pub fn is_integer(&self) -> bool {
        matches!(self, ExtFrac::Finite(r) if r.is_integer())
    }

    /// Numerator of the reduced form; `1` for `∞`.
    pub fn numer(&self) -> BigInt {
        match self {
            ExtFrac::Finite(r) => r.numer().clone(),
            ExtFrac::Infinity => BigInt::one(),
        }
    }

    /// Denominator of the reduced form, always `>= 0`; `0` for `∞`.
    pub fn denom(&self) -> BigInt {
        match self {
            ExtFrac::Finite(r) => r.denom().clone(),
            ExtFrac::Infinity => BigInt::zero(),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            ExtFrac::Finite(r) => Some(r),
            ExtFrac::Infinity => None,
        }
    }

    /// `x + ∞ = ∞` for finite `x`; `∞ + ∞` is an error.
    pub fn checked_add(&self, other: &ExtFrac) -> Result<ExtFrac> {
        match (self, other) {
            (ExtFrac::Finite(a), ExtFrac::Finite(b)) => Ok(ExtFrac::Finite(a + b)),
            (ExtFrac::Infinity, ExtFrac::Infinity) => Err(Error::InfinitePlusInfinite),
            _ => Ok(ExtFrac::Infinity),
        }
    }

    pub fn checked_sub(&self, other: &ExtFrac) -> Result<ExtFrac> {
        self.checked_add(&-other)
    }

    /// `1/x`, with `1/0 = ∞` and `1/∞ = 0`.
    pub fn invert(&self) -> ExtFrac {
        match self {
            ExtFrac::Infinity => ExtFrac::zero(),
            ExtFrac::Finite(r) if r.is_zero() => ExtFrac::Infinity,
            ExtFrac::Finite(r) => ExtFrac::Finite(r.recip()),
        }
    }

    /// Largest integer `<= self`. `None` at `∞`.
    pub fn floor(&self) -> Option<BigInt> {
        self.as_rational().map(|r| r.floor().to_integer())
    }
}

impl Neg for ExtFrac {
    type Output = ExtFrac;

    /// `-∞ = ∞`: there is only one point at infinity.
    fn neg(self) -> ExtFrac {
        match self {
            ExtFrac::Finite(r) => ExtFrac::Finite(-r),
            ExtFrac::Infinity => ExtFrac::Infinity,
        }
    }
}

impl Neg for &ExtFrac {
    type Output = ExtFrac;

    fn neg(self) -> ExtFrac {
        -self.clone()
    }
}

impl From<BigRational> for ExtFrac {
    fn from(r: BigRational) -> Self {
        ExtFrac::Finite(r)
    }
}

impl From<i64> for ExtFrac {
    fn from(n: i64) -> Self {
        ExtFrac::integer(n)
    }
}

impl PartialOrd for ExtFrac {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order with `∞` placed above every finite value. Used only for sorting.
impl Ord for ExtFrac {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtFrac::Finite(a), ExtFrac::Finite(b)) => a.cmp(b),
            (ExtFrac::Finite(_), ExtFrac::Infinity) => Ordering::Less,
            (ExtFrac::Infinity, ExtFrac::Finite(_)) => Ordering::Greater,
            (ExtFrac::Infinity, ExtFrac::Infinity) => Ordering::Equal,
        }
    }
}

impl fmt::Display for ExtFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtFrac::Finite(r) if r.is_integer() => write!(f, "{}", r.numer()),
            ExtFrac::Finite(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            ExtFrac::Infinity => f.write_str("1/0"),
        }
    }
}

/// Evaluates `a_n + 1/(a_{n-1} + 1/(... + 1/(a_2 + 1/a_1)))`, innermost entry first.
///
/// Zero intermediates are legal: `1/0 = ∞` and `a + ∞ = ∞`, so a `0` entry followed
/// by anything collapses cleanly (this is how the trailing horizontal twist `0` and
/// interior zero twists behave).
pub fn cf_eval<I, T>(seq: I) -> Result<ExtFrac>
where
    I: IntoIterator<Item = T>,
    T: Into<BigInt>,
{
    let mut entries = seq.into_iter().map(Into::into);
    let mut acc = ExtFrac::integer(entries.next().ok_or(Error::EmptySequence)?);
    for a in entries {
        // acc.invert() is never ∞ when acc is ∞, so the ∞ + ∞ branch cannot fire.
        acc = ExtFrac::integer(a).checked_add(&acc.invert())?;
    }
    Ok(acc)
}

/// Canonical twist sequence for `r`, innermost entry first.
///
/// This is the plain Euclidean expansion `r = b_0 + 1/(b_1 + 1/(... + 1/b_k))` with
/// floor quotients, written in reverse (`a_1 = b_k`, ..., `a_n = b_0`). For `0 < r < 1`
/// the outermost entry is the trailing `0`, e.g. `1/2 -> [2, 0]`. Integers expand to a
/// single entry.
pub fn cf_expand(r: &ExtFrac) -> Result<Vec<BigInt>> {
    let r = r.as_rational().ok_or(Error::InfiniteArgument("cf_expand"))?;
    let (mut num, mut den) = (r.numer().clone(), r.denom().clone());
    let mut quotients = Vec::new();
    loop {
        let (q, rem) = num.div_mod_floor(&den);
        quotients.push(q);
        if rem.is_zero() {
            break;
        }
        num = den;
        den = rem;
        debug_assert!(den.is_positive());
    }
    quotients.reverse();
    Ok(quotients)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frac(n: i64, d: i64) -> ExtFrac {
        ExtFrac::new(n, d).unwrap()
    }

    #[test]
    fn construction_normalizes_sign_and_infinity() {
        assert_eq!(frac(-4, -5), frac(4, 5));
        assert_eq!(frac(3, -6).numer(), BigInt::from(-1));
        assert_eq!(frac(3, -6).denom(), BigInt::from(2));
        assert_eq!(frac(-7, 0), ExtFrac::Infinity);
        assert_eq!(ExtFrac::Infinity.numer(), BigInt::from(1));
        assert_eq!(ExtFrac::Infinity.denom(), BigInt::from(0));
        assert_eq!(frac(0, -9).denom(), BigInt::from(1));
        assert_eq!(ExtFrac::new(0, 0), Err(Error::ZeroOverZero));
    }

    #[test]
    fn add() {
        assert_eq!(frac(1, 2).checked_add(&frac(1, 3)).unwrap(), frac(5, 6));
        assert_eq!(ExtFrac::zero().checked_add(&ExtFrac::Infinity).unwrap(), ExtFrac::Infinity);
        assert_eq!(frac(-2, 7).checked_add(&frac(2, 7)).unwrap(), ExtFrac::zero());
        assert_eq!(
            ExtFrac::Infinity.checked_add(&ExtFrac::Infinity),
            Err(Error::InfinitePlusInfinite)
        );
    }

    #[test]
    fn invert() {
        assert_eq!(ExtFrac::zero().invert(), ExtFrac::Infinity);
        assert_eq!(ExtFrac::Infinity.invert(), ExtFrac::zero());
        let inv = frac(-3, 4).invert();
        assert_eq!(inv, frac(-4, 3));
        assert_eq!(inv.numer(), BigInt::from(-4));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(cf_eval([5]).unwrap(), ExtFrac::integer(5));
        assert_eq!(cf_eval([-1, -1, -3, 0]).unwrap(), frac(-2, 7));
        // passes through 1/0 = ∞, -2 + ∞ = ∞ and 1/∞ = 0
        assert_eq!(cf_eval([0, -2, -1, -2, -1, 2, 0]).unwrap(), frac(4, 5));
        assert_eq!(cf_eval([2, 0]).unwrap(), frac(1, 2));
        assert_eq!(cf_eval(Vec::<i64>::new()), Err(Error::EmptySequence));
        assert_eq!(cf_eval([0]).unwrap(), ExtFrac::zero());
        assert_eq!(cf_eval([0, 0]).unwrap(), ExtFrac::Infinity);
    }

    #[test]
    fn expand_examples() {
        let ints = |v: Vec<BigInt>| v.into_iter().map(|b| i64::try_from(b).unwrap()).collect::<Vec<_>>();
        assert_eq!(ints(cf_expand(&ExtFrac::integer(5)).unwrap()), vec![5]);
        assert_eq!(ints(cf_expand(&frac(1, 2)).unwrap()), vec![2, 0]);
        let l = cf_expand(&frac(-2, 7)).unwrap();
        assert_eq!(ints(l.clone()), vec![2, 2, 1, -1]);
        assert_eq!(cf_eval(l).unwrap(), frac(-2, 7));
        assert_eq!(cf_expand(&ExtFrac::Infinity), Err(Error::InfiniteArgument("cf_expand")));
    }

    #[test]
    fn round_trip_box() {
        for p in -200i64..=200 {
            for q in -200i64..=200 {
                if q == 0 {
                    continue;
                }
                let r = frac(p, q);
                assert_eq!(cf_eval(cf_expand(&r).unwrap()).unwrap(), r, "{p}/{q}");
            }
        }
    }

    #[test]
    fn ordering_puts_infinity_last() {
        let mut v = vec![ExtFrac::Infinity, frac(1, 2), frac(-3, 1)];
        v.sort();
        assert_eq!(v, vec![frac(-3, 1), frac(1, 2), ExtFrac::Infinity]);
    }

    #[test]
    fn display() {
        assert_eq!(frac(-4, 6).to_string(), "-2/3");
        assert_eq!(frac(6, 3).to_string(), "2");
        assert_eq!(ExtFrac::Infinity.to_string(), "1/0");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn cf_eval_is_total(seq in prop::collection::vec(-10i64..=10, 1..=12)) {
                let r = cf_eval(seq).unwrap();
                if let ExtFrac::Finite(q) = &r {
                    prop_assert!(q.denom().is_positive());
                }
            }

            #[test]
            fn expand_then_eval_is_identity(p in -100_000i64..=100_000, q in 1i64..=100_000) {
                let r = frac(p, q);
                prop_assert_eq!(cf_eval(cf_expand(&r).unwrap()).unwrap(), r);
            }

            #[test]
            fn addition_matches_cross_multiplication(
                a in -50i64..=50, b in 1i64..=50, c in -50i64..=50, d in 1i64..=50,
            ) {
                let sum = frac(a, b).checked_add(&frac(c, d)).unwrap();
                prop_assert_eq!(sum, frac(a * d + c * b, b * d));
            }
        }
    }
}
