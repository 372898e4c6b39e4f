//! Rational tangles and the homology of their branched double covers.
//!
//! Orientation convention: on the boundary torus of the solid torus covering
//! `R(∞)`, `[μ_∞]·[λ] = +1`. Every sign below is relative to that choice.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exactfrac::{cf_eval, cf_expand, ExtFrac};

/// A rational tangle `R(a_1, ..., a_n)`, `a_1` innermost.
///
/// Two tangles are equal iff their fractions are equal; the twist sequence is kept
/// only for printing.
#[derive(Clone, Debug)]
pub struct RationalTangle {
    seq: Vec<BigInt>,
    fraction: ExtFrac,
}

impl RationalTangle {
    pub fn new<I, T>(seq: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let seq: Vec<BigInt> = seq.into_iter().map(Into::into).collect();
        let fraction = cf_eval(seq.iter().cloned())?;
        Ok(RationalTangle { seq, fraction })
    }

    /// The tangle `R(r)` with the canonical twist sequence of [`cf_expand`].
    /// `R(∞)` is written `R(0, 0)`.
    pub fn from_fraction(r: &ExtFrac) -> Self {
        let seq = match r {
            ExtFrac::Infinity => vec![BigInt::from(0), BigInt::from(0)],
            finite => cf_expand(finite).expect("finite fraction"),
        };
        RationalTangle { seq, fraction: r.clone() }
    }

    pub fn seq(&self) -> &[BigInt] {
        &self.seq
    }

    pub fn fraction(&self) -> &ExtFrac {
        &self.fraction
    }

    /// Lift of a meridian of this tangle to the boundary of the covering solid torus.
    pub fn meridian_lift(&self) -> HomologyClass {
        meridian_lift(&self.fraction)
    }
}

impl PartialEq for RationalTangle {
    fn eq(&self, other: &Self) -> bool {
        self.fraction == other.fraction
    }
}

impl Eq for RationalTangle {}

impl fmt::Display for RationalTangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("R(")?;
        for (i, a) in self.seq.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ") = {}", self.fraction)
    }
}

/// `mu·[μ_∞] + lambda·[λ]` in `H_1` of the boundary torus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomologyClass {
    pub mu: BigInt,
    pub lambda: BigInt,
}

impl HomologyClass {
    pub fn new(mu: impl Into<BigInt>, lambda: impl Into<BigInt>) -> Self {
        HomologyClass { mu: mu.into(), lambda: lambda.into() }
    }

    /// Algebraic intersection number, using `[μ_∞]·[λ] = 1`.
    pub fn intersection(&self, other: &HomologyClass) -> BigInt {
        &self.mu * &other.lambda - &self.lambda * &other.mu
    }

    pub fn is_primitive(&self) -> bool {
        self.mu.gcd(&self.lambda).is_one()
    }

    pub fn negated(&self) -> HomologyClass {
        HomologyClass { mu: -&self.mu, lambda: -&self.lambda }
    }
}

impl fmt::Display for HomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[mu_inf] + {}[lambda]", self.mu, self.lambda)
    }
}

/// `[μ_r] = -p[μ_∞] + q[λ]` for `r = p/q` reduced; `∞ = 1/0` lifts to `-[μ_∞]`.
pub fn meridian_lift(r: &ExtFrac) -> HomologyClass {
    HomologyClass { mu: -r.numer(), lambda: r.denom() }
}

/// Covering slope `n - s` of `s`-untangle surgery, where the latitude of `R(∞)`
/// lifts to the `n`-framing of the covering knot.
pub fn covering_slope(framing: impl Into<BigInt>, s: &ExtFrac) -> Result<ExtFrac> {
    if s.is_infinite() {
        return Err(Error::InfiniteArgument("covering_slope"));
    }
    ExtFrac::integer(framing).checked_sub(s)
}

/// Distance between two slopes: `|p q' - q p'|`.
pub fn slope_distance(r: &ExtFrac, s: &ExtFrac) -> BigInt {
    meridian_lift(r).intersection(&meridian_lift(s)).abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn frac(n: i64, d: i64) -> ExtFrac {
        ExtFrac::new(n, d).unwrap()
    }

    #[test]
    fn meridian_lifts() {
        assert_eq!(meridian_lift(&ExtFrac::Infinity), HomologyClass::new(-1, 0));
        assert_eq!(meridian_lift(&ExtFrac::zero()), HomologyClass::new(0, 1));
        assert_eq!(meridian_lift(&frac(1, 1)), HomologyClass::new(-1, 1));
        assert_eq!(meridian_lift(&frac(-2, 7)), HomologyClass::new(2, 7));
    }

    #[test]
    fn covering_slopes() {
        for l in -30i64..=30 {
            assert_eq!(
                covering_slope(l + 6, &ExtFrac::integer(1)).unwrap(),
                ExtFrac::integer(l + 5)
            );
        }
        assert_eq!(covering_slope(7, &ExtFrac::zero()).unwrap(), ExtFrac::integer(7));
        assert_eq!(covering_slope(0, &frac(1, 2)).unwrap(), frac(-1, 2));
        assert_eq!(
            covering_slope(3, &ExtFrac::Infinity),
            Err(Error::InfiniteArgument("covering_slope"))
        );
    }

    #[test]
    fn tangle_equivalence_is_by_fraction() {
        let a = RationalTangle::new([-1, -1, -3, 0]).unwrap();
        let b = RationalTangle::from_fraction(&frac(-2, 7));
        assert_eq!(a, b);
        assert_ne!(a.seq(), b.seq());
        assert_eq!(a.meridian_lift(), HomologyClass::new(2, 7));
        assert_eq!(RationalTangle::from_fraction(&ExtFrac::Infinity).fraction(), &ExtFrac::Infinity);
        assert_eq!(
            RationalTangle::new([0, 0]).unwrap(),
            RationalTangle::from_fraction(&ExtFrac::Infinity)
        );
    }

    #[test]
    fn display() {
        let t = RationalTangle::new([2, 0]).unwrap();
        assert_eq!(t.to_string(), "R(2, 0) = 1/2");
    }

    #[test]
    fn distance_between_zero_and_infinity_is_one() {
        assert_eq!(slope_distance(&ExtFrac::zero(), &ExtFrac::Infinity), BigInt::from(1));
        assert_eq!(slope_distance(&frac(1, 2), &frac(1, 2)), BigInt::from(0));
    }

    proptest! {
        #[test]
        fn lifts_are_primitive(p in -500i64..=500, q in -500i64..=500) {
            prop_assume!(p != 0 || q != 0);
            prop_assert!(meridian_lift(&frac(p, q)).is_primitive());
        }

        #[test]
        fn lifts_determine_the_fraction(
            p1 in -40i64..=40, q1 in -40i64..=40, p2 in -40i64..=40, q2 in -40i64..=40,
        ) {
            prop_assume!((p1 != 0 || q1 != 0) && (p2 != 0 || q2 != 0));
            let (r, s) = (frac(p1, q1), frac(p2, q2));
            let (a, b) = (meridian_lift(&r), meridian_lift(&s));
            let same_up_to_sign = a == b || a == b.negated();
            prop_assert_eq!(same_up_to_sign, r == s);
        }

        #[test]
        fn slope_differences_ignore_framing(
            n in -100i64..=100, p1 in -40i64..=40, q1 in 1i64..=40, p2 in -40i64..=40, q2 in 1i64..=40,
        ) {
            let (s1, s2) = (frac(p1, q1), frac(p2, q2));
            let lhs = covering_slope(n, &s1).unwrap().checked_sub(&covering_slope(n, &s2).unwrap()).unwrap();
            prop_assert_eq!(lhs, s2.checked_sub(&s1).unwrap());
        }
    }
}
