//! Walking the Seifert Surgery Network by twisting along the seiferters `c_a`, `c_b`
//! and along the annular pair `(c_a, c_b)`.
//!
//! A vertex records the surgery slope together with the linking numbers that drive
//! every slope change: `lk(K, c_a)`, `lk(K, c_b)` and `lk(c_a, c_b)`.
//!
//! Linking numbers are signed with fixed initial orientations. A unit twist pair
//! `(-1 along c_a, +1 along c_b)` and one annular twist reach the same slope but with
//! `(lk_a, lk_b)` negated, so compare linking numbers up to a simultaneous sign flip.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactfrac::ExtFrac;
use crate::family::FamilyParams;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SurgeryVertex {
    pub slope: BigInt,
    pub lk_a: BigInt,
    pub lk_b: BigInt,
    pub lk_ab: BigInt,
}

impl SurgeryVertex {
    pub fn new(
        slope: impl Into<BigInt>,
        lk_a: impl Into<BigInt>,
        lk_b: impl Into<BigInt>,
        lk_ab: impl Into<BigInt>,
    ) -> Self {
        SurgeryVertex { slope: slope.into(), lk_a: lk_a.into(), lk_b: lk_b.into(), lk_ab: lk_ab.into() }
    }

    /// `(T(3,2), l + 5)` with `lk(K, c_a) = l + 4`, `lk(K, c_b) = 2`, `lk(c_a, c_b) = 2`.
    pub fn trefoil(l: i64) -> Self {
        SurgeryVertex::new(l + 5, l + 4, 2, 2)
    }

    /// Equal slopes and `lk_ab`, with `(lk_a, lk_b)` equal or both negated.
    pub fn same_up_to_orientation(&self, other: &SurgeryVertex) -> bool {
        self.slope == other.slope
            && self.lk_ab == other.lk_ab
            && ((self.lk_a == other.lk_a && self.lk_b == other.lk_b)
                || (self.lk_a == -&other.lk_a && self.lk_b == -&other.lk_b))
    }
}

impl fmt::Display for SurgeryVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "slope {}, lk(K,c_a) = {}, lk(K,c_b) = {}, lk(c_a,c_b) = {}",
            self.slope, self.lk_a, self.lk_b, self.lk_ab
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Seiferter {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TwistTarget {
    SeiferterA,
    SeiferterB,
    AnnularPair,
}

/// One edge of a path: `count`-twist along `target`. `count` is never zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TwistStep {
    target: TwistTarget,
    count: i64,
}

impl TwistStep {
    pub fn new(target: TwistTarget, count: i64) -> Result<Self> {
        if count == 0 {
            return Err(Error::ZeroTwist);
        }
        Ok(TwistStep { target, count })
    }

    pub fn target(&self) -> TwistTarget {
        self.target
    }

    pub fn count(&self) -> i64 {
        self.count
    }

    fn a(count: i64) -> Self {
        TwistStep { target: TwistTarget::SeiferterA, count }
    }

    fn b(count: i64) -> Self {
        TwistStep { target: TwistTarget::SeiferterB, count }
    }

    pub fn apply(&self, v: &SurgeryVertex) -> SurgeryVertex {
        match self.target {
            TwistTarget::SeiferterA => twist_seiferter(v, Seiferter::A, self.count),
            TwistTarget::SeiferterB => twist_seiferter(v, Seiferter::B, self.count),
            TwistTarget::AnnularPair => annular_twist(v, self.count),
        }
    }
}

impl fmt::Display for TwistStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let target = match self.target {
            TwistTarget::SeiferterA => "A",
            TwistTarget::SeiferterB => "B",
            TwistTarget::AnnularPair => "AB",
        };
        write!(f, "{target}:{:+}", self.count)
    }
}

/// `t`-twist along one seiferter `c`: the slope gains `t·lk(K, c)²`, and the other
/// seiferter's linking number with `K` gains `t·lk(K, c)·lk(c_a, c_b)`.
pub fn twist_seiferter(v: &SurgeryVertex, which: Seiferter, t: i64) -> SurgeryVertex {
    let t = BigInt::from(t);
    let mut out = v.clone();
    match which {
        Seiferter::A => {
            out.slope += &t * &v.lk_a * &v.lk_a;
            out.lk_b += &t * &v.lk_a * &v.lk_ab;
        }
        Seiferter::B => {
            out.slope += &t * &v.lk_b * &v.lk_b;
            out.lk_a += &t * &v.lk_b * &v.lk_ab;
        }
    }
    out
}

/// `n`-twist along the annular pair `(c_a, c_b)`:
///
/// * slope gains `n(lk_a² - lk_b²) + 2n²(lk_a - lk_b)²`,
/// * both `lk_a` and `lk_b` gain `2n(lk_a - lk_b)`.
pub fn annular_twist(v: &SurgeryVertex, n: i64) -> SurgeryVertex {
    let n = BigInt::from(n);
    let d = &v.lk_a - &v.lk_b;
    let shift = 2 * &n * &d;
    SurgeryVertex {
        slope: &v.slope + &n * (&v.lk_a * &v.lk_a - &v.lk_b * &v.lk_b) + 2 * &n * &n * &d * &d,
        lk_a: &v.lk_a + &shift,
        lk_b: &v.lk_b + &shift,
        lk_ab: v.lk_ab.clone(),
    }
}

/// Unit steps realising `n` annular twists: `[A:-1, B:+1]` repeated `n` times, or
/// the inverse pair `[B:-1, A:+1]` repeated `|n|` times when `n < 0`.
pub fn unit_twist_steps(n: i64) -> Vec<TwistStep> {
    let pair = if n >= 0 {
        [TwistStep::a(-1), TwistStep::b(1)]
    } else {
        [TwistStep::b(-1), TwistStep::a(1)]
    };
    (0..n.unsigned_abs()).flat_map(|_| pair).collect()
}

/// Twists from `(T(3,2), l + 5)` to `(K(l,m,n,p), γ)`: the alternating unit steps for
/// `n`, then `-m` along `c_a` (when `p = 0`) or `-p` along `c_b` (when `m = 0`).
pub fn path_from_trefoil(params: &FamilyParams) -> Result<Vec<TwistStep>> {
    let FamilyParams { m, n, p, .. } = *params;
    if m != 0 && p != 0 {
        return Err(Error::MpConstraint { m, p });
    }
    let mut steps = unit_twist_steps(n);
    if m != 0 {
        steps.push(TwistStep::a(-m));
    } else if p != 0 {
        steps.push(TwistStep::b(-p));
    }
    Ok(steps)
}

pub fn realize_path(start: &SurgeryVertex, steps: &[TwistStep]) -> SurgeryVertex {
    steps.iter().fold(start.clone(), |v, step| step.apply(&v))
}

/// Every vertex visited, starting with `start`.
pub fn realize_path_trace(start: &SurgeryVertex, steps: &[TwistStep]) -> Vec<SurgeryVertex> {
    let mut trace = Vec::with_capacity(steps.len() + 1);
    trace.push(start.clone());
    for step in steps {
        let next = step.apply(trace.last().expect("non-empty"));
        trace.push(next);
    }
    trace
}

/// Surgery coefficients `(-1/p + lk, 1/p + lk)` on `(c_1, c_2)` for a `p`-twist along
/// an annular pair with `lk(c_1, c_2) = lk`.
pub fn annular_surgery_coeffs(p: i64, lk: i64) -> Result<(ExtFrac, ExtFrac)> {
    if p == 0 {
        return Err(Error::ZeroTwist);
    }
    let lk = ExtFrac::integer(lk);
    let inv = ExtFrac::new(1, p)?;
    Ok(((-&inv).checked_add(&lk)?, inv.checked_add(&lk)?))
}

/// Simultaneous surgery coefficients on `(c_1, c_2)` equivalent to a `t1`-twist along
/// `c_1` followed by a `t2`-twist along `c_2`, in the original framings.
///
/// The first twist shifts the framing of `c_2` by `t1·lk²`, so the `-1/t2` surgery
/// on `c_2` reads `-1/t2 - t1·lk²` in the old coordinates.
pub fn compose_two_twists(t1: i64, t2: i64, lk: i64) -> Result<(ExtFrac, ExtFrac)> {
    if t1 == 0 || t2 == 0 {
        return Err(Error::ZeroTwist);
    }
    let shift = BigInt::from(t1) * BigInt::from(lk) * BigInt::from(lk);
    let first = -ExtFrac::new(1, t1)?;
    let second = (-ExtFrac::new(1, t2)?).checked_sub(&ExtFrac::integer(shift))?;
    Ok((first, second))
}
