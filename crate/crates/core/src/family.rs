//! The surgery family `(K(l,m,n,p), γ_{l,m,n,p})` with `m = 0` or `p = 0`.
//!
//! Two cases share most formulas:
//!
//! * `p = 0` ("case 1"): tangle `B(l,m,n,0)`, twisting along `c_a`.
//! * `m = 0` ("case 2"): tangle `B(l,0,n,p)`, twisting along `c_b`.
//!
//! When `m = p = 0` both apply and agree; the case-1 formulas and hypothesis lists
//! are used.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactfrac::ExtFrac;
use crate::seifert::{Base, SeifertSpace};
use crate::tangle::RationalTangle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FamilyParams {
    pub l: i64,
    pub m: i64,
    pub n: i64,
    pub p: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Case {
    /// `p = 0`
    TwistA,
    /// `m = 0`, `p != 0`
    TwistB,
}

impl FamilyParams {
    pub fn new(l: i64, m: i64, n: i64, p: i64) -> Result<Self> {
        if m != 0 && p != 0 {
            return Err(Error::MpConstraint { m, p });
        }
        Ok(FamilyParams { l, m, n, p })
    }

    /// No `m·p = 0` check. Only [`surgery_slope`] and the hypothesis predicates are
    /// meaningful for such points.
    pub fn new_unchecked(l: i64, m: i64, n: i64, p: i64) -> Self {
        FamilyParams { l, m, n, p }
    }

    pub fn as_array(&self) -> [i64; 4] {
        [self.l, self.m, self.n, self.p]
    }

    pub fn satisfies_mp_zero(&self) -> bool {
        self.m == 0 || self.p == 0
    }

    pub fn case(&self) -> Case {
        if self.p == 0 {
            Case::TwistA
        } else {
            Case::TwistB
        }
    }

    fn check(&self) -> Result<Case> {
        if self.satisfies_mp_zero() {
            Ok(self.case())
        } else {
            Err(Error::MpConstraint { m: self.m, p: self.p })
        }
    }

    fn big(&self) -> (BigInt, BigInt, BigInt, BigInt) {
        (self.l.into(), self.m.into(), self.n.into(), self.p.into())
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.l, self.m, self.n, self.p)
    }
}

fn closed_form(num: BigInt, den: BigInt, what: &'static str, at: &FamilyParams) -> Result<ExtFrac> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator { what, params: at.to_string() });
    }
    ExtFrac::new(num, den)
}

/// Slot fractions of the Montesinos link `B(l,m,n,p) + R(1)`, in printed order.
pub fn montesinos_fractions(params: &FamilyParams) -> Result<[ExtFrac; 3]> {
    let (l, m, n, p) = params.big();
    let half = ExtFrac::new(1, 2)?;
    match params.check()? {
        Case::TwistA => {
            let num: BigInt = 2 * &l * &m * &n + &l * &m - &l * &n + 2 * &m * &n + 3 * &m - &n - 1;
            let den = 2 * &l * &l * &m * &n + &l * &l * &m - &l * &l * &n + 2 * &l * &m - 2 * &m - &l + 1;
            Ok([
                closed_form(num, den, "Montesinos slot 1", params)?,
                closed_form(-(&n + 1u32), 4 * &n + 3, "Montesinos slot 2", params)?,
                half,
            ])
        }
        Case::TwistB => {
            let num1 = &l * &n + &n + 1;
            let den1 = &l * &l * &n + &l - 1;
            let num2 = -2 * &n * &p + &n - &p + 1;
            let den2 = 8 * &n * &p - 4 * &n + 2 * &p - 3;
            Ok([
                closed_form(num1, den1, "Montesinos slot 1", params)?,
                closed_form(num2, den2, "Montesinos slot 2", params)?,
                half,
            ])
        }
    }
}

/// `K(l,m,n,p)(γ)` as `S²(r_1, r_2, r_3)`.
pub fn surgered_space(params: &FamilyParams) -> Result<SeifertSpace> {
    Ok(SeifertSpace::sphere(montesinos_fractions(params)?.to_vec()))
}

/// Twist sequences of the three rational tangles in `B(l,m,n,p) + R(1)`, innermost
/// entry first.
pub fn tangle_sequences(params: &FamilyParams) -> Result<[Vec<BigInt>; 3]> {
    let (l, m, n, p) = params.big();
    let z = BigInt::zero;
    let third = vec![BigInt::from(2), z()];
    Ok(match params.check()? {
        Case::TwistA => [
            vec![m, BigInt::from(-2), -&n, -&l, BigInt::from(-1), l, z()],
            vec![-n, BigInt::from(-1), BigInt::from(-3), z()],
            third,
        ],
        Case::TwistB => [
            vec![-&n, -&l, BigInt::from(-1), l, z()],
            vec![-p, BigInt::from(2), -n, BigInt::from(-1), BigInt::from(-3), z()],
            third,
        ],
    })
}

pub fn tangles(params: &FamilyParams) -> Result<[RationalTangle; 3]> {
    let [a, b, c] = tangle_sequences(params)?;
    Ok([RationalTangle::new(a)?, RationalTangle::new(b)?, RationalTangle::new(c)?])
}

/// `γ = 5 + l + n(l² + 8l + 12) + 2n²(l + 2)² - m(2nl + 4n + l + 4)² - p(2nl + 4n + 2)²`.
///
/// Defined for every integer point; it is a surgery slope only when `m·p = 0`.
pub fn surgery_slope(params: &FamilyParams) -> BigInt {
    let (l, m, n, p) = params.big();
    let lk_a = 2 * &n * &l + 4 * &n + &l + 4;
    let lk_b = 2 * &n * &l + 4 * &n + 2;
    let l2 = &l + 2;
    5 + &l + &n * (&l * &l + 8 * &l + 12) + 2 * &n * &n * &l2 * &l2 - m * &lk_a * &lk_a - p * &lk_b * &lk_b
}

/// `γ + 1`, the slope of the toroidal filling `B(l,m,n,p) + R(0)`.
pub fn toroidal_slope(params: &FamilyParams) -> BigInt {
    surgery_slope(params) + 1
}

/// Pieces `(M_1, M_2)` of the torus decomposition of `K(l,m,n,p)(γ + 1)`.
pub fn decomposition_pieces(params: &FamilyParams) -> Result<(SeifertSpace, SeifertSpace)> {
    let (l, m, n, p) = params.big();
    let m1 = match params.check()? {
        Case::TwistA => {
            let num: BigInt = 2 * &l * &m * &n + &l * &m - &l * &n + 2 * &m * &n + 3 * &m - &n - 1;
            let den = 2 * &l * &m * &n + &l * &m - &l * &n + 2 * &m - 1;
            vec![
                closed_form(-num, den, "M1 slot 1", params)?,
                closed_form(-(&n + 1u32), 2 * &n + 1, "M1 slot 2", params)?,
            ]
        }
        Case::TwistB => vec![
            closed_form(-(&l * &n + &n + 1u32), &l * &n + 1u32, "M1 slot 1", params)?,
            closed_form(
                -(2u32 * &n * &p - &n + &p - 1u32),
                4 * &n * &p - 2 * &n - 1,
                "M1 slot 2",
                params,
            )?,
        ],
    };
    let m2 = vec![closed_form(BigInt::from(1), l, "M2 slot 1", params)?, ExtFrac::new(-1, 2)?];
    Ok((SeifertSpace::disk(m1), SeifertSpace::disk(m2)))
}

fn l_is_small(l: i64) -> bool {
    matches!(l, -1..=1)
}

/// Hypotheses under which `γ + 1` surgery has a unique essential torus.
///
/// * `p = 0`: `l ≠ 0, ±1`, `n ≠ 0, -1`, `(l,m,n) ≠ (-2,0,1), (2,1,-2)`.
/// * `m = 0`: `l ≠ 0, ±1`, `n ≠ 0`, `(l,n) ≠ (±2,∓1)`, `(n,p) ≠ (-1,0), (1,1)`.
pub fn toroidal_hypotheses(params: &FamilyParams) -> bool {
    let FamilyParams { l, m, n, p } = *params;
    if !params.satisfies_mp_zero() || l_is_small(l) {
        return false;
    }
    match params.case() {
        Case::TwistA => n != 0 && n != -1 && (l, m, n) != (-2, 0, 1) && (l, m, n) != (2, 1, -2),
        Case::TwistB => {
            n != 0 && (l, n) != (2, -1) && (l, n) != (-2, 1) && (n, p) != (-1, 0) && (n, p) != (1, 1)
        }
    }
}

/// Hypotheses under which `(K(l,m,n,p), γ)` has no primitive/Seifert position.
///
/// * `p = 0`: `l ≠ 0, ±1`, `n ≠ 0, -1`, `(l,m) ≠ (-2,0), (-2,2)`, `(l,m,n) ≠ (2,1,-2)`.
/// * `m = 0`: `l ≠ 0, ±1`, `n ≠ 0`, `(l,n) ≠ (±2,∓1)`, `(l,p) ≠ (-2,0), (-2,2)`,
///   `(n,p) ≠ (-1,0), (1,1)`.
pub fn nonps_hypotheses(params: &FamilyParams) -> bool {
    let FamilyParams { l, m, n, p } = *params;
    if !params.satisfies_mp_zero() || l_is_small(l) {
        return false;
    }
    match params.case() {
        Case::TwistA => {
            n != 0 && n != -1 && (l, m) != (-2, 0) && (l, m) != (-2, 2) && (l, m, n) != (2, 1, -2)
        }
        Case::TwistB => {
            n != 0
                && (l, n) != (2, -1)
                && (l, n) != (-2, 1)
                && (l, p) != (-2, 0)
                && (l, p) != (-2, 2)
                && (n, p) != (-1, 0)
                && (n, p) != (1, 1)
        }
    }
}

/// `|2n + 1| >= 3`, `|l| >= 2` and `|2lmn + lm - ln + 2m - 1| >= 2`.
pub fn claim_seifert_invariant1(l: i64, m: i64, n: i64) -> bool {
    let (l, m, n) = (BigInt::from(l), BigInt::from(m), BigInt::from(n));
    let q: BigInt = 2 * &l * &m * &n + &l * &m - &l * &n + 2 * &m - 1;
    (2u32 * &n + 1u32).abs() >= BigInt::from(3) && l.abs() >= BigInt::from(2) && q.abs() >= BigInt::from(2)
}

fn expect_pm_two(params: &FamilyParams) -> Result<Case> {
    let case = params.check()?;
    if params.l.abs() != 2 {
        return Err(Error::NotPlusMinusTwo(params.l));
    }
    Ok(case)
}

/// `|H_1|` of the branched double cover that would have to be `S³` for a genus-two
/// splitting of the toroidal filling when `l = ±2`, as the expanded polynomial:
///
/// | case          | order                              |
/// |---------------|------------------------------------|
/// | `l = 2, p = 0`  | `|16mn² + 24mn - 8n² + 9m - 8n - 2|` |
/// | `l = -2, p = 0` | `|m - 1|`                          |
/// | `l = 2, m = 0`  | `|16n²p - 8n² + 8np - 8n + p - 2|`   |
/// | `l = -2, m = 0` | `|p - 1|`                          |
///
/// `0` means `H_1` is infinite.
pub fn case4_h1_orders(params: &FamilyParams) -> Result<BigUint> {
    let case = expect_pm_two(params)?;
    let (_, m, n, p) = params.big();
    let value: BigInt = match (case, params.l) {
        (Case::TwistA, 2) => 16 * &m * &n * &n + 24 * &m * &n - 8 * &n * &n + 9 * &m - 8 * &n - 2,
        (Case::TwistA, _) => m - 1,
        (Case::TwistB, 2) => 16 * &n * &n * &p - 8 * &n * &n + 8 * &n * &p - 8 * &n + &p - 2,
        (Case::TwistB, _) => p - 1,
    };
    Ok(value.magnitude().clone())
}

/// The two-slot space whose order [`case4_h1_orders`] expands, built from its slot
/// fractions:
///
/// * `l = 2, p = 0`: `S²((-6mn-5m+3n+1)/(4mn+4m-2n-1), -(n+1)/(2n+1))`
/// * `l = -2, p = 0`: `S²((-2mn+m+n-1)/(4mn-2n+1), n/(2n+1))`
/// * `l = 2, m = 0`: `S²(-(3n+1)/(2n+1), -(2np-n+p-1)/(4np-2n-1))`
/// * `l = -2, m = 0`: `S²((n-1)/(-2n+1), (2np-n-p)/(4np-2n-1))`
pub fn case4_space(params: &FamilyParams) -> Result<SeifertSpace> {
    let case = expect_pm_two(params)?;
    let (_, m, n, p) = params.big();
    let what = "case-4 slot";
    let slots = match (case, params.l) {
        (Case::TwistA, 2) => vec![
            closed_form(
                -6 * &m * &n - 5 * &m + 3 * &n + 1,
                4 * &m * &n + 4 * &m - 2 * &n - 1,
                what,
                params,
            )?,
            closed_form(-(&n + 1u32), 2 * &n + 1, what, params)?,
        ],
        (Case::TwistA, _) => vec![
            closed_form(-2 * &m * &n + &m + &n - 1, 4 * &m * &n - 2 * &n + 1, what, params)?,
            closed_form(n.clone(), 2 * &n + 1, what, params)?,
        ],
        (Case::TwistB, 2) => vec![
            closed_form(-(3u32 * &n + 1u32), 2u32 * &n + 1u32, what, params)?,
            closed_form(-(2u32 * &n * &p - &n + &p - 1u32), 4 * &n * &p - 2 * &n - 1, what, params)?,
        ],
        (Case::TwistB, _) => vec![
            closed_form(&n - 1, -2 * &n + 1, what, params)?,
            closed_form(2 * &n * &p - &n - &p, 4 * &n * &p - 2 * &n - 1, what, params)?,
        ],
    };
    Ok(SeifertSpace::new(Base::Sphere, slots))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfrac::cf_eval;
    use crate::seifert::{FibrationCensus, H1Order, LensClass};

    fn frac(n: i64, d: i64) -> ExtFrac {
        ExtFrac::new(n, d).unwrap()
    }

    fn fp(l: i64, m: i64, n: i64, p: i64) -> FamilyParams {
        FamilyParams::new(l, m, n, p).unwrap()
    }

    fn ints(seq: &[BigInt]) -> Vec<i64> {
        seq.iter().map(|b| i64::try_from(b).unwrap()).collect()
    }

    #[test]
    fn params_reject_nonzero_mp() {
        assert_eq!(FamilyParams::new(1, 1, 1, 1), Err(Error::MpConstraint { m: 1, p: 1 }));
        let bad = FamilyParams::new_unchecked(1, 1, 1, 1);
        assert!(montesinos_fractions(&bad).is_err());
        assert!(tangle_sequences(&bad).is_err());
        assert!(!toroidal_hypotheses(&bad));
    }

    #[test]
    fn montesinos_examples() {
        assert_eq!(montesinos_fractions(&fp(2, 0, 1, 0)).unwrap(), [frac(4, 5), frac(-2, 7), frac(1, 2)]);
        assert_eq!(montesinos_fractions(&fp(2, 0, 1, 1)).unwrap(), [frac(4, 5), frac(-1, 3), frac(1, 2)]);
        assert_eq!(montesinos_fractions(&fp(2, 0, 0, 0)).unwrap(), [frac(1, 1), frac(-1, 3), frac(1, 2)]);
        assert_eq!(montesinos_fractions(&fp(2, 1, 1, 0)).unwrap(), [frac(7, 9), frac(-2, 7), frac(1, 2)]);
    }

    #[test]
    fn montesinos_zero_denominator() {
        // 2l²mn + l²m - l²n + 2lm - 2m - l + 1 = 0 at (-3, -4, 0, 0)
        assert!(matches!(
            montesinos_fractions(&fp(-3, -4, 0, 0)),
            Err(Error::ZeroDenominator { what: "Montesinos slot 1", .. })
        ));
    }

    #[test]
    fn sequences() {
        let [a, b, c] = tangle_sequences(&fp(2, 0, 1, 0)).unwrap();
        assert_eq!(ints(&a), vec![0, -2, -1, -2, -1, 2, 0]);
        assert_eq!(ints(&b), vec![-1, -1, -3, 0]);
        assert_eq!(ints(&c), vec![2, 0]);

        let [_, b, c] = tangle_sequences(&fp(2, 0, 1, 1)).unwrap();
        assert_eq!(ints(&b), vec![-1, 2, -1, -1, -3, 0]);
        assert_eq!(cf_eval(b).unwrap(), frac(-1, 3));
        assert_eq!(cf_eval(c).unwrap(), frac(1, 2));

        let t = tangles(&fp(2, 0, 1, 0)).unwrap();
        assert_eq!(t[0].fraction(), &frac(4, 5));
    }

    #[test]
    fn slopes() {
        for l in -50..=50 {
            assert_eq!(surgery_slope(&fp(l, 0, 0, 0)), BigInt::from(l + 5));
        }
        assert_eq!(surgery_slope(&fp(2, 0, 1, 0)), BigInt::from(71));
        assert_eq!(surgery_slope(&fp(2, 1, 1, 0)), BigInt::from(-125));
        assert_eq!(surgery_slope(&fp(2, 0, 1, 1)), BigInt::from(71 - 100));
        assert_eq!(toroidal_slope(&fp(2, 0, 1, 0)), BigInt::from(72));
    }

    #[test]
    fn slopes_do_not_overflow() {
        let big = fp(i64::MAX, 0, i64::MAX, i64::MIN);
        let (l, n, p) = (BigInt::from(i64::MAX), BigInt::from(i64::MAX), BigInt::from(i64::MIN));
        let lk_b = 2 * &n * &l + 4 * &n + 2;
        let expected = 5 + &l + &n * (&l * &l + 8 * &l + 12) + 2 * &n * &n * (&l + 2) * (&l + 2) - p * &lk_b * &lk_b;
        assert_eq!(surgery_slope(&big), expected);
    }

    #[test]
    fn surgered_space_orders() {
        let order = |x: FamilyParams| surgered_space(&x).unwrap().h1_order().unwrap();
        assert_eq!(order(fp(2, 0, 1, 0)), H1Order::Finite(71u32.into()));
        assert_eq!(order(fp(2, 0, 1, 1)), H1Order::Finite(29u32.into()));
        assert_eq!(order(fp(2, 0, 0, 0)), H1Order::Finite(7u32.into()));
        assert_eq!(order(fp(2, 1, 1, 0)), H1Order::Finite(125u32.into()));
        assert_eq!(surgered_space(&fp(2, 0, 1, 0)).unwrap().is_lens_or_s3().unwrap(), LensClass::Neither);
    }

    #[test]
    fn pieces() {
        let (m1, m2) = decomposition_pieces(&fp(2, 0, 1, 0)).unwrap();
        assert_eq!(m1.slots(), &[frac(-4, 3), frac(-2, 3)]);
        assert_eq!(m2.slots(), &[frac(1, 2), frac(-1, 2)]);
        assert!(m1.boundary_irreducible().unwrap());
        assert_eq!(m1.fibration_census().unwrap(), FibrationCensus::Unique);
        assert_eq!(m2.fibration_census().unwrap(), FibrationCensus::DiskAndMoebius);

        for l in [-5, -2, 3, 7] {
            for n in -3..=3 {
                for p in -2..=2 {
                    let (_, m2) = decomposition_pieces(&fp(l, 0, n, p)).unwrap();
                    assert_eq!(m2.slots(), &[frac(1, l), frac(-1, 2)]);
                }
            }
        }

        // (2,0,1,1): M1 = D²(-(2+1+1)/(2+1), -(2-1+1-1)/(4-2-1)) = D²(-4/3, -1)
        let (m1, _) = decomposition_pieces(&fp(2, 0, 1, 1)).unwrap();
        assert_eq!(m1.slots(), &[frac(-4, 3), frac(-1, 1)]);
        assert!(!m1.boundary_irreducible().unwrap());
        assert!(!toroidal_hypotheses(&fp(2, 0, 1, 1)));

        assert!(matches!(
            decomposition_pieces(&fp(0, 0, 1, 0)),
            Err(Error::ZeroDenominator { what: "M2 slot 1", .. })
        ));
    }

    #[test]
    fn toroidal_examples() {
        assert!(!toroidal_hypotheses(&fp(2, 1, -2, 0)));
        assert!(toroidal_hypotheses(&fp(3, 0, 1, 0)));
        assert!(!toroidal_hypotheses(&fp(2, 0, -1, 0)));
        assert!(!toroidal_hypotheses(&fp(-2, 0, 1, 0)));
        assert!(!toroidal_hypotheses(&fp(1, 0, 3, 0)));
        assert!(!toroidal_hypotheses(&fp(3, 0, 1, 1)));
        assert!(!toroidal_hypotheses(&fp(2, 0, -1, 3)));
        assert!(toroidal_hypotheses(&fp(2, 0, 1, 3)));
    }

    #[test]
    fn nonps_examples() {
        assert!(!nonps_hypotheses(&fp(-2, 0, 3, 0)));
        assert!(nonps_hypotheses(&fp(3, 2, 1, 0)));
        assert!(!nonps_hypotheses(&fp(-2, 0, 1, 2)));
        assert!(!nonps_hypotheses(&fp(-2, 2, 1, 0)));
        assert!(nonps_hypotheses(&fp(-2, 1, 1, 0)));
        assert!(!nonps_hypotheses(&fp(-2, 0, 1, 3)));
        assert!(nonps_hypotheses(&fp(-2, 0, 2, 3)));
    }

    #[test]
    fn claim_examples() {
        assert!(claim_seifert_invariant1(2, 0, 1));
        assert!(!claim_seifert_invariant1(1, 0, 1));
        assert!(!claim_seifert_invariant1(2, 1, -2));
    }

    #[test]
    fn case4_examples() {
        assert_eq!(case4_h1_orders(&fp(2, 1, 1, 0)).unwrap(), BigUint::from(31u32));
        assert_eq!(case4_h1_orders(&fp(-2, 3, 2, 0)).unwrap(), BigUint::from(2u32));
        assert_eq!(case4_h1_orders(&fp(-2, 0, 5, 1)).unwrap(), BigUint::from(0u32));
        assert_eq!(case4_h1_orders(&fp(3, 0, 5, 1)), Err(Error::NotPlusMinusTwo(3)));

        // (-2mn+m+n-1)(2n+1) + n(4mn-2n+1) at (m,n) = (3,2)
        assert_eq!((-12 + 3 + 2 - 1) * 5 + 2 * (24 - 4 + 1), 2);
        assert_eq!(
            case4_space(&fp(2, 1, 1, 0)).unwrap().slots(),
            &[frac(-7, 5), frac(-2, 3)]
        );
        assert_eq!(
            case4_space(&fp(-2, 0, 5, 1)).unwrap().h1_order().unwrap(),
            H1Order::Infinite
        );
    }
}
