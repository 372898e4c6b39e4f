//! Seifert fibered spaces `S²(r_1, ..., r_k)`, `D²(r_1, ..., r_k)` and Seifert spaces
//! over the Möbius band, described by slot fractions `r_i = p_i/q_i`.
//!
//! A slot with `|q_i| >= 2` is an exceptional fiber of index `|q_i|`; an integer slot
//! is a regular fibered solid torus; an `∞` slot is a degenerate fiber. Degenerate
//! slots can be stored but every invariant below refuses them.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactfrac::ExtFrac;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Base {
    Sphere,
    Disk,
    Moebius,
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Base::Sphere => "S2",
            Base::Disk => "D2",
            Base::Moebius => "Mb",
        })
    }
}

/// Order of `H_1`. `Infinite` means the group has a free summand.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum H1Order {
    Finite(BigUint),
    Infinite,
}

impl H1Order {
    /// `|value|`, with `0` meaning infinite order.
    pub fn from_signed(value: BigInt) -> Self {
        if value.is_zero() {
            H1Order::Infinite
        } else {
            H1Order::Finite(value.magnitude().clone())
        }
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, H1Order::Finite(n) if n.is_one())
    }
}

impl fmt::Display for H1Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            H1Order::Finite(n) => write!(f, "{n}"),
            H1Order::Infinite => f.write_str("infinite"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LensClass {
    S3,
    /// A lens space of the given `|H_1|`; `Lens(Infinite)` is `S¹ × S²`.
    Lens(H1Order),
    Neither,
}

impl fmt::Display for LensClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LensClass::S3 => f.write_str("S3"),
            LensClass::Lens(H1Order::Infinite) => f.write_str("LENS(infinite, S1xS2)"),
            LensClass::Lens(order) => write!(f, "LENS({order})"),
            LensClass::Neither => f.write_str("NEITHER"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FibrationCensus {
    /// The fibration over the disk is the only one up to isotopy.
    Unique,
    /// Twisted circle bundle over the Möbius band: fibers over the disk and over
    /// the Möbius band.
    DiskAndMoebius,
}

impl fmt::Display for FibrationCensus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FibrationCensus::Unique => "UNIQUE",
            FibrationCensus::DiskAndMoebius => "DISK_AND_MOEBIUS",
        })
    }
}

/// A Seifert fibered space given by its base and slot fractions, in the order supplied.
///
/// Equality compares normal forms (orientation-preserving). Use [`SeifertSpace::mirror`]
/// to compare up to orientation. Spaces with degenerate slots compare structurally.
#[derive(Clone, Debug)]
pub struct SeifertSpace {
    base: Base,
    slots: Vec<ExtFrac>,
    reduced_on_input: bool,
}

impl SeifertSpace {
    pub fn new(base: Base, slots: Vec<ExtFrac>) -> Self {
        SeifertSpace { base, slots, reduced_on_input: false }
    }

    pub fn sphere(slots: Vec<ExtFrac>) -> Self {
        SeifertSpace::new(Base::Sphere, slots)
    }

    pub fn disk(slots: Vec<ExtFrac>) -> Self {
        SeifertSpace::new(Base::Disk, slots)
    }

    /// Builds from raw `(p, q)` pairs. A zero `q` is an error here: parametric
    /// families produce `(p, 0)` only at points where a formula breaks down. Records
    /// whether any pair needed reducing.
    pub fn from_pairs<P, Q>(base: Base, pairs: impl IntoIterator<Item = (P, Q)>) -> Result<Self>
    where
        P: Into<BigInt>,
        Q: Into<BigInt>,
    {
        let mut reduced_on_input = false;
        let mut slots = Vec::new();
        for (p, q) in pairs {
            let (p, q): (BigInt, BigInt) = (p.into(), q.into());
            if q.is_zero() {
                return Err(Error::ZeroDenominator {
                    what: "Seifert slot",
                    params: format!("{p}/{q}"),
                });
            }
            if !p.gcd(&q).is_one() {
                reduced_on_input = true;
            }
            slots.push(ExtFrac::new(p, q)?);
        }
        Ok(SeifertSpace { base, slots, reduced_on_input })
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn slots(&self) -> &[ExtFrac] {
        &self.slots
    }

    /// True when [`SeifertSpace::from_pairs`] had to divide out a common factor.
    pub fn reduced_on_input(&self) -> bool {
        self.reduced_on_input
    }

    pub fn is_degenerate(&self) -> bool {
        self.slots.iter().any(ExtFrac::is_infinite)
    }

    /// Same space with the opposite orientation: every slot negated.
    pub fn mirror(&self) -> SeifertSpace {
        SeifertSpace {
            base: self.base,
            slots: self.slots.iter().map(|s| -s).collect(),
            reduced_on_input: self.reduced_on_input,
        }
    }

    fn finite_slots(&self) -> Result<Vec<&BigRational>> {
        self.slots
            .iter()
            .enumerate()
            .map(|(index, s)| s.as_rational().ok_or(Error::DegenerateSlot { index }))
            .collect()
    }

    fn expect_base(&self, expected: Base) -> Result<()> {
        if self.base == expected {
            Ok(())
        } else {
            Err(Error::WrongBase { expected, found: self.base })
        }
    }

    fn expect_two_slots(&self) -> Result<()> {
        if self.slots.len() == 2 {
            Ok(())
        } else {
            Err(Error::SlotCount { expected: 2, found: self.slots.len() })
        }
    }

    /// `|Σ_i p_i ∏_{j≠i} q_j|`, the order of `H_1` of a closed space over `S²`.
    pub fn h1_order(&self) -> Result<H1Order> {
        self.expect_base(Base::Sphere)?;
        let slots = self.finite_slots()?;
        let mut sum = BigInt::zero();
        for (i, ri) in slots.iter().enumerate() {
            let mut term = ri.numer().clone();
            for (j, rj) in slots.iter().enumerate() {
                if i != j {
                    term *= rj.denom();
                }
            }
            sum += term;
        }
        Ok(H1Order::from_signed(sum))
    }

    /// Normal form: every non-integer slot shifted into `(0, 1)`, all integer parts
    /// collected in one leading integer slot, exceptional slots sorted ascending.
    /// `S²(1, -1/3, 1/2)` becomes `S²(0, 1/2, 2/3)`.
    pub fn normalize(&self) -> Result<SeifertSpace> {
        let slots = self.finite_slots()?;
        let mut shift = BigInt::zero();
        let mut exceptional = Vec::new();
        for r in slots {
            let floor = r.floor().to_integer();
            let frac = r - BigRational::from_integer(floor.clone());
            shift += floor;
            if !frac.is_zero() {
                exceptional.push(frac);
            }
        }
        exceptional.sort();
        let mut out = Vec::with_capacity(exceptional.len() + 1);
        out.push(ExtFrac::integer(shift));
        out.extend(exceptional.into_iter().map(ExtFrac::Finite));
        Ok(SeifertSpace::new(self.base, out))
    }

    /// Number of slots of index `|q_i| >= 2`. Integer shifts keep `q_i`, so this is
    /// the same before and after [`SeifertSpace::normalize`].
    pub fn exceptional_fiber_count(&self) -> Result<usize> {
        Ok(self.finite_slots()?.into_iter().filter(|r| !r.is_integer()).count())
    }

    /// Closed spaces over `S²` with at most two exceptional fibers are lens spaces
    /// (`S³` when `|H_1| = 1`, `S¹ × S²` when `H_1` is infinite).
    pub fn is_lens_or_s3(&self) -> Result<LensClass> {
        self.expect_base(Base::Sphere)?;
        if self.exceptional_fiber_count()? >= 3 {
            return Ok(LensClass::Neither);
        }
        let order = self.h1_order()?;
        Ok(if order.is_trivial() { LensClass::S3 } else { LensClass::Lens(order) })
    }

    /// `D²(r_1, r_2)` is boundary-irreducible iff neither slot is an integer.
    pub fn boundary_irreducible(&self) -> Result<bool> {
        self.expect_base(Base::Disk)?;
        self.expect_two_slots()?;
        Ok(self.finite_slots()?.iter().all(|r| !r.is_integer()))
    }

    /// Seifert fibrations of `D²(p_1/q_1, p_2/q_2)` with `|q_i| >= 2`: there is a
    /// second one (over the Möbius band) iff `|q_1| = |q_2| = 2`.
    pub fn fibration_census(&self) -> Result<FibrationCensus> {
        self.expect_base(Base::Disk)?;
        self.expect_two_slots()?;
        let slots = self.finite_slots()?;
        let two = BigInt::from(2);
        for (index, r) in slots.iter().enumerate() {
            if r.denom() < &two {
                return Err(Error::NotExceptional { index, value: r.to_string() });
            }
        }
        Ok(if slots.iter().all(|r| r.denom() == &two) {
            FibrationCensus::DiskAndMoebius
        } else {
            FibrationCensus::Unique
        })
    }
}

impl PartialEq for SeifertSpace {
    fn eq(&self, other: &Self) -> bool {
        if self.base != other.base {
            return false;
        }
        match (self.normalize(), other.normalize()) {
            (Ok(a), Ok(b)) => a.slots == b.slots,
            _ => self.slots == other.slots,
        }
    }
}

impl Eq for SeifertSpace {}

impl fmt::Display for SeifertSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.base)?;
        for (i, s) in self.slots.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str(")")
    }
}
