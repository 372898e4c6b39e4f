//! Parameter sweeps that cross-check the family formulas against each other.
//!
//! Each [`Suite`] enumerates its own points from a [`SweepBox`], checks every point
//! independently (in parallel) and reports skips and failures sorted by parameters.
//! Reports are deterministic: the worker count never changes the output, and wall
//! time is only serialized when timing is switched on.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactfrac::cf_eval;
use crate::family::{self, Case, FamilyParams};
use crate::network::{self, SurgeryVertex};
use crate::seifert::{FibrationCensus, H1Order};

/// Inclusive integer interval, written `A..B` (or a single `A`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntRange {
    pub lo: i64,
    pub hi: i64,
}

impl IntRange {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidRange(format!("{lo}..{hi}")));
        }
        Ok(IntRange { lo, hi })
    }

    pub fn single(v: i64) -> Self {
        IntRange { lo: v, hi: v }
    }

    pub fn len(&self) -> u64 {
        (self.hi as i128 - self.lo as i128 + 1) as u64
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }
}

impl FromStr for IntRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidRange(s.to_string());
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|_| bad());
        match s.split_once("..") {
            Some((lo, hi)) => IntRange::new(parse(lo)?, parse(hi.strip_prefix('=').unwrap_or(hi))?)
                .map_err(|_| bad()),
            None => Ok(IntRange::single(parse(s)?)),
        }
    }
}

impl fmt::Display for IntRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

impl Serialize for IntRange {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [self.lo, self.hi].serialize(serializer)
    }
}

pub const DEFAULT_CAP: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepBox {
    pub l: IntRange,
    pub m: IntRange,
    pub n: IntRange,
    pub p: IntRange,
    pub enforce_mp_zero: bool,
    #[serde(skip)]
    pub cap: u64,
}

impl Default for SweepBox {
    fn default() -> Self {
        let r = IntRange { lo: -8, hi: 8 };
        SweepBox { l: r, m: r, n: r, p: r, enforce_mp_zero: true, cap: DEFAULT_CAP }
    }
}

impl SweepBox {
    pub fn new(l: IntRange, m: IntRange, n: IntRange, p: IntRange) -> Self {
        SweepBox { l, m, n, p, ..SweepBox::default() }
    }

    /// Size of the full `l × m × n × p` grid, saturating.
    pub fn grid_size(&self) -> u64 {
        [self.l, self.m, self.n, self.p].iter().fold(1u64, |acc, r| acc.saturating_mul(r.len()))
    }

    /// Points `suite` enumerates before deduplication and `m·p` filtering: the 4D grid
    /// for the full-box suites, `l × n` or `m × n` and `n × p` slices for the others.
    pub fn suite_size(&self, suite: Suite) -> u64 {
        let area = |a: IntRange, b: IntRange| a.len().saturating_mul(b.len());
        match suite {
            Suite::H1Slope | Suite::CfFractions | Suite::PathRealization | Suite::HypothesisImplications => {
                self.grid_size()
            }
            Suite::IsotopyIdentity | Suite::AnnularComposition => area(self.l, self.n),
            Suite::HomologyClaims => area(self.m, self.n).saturating_add(area(self.n, self.p)).saturating_mul(2),
            Suite::All => Suite::EACH.iter().fold(0u64, |acc, s| acc.saturating_add(self.suite_size(*s))),
        }
    }

    fn check_cap(&self, suite: Suite) -> Result<()> {
        let size = self.suite_size(suite);
        if size > self.cap {
            return Err(Error::BoxTooLarge { size, cap: self.cap });
        }
        Ok(())
    }

    /// Grid points in lexicographic `(l, m, n, p)` order, filtered by `m·p = 0` when
    /// that constraint is enforced.
    pub fn family_points(&self) -> Vec<FamilyParams> {
        let mut out = Vec::new();
        for l in self.l.iter() {
            for m in self.m.iter() {
                for n in self.n.iter() {
                    for p in self.p.iter() {
                        let params = FamilyParams::new_unchecked(l, m, n, p);
                        if !self.enforce_mp_zero || params.satisfies_mp_zero() {
                            out.push(params);
                        }
                    }
                }
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    H1Slope,
    CfFractions,
    PathRealization,
    IsotopyIdentity,
    AnnularComposition,
    HomologyClaims,
    HypothesisImplications,
    All,
}

impl Suite {
    /// Every concrete suite, in the order `all` runs them.
    pub const EACH: [Suite; 7] = [
        Suite::H1Slope,
        Suite::CfFractions,
        Suite::PathRealization,
        Suite::IsotopyIdentity,
        Suite::AnnularComposition,
        Suite::HomologyClaims,
        Suite::HypothesisImplications,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::H1Slope => "h1-slope",
            Suite::CfFractions => "cf-fractions",
            Suite::PathRealization => "path-realization",
            Suite::IsotopyIdentity => "isotopy-identity",
            Suite::AnnularComposition => "annular-composition",
            Suite::HomologyClaims => "homology-claims",
            Suite::HypothesisImplications => "hypothesis-implications",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .iter()
            .chain(std::iter::once(&Suite::All))
            .find(|suite| suite.name() == s)
            .copied()
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkipRecord {
    pub params: [i64; 4],
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FailureRecord {
    pub params: [i64; 4],
    pub check: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub suite: String,
    pub checked: u64,
    pub skipped: u64,
    pub failed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    #[serde(rename = "box")]
    pub sweep_box: SweepBox,
    pub checked: u64,
    pub skipped: Vec<SkipRecord>,
    pub failures: Vec<FailureRecord>,
    pub elapsed_ms: Option<u64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub suites: Vec<SuiteSummary>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// `checked + skipped`: every point the suite enumerated.
    pub fn points(&self) -> u64 {
        self.checked + self.skipped.len() as u64
    }
}

enum Outcome {
    Checked(Vec<FailureRecord>),
    Skipped(String),
}

pub type SlopeFormula = fn(&FamilyParams) -> BigInt;

/// Runs suites. The slope formula is injectable so that a deliberately broken
/// formula can be used as a negative control.
#[derive(Clone, Debug)]
pub struct Verifier {
    jobs: usize,
    slope: SlopeFormula,
    timing: bool,
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier { jobs: 0, slope: family::surgery_slope, timing: false }
    }
}

impl Verifier {
    pub fn new() -> Self {
        Verifier::default()
    }

    /// Worker threads; `0` lets rayon decide.
    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    pub fn slope_formula(mut self, slope: SlopeFormula) -> Self {
        self.slope = slope;
        self
    }

    /// Serialize `elapsed_ms`. Off by default so that reports are byte-for-byte
    /// reproducible.
    pub fn timing(mut self, timing: bool) -> Self {
        self.timing = timing;
        self
    }

    pub fn run(&self, suite: Suite, sweep: &SweepBox) -> Result<VerificationReport> {
        sweep.check_cap(suite)?;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs)
            .build()
            .expect("failed to start worker pool");
        let started = Instant::now();
        let mut report = pool.install(|| match suite {
            Suite::All => self.run_all(sweep),
            single => self.run_single(single, sweep),
        });
        report.wall_time = started.elapsed();
        if self.timing {
            report.elapsed_ms = Some(report.wall_time.as_millis() as u64);
        }
        Ok(report)
    }

    fn run_all(&self, sweep: &SweepBox) -> VerificationReport {
        let mut total = empty_report(Suite::All, sweep);
        for suite in Suite::EACH {
            let r = self.run_single(suite, sweep);
            total.suites.push(SuiteSummary {
                suite: suite.name().to_string(),
                checked: r.checked,
                skipped: r.skipped.len() as u64,
                failed: r.failures.len() as u64,
            });
            total.checked += r.checked;
            total.skipped.extend(r.skipped.into_iter().map(|mut s| {
                s.reason = format!("{suite}: {}", s.reason);
                s
            }));
            total.failures.extend(r.failures.into_iter().map(|mut f| {
                f.check = format!("{suite}: {}", f.check);
                f
            }));
        }
        total
    }

    fn run_single(&self, suite: Suite, sweep: &SweepBox) -> VerificationReport {
        let mut points = domain(suite, sweep);
        points.sort();
        points.dedup();
        let outcomes: Vec<(FamilyParams, Outcome)> =
            points.into_par_iter().map(|params| (params, self.check(suite, &params))).collect();

        let mut report = empty_report(suite, sweep);
        for (params, outcome) in outcomes {
            match outcome {
                Outcome::Checked(failures) => {
                    report.checked += 1;
                    report.failures.extend(failures);
                }
                Outcome::Skipped(reason) => {
                    report.skipped.push(SkipRecord { params: params.as_array(), reason })
                }
            }
        }
        report
    }

    fn check(&self, suite: Suite, params: &FamilyParams) -> Outcome {
        let result = match suite {
            Suite::H1Slope => self.check_h1_slope(params),
            Suite::CfFractions => check_cf_fractions(params),
            Suite::PathRealization => self.check_path(params),
            Suite::IsotopyIdentity => self.check_isotopy(params),
            Suite::AnnularComposition => self.check_annular(params),
            Suite::HomologyClaims => check_homology_claims(params),
            Suite::HypothesisImplications => check_hypotheses(params),
            Suite::All => unreachable!("`all` is expanded before points are checked"),
        };
        match result {
            Ok(failures) => Outcome::Checked(failures.0),
            Err(reason) => Outcome::Skipped(reason),
        }
    }

    /// `|γ|`, `|H_1(S²(r_1, r_2, r_3))|` and `|slope at the end of the twist path|`
    /// agree pairwise.
    fn check_h1_slope(&self, params: &FamilyParams) -> Checked {
        require_mp_zero(params)?;
        let space = family::surgered_space(params).map_err(|e| e.to_string())?;
        let h1 = space.h1_order().map_err(|e| e.to_string())?;
        let slope = H1Order::from_signed((self.slope)(params));
        let steps = network::path_from_trefoil(params).map_err(|e| e.to_string())?;
        let walked = H1Order::from_signed(
            network::realize_path(&SurgeryVertex::trefoil(params.l), &steps).slope,
        );

        let mut out = Failures::new(params);
        out.expect_eq("|H1| == |slope|", &slope, &h1);
        out.expect_eq("|path slope| == |slope|", &slope, &walked);
        out.expect_eq("|H1| == |path slope|", &walked, &h1);
        Ok(out)
    }

    /// The twist path lands on the closed-form slope, and after the alternating part
    /// `|lk(K, c_a)| = |2nl + 4n + l + 4|`, `|lk(K, c_b)| = |2nl + 4n + 2|`.
    fn check_path(&self, params: &FamilyParams) -> Checked {
        require_mp_zero(params)?;
        let FamilyParams { l, n, .. } = *params;
        let start = SurgeryVertex::trefoil(l);
        let mid = network::realize_path(&start, &network::unit_twist_steps(n));
        let steps = network::path_from_trefoil(params).map_err(|e| e.to_string())?;
        let end = network::realize_path(&start, &steps);

        let (lb, nb) = (BigInt::from(l), BigInt::from(n));
        let lk_a: BigInt = 2 * &nb * &lb + 4 * &nb + &lb + 4;
        let lk_b: BigInt = 2 * &nb * &lb + 4 * &nb + 2;
        let without_final = FamilyParams::new_unchecked(l, 0, n, 0);

        let mut out = Failures::new(params);
        out.expect_eq("end slope == slope formula", &(self.slope)(params), &end.slope);
        out.expect_eq("mid slope == slope formula at (l,0,n,0)", &(self.slope)(&without_final), &mid.slope);
        out.expect_eq("|lk(K,c_a)| after annular part", &lk_a.magnitude(), &mid.lk_a.magnitude());
        out.expect_eq("|lk(K,c_b)| after annular part", &lk_b.magnitude(), &mid.lk_b.magnitude());
        Ok(out)
    }

    /// Point `(l, 0, n, 1)` compared with `(l, 1, n - 1, 0)`.
    fn check_isotopy(&self, params: &FamilyParams) -> Checked {
        let FamilyParams { l, n, .. } = *params;
        let nm1 = n.checked_sub(1).ok_or_else(|| "n - 1 out of range".to_string())?;
        let left = FamilyParams::new_unchecked(l, 1, nm1, 0);
        let right = FamilyParams::new_unchecked(l, 0, n, 1);

        let mut out = Failures::new(params);
        out.expect_eq("slope(l,1,n-1,0) == slope(l,0,n,1)", &(self.slope)(&right), &(self.slope)(&left));
        match (family::montesinos_fractions(&left), family::montesinos_fractions(&right)) {
            (Ok(a), Ok(b)) => {
                for (i, (x, y)) in a.iter().zip(b.iter()).enumerate() {
                    out.expect_eq(&format!("Montesinos slot {}", i + 1), y, x);
                }
            }
            (Err(e), Err(_)) => return Err(e.to_string()),
            (a, b) => out.fail("Montesinos fractions defined on both sides", fmt_result(&b), fmt_result(&a)),
        }
        Ok(out)
    }

    /// Annular twists from the trefoil vertex against unit steps, the closed-form
    /// slope increment, inverse twists and the framing composition identity.
    fn check_annular(&self, params: &FamilyParams) -> Checked {
        let FamilyParams { l, n, .. } = *params;
        let start = SurgeryVertex::trefoil(l);
        let annular = network::annular_twist(&start, n);
        let unit = network::realize_path(&start, &network::unit_twist_steps(n));

        let (lb, nb) = (BigInt::from(l), BigInt::from(n));
        let increment = &nb * (&lb * &lb + 8 * &lb + 12) + 2 * &nb * &nb * (&lb + 2) * (&lb + 2);

        let mut out = Failures::new(params);
        if !annular.same_up_to_orientation(&unit) {
            out.fail("annular twist == unit steps up to orientation", unit.to_string(), annular.to_string());
        }
        out.expect_eq("slope increment", &increment, &(&annular.slope - &start.slope));
        out.expect_eq("annular slope == slope formula", &(self.slope)(params), &annular.slope);
        out.expect_eq("inverse annular twist", &start, &network::annular_twist(&annular, -n));
        let lk = 2;
        match (network::compose_two_twists(-1, 1, lk), network::annular_surgery_coeffs(1, lk)) {
            (Ok(a), Ok(b)) => out.expect_eq("(-1 along c_1, +1 along c_2) == +1 annular", &fmt_pair(&b), &fmt_pair(&a)),
            (a, b) => out.fail("framing composition defined", format!("{b:?}"), format!("{a:?}")),
        }
        Ok(out)
    }
}

fn empty_report(suite: Suite, sweep: &SweepBox) -> VerificationReport {
    VerificationReport {
        suite: suite.name().to_string(),
        sweep_box: sweep.clone(),
        checked: 0,
        skipped: Vec::new(),
        failures: Vec::new(),
        elapsed_ms: None,
        suites: Vec::new(),
        wall_time: Duration::ZERO,
    }
}

fn domain(suite: Suite, sweep: &SweepBox) -> Vec<FamilyParams> {
    let pairs = |a: IntRange, b: IntRange, f: &dyn Fn(i64, i64) -> FamilyParams| {
        a.iter().flat_map(|x| b.iter().map(move |y| (x, y))).map(|(x, y)| f(x, y)).collect::<Vec<_>>()
    };
    match suite {
        Suite::H1Slope | Suite::CfFractions | Suite::PathRealization | Suite::HypothesisImplications => {
            sweep.family_points()
        }
        Suite::IsotopyIdentity => pairs(sweep.l, sweep.n, &|l, n| FamilyParams::new_unchecked(l, 0, n, 1)),
        Suite::AnnularComposition => pairs(sweep.l, sweep.n, &|l, n| FamilyParams::new_unchecked(l, 0, n, 0)),
        Suite::HomologyClaims => {
            let mut out = Vec::new();
            for l in [-2, 2] {
                out.extend(pairs(sweep.m, sweep.n, &|m, n| FamilyParams::new_unchecked(l, m, n, 0)));
                out.extend(
                    pairs(sweep.n, sweep.p, &|n, p| FamilyParams::new_unchecked(l, 0, n, p))
                        .into_iter()
                        .filter(|x| x.p != 0),
                );
            }
            out
        }
        Suite::All => Vec::new(),
    }
}

/// `Ok` collects failures for a checked point, `Err` carries a skip reason.
type Checked = std::result::Result<Failures, String>;

struct Failures(Vec<FailureRecord>, [i64; 4]);

impl Failures {
    fn new(params: &FamilyParams) -> Self {
        Failures(Vec::new(), params.as_array())
    }

    fn fail(&mut self, check: &str, expected: String, actual: String) {
        self.0.push(FailureRecord { params: self.1, check: check.to_string(), expected, actual });
    }

    fn expect_eq<T: PartialEq + fmt::Display>(&mut self, check: &str, expected: &T, actual: &T) {
        if expected != actual {
            self.fail(check, expected.to_string(), actual.to_string());
        }
    }

    fn expect(&mut self, check: &str, ok: bool) {
        if !ok {
            self.fail(check, "true".into(), "false".into());
        }
    }
}

fn require_mp_zero(params: &FamilyParams) -> std::result::Result<(), String> {
    if params.satisfies_mp_zero() {
        Ok(())
    } else {
        Err("m·p != 0".to_string())
    }
}

fn fmt_result<T: fmt::Debug>(r: &Result<T>) -> String {
    match r {
        Ok(v) => format!("{v:?}"),
        Err(e) => e.to_string(),
    }
}

fn fmt_pair<A: fmt::Display, B: fmt::Display>(pair: &(A, B)) -> String {
    format!("({}, {})", pair.0, pair.1)
}

fn check_cf_fractions(params: &FamilyParams) -> Checked {
    require_mp_zero(params)?;
    let closed = family::montesinos_fractions(params).map_err(|e| e.to_string())?;
    let seqs = family::tangle_sequences(params).map_err(|e| e.to_string())?;
    let mut out = Failures::new(params);
    for (i, (seq, slot)) in seqs.into_iter().zip(closed.iter()).enumerate() {
        let label = format!("cf_eval(R_{}) == closed form", i + 1);
        match cf_eval(seq) {
            Ok(r) => out.expect_eq(&label, slot, &r),
            Err(e) => out.fail(&label, slot.to_string(), e.to_string()),
        }
    }
    Ok(out)
}

/// Two-slot `|H_1|` against the expanded polynomials, and which `(m, n)` or `(n, p)`
/// give `|H_1| = 1`.
fn check_homology_claims(params: &FamilyParams) -> Checked {
    let space = family::case4_space(params).map_err(|e| e.to_string())?;
    let h1 = space.h1_order().map_err(|e| e.to_string())?;
    let poly = family::case4_h1_orders(params).map_err(|e| e.to_string())?;
    let poly = H1Order::from_signed(poly.into());

    let mut out = Failures::new(params);
    out.expect_eq("two-slot |H1| == expanded polynomial", &poly, &h1);
    let trivial = poly.is_trivial();
    let FamilyParams { l, m, n, p } = *params;
    match (params.case(), l) {
        (Case::TwistA, 2) => out.expect("order 1 implies n = -1", !trivial || n == -1),
        (Case::TwistA, _) => out.expect("order 1 iff m in {0, 2}", trivial == (m == 0 || m == 2)),
        (Case::TwistB, 2) => out.expect("order 1 implies n = 0", !trivial || n == 0),
        (Case::TwistB, _) => out.expect("order 1 iff p in {0, 2}", trivial == (p == 0 || p == 2)),
    }
    Ok(out)
}

fn odd_index_at_least_three(r: &crate::exactfrac::ExtFrac) -> bool {
    let q = r.denom();
    q.bit(0) && q >= BigInt::from(3)
}

/// `nonps ⟹ toroidal ⟹ claim` and what the toroidal hypotheses promise about the
/// decomposition pieces.
fn check_hypotheses(params: &FamilyParams) -> Checked {
    require_mp_zero(params)?;
    let nonps = family::nonps_hypotheses(params);
    let toroidal = family::toroidal_hypotheses(params);
    let FamilyParams { l, m, n, p } = *params;

    let mut out = Failures::new(params);
    out.expect("nonps implies toroidal", !nonps || toroidal);
    if p == 0 {
        out.expect("toroidal implies claim", !toroidal || family::claim_seifert_invariant1(l, m, n));
    }
    if nonps && l.abs() == 2 {
        match family::case4_h1_orders(params) {
            Ok(order) => out.expect("nonps with |l| = 2 excludes order 1", order != 1u32.into()),
            Err(e) => out.fail("case-4 order defined", "order".into(), e.to_string()),
        }
    }
    if toroidal {
        match family::decomposition_pieces(params) {
            Ok((m1, m2)) => {
                out.expect_eq("M1 boundary-irreducible", &true, &m1.boundary_irreducible().unwrap_or(false));
                out.expect_eq("M2 boundary-irreducible", &true, &m2.boundary_irreducible().unwrap_or(false));
                out.expect("M1 has an odd index >= 3", m1.slots().iter().any(odd_index_at_least_three));
                out.expect_eq(
                    "M1 fibration census",
                    &FibrationCensus::Unique.to_string(),
                    &fmt_result(&m1.fibration_census().map(|c| c.to_string())).replace('"', ""),
                );
                let expected = if l.abs() == 2 { FibrationCensus::DiskAndMoebius } else { FibrationCensus::Unique };
                out.expect_eq(
                    "M2 fibration census",
                    &expected.to_string(),
                    &fmt_result(&m2.fibration_census().map(|c| c.to_string())).replace('"', ""),
                );
            }
            Err(e) => out.fail("decomposition pieces defined", "pieces".into(), e.to_string()),
        }
    }
    Ok(out)
}
