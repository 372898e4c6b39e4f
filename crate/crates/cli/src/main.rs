use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use tangle_surgery::family::{self, FamilyParams};
use tangle_surgery::network::{self, SurgeryVertex};
use tangle_surgery::verify::DEFAULT_CAP;
use tangle_surgery::{BigInt, Error, IntRange, SeifertSpace, Suite, SweepBox, VerificationReport, Verifier};

/// Exact invariants of the K(l,m,n,p) Seifert surgeries.
#[derive(Parser)]
#[command(name = "tangle-surgery", version)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Surgery slope γ and the toroidal slope γ + 1.
    Slope(Point),
    /// Montesinos slot fractions, tangle sequences and |H_1| of the surgered space.
    Montesinos(Point),
    /// Pieces of the torus decomposition after γ + 1 surgery.
    Pieces(Point),
    /// Twist path from the trefoil surgery and every intermediate vertex.
    Path(Point),
    /// Hypothesis lists, decomposition pieces and, for |l| = 2, the genus-two obstruction.
    Check(Point),
    /// Run a verification suite over a parameter box.
    Verify(VerifyArgs),
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct Point {
    l: i64,
    m: i64,
    n: i64,
    p: i64,
}

impl Point {
    fn params(&self) -> Result<FamilyParams, Error> {
        FamilyParams::new(self.l, self.m, self.n, self.p)
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// h1-slope, cf-fractions, path-realization, isotopy-identity, annular-composition,
    /// homology-claims, hypothesis-implications or all.
    #[arg(value_parser = parse_suite)]
    suite: Suite,
    /// Inclusive range A..B, or a single value.
    #[arg(long, default_value = "-8..8", allow_hyphen_values = true, value_parser = parse_range)]
    l: IntRange,
    #[arg(long, default_value = "-8..8", allow_hyphen_values = true, value_parser = parse_range)]
    m: IntRange,
    #[arg(long, default_value = "-8..8", allow_hyphen_values = true, value_parser = parse_range)]
    n: IntRange,
    #[arg(long, default_value = "-8..8", allow_hyphen_values = true, value_parser = parse_range)]
    p: IntRange,
    /// Upper bound on the number of points the suite enumerates.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: u64,
    /// Worker threads (0 = one per core).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Drop the m·p = 0 constraint; constrained-only checks then record skips.
    #[arg(long)]
    mp_free: bool,
    /// Include elapsed_ms in the report. Without it the output is reproducible byte for byte.
    #[arg(long)]
    timing: bool,
    /// Negative control: verify against γ + 1 instead of γ.
    #[arg(long, hide = true)]
    mutate_slope: bool,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| {
        let names: Vec<_> = Suite::EACH.iter().map(|s| s.name()).chain(["all"]).collect();
        format!("{e}; expected one of {}", names.join(", "))
    })
}

fn parse_range(s: &str) -> Result<IntRange, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// What a subcommand produced: the rendered report and whether it passed.
struct Output {
    text: String,
    json: Value,
    passed: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, passed: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = match run(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };

    let rendered = match cli.format {
        Format::Text => output.text,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&output.json).expect("report serializes");
            s.push('\n');
            s
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, rendered) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{rendered}"),
    }
    if output.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(command: &Command) -> Result<Output, Error> {
    match command {
        Command::Slope(pt) => Ok(slope(&pt.params()?)),
        Command::Montesinos(pt) => Ok(montesinos(&pt.params()?)),
        Command::Pieces(pt) => Ok(pieces(&pt.params()?)),
        Command::Path(pt) => path(&pt.params()?),
        Command::Check(pt) => Ok(check(&pt.params()?)),
        Command::Verify(args) => verify(args),
    }
}

fn slope(params: &FamilyParams) -> Output {
    let gamma = family::surgery_slope(params);
    let toroidal = family::toroidal_slope(params);
    Output::ok(
        format!("K{params}\nγ = {gamma}\nγ+1 = {toroidal}\n"),
        json!({ "params": params.as_array(), "slope": gamma.to_string(), "toroidal_slope": toroidal.to_string() }),
    )
}

fn degenerate(params: &FamilyParams, e: &Error) -> Output {
    Output::ok(
        format!("K{params}\ndegenerate parameter point: {e}\n"),
        json!({ "params": params.as_array(), "degenerate": e.to_string() }),
    )
}

fn montesinos(params: &FamilyParams) -> Output {
    let computed = family::tangles(params).and_then(|tangles| {
        let space = family::surgered_space(params)?;
        Ok((tangles, space.h1_order()?, space.is_lens_or_s3()?, space))
    });
    let (tangles, h1, class, space) = match computed {
        Ok(v) => v,
        Err(e) => return degenerate(params, &e),
    };

    let mut text = format!("K{params}\n");
    for (i, t) in tangles.iter().enumerate() {
        writeln!(text, "R_{} = {t}", i + 1).unwrap();
    }
    writeln!(text, "space = {space}\nh1 = {h1}\nclass = {class}").unwrap();
    let json = json!({
        "params": params.as_array(),
        "slots": tangles.iter().map(|t| t.fraction().to_string()).collect::<Vec<_>>(),
        "sequences": tangles.iter().map(|t| strings(t.seq())).collect::<Vec<_>>(),
        "h1_order": h1.to_string(),
        "class": class.to_string(),
    });
    Output::ok(text, json)
}

fn strings(xs: &[BigInt]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn piece_json(space: &SeifertSpace) -> Value {
    json!({
        "space": space.to_string(),
        "boundary_irreducible": space.boundary_irreducible().ok(),
        "fibration_census": space.fibration_census().ok().map(|c| c.to_string()),
    })
}

fn piece_text(name: &str, space: &SeifertSpace) -> String {
    let bi = space.boundary_irreducible().map(|b| b.to_string()).unwrap_or_else(|e| e.to_string());
    let census = space.fibration_census().map(|c| c.to_string()).unwrap_or_else(|e| e.to_string());
    format!("{name} = {space}  boundary_irreducible={bi}  fibrations={census}\n")
}

fn pieces(params: &FamilyParams) -> Output {
    match family::decomposition_pieces(params) {
        Ok((m1, m2)) => Output::ok(
            format!(
                "K{params}({})\n{}{}",
                family::toroidal_slope(params),
                piece_text("M1", &m1),
                piece_text("M2", &m2)
            ),
            json!({
                "params": params.as_array(),
                "toroidal_slope": family::toroidal_slope(params).to_string(),
                "m1": piece_json(&m1),
                "m2": piece_json(&m2),
            }),
        ),
        Err(e) => degenerate(params, &e),
    }
}

fn path(params: &FamilyParams) -> Result<Output, Error> {
    let start = SurgeryVertex::trefoil(params.l);
    let steps = network::path_from_trefoil(params)?;
    let trace = network::realize_path_trace(&start, &steps);
    let end = trace.last().unwrap_or(&start);
    let expected = family::surgery_slope(params);
    let passed = end.slope == expected;
    let verdict = if passed { "PASS" } else { "FAIL" };

    let mut text = format!("K{params}: {} steps\n  start {start}\n", steps.len());
    for (step, v) in steps.iter().zip(trace.iter().skip(1)) {
        writeln!(text, "  {step:<6} {v}").unwrap();
    }
    writeln!(text, "final slope {} vs formula {expected}: {verdict}", end.slope).unwrap();

    let vertex = |v: &SurgeryVertex| {
        json!({
            "slope": v.slope.to_string(),
            "lk_a": v.lk_a.to_string(),
            "lk_b": v.lk_b.to_string(),
            "lk_ab": v.lk_ab.to_string(),
        })
    };
    let json = json!({
        "params": params.as_array(),
        "steps": steps.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "vertices": trace.iter().map(vertex).collect::<Vec<_>>(),
        "final_slope": end.slope.to_string(),
        "formula_slope": expected.to_string(),
        "pass": passed,
    });
    Ok(Output { text, json, passed })
}

fn check(params: &FamilyParams) -> Output {
    let toroidal = family::toroidal_hypotheses(params);
    let nonps = family::nonps_hypotheses(params);
    let claim = family::claim_seifert_invariant1(params.l, params.m, params.n);
    let mut text = format!("K{params}\ntoroidal={toroidal}\nnonps={nonps}\nclaim_seifert_invariant1={claim}\n");
    let mut json = json!({
        "params": params.as_array(),
        "toroidal": toroidal,
        "nonps": nonps,
        "claim_seifert_invariant1": claim,
    });

    match family::decomposition_pieces(params) {
        Ok((m1, m2)) => {
            text += &piece_text("M1", &m1);
            text += &piece_text("M2", &m2);
            json["pieces"] = json!({ "m1": piece_json(&m1), "m2": piece_json(&m2) });
        }
        Err(e) => {
            writeln!(text, "pieces: {e}").unwrap();
            json["pieces"] = json!({ "degenerate": e.to_string() });
        }
    }
    if params.l.abs() == 2 {
        match family::case4_h1_orders(params) {
            Ok(order) => {
                writeln!(text, "case4_h1_order={order}").unwrap();
                json["case4_h1_order"] = json!(order.to_string());
            }
            Err(e) => writeln!(text, "case4_h1_order: {e}").unwrap(),
        }
    }
    Output::ok(text, json)
}

fn verify(args: &VerifyArgs) -> Result<Output, Error> {
    fn mutated(p: &FamilyParams) -> BigInt {
        family::surgery_slope(p) + 1
    }

    let sweep = SweepBox {
        l: args.l,
        m: args.m,
        n: args.n,
        p: args.p,
        enforce_mp_zero: !args.mp_free,
        cap: args.cap,
    };
    let mut verifier = Verifier::new().jobs(args.jobs).timing(args.timing);
    if args.mutate_slope {
        verifier = verifier.slope_formula(mutated);
    }
    let report = verifier.run(args.suite, &sweep)?;
    Ok(Output {
        text: report_text(&report, args.timing),
        json: serde_json::to_value(&report).expect("report serializes"),
        passed: report.passed(),
    })
}

const TEXT_LIST_LIMIT: usize = 20;

fn report_text(r: &VerificationReport, timing: bool) -> String {
    let b = &r.sweep_box;
    let mut s = format!(
        "suite {}\nbox l={} m={} n={} p={}{}\nchecked {}\nskipped {}\n",
        r.suite,
        b.l,
        b.m,
        b.n,
        b.p,
        if b.enforce_mp_zero { " (m·p = 0)" } else { "" },
        r.checked,
        r.skipped.len()
    );
    for skip in r.skipped.iter().take(TEXT_LIST_LIMIT) {
        writeln!(s, "  {:?} {}", skip.params, skip.reason).unwrap();
    }
    if r.skipped.len() > TEXT_LIST_LIMIT {
        writeln!(s, "  ... {} more", r.skipped.len() - TEXT_LIST_LIMIT).unwrap();
    }
    writeln!(s, "failures {}", r.failures.len()).unwrap();
    for f in r.failures.iter().take(TEXT_LIST_LIMIT) {
        writeln!(s, "  {:?} {}: expected {}, got {}", f.params, f.check, f.expected, f.actual).unwrap();
    }
    if r.failures.len() > TEXT_LIST_LIMIT {
        writeln!(s, "  ... {} more", r.failures.len() - TEXT_LIST_LIMIT).unwrap();
    }
    for sub in &r.suites {
        writeln!(s, "  {:<24} checked {:>7}  skipped {:>5}  failed {}", sub.suite, sub.checked, sub.skipped, sub.failed)
            .unwrap();
    }
    if timing {
        writeln!(s, "elapsed {} ms", r.wall_time.as_millis()).unwrap();
    }
    s.push_str(if r.passed() { "PASS\n" } else { "FAIL\n" });
    s
}
