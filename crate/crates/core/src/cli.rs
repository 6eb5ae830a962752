//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error,
//! 3 a PERFECT record from `scan`.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use crate::angles::{lemma_scan, trivial_solutions, LemmaKind};
use crate::exactnum::{approx, parse_rational, Rational};
use crate::leaningbox::{
    cuboid_gap, equiv_params, explicit_identity_suite, family_lambda0, integer_from_scaled, integer_from_scaled_raw,
    symmetry_params, verify_integer, FamilyPoint, IntegerBox, ScaledBox, INTEGER_FIELDS,
};
use crate::report::Report;
use crate::search::{corollary_scan_with, verify_worked_examples, RecordKind, ScanRecord, DEFAULT_BOUND_FACTOR};
use crate::suites::run_identity_suites;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_COUNTEREXAMPLE: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "cuboid",
    version,
    about = "Exact rational leaning boxes and bounded cuboid scans"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Keep the integer box unreduced (lcm scaling only).
    #[arg(long, global = true)]
    pub raw: bool,
    /// Add decimal renderings, marked approximate.
    #[arg(long, global = true)]
    pub approx: bool,
    /// Also write the output to a file in this directory.
    #[arg(long, global = true, env = "CUBOID_OUT_DIR")]
    pub out_dir: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Family member with parameters s1 and m.
    Family {
        #[arg(long, allow_hyphen_values = true)]
        s1: String,
        #[arg(long, allow_hyphen_values = true)]
        m: String,
    },
    /// Check the five box equations on x y z a b c1 c2 d1 d2.
    Verify {
        #[arg(
            num_args = 9,
            required = true,
            value_names = ["X", "Y", "Z", "A", "B", "C1", "C2", "D1", "D2"],
            allow_hyphen_values = true
        )]
        values: Vec<String>,
    },
    /// Seeded randomized identity suites.
    Identities {
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        cases: u64,
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
    /// Bounded scan for two-Heron-angle configurations.
    Scan {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_edge: u64,
        #[arg(long, default_value_t = DEFAULT_BOUND_FACTOR, value_parser = clap::value_parser!(u64).range(1..))]
        bound_factor: u64,
    },
    /// Fixed worked examples.
    Examples,
    /// Bounded searches against the known trivial solution sets.
    LemmaScan {
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        height: u64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Family { .. } => "family",
            Command::Verify { .. } => "verify",
            Command::Identities { .. } => "identities",
            Command::Scan { .. } => "scan",
            Command::Examples => "examples",
            Command::LemmaScan { .. } => "lemma-scan",
        }
    }
}

/// Everything a command produces; `main` does the printing.
#[derive(Debug, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: msg.into() + "\n",
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run_from<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let rendered = e.render().to_string();
            let code = e.exit_code();
            if code == 0 {
                Outcome::ok(rendered)
            } else {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: rendered,
                }
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let mut out = match &cli.command {
        Command::Family { s1, m } => cmd_family(cli, s1, m),
        Command::Verify { values } => cmd_verify(cli, values),
        Command::Identities {
            seed,
            cases,
            inject_fault,
        } => cmd_identities(cli, *seed, *cases as usize, inject_fault.as_deref()),
        Command::Scan { max_edge, bound_factor } => cmd_scan(cli, *max_edge, *bound_factor),
        Command::Examples => cmd_examples(cli),
        Command::LemmaScan { height } => cmd_lemma_scan(cli, *height),
    };
    if let Some(dir) = &cli.out_dir {
        if !out.stdout.is_empty() {
            let ext = match cli.format {
                Format::Text => "txt",
                Format::Json => "json",
                Format::Csv => "csv",
            };
            let path = dir.join(format!("{}.{ext}", cli.command.name()));
            if let Err(e) = fs::create_dir_all(dir).and_then(|_| fs::write(&path, &out.stdout)) {
                out.stderr.push_str(&format!("cannot write {}: {e}\n", path.display()));
                out.code = out.code.max(EXIT_USAGE);
            }
        }
    }
    out
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn decimal(q: &Rational) -> String {
    format!("{:.9}", approx(q))
}

fn box_of(cli: &Cli, s: &ScaledBox) -> IntegerBox {
    if cli.raw {
        integer_from_scaled_raw(s)
    } else {
        integer_from_scaled(s)
    }
}

fn integer_line(b: &IntegerBox) -> String {
    INTEGER_FIELDS
        .iter()
        .zip(b.to_array())
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn integer_csv(b: &IntegerBox) -> String {
    let values: Vec<String> = b.to_array().iter().map(ToString::to_string).collect();
    format!("{}\n{}\n", INTEGER_FIELDS.join(","), values.join(","))
}

fn labelled(prefix: &str, values: &[&Rational]) -> String {
    values
        .iter()
        .enumerate()
        .map(|(i, q)| format!("{prefix}{}={q}", i + 1))
        .collect::<Vec<_>>()
        .join(" ")
}

fn labelled_approx(prefix: &str, values: &[&Rational]) -> String {
    values
        .iter()
        .enumerate()
        .map(|(i, q)| format!("{prefix}{}~{}", i + 1, decimal(q)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn family_text(cli: &Cli, p: &FamilyPoint, s: &ScaledBox, b: &IntegerBox) -> String {
    let mut t = String::new();
    let gens = p.quad.as_array();
    writeln!(t, "parameters  s1={} m={}", p.s1, p.m).unwrap();
    writeln!(t, "generators  {}", labelled("s", &gens)).unwrap();
    writeln!(t, "scaled      {}", labelled("u", &s.u())).unwrap();
    writeln!(t, "            {}", labelled("v", &s.v())).unwrap();
    writeln!(t, "integer     {}", integer_line(b)).unwrap();
    if cli.approx {
        writeln!(t, "approximate {}", labelled_approx("u", &s.u())).unwrap();
        writeln!(t, "approximate {}", labelled_approx("v", &s.v())).unwrap();
    }
    t
}

fn approx_json(s: &ScaledBox) -> Value {
    let mut map = serde_json::Map::new();
    for (i, q) in s.u().iter().enumerate() {
        map.insert(format!("u{}", i + 1), Value::String(decimal(q)));
    }
    for (i, q) in s.v().iter().enumerate() {
        map.insert(format!("v{}", i + 1), Value::String(decimal(q)));
    }
    Value::Object(map)
}

fn family_json(cli: &Cli, p: &FamilyPoint, s: &ScaledBox, b: &IntegerBox) -> Value {
    let mut v = json!({
        "point": p,
        "scaled": s,
        "integer": b,
    });
    if cli.approx {
        v["approximate"] = approx_json(s);
    }
    v
}

fn cmd_family(cli: &Cli, s1: &str, m: &str) -> Outcome {
    let parsed = parse_rational(s1).and_then(|s1| Ok((s1, parse_rational(m)?)));
    let built = parsed.and_then(|(s1, m)| {
        let p = family_lambda0(&s1, &m)?;
        let s = p.scaled()?;
        Ok((p, s))
    });
    let (p, s) = match built {
        Ok(v) => v,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let b = box_of(cli, &s);
    Outcome::ok(match cli.format {
        Format::Text => family_text(cli, &p, &s, &b),
        Format::Json => to_json(&family_json(cli, &p, &s, &b)),
        Format::Csv => integer_csv(&b),
    })
}

fn parse_box(values: &[String]) -> Result<IntegerBox, String> {
    if values.len() != 9 {
        return Err(format!("expected 9 integers, got {}", values.len()));
    }
    let mut parsed = Vec::with_capacity(9);
    for (name, v) in INTEGER_FIELDS.iter().zip(values) {
        let n: BigUint = v
            .parse()
            .map_err(|_| format!("{name}={v:?} is not a positive integer"))?;
        if n == BigUint::ZERO {
            return Err(format!("{name}=0 is not a positive integer"));
        }
        parsed.push(n);
    }
    let arr: [BigUint; 9] = parsed.try_into().expect("nine values");
    Ok(IntegerBox::from_array(arr))
}

fn report_text(r: &Report) -> String {
    r.to_string()
}

fn cmd_verify(cli: &Cli, values: &[String]) -> Outcome {
    let b = match parse_box(values) {
        Ok(b) => b,
        Err(e) => return Outcome::usage(e),
    };
    let r = verify_integer(&b);
    let holds = r.all_hold();
    let stdout = match cli.format {
        Format::Json => to_json(&json!({ "box": b, "report": r, "holds": holds })),
        Format::Csv => {
            let mut t = String::from("id,status\n");
            for c in &r.checks {
                writeln!(
                    t,
                    "{},{}",
                    c.id,
                    serde_json::to_value(c.status).unwrap().as_str().unwrap()
                )
                .unwrap();
            }
            t
        }
        Format::Text => report_text(&r),
    };
    let mut out = Outcome::ok(stdout);
    if !holds {
        out.code = EXIT_FAILURE;
        let ids: Vec<&str> = r.failures().map(|c| c.id).collect();
        out.stderr = format!("failing: {}\n", ids.join(", "));
    }
    out
}

fn cmd_identities(cli: &Cli, seed: u64, cases: usize, fault: Option<&str>) -> Outcome {
    let run = run_identity_suites(seed, cases, fault);
    let stdout = match cli.format {
        Format::Json => to_json(&run),
        Format::Csv => {
            let mut t = String::from("suite,cases,holds,flagged\n");
            for s in &run.totals {
                writeln!(t, "{},{},{},{}", s.suite, s.cases, s.holds, s.flagged).unwrap();
            }
            t
        }
        Format::Text => {
            let mut t = format!("seed={seed} cases={cases}\n");
            for s in &run.totals {
                writeln!(
                    t,
                    "{:<14} cases={} holds={} flagged={}",
                    s.suite, s.cases, s.holds, s.flagged
                )
                .unwrap();
            }
            if run.passed() {
                t.push_str("all identities hold\n");
            }
            t
        }
    };
    let mut out = Outcome::ok(stdout);
    if let Some(f) = &run.failure {
        out.code = EXIT_FAILURE;
        out.stderr = format!("{f}\n");
    }
    out
}

fn scan_text(records: &[ScanRecord]) -> String {
    let mut t = String::new();
    for r in records {
        writeln!(
            t,
            "t={} legA={} legW={} hyp={} alpha={} psi={} alpha1={} {}",
            r.t, r.leg_a, r.leg_w, r.hyp, r.class_alpha, r.class_psi, r.class_alpha1, r.kind
        )
        .unwrap();
    }
    t
}

fn scan_csv(records: &[ScanRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    if records.is_empty() {
        w.write_record([
            "t",
            "legA",
            "legW",
            "hyp",
            "classAlpha",
            "classPsi",
            "classAlpha1",
            "kind",
        ])
        .expect("in-memory write");
    }
    for r in records {
        w.serialize(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

fn cmd_scan(cli: &Cli, max_edge: u64, bound_factor: u64) -> Outcome {
    let records = corollary_scan_with(max_edge, bound_factor);
    let stdout = match cli.format {
        Format::Text => scan_text(&records),
        Format::Json => to_json(&records),
        Format::Csv => scan_csv(&records),
    };
    let perfect = records.iter().filter(|r| r.kind == RecordKind::Perfect).count();
    let mut out = Outcome::ok(stdout);
    out.stderr = format!("{} records up to t={max_edge}, {perfect} PERFECT\n", records.len());
    if perfect > 0 {
        out.code = EXIT_COUNTEREXAMPLE;
    }
    out
}

#[derive(Serialize)]
struct FamilyExample {
    point: FamilyPoint,
    scaled: ScaledBox,
    integer: IntegerBox,
    verify: Report,
    #[serde(with = "crate::exactnum::serde_rational")]
    gap: Rational,
    #[serde(with = "crate::exactnum::serde_rational")]
    cos2: Rational,
    gap_report: Report,
    #[serde(with = "crate::exactnum::serde_rational")]
    k: Rational,
    #[serde(with = "crate::exactnum::serde_rational")]
    lambda: Rational,
    #[serde(with = "crate::exactnum::serde_rational")]
    r: Rational,
    #[serde(with = "crate::exactnum::serde_rational")]
    r1: Rational,
    equiv: Report,
    identities: Report,
}

fn family_example(cli: &Cli, s1: Rational, m: Rational) -> crate::Result<FamilyExample> {
    let point = family_lambda0(&s1, &m)?;
    let scaled = point.scaled()?;
    let integer = box_of(cli, &scaled);
    let gap = cuboid_gap(&point);
    let sym = symmetry_params(&scaled)?;
    let eq = equiv_params(&scaled)?;
    Ok(FamilyExample {
        verify: verify_integer(&integer),
        identities: explicit_identity_suite(&scaled, &point),
        gap: gap.gap,
        cos2: gap.cos2,
        gap_report: gap.report,
        k: sym.k,
        lambda: sym.lambda,
        r: eq.r,
        r1: eq.r1,
        equiv: eq.report,
        point,
        scaled,
        integer,
    })
}

fn summary(r: &Report) -> String {
    let flagged = r
        .checks
        .iter()
        .filter(|c| c.status == crate::report::Status::Flagged)
        .count();
    let failing = r.failures().count();
    format!("{} checks, {failing} failing, {flagged} flagged", r.len())
}

fn cmd_examples(cli: &Cli) -> Outcome {
    let r = |n: i64, d: i64| Rational::new(n.into(), d.into());
    let params = [(r(1, 2), r(1, 3)), (r(12, 25), r(1, 3))];
    let mut examples = Vec::new();
    for (s1, m) in params {
        match family_example(cli, s1, m) {
            Ok(e) => examples.push(e),
            Err(e) => {
                return Outcome {
                    code: EXIT_FAILURE,
                    stdout: String::new(),
                    stderr: format!("{e}\n"),
                }
            }
        }
    }
    let scan = verify_worked_examples();
    let records = [ScanRecord::new(240, 44, 117, 125), ScanRecord::new(520, 756, 117, 765)];
    let all_hold = examples
        .iter()
        .all(|e| e.verify.all_hold() && e.gap_report.all_hold() && e.equiv.all_hold() && e.identities.all_hold())
        && scan.all_hold();

    let stdout = match cli.format {
        Format::Json => to_json(&json!({
            "families": examples,
            "scanExamples": { "records": records, "report": scan },
            "allHold": all_hold,
        })),
        Format::Csv => {
            let mut t = String::new();
            t.push_str(&integer_csv(&examples[0].integer));
            for e in &examples[1..] {
                t.push_str(integer_csv(&e.integer).lines().nth(1).unwrap_or_default());
                t.push('\n');
            }
            t
        }
        Format::Text => {
            let mut t = String::new();
            for (i, e) in examples.iter().enumerate() {
                writeln!(t, "example {}", i + 1).unwrap();
                for line in family_text(cli, &e.point, &e.scaled, &e.integer).lines() {
                    writeln!(t, "  {line}").unwrap();
                }
                writeln!(t, "  verify      {}", summary(&e.verify)).unwrap();
                writeln!(
                    t,
                    "  gap         s3-s4={} cos2a={} ({})",
                    e.gap,
                    e.cos2,
                    summary(&e.gap_report)
                )
                .unwrap();
                writeln!(t, "  symmetry    k={} lambda={}", e.k, e.lambda).unwrap();
                writeln!(t, "  equivalence r={} r1={} ({})", e.r, e.r1, summary(&e.equiv)).unwrap();
                writeln!(t, "  identities  {}", summary(&e.identities)).unwrap();
            }
            writeln!(t, "scan examples").unwrap();
            t.push_str(
                &scan_text(&records)
                    .lines()
                    .map(|l| format!("  {l}\n"))
                    .collect::<String>(),
            );
            writeln!(t, "  reconstruction {}", summary(&scan)).unwrap();
            writeln!(t, "all checks hold: {all_hold}").unwrap();
            t
        }
    };
    let mut out = Outcome::ok(stdout);
    if !all_hold {
        out.code = EXIT_FAILURE;
    }
    out
}

fn cmd_lemma_scan(cli: &Cli, height: u64) -> Outcome {
    let results: Vec<_> = LemmaKind::ALL
        .iter()
        .map(|&k| {
            let found = lemma_scan(k, height);
            let trivial = found == trivial_solutions(k);
            (k, found, trivial)
        })
        .collect();
    let all_trivial = results.iter().all(|r| r.2);
    let stdout = match cli.format {
        Format::Json => to_json(
            &results
                .iter()
                .map(|(k, found, trivial)| json!({ "kind": k, "height": height, "found": found, "trivialOnly": trivial }))
                .collect::<Vec<_>>(),
        ),
        Format::Csv => {
            let mut t = String::from("kind,x,y\n");
            for (k, found, _) in &results {
                for f in found {
                    writeln!(t, "{},{},{}", k.name(), f.x, f.y).unwrap();
                }
            }
            t
        }
        Format::Text => {
            let mut t = String::new();
            for (k, found, trivial) in &results {
                let pts: Vec<String> = found.iter().map(|f| format!("({}, {})", f.x, f.y)).collect();
                let tag = if *trivial { "trivial only" } else { "NON-TRIVIAL" };
                writeln!(t, "{:<11} height={height} {tag}: {}", k.name(), pts.join(" ")).unwrap();
            }
            t
        }
    };
    let mut out = Outcome::ok(stdout);
    if !all_trivial {
        out.code = EXIT_COUNTEREXAMPLE;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Outcome {
        run_from(std::iter::once("cuboid").chain(args.iter().copied()))
    }

    #[test]
    fn family_example_one() {
        let o = run(&["family", "--s1", "1/2", "--m", "1/3"]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        assert!(o
            .stdout
            .contains("x=1120 y=840 z=1035 a=1400 b=1525 c1=969 c2=1617 d1=1481 d2=1967"));
    }

    #[test]
    fn family_domain_error() {
        let o = run(&["family", "--s1", "1/2", "--m", "1/5"]);
        assert_eq!(o.code, EXIT_USAGE);
        assert_eq!(o.stderr.trim(), "s2=119/80 out of (0,1)");
        assert_eq!(run(&["family", "--s1", "x", "--m", "1/3"]).code, EXIT_USAGE);
    }

    #[test]
    fn verify_codes() {
        let good = ["1120", "840", "1035", "1400", "1525", "969", "1617", "1481", "1967"];
        let mut args = vec!["verify"];
        args.extend(good);
        assert_eq!(run(&args).code, 0);
        args[5] = "1526";
        let o = run(&args);
        assert_eq!(o.code, EXIT_FAILURE);
        assert!(o.stderr.contains("edge-face-xz"));
        assert_eq!(run(&args[..9]).code, EXIT_USAGE);
        args[1] = "0";
        assert_eq!(run(&args).code, EXIT_USAGE);
        args[1] = "-3";
        assert_eq!(run(&args).code, EXIT_USAGE);
    }

    #[test]
    fn identities_fast_path_and_fault() {
        assert_eq!(run(&["identities", "--seed", "7", "--cases", "1"]).code, 0);
        let o = run(&["identities", "--cases", "2", "--inject-fault", "omega-pp-product"]);
        assert_eq!(o.code, EXIT_FAILURE);
        assert!(o.stderr.starts_with("omega-pp-product fails"));
        assert_eq!(run(&["identities", "--cases", "0"]).code, EXIT_USAGE);
    }

    #[test]
    fn scan_small() {
        let o = run(&["scan", "--max-edge", "10"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.is_empty());
        let o = run(&["scan", "--max-edge", "10", "--format", "csv"]);
        assert_eq!(o.stdout, "t,legA,legW,hyp,classAlpha,classPsi,classAlpha1,kind\n");
        assert_eq!(run(&["scan", "--max-edge", "0"]).code, EXIT_USAGE);
        assert_eq!(run(&["scan", "--format", "xml", "--max-edge", "3"]).code, EXIT_USAGE);
    }

    #[test]
    fn examples_deterministic() {
        let a = run(&["examples", "--format", "json"]);
        assert_eq!(a.code, 0, "{}", a.stderr);
        assert_eq!(a.stdout, run(&["examples", "--format", "json"]).stdout);
        assert!(run(&["examples"]).stdout.contains("all checks hold: true"));
    }

    #[test]
    fn help_is_success() {
        assert_eq!(run(&["--help"]).code, 0);
        assert_eq!(run(&[]).code, EXIT_USAGE);
    }
}
