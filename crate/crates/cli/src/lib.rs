//! Command dispatch for the `cherednik` binary.
//!
//! Exit codes: 0 success, 1 a verification (or equivalence) failure,
//! 2 a parse error, 3 a violated precondition.

use std::fmt::Write as _;
use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cherednik_core::construction::{equivalence_report, SampleKind};
use cherednik_core::expr::{parse, ParseError};
use cherednik_core::intval::int_basis;
use cherednik_core::json as js;
use cherednik_core::opalgebra::{
    basis_enumerate, basis_labels, dp_certificate, decompose_in_basis, graded_dimension,
    operator_divisor, reduce_mod_p, Operator,
};
use cherednik_core::poly::{fmt_scalar, Scalar};
use cherednik_core::sl2::{build_triple, casimir, casimir_scalar, sigma, sigma_label};
use cherednik_core::{verify, DunklMode, Error, Sign};

pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "cherednik", version, about = "Exact computations in the rank-one rational Cherednik algebra")]
pub struct Cli {
    /// Value of the parameter: `symbolic`, an integer, or a half-integer `a/2`.
    #[arg(long = "c", global = true, default_value = "symbolic")]
    pub c: String,
    /// Degree bound for basis listings, action ranges and lattice truncation.
    #[arg(long, global = true, default_value_t = 12)]
    pub max_degree: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Reduce `act` output modulo this prime (numeric c only).
    #[arg(long, global = true)]
    pub prime: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Plus,
    Minus,
    Both,
}

impl SignArg {
    fn signs(self) -> Vec<Sign> {
        match self {
            SignArg::Plus => vec![Sign::Plus],
            SignArg::Minus => vec![Sign::Minus],
            SignArg::Both => Sign::BOTH.to_vec(),
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the normal form (graded action polynomials) of an expression.
    Normalize { expr: String },
    /// Print the images of x^k; with --prime, the reduced table instead.
    Act {
        expr: String,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        from: i64,
        /// Last exponent (defaults to --max-degree).
        #[arg(long, allow_negative_numbers = true)]
        to: Option<i64>,
    },
    /// Largest integer dividing the operator.
    Divisor { expr: String },
    /// Decide membership in the divided power extension.
    Member { expr: String },
    /// List the basis elements up to --max-degree.
    Basis {
        #[arg(long, value_enum, default_value_t = SignArg::Both)]
        sign: SignArg,
    },
    /// Coefficients of an operator in the basis (symbolic c only).
    Decompose { expr: String },
    /// Graded dimensions against 2(m+1).
    Hilbert,
    /// The sl2 triple, Casimir scalar and Sigma/Delta table.
    Sl2 {
        /// Bound on a+b+k for the Sigma table.
        #[arg(long, default_value_t = 4)]
        bound: usize,
    },
    /// Compare polynomial-module membership with the divided power extension.
    Abstract {
        /// Comma-separated values of c.
        #[arg(long, default_value = "-3,-1,0,1,2,1/2", allow_hyphen_values = true)]
        c_values: String,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Degree bound for basis rows (defaults to min(--max-degree, 8)).
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Run the invariant suite.
    Verify {
        /// Run only checks with this name or module.
        #[arg(long)]
        only: Option<String>,
        /// Flip every assertion of the named check.
        #[arg(long, hide = true)]
        negate: Option<String>,
    },
    /// Lattice of ring-valued action polynomials for one degree and parity.
    Lattice {
        #[arg(long, allow_negative_numbers = true)]
        degree: i64,
        #[arg(long, value_enum, default_value_t = SignArg::Plus)]
        sign: SignArg,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Normalize { .. } => "normalize",
            Command::Act { .. } => "act",
            Command::Divisor { .. } => "divisor",
            Command::Member { .. } => "member",
            Command::Basis { .. } => "basis",
            Command::Decompose { .. } => "decompose",
            Command::Hilbert => "hilbert",
            Command::Sl2 { .. } => "sl2",
            Command::Abstract { .. } => "abstract",
            Command::Verify { .. } => "verify",
            Command::Lattice { .. } => "lattice",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Parse(ParseError),
    Precondition(String),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Precondition(e.to_string())
    }
}

/// Successful output: text rendering, JSON payload, exit code.
struct Report {
    text: String,
    json: Value,
    code: i32,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { text, json, code: 0 }
    }
}

pub fn parse_mode(s: &str) -> Result<DunklMode, String> {
    if s == "symbolic" {
        return Ok(DunklMode::Symbolic);
    }
    let value: Scalar = s
        .parse()
        .map_err(|_| format!("--c expects `symbolic`, an integer or a/2, got `{s}`"))?;
    let doubled = &value * Scalar::from_integer(2.into());
    if !doubled.is_integer() {
        return Err(format!("--c must be an integer or a half-integer, got `{s}`"));
    }
    Ok(DunklMode::Numeric(value))
}

/// Runs the binary on `args` (including the program name), reading `-`
/// expressions from `stdin`.
pub fn run_args<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, stdin),
        Err(e) => {
            let rendered = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), rendered)
            } else {
                (rendered, String::new())
            };
            Outcome {
                code: e.exit_code(),
                stdout,
                stderr,
            }
        }
    }
}

pub fn run(cli: &Cli, stdin: &mut dyn Read) -> Outcome {
    let name = cli.command.name();
    let result = parse_mode(&cli.c)
        .map_err(Failure::Precondition)
        .and_then(|mode| dispatch(cli, &mode, stdin));
    match result {
        Ok(r) => Outcome {
            code: r.code,
            stdout: match cli.format {
                Format::Text => r.text,
                Format::Json => {
                    let mut v = r.json;
                    v["command"] = json!(name);
                    format!("{}\n", serde_json::to_string_pretty(&v).unwrap())
                }
            },
            stderr: String::new(),
        },
        Err(f) => {
            let (code, message, extra) = match &f {
                Failure::Parse(e) => (
                    EXIT_PARSE,
                    e.to_string(),
                    json!({ "kind": "parse", "offset": e.offset, "expected": e.expected, "found": e.found }),
                ),
                Failure::Precondition(m) => (EXIT_PRECONDITION, m.clone(), json!({ "kind": "precondition" })),
            };
            let stdout = match cli.format {
                Format::Text => String::new(),
                Format::Json => {
                    let mut err = extra;
                    err["message"] = json!(message);
                    let v = json!({ "command": name, "error": err });
                    format!("{}\n", serde_json::to_string_pretty(&v).unwrap())
                }
            };
            Outcome {
                code,
                stdout,
                stderr: format!("error: {message}\n"),
            }
        }
    }
}

fn read_expr(expr: &str, stdin: &mut dyn Read) -> Result<String, Failure> {
    if expr != "-" {
        return Ok(expr.to_string());
    }
    let mut s = String::new();
    stdin
        .read_to_string(&mut s)
        .map_err(|e| Failure::Precondition(format!("cannot read stdin: {e}")))?;
    Ok(s.trim().to_string())
}

fn operator_of(expr: &str, mode: &DunklMode, stdin: &mut dyn Read) -> Result<(String, Operator), Failure> {
    let input = read_expr(expr, stdin)?;
    let word = parse(&input)?;
    Ok((word.to_string(), word.to_operator(mode)))
}

fn dispatch(cli: &Cli, mode: &DunklMode, stdin: &mut dyn Read) -> Result<Report, Failure> {
    match &cli.command {
        Command::Normalize { expr } => {
            let (word, q) = operator_of(expr, mode, stdin)?;
            Ok(Report::ok(
                format!("{q}\n"),
                json!({ "expression": word, "operator": js::operator(&q) }),
            ))
        }
        Command::Act { expr, from, to } => {
            let (word, q) = operator_of(expr, mode, stdin)?;
            let to = to.unwrap_or(cli.max_degree as i64);
            if to < *from {
                return Err(Failure::Precondition(format!("empty range {from}..{to}")));
            }
            if let Some(p) = cli.prime {
                if *from < 0 {
                    return Err(Failure::Precondition("mod-p tables start at x^0".into()));
                }
                let table = reduce_mod_p(&q, p, to)?;
                let mut table_json = js::mod_p(&table);
                if let Some(rows) = table_json["rows"].as_array_mut() {
                    rows.retain(|r| r["exponent"].as_i64().is_some_and(|e| e >= *from));
                }
                let text: String = table
                    .to_string()
                    .lines()
                    .filter(|l| {
                        l.strip_prefix("x^")
                            .and_then(|r| r.split(' ').next())
                            .and_then(|e| e.parse::<i64>().ok())
                            .is_none_or(|e| e >= *from)
                    })
                    .map(|l| format!("{l}\n"))
                    .collect();
                return Ok(Report::ok(text, json!({ "expression": word, "table": table_json })));
            }
            let mut text = String::new();
            let mut images = Vec::new();
            for k in *from..=to {
                let v = q.act(k);
                let _ = writeln!(text, "x^{k} -> {v}");
                images.push(json!({ "exponent": k, "image": js::laurent(&v) }));
            }
            Ok(Report::ok(text, json!({ "expression": word, "images": images })))
        }
        Command::Divisor { expr } => {
            let (word, q) = operator_of(expr, mode, stdin)?;
            let d = operator_divisor(&q)?;
            Ok(Report::ok(
                format!("{d}\n"),
                json!({ "expression": word, "divisor": d.to_string() }),
            ))
        }
        Command::Member { expr } => {
            let (word, q) = operator_of(expr, mode, stdin)?;
            Ok(match dp_certificate(&q) {
                Ok(w) => Report::ok(
                    format!("{w}\n"),
                    json!({ "expression": word, "member": true, "witness": js::witness(&w) }),
                ),
                Err(reason) => Report::ok(
                    format!("refusal: {reason}\n"),
                    json!({ "expression": word, "member": false, "reason": reason.to_string() }),
                ),
            })
        }
        Command::Basis { sign } => {
            let mut text = String::new();
            let mut elements = Vec::new();
            for s in sign.signs() {
                for (label, q) in basis_enumerate(s, cli.max_degree, mode) {
                    let _ = writeln!(text, "{label}");
                    for line in q.to_string().lines() {
                        let _ = writeln!(text, "  {line}");
                    }
                    elements.push(json!({
                        "label": label.to_string(),
                        "total_degree": label.total_degree(),
                        "grading": label.grading(),
                        "operator": js::operator(&q),
                    }));
                }
            }
            Ok(Report::ok(text, json!({ "max_degree": cli.max_degree, "elements": elements })))
        }
        Command::Decompose { expr } => {
            let (word, q) = operator_of(expr, mode, stdin)?;
            let coeffs = decompose_in_basis(&q)?;
            let mut text = String::new();
            if coeffs.is_empty() {
                text.push_str("0\n");
            }
            let mut terms = Vec::new();
            for (label, a) in &coeffs {
                let _ = writeln!(text, "{label}: {a}");
                terms.push(json!({ "label": label.to_string(), "coefficient": js::coef_poly(a) }));
            }
            Ok(Report::ok(text, json!({ "expression": word, "terms": terms })))
        }
        Command::Hilbert => {
            let counted: Vec<usize> = (0..=cli.max_degree)
                .map(|m| {
                    Sign::BOTH
                        .iter()
                        .flat_map(|&s| basis_labels(s, m))
                        .filter(|l| l.total_degree() == m)
                        .count()
                })
                .collect();
            let expected: Vec<usize> = (0..=cli.max_degree).map(|m| 2 * (m + 1)).collect();
            let formula: Vec<usize> = (0..=cli.max_degree).map(graded_dimension).collect();
            let matches = counted == expected && formula == expected;
            let list = |v: &[usize]| v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",");
            let text = format!(
                "{}\nexpected 2(m+1): {}\n{}\n",
                list(&counted),
                list(&expected),
                if matches { "match" } else { "mismatch" }
            );
            Ok(Report {
                text,
                json: json!({ "dimensions": counted, "expected": expected, "match": matches }),
                code: if matches { 0 } else { EXIT_VERIFY },
            })
        }
        Command::Sl2 { bound } => Ok(sl2_report(mode, *bound)?),
        Command::Abstract { c_values, samples, seed, degree } => {
            let cs = c_values
                .split(',')
                .map(|s| match parse_mode(s.trim()) {
                    Ok(DunklMode::Numeric(c)) => Ok(c),
                    Ok(DunklMode::Symbolic) => Err(Failure::Precondition("--c-values must be numeric".into())),
                    Err(e) => Err(Failure::Precondition(e)),
                })
                .collect::<Result<Vec<_>, _>>()?;
            let degree = degree.unwrap_or(cli.max_degree.min(8));
            let rows = equivalence_report(&cs, degree, *samples, *seed);
            let mut text = String::new();
            let mut failures = 0;
            for c in &cs {
                let half = !c.is_integer();
                let rows_c: Vec<_> = rows.iter().filter(|r| &r.c == c).collect();
                let disagree = rows_c.iter().filter(|r| !r.agree()).count();
                let count = |k: SampleKind| rows_c.iter().filter(|r| r.kind == k).count();
                let _ = writeln!(
                    text,
                    "c = {}: {} basis, {} members, {} non-members, {} disagreements{}",
                    fmt_scalar(c),
                    count(SampleKind::Basis),
                    count(SampleKind::Member),
                    count(SampleKind::NonMember),
                    disagree,
                    if half { " (exploration)" } else { "" }
                );
                for r in rows_c.iter().filter(|r| !r.agree()) {
                    let _ = writeln!(text, "  {} sample: in_dp = {}, in_Hc = {}", r.kind, r.in_dp, r.in_hc);
                }
                if !half {
                    failures += disagree;
                }
            }
            let json_rows: Vec<Value> = rows.iter().map(js::equivalence_row).collect();
            Ok(Report {
                text,
                json: json!({ "degree_bound": degree, "rows": json_rows }),
                code: if failures == 0 { 0 } else { EXIT_VERIFY },
            })
        }
        Command::Verify { only, negate } => {
            let results = verify::run(only.as_deref(), negate.as_deref());
            if results.is_empty() {
                return Err(Failure::Precondition("no check matches --only".into()));
            }
            let mut text = String::new();
            let mut checks = Vec::new();
            for r in &results {
                let status = if r.passed() { "PASS" } else { "FAIL" };
                let _ = write!(text, "{status} {}::{} ({} assertions)", r.module, r.name, r.assertions);
                if let Some(d) = &r.detail {
                    let _ = write!(text, ": {d}");
                }
                text.push('\n');
                checks.push(json!({
                    "module": r.module,
                    "name": r.name,
                    "passed": r.passed(),
                    "assertions": r.assertions,
                    "failures": r.failures,
                    "detail": r.detail,
                }));
            }
            let failed = results.iter().filter(|r| !r.passed()).count();
            let _ = writeln!(text, "{} checks, {} failed", results.len(), failed);
            Ok(Report {
                text,
                json: json!({ "checks": checks, "failed": failed }),
                code: if failed == 0 { 0 } else { EXIT_VERIFY },
            })
        }
        Command::Lattice { degree, sign } => {
            let signs = sign.signs();
            let mut text = String::new();
            let mut lattices = Vec::new();
            for s in signs {
                let lat = int_basis(s, *degree, mode, cli.max_degree);
                let _ = writeln!(text, "sign {s}, degree {degree}, {mode}");
                for g in &lat.generators {
                    let _ = writeln!(text, "  {g}");
                }
                lattices.push(js::lattice(&lat));
            }
            Ok(Report::ok(text, json!({ "lattices": lattices })))
        }
    }
}

fn sl2_report(mode: &DunklMode, bound: usize) -> Result<Report, Failure> {
    let t = build_triple(mode);
    let defects = t.defects()?;
    let relations_hold = defects.iter().all(Operator::is_zero);
    let scalar = casimir_scalar(mode);
    let central = &casimir(mode) - &(&Operator::scalar(mode, scalar.clone()) * &Operator::e_plus(mode));
    let casimir_holds = central.is_zero();
    let mut text = String::new();
    for (name, q) in [("E", &t.e), ("H", &t.h), ("F", &t.f)] {
        let _ = writeln!(text, "{name}: {}", q.to_string().replace('\n', "\n   "));
    }
    let _ = writeln!(text, "brackets: {}", if relations_hold { "hold" } else { "fail" });
    let _ = writeln!(
        text,
        "Casimir scalar: {scalar} ({})",
        if casimir_holds { "holds" } else { "fails" }
    );
    let mut table = Vec::new();
    let mut all_equal = true;
    for a in 0..=bound {
        for b in 0..=bound - a {
            for k in 0..=bound - a - b {
                let label = sigma_label(a, b, k);
                let equal = label.map(|l| sigma(a, b, k, mode) == l.operator(mode));
                all_equal &= equal != Some(false);
                let _ = writeln!(
                    text,
                    "Sigma[{a},{b},{k}] = {}",
                    match (&label, equal) {
                        (Some(l), Some(true)) => l.to_string(),
                        (Some(l), _) => format!("{l} MISMATCH"),
                        (None, _) => "(no single basis label)".to_string(),
                    }
                );
                table.push(json!({
                    "a": a,
                    "b": b,
                    "k": k,
                    "label": label.map(|l| l.to_string()),
                    "equal": equal,
                }));
            }
        }
    }
    let ok = relations_hold && casimir_holds && all_equal;
    Ok(Report {
        text,
        json: json!({
            "mode": js::mode(mode),
            "E": js::operator(&t.e),
            "H": js::operator(&t.h),
            "F": js::operator(&t.f),
            "brackets_hold": relations_hold,
            "casimir_scalar": js::coef_poly(&scalar),
            "casimir_holds": casimir_holds,
            "sigma_table": table,
        }),
        code: if ok { 0 } else { EXIT_VERIFY },
    })
}
