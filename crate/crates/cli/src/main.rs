//! `hexatile`: counts, determinants, identity checks and SVG renderings.
//!
//! Exit codes: 0 success, 1 an identity failed, 2 usage or domain error,
//! 3 the brute-force budget was exceeded.

mod svg;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value as Json};

use hexatile::exactnum::{format_rational, rat, Integer, Rational};
use hexatile::formulas::{self, ClassTag};
use hexatile::lgvpaths::region_lgv;
use hexatile::matchoracle::MatchOracle;
use hexatile::matrices::{build, determinant, determinant_condensation, MatrixName, RationalMatrix};
use hexatile::regions::{cored_hexagon, hexagon, reflection_split, weighted_pentagon, PentagonKind, Region, Symmetry};
use hexatile::verify::{Bounds, IdentityId, IdentityReport, Verifier};
use hexatile::Error;

#[derive(Parser)]
#[command(name = "hexatile", version, about = "Exact enumeration of lozenge tilings and plane partition symmetry classes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the tilings in a symmetry class.
    Count(CountArgs),
    /// Evaluate the determinant of a named matrix.
    Det(DetArgs),
    /// Check identities and report both sides.
    Verify(VerifyArgs),
    /// Draw one tiling of a region as SVG.
    Render(RenderArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Class {
    Base,
    Cs,
    Cstc,
    Cssc,
    Tssc,
    Tc,
    Sc,
}

impl Class {
    fn tag(self) -> ClassTag {
        match self {
            Class::Base => ClassTag::Base,
            Class::Cs => ClassTag::Cs,
            Class::Cstc => ClassTag::Cstc,
            Class::Cssc => ClassTag::Cssc,
            Class::Tssc => ClassTag::Tssc,
            Class::Tc => ClassTag::Tc,
            Class::Sc => ClassTag::Sc,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Formula,
    Det,
    Brute,
}

/// Parameters: base `--a --b --c`; cs, cstc `--n --x`; cssc, tssc `--size`;
/// tc `--a --b` for H(a,a,2b); sc `--a --c` for H(a,a,c).
#[derive(clap::Args)]
struct CountArgs {
    #[arg(long, value_enum)]
    class: Class,
    #[arg(long, value_enum, default_value = "formula")]
    method: Method,
    #[arg(long)]
    n: Option<i64>,
    #[arg(long)]
    x: Option<i64>,
    #[arg(long)]
    a: Option<i64>,
    #[arg(long)]
    b: Option<i64>,
    #[arg(long)]
    c: Option<i64>,
    #[arg(long)]
    size: Option<i64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum DetMethod {
    Bareiss,
    Condensation,
}

#[derive(clap::Args)]
struct DetArgs {
    /// One of K, B, C, R, W, w.
    #[arg(long)]
    matrix: String,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    x: i64,
    #[arg(long)]
    y: Option<i64>,
    #[arg(long, value_enum, default_value = "bareiss")]
    method: DetMethod,
}

#[derive(clap::Args)]
struct VerifyArgs {
    #[arg(long, conflicts_with = "all", required_unless_present = "all")]
    id: Option<String>,
    #[arg(long)]
    all: bool,
    #[arg(long)]
    n: Option<i64>,
    #[arg(long)]
    x: Option<i64>,
    #[arg(long)]
    y: Option<i64>,
    #[arg(long)]
    a: Option<i64>,
    #[arg(long)]
    b: Option<i64>,
    #[arg(long)]
    c: Option<i64>,
    #[arg(long, default_value_t = 2)]
    max_n: i64,
    #[arg(long, default_value_t = 2)]
    max_x: i64,
    /// Defaults to `--max-x`.
    #[arg(long)]
    max_y: Option<i64>,
    #[arg(long)]
    json: bool,
    #[arg(long, hide = true)]
    inject_fault: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum RegionKind {
    Hexagon,
    Cored,
    PentagonA,
    PentagonB,
    PentagonC,
}

#[derive(clap::Args)]
struct RenderArgs {
    #[arg(long, value_enum)]
    region: RegionKind,
    #[arg(long)]
    a: Option<i64>,
    #[arg(long)]
    b: Option<i64>,
    #[arg(long)]
    c: Option<i64>,
    #[arg(long)]
    n: Option<i64>,
    #[arg(long)]
    x: Option<i64>,
    #[arg(long, default_value_t = 0)]
    tiling_index: usize,
    #[arg(long)]
    out: PathBuf,
}

enum Failure {
    Usage(String),
    Resource(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(m) => Failure::Usage(m),
            Error::Resource(m) => Failure::Resource(m),
        }
    }
}

type CmdResult = std::result::Result<ExitCode, Failure>;

fn arg(v: Option<i64>, name: &str) -> std::result::Result<i64, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("missing --{name}")))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Count(a) => cmd_count(a),
        Command::Det(a) => cmd_det(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Render(a) => cmd_render(a),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Resource(m)) => {
            eprintln!("resource limit: {m}");
            ExitCode::from(3)
        }
    }
}

fn invariant(region: &Region, syms: &[Symmetry]) -> Result<Rational, Failure> {
    let count = MatchOracle::from_env().count_invariant(region, &syms.iter().copied().collect())?;
    Ok(Rational::from_integer(count))
}

fn det_value(name: MatrixName, n: i64, x: i64) -> Result<Rational, Failure> {
    Ok(determinant(&build(name, n as usize, x, None)?)?)
}

/// `PP(a, b, c)` through the path determinant of `H(a, b, c)`.
fn pp_by_paths(a: i64, b: i64, c: i64) -> Result<Rational, Failure> {
    if a == 0 || b == 0 || c == 0 {
        return Ok(rat(1));
    }
    Ok(region_lgv(&hexagon(a, b, c)?)?)
}

fn parity_zero(note: &str) -> CmdResult {
    eprintln!("note: {note}; the count is 0");
    println!("0");
    Ok(ExitCode::SUCCESS)
}

fn cmd_count(args: CountArgs) -> CmdResult {
    let class = args.class.tag();
    let value: Rational = match class {
        ClassTag::Base => {
            let (a, b, c) = (arg(args.a, "a")?, arg(args.b, "b")?, arg(args.c, "c")?);
            match args.method {
                Method::Formula => Rational::from_integer(formulas::macmahon_pp(a, b, c)?),
                Method::Det => {
                    if a < 0 || b < 0 || c < 0 {
                        return Err(Failure::Usage("sides must be nonnegative".into()));
                    }
                    pp_by_paths(a, b, c)?
                }
                Method::Brute if a == 0 && b == 0 && c == 0 => rat(1),
                Method::Brute => invariant(&hexagon(a, b, c)?, &[])?,
            }
        }
        ClassTag::Cs => {
            let (n, x) = (arg(args.n, "n")?, arg(args.x, "x")?);
            match args.method {
                Method::Formula => Rational::from_integer(formulas::cs_closed(n, x)?),
                Method::Det => {
                    if n < 0 || x < 0 {
                        return Err(Failure::Usage("CS needs n, x >= 0".into()));
                    }
                    let un = n as usize;
                    determinant(&RationalMatrix::identity(un).add(&build(MatrixName::B, un, x, None)?)?)?
                }
                Method::Brute => invariant(&cored_hexagon(n, x)?, &[Symmetry::R])?,
            }
        }
        ClassTag::Cstc => {
            let (n, x) = (arg(args.n, "n")?, arg(args.x, "x")?);
            if n < 0 || x < 0 {
                return Err(Failure::Usage("CSTC needs n, x >= 0".into()));
            }
            if n % 2 == 1 || x % 2 == 1 {
                return parity_zero("CSTC vanishes unless n and x are both even");
            }
            match args.method {
                Method::Formula => Rational::from_integer(formulas::cstc_closed(n, x)?),
                Method::Det => det_value(MatrixName::C, n / 2, x / 2)?,
                Method::Brute => invariant(&cored_hexagon(n, x)?, &[Symmetry::R, Symmetry::TPrime])?,
            }
        }
        ClassTag::Cssc | ClassTag::Tssc => {
            let size = arg(args.size, "size")?;
            if size < 2 {
                return Err(Failure::Usage("--size must be at least 2".into()));
            }
            if size % 2 == 1 {
                return parity_zero("self-complementary classes need an even size");
            }
            let cssc_det = || det_value(MatrixName::W, size / 2 - 1, 2);
            match (class, args.method) {
                (ClassTag::Cssc, Method::Formula) => Rational::from_integer(formulas::cssc_closed(size)?),
                (ClassTag::Cssc, Method::Det) => cssc_det()?,
                (ClassTag::Cssc, Method::Brute) => invariant(&hexagon(size, size, size)?, &[Symmetry::R, Symmetry::K])?,
                (_, Method::Formula) => Rational::from_integer(formulas::tssc_closed(size)?),
                (_, Method::Det) => {
                    let square = cssc_det()?.to_integer();
                    let root: Integer = square.sqrt();
                    if &root * &root != square {
                        return Err(Failure::Usage(format!("det W is not a perfect square: {square}")));
                    }
                    Rational::from_integer(root)
                }
                (_, Method::Brute) => {
                    invariant(&hexagon(size, size, size)?, &[Symmetry::R, Symmetry::T, Symmetry::K])?
                }
            }
        }
        ClassTag::Tc => {
            let (a, b) = (arg(args.a, "a")?, arg(args.b, "b")?);
            match args.method {
                Method::Formula => Rational::from_integer(formulas::tc_closed(a, b)?),
                Method::Det => {
                    if a < 1 || b < 0 {
                        return Err(Failure::Usage("TC needs a >= 1, b >= 0".into()));
                    }
                    let (axis, half) = reflection_split(&hexagon(a, a, 2 * b)?, Symmetry::TPrime)?;
                    region_lgv(&axis)? * region_lgv(&half)?
                }
                Method::Brute => invariant(&hexagon(a, a, 2 * b)?, &[Symmetry::TPrime])?,
            }
        }
        ClassTag::Sc => {
            let (a, c) = (arg(args.a, "a")?, arg(args.c, "c")?);
            if a < 0 || c < 0 {
                return Err(Failure::Usage("SC needs a, c >= 0".into()));
            }
            if a % 2 == 1 && c % 2 == 1 {
                return parity_zero("SC(a,a,c) vanishes when a and c are both odd");
            }
            match args.method {
                Method::Formula => Rational::from_integer(formulas::sc_closed(a, c)?),
                Method::Det => {
                    let (x, y) = (a / 2, c / 2);
                    match (a % 2, c % 2) {
                        (0, 0) => pp_by_paths(x, x, y)?.pow(2),
                        (0, _) => pp_by_paths(x, x, y)? * pp_by_paths(x, x, y + 1)?,
                        _ => pp_by_paths(x, x + 1, y)?.pow(2),
                    }
                }
                Method::Brute if a == 0 || c == 0 => rat(1),
                Method::Brute => invariant(&hexagon(a, a, c)?, &[Symmetry::K])?,
            }
        }
    };
    println!("{}", format_rational(&value));
    Ok(ExitCode::SUCCESS)
}

fn cmd_det(args: DetArgs) -> CmdResult {
    let name = MatrixName::from_symbol(&args.matrix)
        .ok_or_else(|| Failure::Usage(format!("unknown matrix '{}'", args.matrix)))?;
    let m = build(name, args.n, args.x, args.y)?;
    match args.method {
        DetMethod::Bareiss => println!("{}", format_rational(&determinant(&m)?)),
        DetMethod::Condensation => {
            let (v, how) = determinant_condensation(&m)?;
            println!("{} ({})", format_rational(&v), how.tag());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn report_json(r: &IdentityReport) -> Json {
    let params: serde_json::Map<String, Json> = r.params.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
    json!({
        "id": r.id.name(),
        "params": params,
        "lhs": r.lhs.render(),
        "rhs": r.rhs.render(),
        "lhs_route": r.lhs_route,
        "rhs_route": r.rhs_route,
        "ok": r.ok,
    })
}

fn cmd_verify(args: VerifyArgs) -> CmdResult {
    let verifier = Verifier { inject_fault: args.inject_fault, ..Verifier::default() };
    let reports = if args.all {
        let bounds = Bounds { max_n: args.max_n, max_x: args.max_x, max_y: args.max_y.unwrap_or(args.max_x) };
        verifier.run_suite(bounds)?
    } else {
        let id: IdentityId = args.id.as_deref().unwrap_or_default().parse()?;
        let given = [("n", args.n), ("x", args.x), ("y", args.y), ("a", args.a), ("b", args.b), ("c", args.c)];
        let params: BTreeMap<String, i64> =
            given.iter().filter_map(|(k, v)| v.map(|v| (k.to_string(), v))).collect();
        vec![verifier.check(id, &params)?]
    };
    let all_ok = reports.iter().all(|r| r.ok);
    if args.json {
        let doc = Json::Array(reports.iter().map(report_json).collect());
        println!("{}", serde_json::to_string_pretty(&doc).expect("JSON values serialize"));
    } else {
        for r in &reports {
            let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let status = if r.ok { "ok  " } else { "FAIL" };
            println!("{status} {} {}: {} | {}", r.id, params.join(" "), r.lhs, r.rhs);
            if !r.ok {
                println!("     lhs via {}", r.lhs_route);
                println!("     rhs via {}", r.rhs_route);
            }
        }
        let failed = reports.iter().filter(|r| !r.ok).count();
        println!("{} checks, {} failed", reports.len(), failed);
    }
    Ok(if all_ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_render(args: RenderArgs) -> CmdResult {
    let pentagon = |kind| -> Result<Region, Failure> { Ok(weighted_pentagon(kind, arg(args.n, "n")?, arg(args.x, "x")?)?) };
    let region = match args.region {
        RegionKind::Hexagon => hexagon(arg(args.a, "a")?, arg(args.b, "b")?, arg(args.c, "c")?)?,
        RegionKind::Cored => cored_hexagon(arg(args.n, "n")?, arg(args.x, "x")?)?,
        RegionKind::PentagonA => pentagon(PentagonKind::A)?,
        RegionKind::PentagonB => pentagon(PentagonKind::B)?,
        RegionKind::PentagonC => pentagon(PentagonKind::C)?,
    };
    let tilings = MatchOracle::from_env().enumerate_tilings(&region)?;
    let tiling = tilings.get(args.tiling_index).ok_or_else(|| {
        Failure::Usage(format!("tiling index {} out of range; the region has {} tilings", args.tiling_index, tilings.len()))
    })?;
    std::fs::write(&args.out, svg::render(&region, tiling))
        .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", args.out.display())))?;
    Ok(ExitCode::SUCCESS)
}
