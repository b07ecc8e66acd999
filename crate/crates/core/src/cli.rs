//! Command-line front end.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::diagnostics::{
    classify_with, conjecture_scans, grid_report, polygon_property_suite, scan_thin_lecture_hall,
    verify_payne_family, Quadrant, QuadrantReport,
};
use crate::ehrhart::{compute_with, reeve_threshold, EhrhartResult, Method};
use crate::error::{Error, Result};
use crate::exactmath::{fraction_string, roots_numeric, Rational, DEFAULT_TOLERANCE};
use crate::polytopes::{FamilySpec, Polytope, DEFAULT_BUDGET};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const SPEC_HELP: &str = "\
Family specs: tag:key=value,... or tag:v1,v2,... for vector families.
  standard-simplex:d=3   cross-polytope:d=3   unit-cube:d=3   pm-cube:d=3
  reeve:h=6              delta-1q:1,1,3       payne:r=0,s=3,k=2
  base-r:r=2,d=3         lecture-hall:7,1,7   chiseled-cube:d=3
  hypersimplex:d=4,k=2   permutahedron:d=3
Prefix pyr: or pyr^k: for lattice pyramids, e.g. pyr^2:reeve:h=6.";

#[derive(Parser, Debug)]
#[command(name = "ehrhart", version, about = "Exact Ehrhart polynomials and h*-vectors of lattice polytopes", after_help = SPEC_HELP)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    format: Format,
    /// Tolerance for numeric root locations.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Enumeration budget (overrides EHRHART_BUDGET).
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Counting,
    Parallelepiped,
    Zonotope,
    ClosedForm,
    Ascent,
}

impl MethodArg {
    fn method(self) -> Option<Method> {
        match self {
            MethodArg::Auto => None,
            MethodArg::Counting => Some(Method::Counting),
            MethodArg::Parallelepiped => Some(Method::Parallelepiped),
            MethodArg::Zonotope => Some(Method::ZonotopeFormula),
            MethodArg::ClosedForm => Some(Method::ClosedForm),
            MethodArg::Ascent => Some(Method::AscentStatistic),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ehrhart polynomial and h*-vector of a family member.
    Compute {
        spec: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Also print numeric roots of the Ehrhart polynomial.
        #[arg(long)]
        roots: bool,
    },
    /// Positivity and unimodality of a family member.
    Classify {
        spec: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Four verified witnesses per dimension.
    Grid {
        #[arg(long, default_value_t = 3)]
        dmin: usize,
        #[arg(long, default_value_t = 7)]
        dmax: usize,
    },
    /// Sweep of thin lecture hall simplices (a, 1, ..., 1, b).
    ScanLectureHall {
        #[arg(long, default_value_t = 3)]
        d: usize,
        #[arg(long, default_value_t = 25)]
        amax: u64,
        #[arg(long, default_value_t = 25)]
        bmax: u64,
    },
    /// Checks a Payne simplex.
    VerifyPayne {
        #[arg(long, default_value_t = 0)]
        r: u64,
        #[arg(long, default_value_t = 3)]
        s: u64,
        #[arg(long, default_value_t = 2)]
        k: u64,
    },
    /// Exploratory scans of two open conjectures.
    Conjectures,
    /// Random lattice triangles against Pick's formulas.
    Polygons {
        #[arg(long, default_value_t = 200)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        bound: i64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Prints the Reeve pyramid threshold H(d).
    Threshold {
        #[arg(long)]
        d: usize,
    },
}

struct Ctx {
    format: Format,
    tol: f64,
    budget: u64,
}

/// Parses `args` (program name first), runs the command and returns the exit
/// code: 0 on success, 1 when a verification fails, 2 on usage errors.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    return EXIT_OK;
                }
                _ => EXIT_USAGE,
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    let budget = match cli.budget.map(Ok).or_else(env_budget) {
        None => DEFAULT_BUDGET,
        Some(Ok(b)) if b > 0 => b,
        Some(Ok(_)) => return usage(err, "budget must be positive"),
        Some(Err(msg)) => return usage(err, &msg),
    };
    let tol = cli.tol.unwrap_or(DEFAULT_TOLERANCE);
    if !(tol > 0.0 && tol.is_finite()) {
        return usage(err, "tolerance must be a positive number");
    }
    let ctx = Ctx {
        format: cli.format,
        tol,
        budget,
    };
    let mut buf = Vec::new();
    match execute(&ctx, &cli.command, &mut buf) {
        Ok(code) => {
            let _ = out.write_all(&buf);
            code
        }
        Err(e @ (Error::Parse(_) | Error::Domain(_))) => usage(err, &e.to_string()),
        Err(e) => {
            let _ = out.write_all(&buf);
            let _ = writeln!(err, "error: {e}");
            EXIT_VERIFICATION
        }
    }
}

fn env_budget() -> Option<std::result::Result<u64, String>> {
    let v = std::env::var("EHRHART_BUDGET").ok()?;
    Some(v.trim().parse().map_err(|_| format!("EHRHART_BUDGET={v:?} is not a positive integer")))
}

fn usage(err: &mut dyn Write, msg: &str) -> i32 {
    let _ = writeln!(err, "error: {msg}\n\n{SPEC_HELP}\n\nRun `ehrhart --help` for commands.");
    EXIT_USAGE
}

fn build(spec: &str) -> Result<Polytope> {
    spec.parse::<FamilySpec>()?.build()
}

fn num_den(r: &Rational) -> (String, String) {
    (r.numer().to_string(), r.denom().to_string())
}

fn json_line<T: Serialize>(out: &mut Vec<u8>, value: &T) -> Result<()> {
    let s = serde_json::to_string_pretty(value).map_err(|e| Error::Unsupported(e.to_string()))?;
    writeln!(out, "{s}").map_err(io)
}

fn io(e: std::io::Error) -> Error {
    Error::Unsupported(format!("write failed: {e}"))
}

fn fractions(v: &[Rational]) -> Vec<String> {
    v.iter().map(fraction_string).collect()
}

fn execute(ctx: &Ctx, cmd: &Command, out: &mut Vec<u8>) -> Result<i32> {
    match cmd {
        Command::Compute { spec, method, roots } => {
            let p = build(spec)?;
            let r = compute_with(&p, method.method(), ctx.budget)?;
            let root_list = if *roots {
                Some(
                    roots_numeric(&r.ehrhart, ctx.tol)?
                        .iter()
                        .map(|z| [format!("{:.12}", z.re), format!("{:.12}", z.im)])
                        .collect::<Vec<_>>(),
                )
            } else {
                None
            };
            emit_compute(ctx, out, &p, &r, root_list)?;
        }
        Command::Classify { spec, method } => {
            let p = build(spec)?;
            let rep = classify_with(&p, method.method(), ctx.budget)?;
            emit_reports(ctx, out, &[(None, rep)])?;
        }
        Command::Grid { dmin, dmax } => {
            let rows = grid_report(*dmin, *dmax)?;
            let tagged: Vec<(Option<&str>, QuadrantReport)> = rows
                .into_iter()
                .enumerate()
                .map(|(i, r)| (Some(Quadrant::ALL[i % 4].symbol()), r))
                .collect();
            emit_reports(ctx, out, &tagged)?;
        }
        Command::ScanLectureHall { d, amax, bmax } => {
            let rows = scan_thin_lecture_hall(*d, *amax, *bmax)?;
            match ctx.format {
                Format::Csv => {
                    writeln!(out, "a,b,positive,unimodal,linear_coeff_num,linear_coeff_den").map_err(io)?;
                    for r in &rows {
                        let (n, dd) = num_den(&r.report.linear_coefficient());
                        writeln!(out, "{},{},{},{},{n},{dd}", r.a, r.b, r.report.positive, r.report.unimodal)
                            .map_err(io)?;
                    }
                }
                Format::Json => {
                    let v: Vec<_> = rows
                        .iter()
                        .map(|r| {
                            json!({
                                "a": r.a,
                                "b": r.b,
                                "positive": r.report.positive,
                                "unimodal": r.report.unimodal,
                                "linear_coeff": fraction_string(&r.report.linear_coefficient()),
                                "hstar": r.report.hstar,
                            })
                        })
                        .collect();
                    json_line(out, &v)?;
                }
                Format::Pretty => {
                    writeln!(out, "thin lecture hall simplices (a, 1^{}, b); '-' marks not positive", d - 2)
                        .map_err(io)?;
                    for b in (1..=*bmax).rev() {
                        let line: String = rows
                            .iter()
                            .filter(|r| r.b == b)
                            .map(|r| if r.report.positive { '+' } else { '-' })
                            .collect();
                        writeln!(out, "b={b:>3} {line}").map_err(io)?;
                    }
                    writeln!(out, "      a = 1..{amax}").map_err(io)?;
                }
            }
        }
        Command::VerifyPayne { r, s, k } => {
            let rep = verify_payne_family(*r, *s, *k, ctx.budget, ctx.tol)?;
            emit_reports(ctx, out, &[(None, rep)])?;
        }
        Command::Conjectures => {
            let rep = conjecture_scans(ctx.budget);
            match ctx.format {
                Format::Json => json_line(out, &rep)?,
                Format::Csv => {
                    writeln!(out, "conjecture,label,positive,unimodal,holds").map_err(io)?;
                    for e in &rep.entries {
                        writeln!(
                            out,
                            "{},{},{},{},{}",
                            e.conjecture, e.report.label, e.report.positive, e.report.unimodal, e.holds
                        )
                        .map_err(io)?;
                    }
                }
                Format::Pretty => {
                    for e in &rep.entries {
                        writeln!(
                            out,
                            "{:<8} {:<28} expected {:<22} {}",
                            e.conjecture,
                            e.report.label,
                            e.expected,
                            if e.holds { "ok" } else { "COUNTEREXAMPLE" }
                        )
                        .map_err(io)?;
                    }
                    for c in rep.counterexamples.iter().chain(&rep.errors) {
                        writeln!(out, "{c}").map_err(io)?;
                    }
                }
            }
        }
        Command::Polygons { n, bound, seed } => {
            let rep = polygon_property_suite(*n, *bound, *seed)?;
            match ctx.format {
                Format::Json => json_line(out, &rep)?,
                Format::Csv => {
                    writeln!(out, "x1,y1,x2,y2,x3,y3,double_area,boundary,h1,h2,positive,unimodal").map_err(io)?;
                    for t in &rep.triangles {
                        let v = t.vertices;
                        writeln!(
                            out,
                            "{},{},{},{},{},{},{},{},{},{},{},{}",
                            v[0][0],
                            v[0][1],
                            v[1][0],
                            v[1][1],
                            v[2][0],
                            v[2][1],
                            t.double_area,
                            t.boundary,
                            t.hstar.get(1),
                            t.hstar.get(2),
                            t.positive,
                            t.unimodal
                        )
                        .map_err(io)?;
                    }
                }
                Format::Pretty => {
                    writeln!(
                        out,
                        "{} triangles (seed {}, coordinates in [-{b}, {b}]): all positive, unimodal and Pick-consistent",
                        rep.triangles.len(),
                        rep.seed,
                        b = rep.coord_bound
                    )
                    .map_err(io)?;
                }
            }
        }
        Command::Threshold { d } => {
            let h = reeve_threshold(*d)?;
            match ctx.format {
                Format::Json => json_line(out, &json!({ "d": d, "threshold": h }))?,
                Format::Csv => writeln!(out, "d,threshold\n{d},{h}").map_err(io)?,
                Format::Pretty => writeln!(out, "{h}").map_err(io)?,
            }
        }
    }
    Ok(EXIT_OK)
}

fn emit_compute(
    ctx: &Ctx,
    out: &mut Vec<u8>,
    p: &Polytope,
    r: &EhrhartResult,
    roots: Option<Vec<[String; 2]>>,
) -> Result<()> {
    match ctx.format {
        Format::Json => {
            let mut v = json!({
                "label": p.label(),
                "dim": r.dim(),
                "method": r.method,
                "ehrhart": fractions(r.ehrhart.coeffs()),
                "hstar": r.hstar,
            });
            if let Some(roots) = roots {
                v["roots"] = json!(roots);
            }
            json_line(out, &v)?;
        }
        Format::Csv => {
            writeln!(out, "j,ehrhart_num,ehrhart_den,hstar").map_err(io)?;
            for j in 0..=r.dim() {
                let (n, d) = num_den(&r.ehrhart.coeff(j));
                writeln!(out, "{j},{n},{d},{}", r.hstar.get(j)).map_err(io)?;
            }
        }
        Format::Pretty => {
            writeln!(out, "{p}").map_err(io)?;
            writeln!(out, "method  {}", r.method).map_err(io)?;
            writeln!(out, "i(t)    {}", r.ehrhart).map_err(io)?;
            writeln!(out, "h*      {}", r.hstar).map_err(io)?;
            if let Some(roots) = roots {
                for [re, im] in roots {
                    writeln!(out, "root    {re} {im}i").map_err(io)?;
                }
            }
        }
    }
    Ok(())
}

fn emit_reports(ctx: &Ctx, out: &mut Vec<u8>, rows: &[(Option<&str>, QuadrantReport)]) -> Result<()> {
    match ctx.format {
        Format::Json => {
            let v: Vec<_> = rows
                .iter()
                .map(|(q, r)| match q {
                    Some(q) => json!({ "quadrant": q, "report": r }),
                    None => json!(r),
                })
                .collect();
            if v.len() == 1 && rows[0].0.is_none() {
                json_line(out, &v[0])?;
            } else {
                json_line(out, &v)?;
            }
        }
        Format::Csv => {
            writeln!(out, "quadrant,label,dim,positive,unimodal,linear_coeff_num,linear_coeff_den").map_err(io)?;
            for (q, r) in rows {
                let (n, d) = num_den(&r.linear_coefficient());
                writeln!(
                    out,
                    "{},{},{},{},{},{n},{d}",
                    q.unwrap_or(""),
                    r.label,
                    r.dim,
                    r.positive,
                    r.unimodal
                )
                .map_err(io)?;
            }
        }
        Format::Pretty => {
            for (q, r) in rows {
                writeln!(
                    out,
                    "{:<6}d={} {:<28} positive={:<5} unimodal={:<5} h*={}  [{}]",
                    q.unwrap_or(""),
                    r.dim,
                    r.label,
                    r.positive,
                    r.unimodal,
                    r.hstar,
                    r.notes.join("; ")
                )
                .map_err(io)?;
            }
        }
    }
    Ok(())
}
