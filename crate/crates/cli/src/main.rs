//! `tropfaith`: JSON reports on stdout, SVG figures on request.
//!
//! Exit codes: 0 success (or Faithful), 1 usage or parse error, 2 domain error,
//! 3 NotCertified.

mod input;
mod svg;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use tropfaith::algebra::{parse_rat, Rat};
use tropfaith::cones::{self, Cone, Rel, WeightVector, COORD_NAMES};
use tropfaith::hyperelliptic::{detect_blocks, reembedding_plan, root_report};
use tropfaith::projections::{certify_embedding, certify_faithful, modification_complex, Certificate, Plane, Verdict};
use tropfaith::tropical::{check_balancing, cycle_lengths, dual_subdivision, first_betti, tropical_curve, tropicalize};
use tropfaith::Error;

use input::{xy_poly, Curve, CurveFile};

#[derive(Parser)]
#[command(name = "tropfaith", version, about = "Tropical plane curves and faithful re-embeddings of hyperelliptic curves")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Figure {
    Curve,
    Subdivision,
}

#[derive(Subcommand)]
enum Cmd {
    /// Tropicalize a polynomial in x, y (or the curve of a curve file).
    Tropicalize {
        #[arg(allow_hyphen_values = true)]
        input: String,
        #[arg(long)]
        out: Option<PathBuf>,
        /// how far rays are drawn beyond the vertices
        #[arg(long, default_value_t = 3.0)]
        bbox: f64,
        #[arg(long, value_enum, default_value = "curve")]
        figure: Figure,
    },
    /// Building blocks of a hyperelliptic curve.
    Classify { file: PathBuf },
    /// Re-embedding polynomials.
    Reembed {
        file: PathBuf,
        #[arg(long)]
        combine: bool,
    },
    /// Faithfulness certificate for the (combined) re-embedding.
    Certify {
        file: PathBuf,
        /// certify the plane curve itself, without re-embedding
        #[arg(long)]
        identity: bool,
        /// projection plane as six integers c11,c12,c21,c22,c31,c32
        #[arg(long)]
        plane: Option<String>,
    },
    /// Modification complex of z = F(x, y) for a polynomial F in x, y.
    Modify {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        out: Option<PathBuf>,
        /// half-width of the clipping cube
        #[arg(long = "box", default_value_t = 3.0)]
        half: f64,
        /// projection R³ → R² as six numbers (two rows)
        #[arg(long)]
        view: Option<String>,
    },
    /// Weight cones of the 3-theta stratum.
    Cones {
        #[command(subcommand)]
        cmd: ConesCmd,
    },
}

#[derive(Subcommand)]
enum ConesCmd {
    /// Labels of the refined cones.
    List,
    /// Cones whose closure contains u.
    Classify {
        /// u2,u34,u4,u56,u6,u7
        #[arg(long, allow_hyphen_values = true)]
        u: String,
    },
    /// An interior point of a cone, optionally cut by extra rows a·u < 0.
    Sample {
        #[arg(long, default_value = "3-theta")]
        cone: String,
        #[arg(long = "row", allow_hyphen_values = true)]
        rows: Vec<String>,
    },
    /// Exponent vectors that can be leading on a cone.
    LeadingTerms {
        #[arg(long)]
        cone: String,
        /// "x5", "x3", or vectors separated by ';'
        #[arg(long, allow_hyphen_values = true)]
        exponents: String,
    },
}

/// Failures carried to the report, with their exit status.
struct Failure {
    status: u8,
    kind: &'static str,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (status, kind) = match &e {
            Error::Parse { .. } => (1, "parse"),
            Error::InvalidPlane(_) => (1, "invalid-plane"),
            Error::NotASquare(_) => (2, "not-a-square"),
            Error::UnsupportedStratum(_) => (2, "unsupported-stratum"),
            Error::Infeasible(_) => (2, "infeasible"),
            _ => (2, "domain"),
        };
        Failure { status, kind, message: e.to_string() }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { status: 1, kind: "usage", message: msg.into() }
}

type Outcome = Result<(Value, u8), Failure>;

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}

fn strs(v: &[Rat]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure { status: 1, kind: "io", message: format!("{}: {e}", path.display()) })
}

fn numbers<T: std::str::FromStr>(s: &str, n: usize, what: &str) -> Result<Vec<T>, Failure> {
    let v: Vec<T> = s.split(',').map(|x| x.trim().parse()).collect::<Result<_, _>>().map_err(|_| usage(format!("{what}: cannot parse {s:?}")))?;
    if v.len() != n {
        return Err(usage(format!("{what}: expected {n} numbers, got {}", v.len())));
    }
    Ok(v)
}

fn rats(s: &str) -> Result<Vec<Rat>, Failure> {
    let v = s.split(',').map(|x| parse_rat(x.trim())).collect::<tropfaith::Result<Vec<_>>>()?;
    if v.len() != 6 {
        return Err(usage(format!("expected six rationals, got {}", v.len())));
    }
    Ok(v)
}

fn plane_arg(s: &str) -> Result<Plane, Failure> {
    let v: Vec<i64> = numbers(s, 6, "--plane")?;
    Ok([[v[0], v[1]], [v[2], v[3]], [v[4], v[5]]])
}

fn load(path: &Path) -> Result<(CurveFile, Curve), Failure> {
    let file = CurveFile::read(path)?;
    let curve = file.curve()?;
    Ok((file, curve))
}

fn tropicalize_cmd(input: &str, out: Option<&Path>, bbox: f64, figure: Figure) -> Outcome {
    let g = if Path::new(input).is_file() {
        match load(Path::new(input))?.1 {
            Curve::Hyperelliptic(c) => c.g_poly,
            Curve::Plane { g, .. } => g,
        }
    } else {
        xy_poly(input)?
    };
    let f = tropicalize(&g)?;
    let curve = tropical_curve(&f);
    if let Some(path) = out {
        let text = match figure {
            Figure::Curve => svg::curve_svg(&curve, bbox),
            Figure::Subdivision => svg::subdivision_svg(&dual_subdivision(&f)),
        };
        write_file(path, &text)?;
    }
    let result = json!({
        "polynomial": g.to_string(),
        "tropical_polynomial": to_value(&f),
        "curve": to_value(&curve),
        "betti": first_betti(&curve),
        "cycle_lengths": strs(&cycle_lengths(&curve)),
        "balanced": check_balancing(&curve).balanced,
    });
    Ok((result, 0))
}

fn hyperelliptic(path: &Path) -> Result<tropfaith::hyperelliptic::HECurve, Failure> {
    match load(path)?.1 {
        Curve::Hyperelliptic(c) => Ok(c),
        Curve::Plane { .. } => Err(usage("this command needs a curve file with roots")),
    }
}

fn classify_cmd(path: &Path) -> Outcome {
    let c = hyperelliptic(path)?;
    let blocks = detect_blocks(&c)?;
    let kinds: Vec<Value> = blocks.iter().map(|b| to_value(&b.kind)).collect();
    Ok((json!({ "genus": c.genus, "roots": to_value(&root_report(&c)), "kinds": kinds, "blocks": to_value(&blocks) }), 0))
}

fn reembed_cmd(path: &Path, combine: bool) -> Outcome {
    let c = hyperelliptic(path)?;
    let plan = reembedding_plan(&c, combine)?;
    Ok((json!({ "genus": c.genus, "plan": to_value(&plan) }), 0))
}

fn verdict_status(cert: &Certificate) -> u8 {
    match cert.verdict {
        Verdict::Faithful => 0,
        Verdict::NotCertified => 3,
    }
}

fn certify_cmd(path: &Path, identity: bool, plane: Option<&str>) -> Outcome {
    let (file, curve) = load(path)?;
    // a plane given in the file's options applies unless overridden on the command line
    let plane = plane.or(file.option_str("plane")).map(plane_arg).transpose()?;
    let (cert, plan) = match curve {
        Curve::Plane { g, genus } => {
            let fs = if identity { vec![] } else { file.generators()? };
            (certify_embedding(&g, genus, &fs, plane)?, Value::Null)
        }
        Curve::Hyperelliptic(c) if identity => (certify_embedding(&c.g_poly, c.genus, &[], None)?, Value::Null),
        Curve::Hyperelliptic(c) => {
            let plan = reembedding_plan(&c, true)?;
            let cert = match plane {
                Some(p) => certify_embedding(&c.g_poly, c.genus, &plan.fs, Some(p))?,
                None => certify_faithful(&c, &plan)?,
            };
            (cert, to_value(&plan))
        }
    };
    let status = verdict_status(&cert);
    Ok((json!({ "plan": plan, "certificate": to_value(&cert) }), status))
}

fn modify_cmd(poly: &str, out: Option<&Path>, half: f64, view: Option<&str>) -> Outcome {
    let f = tropicalize(&xy_poly(poly)?)?;
    let cx = modification_complex(&f);
    if let Some(path) = out {
        let view = match view {
            Some(s) => {
                let v: Vec<f64> = numbers(s, 6, "--view")?;
                [[v[0], v[1], v[2]], [v[3], v[4], v[5]]]
            }
            None => svg::DEFAULT_VIEW,
        };
        write_file(path, &svg::complex_svg(&cx, half, view))?;
    }
    let counts: Vec<usize> = (0..=2).map(|d| cx.count(d)).collect();
    Ok((json!({ "tropical_polynomial": to_value(&f), "cells_by_dim": counts, "complex": to_value(&cx) }), 0))
}

fn cone(label: &str) -> Result<Cone, Failure> {
    cones::cone_by_label(label).ok_or_else(|| usage(format!("unknown cone {label:?}")))
}

fn monomial(a: &[i64; 6]) -> String {
    let parts: Vec<String> = a
        .iter()
        .zip(COORD_NAMES)
        .filter(|(&e, _)| e != 0)
        .map(|(&e, n)| {
            let b = n.replacen('u', "b", 1);
            if e == 1 { b } else { format!("{b}^{e}") }
        })
        .collect();
    if parts.is_empty() { "1".into() } else { parts.join("*") }
}

fn exponent_list(s: &str) -> Result<Vec<[i64; 6]>, Failure> {
    match s {
        "x5" => Ok(cones::XZ_X5_TERMS.to_vec()),
        "x3" => Ok(cones::XZ_X3_TERMS.to_vec()),
        _ => s
            .split(';')
            .map(|v| numbers::<i64>(v, 6, "--exponents").map(|v| [v[0], v[1], v[2], v[3], v[4], v[5]]))
            .collect(),
    }
}

fn cones_cmd(cmd: &ConesCmd) -> Outcome {
    match cmd {
        ConesCmd::List => {
            let labels: Vec<String> = cones::refined_cones().into_iter().map(|c| c.label).collect();
            Ok((json!({ "coordinates": COORD_NAMES, "cones": labels }), 0))
        }
        ConesCmd::Classify { u } => {
            let c = cones::classify_weight(&WeightVector { u: rats(u)? });
            Ok((to_value(&c), 0))
        }
        ConesCmd::Sample { cone: label, rows } => {
            let mut c = cone(label)?;
            for r in rows {
                c = c.with_row(rats(r)?, Rel::Lt);
            }
            let p = cones::sample_point(&c)?;
            let q = cones::integer_point(&c)?;
            Ok((json!({ "cone": to_value(&c), "sample": to_value(&p), "integer": to_value(&q) }), 0))
        }
        ConesCmd::LeadingTerms { cone: label, exponents } => {
            let c = cone(label)?;
            let ex = exponent_list(exponents)?;
            let terms: Vec<Value> = cones::leading_term_witnesses(&ex, &c)
                .into_iter()
                .map(|(i, w)| json!({ "index": i, "exponent": ex[i], "monomial": monomial(&ex[i]), "witness": to_value(&w) }))
                .collect();
            Ok((json!({ "cone": label, "leading": terms }), 0))
        }
    }
}

fn run(cmd: &Cmd) -> Outcome {
    match cmd {
        Cmd::Tropicalize { input, out, bbox, figure } => tropicalize_cmd(input, out.as_deref(), *bbox, *figure),
        Cmd::Classify { file } => classify_cmd(file),
        Cmd::Reembed { file, combine } => reembed_cmd(file, *combine),
        Cmd::Certify { file, identity, plane } => certify_cmd(file, *identity, plane.as_deref()),
        Cmd::Modify { poly, out, half, view } => modify_cmd(poly, out.as_deref(), *half, view.as_deref()),
        Cmd::Cones { cmd } => cones_cmd(cmd),
    }
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = write!(std::io::stdout(), "{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    let (result, status) = match run(&cli.cmd) {
        Ok(ok) => ok,
        Err(f) => (json!({ "error": f.kind, "message": f.message }), f.status),
    };
    let report = json!({ "command": args, "result": result, "exit_status": status });
    // a closed pipe on stdout is not worth a panic
    let _ = writeln!(std::io::stdout(), "{}", serde_json::to_string_pretty(&report).expect("json"));
    ExitCode::from(status)
}
