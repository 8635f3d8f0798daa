use std::path::PathBuf;
use std::process::Command;

use serde_json::{json, Value};
use tropfaith::algebra::parse_expr_in;
use tropfaith::cones::{classify_weight, WeightVector};
use tropfaith::hyperelliptic::{detect_blocks, reembedding_plan, HECurve};
use tropfaith::projections::{certify_faithful, Verdict};
use tropfaith::tropical::{tropical_curve, tropicalize};

const WEIERSTRASS: &str = "-x^3-4*x^2+y^2-8*t^4*x";
const CUBIC_G: &str = "(-t^2)*x^3+(t^20)*x^2*y+(t^2)*x*y^2+(t^14)*y^3+(1-2*t^21)*x*y+(t^5-t^6)*y^2+(t^2+t^22)*y+(2*t^2+2*t^5)";

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tropfaith"))
}

fn tmp(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("tropfaith-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

/// (report, exit code, raw stdout)
fn run(args: &[&str]) -> (Value, i32, String) {
    let out = bin().args(args).output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let v = serde_json::from_str(&text).unwrap_or(Value::Null);
    (v, out.status.code().unwrap(), text)
}

fn two_cycles_file() -> PathBuf {
    tmp("two_cycles.json", r#"{"genus": 2, "roots": ["-t^2", "-t^4", "-t^6", "-t^8"]}"#)
}

fn two_cycles() -> HECurve {
    let v: Vec<_> = ["-t^2", "-t^4", "-t^6", "-t^8"].iter().map(|s| parse_expr_in(s, &[]).unwrap().as_constant().unwrap()).collect();
    HECurve::from_values(&v).unwrap()
}

#[test]
fn tropicalize_matches_library() {
    let (r, code, _) = run(&["tropicalize", WEIERSTRASS]);
    assert_eq!(code, 0);
    let curve = tropical_curve(&tropicalize(&parse_expr_in(WEIERSTRASS, &["x", "y"]).unwrap()).unwrap());
    assert_eq!(r["result"]["curve"], serde_json::to_value(&curve).unwrap());
    assert_eq!(r["result"]["betti"], 0);
    assert_eq!(r["exit_status"], 0);
}

#[test]
fn cubic_after_change() {
    let (r, _, _) = run(&["tropicalize", CUBIC_G]);
    let mut vs: Vec<Value> = r["result"]["curve"]["vertices"].as_array().unwrap().clone();
    vs.sort_by_key(|v| v.to_string());
    let mut want: Vec<Value> = [[3, -9], [-2, -2], [2, -2], [3, -3], [2, 0], [0, 2]]
        .iter()
        .map(|p| json!([p[0].to_string(), p[1].to_string()]))
        .collect();
    want.sort_by_key(|v| v.to_string());
    assert_eq!(vs, want);
    assert_eq!(r["result"]["cycle_lengths"], json!(["10"]));
}

#[test]
fn constant_polynomial_gives_empty_curve() {
    let svg = std::env::temp_dir().join(format!("tropfaith-empty-{}.svg", std::process::id()));
    let (r, code, _) = run(&["tropicalize", "7", "--out", svg.to_str().unwrap()]);
    assert_eq!(code, 0);
    let c = &r["result"]["curve"];
    assert!(c["vertices"].as_array().unwrap().is_empty() && c["edges"].as_array().unwrap().is_empty());
    let text = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(text.matches("class=\"axis\"").count(), 2);
    assert!(!text.contains("class=\"edge\"") && !text.contains("class=\"ray\""));
}

#[test]
fn parse_errors_exit_one() {
    let (r, code, _) = run(&["tropicalize", "x^^2"]);
    assert_eq!(code, 1);
    assert_eq!(r["result"]["error"], "parse");
    let (_, code, _) = run(&["no-such-command"]);
    assert_eq!(code, 1);
    let bad = tmp("bad.json", r#"{"genus": 1, "roots": ["t"], "colour": 3}"#);
    assert_eq!(run(&["classify", bad.to_str().unwrap()]).1, 1);
}

#[test]
fn classify_two_cycles() {
    let (r, code, _) = run(&["classify", two_cycles_file().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["kinds"], json!(["Cycle", "Bridge", "Cycle"]));
    let blocks = detect_blocks(&two_cycles()).unwrap();
    assert_eq!(r["result"]["blocks"], serde_json::to_value(&blocks).unwrap());
}

#[test]
fn unsupported_stratum_exits_two() {
    let f = tmp("bad_stratum.json", r#"{"genus": 0, "roots": ["t^2", "t^2+t^5"]}"#);
    let f1 = tmp("bad_stratum1.json", r#"{"genus": 1, "roots": ["t^2", "t^2+t^5"]}"#);
    assert_eq!(run(&["classify", f.to_str().unwrap()]).1, 2, "genus mismatch is a domain error");
    let (r, code, _) = run(&["classify", f1.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(r["result"]["error"], "unsupported-stratum");
}

#[test]
fn square_annotations() {
    let f = tmp("square.json", r#"{"genus": 1, "roots": [{"square": "t", "sign": -1}, "-t^6"]}"#);
    let (r, code, _) = run(&["classify", f.to_str().unwrap()]);
    assert_eq!(code, 0, "{r}");
    assert!(r["result"]["roots"].as_array().unwrap().iter().any(|x| x["value"] == "-t^2"));
    let f = tmp("square_bad.json", r#"{"genus": 1, "roots": [{"square": "t", "sign": 2}, "-t^6"]}"#);
    assert_eq!(run(&["classify", f.to_str().unwrap()]).1, 2);
}

#[test]
fn reembed_with_and_without_combination() {
    let p = two_cycles_file();
    let (r, _, _) = run(&["reembed", p.to_str().unwrap(), "--combine"]);
    assert_eq!(r["result"]["plan"]["fs"], json!(["y - t^6*x - t*x^2"]));
    let (r, _, _) = run(&["reembed", p.to_str().unwrap()]);
    assert_eq!(r["result"]["plan"]["fs"].as_array().unwrap().len(), 2);
    let plan = reembedding_plan(&two_cycles(), false).unwrap();
    assert_eq!(r["result"]["plan"], serde_json::to_value(&plan).unwrap());
    let g1 = tmp("genus1.json", r#"{"genus": 1, "roots": ["-1", "-t^4"]}"#);
    let (r, _, _) = run(&["reembed", g1.to_str().unwrap()]);
    assert_eq!(r["result"]["plan"]["fs"].as_array().unwrap().len(), 1);
}

#[test]
fn certify_exit_codes() {
    let p = two_cycles_file();
    let (r, code, _) = run(&["certify", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["certificate"]["verdict"], "Faithful");
    let c = two_cycles();
    let cert = certify_faithful(&c, &reembedding_plan(&c, true).unwrap()).unwrap();
    assert_eq!(cert.verdict, Verdict::Faithful);
    assert_eq!(r["result"]["certificate"], serde_json::to_value(&cert).unwrap());

    let (r, code, _) = run(&["certify", p.to_str().unwrap(), "--identity"]);
    assert_eq!(code, 3);
    assert_eq!(r["result"]["certificate"]["verdict"], "NotCertified");
    assert_eq!(run(&["certify", p.to_str().unwrap(), "--plane", "1,2"]).1, 1);
}

#[test]
fn certify_plane_curves() {
    let cubic = tmp("cubic.json", &format!(r#"{{"genus": 1, "polynomial": "{CUBIC_G}"}}"#));
    let (r, code, _) = run(&["certify", cubic.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["certificate"]["skeleton"]["cycle_lengths"], json!(["10"]));
    let w = tmp("weier.json", &format!(r#"{{"genus": 1, "polynomial": "{WEIERSTRASS}", "options": {{"generators": ["y - 2*x"]}}}}"#));
    assert_eq!(run(&["certify", w.to_str().unwrap()]).1, 0);
    assert_eq!(run(&["certify", w.to_str().unwrap(), "--identity"]).1, 3);
}

#[test]
fn cones_commands() {
    let (r, code, _) = run(&["cones", "classify", "--u", "11,10,5,3,1,0"]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["labels"], json!(["C_{1A}"]));
    let lib = classify_weight(&WeightVector::from_ints([11, 10, 5, 3, 1, 0]));
    assert_eq!(r["result"], serde_json::to_value(&lib).unwrap());

    let (r, _, _) = run(&["cones", "leading-terms", "--cone", "C_{3}", "--exponents", "x5"]);
    let monos: Vec<&str> = r["result"]["leading"].as_array().unwrap().iter().map(|t| t["monomial"].as_str().unwrap()).collect();
    assert_eq!(monos, ["b56^2*b7^2"]);

    let (r, code, _) = run(&["cones", "sample", "--cone", "C_{2B}"]);
    assert_eq!(code, 0);
    let u: Vec<i64> = r["result"]["integer"]["u"].as_array().unwrap().iter().map(|x| x.as_str().unwrap().parse().unwrap()).collect();
    let u: [i64; 6] = u.try_into().unwrap();
    assert!(classify_weight(&WeightVector::from_ints(u)).labels.iter().all(|l| l.starts_with("C_{2B}")));

    let (r, code, _) = run(&["cones", "sample", "--cone", "C_{1A}", "--row", "0,0,0,0,1,-1"]);
    assert_eq!(code, 2);
    assert_eq!(r["result"]["error"], "infeasible");
    assert_eq!(run(&["cones", "sample", "--cone", "C_{9Z}"]).1, 1);
}

#[test]
fn reports_and_figures_are_deterministic() {
    let dir = std::env::temp_dir().join(format!("tropfaith-det-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = two_cycles_file();
    for args in [vec!["certify", p.to_str().unwrap()], vec!["cones", "list"], vec!["tropicalize", CUBIC_G]] {
        assert_eq!(run(&args).2, run(&args).2);
    }
    let svgs = |tag: &str| {
        let a = dir.join(format!("{tag}-curve.svg"));
        let b = dir.join(format!("{tag}-sub.svg"));
        let c = dir.join(format!("{tag}-mod.svg"));
        run(&["tropicalize", CUBIC_G, "--out", a.to_str().unwrap()]);
        run(&["tropicalize", CUBIC_G, "--figure", "subdivision", "--out", b.to_str().unwrap()]);
        run(&["modify", "x + t^2*y + t^-1", "--out", c.to_str().unwrap()]);
        [a, b, c].map(|f| std::fs::read_to_string(f).unwrap())
    };
    let (one, two) = (svgs("a"), svgs("b"));
    assert_eq!(one, two);
    assert_eq!(one[0].matches("class=\"vertex\"").count(), 6);
    assert!(one[2].contains("class=\"graph\"") && one[2].contains("class=\"wall\""));
}

#[test]
fn bbox_flag_extends_rays() {
    let dir = std::env::temp_dir().join(format!("tropfaith-bbox-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (a, b) = (dir.join("a.svg"), dir.join("b.svg"));
    run(&["tropicalize", WEIERSTRASS, "--out", a.to_str().unwrap()]);
    run(&["tropicalize", WEIERSTRASS, "--bbox", "10", "--out", b.to_str().unwrap()]);
    let (a, b) = (std::fs::read_to_string(a).unwrap(), std::fs::read_to_string(b).unwrap());
    assert_ne!(a, b);
    assert_eq!(a.matches("class=\"ray\"").count(), b.matches("class=\"ray\"").count());
}
