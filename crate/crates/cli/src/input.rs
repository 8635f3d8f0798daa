//! Curve files: JSON with "genus", "roots" and "options", or a plane curve
//! given directly under "polynomial".

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;
use tropfaith::algebra::{parse_expr, parse_expr_in, MPoly, RatFunc};
use tropfaith::hyperelliptic::{HECurve, RootSpec};
use tropfaith::{Error, Result};

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum RootEntry {
    Plain(String),
    Square { square: String, sign: i8 },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveFile {
    pub genus: usize,
    #[serde(default)]
    pub roots: Vec<RootEntry>,
    /// a plane curve in x, y, used instead of roots
    #[serde(default)]
    pub polynomial: Option<String>,
    #[serde(default)]
    pub options: BTreeMap<String, serde_json::Value>,
}

/// What a curve file describes once parsed.
pub enum Curve {
    Hyperelliptic(HECurve),
    Plane { g: MPoly, genus: usize },
}

fn constant(s: &str) -> Result<RatFunc> {
    let p = parse_expr(s)?;
    p.as_constant().ok_or_else(|| Error::domain(format!("root {s} is not an element of Q(t)")))
}

pub fn xy_poly(s: &str) -> Result<MPoly> {
    let p = parse_expr_in(s, &["x", "y"])?;
    p.in_ring(&["x".to_string(), "y".to_string()])
        .map_err(|_| Error::domain(format!("{s} involves variables other than x and y")))
}

impl CurveFile {
    pub fn read(path: &Path) -> Result<CurveFile> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse { pos: 0, msg: format!("{}: {e}", path.display()) })?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<CurveFile> {
        serde_json::from_str(text).map_err(|e| Error::Parse { pos: e.column(), msg: format!("curve file line {}: {e}", e.line()) })
    }

    pub fn curve(&self) -> Result<Curve> {
        if let Some(p) = &self.polynomial {
            if !self.roots.is_empty() {
                return Err(Error::domain("give either roots or a polynomial, not both"));
            }
            return Ok(Curve::Plane { g: xy_poly(p)?, genus: self.genus });
        }
        let roots = self
            .roots
            .iter()
            .map(|r| match r {
                RootEntry::Plain(s) => Ok(RootSpec::Value(constant(s)?)),
                RootEntry::Square { square, sign } => {
                    if sign.abs() != 1 {
                        return Err(Error::domain(format!("sign must be ±1, got {sign}")));
                    }
                    Ok(RootSpec::Square { beta: constant(square)?, sign: *sign })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let c = HECurve::new(roots)?;
        if c.genus != self.genus {
            return Err(Error::domain(format!("file declares genus {} but lists {} roots", self.genus, c.roots.len())));
        }
        Ok(Curve::Hyperelliptic(c))
    }

    pub fn option_str(&self, key: &str) -> Option<&str> {
        self.options.get(key).and_then(|v| v.as_str())
    }

    /// Extra coordinates z_i = f_i(x, y) listed under options.generators.
    pub fn generators(&self) -> Result<Vec<MPoly>> {
        let Some(v) = self.options.get("generators") else { return Ok(vec![]) };
        let list = v.as_array().ok_or_else(|| Error::domain("options.generators must be a list of strings"))?;
        list.iter()
            .map(|g| g.as_str().ok_or_else(|| Error::domain("options.generators must be a list of strings")).and_then(xy_poly))
            .collect()
    }
}
