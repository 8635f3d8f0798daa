//! Projections of re-embedded curves V(g, z − f) ⊂ (K*)³ to planes.
//!
//! The xz-projection is a substitution, the yz-projection a resultant in x, and a
//! generic projection goes through a unimodular monomial change of coordinates
//! followed by one resultant.

pub mod certify;
pub mod modification;

pub use certify::{certify_embedding, certify_faithful, Certificate, EdgeEvidence, Irregularity, IrregularityKind, SkeletonReport, SpaceEdge, Verdict};
pub use modification::{canonical_system, modification_complex, Cell3, CellKind, PolyComplex3, Row3};

use crate::algebra::{resultant_raw, substitute, MPoly};
use crate::error::{Error, Result};

/// An integer 3×2 matrix; row i holds the images of the i-th coordinate (x, y, z).
pub type Plane = [[i64; 2]; 3];

/// (u, v) = (Y, X + Z). The kernel direction (1, 0, −1) lies in no cell of
/// trop(z − y + h(x)), and in the coordinates x = w, y = u, z = v/w the two
/// eliminants have small degree in w with leading coefficients in Q(t).
pub const DEFAULT_PLANE: Plane = [[0, 1], [1, 0], [0, 1]];

fn s(v: &[&str]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

/// Splits f = y − h(x) and returns h.
pub fn split_linear_in_y(f: &MPoly) -> Result<MPoly> {
    let f = f.in_ring(&s(&["x", "y"])).map_err(|_| Error::domain(format!("{f} is not a polynomial in x, y")))?;
    let cs = f.coeffs_in("y")?;
    if cs.keys().any(|&k| !(k == 0 || k == 1)) {
        return Err(Error::domain(format!("{f} is not linear in y")));
    }
    match cs.get(&1).and_then(|c| c.as_constant()) {
        Some(c) if c.is_one() => {}
        _ => return Err(Error::domain(format!("{f} is not monic linear in y"))),
    }
    let h = cs.get(&0).cloned().unwrap_or_else(|| MPoly::zero_in(f.vars().to_vec()));
    if h.min_degree_in("x").unwrap_or(0) < 0 {
        return Err(Error::domain("h(x) has negative exponents"));
    }
    Ok(-&h)
}

/// g(x, z + h(x)) in the ring [x, z].
pub fn project_xz(g: &MPoly, f: &MPoly) -> Result<MPoly> {
    let h = split_linear_in_y(f)?;
    let ring = s(&["x", "y", "z"]);
    let g = g.in_ring(&ring)?;
    let zh = &MPoly::var_in(ring.clone(), "z")? + &h.in_ring(&ring)?;
    substitute(&g, "y", &zh)?.drop_var("y")?.in_ring(&s(&["x", "z"]))
}

/// Res_x(g, z − f) with monomial factors and content removed, in the ring [y, z].
pub fn project_yz(g: &MPoly, f: &MPoly) -> Result<MPoly> {
    let ring = s(&["x", "y", "z"]);
    let g = g.in_ring(&ring)?;
    let zf = &MPoly::var_in(ring.clone(), "z")? - &f.in_ring(&ring)?;
    if g.degree_in("x").unwrap_or(0) <= 0 || zf.degree_in("x").unwrap_or(0) <= 0 {
        return Err(Error::domain("both g and f must involve x"));
    }
    let r = resultant_raw(&g, &zf, "x")?;
    r.in_ring(&s(&["y", "z"]))?.strip_monomial_factor().normalize().in_ring(&s(&["y", "z"]))
}

fn cross(a: [i64; 3], b: [i64; 3]) -> [i64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn dot(a: [i64; 3], b: [i64; 3]) -> i64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn gcd(a: i64, b: i64) -> i64 {
    num_integer::Integer::gcd(&a, &b)
}

/// Kernel direction c1 × c2 of the plane.
pub fn plane_kernel(plane: &Plane) -> [i64; 3] {
    cross([plane[0][0], plane[1][0], plane[2][0]], [plane[0][1], plane[1][1], plane[2][1]])
}

/// Checks that the monomial map of `plane` is a primitive surjection of lattices
/// whose kernel lies in no top-dimensional cell of trop(z − f) and is not a
/// coordinate direction.
pub fn validate_plane(plane: &Plane, f: &MPoly) -> Result<()> {
    let d = plane_kernel(plane);
    if d == [0, 0, 0] {
        return Err(Error::InvalidPlane("columns are linearly dependent".into()));
    }
    if gcd(gcd(d[0], d[1]), d[2]) != 1 {
        return Err(Error::InvalidPlane(format!("lattice map is not surjective (kernel {d:?} not primitive)")));
    }
    if d.iter().filter(|&&x| x == 0).count() == 2 {
        return Err(Error::InvalidPlane("plane is a coordinate plane".into()));
    }
    let zf = &MPoly::var_in(s(&["x", "y", "z"]), "z")? - &f.in_ring(&s(&["x", "y", "z"]))?;
    let exps: Vec<[i64; 3]> = zf.terms().map(|(e, _)| [e[0] as i64, e[1] as i64, e[2] as i64]).collect();
    for i in 0..exps.len() {
        for j in i + 1..exps.len() {
            let n = [exps[i][0] - exps[j][0], exps[i][1] - exps[j][1], exps[i][2] - exps[j][2]];
            if dot(d, n) == 0 {
                return Err(Error::InvalidPlane(format!("kernel {d:?} lies in the cell with normal {n:?}")));
            }
        }
    }
    Ok(())
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        return if a < 0 { (-a, -1, 0) } else { (a, 1, 0) };
    }
    let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
    (g, y, x - a.div_euclid(b) * y)
}

/// A third column c with det[plane | c] = 1, preferring small entries.
fn completion(d: [i64; 3]) -> Option<[i64; 3]> {
    let units = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    for u in units {
        match dot(u, d) {
            1 => return Some(u),
            -1 => return Some([-u[0], -u[1], -u[2]]),
            _ => {}
        }
    }
    for a in -2..=2i64 {
        for b in -2..=2i64 {
            for c in -2..=2i64 {
                if dot([a, b, c], d) == 1 {
                    return Some([a, b, c]);
                }
            }
        }
    }
    let (g12, a, b) = ext_gcd(d[0], d[1]);
    let (g, p, q) = ext_gcd(g12, d[2]);
    (g == 1).then(|| [p * a, p * b, q])
}

fn inverse_unimodular(m: [[i64; 3]; 3]) -> Option<[[i64; 3]; 3]> {
    let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if det.abs() != 1 {
        return None;
    }
    let mut inv = [[0i64; 3]; 3];
    for (i, row) in inv.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            let (r0, r1) = ((j + 1) % 3, (j + 2) % 3);
            let (c0, c1) = ((i + 1) % 3, (i + 2) % 3);
            *x = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) * det;
        }
    }
    Some(inv)
}

/// Applies the monomial change of coordinates: exponent e ↦ A·e.
fn monomial_map(p: &MPoly, a: &[[i64; 3]; 3], ring: &[String]) -> MPoly {
    MPoly::from_terms(
        ring.to_vec(),
        p.terms().map(|(e, c)| {
            let ne: Vec<i32> = (0..3).map(|i| (0..3).map(|j| a[i][j] * e[j] as i64).sum::<i64>() as i32).collect();
            (ne, c.clone())
        }),
    )
}

/// Image of V(g, z − f) under the monomial map of `plane`, without validating the plane.
/// The result lives in the ring [u, v].
pub fn project_monomial(g: &MPoly, f: &MPoly, plane: &Plane) -> Result<MPoly> {
    let d = plane_kernel(plane);
    let c = completion(d).ok_or_else(|| Error::InvalidPlane(format!("kernel {d:?} is not primitive")))?;
    // rows are x, y, z; columns u, v, w
    let u = [[plane[0][0], plane[0][1], c[0]], [plane[1][0], plane[1][1], c[1]], [plane[2][0], plane[2][1], c[2]]];
    let inv = inverse_unimodular(u).ok_or_else(|| Error::InvalidPlane("completion is not unimodular".into()))?;
    // the character with exponent e becomes inv·e in (u, v, w)
    let a = inv;
    let xyz = s(&["x", "y", "z"]);
    let uvw = s(&["u", "v", "w"]);
    let g3 = g.in_ring(&xyz)?;
    let zf = &MPoly::var_in(xyz.clone(), "z")? - &f.in_ring(&xyz)?;
    let gw = monomial_map(&g3, &a, &uvw).strip_monomial_factor();
    let fw = monomial_map(&zf, &a, &uvw).strip_monomial_factor();
    if gw.degree_in("w").unwrap_or(0) <= 0 || fw.degree_in("w").unwrap_or(0) <= 0 {
        return Err(Error::InvalidPlane("one of the equations does not involve the eliminated direction".into()));
    }
    let r = resultant_raw(&gw, &fw, "w")?;
    r.in_ring(&s(&["u", "v"]))?.strip_monomial_factor().normalize().in_ring(&s(&["u", "v"]))
}

/// Image of V(g, z − f) under the monomial map of a validated generic plane, in the ring [u, v].
pub fn project_generic(g: &MPoly, f: &MPoly, plane: &Plane) -> Result<MPoly> {
    validate_plane(plane, f)?;
    project_monomial(g, f, plane)
}
