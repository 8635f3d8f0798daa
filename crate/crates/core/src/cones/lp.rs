//! Dense two-phase simplex over Q with Bland's rule. Small systems only.

use num_traits::{One, Signed, Zero};

use crate::algebra::Rat;

pub(crate) enum Lp {
    Infeasible,
    Unbounded,
    Optimal(Vec<Rat>, Rat),
}

struct Tableau {
    rows: Vec<Vec<Rat>>,
    rhs: Vec<Rat>,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for a in self.rows[r].iter_mut() {
            *a = &*a * &inv;
        }
        self.rhs[r] = &self.rhs[r] * &inv;
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for j in 0..self.rows[i].len() {
                if !self.rows[r][j].is_zero() {
                    let d = &f * &self.rows[r][j];
                    self.rows[i][j] -= d;
                }
            }
            let d = &f * &self.rhs[r];
            self.rhs[i] -= d;
        }
        self.basis[r] = c;
    }

    /// Maximizes cost·x over the current basis; false if unbounded.
    fn run(&mut self, cost: &[Rat], allowed: &[bool]) -> bool {
        loop {
            let n = cost.len();
            let entering = (0..n).find(|&j| {
                if !allowed[j] || self.basis.contains(&j) {
                    return false;
                }
                let z = self.basis.iter().zip(&self.rows).fold(Rat::zero(), |acc, (&b, row)| acc + &cost[b] * &row[j]);
                &cost[j] - z > Rat::zero()
            });
            let Some(c) = entering else { return true };
            let mut best: Option<(Rat, usize, usize)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[c].is_positive() {
                    let ratio = &self.rhs[i] / &row[c];
                    let better = match &best {
                        None => true,
                        Some((q, _, b)) => ratio < *q || (ratio == *q && self.basis[i] < *b),
                    };
                    if better {
                        best = Some((ratio, i, self.basis[i]));
                    }
                }
            }
            let Some((_, r, _)) = best else { return false };
            self.pivot(r, c);
        }
    }
}

/// Maximizes obj·x subject to a·x ≤ b for every (a, b) in `rows`, with x free.
pub(crate) fn maximize(obj: &[Rat], rows: &[(Vec<Rat>, Rat)]) -> Lp {
    let n = obj.len();
    let m = rows.len();
    // columns: x⁺ (n), x⁻ (n), slacks (m), artificials (one per row with b < 0)
    let neg: Vec<usize> = (0..m).filter(|&i| rows[i].1.is_negative()).collect();
    let width = 2 * n + m + neg.len();
    let mut t = Tableau { rows: Vec::with_capacity(m), rhs: Vec::with_capacity(m), basis: Vec::with_capacity(m) };
    for (i, (a, b)) in rows.iter().enumerate() {
        let mut row = vec![Rat::zero(); width];
        for k in 0..n {
            row[k] = a[k].clone();
            row[n + k] = -a[k].clone();
        }
        row[2 * n + i] = Rat::one();
        let mut rhs = b.clone();
        if let Some(p) = neg.iter().position(|&j| j == i) {
            for x in row.iter_mut() {
                *x = -x.clone();
            }
            rhs = -rhs;
            row[2 * n + m + p] = Rat::one();
            t.basis.push(2 * n + m + p);
        } else {
            t.basis.push(2 * n + i);
        }
        t.rows.push(row);
        t.rhs.push(rhs);
    }
    let real = 2 * n + m;
    if !neg.is_empty() {
        let cost: Vec<Rat> = (0..width).map(|j| if j >= real { -Rat::one() } else { Rat::zero() }).collect();
        t.run(&cost, &vec![true; width]);
        let value = t.basis.iter().zip(&t.rhs).fold(Rat::zero(), |acc, (&b, r)| acc + &cost[b] * r);
        if value.is_negative() {
            return Lp::Infeasible;
        }
        // drive artificials out of the basis where possible
        for r in 0..m {
            if t.basis[r] >= real {
                if let Some(c) = (0..real).find(|&c| !t.rows[r][c].is_zero()) {
                    t.pivot(r, c);
                }
            }
        }
    }
    let mut cost = vec![Rat::zero(); width];
    for k in 0..n {
        cost[k] = obj[k].clone();
        cost[n + k] = -obj[k].clone();
    }
    let allowed: Vec<bool> = (0..width).map(|j| j < real).collect();
    if !t.run(&cost, &allowed) {
        return Lp::Unbounded;
    }
    let mut full = vec![Rat::zero(); width];
    for (&b, r) in t.basis.iter().zip(&t.rhs) {
        full[b] = r.clone();
    }
    let x: Vec<Rat> = (0..n).map(|k| &full[k] - &full[n + k]).collect();
    let value = obj.iter().zip(&x).fold(Rat::zero(), |acc, (c, v)| acc + c * v);
    Lp::Optimal(x, value)
}

/// A point with a·x < 0 for every strict row and a·x ≤ 0 for every weak row.
/// Homogeneity lets the strict rows be written as a·x ≤ −1.
pub(crate) fn homogeneous_witness(strict: &[Vec<Rat>], weak: &[Vec<Rat>], n: usize) -> Option<Vec<Rat>> {
    let mut rows: Vec<(Vec<Rat>, Rat)> = strict.iter().map(|a| (a.clone(), -Rat::one())).collect();
    rows.extend(weak.iter().map(|a| (a.clone(), Rat::zero())));
    match maximize(&vec![Rat::zero(); n], &rows) {
        Lp::Optimal(x, _) => Some(x),
        _ => None,
    }
}
