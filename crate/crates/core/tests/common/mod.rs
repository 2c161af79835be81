//! Dense brute-force reference for N-derivation dimensions.
//!
//! Enumerates every basis tuple, expands each constraint against every
//! elementary map `e_b -> e_t`, and ranks the result by plain dense
//! Gaussian elimination. Shares nothing with the library solver beyond
//! reading structure constants.

#![allow(dead_code)]

use std::collections::HashSet;

use nderiv::{GradedAlgebra, Rational};

pub struct Oracle {
    n: usize,
    table: Vec<Vec<Vec<(usize, Rational)>>>,
    degs: Vec<Vec<i64>>,
    present: HashSet<Vec<i64>>,
    truncated: bool,
}

type Dense = Vec<Rational>;

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl Oracle {
    pub fn new(alg: &GradedAlgebra) -> Self {
        let n = alg.dim();
        let table = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        alg.bracket_basis(i, j)
                            .iter()
                            .map(|(k, c)| (k, c.clone()))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let degs: Vec<Vec<i64>> = (0..n)
            .map(|i| alg.degree(i).components().to_vec())
            .collect();
        Oracle {
            n,
            table,
            present: degs.iter().cloned().collect(),
            degs,
            truncated: alg.is_truncated(),
        }
    }

    fn br(&self, x: &[Rational], y: &[Rational]) -> Dense {
        let mut out = vec![Rational::zero(); self.n];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in &self.table[i][j] {
                    out[*k] += &(&ab * c);
                }
            }
        }
        out
    }

    fn unit(&self, i: usize) -> Dense {
        let mut v = vec![Rational::zero(); self.n];
        v[i] = Rational::one();
        v
    }

    fn nested(&self, xs: &[Dense]) -> Dense {
        let mut acc = xs[xs.len() - 1].clone();
        for x in xs[..xs.len() - 1].iter().rev() {
            acc = self.br(x, &acc);
        }
        acc
    }

    fn safe(&self, tuple: &[usize], gamma: &[i64]) -> bool {
        if !self.truncated {
            return true;
        }
        let ok = |d: &Vec<i64>| self.present.contains(d) && self.present.contains(&add(d, gamma));
        if !tuple.iter().all(|&b| ok(&self.degs[b])) {
            return false;
        }
        let mut s = vec![0; gamma.len()];
        for &b in tuple.iter().rev() {
            s = add(&s, &self.degs[b]);
            if !ok(&s) {
                return false;
            }
        }
        true
    }

    /// Pairs `(b, t)` with `deg t = deg b + γ`, lexicographic.
    pub fn unknowns(&self, gamma: &[i64]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for b in 0..self.n {
            let target = add(&self.degs[b], gamma);
            for t in 0..self.n {
                if self.degs[t] == target {
                    out.push((b, t));
                }
            }
        }
        out
    }

    /// Every constraint row, dense in the unknowns.
    pub fn rows(&self, order: usize, gamma: &[i64]) -> Vec<Dense> {
        let unknowns = self.unknowns(gamma);
        let mut rows = Vec::new();
        if unknowns.is_empty() || self.n == 0 {
            return rows;
        }
        let mut tuple = vec![0usize; order];
        'outer: loop {
            if self.safe(&tuple, gamma) {
                let xs: Vec<Dense> = tuple.iter().map(|&b| self.unit(b)).collect();
                let s = self.nested(&xs);
                // residual of each elementary map, one column per unknown
                let cols: Vec<Dense> = unknowns
                    .iter()
                    .map(|&(b, t)| {
                        let mut r = vec![Rational::zero(); self.n];
                        if !s[b].is_zero() {
                            r[t] = s[b].clone();
                        }
                        for i in 0..order {
                            if tuple[i] == b {
                                let mut ys = xs.clone();
                                ys[i] = self.unit(t);
                                let term = self.nested(&ys);
                                for k in 0..self.n {
                                    r[k] -= &term[k];
                                }
                            }
                        }
                        r
                    })
                    .collect();
                for k in 0..self.n {
                    let row: Dense = cols.iter().map(|c| c[k].clone()).collect();
                    if row.iter().any(|c| !c.is_zero()) {
                        rows.push(row);
                    }
                }
            }
            let mut p = order;
            loop {
                if p == 0 {
                    break 'outer;
                }
                p -= 1;
                tuple[p] += 1;
                if tuple[p] < self.n {
                    break;
                }
                tuple[p] = 0;
            }
        }
        rows
    }

    pub fn nullity(&self, order: usize, gamma: &[i64]) -> usize {
        let cols = self.unknowns(gamma).len();
        cols - dense_rank(self.rows(order, gamma), cols)
    }

    /// Whether the dense coordinate vector `phi` solves every row.
    pub fn satisfies(&self, order: usize, gamma: &[i64], phi: &[Rational]) -> bool {
        self.rows(order, gamma).iter().all(|r| {
            r.iter()
                .zip(phi)
                .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
                .is_zero()
        })
    }

    /// All `γ = deg t - deg b`, sorted.
    pub fn shifts(&self) -> Vec<Vec<i64>> {
        let mut out: Vec<Vec<i64>> = Vec::new();
        for a in &self.degs {
            for b in &self.degs {
                out.push(a.iter().zip(b).map(|(x, y)| x - y).collect());
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

/// Rank by textbook elimination on dense rows.
pub fn dense_rank(rows: Vec<Dense>, cols: usize) -> usize {
    let mut basis: Vec<(usize, Dense)> = Vec::new();
    for mut r in rows {
        for (p, b) in &basis {
            if !r[*p].is_zero() {
                let f = r[*p].clone();
                for k in 0..cols {
                    r[k] -= &(&f * &b[k]);
                }
            }
        }
        if let Some(p) = (0..cols).find(|&k| !r[k].is_zero()) {
            let inv = r[p].recip();
            for c in r.iter_mut() {
                *c = &*c * &inv;
            }
            for (_, b) in basis.iter_mut() {
                if !b[p].is_zero() {
                    let f = b[p].clone();
                    for k in 0..cols {
                        b[k] -= &(&f * &r[k]);
                    }
                }
            }
            basis.push((p, r));
            if basis.len() == cols {
                break;
            }
        }
    }
    basis.len()
}
