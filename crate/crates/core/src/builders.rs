//! Constructors for the standard example algebras.
//!
//! Truncated builders (`sv`, Witt) always include whole graded components
//! and every bracket whose result lands back in the window, so safety of a
//! computation is purely a question of which degrees are present.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::algebra::{AlgebraBuilder, Degree, Element, GradedAlgebra};
use crate::error::{Error, Result};
use crate::linalg::SparseVector;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WindowSpec {
    max_abs: u64,
}

impl WindowSpec {
    pub fn new(max_abs: u64) -> Result<Self> {
        if max_abs == 0 {
            return Err(Error::Contract("window radius must be at least 1".into()));
        }
        Ok(WindowSpec { max_abs })
    }

    pub fn max_abs(&self) -> u64 {
        self.max_abs
    }

    pub fn contains(&self, d: &Degree) -> bool {
        d.max_abs() <= self.max_abs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GcmViolation {
    NotSquare,
    /// `a_ii != 2`.
    C1 {
        i: usize,
        value: i64,
    },
    /// Positive off-diagonal entry.
    C2 {
        i: usize,
        j: usize,
        value: i64,
    },
    /// `a_ij = 0` while `a_ji != 0`.
    C3 {
        i: usize,
        j: usize,
    },
}

impl fmt::Display for GcmViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // 1-based, as matrices are usually written
        match self {
            GcmViolation::NotSquare => write!(f, "matrix is not square"),
            GcmViolation::C1 { i, value } => write!(f, "C1: a_{0}{0} = {value}, expected 2", i + 1),
            GcmViolation::C2 { i, j, value } => {
                write!(f, "C2: a_{}{} = {value} is positive", i + 1, j + 1)
            }
            GcmViolation::C3 { i, j } => {
                write!(
                    f,
                    "C3: a_{}{} = 0 but a_{}{} != 0",
                    i + 1,
                    j + 1,
                    j + 1,
                    i + 1
                )
            }
        }
    }
}

/// A validated generalized Cartan matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gcm {
    entries: Vec<Vec<i64>>,
}

impl Gcm {
    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    /// Cartan matrix of `sl_n` (type `A_{n-1}`).
    pub fn type_a(rank: usize) -> Self {
        let entries = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| match i.abs_diff(j) {
                        0 => 2,
                        1 => -1,
                        _ => 0,
                    })
                    .collect()
            })
            .collect();
        Gcm { entries }
    }
}

#[allow(clippy::needless_range_loop)]
pub fn validate_gcm(m: &[Vec<i64>]) -> Result<Gcm> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::Gcm(vec![GcmViolation::NotSquare]));
    }
    let mut v = Vec::new();
    for i in 0..n {
        if m[i][i] != 2 {
            v.push(GcmViolation::C1 { i, value: m[i][i] });
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            if m[i][j] > 0 {
                v.push(GcmViolation::C2 {
                    i,
                    j,
                    value: m[i][j],
                });
            }
            if m[i][j] == 0 && m[j][i] != 0 {
                v.push(GcmViolation::C3 { i, j });
            }
        }
    }
    if v.is_empty() {
        Ok(Gcm {
            entries: m.to_vec(),
        })
    } else {
        Err(Error::Gcm(v))
    }
}

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

fn sv_y_label(twice: i64) -> String {
    format!("Y_{twice}/2")
}

/// Schrödinger-Virasoro algebra on the window `|n| ≤ M`, central element
/// included.
///
/// Degrees are doubled so they stay integral: `L_n, M_n ↦ 2n`,
/// `Y_{n+1/2} ↦ 2n+1`, `C ↦ 0`.
pub fn build_sv(w: WindowSpec) -> GradedAlgebra {
    build_sv_with(w, true)
}

pub fn build_sv_with(w: WindowSpec, center: bool) -> GradedAlgebra {
    let m = w.max_abs() as i64;
    let name = if center {
        format!("sv[M={m}]")
    } else {
        format!("sv[M={m},no-center]")
    };
    let mut b = AlgebraBuilder::new(name, 1, true);
    let deg = |d: i64| Degree::new(vec![d]);
    let mut l = HashMap::new();
    let mut mm = HashMap::new();
    let mut y = HashMap::new();
    for n in -m..=m {
        l.insert(n, b.add_basis(format!("L_{n}"), deg(2 * n)));
    }
    for n in -m..=m {
        mm.insert(n, b.add_basis(format!("M_{n}"), deg(2 * n)));
    }
    // keyed by n for Y_{n+1/2}
    for n in -m..m {
        y.insert(n, b.add_basis(sv_y_label(2 * n + 1), deg(2 * n + 1)));
    }
    let c = center.then(|| b.add_basis("C", deg(0)));
    b.mark_cartan(l[&0]);
    b.mark_cartan(mm[&0]);
    if let Some(c) = c {
        b.mark_cartan(c);
    }

    let set = |b: &mut AlgebraBuilder, i: usize, j: usize, terms: Vec<(usize, Rational)>| {
        b.set_bracket(i, j, Element::from_terms(terms))
            .expect("sv table is consistent");
    };
    for p in -m..=m {
        for n in -m..=m {
            if p < n {
                let mut terms = Vec::new();
                if let Some(&k) = l.get(&(p + n)) {
                    terms.push((k, q(n - p)));
                }
                if let (true, Some(c)) = (p + n == 0, c) {
                    terms.push((c, Rational::new(n * n * n - n, 12)));
                }
                set(&mut b, l[&p], l[&n], terms);
            }
            if let Some(&k) = mm.get(&(p + n)) {
                set(&mut b, l[&p], mm[&n], vec![(k, q(n))]);
            }
        }
        for n in -m..m {
            if let Some(&k) = y.get(&(p + n)) {
                // n + (1 - p)/2
                set(
                    &mut b,
                    l[&p],
                    y[&n],
                    vec![(k, Rational::new(2 * n + 1 - p, 2))],
                );
            }
        }
    }
    for p in -m..m {
        for n in p + 1..m {
            if let Some(&k) = mm.get(&(p + n + 1)) {
                set(&mut b, y[&p], y[&n], vec![(k, q(n - p))]);
            }
        }
    }
    b.build()
        .expect("sv builder produces a well-formed algebra")
}

fn witt_label(j: usize, n: &[i64]) -> String {
    let parts: Vec<String> = n.iter().map(|x| x.to_string()).collect();
    format!("D_{j}({})", parts.join(","))
}

fn hypercube(d: usize, m: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|p| {
                (-m..=m).map(move |x| {
                    let mut p = p.clone();
                    p.push(x);
                    p
                })
            })
            .collect();
    }
    out
}

/// Generalized Witt algebra `w_d` on the hypercube `|n_i| ≤ M`, with basis
/// `D_j(n) = t^n t_j ∂/∂t_j` graded by `n`.
pub fn build_witt(d: usize, w: WindowSpec) -> Result<GradedAlgebra> {
    if d == 0 {
        return Err(Error::Contract("witt algebra needs d >= 1".into()));
    }
    let m = w.max_abs() as i64;
    let mut b = AlgebraBuilder::new(format!("witt[d={d},M={m}]"), d, true);
    let points = hypercube(d, m);
    let mut index: HashMap<(usize, Vec<i64>), usize> = HashMap::new();
    for n in &points {
        for j in 1..=d {
            let i = b.add_basis(witt_label(j, n), Degree::new(n.clone()));
            index.insert((j, n.clone()), i);
            if n.iter().all(|&x| x == 0) {
                b.mark_cartan(i);
            }
        }
    }
    for n in &points {
        for mv in &points {
            let sum: Vec<i64> = n.iter().zip(mv).map(|(a, c)| a + c).collect();
            if sum.iter().any(|x| x.abs() > m) {
                continue;
            }
            for j in 1..=d {
                for k in 1..=d {
                    let a = index[&(j, n.clone())];
                    let c = index[&(k, mv.clone())];
                    if a >= c {
                        continue;
                    }
                    // m_j D_k(n+m) - n_k D_j(n+m)
                    let terms = vec![
                        (index[&(k, sum.clone())], q(mv[j - 1])),
                        (index[&(j, sum.clone())], q(-n[k - 1])),
                    ];
                    b.set_bracket(a, c, Element::from_terms(terms))?;
                }
            }
        }
    }
    b.build()
}

type IntMatrix = Vec<Vec<i64>>;

fn commutator(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let mut out = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
            }
        }
    }
    out
}

fn sl_labels(n: usize) -> Vec<(String, IntMatrix, Vec<i64>)> {
    let unit = |i: usize, j: usize| {
        let mut m = vec![vec![0; n]; n];
        m[i][j] = 1;
        m
    };
    let root = |i: usize, j: usize| {
        let mut d = vec![0i64; n - 1];
        let (lo, hi, s) = if i < j { (i, j, 1) } else { (j, i, -1) };
        for c in d.iter_mut().take(hi).skip(lo) {
            *c = s;
        }
        d
    };
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push((format!("E_{}_{}", i + 1, j + 1), unit(i, j), root(i, j)));
        }
    }
    for i in 0..n {
        for j in 0..i {
            out.push((format!("E_{}_{}", i + 1, j + 1), unit(i, j), root(i, j)));
        }
    }
    for k in 0..n - 1 {
        let mut h = vec![vec![0; n]; n];
        h[k][k] = 1;
        h[k + 1][k + 1] = -1;
        out.push((format!("H_{}", k + 1), h, vec![0; n - 1]));
    }
    out
}

/// Expresses a traceless matrix in the basis produced by [`sl_labels`].
#[allow(clippy::needless_range_loop)]
fn sl_coordinates(
    n: usize,
    m: &IntMatrix,
    index_of: &HashMap<(usize, usize), usize>,
    h0: usize,
) -> Element {
    let mut terms = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && m[i][j] != 0 {
                terms.push((index_of[&(i, j)], q(m[i][j])));
            }
        }
    }
    // diag(d) = sum c_k (E_kk - E_{k+1,k+1}) with c_k = d_1 + ... + d_k
    let mut partial = 0;
    for k in 0..n - 1 {
        partial += m[k][k];
        if partial != 0 {
            terms.push((h0 + k, q(partial)));
        }
    }
    debug_assert_eq!(partial + m[n - 1][n - 1], 0, "commutators are traceless");
    Element::from_terms(terms)
}

fn sl_data(n: usize) -> Result<GradedAlgebra> {
    if n < 2 {
        return Err(Error::Contract(format!("sl_n needs n >= 2, got {n}")));
    }
    let items = sl_labels(n);
    let mut b = AlgebraBuilder::new(format!("sl[n={n}]"), n - 1, false);
    let mut index_of = HashMap::new();
    let mut h0 = usize::MAX;
    for (label, mat, deg) in &items {
        let idx = b.add_basis(label.clone(), Degree::new(deg.clone()));
        if let Some((i, j)) = unit_position(mat) {
            index_of.insert((i, j), idx);
        } else {
            h0 = h0.min(idx);
            b.mark_cartan(idx);
        }
    }
    for (a, (_, ma, _)) in items.iter().enumerate() {
        for (c, (_, mc, _)) in items.iter().enumerate().skip(a + 1) {
            let value = sl_coordinates(n, &commutator(ma, mc), &index_of, h0);
            b.set_bracket(a, c, value)?;
        }
    }
    b.build()
}

fn unit_position(m: &IntMatrix) -> Option<(usize, usize)> {
    let n = m.len();
    let nz: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| m[i][j] != 0)
        .collect();
    match nz.as_slice() {
        [(i, j)] if i != j => Some((*i, *j)),
        _ => None,
    }
}

/// `sl_n` in its Chevalley-type basis: matrix units `E_i_j` (`i ≠ j`) and
/// simple coroots `H_k = E_kk - E_{k+1,k+1}`, graded by simple-root
/// coordinates. Structure constants come from matrix commutators.
pub fn build_sl(n: usize) -> Result<GradedAlgebra> {
    sl_data(n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BorelSign {
    Positive,
    Negative,
}

/// Cartan plus all positive (or negative) root vectors of `sl_n`.
pub fn build_borel(n: usize, sign: BorelSign) -> Result<GradedAlgebra> {
    let sl = build_sl(n)?;
    let keep: Vec<usize> = (0..sl.dim())
        .filter(|&i| {
            let d = sl.degree(i).components();
            match sign {
                BorelSign::Positive => d.iter().all(|&c| c >= 0),
                BorelSign::Negative => d.iter().all(|&c| c <= 0),
            }
        })
        .collect();
    let tag = match sign {
        BorelSign::Positive => '+',
        BorelSign::Negative => '-',
    };
    subalgebra(&sl, &keep, format!("borel{tag}[n={n}]"), false, None)
}

/// The 3-dimensional subalgebra `span{L_0, M_1, M_-1}` of sv, graded by the
/// `L_0`-eigenvalue, with Cartan subalgebra `C L_0`.
pub fn build_counterexample_k() -> GradedAlgebra {
    let mut b = AlgebraBuilder::new("K", 1, false);
    let l0 = b.add_basis("L_0", Degree::new(vec![0]));
    let m1 = b.add_basis("M_1", Degree::new(vec![1]));
    let mm1 = b.add_basis("M_-1", Degree::new(vec![-1]));
    b.mark_cartan(l0);
    // [L_0, M_n] = n M_n
    b.set_bracket(l0, m1, Element::basis(m1)).unwrap();
    b.set_bracket(l0, mm1, Element::basis(mm1).scaled(&q(-1)))
        .unwrap();
    b.build().expect("K is well-formed")
}

/// Restriction of `alg` to the basis vectors `keep` (in that order).
/// Fails if the span is not closed under the bracket.
pub fn subalgebra(
    alg: &GradedAlgebra,
    keep: &[usize],
    name: String,
    truncated: bool,
    cartan: Option<&[usize]>,
) -> Result<GradedAlgebra> {
    let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(p, &i)| (i, p)).collect();
    let basis = keep.iter().map(|&i| alg.basis()[i].clone()).collect();
    let cartan: BTreeSet<usize> = match cartan {
        Some(c) => c.iter().map(|i| pos[i]).collect(),
        None => alg
            .cartan()
            .iter()
            .filter_map(|i| pos.get(i).copied())
            .collect(),
    };
    let mut brackets = BTreeMap::new();
    for (a, &i) in keep.iter().enumerate() {
        for (c, &j) in keep.iter().enumerate() {
            if a >= c {
                continue;
            }
            let v = alg.bracket_basis(i, j);
            let mut terms = Vec::with_capacity(v.nnz());
            for (k, x) in v.iter() {
                let p = pos.get(&k).ok_or_else(|| {
                    Error::Contract(format!(
                        "span is not closed: [{}, {}] involves {}",
                        alg.label(i),
                        alg.label(j),
                        alg.label(k)
                    ))
                })?;
                terms.push((*p, x.clone()));
            }
            let terms = SparseVector::from_entries(terms);
            if !terms.is_zero() {
                brackets.insert((a, c), terms);
            }
        }
    }
    GradedAlgebra::from_parts(name, alg.grading_dim(), truncated, basis, cartan, brackets)
}
