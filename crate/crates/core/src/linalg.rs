//! Sparse exact linear algebra over [`Rational`].
//!
//! Everything here is deterministic: elimination always produces the unique
//! reduced row-echelon form, and nullspace bases are read off it with free
//! variables set to unit values in increasing column order.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Sparse vector with strictly increasing indices and no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SparseVector {
    entries: Vec<(usize, Rational)>,
}

impl SparseVector {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a vector from arbitrary `(index, value)` pairs, summing
    /// repeated indices and dropping zeros.
    pub fn from_entries(mut entries: Vec<(usize, Rational)>) -> Self {
        entries.sort_by_key(|(i, _)| *i);
        let mut out: Vec<(usize, Rational)> = Vec::with_capacity(entries.len());
        for (i, v) in entries {
            match out.last_mut() {
                Some((j, acc)) if *j == i => *acc += &v,
                _ => out.push((i, v)),
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        SparseVector { entries: out }
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        SparseVector {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn unit(index: usize) -> Self {
        SparseVector {
            entries: vec![(index, Rational::one())],
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&Rational> {
        self.entries
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|p| &self.entries[p].1)
    }

    pub fn leading(&self) -> Option<(usize, &Rational)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        SparseVector {
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Rational, other: &SparseVector) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = std::mem::take(&mut self.entries).into_iter().peekable();
        let mut b = other.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, _)), Some((j, _))) if i == j => {
                    let (i, x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    let s = x + y * c;
                    if !s.is_zero() {
                        out.push((i, s));
                    }
                }
                (Some((i, _)), Some((j, _))) if i < j => out.push(a.next().unwrap()),
                (Some(_), Some(_)) | (None, Some(_)) => {
                    let (j, y) = b.next().unwrap();
                    out.push((*j, y * c));
                }
                (Some(_), None) => out.push(a.next().unwrap()),
                (None, None) => break,
            }
        }
        self.entries = out;
    }

    pub fn dot(&self, other: &SparseVector) -> Rational {
        let mut acc = Rational::zero();
        let (mut p, mut q) = (0, 0);
        while p < self.entries.len() && q < other.entries.len() {
            let (i, x) = &self.entries[p];
            let (j, y) = &other.entries[q];
            match i.cmp(j) {
                std::cmp::Ordering::Less => p += 1,
                std::cmp::Ordering::Greater => q += 1,
                std::cmp::Ordering::Equal => {
                    acc += &(x * y);
                    p += 1;
                    q += 1;
                }
            }
        }
        acc
    }

    /// Scales so that the leading entry is 1. Zero stays zero.
    pub fn normalized(&self) -> Self {
        match self.leading() {
            None => Self::new(),
            Some((_, v)) if v.is_one() => self.clone(),
            Some((_, v)) => self.scaled(&v.recip()),
        }
    }
}

/// Row-major sparse matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    num_cols: usize,
    rows: Vec<SparseVector>,
}

impl SparseMatrix {
    pub fn new(num_cols: usize) -> Self {
        SparseMatrix {
            num_cols,
            rows: Vec::new(),
        }
    }

    /// Panics if any row has an entry at or beyond `num_cols`.
    pub fn from_rows(num_cols: usize, rows: Vec<SparseVector>) -> Self {
        for r in &rows {
            if let Some(m) = r.max_index() {
                assert!(
                    m < num_cols,
                    "row entry {m} out of range for {num_cols} columns"
                );
            }
        }
        SparseMatrix { num_cols, rows }
    }

    /// Dense convenience constructor used heavily in tests.
    pub fn from_dense(num_cols: usize, rows: &[Vec<Rational>]) -> Self {
        let rows = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), num_cols, "ragged dense matrix");
                SparseVector::from_dense(r)
            })
            .collect();
        SparseMatrix { num_cols, rows }
    }

    pub fn push_row(&mut self, row: SparseVector) {
        if let Some(m) = row.max_index() {
            assert!(
                m < self.num_cols,
                "row entry {m} out of range for {} columns",
                self.num_cols
            );
        }
        self.rows.push(row);
    }

    pub fn num_cols(&self) -> usize {
        self.num_cols
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVector] {
        &self.rows
    }

    /// `m · x` as a vector indexed by row.
    pub fn mul_vec(&self, x: &SparseVector) -> SparseVector {
        SparseVector::from_entries(
            self.rows
                .iter()
                .enumerate()
                .map(|(i, r)| (i, r.dot(x)))
                .collect(),
        )
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        self.rows
            .iter()
            .map(|r| r.to_dense(self.num_cols))
            .collect()
    }
}

/// Incremental Gauss-Jordan elimination.
///
/// Pivot rows are kept fully reduced against one another, so once all rows
/// are inserted the pivot rows ordered by pivot column are exactly the RREF.
#[derive(Clone, Debug)]
pub struct Eliminator {
    num_cols: usize,
    pivots: BTreeMap<usize, SparseVector>,
}

impl Eliminator {
    pub fn new(num_cols: usize) -> Self {
        Eliminator {
            num_cols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_full(&self) -> bool {
        self.pivots.len() == self.num_cols
    }

    /// Residue of `row` after subtracting its components along the pivots.
    pub fn reduce(&self, row: &SparseVector) -> SparseVector {
        let mut out = row.clone();
        for (c, v) in row.iter() {
            if let Some(p) = self.pivots.get(&c) {
                out.add_scaled(&-v, p);
            }
        }
        out
    }

    /// Inserts a row; returns whether the rank grew.
    pub fn insert(&mut self, row: &SparseVector) -> bool {
        if self.is_full() {
            return false;
        }
        let r = self.reduce(row);
        let Some((lead, _)) = r.leading() else {
            return false;
        };
        let r = r.normalized();
        for p in self.pivots.values_mut() {
            if let Some(c) = p.get(lead).cloned() {
                p.add_scaled(&-c, &r);
            }
        }
        self.pivots.insert(lead, r);
        true
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    pub fn into_rows(self) -> Vec<SparseVector> {
        self.pivots.into_values().collect()
    }
}

/// Linearly independent vectors spanning a subspace of `Q^dim_ambient`.
///
/// Each vector carries a pivot column where it equals 1 and every other
/// vector vanishes; pivot columns strictly increase. RREF bases use the
/// leading column, nullspace bases use the free column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    dim_ambient: usize,
    vectors: Vec<SparseVector>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn empty(dim_ambient: usize) -> Self {
        SubspaceBasis {
            dim_ambient,
            vectors: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// RREF basis of the span of arbitrary vectors.
    pub fn span_of<'a>(
        dim_ambient: usize,
        vectors: impl IntoIterator<Item = &'a SparseVector>,
    ) -> Self {
        let mut elim = Eliminator::new(dim_ambient);
        for v in vectors {
            elim.insert(v);
        }
        Self::from_eliminator(elim)
    }

    fn from_eliminator(elim: Eliminator) -> Self {
        let dim_ambient = elim.num_cols;
        let pivots: Vec<usize> = elim.pivot_columns().collect();
        SubspaceBasis {
            dim_ambient,
            vectors: elim.into_rows(),
            pivots,
        }
    }

    pub fn dim_ambient(&self) -> usize {
        self.dim_ambient
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[SparseVector] {
        &self.vectors
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn contains(&self, v: &SparseVector) -> bool {
        let mut r = v.clone();
        for (p, b) in self.pivots.iter().zip(&self.vectors) {
            if let Some(c) = v.get(*p) {
                r.add_scaled(&-c, b);
            }
        }
        r.is_zero()
    }

    /// First basis vector of `self` outside `span(other)`.
    pub fn first_outside(&self, other: &SubspaceBasis) -> Option<&SparseVector> {
        self.vectors.iter().find(|v| !other.contains(v))
    }
}

/// Unique reduced row-echelon form and rank.
pub fn rref(m: &SparseMatrix) -> (usize, SparseMatrix) {
    let mut elim = Eliminator::new(m.num_cols);
    for r in &m.rows {
        elim.insert(r);
    }
    let rank = elim.rank();
    (
        rank,
        SparseMatrix {
            num_cols: m.num_cols,
            rows: elim.into_rows(),
        },
    )
}

/// Basis of `{v : m v = 0}` read off the RREF.
pub fn nullspace(m: &SparseMatrix) -> SubspaceBasis {
    let mut elim = Eliminator::new(m.num_cols);
    for r in &m.rows {
        if elim.is_full() {
            break;
        }
        elim.insert(r);
    }
    nullspace_of_rref(m.num_cols, &elim)
}

pub(crate) fn nullspace_of_rref(num_cols: usize, elim: &Eliminator) -> SubspaceBasis {
    let free: Vec<usize> = (0..num_cols)
        .filter(|c| !elim.pivots.contains_key(c))
        .collect();
    let vectors = free
        .iter()
        .map(|&f| {
            let mut entries = vec![(f, Rational::one())];
            for (&p, row) in &elim.pivots {
                if let Some(v) = row.get(f) {
                    entries.push((p, -v));
                }
            }
            SparseVector::from_entries(entries)
        })
        .collect();
    SubspaceBasis {
        dim_ambient: num_cols,
        vectors,
        pivots: free,
    }
}

/// One exact solution of `m x = b` with free variables set to zero, or
/// `None` when the system is inconsistent. `b` is indexed by row.
pub fn solve(m: &SparseMatrix, b: &SparseVector) -> Option<SparseVector> {
    if let Some(i) = b.max_index() {
        assert!(
            i < m.num_rows(),
            "right-hand side index {i} beyond {} rows",
            m.num_rows()
        );
    }
    let n = m.num_cols;
    let mut elim = Eliminator::new(n + 1);
    for (i, r) in m.rows.iter().enumerate() {
        let mut row = r.clone();
        if let Some(v) = b.get(i) {
            row.add_scaled(
                &Rational::one(),
                &SparseVector {
                    entries: vec![(n, v.clone())],
                },
            );
        }
        elim.insert(&row);
    }
    if elim.pivots.contains_key(&n) {
        return None;
    }
    let entries = elim
        .pivots
        .iter()
        .filter_map(|(&p, row)| row.get(n).map(|v| (p, v.clone())))
        .collect();
    Some(SparseVector::from_entries(entries))
}

/// `span(a) == span(b)`, decided as `rank(a) = rank(b) = rank(a ∪ b)`.
pub fn row_space_equal(a: &SubspaceBasis, b: &SubspaceBasis) -> Result<bool> {
    if a.dim_ambient != b.dim_ambient {
        return Err(Error::Contract(format!(
            "ambient dimensions differ: {} vs {}",
            a.dim_ambient, b.dim_ambient
        )));
    }
    let rank_a = SubspaceBasis::span_of(a.dim_ambient, &a.vectors).dim();
    let rank_b = SubspaceBasis::span_of(b.dim_ambient, &b.vectors).dim();
    if rank_a != rank_b {
        return Ok(false);
    }
    let stacked = SubspaceBasis::span_of(a.dim_ambient, a.vectors.iter().chain(&b.vectors)).dim();
    Ok(stacked == rank_a)
}

/// RREF basis of the image of `span(a)` under projection onto `coords`
/// (strictly increasing column indices). Column `coords[k]` becomes `k`.
pub fn project_basis(a: &SubspaceBasis, coords: &[usize]) -> SubspaceBasis {
    assert!(
        coords.windows(2).all(|w| w[0] < w[1]),
        "coordinates must be strictly increasing"
    );
    if let Some(&last) = coords.last() {
        assert!(
            last < a.dim_ambient,
            "coordinate {last} outside ambient dimension {}",
            a.dim_ambient
        );
    }
    let projected: Vec<SparseVector> = a
        .vectors
        .iter()
        .map(|v| {
            SparseVector::from_entries(
                v.iter()
                    .filter_map(|(i, x)| coords.binary_search(&i).ok().map(|k| (k, x.clone())))
                    .collect(),
            )
        })
        .collect();
    SubspaceBasis::span_of(coords.len(), &projected)
}
