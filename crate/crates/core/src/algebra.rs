//! Graded Lie algebras given by sparse exact structure constants.
//!
//! Only brackets `[e_i, e_j]` with `i < j` are stored; the zero diagonal and
//! antisymmetry are synthesized. An algebra is either *complete* (it is the
//! whole finite-dimensional algebra, so a degree with no basis vectors really
//! is the zero space) or *truncated* (a finite window of an
//! infinite-dimensional algebra, where brackets landing outside the window
//! are unknown rather than zero). Truncated algebras are only ever evaluated
//! on tuples accepted by [`GradedAlgebra::is_safe_tuple`].

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::linalg::{SparseMatrix, SparseVector};
use crate::rational::Rational;

/// An element of the grading group `Z^d`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Degree(Vec<i64>);

impl Degree {
    pub fn new(components: Vec<i64>) -> Self {
        Degree(components)
    }

    pub fn zero(dim: usize) -> Self {
        Degree(vec![0; dim])
    }

    pub fn components(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Largest absolute coordinate.
    pub fn max_abs(&self) -> u64 {
        self.0.iter().map(|c| c.unsigned_abs()).max().unwrap_or(0)
    }
}

impl fmt::Debug for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Add for &Degree {
    type Output = Degree;
    fn add(self, rhs: &Degree) -> Degree {
        debug_assert_eq!(self.dim(), rhs.dim());
        Degree(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Degree {
    type Output = Degree;
    fn sub(self, rhs: &Degree) -> Degree {
        debug_assert_eq!(self.dim(), rhs.dim());
        Degree(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Degree {
    type Output = Degree;
    fn neg(self) -> Degree {
        Degree(self.0.iter().map(|a| -a).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub label: String,
    pub degree: Degree,
}

/// A sparse linear combination of basis vectors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Element(SparseVector);

impl Element {
    pub fn zero() -> Self {
        Element(SparseVector::new())
    }

    pub fn basis(index: usize) -> Self {
        Element(SparseVector::unit(index))
    }

    pub fn from_terms(terms: Vec<(usize, Rational)>) -> Self {
        Element(SparseVector::from_entries(terms))
    }

    pub fn from_vector(v: SparseVector) -> Self {
        Element(v)
    }

    pub fn as_vector(&self) -> &SparseVector {
        &self.0
    }

    pub fn into_vector(self) -> SparseVector {
        self.0
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.0.iter()
    }

    pub fn coeff(&self, index: usize) -> Rational {
        self.0.get(index).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        Element(self.0.scaled(c))
    }

    pub fn add_scaled(&mut self, c: &Rational, other: &Element) {
        self.0.add_scaled(c, &other.0);
    }

    /// `Some(c)` when `self == c * other` (with `other` nonzero).
    pub fn ratio_to(&self, other: &Element) -> Option<Rational> {
        let (i, v) = other.0.leading()?;
        let c = self.coeff(i) / v.clone();
        (other.scaled(&c) == *self).then_some(c)
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(&Rational::one(), rhs);
        out
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(&-Rational::one(), rhs);
        out
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scaled(&-Rational::one())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Term `k` of the stored bracket `[e_i, e_j]` has the wrong degree.
    Grading {
        i: usize,
        j: usize,
        k: usize,
    },
    Jacobi {
        i: usize,
        j: usize,
        k: usize,
    },
    CartanDegree {
        h: usize,
    },
    NotEigenvector {
        h: usize,
        x: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Grading { i, j, k } => {
                write!(
                    f,
                    "grading: [{i},{j}] has a term on {k} of the wrong degree"
                )
            }
            Violation::Jacobi { i, j, k } => write!(f, "jacobi: identity fails on ({i},{j},{k})"),
            Violation::CartanDegree { h } => write!(f, "cartan: element {h} has nonzero degree"),
            Violation::NotEigenvector { h, x } => {
                write!(f, "eigenvector: [{h},{x}] is not a multiple of {x}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Warning {
    /// A degree-zero basis vector outside the designated Cartan set.
    DegreeZeroOutsideCartan { x: usize },
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::DegreeZeroOutsideCartan { x } => {
                write!(
                    f,
                    "element {x} has degree zero but is not in the cartan set"
                )
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub warnings: Vec<Warning>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Basis vectors of one nonzero-or-non-Cartan degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSpace {
    pub degree: Degree,
    pub elements: Vec<usize>,
    /// Whether the negative degree is present as well.
    pub paired: bool,
}

/// Accumulates basis and brackets in any order; [`AlgebraBuilder::build`]
/// normalizes to the `i < j` storage convention.
#[derive(Clone, Debug)]
pub struct AlgebraBuilder {
    name: String,
    grading_dim: usize,
    truncated: bool,
    basis: Vec<BasisElement>,
    cartan: BTreeSet<usize>,
    brackets: BTreeMap<(usize, usize), SparseVector>,
}

impl AlgebraBuilder {
    pub fn new(name: impl Into<String>, grading_dim: usize, truncated: bool) -> Self {
        AlgebraBuilder {
            name: name.into(),
            grading_dim,
            truncated,
            basis: Vec::new(),
            cartan: BTreeSet::new(),
            brackets: BTreeMap::new(),
        }
    }

    pub fn add_basis(&mut self, label: impl Into<String>, degree: Degree) -> usize {
        self.basis.push(BasisElement {
            label: label.into(),
            degree,
        });
        self.basis.len() - 1
    }

    pub fn mark_cartan(&mut self, index: usize) {
        self.cartan.insert(index);
    }

    /// Records `[e_i, e_j] = value`. Setting both orders is allowed as long as
    /// they agree up to sign.
    pub fn set_bracket(&mut self, i: usize, j: usize, value: Element) -> Result<()> {
        if i == j {
            if value.is_zero() {
                return Ok(());
            }
            return Err(Error::InvalidAlgebra(format!("[{i},{i}] must vanish")));
        }
        let (key, v) = if i < j {
            ((i, j), value.0)
        } else {
            ((j, i), value.0.scaled(&-Rational::one()))
        };
        if v.is_zero() {
            return Ok(());
        }
        match self.brackets.get(&key) {
            Some(old) if *old != v => Err(Error::InvalidAlgebra(format!(
                "conflicting values for [{},{}]",
                key.0, key.1
            ))),
            _ => {
                self.brackets.insert(key, v);
                Ok(())
            }
        }
    }

    pub fn build(self) -> Result<GradedAlgebra> {
        GradedAlgebra::from_parts(
            self.name,
            self.grading_dim,
            self.truncated,
            self.basis,
            self.cartan,
            self.brackets,
        )
    }
}

#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    name: String,
    grading_dim: usize,
    truncated: bool,
    basis: Vec<BasisElement>,
    cartan: BTreeSet<usize>,
    brackets: BTreeMap<(usize, usize), SparseVector>,
    // derived
    table: Vec<SparseVector>,
    labels: HashMap<String, usize>,
    components: BTreeMap<Degree, Vec<usize>>,
    present: HashSet<Degree>,
}

impl PartialEq for GradedAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.grading_dim == other.grading_dim
            && self.truncated == other.truncated
            && self.basis == other.basis
            && self.cartan == other.cartan
            && self.brackets == other.brackets
    }
}

impl Eq for GradedAlgebra {}

impl GradedAlgebra {
    /// Structural checks only (indices, labels, degree lengths, storage
    /// convention); mathematical checks live in [`GradedAlgebra::validate`].
    pub fn from_parts(
        name: String,
        grading_dim: usize,
        truncated: bool,
        basis: Vec<BasisElement>,
        cartan: BTreeSet<usize>,
        brackets: BTreeMap<(usize, usize), SparseVector>,
    ) -> Result<Self> {
        let n = basis.len();
        let mut labels = HashMap::with_capacity(n);
        for (i, b) in basis.iter().enumerate() {
            if b.degree.dim() != grading_dim {
                return Err(Error::InvalidAlgebra(format!(
                    "basis element {:?} has degree of length {} (grading dimension {grading_dim})",
                    b.label,
                    b.degree.dim()
                )));
            }
            if labels.insert(b.label.clone(), i).is_some() {
                return Err(Error::InvalidAlgebra(format!(
                    "duplicate label {:?}",
                    b.label
                )));
            }
        }
        if let Some(&h) = cartan.iter().find(|&&h| h >= n) {
            return Err(Error::InvalidAlgebra(format!(
                "cartan index {h} out of range"
            )));
        }
        let mut table = vec![SparseVector::new(); n * n];
        for (&(i, j), v) in &brackets {
            if i >= j {
                return Err(Error::InvalidAlgebra(format!(
                    "bracket key ({i},{j}) must have i < j"
                )));
            }
            if j >= n || v.max_index().is_some_and(|k| k >= n) {
                return Err(Error::InvalidAlgebra(format!(
                    "bracket ({i},{j}) refers to a missing basis index"
                )));
            }
            table[i * n + j] = v.clone();
            table[j * n + i] = v.scaled(&-Rational::one());
        }
        let mut components: BTreeMap<Degree, Vec<usize>> = BTreeMap::new();
        for (i, b) in basis.iter().enumerate() {
            components.entry(b.degree.clone()).or_default().push(i);
        }
        let present = components.keys().cloned().collect();
        Ok(GradedAlgebra {
            name,
            grading_dim,
            truncated,
            basis,
            cartan,
            brackets,
            table,
            labels,
            components,
            present,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn grading_dim(&self) -> usize {
        self.grading_dim
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis[i].label
    }

    pub fn degree(&self, i: usize) -> &Degree {
        &self.basis[i].degree
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.get(label).copied()
    }

    pub fn cartan(&self) -> &BTreeSet<usize> {
        &self.cartan
    }

    /// Stored structure constants, keyed by `(i, j)` with `i < j`.
    pub fn structure_constants(&self) -> &BTreeMap<(usize, usize), SparseVector> {
        &self.brackets
    }

    /// Basis indices of each present degree, in index order.
    pub fn components(&self) -> &BTreeMap<Degree, Vec<usize>> {
        &self.components
    }

    pub fn component(&self, d: &Degree) -> &[usize] {
        self.components.get(d).map_or(&[], |v| v.as_slice())
    }

    pub fn is_present(&self, d: &Degree) -> bool {
        self.present.contains(d)
    }

    /// Largest absolute degree coordinate over the basis.
    pub fn radius(&self) -> u64 {
        self.basis
            .iter()
            .map(|b| b.degree.max_abs())
            .max()
            .unwrap_or(0)
    }

    /// `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &SparseVector {
        let n = self.dim();
        assert!(i < n && j < n, "basis index out of range");
        &self.table[i * n + j]
    }

    /// Bilinear bracket. Panics if an element refers to a missing basis index.
    pub fn bracket(&self, x: &Element, y: &Element) -> Element {
        let mut terms = Vec::new();
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                let ab = a * b;
                for (k, c) in self.bracket_basis(i, j).iter() {
                    terms.push((k, &ab * c));
                }
            }
        }
        Element::from_terms(terms)
    }

    /// `[e_i, y]`.
    pub fn ad_basis(&self, i: usize, y: &Element) -> Element {
        let mut terms = Vec::new();
        for (j, b) in y.terms() {
            for (k, c) in self.bracket_basis(i, j).iter() {
                terms.push((k, b * c));
            }
        }
        Element::from_terms(terms)
    }

    /// Right-nested bracket `[x_1, [x_2, ... [x_{n-1}, x_n] ...]]`.
    pub fn n_bracket(&self, xs: &[Element]) -> Result<Element> {
        if xs.len() < 2 {
            return Err(Error::Contract(format!(
                "n-bracket needs at least 2 arguments, got {}",
                xs.len()
            )));
        }
        let (last, rest) = xs.split_last().unwrap();
        Ok(rest
            .iter()
            .rev()
            .fold(last.clone(), |acc, x| self.bracket(x, &acc)))
    }

    /// The degree of a nonzero homogeneous element.
    pub fn homogeneous_degree(&self, x: &Element) -> Option<&Degree> {
        let mut terms = x.terms();
        let (first, _) = terms.next()?;
        let d = self.degree(first);
        terms.all(|(i, _)| self.degree(i) == d).then_some(d)
    }

    /// Whether the evaluation of an N-derivation constraint on basis
    /// vectors of degrees `degs`, with a map of degree `gamma` inserted at
    /// any position, stays inside the algebra. Complete algebras accept
    /// every tuple.
    pub fn is_safe_tuple(&self, degs: &[Degree], gamma: &Degree) -> bool {
        assert!(
            degs.len() >= 2,
            "safe-tuple check needs at least two degrees"
        );
        if !self.truncated {
            return true;
        }
        if degs
            .iter()
            .any(|d| !self.is_present(d) || !self.is_present(&(d + gamma)))
        {
            return false;
        }
        let mut s = Degree::zero(self.grading_dim);
        for d in degs.iter().rev() {
            s = &s + d;
            if !self.is_present(&s) || !self.is_present(&(&s + gamma)) {
                return false;
            }
        }
        true
    }

    fn jacobi_triple_safe(&self, i: usize, j: usize, k: usize) -> bool {
        let zero = Degree::zero(self.grading_dim);
        let (a, b, c) = (
            self.degree(i).clone(),
            self.degree(j).clone(),
            self.degree(k).clone(),
        );
        self.is_safe_tuple(&[a.clone(), b.clone(), c.clone()], &zero)
            && self.is_safe_tuple(&[b.clone(), c.clone(), a.clone()], &zero)
            && self.is_safe_tuple(&[c, a, b], &zero)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        for (&(i, j), v) in &self.brackets {
            let d = self.degree(i) + self.degree(j);
            for (k, _) in v.iter() {
                if *self.degree(k) != d {
                    report.violations.push(Violation::Grading { i, j, k });
                }
            }
        }
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if !self.jacobi_triple_safe(i, j, k) {
                        continue;
                    }
                    let (x, y, z) = (Element::basis(i), Element::basis(j), Element::basis(k));
                    let mut sum = self.bracket(&x, &self.bracket(&y, &z));
                    sum.add_scaled(&Rational::one(), &self.bracket(&y, &self.bracket(&z, &x)));
                    sum.add_scaled(&Rational::one(), &self.bracket(&z, &self.bracket(&x, &y)));
                    if !sum.is_zero() {
                        report.violations.push(Violation::Jacobi { i, j, k });
                    }
                }
            }
        }
        for &h in &self.cartan {
            if !self.degree(h).is_zero() {
                report.violations.push(Violation::CartanDegree { h });
            }
            for x in 0..n {
                let hx = self.bracket_basis(h, x);
                if hx.iter().any(|(k, _)| k != x) {
                    report.violations.push(Violation::NotEigenvector { h, x });
                }
            }
        }
        for (x, b) in self.basis.iter().enumerate() {
            if b.degree.is_zero() && !self.cartan.contains(&x) {
                report.warnings.push(Warning::DegreeZeroOutsideCartan { x });
            }
        }
        report
    }

    /// The eigenvalue `α(h)` with `[h, x] = α(h) x`.
    pub fn root_functional(&self, h: usize, x: usize) -> Result<Rational> {
        if !self.cartan.contains(&h) {
            return Err(Error::Contract(format!(
                "{} is not a cartan element",
                self.label(h)
            )));
        }
        if x >= self.dim() {
            return Err(Error::Contract(format!("basis index {x} out of range")));
        }
        let hx = self.bracket_basis(h, x);
        match hx.entries() {
            [] => Ok(Rational::zero()),
            [(k, c)] if *k == x => Ok(c.clone()),
            _ => Err(Error::InvalidAlgebra(format!(
                "[{}, {}] is not proportional to {}",
                self.label(h),
                self.label(x),
                self.label(x)
            ))),
        }
    }

    /// Non-Cartan basis vectors grouped by degree, flagging degrees whose
    /// negative is also present.
    pub fn roots_present(&self) -> Vec<RootSpace> {
        let mut out = Vec::new();
        for (d, idx) in &self.components {
            let elements: Vec<usize> = idx
                .iter()
                .copied()
                .filter(|i| !self.cartan.contains(i))
                .collect();
            if elements.is_empty() {
                continue;
            }
            out.push(RootSpace {
                degree: d.clone(),
                elements,
                paired: self.is_present(&-d),
            });
        }
        out
    }

    /// Matrix of `y ↦ [x, y]`; column `y`, row `k` holds the coefficient of
    /// `e_k` in `[x, e_y]`.
    pub fn ad_matrix(&self, x: &Element) -> SparseMatrix {
        let n = self.dim();
        let mut rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); n];
        for y in 0..n {
            let img = self.bracket(x, &Element::basis(y));
            for (k, c) in img.terms() {
                rows[k].push((y, c.clone()));
            }
        }
        SparseMatrix::from_rows(
            n,
            rows.into_iter().map(SparseVector::from_entries).collect(),
        )
    }

    /// Element from `(label, coefficient)` pairs.
    pub fn element(&self, terms: &[(&str, Rational)]) -> Result<Element> {
        terms
            .iter()
            .map(|(l, c)| {
                self.index_of(l)
                    .map(|i| (i, c.clone()))
                    .ok_or_else(|| Error::Contract(format!("unknown label {l:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Element::from_terms)
    }

    /// Human-readable form such as `-4*L_0 - 1/2*C`.
    pub fn format_element(&self, x: &Element) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (n, (i, c)) in x.terms().enumerate() {
            let (neg, mag) = if c.is_negative() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            match (n, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            if !mag.is_one() {
                s.push_str(&format!("{mag}*"));
            }
            s.push_str(self.label(i));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    /// Hand-written sl_2 with basis (e, f, h).
    fn sl2() -> GradedAlgebra {
        let mut b = AlgebraBuilder::new("sl2", 1, false);
        let e = b.add_basis("e", Degree::new(vec![1]));
        let f = b.add_basis("f", Degree::new(vec![-1]));
        let h = b.add_basis("h", Degree::new(vec![0]));
        b.mark_cartan(h);
        b.set_bracket(e, f, Element::basis(h)).unwrap();
        b.set_bracket(h, e, Element::basis(e).scaled(&q(2)))
            .unwrap();
        b.set_bracket(h, f, Element::basis(f).scaled(&q(-2)))
            .unwrap();
        b.build().unwrap()
    }

    #[test]
    fn antisymmetry_is_synthesized() {
        let a = sl2();
        for i in 0..3 {
            assert!(a.bracket_basis(i, i).is_zero());
            for j in 0..3 {
                assert_eq!(*a.bracket_basis(i, j), a.bracket_basis(j, i).scaled(&q(-1)));
            }
        }
        assert!(a.validate().is_valid());
    }

    #[test]
    fn n_bracket_nests_to_the_right() {
        let a = sl2();
        let (e, h) = (Element::basis(0), Element::basis(2));
        assert_eq!(
            a.n_bracket(&[h.clone(), h.clone(), e.clone()]).unwrap(),
            e.scaled(&q(4))
        );
        assert!(a
            .n_bracket(&[e.clone(), h.clone(), h.clone()])
            .unwrap()
            .is_zero());
        assert_eq!(
            a.n_bracket(&[h.clone(), e.clone()]).unwrap(),
            a.bracket(&h, &e)
        );
        assert!(matches!(a.n_bracket(&[e]), Err(Error::Contract(_))));
    }

    #[test]
    fn sl2_root_functional_and_ad() {
        let a = sl2();
        assert_eq!(a.root_functional(2, 0).unwrap(), q(2));
        assert_eq!(a.root_functional(2, 1).unwrap(), q(-2));
        assert!(matches!(a.root_functional(0, 1), Err(Error::Contract(_))));
        let ad = a.ad_matrix(&Element::basis(2));
        assert_eq!(
            ad.to_dense(),
            vec![
                vec![q(2), q(0), q(0)],
                vec![q(0), q(-2), q(0)],
                vec![q(0), q(0), q(0)]
            ]
        );
        assert!(a
            .ad_matrix(&Element::zero())
            .rows()
            .iter()
            .all(|r| r.is_zero()));
        let roots = a.roots_present();
        assert_eq!(roots.len(), 2);
        assert!(roots.iter().all(|r| r.paired));
    }

    #[test]
    fn cartan_with_nonzero_degree_is_flagged() {
        let mut b = AlgebraBuilder::new("bad", 1, false);
        let x = b.add_basis("x", Degree::new(vec![1]));
        b.mark_cartan(x);
        let a = b.build().unwrap();
        assert!(a
            .validate()
            .violations
            .contains(&Violation::CartanDegree { h: x }));
    }

    #[test]
    fn non_eigenvector_is_flagged() {
        let mut b = AlgebraBuilder::new("bad", 1, false);
        let h = b.add_basis("h", Degree::new(vec![0]));
        let x = b.add_basis("x", Degree::new(vec![1]));
        let y = b.add_basis("y", Degree::new(vec![1]));
        b.mark_cartan(h);
        b.set_bracket(h, x, Element::basis(y)).unwrap();
        let a = b.build().unwrap();
        assert!(a
            .validate()
            .violations
            .contains(&Violation::NotEigenvector { h, x }));
        assert!(matches!(
            a.root_functional(h, x),
            Err(Error::InvalidAlgebra(_))
        ));
    }

    #[test]
    fn structural_errors() {
        let mut b = AlgebraBuilder::new("dup", 1, false);
        b.add_basis("x", Degree::new(vec![0]));
        b.add_basis("x", Degree::new(vec![1]));
        assert!(b.build().is_err());

        let mut b = AlgebraBuilder::new("len", 2, false);
        b.add_basis("x", Degree::new(vec![0]));
        assert!(b.build().is_err());

        let mut b = AlgebraBuilder::new("diag", 1, false);
        let x = b.add_basis("x", Degree::new(vec![0]));
        assert!(b.set_bracket(x, x, Element::basis(x)).is_err());
    }

    #[test]
    fn format_element_reads_naturally() {
        let a = sl2();
        let x = Element::from_terms(vec![(0, q(-4)), (2, Rational::new(-1, 2)), (1, q(1))]);
        assert_eq!(a.format_element(&x), "-4*e + f - 1/2*h");
        assert_eq!(a.format_element(&Element::zero()), "0");
    }
}
