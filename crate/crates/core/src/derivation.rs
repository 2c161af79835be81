//! Homogeneous N-derivations on (possibly truncated) graded Lie algebras.
//!
//! An N-derivation of degree `γ` is a linear map `φ` with
//! `φ(L_β) ⊆ L_{β+γ}` and
//!
//! ```text
//! φ([x_1, ..., x_N]) = Σ_i [x_1, ..., φ(x_i), ..., x_N]
//! ```
//!
//! for the right-nested bracket. Its coordinates are the unknowns
//! `(b, b')` with `deg b' = deg b + γ`; every safe basis tuple contributes
//! one linear equation per target coordinate.

use std::collections::{BTreeMap, HashMap};

use crate::algebra::{Degree, Element, GradedAlgebra};
use crate::builders::WindowSpec;
use crate::error::{Error, Result};
use crate::linalg::{self, Eliminator, SparseMatrix, SparseVector, SubspaceBasis};
use crate::rational::Rational;

/// Solver columns: the pairs `(b, b')` with `deg b' = deg b + γ`, sorted
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownIndex {
    gamma: Degree,
    pairs: Vec<(usize, usize)>,
    /// Per source basis index: first column and the target basis indices.
    sources: Vec<Option<(usize, Vec<usize>)>>,
}

impl UnknownIndex {
    pub fn new(alg: &GradedAlgebra, gamma: &Degree) -> Self {
        let mut pairs = Vec::new();
        let mut sources = Vec::with_capacity(alg.dim());
        for b in 0..alg.dim() {
            let targets = alg.component(&(alg.degree(b) + gamma));
            if targets.is_empty() {
                sources.push(None);
                continue;
            }
            sources.push(Some((pairs.len(), targets.to_vec())));
            pairs.extend(targets.iter().map(|&t| (b, t)));
        }
        UnknownIndex {
            gamma: gamma.clone(),
            pairs,
            sources,
        }
    }

    pub fn gamma(&self) -> &Degree {
        &self.gamma
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn pair(&self, col: usize) -> (usize, usize) {
        self.pairs[col]
    }

    pub fn in_domain(&self, b: usize) -> bool {
        self.sources.get(b).is_some_and(|s| s.is_some())
    }

    /// First column and targets of source `b`.
    fn source(&self, b: usize) -> Option<(usize, &[usize])> {
        self.sources[b].as_ref().map(|(o, t)| (*o, t.as_slice()))
    }

    pub fn column(&self, b: usize, target: usize) -> Option<usize> {
        let (offset, targets) = self.source(b)?;
        targets.binary_search(&target).ok().map(|p| offset + p)
    }
}

/// A linear map of fixed degree `γ`, stored by its nonzero basis images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousMap {
    gamma: Degree,
    images: BTreeMap<usize, Element>,
}

impl HomogeneousMap {
    /// Checks that every source is in the degree-`γ` domain and every image
    /// is homogeneous of degree `deg(source) + γ`.
    pub fn new(
        alg: &GradedAlgebra,
        gamma: Degree,
        images: BTreeMap<usize, Element>,
    ) -> Result<Self> {
        if gamma.dim() != alg.grading_dim() {
            return Err(Error::Contract(format!(
                "degree {gamma} has length {}, algebra is graded by Z^{}",
                gamma.dim(),
                alg.grading_dim()
            )));
        }
        let mut kept = BTreeMap::new();
        for (b, img) in images {
            if b >= alg.dim() {
                return Err(Error::Contract(format!("basis index {b} out of range")));
            }
            let target = alg.degree(b) + &gamma;
            if !alg.is_present(&target) {
                return Err(Error::Contract(format!(
                    "{} is outside the domain of a degree-{gamma} map",
                    alg.label(b)
                )));
            }
            if let Some((k, _)) = img.terms().find(|(k, _)| *alg.degree(*k) != target) {
                return Err(Error::Contract(format!(
                    "image of {} has a term on {} of the wrong degree",
                    alg.label(b),
                    alg.label(k)
                )));
            }
            if !img.is_zero() {
                kept.insert(b, img);
            }
        }
        Ok(HomogeneousMap {
            gamma,
            images: kept,
        })
    }

    pub fn zero(gamma: Degree) -> Self {
        HomogeneousMap {
            gamma,
            images: BTreeMap::new(),
        }
    }

    pub fn gamma(&self) -> &Degree {
        &self.gamma
    }

    pub fn images(&self) -> &BTreeMap<usize, Element> {
        &self.images
    }

    pub fn is_zero(&self) -> bool {
        self.images.is_empty()
    }

    pub fn image(&self, b: usize) -> Element {
        self.images.get(&b).cloned().unwrap_or_default()
    }

    pub fn apply(&self, x: &Element) -> Element {
        let mut out = Element::zero();
        for (b, c) in x.terms() {
            if let Some(img) = self.images.get(&b) {
                out.add_scaled(c, img);
            }
        }
        out
    }

    pub fn to_vector(&self, index: &UnknownIndex) -> SparseVector {
        let mut entries = Vec::new();
        for (&b, img) in &self.images {
            for (t, c) in img.terms() {
                let col = index.column(b, t).expect("image lies in the unknown index");
                entries.push((col, c.clone()));
            }
        }
        SparseVector::from_entries(entries)
    }

    pub fn from_vector(index: &UnknownIndex, v: &SparseVector) -> Self {
        let mut images: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
        for (col, c) in v.iter() {
            let (b, t) = index.pair(col);
            images.entry(b).or_default().push((t, c.clone()));
        }
        HomogeneousMap {
            gamma: index.gamma().clone(),
            images: images
                .into_iter()
                .map(|(b, t)| (b, Element::from_terms(t)))
                .collect(),
        }
    }

    /// `ad(x)` restricted to the degree-`γ` domain, `γ = deg x`.
    pub fn ad(alg: &GradedAlgebra, x: &Element) -> Result<Self> {
        let gamma = alg
            .homogeneous_degree(x)
            .cloned()
            .ok_or_else(|| Error::Contract("ad needs a nonzero homogeneous element".into()))?;
        let images = (0..alg.dim())
            .filter(|&b| alg.is_present(&(alg.degree(b) + &gamma)))
            .map(|b| (b, alg.bracket(x, &Element::basis(b))))
            .collect();
        HomogeneousMap::new(alg, gamma, images)
    }
}

/// An arbitrary linear map given by basis images.
pub type LinearMap = BTreeMap<usize, Element>;

struct ConstraintGenerator<'a> {
    alg: &'a GradedAlgebra,
    order: usize,
    gamma: &'a Degree,
    index: &'a UnknownIndex,
    tuple: Vec<usize>,
    /// Deduplicated normalized rows, keyed by the first (tuple, target)
    /// that produced them.
    rows: HashMap<SparseVector, (Vec<usize>, usize)>,
}

impl ConstraintGenerator<'_> {
    /// Chooses the basis vector at position `pos`, given the already
    /// evaluated suffix `[b_{pos+1}, ..., b_N]` and the contributions of
    /// φ inserted at positions after `pos`.
    fn extend(
        &mut self,
        pos: usize,
        suffix_deg: Option<&Degree>,
        suffix: &Element,
        inserted: &[(usize, Element)],
    ) {
        let alg = self.alg;
        for b in 0..alg.dim() {
            let deg = match suffix_deg {
                Some(s) => alg.degree(b) + s,
                None => alg.degree(b).clone(),
            };
            if alg.is_truncated()
                && !(self.index.in_domain(b)
                    && alg.is_present(&deg)
                    && alg.is_present(&(&deg + self.gamma)))
            {
                continue;
            }
            let (new_suffix, mut new_inserted) = match suffix_deg {
                None => (Element::basis(b), Vec::new()),
                Some(_) => {
                    let s = alg.ad_basis(b, suffix);
                    let ins: Vec<(usize, Element)> = inserted
                        .iter()
                        .map(|(c, v)| (*c, alg.ad_basis(b, v)))
                        .filter(|(_, v)| !v.is_zero())
                        .collect();
                    (s, ins)
                }
            };
            if let Some((offset, targets)) = self.index.source(b) {
                for (p, &t) in targets.iter().enumerate() {
                    let v = match suffix_deg {
                        None => Element::basis(t),
                        Some(_) => alg.ad_basis(t, suffix),
                    };
                    if !v.is_zero() {
                        new_inserted.push((offset + p, v));
                    }
                }
            }
            if new_suffix.is_zero() && new_inserted.is_empty() {
                continue;
            }
            self.tuple[pos] = b;
            if pos == 0 {
                self.emit(&new_suffix, &new_inserted);
            } else {
                self.extend(pos - 1, Some(&deg), &new_suffix, &new_inserted);
            }
        }
    }

    /// Rows of `φ(S) - Σ_i [.., φ(b_i), ..] = 0`, one per target coordinate.
    fn emit(&mut self, bracket: &Element, inserted: &[(usize, Element)]) {
        let mut rows: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
        for (k, c) in bracket.terms() {
            if let Some((offset, targets)) = self.index.source(k) {
                for (p, &t) in targets.iter().enumerate() {
                    rows.entry(t).or_default().push((offset + p, c.clone()));
                }
            }
        }
        for (col, v) in inserted {
            for (t, c) in v.terms() {
                rows.entry(t).or_default().push((*col, -c));
            }
        }
        for (t, entries) in rows {
            let row = SparseVector::from_entries(entries).normalized();
            if row.is_zero() {
                continue;
            }
            let key = (self.tuple.clone(), t);
            match self.rows.get_mut(&row) {
                Some(old) => {
                    if key < *old {
                        *old = key;
                    }
                }
                None => {
                    self.rows.insert(row, key);
                }
            }
        }
    }
}

/// The linear system whose nullspace is the space of degree-`γ`
/// N-derivations (relative to the safe tuples of a truncation).
///
/// Rows are normalized to a leading 1, deduplicated, and ordered by the
/// lexicographically first tuple (then target coordinate) producing them.
pub fn build_constraints(
    alg: &GradedAlgebra,
    order: usize,
    gamma: &Degree,
) -> Result<(SparseMatrix, UnknownIndex)> {
    check_order(order)?;
    check_gamma(alg, gamma)?;
    let index = UnknownIndex::new(alg, gamma);
    if index.is_empty() {
        return Ok((SparseMatrix::new(0), index));
    }
    let mut gen = ConstraintGenerator {
        alg,
        order,
        gamma,
        index: &index,
        tuple: vec![0; order],
        rows: HashMap::new(),
    };
    gen.extend(gen.order - 1, None, &Element::zero(), &[]);
    let mut rows: Vec<(SparseVector, (Vec<usize>, usize))> = gen.rows.into_iter().collect();
    rows.sort_by(|a, b| a.1.cmp(&b.1));
    let m = SparseMatrix::from_rows(index.len(), rows.into_iter().map(|(r, _)| r).collect());
    Ok((m, index))
}

fn check_order(order: usize) -> Result<()> {
    if order < 2 {
        return Err(Error::Contract(format!(
            "order N must be at least 2, got {order}"
        )));
    }
    Ok(())
}

fn check_gamma(alg: &GradedAlgebra, gamma: &Degree) -> Result<()> {
    if gamma.dim() != alg.grading_dim() {
        return Err(Error::Contract(format!(
            "degree {gamma} has length {}, algebra is graded by Z^{}",
            gamma.dim(),
            alg.grading_dim()
        )));
    }
    Ok(())
}

/// Solution space of one homogeneous component.
#[derive(Clone, Debug)]
pub struct NderSolution {
    pub order: usize,
    pub index: UnknownIndex,
    /// Number of distinct constraint rows.
    pub constraints: usize,
    pub basis: SubspaceBasis,
}

impl NderSolution {
    pub fn nullity(&self) -> usize {
        self.basis.dim()
    }

    pub fn maps(&self) -> Vec<HomogeneousMap> {
        self.basis
            .vectors()
            .iter()
            .map(|v| HomogeneousMap::from_vector(&self.index, v))
            .collect()
    }

    pub fn contains(&self, phi: &HomogeneousMap) -> bool {
        self.basis.contains(&phi.to_vector(&self.index))
    }
}

pub fn solve_nder(alg: &GradedAlgebra, order: usize, gamma: &Degree) -> Result<NderSolution> {
    let (m, index) = build_constraints(alg, order, gamma)?;
    let mut elim = Eliminator::new(index.len());
    for r in m.rows() {
        if elim.is_full() {
            break;
        }
        elim.insert(r);
    }
    let basis = linalg::nullspace_of_rref(index.len(), &elim);
    Ok(NderSolution {
        order,
        index,
        constraints: m.num_rows(),
        basis,
    })
}

/// Checks the N-derivation identity directly on every safe basis tuple.
pub fn is_nder(alg: &GradedAlgebra, phi: &HomogeneousMap, order: usize) -> Result<bool> {
    check_order(order)?;
    check_gamma(alg, phi.gamma())?;
    let n = alg.dim();
    if n == 0 {
        return Ok(true);
    }
    let mut tuple = vec![0usize; order];
    loop {
        let degs: Vec<Degree> = tuple.iter().map(|&b| alg.degree(b).clone()).collect();
        if alg.is_safe_tuple(&degs, phi.gamma()) {
            let xs: Vec<Element> = tuple.iter().map(|&b| Element::basis(b)).collect();
            let lhs = phi.apply(&alg.n_bracket(&xs)?);
            let mut rhs = Element::zero();
            for i in 0..order {
                let mut ys = xs.clone();
                ys[i] = phi.image(tuple[i]);
                if ys[i].is_zero() {
                    continue;
                }
                rhs.add_scaled(&Rational::one(), &alg.n_bracket(&ys)?);
            }
            if lhs != rhs {
                return Ok(false);
            }
        }
        // odometer, last position fastest
        let mut p = order;
        loop {
            if p == 0 {
                return Ok(true);
            }
            p -= 1;
            tuple[p] += 1;
            if tuple[p] < n {
                break;
            }
            tuple[p] = 0;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonWitness {
    /// The order whose projected solution space contains the vector.
    pub order: usize,
    /// Coordinates over the full unknown index.
    pub vector: SparseVector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonReport {
    pub algebra: String,
    pub gamma: Degree,
    pub orders: (usize, usize),
    pub inner_radius: u64,
    pub unknowns: usize,
    /// Unknowns whose source degree lies in the inner window.
    pub projected_unknowns: usize,
    pub nullities: (usize, usize),
    /// Projected dimensions of both spaces and of their intersection.
    pub dims: (usize, usize, usize),
    pub equal: bool,
    pub witness: Option<ComparisonWitness>,
}

/// Compares degree-`γ` solution spaces of two orders after projecting onto
/// unknowns `(b, b')` with `deg b` inside the inner window.
pub fn compare_orders(
    alg: &GradedAlgebra,
    order1: usize,
    order2: usize,
    gamma: &Degree,
    inner: WindowSpec,
) -> Result<ComparisonReport> {
    check_order(order1)?;
    check_order(order2)?;
    check_gamma(alg, gamma)?;
    if inner.max_abs() > alg.radius() {
        return Err(Error::Contract(format!(
            "inner radius {} exceeds the algebra radius {}",
            inner.max_abs(),
            alg.radius()
        )));
    }
    let s1 = solve_nder(alg, order1, gamma)?;
    let s2 = solve_nder(alg, order2, gamma)?;
    let coords: Vec<usize> = s1
        .index
        .pairs()
        .iter()
        .enumerate()
        .filter(|(_, (b, _))| inner.contains(alg.degree(*b)))
        .map(|(c, _)| c)
        .collect();
    let p1 = linalg::project_basis(&s1.basis, &coords);
    let p2 = linalg::project_basis(&s2.basis, &coords);
    let equal = linalg::row_space_equal(&p1, &p2)?;
    let union = SubspaceBasis::span_of(coords.len(), p1.vectors().iter().chain(p2.vectors())).dim();
    let intersection = p1.dim() + p2.dim() - union;
    let lift = |v: &SparseVector| {
        SparseVector::from_entries(v.iter().map(|(k, c)| (coords[k], c.clone())).collect())
    };
    let witness = if equal {
        None
    } else if let Some(v) = p2.first_outside(&p1) {
        Some(ComparisonWitness {
            order: order2,
            vector: lift(v),
        })
    } else {
        p1.first_outside(&p2).map(|v| ComparisonWitness {
            order: order1,
            vector: lift(v),
        })
    };
    Ok(ComparisonReport {
        algebra: alg.name().to_string(),
        gamma: gamma.clone(),
        orders: (order1, order2),
        inner_radius: inner.max_abs(),
        unknowns: s1.index.len(),
        projected_unknowns: coords.len(),
        nullities: (s1.nullity(), s2.nullity()),
        dims: (p1.dim(), p2.dim(), intersection),
        equal,
        witness,
    })
}

/// A homogeneous `x` of degree `γ` with `ad(x) = φ` on φ's domain, if one
/// exists (free coordinates set to zero).
pub fn is_inner(alg: &GradedAlgebra, phi: &HomogeneousMap) -> Option<Element> {
    let gamma = phi.gamma();
    let candidates = alg.component(gamma);
    let mut m = SparseMatrix::new(candidates.len());
    let mut rhs = Vec::new();
    for b in 0..alg.dim() {
        let target = alg.degree(b) + gamma;
        if !alg.is_present(&target) {
            continue;
        }
        let img = phi.image(b);
        let columns: Vec<Element> = candidates
            .iter()
            .map(|&j| Element::from_vector(alg.bracket_basis(j, b).clone()))
            .collect();
        for &t in alg.component(&target) {
            let row = SparseVector::from_entries(
                columns
                    .iter()
                    .enumerate()
                    .map(|(p, c)| (p, c.coeff(t)))
                    .collect(),
            );
            rhs.push((m.num_rows(), img.coeff(t)));
            m.push_row(row);
        }
    }
    let x = linalg::solve(&m, &SparseVector::from_entries(rhs))?;
    Some(Element::from_terms(
        x.iter().map(|(p, c)| (candidates[p], c.clone())).collect(),
    ))
}

/// Splits an arbitrary linear map into its homogeneous components
/// `f_γ(b) = ρ_{deg b + γ} f(b)`, ordered by `γ`.
pub fn decompose_homogeneous(alg: &GradedAlgebra, f: &LinearMap) -> Vec<(Degree, HomogeneousMap)> {
    let mut parts: BTreeMap<Degree, BTreeMap<usize, Vec<(usize, Rational)>>> = BTreeMap::new();
    for (&b, img) in f {
        for (k, c) in img.terms() {
            let gamma = alg.degree(k) - alg.degree(b);
            parts
                .entry(gamma)
                .or_default()
                .entry(b)
                .or_default()
                .push((k, c.clone()));
        }
    }
    parts
        .into_iter()
        .map(|(gamma, images)| {
            let images = images
                .into_iter()
                .map(|(b, t)| (b, Element::from_terms(t)))
                .collect();
            (gamma.clone(), HomogeneousMap { gamma, images })
        })
        .collect()
}

/// Sum of homogeneous components as a plain linear map.
pub fn recombine(parts: &[(Degree, HomogeneousMap)]) -> LinearMap {
    let mut out: LinearMap = BTreeMap::new();
    for (_, phi) in parts {
        for (&b, img) in phi.images() {
            out.entry(b).or_default().add_scaled(&Rational::one(), img);
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build_counterexample_k, build_sl};

    fn d(x: i64) -> Degree {
        Degree::new(vec![x])
    }

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    /// φ(M_1) = M_-1, zero elsewhere.
    fn k_map(k: &GradedAlgebra) -> HomogeneousMap {
        let m1 = k.index_of("M_1").unwrap();
        let mm1 = k.index_of("M_-1").unwrap();
        HomogeneousMap::new(k, d(-2), BTreeMap::from([(m1, Element::basis(mm1))])).unwrap()
    }

    #[test]
    fn k_degree_zero_system() {
        let k = build_counterexample_k();
        let (m, index) = build_constraints(&k, 2, &d(0)).unwrap();
        assert_eq!(index.pairs(), &[(0, 0), (1, 1), (2, 2)]);
        assert_eq!(m.num_cols(), 3);
        assert_eq!(solve_nder(&k, 2, &d(0)).unwrap().nullity(), 2);
    }

    #[test]
    fn empty_domain_gives_empty_system() {
        let k = build_counterexample_k();
        let (m, index) = build_constraints(&k, 2, &d(5)).unwrap();
        assert!(index.is_empty());
        assert_eq!(m.num_rows(), 0);
        assert_eq!(solve_nder(&k, 2, &d(5)).unwrap().nullity(), 0);
    }

    #[test]
    fn order_must_be_at_least_two() {
        let k = build_counterexample_k();
        assert!(matches!(
            build_constraints(&k, 1, &d(0)),
            Err(Error::Contract(_))
        ));
        assert!(matches!(
            build_constraints(&k, 2, &Degree::new(vec![0, 0])),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn k_map_is_an_odd_order_derivation_only() {
        let k = build_counterexample_k();
        let phi = k_map(&k);
        assert!(is_nder(&k, &phi, 3).unwrap());
        assert!(is_nder(&k, &phi, 5).unwrap());
        assert!(!is_nder(&k, &phi, 2).unwrap());
        assert!(!is_nder(&k, &phi, 4).unwrap());
        assert!(solve_nder(&k, 3, &d(-2)).unwrap().contains(&phi));
        assert!(!solve_nder(&k, 2, &d(-2)).unwrap().contains(&phi));
        assert_eq!(is_inner(&k, &phi), None);
    }

    #[test]
    fn homogeneous_map_rejects_wrong_degrees() {
        let k = build_counterexample_k();
        let l0 = k.index_of("L_0").unwrap();
        let m1 = k.index_of("M_1").unwrap();
        // L_0 has no degree -2 target
        assert!(
            HomogeneousMap::new(&k, d(-2), BTreeMap::from([(l0, Element::basis(m1))])).is_err()
        );
        assert!(HomogeneousMap::new(&k, d(0), BTreeMap::from([(l0, Element::basis(m1))])).is_err());
    }

    #[test]
    fn sl2_inner_detection() {
        let sl2 = build_sl(2).unwrap();
        let h = Element::basis(sl2.index_of("H_1").unwrap());
        let ad_h = HomogeneousMap::ad(&sl2, &h).unwrap();
        assert_eq!(is_inner(&sl2, &ad_h), Some(h));
        assert_eq!(
            is_inner(&sl2, &HomogeneousMap::zero(d(0))),
            Some(Element::zero())
        );
        let sol = solve_nder(&sl2, 2, &d(0)).unwrap();
        assert_eq!(sol.nullity(), 1);
        assert!(sol.contains(&ad_h));
    }

    #[test]
    fn decomposition_examples() {
        let k = build_counterexample_k();
        let (l0, m1, mm1) = (0, 1, 2);
        let f: LinearMap =
            BTreeMap::from([(l0, Element::from_terms(vec![(m1, q(1)), (mm1, q(1))]))]);
        let parts = decompose_homogeneous(&k, &f);
        let gammas: Vec<&Degree> = parts.iter().map(|(g, _)| g).collect();
        assert_eq!(gammas, [&d(-1), &d(1)]);
        assert_eq!(parts[0].1.image(l0), Element::basis(mm1));
        assert_eq!(parts[1].1.image(l0), Element::basis(m1));
        assert_eq!(recombine(&parts), f);

        let phi = k_map(&k);
        let parts = decompose_homogeneous(&k, phi.images());
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].0, d(-2));
    }

    #[test]
    fn comparison_on_k() {
        let k = build_counterexample_k();
        let full = WindowSpec::new(1).unwrap();
        let r = compare_orders(&k, 2, 3, &d(-2), full).unwrap();
        assert!(!r.equal);
        let w = r.witness.unwrap();
        assert_eq!(w.order, 3);
        let (_, index) = build_constraints(&k, 3, &d(-2)).unwrap();
        assert_eq!(w.vector, k_map(&k).to_vector(&index));
        assert!(compare_orders(&k, 2, 4, &d(-2), full).unwrap().equal);
        assert!(compare_orders(&k, 2, 2, &d(0), full).unwrap().equal);
        assert!(compare_orders(&k, 2, 3, &d(0), WindowSpec::new(2).unwrap()).is_err());
    }
}
