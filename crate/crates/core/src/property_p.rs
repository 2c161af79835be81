//! Witness search for the per-element condition (P).
//!
//! For `x` of degree `α` either
//! - (P1) `x = [u, v]` with `deg u = α - β`, `deg v = β`, `β ∉ {0, α}`, or
//! - (P2) `[x, [x, y]] ≠ 0` for some `y` of degree `-α`.
//!
//! P2 is decided exactly over a basis of `L_{-α}`. P1 is a bounded search,
//! so `NoneFound` is inconclusive and relative to the window.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Degree, Element, GradedAlgebra};
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Random combinations tried per candidate `β`.
    pub samples: usize,
    pub seed: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            samples: 16,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PKind {
    P1 {
        beta: Degree,
        left: Element,
        right: Element,
    },
    P2 {
        partner: Element,
    },
    NoneFound,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PWitness {
    pub element: Element,
    pub degree: Degree,
    pub kind: PKind,
}

impl PWitness {
    pub fn is_witnessed(&self) -> bool {
        !matches!(self.kind, PKind::NoneFound)
    }

    /// Re-evaluates the witness from scratch.
    pub fn verify(&self, alg: &GradedAlgebra) -> bool {
        match &self.kind {
            PKind::P1 { beta, left, right } => {
                let lhs_deg = &self.degree - beta;
                !beta.is_zero()
                    && *beta != self.degree
                    && alg.homogeneous_degree(left) == Some(&lhs_deg)
                    && alg.homogeneous_degree(right) == Some(beta)
                    && alg.bracket(left, right) == self.element
            }
            PKind::P2 { partner } => {
                alg.homogeneous_degree(partner) == Some(&-&self.degree)
                    && !alg
                        .bracket(&self.element, &alg.bracket(&self.element, partner))
                        .is_zero()
            }
            PKind::NoneFound => true,
        }
    }
}

const COEFFS: [i64; 4] = [-2, -1, 1, 2];

pub fn check_property_p(
    alg: &GradedAlgebra,
    x: &Element,
    search: SearchBudget,
) -> Result<PWitness> {
    let alpha = alg
        .homogeneous_degree(x)
        .cloned()
        .ok_or_else(|| Error::Contract("element must be nonzero and homogeneous".into()))?;
    if alpha.is_zero() {
        return Err(Error::Contract(
            "condition (P) needs a nonzero degree".into(),
        ));
    }
    let neg = -&alpha;
    if !alg.is_present(&neg) {
        return Err(Error::Contract(format!("degree {neg} is absent")));
    }
    let found = |kind| {
        Ok(PWitness {
            element: x.clone(),
            degree: alpha.clone(),
            kind,
        })
    };

    for &y in alg.component(&neg) {
        let y = Element::basis(y);
        if !alg.bracket(x, &alg.bracket(x, &y)).is_zero() {
            return found(PKind::P2 { partner: y });
        }
    }

    let betas: Vec<&Degree> = alg
        .components()
        .keys()
        .rev()
        .filter(|b| !b.is_zero() && **b != alpha && alg.is_present(&(&alpha - *b)))
        .collect();

    for beta in &betas {
        for &u in alg.component(&(&alpha - *beta)) {
            for &v in alg.component(beta) {
                let (u, v) = (Element::basis(u), Element::basis(v));
                match alg.bracket(&u, &v).ratio_to(x) {
                    Some(c) if !c.is_zero() => {
                        let right = v.scaled(&c.recip());
                        return found(PKind::P1 {
                            beta: (*beta).clone(),
                            left: u,
                            right,
                        });
                    }
                    _ => {}
                }
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(search.seed);
    let mut sample = |idx: &[usize]| {
        Element::from_terms(
            idx.iter()
                .map(|&i| (i, Rational::from_int(*COEFFS.choose(&mut rng).unwrap())))
                .collect(),
        )
    };
    for beta in &betas {
        let left_idx = alg.component(&(&alpha - *beta));
        let right_idx = alg.component(beta);
        if left_idx.len() == 1 && right_idx.len() == 1 {
            continue;
        }
        for _ in 0..search.samples {
            let u = sample(left_idx);
            let v = sample(right_idx);
            match alg.bracket(&u, &v).ratio_to(x) {
                Some(c) if !c.is_zero() => {
                    let right = v.scaled(&c.recip());
                    return found(PKind::P1 {
                        beta: (*beta).clone(),
                        left: u,
                        right,
                    });
                }
                _ => {}
            }
        }
    }
    found(PKind::NoneFound)
}
