//! Resolution of two-dimensional cyclic quotient singularities.
//!
//! A point of type `(1/α)(1, β)` resolves into a chain of rational curves
//! with self-intersections `-b_i`, where `α/β = [b1, ..., bk]` is the
//! Hirzebruch-Jung continued fraction. [`ResolutionChain`] then simulates
//! Castelnuovo contractions on an explicit intersection matrix.

use std::fmt;

use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::arith::{int, mod_inverse, ratio};
use crate::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ResolveError {
    #[error("{k} is not prime to {alpha}")]
    NotCoprime { alpha: u64, k: u64 },
    #[error("invalid singularity (1/{alpha})(1,{beta})")]
    InvalidSingularity { alpha: u64, beta: u64 },
    #[error("no smooth rational (-1)-curve to contract")]
    NothingToContract,
    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),
}

/// The cyclic quotient singularity `(1/α)(1, β)`; `α = 1` is a smooth point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CyclicSingularity {
    alpha: u64,
    beta: u64,
}

impl CyclicSingularity {
    pub fn new(alpha: u64, beta: u64) -> Result<Self, ResolveError> {
        if alpha == 1 {
            return Ok(CyclicSingularity { alpha, beta: 0 });
        }
        if alpha == 0 || beta == 0 || beta >= alpha || alpha.gcd(&beta) != 1 {
            return Err(ResolveError::InvalidSingularity { alpha, beta });
        }
        Ok(CyclicSingularity { alpha, beta })
    }

    /// The singularity with stabilizer order `alpha` at a coordinate point of weight `k`.
    pub fn from_weight(alpha: u64, k: u64) -> Result<Self, ResolveError> {
        Self::new(alpha, beta_from_weight(alpha, k)?)
    }

    pub fn alpha(&self) -> u64 {
        self.alpha
    }

    pub fn beta(&self) -> u64 {
        self.beta
    }
}

/// The unique `β ∈ [1, α)` with `k β ≡ 1 (mod α)`; `0` when `α = 1`.
pub fn beta_from_weight(alpha: u64, k: u64) -> Result<u64, ResolveError> {
    if alpha == 0 {
        return Err(ResolveError::InvalidSingularity { alpha, beta: 0 });
    }
    if alpha == 1 {
        return Ok(0);
    }
    mod_inverse(k as i64, alpha as i64).map(|b| b as u64).ok_or(ResolveError::NotCoprime { alpha, k })
}

/// `[b1, ..., bk]` with `α/β = b1 - 1/(b2 - 1/(...))` and every `b_i ≥ 2`.
pub fn hj_expand(s: &CyclicSingularity) -> Vec<u64> {
    let (mut a, mut b) = (s.alpha, s.beta);
    let mut out = Vec::new();
    while b > 0 {
        let q = a.div_ceil(b);
        out.push(q);
        (a, b) = (b, q * b - a);
    }
    out
}

/// Evaluates `b1 - 1/(b2 - 1/(...))`; the empty fraction is `1/0`, reported as `None`.
pub fn hj_evaluate(chain: &[u64]) -> Option<Rational> {
    let mut acc: Option<Rational> = None;
    for &b in chain.iter().rev() {
        acc = Some(match acc {
            None => int(b as i64),
            Some(x) if x.is_zero() => return None,
            Some(x) => int(b as i64) - x.recip(),
        });
    }
    acc
}

/// `b` for the central curve; its self-intersection is `-b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralCurve {
    pub b: Rational,
    /// `b = 1` on a rational curve: a (-1)-curve that can be contracted.
    pub first_kind: bool,
}

/// `b = -1/D + Σ β_i/α_i`.
///
/// `D` is the denominator of the curve's own self-intersection in the
/// orbifold, `Π k_j / d` for a coordinate hyperplane section of degree `d`
/// in weights `k_j` (66 for `P(6,22,33)[66]`).
pub fn central_self_intersection(pairs: &[(u64, u64)], denominator: u64, genus: u64) -> Result<CentralCurve, ResolveError> {
    let mut b = -ratio(1, denominator as i64);
    for &(a, be) in pairs {
        let s = CyclicSingularity::new(a, be)?;
        if s.alpha > 1 {
            b += ratio(s.beta as i64, s.alpha as i64);
        }
    }
    let first_kind = genus == 0 && b == int(1);
    Ok(CentralCurve { b, first_kind })
}

/// `Π k_j / d` for the hyperplane section with weights `k` and degree `d`.
pub fn central_denominator(weights: &[u64], degree: u64) -> Option<u64> {
    let prod: u64 = weights.iter().product();
    (prod % degree == 0).then(|| prod / degree)
}

/// A named curve on a smooth surface.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Curve {
    pub name: String,
    pub self_intersection: i64,
    pub arithmetic_genus: i64,
    /// Genus of the normalization; contraction never changes it.
    pub geometric_genus: i64,
}

/// One contraction step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Contraction {
    pub name: String,
    /// Curves that met the contracted one, with intersection multiplicity.
    pub neighbours: Vec<(String, i64)>,
}

/// A configuration of curves with their intersection matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionChain {
    curves: Vec<Curve>,
    /// Off-diagonal intersection numbers; the diagonal is unused.
    intersections: Vec<Vec<i64>>,
    history: Vec<Contraction>,
}

impl ResolutionChain {
    /// Builds a configuration from named curves and incident pairs.
    pub fn new(curves: Vec<Curve>, incidences: &[(usize, usize, i64)]) -> Result<Self, ResolveError> {
        let n = curves.len();
        let mut m = vec![vec![0; n]; n];
        for &(i, j, k) in incidences {
            if i == j || i >= n || j >= n || k < 0 {
                return Err(ResolveError::InvalidConfiguration(format!("bad incidence ({i}, {j}, {k})")));
            }
            m[i][j] += k;
            m[j][i] += k;
        }
        Ok(ResolutionChain { curves, intersections: m, history: Vec::new() })
    }

    /// The exceptional chain of a cyclic quotient point: curves `-b_i`, consecutive ones meeting once.
    pub fn from_singularity(s: &CyclicSingularity, prefix: &str) -> Self {
        let bs = hj_expand(s);
        let curves = bs
            .iter()
            .enumerate()
            .map(|(i, &b)| Curve {
                name: format!("{prefix}{}", i + 1),
                self_intersection: -(b as i64),
                arithmetic_genus: 0,
                geometric_genus: 0,
            })
            .collect();
        let inc: Vec<_> = (1..bs.len()).map(|i| (i - 1, i, 1)).collect();
        Self::new(curves, &inc).expect("a chain is a valid configuration")
    }

    /// A linear chain of smooth rational curves with the given self-intersections.
    pub fn linear(self_intersections: &[i64]) -> Self {
        let curves = self_intersections
            .iter()
            .enumerate()
            .map(|(i, &s)| Curve { name: format!("E{}", i + 1), self_intersection: s, arithmetic_genus: 0, geometric_genus: 0 })
            .collect();
        let inc: Vec<_> = (1..self_intersections.len()).map(|i| (i - 1, i, 1)).collect();
        Self::new(curves, &inc).expect("a chain is a valid configuration")
    }

    pub fn curves(&self) -> &[Curve] {
        &self.curves
    }

    pub fn history(&self) -> &[Contraction] {
        &self.history
    }

    pub fn self_intersections(&self) -> Vec<i64> {
        self.curves.iter().map(|c| c.self_intersection).collect()
    }

    pub fn curve(&self, name: &str) -> Option<&Curve> {
        self.curves.iter().find(|c| c.name == name)
    }

    /// Intersection number of two distinct named curves.
    pub fn meet(&self, a: &str, b: &str) -> Option<i64> {
        let i = self.curves.iter().position(|c| c.name == a)?;
        let j = self.curves.iter().position(|c| c.name == b)?;
        Some(if i == j { self.curves[i].self_intersection } else { self.intersections[i][j] })
    }

    /// `true` when every curve is a smooth rational curve with self-intersection at most -2.
    pub fn is_minimal_resolution(&self) -> bool {
        self.curves.iter().all(|c| c.self_intersection <= -2 && c.arithmetic_genus == 0)
    }

    fn contractible(&self, i: usize) -> bool {
        let c = &self.curves[i];
        c.self_intersection == -1 && c.arithmetic_genus == 0
    }

    /// Contracts the first smooth rational (-1)-curve.
    pub fn blowdown(&self) -> Result<Self, ResolveError> {
        let i = (0..self.curves.len()).find(|&i| self.contractible(i)).ok_or(ResolveError::NothingToContract)?;
        Ok(self.contract_index(i))
    }

    /// Contracts the named curve, which must be a smooth rational (-1)-curve.
    pub fn blowdown_curve(&self, name: &str) -> Result<Self, ResolveError> {
        match self.curves.iter().position(|c| c.name == name) {
            Some(i) if self.contractible(i) => Ok(self.contract_index(i)),
            _ => Err(ResolveError::NothingToContract),
        }
    }

    /// Contracts (-1)-curves until none is left.
    pub fn blowdown_all(&self) -> Self {
        let mut cur = self.clone();
        while let Ok(next) = cur.blowdown() {
            cur = next;
        }
        cur
    }

    fn contract_index(&self, e: usize) -> Self {
        let n = self.curves.len();
        let m = &self.intersections;
        let mut curves = Vec::with_capacity(n - 1);
        let keep: Vec<usize> = (0..n).filter(|&i| i != e).collect();
        for &i in &keep {
            let mut c = self.curves[i].clone();
            let k = m[i][e];
            c.self_intersection += k * k;
            c.arithmetic_genus += k * (k - 1) / 2;
            curves.push(c);
        }
        let intersections = keep
            .iter()
            .map(|&i| keep.iter().map(|&j| if i == j { 0 } else { m[i][j] + m[i][e] * m[j][e] }).collect())
            .collect();
        let mut history = self.history.clone();
        history.push(Contraction {
            name: self.curves[e].name.clone(),
            neighbours: (0..n).filter(|&i| i != e && m[i][e] != 0).map(|i| (self.curves[i].name.clone(), m[i][e])).collect(),
        });
        ResolutionChain { curves, intersections, history }
    }
}

impl fmt::Display for ResolutionChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .curves
            .iter()
            .map(|c| format!("{}({}, p_a={})", c.name, c.self_intersection, c.arithmetic_genus))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// The resolved canonical curve of `P(1,6,22,33)[66]`.
///
/// The central curve `C` has `b = 1`. It meets the `-2` curve `A` from the
/// point `2/1`, the `-3` curve `B` from `3/1`, and the `-6` end `G` of the
/// `11/2` chain `G(-6) - H(-2)`.
pub fn exotic_surface_fixture() -> ResolutionChain {
    let rational = |name: &str, s: i64| Curve { name: name.into(), self_intersection: s, arithmetic_genus: 0, geometric_genus: 0 };
    ResolutionChain::new(
        vec![rational("C", -1), rational("A", -2), rational("B", -3), rational("G", -6), rational("H", -2)],
        &[(0, 1, 1), (0, 2, 1), (0, 3, 1), (3, 4, 1)],
    )
    .expect("fixture is well formed")
}

/// Lattice points `(α, β, γ)` with `1 ≤ α < w0` and
/// `α(w1 + w2) - w0(β + γ) + w0 ≥ 0`, `w0 β > w1 α`, `w0 γ > w2 α`,
/// in lexicographic order.
///
/// Each point is an exceptional divisor over the vertex of weight `w0`.
pub fn cone_lattice_points(w: [u64; 3]) -> Vec<[u64; 3]> {
    let [w0, w1, w2] = w.map(|x| x as i128);
    if w0 <= 1 {
        return Vec::new();
    }
    // β + γ ≤ α(w1 + w2)/w0 + 1 < w1 + w2 + 1 bounds both coordinates.
    let cap = w1 + w2;
    (1..w0)
        .into_par_iter()
        .flat_map_iter(|a| {
            let mut out = Vec::new();
            for b in 0..=cap {
                if w0 * b <= w1 * a {
                    continue;
                }
                for c in 0..=cap {
                    if w0 * c > w2 * a && a * (w1 + w2) - w0 * (b + c) + w0 >= 0 {
                        out.push([a as u64, b as u64, c as u64]);
                    }
                }
            }
            out
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hj(a: u64, b: u64) -> Vec<u64> {
        hj_expand(&CyclicSingularity::new(a, b).unwrap())
    }

    #[test]
    fn expansions() {
        assert_eq!(hj(11, 2), vec![6, 2]);
        assert_eq!(hj(2, 1), vec![2]);
        assert_eq!(hj(3, 1), vec![3]);
        assert_eq!(hj(1, 0), Vec::<u64>::new());
        assert_eq!(hj(7, 3), vec![3, 2, 2]);
        assert_eq!(hj_evaluate(&[6, 2]), Some(ratio(11, 2)));
        assert_eq!(hj_evaluate(&[]), None);
        assert!(CyclicSingularity::new(4, 2).is_err());
        assert!(CyclicSingularity::new(4, 4).is_err());
    }

    #[test]
    fn betas() {
        assert_eq!(beta_from_weight(11, 6).unwrap(), 2);
        assert_eq!(beta_from_weight(2, 1).unwrap(), 1);
        assert_eq!(beta_from_weight(7, 3).unwrap(), 5);
        assert_eq!(beta_from_weight(6, 4), Err(ResolveError::NotCoprime { alpha: 6, k: 4 }));
    }

    #[test]
    fn central_curve() {
        assert_eq!(central_denominator(&[6, 22, 33], 66), Some(66));
        let c = central_self_intersection(&[(2, 1), (3, 1), (11, 2)], 66, 0).unwrap();
        assert_eq!(c.b, int(1));
        assert!(c.first_kind);
        assert_eq!(central_self_intersection(&[], 1, 0).unwrap().b, int(-1));
        assert_eq!(central_self_intersection(&[(2, 1)], 2, 0).unwrap().b, int(0));
    }

    #[test]
    fn simple_blowdowns() {
        let r = ResolutionChain::linear(&[-1, -2]).blowdown().unwrap();
        assert_eq!(r.self_intersections(), vec![-1]);
        let r = ResolutionChain::linear(&[-3, -1, -3]).blowdown().unwrap();
        assert_eq!(r.self_intersections(), vec![-2, -2]);
        assert_eq!(r.meet("E1", "E3"), Some(1));
        assert_eq!(ResolutionChain::linear(&[-2, -2]).blowdown(), Err(ResolveError::NothingToContract));
        let chain = ResolutionChain::from_singularity(&CyclicSingularity::new(11, 2).unwrap(), "E");
        assert_eq!(chain.self_intersections(), vec![-6, -2]);
        assert!(chain.is_minimal_resolution());
    }

    #[test]
    fn exotic_collapse() {
        let end = exotic_surface_fixture().blowdown_all();
        let names: Vec<_> = end.history().iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, ["C", "A", "B"]);
        let f = end.curve("G").unwrap();
        assert_eq!((f.self_intersection, f.arithmetic_genus, f.geometric_genus), (0, 1, 0));
        let d = end.curve("H").unwrap();
        assert_eq!((d.self_intersection, d.arithmetic_genus), (-2, 0));
        assert_eq!(end.meet("G", "H"), Some(1));
        assert_eq!(end.curves().len(), 2);
    }

    #[test]
    fn cone_points() {
        let pts = cone_lattice_points([41, 7, 83]);
        assert_eq!(pts.len(), 20);
        assert_eq!(pts[0], [11, 2, 23]);
        assert_eq!(pts[19], [40, 7, 81]);
        assert!(pts.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(cone_lattice_points([2, 1, 1]), vec![[1, 1, 1]]);
        assert!(cone_lattice_points([1, 1, 1]).is_empty());
    }
}
