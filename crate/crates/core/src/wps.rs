//! Weighted projective spaces and weighted homogeneous polynomials.
//!
//! A hypersurface `P_(w0..wn)[d]` is stored as a [`WeightedPolynomial`]: the
//! weight system, the degree, and a [`Poly`] whose every term has weighted
//! degree `d`. Nothing here uses floating point.

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::gcd_all;
use crate::poly::{univariate, Poly};
use crate::Rational;

/// Largest number of variables the stratum-by-stratum fallback will examine.
pub const STRATUM_VARIABLE_LIMIT: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WpsError {
    #[error("a weight system needs at least two weights, got {0}")]
    TooFewWeights(usize),
    #[error("weights must be positive")]
    ZeroWeight,
    #[error("degree must be positive")]
    ZeroDegree,
    #[error("degree {degree} is not divisible by the reduction factor {factor}")]
    NonDivisibleDegree { factor: u64, degree: u64 },
    #[error("exponent {exponent} of x{index} is not divisible by the reduction factor {factor}")]
    NonDivisibleExponent { index: usize, exponent: u32, factor: u64 },
    #[error("term {exponents:?} has weighted degree {found}, expected {expected}")]
    NotHomogeneous { exponents: Vec<u32>, expected: u64, found: u64 },
    #[error("polynomial has {found} variables but the weight system has {expected}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("weights at positions {offending:?} do not divide the degree")]
    NonFermatWeights { offending: Vec<usize> },
    #[error("no Fermat/chain polynomial of degree {degree} exists for weights {weights:?}")]
    NoChainRealization { weights: Vec<u64>, degree: u64 },
    #[error("polynomial lives in {found} but {expected} was requested")]
    AmbientMismatch { expected: String, found: String },
    #[error("quasismoothness undecided: {0}")]
    UnsupportedShape(String),
    #[error("{degrees} degrees given for a space of dimension {dimension}")]
    DimensionMismatch { degrees: usize, dimension: usize },
    #[error("complete intersection data inconsistent: {0}")]
    BadCompleteIntersection(String),
}

/// Ordered positive weights `(w0, ..., wn)` of a weighted projective space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct WeightSystem {
    weights: Vec<u64>,
}

impl WeightSystem {
    pub fn new(weights: Vec<u64>) -> Result<Self, WpsError> {
        if weights.len() < 2 {
            return Err(WpsError::TooFewWeights(weights.len()));
        }
        if weights.contains(&0) {
            return Err(WpsError::ZeroWeight);
        }
        Ok(WeightSystem { weights })
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// Number of homogeneous coordinates, `n + 1`.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn sum(&self) -> u64 {
        self.weights.iter().sum()
    }

    /// Dimension of the ambient space.
    pub fn dimension(&self) -> usize {
        self.weights.len() - 1
    }

    /// `true` when no `n` of the `n + 1` weights share a factor `> 1`.
    pub fn is_normalized(&self) -> bool {
        reduction_step(&self.weights).is_none()
    }

    /// Weighted degree of an exponent vector.
    pub fn degree_of(&self, exps: &[u32]) -> u64 {
        self.weights.iter().zip(exps).map(|(&w, &e)| w * u64::from(e)).sum()
    }
}

impl TryFrom<Vec<u64>> for WeightSystem {
    type Error = WpsError;
    fn try_from(v: Vec<u64>) -> Result<Self, WpsError> {
        WeightSystem::new(v)
    }
}

impl From<WeightSystem> for Vec<u64> {
    fn from(w: WeightSystem) -> Vec<u64> {
        w.weights
    }
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.weights))
    }
}

/// Comma-joins integers, the format used for weights everywhere.
pub fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// An exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial {
    pub exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    pub fn degree(&self, ws: &WeightSystem) -> u64 {
        ws.degree_of(&self.exponents)
    }
}

/// A polynomial all of whose terms have the same weighted degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedPolynomial {
    ambient: WeightSystem,
    degree: u64,
    poly: Poly,
}

impl WeightedPolynomial {
    pub fn new(ambient: WeightSystem, degree: u64, poly: Poly) -> Result<Self, WpsError> {
        if degree == 0 {
            return Err(WpsError::ZeroDegree);
        }
        if poly.nvars() != ambient.len() {
            return Err(WpsError::ArityMismatch { expected: ambient.len(), found: poly.nvars() });
        }
        for (e, _) in poly.terms() {
            let found = ambient.degree_of(e);
            if found != degree {
                return Err(WpsError::NotHomogeneous { exponents: e.clone(), expected: degree, found });
            }
        }
        Ok(WeightedPolynomial { ambient, degree, poly })
    }

    pub fn ambient(&self) -> &WeightSystem {
        &self.ambient
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    /// Terms as `(Monomial, coefficient)` pairs in canonical order.
    pub fn terms(&self) -> Vec<(Monomial, Rational)> {
        self.poly.terms().map(|(e, c)| (Monomial::new(e.clone()), c.clone())).collect()
    }
}

impl fmt::Display for WeightedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// The zero locus of a weighted homogeneous polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedHypersurface {
    pub polynomial: WeightedPolynomial,
}

impl WeightedHypersurface {
    pub fn new(polynomial: WeightedPolynomial) -> Self {
        WeightedHypersurface { polynomial }
    }

    /// Convenience constructor from raw parts.
    pub fn from_parts(weights: Vec<u64>, degree: u64, poly: Poly) -> Result<Self, WpsError> {
        Ok(Self::new(WeightedPolynomial::new(WeightSystem::new(weights)?, degree, poly)?))
    }

    /// The Fermat hypersurface, or a Fermat-plus-chain one when some weight does not divide `d`.
    pub fn generic(weights: Vec<u64>, degree: u64) -> Result<Self, WpsError> {
        let ws = WeightSystem::new(weights)?;
        Ok(Self::new(build_chain(&ws, degree)?))
    }

    pub fn weights(&self) -> &WeightSystem {
        self.polynomial.ambient()
    }

    pub fn degree(&self) -> u64 {
        self.polynomial.degree()
    }

    pub fn poly(&self) -> &Poly {
        self.polynomial.poly()
    }

    /// Number of weights minus two.
    pub fn dimension(&self) -> usize {
        self.weights().len() - 2
    }

    /// Normalizes the ambient space, transporting the polynomial.
    pub fn normalized(&self) -> Result<WeightedHypersurface, WpsError> {
        let n = normalize(self.weights(), self.degree(), Some(&self.polynomial))?;
        Ok(WeightedHypersurface::new(n.polynomial.expect("polynomial was supplied")))
    }
}

impl fmt::Display for WeightedHypersurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{}[{}]", self.weights(), self.degree())
    }
}

/// A complete intersection in a product of weighted projective spaces.
///
/// Variables of the equations are the coordinates of the factors concatenated
/// in order. `multidegrees[r][f]` is the degree of equation `r` in factor `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompleteIntersection {
    factors: Vec<WeightSystem>,
    multidegrees: Vec<Vec<u64>>,
    equations: Option<Vec<Poly>>,
}

impl CompleteIntersection {
    pub fn new(
        factors: Vec<WeightSystem>,
        multidegrees: Vec<Vec<u64>>,
        equations: Option<Vec<Poly>>,
    ) -> Result<Self, WpsError> {
        let bad = |m: String| Err(WpsError::BadCompleteIntersection(m));
        if factors.is_empty() {
            return bad("no ambient factors".into());
        }
        if let Some(row) = multidegrees.iter().find(|r| r.len() != factors.len()) {
            return bad(format!("multidegree row {row:?} needs {} entries", factors.len()));
        }
        let total: usize = factors.iter().map(WeightSystem::len).sum();
        if let Some(eqs) = &equations {
            if eqs.len() != multidegrees.len() {
                return bad(format!("{} equations for {} multidegree rows", eqs.len(), multidegrees.len()));
            }
            for (r, eq) in eqs.iter().enumerate() {
                if eq.nvars() != total {
                    return bad(format!("equation {r} has {} variables, expected {total}", eq.nvars()));
                }
                for (e, _) in eq.terms() {
                    let mut offset = 0;
                    for (f, ws) in factors.iter().enumerate() {
                        let deg = ws.degree_of(&e[offset..offset + ws.len()]);
                        if deg != multidegrees[r][f] {
                            return bad(format!(
                                "term {e:?} of equation {r} has degree {deg} in factor {f}, expected {}",
                                multidegrees[r][f]
                            ));
                        }
                        offset += ws.len();
                    }
                }
            }
        }
        Ok(CompleteIntersection { factors, multidegrees, equations })
    }

    pub fn factors(&self) -> &[WeightSystem] {
        &self.factors
    }

    pub fn multidegrees(&self) -> &[Vec<u64>] {
        &self.multidegrees
    }

    pub fn equations(&self) -> Option<&[Poly]> {
        self.equations.as_deref()
    }

    /// Sum of factor dimensions minus the number of equations.
    pub fn dimension(&self) -> usize {
        self.factors.iter().map(WeightSystem::dimension).sum::<usize>() - self.multidegrees.len()
    }
}

/// One reduction applied by [`normalize`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalizationStep {
    /// The untouched coordinate, or `None` for division of all weights by their gcd.
    pub index: Option<usize>,
    pub factor: u64,
}

/// Output of [`normalize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub weights: WeightSystem,
    pub degree: u64,
    pub polynomial: Option<WeightedPolynomial>,
    pub steps: Vec<NormalizationStep>,
}

/// Next reduction: the global gcd first, then the largest factor shared by
/// all weights but one (smallest index on ties).
fn reduction_step(weights: &[u64]) -> Option<NormalizationStep> {
    let g = gcd_all(weights);
    if g > 1 {
        return Some(NormalizationStep { index: None, factor: g });
    }
    let mut best: Option<NormalizationStep> = None;
    for i in 0..weights.len() {
        let a = weights.iter().enumerate().filter(|&(j, _)| j != i).fold(0, |acc, (_, &w)| acc.gcd(&w));
        if a > 1 && best.as_ref().map_or(true, |b| a > b.factor) {
            best = Some(NormalizationStep { index: Some(i), factor: a });
        }
    }
    best
}

/// Reduces `P_ws[d]` to normalized weights.
///
/// Each step divides the other weights and `d` by the factor `a`, and the
/// exponent of the untouched variable by `a` in every term of the polynomial.
/// Once `a | d` the exponent division always succeeds (`a` is prime to the
/// untouched weight after the gcd step), so `NonDivisibleExponent` only
/// guards against inconsistent input.
pub fn normalize(
    ws: &WeightSystem,
    d: u64,
    poly: Option<&WeightedPolynomial>,
) -> Result<Normalized, WpsError> {
    if let Some(p) = poly {
        if p.ambient() != ws || p.degree() != d {
            return Err(WpsError::AmbientMismatch {
                expected: format!("P{ws}[{d}]"),
                found: format!("P{}[{}]", p.ambient(), p.degree()),
            });
        }
    }
    let mut weights = ws.weights().to_vec();
    let mut degree = d;
    let mut terms: Option<Vec<(Vec<u32>, Rational)>> =
        poly.map(|p| p.poly().terms().map(|(e, c)| (e.clone(), c.clone())).collect());
    let mut steps = Vec::new();
    while let Some(step) = reduction_step(&weights) {
        let a = step.factor;
        if degree % a != 0 {
            return Err(WpsError::NonDivisibleDegree { factor: a, degree });
        }
        degree /= a;
        match step.index {
            None => weights.iter_mut().for_each(|w| *w /= a),
            Some(i) => {
                for (j, w) in weights.iter_mut().enumerate() {
                    if j != i {
                        *w /= a;
                    }
                }
                if let Some(ts) = terms.as_mut() {
                    for (e, _) in ts.iter_mut() {
                        if u64::from(e[i]) % a != 0 {
                            return Err(WpsError::NonDivisibleExponent { index: i, exponent: e[i], factor: a });
                        }
                        e[i] = (u64::from(e[i]) / a) as u32;
                    }
                }
            }
        }
        steps.push(step);
    }
    let weights = WeightSystem::new(weights)?;
    let polynomial = match terms {
        Some(ts) => Some(WeightedPolynomial::new(weights.clone(), degree, Poly::from_terms(ws.len(), ts))?),
        None => None,
    };
    Ok(Normalized { weights, degree, polynomial, steps })
}

/// How each variable of an invertible (Delsarte) polynomial is covered.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DelsarteTerm {
    pub owner: usize,
    pub exponent: u32,
    /// `Some(j)` for a chain monomial `x_owner^exponent · x_j`.
    pub partner: Option<usize>,
}

fn exponent_matrix_nonsingular(n: usize, assignment: &[DelsarteTerm]) -> bool {
    let mut m: Vec<Vec<Rational>> = vec![vec![Rational::zero(); n]; n];
    for t in assignment {
        m[t.owner][t.owner] = Rational::from_integer(t.exponent.into());
        if let Some(j) = t.partner {
            m[t.owner][j] = Rational::one();
        }
    }
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return false;
        };
        m.swap(col, piv);
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &m[col][col];
            let (top, bottom) = m.split_at_mut(r);
            for (x, p) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *x -= &f * p;
            }
        }
    }
    true
}

/// Reads a Fermat/chain/loop structure off the polynomial, if it has one.
///
/// Succeeds when there are exactly as many terms as variables, each term is
/// `x_i^a` or `x_i^a·x_j`, every variable owns one term, no variable is the
/// chain partner of two others, and the exponent matrix is nonsingular.
pub fn delsarte_structure(poly: &Poly) -> Option<Vec<DelsarteTerm>> {
    let n = poly.nvars();
    if poly.len() != n {
        return None;
    }
    let mut options: Vec<Vec<DelsarteTerm>> = Vec::with_capacity(n);
    for (e, _) in poly.terms() {
        let support: Vec<usize> = (0..n).filter(|&i| e[i] > 0).collect();
        let opts = match support.as_slice() {
            [i] => vec![DelsarteTerm { owner: *i, exponent: e[*i], partner: None }],
            [i, j] => {
                let mut v = Vec::new();
                if e[*j] == 1 {
                    v.push(DelsarteTerm { owner: *i, exponent: e[*i], partner: Some(*j) });
                }
                if e[*i] == 1 {
                    v.push(DelsarteTerm { owner: *j, exponent: e[*j], partner: Some(*i) });
                }
                v
            }
            _ => vec![],
        };
        if opts.is_empty() {
            return None;
        }
        options.push(opts);
    }
    let mut chosen = Vec::with_capacity(n);
    let mut owned = vec![false; n];
    let mut targeted = vec![false; n];
    assign(&options, &mut chosen, &mut owned, &mut targeted, n)
}

fn assign(
    options: &[Vec<DelsarteTerm>],
    chosen: &mut Vec<DelsarteTerm>,
    owned: &mut [bool],
    targeted: &mut [bool],
    n: usize,
) -> Option<Vec<DelsarteTerm>> {
    let k = chosen.len();
    if k == options.len() {
        return exponent_matrix_nonsingular(n, chosen).then(|| {
            let mut v = chosen.clone();
            v.sort_by_key(|t| t.owner);
            v
        });
    }
    for t in &options[k] {
        if owned[t.owner] || t.partner.is_some_and(|j| targeted[j]) {
            continue;
        }
        owned[t.owner] = true;
        if let Some(j) = t.partner {
            targeted[j] = true;
        }
        chosen.push(t.clone());
        if let Some(found) = assign(options, chosen, owned, targeted, n) {
            return Some(found);
        }
        chosen.pop();
        owned[t.owner] = false;
        if let Some(j) = t.partner {
            targeted[j] = false;
        }
    }
    None
}

/// Tests whether the affine cone over `V` is smooth away from the origin.
///
/// Invertible (Fermat, chain, loop) polynomials are decided combinatorially.
/// Other shapes with at most [`STRATUM_VARIABLE_LIMIT`] variables are checked
/// on every coordinate stratum: a stratum is fine if some partial derivative
/// restricts to a single monomial, bad if all of them vanish identically, and
/// on two-variable strata the common torus zeros are found by a univariate gcd.
pub fn is_quasismooth(v: &WeightedHypersurface) -> Result<bool, WpsError> {
    let poly = v.poly();
    if delsarte_structure(poly).is_some() {
        return Ok(true);
    }
    let n = poly.nvars();
    if n > STRATUM_VARIABLE_LIMIT {
        return Err(WpsError::UnsupportedShape(format!(
            "{n} variables exceed the stratum limit of {STRATUM_VARIABLE_LIMIT}"
        )));
    }
    let partials: Vec<Poly> = (0..n).map(|i| poly.derivative(i)).collect();
    let ws = v.weights().weights();
    for mask in 1u32..(1 << n) {
        let keep: Vec<bool> = (0..n).map(|i| mask & (1 << i) != 0).collect();
        let restricted: Vec<Poly> =
            partials.iter().map(|p| p.restrict_to_support(&keep)).filter(|p| !p.is_zero()).collect();
        if restricted.is_empty() {
            return Ok(false);
        }
        if restricted.iter().any(|p| p.len() == 1) {
            continue;
        }
        let vars: Vec<usize> = (0..n).filter(|&i| keep[i]).collect();
        match vars.as_slice() {
            [a, b] => {
                if two_variable_torus_zero(&restricted, *a, ws[*a], ws[*b]) {
                    return Ok(false);
                }
            }
            _ => {
                return Err(WpsError::UnsupportedShape(format!(
                    "stratum on variables {vars:?} needs elimination beyond two variables"
                )))
            }
        }
    }
    Ok(true)
}

/// Whether weighted homogeneous polynomials in `x_a, x_b` share a zero with both coordinates nonzero.
fn two_variable_torus_zero(polys: &[Poly], a: usize, wa: u64, wb: u64) -> bool {
    let step = (wb / wa.gcd(&wb)) as u32;
    let mut acc: Option<univariate::Dense> = None;
    for p in polys {
        let min = p.terms().map(|(e, _)| e[a]).min().unwrap_or(0);
        let mut dense: univariate::Dense = Vec::new();
        for (e, c) in p.terms() {
            let t = ((e[a] - min) / step) as usize;
            if dense.len() <= t {
                dense.resize(t + 1, Rational::zero());
            }
            dense[t] += c;
        }
        let dense = univariate::trim(dense);
        acc = Some(match acc {
            None => univariate::gcd(&dense, &vec![Rational::zero()]),
            Some(g) => univariate::gcd(&g, &dense),
        });
        if acc.as_ref().is_some_and(|g| g.len() <= 1) {
            return false;
        }
    }
    acc.is_some_and(|g| g.len() > 1)
}

/// Number of monomials of weighted degree `degree`, optionally using only the listed variables.
///
/// Computed by the standard coin-change recursion, which is exactly the
/// coefficient of `t^degree` in `Π 1/(1 - t^w)`.
pub fn count_monomials(ws: &WeightSystem, degree: u64, restrict_to: Option<&[usize]>) -> u128 {
    let weights: Vec<u64> = match restrict_to {
        Some(idx) => {
            let mut idx = idx.to_vec();
            idx.sort_unstable();
            idx.dedup();
            idx.into_iter().filter_map(|i| ws.weights().get(i).copied()).collect()
        }
        None => ws.weights().to_vec(),
    };
    let d = degree as usize;
    let mut ways = vec![0u128; d + 1];
    ways[0] = 1;
    for w in weights {
        let w = w as usize;
        for k in w..=d {
            ways[k] = ways[k].checked_add(ways[k - w]).expect("monomial count overflows u128");
        }
    }
    ways[d]
}

/// Result of [`weighted_bezout`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BezoutCount {
    pub value: Rational,
    /// `false` flags a non-generic weight incidence: the count is not an integer.
    pub integral: bool,
}

/// `Π degrees / Π weights`, the number of points cut out by generic equations.
pub fn weighted_bezout(degrees: &[u64], ws: &WeightSystem) -> Result<BezoutCount, WpsError> {
    if degrees.len() != ws.dimension() {
        return Err(WpsError::DimensionMismatch { degrees: degrees.len(), dimension: ws.dimension() });
    }
    let num = degrees.iter().fold(num_bigint::BigInt::one(), |acc, &d| acc * d);
    let den = ws.weights().iter().fold(num_bigint::BigInt::one(), |acc, &w| acc * w);
    let value = Rational::new(num, den);
    let integral = value.is_integer();
    Ok(BezoutCount { value, integral })
}

/// `Σ x_i^(d / w_i)` with unit coefficients.
pub fn build_fermat(ws: &WeightSystem, d: u64) -> Result<WeightedPolynomial, WpsError> {
    let offending: Vec<usize> = (0..ws.len()).filter(|&i| d % ws.weights()[i] != 0).collect();
    if !offending.is_empty() {
        return Err(WpsError::NonFermatWeights { offending });
    }
    let n = ws.len();
    let terms = (0..n).map(|i| {
        let mut e = vec![0u32; n];
        e[i] = (d / ws.weights()[i]) as u32;
        (e, Rational::one())
    });
    WeightedPolynomial::new(ws.clone(), d, Poly::from_terms(n, terms))
}

/// Which monomial shapes an invertible-polynomial search may use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DelsarteOptions {
    pub allow_chain: bool,
    /// Variables that may never appear as chain partners.
    pub forbidden_partners: Vec<usize>,
}

impl Default for DelsarteOptions {
    fn default() -> Self {
        DelsarteOptions { allow_chain: true, forbidden_partners: Vec::new() }
    }
}

/// Deterministic search for an invertible polynomial of degree `d`.
///
/// Variables are covered in index order; each prefers its pure power and then
/// chain monomials `x_i^a·x_j` with `j` ascending, backtracking when a
/// partner is already used or the exponent matrix turns out singular.
pub fn find_delsarte(ws: &WeightSystem, d: u64, opts: &DelsarteOptions) -> Option<Vec<DelsarteTerm>> {
    let n = ws.len();
    let w = ws.weights();
    let mut candidates: Vec<Vec<DelsarteTerm>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut c = Vec::new();
        if d % w[i] == 0 {
            c.push(DelsarteTerm { owner: i, exponent: (d / w[i]) as u32, partner: None });
        }
        if opts.allow_chain {
            for j in (0..n).filter(|&j| j != i && !opts.forbidden_partners.contains(&j)) {
                if d > w[j] && (d - w[j]) % w[i] == 0 {
                    c.push(DelsarteTerm { owner: i, exponent: ((d - w[j]) / w[i]) as u32, partner: Some(j) });
                }
            }
        }
        if c.is_empty() {
            return None;
        }
        candidates.push(c);
    }
    let mut chosen = Vec::with_capacity(n);
    let mut owned = vec![false; n];
    let mut targeted = vec![false; n];
    assign(&candidates, &mut chosen, &mut owned, &mut targeted, n)
}

/// Turns a Delsarte assignment into its polynomial with unit coefficients.
pub fn delsarte_polynomial(ws: &WeightSystem, d: u64, terms: &[DelsarteTerm]) -> Result<WeightedPolynomial, WpsError> {
    let n = ws.len();
    let poly = Poly::from_terms(
        n,
        terms.iter().map(|t| {
            let mut e = vec![0u32; n];
            e[t.owner] = t.exponent;
            if let Some(j) = t.partner {
                e[j] += 1;
            }
            (e, Rational::one())
        }),
    );
    WeightedPolynomial::new(ws.clone(), d, poly)
}

/// Fermat when possible, otherwise the first Fermat-plus-chain polynomial found.
pub fn build_chain(ws: &WeightSystem, d: u64) -> Result<WeightedPolynomial, WpsError> {
    let terms = find_delsarte(ws, d, &DelsarteOptions::default())
        .ok_or_else(|| WpsError::NoChainRealization { weights: ws.weights().to_vec(), degree: d })?;
    delsarte_polynomial(ws, d, &terms)
}

/// Memoized counts are not needed by the library, but callers that sweep many
/// degrees over one weight system can share a table.
pub fn monomial_count_table(ws: &WeightSystem, max_degree: u64) -> Vec<u128> {
    let mut ways = vec![0u128; max_degree as usize + 1];
    ways[0] = 1;
    for &w in ws.weights() {
        for k in w as usize..ways.len() {
            ways[k] += ways[k - w as usize];
        }
    }
    ways
}

/// Groups indices of a weight system by weight, useful for permutation-invariant comparisons.
pub fn weight_multiset(ws: &WeightSystem) -> HashMap<u64, usize> {
    let mut m = HashMap::new();
    for &w in ws.weights() {
        *m.entry(w).or_insert(0) += 1;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn ws(w: &[u64]) -> WeightSystem {
        WeightSystem::new(w.to_vec()).unwrap()
    }

    fn hyp(w: &[u64], d: u64, terms: &[&[u32]]) -> WeightedHypersurface {
        let p = Poly::from_terms(w.len(), terms.iter().map(|e| (e.to_vec(), int(1))));
        WeightedHypersurface::from_parts(w.to_vec(), d, p).unwrap()
    }

    #[test]
    fn weight_system_validation() {
        assert_eq!(WeightSystem::new(vec![1]), Err(WpsError::TooFewWeights(1)));
        assert_eq!(WeightSystem::new(vec![1, 0]), Err(WpsError::ZeroWeight));
        assert!(ws(&[1, 1, 1, 1]).is_normalized());
        assert!(!ws(&[2, 3, 6]).is_normalized());
    }

    #[test]
    fn normalize_worked_chain() {
        let w = ws(&[2, 3, 6]);
        let f = build_fermat(&w, 12).unwrap();
        let n = normalize(&w, 12, Some(&f)).unwrap();
        assert_eq!(n.weights, ws(&[1, 1, 1]));
        assert_eq!(n.degree, 2);
        assert_eq!(n.polynomial.unwrap(), build_fermat(&ws(&[1, 1, 1]), 2).unwrap());
        assert_eq!(
            n.steps,
            vec![
                NormalizationStep { index: Some(0), factor: 3 },
                NormalizationStep { index: Some(1), factor: 2 },
            ]
        );
    }

    #[test]
    fn normalize_intermediate_stage() {
        // The first step alone gives (2,1,2)[4].
        let w = ws(&[2, 3, 6]);
        let step = reduction_step(w.weights()).unwrap();
        assert_eq!(step, NormalizationStep { index: Some(0), factor: 3 });
    }

    #[test]
    fn normalize_global_gcd_and_identity() {
        let w = ws(&[4, 4, 2, 2, 12]);
        let f = build_fermat(&w, 24).unwrap();
        let n = normalize(&w, 24, Some(&f)).unwrap();
        assert_eq!(n.weights, ws(&[2, 2, 1, 1, 6]));
        assert_eq!(n.polynomial.unwrap(), build_fermat(&ws(&[2, 2, 1, 1, 6]), 12).unwrap());
        let q = ws(&[1, 1, 1, 1]);
        let n = normalize(&q, 4, None).unwrap();
        assert_eq!((n.weights, n.degree, n.steps.len()), (q, 4, 0));
    }

    #[test]
    fn normalize_errors() {
        assert_eq!(
            normalize(&ws(&[1, 2, 2]), 5, None),
            Err(WpsError::NonDivisibleDegree { factor: 2, degree: 5 })
        );
        let h = hyp(&[1, 2, 2], 4, &[&[2, 1, 0], &[0, 2, 0], &[0, 0, 2]]);
        let n = normalize(h.weights(), 4, Some(&h.polynomial)).unwrap();
        assert_eq!(n.polynomial.unwrap().poly().to_string(), "x0*x1 + x1^2 + x2^2");
        let other = hyp(&[1, 1], 2, &[&[2, 0], &[0, 2]]);
        assert!(matches!(
            normalize(&ws(&[1, 2, 2]), 4, Some(&other.polynomial)),
            Err(WpsError::AmbientMismatch { .. })
        ));
    }

    #[test]
    fn homogeneity_is_enforced() {
        let p = Poly::from_terms(2, [(vec![2, 0], int(1)), (vec![0, 1], int(1))]);
        assert!(matches!(
            WeightedHypersurface::from_parts(vec![1, 1], 2, p),
            Err(WpsError::NotHomogeneous { .. })
        ));
    }

    #[test]
    fn quasismooth_examples() {
        let f = WeightedHypersurface::generic(vec![2, 1, 1], 12).unwrap();
        assert!(is_quasismooth(&f).unwrap());
        let g = hyp(&[5, 6, 22, 33], 66, &[&[12, 1, 0, 0], &[0, 11, 0, 0], &[0, 0, 3, 0], &[0, 0, 0, 2]]);
        assert!(is_quasismooth(&g).unwrap());
        let h = hyp(&[1, 1], 2, &[&[2, 0]]);
        assert!(!is_quasismooth(&h).unwrap());
    }

    #[test]
    fn quasismooth_fallback() {
        // x^2 + y^2 + xy in P^1 factors as two distinct points: smooth.
        let p = Poly::from_terms(2, [(vec![2, 0], int(1)), (vec![0, 2], int(1)), (vec![1, 1], int(1))]);
        let v = WeightedHypersurface::from_parts(vec![1, 1], 2, p).unwrap();
        assert!(is_quasismooth(&v).unwrap());
        // (x - y)^2 is a double point.
        let p = Poly::from_terms(2, [(vec![2, 0], int(1)), (vec![0, 2], int(1)), (vec![1, 1], int(-2))]);
        let v = WeightedHypersurface::from_parts(vec![1, 1], 2, p).unwrap();
        assert!(!is_quasismooth(&v).unwrap());
        // x1^a x3 + x2^b x3 + x3^c: two chains into x3, singular where x3 = 0.
        let v = hyp(&[1, 1, 1], 3, &[&[2, 0, 1], &[0, 2, 1], &[0, 0, 3]]);
        assert!(!is_quasismooth(&v).unwrap());
    }

    #[test]
    fn quasismooth_loop() {
        // x0^2 x1 + x1^2 x0 + x2^3 is a loop plus Fermat.
        let v = hyp(&[1, 1, 1], 3, &[&[2, 1, 0], &[1, 2, 0], &[0, 0, 3]]);
        assert!(is_quasismooth(&v).unwrap());
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(count_monomials(&ws(&[1, 6, 22, 33]), 4, None), 1);
        assert_eq!(count_monomials(&ws(&[1, 1, 12, 44, 66]), 8, Some(&[0, 1])), 9);
        assert_eq!(count_monomials(&ws(&[3, 5]), 0, None), 1);
        assert_eq!(count_monomials(&ws(&[1, 1, 1]), 2, None), 6);
        assert_eq!(monomial_count_table(&ws(&[1, 1, 1]), 2), vec![1, 3, 6]);
    }

    #[test]
    fn bezout() {
        let b = weighted_bezout(&[4, 4, 8, 8], &ws(&[4, 4, 1, 1, 2])).unwrap();
        assert_eq!((b.value, b.integral), (int(32), true));
        let b = weighted_bezout(&[5, 5, 5, 5], &ws(&[1, 1, 1, 1, 1])).unwrap();
        assert_eq!(b.value, int(625));
        let b = weighted_bezout(&[1], &ws(&[2, 3])).unwrap();
        assert!(!b.integral);
        assert!(weighted_bezout(&[1, 1], &ws(&[1, 1])).is_err());
    }

    #[test]
    fn fermat_and_chain() {
        let f = build_fermat(&ws(&[1, 2, 3]), 6).unwrap();
        assert_eq!(f.poly().to_string(), "x0^6 + x1^3 + x2^2");
        assert_eq!(build_fermat(&ws(&[1, 1]), 3).unwrap().poly().len(), 2);
        assert_eq!(
            build_fermat(&ws(&[581, 41, 42, 498]), 3486),
            Err(WpsError::NonFermatWeights { offending: vec![1] })
        );
        let c = build_chain(&ws(&[581, 41, 42, 498]), 3486).unwrap();
        assert_eq!(c.poly().to_string(), "x0^6 + x1^84*x2 + x2^83 + x3^7");
        assert!(build_chain(&ws(&[2, 2, 3]), 5).is_err());
    }

    #[test]
    fn complete_intersection_checks() {
        let f = vec![ws(&[1, 1]), ws(&[1, 1, 1])];
        let eq = Poly::from_terms(5, [(vec![1, 0, 2, 0, 0], int(1)), (vec![0, 1, 0, 1, 1], int(1))]);
        let ci = CompleteIntersection::new(f.clone(), vec![vec![1, 2]], Some(vec![eq])).unwrap();
        assert_eq!(ci.dimension(), 2);
        assert!(CompleteIntersection::new(f, vec![vec![1]], None).is_err());
    }
}
