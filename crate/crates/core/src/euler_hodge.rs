//! Euler numbers and Hodge bookkeeping.
//!
//! The orbifold Euler number of a Calabi-Yau hypersurface `P_w[d]` is the
//! double sum over the phase group `Z_d` acting with charges `q_i = w_i/d`:
//!
//! ```text
//! χ = (1/d) Σ_{l,r ∈ Z_d} Π_{i : l q_i, r q_i ∈ Z} (1 - 1/q_i)
//! ```
//!
//! with the empty product equal to 1.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::arith::{format_pq, int, ratio};
use crate::poly::Poly;
use crate::twist::{generalized_twist, image_weights, twist, GeneralizedTwistInput, TwistInput};
use crate::wps::{count_monomials, normalize, weighted_bezout, WeightSystem, WeightedHypersurface};
use crate::{Error, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EulerHodgeError {
    #[error("orbifold Euler number of P{weights}[{degree}] is not an integer: {value}")]
    NonIntegralResult { weights: String, degree: u64, value: String },
    #[error("negative Hodge number: {0}")]
    NegativeHodge(String),
    #[error("genus is not a non-negative integer: 2g - 2 = {0}")]
    NonIntegerGenus(String),
    #[error("Euler number {0} of a Calabi-Yau threefold must be even")]
    OddEuler(i64),
    #[error("invalid conifold data: {0}")]
    InvalidConifold(String),
}

/// Orbifold Euler number of the resolved hypersurface `P_ws[d]`.
///
/// The weights are normalized first. Group elements are bucketed by which
/// charges they make integral, so the double sum runs over pairs of buckets.
pub fn orbifold_euler(ws: &WeightSystem, d: u64) -> Result<i64, Error> {
    let norm = normalize(ws, d, None)?;
    let (w, d) = (norm.weights.weights().to_vec(), norm.degree);
    let mut buckets: BTreeMap<u64, u64> = BTreeMap::new();
    for l in 0..d {
        let mask = w.iter().enumerate().filter(|&(_, &wi)| (l * wi) % d == 0).fold(0u64, |m, (i, _)| m | 1 << i);
        *buckets.entry(mask).or_insert(0) += 1;
    }
    let factors: Vec<Rational> = w.iter().map(|&wi| int(1) - ratio(d as i64, wi as i64)).collect();
    let buckets: Vec<(u64, u64)> = buckets.into_iter().collect();
    let total: Rational = buckets
        .par_iter()
        .map(|&(m1, c1)| {
            let mut acc = Rational::from_integer(BigInt::from(0));
            for &(m2, c2) in &buckets {
                let both = m1 & m2;
                let prod = (0..w.len()).filter(|i| both >> i & 1 == 1).fold(Rational::one(), |p, i| p * &factors[i]);
                acc += prod * int((c1 * c2) as i64);
            }
            acc
        })
        .reduce(|| Rational::from_integer(BigInt::from(0)), |a, b| a + b);
    let chi = total / int(d as i64);
    match chi.is_integer().then(|| chi.to_integer().to_i64()).flatten() {
        Some(v) => Ok(v),
        None => Err(EulerHodgeError::NonIntegralResult {
            weights: ws.to_string(),
            degree: d,
            value: format_pq(&chi),
        }
        .into()),
    }
}

/// `h^{n,0}`: the number of monomials of degree `d - Σ w_i`, or 0 when negative.
pub fn geometric_genus(ws: &WeightSystem, d: u64) -> u128 {
    match d.checked_sub(ws.sum()) {
        Some(k) => count_monomials(ws, k, None),
        None => 0,
    }
}

/// Hodge numbers of a Calabi-Yau threefold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HodgePair {
    pub h11: u64,
    pub h21: u64,
}

impl HodgePair {
    /// `2(h11 - h21)`.
    pub fn euler(&self) -> i64 {
        2 * (self.h11 as i64 - self.h21 as i64)
    }
}

/// `h21 = h11 - χ/2`.
pub fn cy3_hodge(chi: i64, h11: u64) -> Result<HodgePair, EulerHodgeError> {
    if chi % 2 != 0 {
        return Err(EulerHodgeError::OddEuler(chi));
    }
    let h21 = h11 as i64 - chi / 2;
    if h21 < 0 {
        return Err(EulerHodgeError::NegativeHodge(format!("h21 = {h11} - {}/2 = {h21}", chi)));
    }
    Ok(HodgePair { h11, h21: h21 as u64 })
}

/// A degeneration through `P` nodes satisfying `R` relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConifoldData {
    pub nodes: u64,
    pub relations: u64,
    pub before: HodgePair,
}

/// `(h11 + R, h21 - (P - R))` after the small resolution.
pub fn conifold_transition(data: &ConifoldData) -> Result<HodgePair, EulerHodgeError> {
    let ConifoldData { nodes, relations, before } = *data;
    if relations > nodes {
        return Err(EulerHodgeError::InvalidConifold(format!("{relations} relations among {nodes} nodes")));
    }
    let lost = nodes - relations;
    let h21 = before.h21.checked_sub(lost).ok_or_else(|| {
        EulerHodgeError::NegativeHodge(format!("h21 = {} - {lost}", before.h21))
    })?;
    Ok(HodgePair { h11: before.h11 + relations, h21 })
}

/// Genus of the curve `P_ws[d1 d2]`, from `2g - 2 = (d1 d2 / Π w)(d1 + d2 - Σ w)`.
pub fn ci_curve_genus(d1: u64, d2: u64, ws: &WeightSystem) -> Result<u64, EulerHodgeError> {
    if ws.len() != 4 {
        return Err(EulerHodgeError::NonIntegerGenus(format!("{ws} is not a three-dimensional ambient space")));
    }
    let prod: u64 = ws.weights().iter().product();
    let two_g_minus_two = ratio((d1 * d2) as i64, prod as i64) * int((d1 + d2) as i64 - ws.sum() as i64);
    let g = (two_g_minus_two.clone() + int(2)) / int(2);
    match g.is_integer().then(|| g.to_integer().to_u64()).flatten() {
        Some(g) => Ok(g),
        None => Err(EulerHodgeError::NonIntegerGenus(format_pq(&two_g_minus_two))),
    }
}

/// One side of a twist factorization, described by weights and degrees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub description: String,
    pub expected: String,
    pub found: String,
    pub ok: bool,
}

/// Checks for the transition `P(8,8,4,2,1,1)[24] ↔ P(1,1)×P(8,8,4,2,1,1)[[1,1],[8,16]]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FourfoldTransitionReport {
    /// Genus of the singular curve `P(4,2,1,1)[16 16]`.
    pub sigma_genus: u64,
    /// Nodes of the degenerate threefold fiber, `P(4,4,1,1,2)` cut by degrees `(4,4,8,8)`.
    pub nodes: u64,
    pub factorizations: Vec<Factorization>,
}

impl FourfoldTransitionReport {
    pub fn all_verified(&self) -> bool {
        self.factorizations.iter().all(|f| f.ok)
    }
}

fn sorted(mut w: Vec<u64>) -> Vec<u64> {
    w.sort_unstable();
    w
}

fn fmt_weights(w: &[u64]) -> String {
    format!("({})", w.iter().map(u64::to_string).collect::<Vec<_>>().join(","))
}

fn hypersurface_factorization(
    v1: (&[u64], u64),
    v2: (&[u64], u64),
    ell: u64,
    expected: (&[u64], u64),
) -> Result<Factorization, Error> {
    let a = WeightedHypersurface::generic(v1.0.to_vec(), v1.1)?;
    let b = WeightedHypersurface::generic(v2.0.to_vec(), v2.1)?;
    let x = twist(&TwistInput::new(a, b, ell)?)?.x;
    let found = (sorted(x.weights().weights().to_vec()), x.degree());
    let want = (sorted(expected.0.to_vec()), expected.1);
    Ok(Factorization {
        description: format!("P{}[{}] × P{}[{}]", fmt_weights(v1.0), v1.1, fmt_weights(v2.0), v2.1),
        expected: format!("P{}[{}]", fmt_weights(&want.0), want.1),
        found: format!("P{}[{}]", fmt_weights(&found.0), found.1),
        ok: found == want,
    })
}

fn ci_factorization() -> Result<Factorization, Error> {
    // V1 = {x0^8 + x1^16 + x2^16} ⊂ P(2,1,1); V2 ⊂ P(1,1) × P(1,4,4,2,1) with p11 = y2, p20 = y2^2.
    let w = [2u64, 1, 1];
    let mu = 8u32;
    let terms = [vec![mu, 0, 0], vec![0, 16, 0], vec![0, 0, 16]].map(|e| (e, int(1)));
    let v1 = WeightedHypersurface::from_parts(w.to_vec(), 16, Poly::from_terms(3, terms))?;
    let v = WeightSystem::new(vec![1, 4, 4, 2, 1])?;
    let input = GeneralizedTwistInput {
        v1,
        v: v.clone(),
        p11: Poly::monomial(vec![0, 0, 1, 0, 0]),
        p20: Poly::monomial(vec![0, 0, 2, 0, 0]),
        nu: 3,
    };
    let r = generalized_twist(&input)?;
    let want_w = sorted(vec![8, 8, 4, 2, 1, 1]);
    let want_deg = vec![vec![1, 8], vec![1, 16]];
    let got_w = sorted(r.x.factors()[1].weights().to_vec());
    let ok = r.verified
        && got_w == want_w
        && r.x.multidegrees() == want_deg.as_slice()
        && r.v2.multidegrees() == [vec![1, 4], vec![1, 8]]
        && sorted(image_weights(&w, v.weights())) == want_w;
    Ok(Factorization {
        description: "P(2,1,1)[16] × P(1,1)×P(1,4,4,2,1)[[1,1],[4,8]]".into(),
        expected: format!("P(1,1)×P{}{:?}", fmt_weights(&want_w), want_deg),
        found: format!("P(1,1)×P{}{:?}", fmt_weights(&got_w), r.x.multidegrees()),
        ok,
    })
}

/// Verifies the twist factorizations of both sides of the fourfold
/// transition, the genus of the singular curve and the node count of the
/// degenerate fiber. Everything is checked on weights and degrees.
pub fn fourfold_transition_report() -> Result<FourfoldTransitionReport, Error> {
    let sigma_genus = ci_curve_genus(16, 16, &WeightSystem::new(vec![4, 2, 1, 1])?)?;
    let bez = weighted_bezout(&[4, 4, 8, 8], &WeightSystem::new(vec![4, 4, 1, 1, 2])?)?;
    let nodes = match bez.integral.then(|| bez.value.to_integer().to_u64()).flatten() {
        Some(n) => n,
        None => return Err(Error::Input(format!("node count {} is not an integer", format_pq(&bez.value)))),
    };
    let factorizations = vec![
        hypersurface_factorization((&[2, 1, 1], 12), (&[1, 1, 2, 2], 6), 6, (&[4, 4, 2, 1, 1], 12))?,
        hypersurface_factorization((&[2, 1, 1], 24), (&[1, 1, 2, 4, 4], 12), 12, (&[8, 8, 4, 2, 1, 1], 24))?,
        ci_factorization()?,
    ];
    Ok(FourfoldTransitionReport { sigma_genus, nodes, factorizations })
}
