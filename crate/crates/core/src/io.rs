//! JSON interchange format for hypersurfaces.
//!
//! ```json
//! {"weights":[2,1,1],"degree":12,"terms":[{"exps":[6,0,0],"coeff":"1/1"}]}
//! ```
//!
//! Coefficients are exact rationals written as `"p/q"`; a bare integer string
//! is accepted on input.

use serde::{Deserialize, Serialize};

use crate::arith::{format_pq, parse_pq};
use crate::wps::{CompleteIntersection, WeightedHypersurface, WpsError};
use crate::{Error, Poly};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exps: Vec<u32>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypersurfaceJson {
    pub weights: Vec<u64>,
    pub degree: u64,
    pub terms: Vec<TermJson>,
}

/// Serializes one polynomial's terms.
pub fn terms_json(poly: &Poly) -> Vec<TermJson> {
    poly.terms().map(|(e, c)| TermJson { exps: e.clone(), coeff: format_pq(c) }).collect()
}

fn poly_from_terms(nvars: usize, terms: &[TermJson]) -> Result<Poly, Error> {
    let mut p = Poly::zero(nvars);
    for t in terms {
        if t.exps.len() != nvars {
            return Err(Error::Wps(WpsError::ArityMismatch { expected: nvars, found: t.exps.len() }));
        }
        let c = parse_pq(&t.coeff).ok_or_else(|| Error::Input(format!("bad coefficient {:?}", t.coeff)))?;
        p.add_term(t.exps.clone(), c);
    }
    Ok(p)
}

impl From<&WeightedHypersurface> for HypersurfaceJson {
    fn from(v: &WeightedHypersurface) -> Self {
        HypersurfaceJson {
            weights: v.weights().weights().to_vec(),
            degree: v.degree(),
            terms: terms_json(v.poly()),
        }
    }
}

impl TryFrom<&HypersurfaceJson> for WeightedHypersurface {
    type Error = Error;
    fn try_from(j: &HypersurfaceJson) -> Result<Self, Error> {
        let poly = poly_from_terms(j.weights.len(), &j.terms)?;
        Ok(WeightedHypersurface::from_parts(j.weights.clone(), j.degree, poly)?)
    }
}

/// Parses a hypersurface from JSON text.
pub fn hypersurface_from_json(text: &str) -> Result<WeightedHypersurface, Error> {
    let j: HypersurfaceJson = serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))?;
    WeightedHypersurface::try_from(&j)
}

/// Renders a hypersurface as JSON text.
pub fn hypersurface_to_json(v: &WeightedHypersurface) -> String {
    serde_json::to_string(&HypersurfaceJson::from(v)).expect("plain data always serializes")
}

/// Complete intersections share the term encoding, one list per equation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompleteIntersectionJson {
    pub factors: Vec<Vec<u64>>,
    pub multidegrees: Vec<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equations: Option<Vec<Vec<TermJson>>>,
}

impl From<&CompleteIntersection> for CompleteIntersectionJson {
    fn from(ci: &CompleteIntersection) -> Self {
        CompleteIntersectionJson {
            factors: ci.factors().iter().map(|w| w.weights().to_vec()).collect(),
            multidegrees: ci.multidegrees().to_vec(),
            equations: ci.equations().map(|eqs| eqs.iter().map(terms_json).collect()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let v = WeightedHypersurface::generic(vec![581, 41, 42, 498], 3486).unwrap();
        let text = hypersurface_to_json(&v);
        assert!(text.contains("\"coeff\":\"1/1\""));
        assert_eq!(hypersurface_from_json(&text).unwrap(), v);
    }

    #[test]
    fn rejects_bad_input() {
        let bad = r#"{"weights":[1,1],"degree":2,"terms":[{"exps":[2,0],"coeff":"x"}]}"#;
        assert!(matches!(hypersurface_from_json(bad), Err(Error::Input(_))));
        let inhomogeneous = r#"{"weights":[1,1],"degree":2,"terms":[{"exps":[1,0],"coeff":"1"}]}"#;
        assert!(matches!(hypersurface_from_json(inhomogeneous), Err(Error::Wps(_))));
    }
}
