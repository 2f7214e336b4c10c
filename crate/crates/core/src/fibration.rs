//! Singular fibers of constant-modulus fibrations.
//!
//! The quotient `(C × F)/μ_ℓ → C/μ_ℓ` has singular fibers exactly over the
//! points of `C` with nontrivial stabilizer. At such a point the stabilizer
//! `μ_k` acts on a local coordinate of `C` by `e^(2πi a/k)` and on the
//! holomorphic form of the fiber by `e^(2πi/k)`; the fiber type is fixed by
//! the exponent `α = (a⁻¹ mod k)/k`. Kodaira's dictionary then gives the
//! Euler number and ADE summand.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::arith::{format_pq, int, mod_inverse, ratio};
use crate::poly::Poly;
use crate::twist::split_distinguished;
use crate::wps::{normalize, WeightSystem, WeightedHypersurface, WeightedPolynomial, WpsError};
use crate::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FibrationError {
    #[error("no balanced fiber assignment: Σα = {alpha_sum}, Σe = {euler_sum} ({detail})")]
    UnbalancedFibration { alpha_sum: String, euler_sum: i64, detail: String },
    #[error("unsafe elimination: {reason}")]
    UnsafeElimination { reason: String, naive: Option<(Vec<u64>, u64)> },
    #[error("no integral divisor class solves adjunction: {0}")]
    NoIntegralClass(String),
    #[error("exponent {0} is not allowed; Milnor exponents are at least 1")]
    InvalidExponent(u32),
    #[error("the curve is not of the shape x0^ℓ + p(x1, x2): {0}")]
    BadCurve(String),
    #[error(transparent)]
    Wps(#[from] WpsError),
}

/// Lattice summand contributed by a fiber's non-identity components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum AdeSummand {
    A1,
    A2,
    D4,
    E6,
    E7,
    E8,
}

impl fmt::Display for AdeSummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The singular fibers that occur in constant-modulus elliptic fibrations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum KodairaFiber {
    II,
    III,
    IV,
    I0Star,
    IVStar,
    IIIStar,
    IIStar,
}

impl KodairaFiber {
    pub const ALL: [KodairaFiber; 7] = [
        KodairaFiber::II,
        KodairaFiber::III,
        KodairaFiber::IV,
        KodairaFiber::I0Star,
        KodairaFiber::IVStar,
        KodairaFiber::IIIStar,
        KodairaFiber::IIStar,
    ];

    /// `(α numerator, α denominator, Euler number)`.
    const fn data(self) -> (i64, i64, i64) {
        match self {
            KodairaFiber::II => (1, 6, 2),
            KodairaFiber::III => (1, 4, 3),
            KodairaFiber::IV => (1, 3, 4),
            KodairaFiber::I0Star => (1, 2, 6),
            KodairaFiber::IVStar => (2, 3, 8),
            KodairaFiber::IIIStar => (3, 4, 9),
            KodairaFiber::IIStar => (5, 6, 10),
        }
    }

    pub fn euler(self) -> i64 {
        self.data().2
    }

    pub fn alpha(self) -> Rational {
        let (n, d, _) = self.data();
        ratio(n, d)
    }

    pub fn ade(self) -> Option<AdeSummand> {
        match self {
            KodairaFiber::II => None,
            KodairaFiber::III => Some(AdeSummand::A1),
            KodairaFiber::IV => Some(AdeSummand::A2),
            KodairaFiber::I0Star => Some(AdeSummand::D4),
            KodairaFiber::IVStar => Some(AdeSummand::E6),
            KodairaFiber::IIIStar => Some(AdeSummand::E7),
            KodairaFiber::IIStar => Some(AdeSummand::E8),
        }
    }

    /// The fiber with exponent `1 - α` (and Euler number `12 - e`).
    pub fn dual(self) -> KodairaFiber {
        match self {
            KodairaFiber::II => KodairaFiber::IIStar,
            KodairaFiber::III => KodairaFiber::IIIStar,
            KodairaFiber::IV => KodairaFiber::IVStar,
            KodairaFiber::I0Star => KodairaFiber::I0Star,
            KodairaFiber::IVStar => KodairaFiber::IV,
            KodairaFiber::IIIStar => KodairaFiber::III,
            KodairaFiber::IIStar => KodairaFiber::II,
        }
    }

    pub fn from_alpha(alpha: &Rational) -> Option<KodairaFiber> {
        Self::ALL.into_iter().find(|f| &f.alpha() == alpha)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            KodairaFiber::II => "II",
            KodairaFiber::III => "III",
            KodairaFiber::IV => "IV",
            KodairaFiber::I0Star => "I0*",
            KodairaFiber::IVStar => "IV*",
            KodairaFiber::IIIStar => "III*",
            KodairaFiber::IIStar => "II*",
        }
    }

    pub fn from_symbol(s: &str) -> Option<KodairaFiber> {
        Self::ALL.into_iter().find(|f| f.symbol() == s)
    }
}

impl fmt::Display for KodairaFiber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Where a class of fixed points lies on the curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum FixedLocus {
    /// Zeros of `p` with `x0 = 0` and `x1 x2 ≠ 0`.
    ZerosOfP,
    /// The coordinate point where only `x_index` is nonzero.
    CoordinatePoint { index: usize },
    /// Points with `x_index = 0` and `x0 ≠ 0`.
    Axis { index: usize },
}

/// A set of fixed points sharing stabilizer and rotation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedPointClass {
    pub locus: FixedLocus,
    /// Number of fibers, i.e. of `μ_ℓ`-orbits.
    pub fibers: usize,
    /// Stabilizer order `k`.
    pub stabilizer: u64,
    /// Rotation `a` of the local coordinate, modulo `k`.
    pub rotation: u64,
}

impl FixedPointClass {
    /// `α = (a⁻¹ mod k)/k`, or `None` when `a` is not a unit modulo `k`.
    pub fn alpha(&self) -> Option<Rational> {
        let k = self.stabilizer as i64;
        let inv = mod_inverse(self.rotation as i64, k)?;
        Some(ratio(inv, k))
    }
}

fn monomial_gcd(p: &Poly) -> Vec<u32> {
    let mut g: Option<Vec<u32>> = None;
    for (e, _) in p.terms() {
        g = Some(match g {
            None => e.clone(),
            Some(g) => g.iter().zip(e).map(|(a, b)| *a.min(b)).collect(),
        });
    }
    g.unwrap_or_default()
}

/// Fixed points of `μ_ℓ` on `C = {x0^ℓ + p(x1, x2) = 0} ⊂ P(w0, w1, w2)`.
pub fn fixed_point_classes(curve: &WeightedHypersurface, ell: u64) -> Result<Vec<FixedPointClass>, FibrationError> {
    let w = curve.weights().weights();
    if w.len() != 3 {
        return Err(FibrationError::BadCurve(format!("expected three weights, got {}", w.len())));
    }
    let (e, p) = split_distinguished(curve, 1).map_err(|err| FibrationError::BadCurve(err.to_string()))?;
    if e != ell {
        return Err(FibrationError::BadCurve(format!("x0 occurs with exponent {e}, not ℓ = {ell}")));
    }
    let (w0, w1, w2) = (w[0], w[1], w[2]);
    let d = curve.degree();
    let mut classes = Vec::new();

    // x0 = 0: every point is fixed by all of μ_ℓ and x0 is a local coordinate.
    let g = monomial_gcd(&p);
    let reduced_degree = d - w1 * u64::from(g[0]) - w2 * u64::from(g[1]);
    if reduced_degree > 0 {
        let zeros = reduced_degree * w1.gcd(&w2) / (w1 * w2);
        if zeros > 0 {
            classes.push(FixedPointClass { locus: FixedLocus::ZerosOfP, fibers: zeros as usize, stabilizer: ell, rotation: 1 });
        }
    }
    for (idx, other, wi) in [(1usize, 1usize, w1), (2, 0, w2)] {
        // The coordinate point of x_idx lies on C when the other variable divides p; it does so once.
        if g[other] == 1 {
            classes.push(FixedPointClass {
                locus: FixedLocus::CoordinatePoint { index: idx },
                fibers: 1,
                stabilizer: ell,
                rotation: wi % ell,
            });
        } else if g[other] > 1 {
            return Err(FibrationError::BadCurve(format!("C is singular at the coordinate point of x{idx}")));
        }
    }

    // x_i = 0 with x0 ≠ 0: only when p restricts to a pure power of the other variable.
    for (i, j) in [(1usize, 2usize), (2, 1)] {
        let mut keep = [true, true];
        keep[i - 1] = false;
        let r = p.restrict_to_support(&keep);
        if r.len() != 1 {
            continue;
        }
        let (wi, wj) = (w[i], w[j]);
        let points = d * w0.gcd(&wj) / (w0 * wj);
        let k = ell.gcd(&wj);
        if k < 2 || points == 0 {
            continue;
        }
        let orbit = ell / k;
        let inv_w0 = mod_inverse(w0 as i64, k as i64).ok_or_else(|| FibrationError::UnbalancedFibration {
            alpha_sum: "?".into(),
            euler_sum: 0,
            detail: format!("w0 = {w0} is not a unit modulo the stabilizer order {k}"),
        })?;
        let a = (-(wi as i64) * inv_w0).rem_euclid(k as i64) as u64;
        classes.push(FixedPointClass {
            locus: FixedLocus::Axis { index: i },
            fibers: (points / orbit) as usize,
            stabilizer: k,
            rotation: a,
        });
    }
    Ok(classes)
}

/// Number of singular fibers: the number of `μ_ℓ`-orbits of fixed points.
pub fn discriminant_count(curve: &WeightedHypersurface, ell: u64) -> Result<usize, FibrationError> {
    Ok(fixed_point_classes(curve, ell)?.iter().map(|c| c.fibers).sum())
}

/// Output of [`classify_elliptic_fibers`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FibrationReport {
    pub base: WeightSystem,
    pub ell: u64,
    pub discriminant_count: usize,
    /// Merged multiplicities in Kodaira order.
    pub fibers: Vec<(KodairaFiber, usize)>,
    pub classes: Vec<FixedPointClass>,
    #[serde(serialize_with = "serialize_rational")]
    pub alpha_sum: Rational,
    pub euler_sum: i64,
    /// Euler number of the total space; the generic fiber contributes nothing.
    pub total_euler: i64,
}

fn serialize_rational<S: serde::Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_pq(q))
}

impl FibrationReport {
    /// Renders the fiber list as `"6×III, 1×I0*"`.
    pub fn fiber_list(&self) -> String {
        format_fibers(&self.fibers)
    }
}

pub fn format_fibers(fibers: &[(KodairaFiber, usize)]) -> String {
    fibers.iter().map(|(f, n)| format!("{n}×{f}")).collect::<Vec<_>>().join(", ")
}

/// Classifies the singular fibers of `(C × E)/μ_ℓ → C/μ_ℓ`.
///
/// Every fixed point yields one fiber whose type is read off its exponent
/// `α`. The result must satisfy `Σα = 2`, the necessary condition for a
/// Calabi-Yau total space; otherwise `UnbalancedFibration` is returned.
pub fn classify_elliptic_fibers(
    curve: &WeightedHypersurface,
    elliptic: &WeightSystem,
    ell: u64,
) -> Result<FibrationReport, FibrationError> {
    let v = elliptic.weights();
    if v.len() != 3 || v.iter().sum::<u64>() != ell * v[0] {
        return Err(FibrationError::BadCurve(format!("{elliptic} is not an elliptic curve of degree {}", ell * v[0])));
    }
    let classes = fixed_point_classes(curve, ell)?;
    let mut merged: BTreeMap<KodairaFiber, usize> = BTreeMap::new();
    let mut alpha_sum = Rational::zero();
    let mut euler_sum = 0i64;
    let mut problems = Vec::new();
    for c in &classes {
        match c.alpha().as_ref().and_then(KodairaFiber::from_alpha) {
            Some(f) => {
                *merged.entry(f).or_insert(0) += c.fibers;
                alpha_sum += f.alpha() * int(c.fibers as i64);
                euler_sum += f.euler() * c.fibers as i64;
            }
            None => problems.push(format!("{:?}: stabilizer {}, rotation {}", c.locus, c.stabilizer, c.rotation)),
        }
    }
    if !problems.is_empty() || alpha_sum != int(2) {
        let detail = if problems.is_empty() { "exponent sum differs from 2".to_string() } else { problems.join("; ") };
        return Err(FibrationError::UnbalancedFibration { alpha_sum: format_pq(&alpha_sum), euler_sum, detail });
    }
    Ok(FibrationReport {
        base: curve.weights().clone(),
        ell,
        discriminant_count: classes.iter().map(|c| c.fibers).sum(),
        fibers: merged.into_iter().collect(),
        classes,
        alpha_sum,
        euler_sum,
        total_euler: euler_sum,
    })
}

/// Result of [`alpha_necessary_condition`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaCheck {
    pub sum: Rational,
    pub is_cy_candidate: bool,
}

/// `Σ α_i`, and whether it equals 2.
pub fn alpha_necessary_condition<I: IntoIterator<Item = Rational>>(alphas: I) -> AlphaCheck {
    let sum: Rational = alphas.into_iter().fold(Rational::zero(), |acc, a| acc + a);
    let is_cy_candidate = sum == int(2);
    AlphaCheck { sum, is_cy_candidate }
}

/// ADE summands of the fibers plus the hyperbolic plane from section and fiber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PicardLattice {
    pub summands: Vec<(AdeSummand, usize)>,
}

impl PicardLattice {
    pub fn rank(&self) -> usize {
        let r = |s: AdeSummand| match s {
            AdeSummand::A1 => 1,
            AdeSummand::A2 => 2,
            AdeSummand::D4 => 4,
            AdeSummand::E6 => 6,
            AdeSummand::E7 => 7,
            AdeSummand::E8 => 8,
        };
        2 + self.summands.iter().map(|&(s, n)| r(s) * n).sum::<usize>()
    }
}

impl fmt::Display for PicardLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (s, n) in &self.summands {
            if *n == 1 {
                write!(f, "{s} ⊕ ")?;
            } else {
                write!(f, "{s}^{n} ⊕ ")?;
            }
        }
        write!(f, "H")
    }
}

pub fn picard_summands(fibers: &[(KodairaFiber, usize)]) -> PicardLattice {
    let mut m: BTreeMap<AdeSummand, usize> = BTreeMap::new();
    for &(f, n) in fibers {
        if let Some(s) = f.ade() {
            if n > 0 {
                *m.entry(s).or_insert(0) += n;
            }
        }
    }
    PicardLattice { summands: m.into_iter().collect() }
}

/// `Π (m_j - 1)`, the Milnor number of `Σ y_j^(m_j)`.
pub fn milnor_number(exponents: &[u32]) -> Result<u64, FibrationError> {
    exponents.iter().try_fold(1u64, |acc, &m| {
        if m == 0 {
            Err(FibrationError::InvalidExponent(m))
        } else {
            Ok(acc * u64::from(m - 1))
        }
    })
}

/// A degenerate K3 fiber `q(y1..ym) = 0` of Fermat type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct K3FiberDatum {
    pub fiber_exponents: Vec<u32>,
    pub milnor: u64,
    /// `24 - μ`.
    pub euler: i64,
}

impl K3FiberDatum {
    pub fn new(fiber_exponents: Vec<u32>) -> Result<Self, FibrationError> {
        let milnor = milnor_number(&fiber_exponents)?;
        Ok(K3FiberDatum { fiber_exponents, milnor, euler: 24 - milnor as i64 })
    }

    /// Exponents of `q` for a Fermat K3 `y0^ℓ + Σ y_j^(ℓ v0 / v_j)`.
    pub fn from_fermat_weights(v: &[u64], ell: u64) -> Result<Self, FibrationError> {
        let d = ell * v[0];
        let exps = v[1..].iter().map(|&vj| (d / vj) as u32).collect();
        Self::new(exps)
    }
}

/// Result of [`fibration_euler`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FibrationEuler {
    pub value: i64,
    /// The open bound `48 - 24N < χ < 48`, checked when the generic fiber is a K3 and `N > 0`.
    pub bound: Option<EulerBound>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EulerBound {
    pub lower: i64,
    pub upper: i64,
    pub holds: bool,
}

/// The open interval `(48 - 24N, 48)` and whether `chi` lies in it.
pub fn k3_euler_bound(n: u64, chi: i64) -> EulerBound {
    let lower = 48 - 24 * n as i64;
    EulerBound { lower, upper: 48, holds: lower < chi && chi < 48 }
}

/// `(e(base) - N)·e(generic) + N·e(singular)`.
pub fn fibration_euler(n: u64, fiber_euler: i64, generic_euler: i64, base_euler: i64) -> FibrationEuler {
    let value = (base_euler - n as i64) * generic_euler + n as i64 * fiber_euler;
    let bound = (generic_euler == 24 && n > 0).then(|| k3_euler_bound(n, value));
    FibrationEuler { value, bound }
}

/// A pencil `z_elim^elim_exp = c · z_keep^keep_exp`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pencil {
    pub keep: usize,
    pub keep_exp: u32,
    pub eliminate: usize,
    pub elim_exp: u32,
    pub parameter: Rational,
}

/// Intersects `X` with a pencil member and eliminates one coordinate.
///
/// Safe only when the eliminated coordinate occurs linearly and the kept
/// coordinate has weight one; otherwise the naive equation describes a
/// quotient or a cover of the fiber, and `UnsafeElimination` reports it.
pub fn extract_fiber(x: &WeightedHypersurface, pencil: &Pencil) -> Result<WeightedHypersurface, FibrationError> {
    let w = x.weights().weights();
    let (k, e) = (pencil.keep, pencil.eliminate);
    if k == e || k >= w.len() || e >= w.len() {
        return Err(FibrationError::BadCurve("pencil coordinates must be two distinct variables".into()));
    }
    if u64::from(pencil.keep_exp) * w[k] != u64::from(pencil.elim_exp) * w[e] || pencil.elim_exp == 0 {
        return Err(FibrationError::BadCurve("pencil is not weighted homogeneous".into()));
    }
    let naive = naive_elimination(x, pencil);
    let reason = if pencil.elim_exp != 1 {
        Some(format!(
            "x{e} occurs with exponent {} in the pencil; the result is a quotient of the fiber",
            pencil.elim_exp
        ))
    } else if w[k] != 1 {
        Some(format!("the kept coordinate x{k} has weight {}; the result is a cover of the fiber", w[k]))
    } else {
        None
    };
    match (reason, naive) {
        (None, Some(Ok(v))) => Ok(v),
        (None, Some(Err(err))) => Err(err),
        (None, None) => unreachable!("linear elimination always substitutes"),
        (Some(reason), naive) => Err(FibrationError::UnsafeElimination {
            reason,
            naive: naive.and_then(Result::ok).map(|v| (v.weights().weights().to_vec(), v.degree())),
        }),
    }
}

/// Substitutes `z_elim^elim_exp → c z_keep^keep_exp` and normalizes; `None` if some power of `z_elim` is not a multiple.
fn naive_elimination(x: &WeightedHypersurface, pencil: &Pencil) -> Option<Result<WeightedHypersurface, FibrationError>> {
    let w = x.weights().weights();
    let n = w.len();
    let e = pencil.eliminate;
    let mut out = Poly::zero(n - 1);
    for (exps, c) in x.poly().terms() {
        if exps[e] % pencil.elim_exp != 0 {
            return None;
        }
        let r = exps[e] / pencil.elim_exp;
        let mut f = exps.clone();
        f[e] = 0;
        f[pencil.keep] += r * pencil.keep_exp;
        let coeff = c * num_traits::pow(pencil.parameter.clone(), r as usize);
        f.remove(e);
        out.add_term(f, coeff);
    }
    let weights: Vec<u64> = (0..n).filter(|&i| i != e).map(|i| w[i]).collect();
    Some((|| {
        let ws = WeightSystem::new(weights)?;
        let wp = WeightedPolynomial::new(ws.clone(), x.degree(), out)?;
        let norm = normalize(&ws, x.degree(), Some(&wp))?;
        Ok(WeightedHypersurface::new(norm.polynomial.expect("polynomial supplied")))
    })())
}

/// A divisor class `a C0 + b F` on the Hirzebruch surface `F_n`.
///
/// `C0² = n`, `C0·F = 1`, `F² = 0`; the negative section is `C∞ = C0 - nF`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HirzebruchClass {
    pub n: i64,
    pub a: i64,
    pub b: i64,
}

impl HirzebruchClass {
    pub fn new(n: i64, a: i64, b: i64) -> Self {
        HirzebruchClass { n, a, b }
    }

    /// `a C∞ + b F`.
    pub fn from_c_infinity(n: i64, a: i64, b: i64) -> Self {
        HirzebruchClass { n, a, b: b - a * n }
    }

    /// Coefficients in the `(C∞, F)` basis.
    pub fn c_infinity_coeffs(&self) -> (i64, i64) {
        (self.a, self.b + self.a * self.n)
    }

    pub fn dot(&self, other: &HirzebruchClass) -> i64 {
        assert_eq!(self.n, other.n, "classes on different surfaces");
        self.a * other.a * self.n + self.a * other.b + self.b * other.a
    }

    pub fn scale(&self, k: i64) -> Self {
        HirzebruchClass { n: self.n, a: k * self.a, b: k * self.b }
    }

    pub fn add(&self, other: &HirzebruchClass) -> Self {
        assert_eq!(self.n, other.n);
        HirzebruchClass { n: self.n, a: self.a + other.a, b: self.b + other.b }
    }

    /// `c1 = 2C0 - (n - 2)F`.
    pub fn c1(n: i64) -> Self {
        HirzebruchClass { n, a: 2, b: -(n - 2) }
    }

    pub fn canonical(n: i64) -> Self {
        Self::c1(n).scale(-1)
    }

    pub fn c0(n: i64) -> Self {
        HirzebruchClass { n, a: 1, b: 0 }
    }

    pub fn fiber(n: i64) -> Self {
        HirzebruchClass { n, a: 0, b: 1 }
    }

    pub fn c_infinity(n: i64) -> Self {
        HirzebruchClass { n, a: 1, b: -n }
    }
}

impl fmt::Display for HirzebruchClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.c_infinity_coeffs();
        let sign = if b < 0 { '-' } else { '+' };
        write!(f, "{a}C∞ {sign} {}F", b.abs())
    }
}

/// A `k`-fold cyclic cover of `P¹`, totally branched at `B` points, embedded in `F_n` as a multisection.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BranchedCover {
    pub degree: i64,
    pub branch_points: i64,
    pub n: i64,
}

/// Result of [`hirzebruch_discriminant`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscriminantReport {
    pub cover_euler: i64,
    pub genus: i64,
    pub class: HirzebruchClass,
    pub delta: HirzebruchClass,
    pub minus_12k: HirzebruchClass,
    pub matches: bool,
}

/// Euler number, class and discriminant of a cover curve `Σ ⊂ F_n`.
///
/// `e(Σ) = 2k - B(k - 1)`; the class `Σ = k C0 + b F` solves adjunction
/// `2g - 2 = Σ·(Σ + K)`; the discriminant is
/// `Δ = e(curve fiber)·Σ + e(fiber over C∞)·C∞` and is compared with `-12K`.
pub fn hirzebruch_discriminant(
    cover: BranchedCover,
    curve_fiber: KodairaFiber,
    infinity_fiber: KodairaFiber,
) -> Result<DiscriminantReport, FibrationError> {
    let BranchedCover { degree: k, branch_points: big_b, n } = cover;
    if k < 1 || big_b < 0 {
        return Err(FibrationError::NoIntegralClass(format!("cover degree {k}, branch points {big_b}")));
    }
    let cover_euler = 2 * k - big_b * (k - 1);
    if cover_euler % 2 != 0 || cover_euler > 2 {
        return Err(FibrationError::NoIntegralClass(format!("Euler number {cover_euler} is not that of a curve")));
    }
    let genus = (2 - cover_euler) / 2;
    let a = k;
    let b = if a == 1 {
        if genus != 0 {
            return Err(FibrationError::NoIntegralClass("a section has genus 0".into()));
        }
        0
    } else {
        let num = 2 * genus - 2 - a * n * (a - 1) + 2 * a;
        let den = 2 * (a - 1);
        if num % den != 0 {
            return Err(FibrationError::NoIntegralClass(format!("b = {num}/{den}")));
        }
        num / den
    };
    let class = HirzebruchClass::new(n, a, b);
    debug_assert_eq!(2 * genus - 2, class.dot(&class.add(&HirzebruchClass::canonical(n))));
    let delta = class.scale(curve_fiber.euler()).add(&HirzebruchClass::c_infinity(n).scale(infinity_fiber.euler()));
    let minus_12k = HirzebruchClass::canonical(n).scale(-12);
    Ok(DiscriminantReport { cover_euler, genus, class, delta, minus_12k, matches: delta == minus_12k })
}
