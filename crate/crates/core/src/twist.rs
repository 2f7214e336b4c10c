//! The twist map and its complete-intersection generalization.
//!
//! Given `V1 = {x0^ℓ + p(x) = 0} ⊂ P(w0..wn)` and `V2 = {y0^ℓ + q(y) = 0} ⊂ P(v0..vm)`,
//! the rational map
//!
//! ```text
//! z_i = y0^(w_i/w0) x_i,   t_j = x0^(v_j/v0) y_j
//! ```
//!
//! sends `V1 × V2` onto `X = {p(z) - q(t) = 0} ⊂ P(v0 w1..v0 wn, w0 v1..w0 vm)`,
//! of degree `v0 w0 ℓ`, and is generically `ℓ : 1` when `gcd(w0, v0, ℓ) = 1`.
//! The map is never evaluated on fractional powers: correctness is checked
//! by exact polynomial identities in which `Y^w0 = y0` and `X^v0 = x0`.

use num_integer::Integer;
use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::poly::Poly;
use crate::wps::{
    build_fermat, count_monomials, is_quasismooth, CompleteIntersection, WeightSystem,
    WeightedHypersurface, WpsError,
};
use crate::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TwistError {
    #[error("factor {factor} is not of the shape x0^ℓ + p: {reason}")]
    Shape { factor: u8, reason: String },
    #[error("factor degrees give different exponents: {left} versus {right}")]
    DegreeMismatch { left: String, right: String },
    #[error("factor {0} is not quasismooth")]
    NotQuasismooth(u8),
    #[error("bad partition: {0}")]
    BadPartition(String),
    #[error("weight relation violated: {0}")]
    WeightRelationViolated(String),
    #[error(transparent)]
    Wps(#[from] WpsError),
}

/// Whether the induced map to the quotient of the first factor is a genuine fibration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FibrationStatus {
    /// `w0 > 1`: the projection is a fibration with constant modulus.
    Genuine,
    /// `w0 = 1`: a fibration only after birational modification.
    BirationalOnly,
}

impl FibrationStatus {
    pub fn for_distinguished_weight(w0: u64) -> Self {
        if w0 > 1 {
            FibrationStatus::Genuine
        } else {
            FibrationStatus::BirationalOnly
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            FibrationStatus::Genuine => "fibration with constant modulus",
            FibrationStatus::BirationalOnly => "fibration only after birational modification",
        }
    }
}

/// Splits `x0^e + p` into `e` and `p` (with `x0` dropped from the variables).
///
/// The exponent `e` is `deg / w0`; the pure power must have coefficient one
/// and no other term may involve `x0`.
pub fn split_distinguished(v: &WeightedHypersurface, factor: u8) -> Result<(u64, Poly), TwistError> {
    let shape = |reason: String| TwistError::Shape { factor, reason };
    let w0 = v.weights().weights()[0];
    let d = v.degree();
    if d % w0 != 0 {
        return Err(shape(format!("degree {d} is not a multiple of w0 = {w0}")));
    }
    let e = d / w0;
    let n = v.weights().len();
    let mut pure = vec![0u32; n];
    pure[0] = e as u32;
    if !v.poly().coeff(&pure).is_one() {
        return Err(shape(format!("x0^{e} must occur with coefficient 1")));
    }
    let mut rest = Poly::zero(n - 1);
    for (exps, c) in v.poly().terms() {
        if *exps == pure {
            continue;
        }
        if exps[0] != 0 {
            return Err(shape(format!("x0 occurs in the term {exps:?}")));
        }
        rest.add_term(exps[1..].to_vec(), c.clone());
    }
    Ok((e, rest))
}

/// A pair of factors of twist shape with a common exponent `ℓ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistInput {
    pub v1: WeightedHypersurface,
    pub v2: WeightedHypersurface,
    pub ell: u64,
}

impl TwistInput {
    /// Validates shapes, the common exponent `ℓ` and quasismoothness of both factors.
    pub fn new(v1: WeightedHypersurface, v2: WeightedHypersurface, ell: u64) -> Result<Self, TwistError> {
        let input = Self::unchecked(v1, v2, ell)?;
        if !is_quasismooth(&input.v1)? {
            return Err(TwistError::NotQuasismooth(1));
        }
        if !is_quasismooth(&input.v2)? {
            return Err(TwistError::NotQuasismooth(2));
        }
        Ok(input)
    }

    /// Infers `ℓ` from the first factor.
    pub fn from_factors(v1: WeightedHypersurface, v2: WeightedHypersurface) -> Result<Self, TwistError> {
        let (ell, _) = split_distinguished(&v1, 1)?;
        Self::new(v1, v2, ell)
    }

    /// Shape and degree checks only.
    pub fn unchecked(v1: WeightedHypersurface, v2: WeightedHypersurface, ell: u64) -> Result<Self, TwistError> {
        let w0 = v1.weights().weights()[0];
        let v0 = v2.weights().weights()[0];
        let (l1, r1) = (v1.degree() / w0, v1.degree() % w0);
        let (l2, r2) = (v2.degree() / v0, v2.degree() % v0);
        if r1 != 0 || r2 != 0 || l1 != l2 {
            return Err(TwistError::DegreeMismatch {
                left: format!("{}/{}", v1.degree(), w0),
                right: format!("{}/{}", v2.degree(), v0),
            });
        }
        if l1 != ell {
            return Err(TwistError::DegreeMismatch { left: format!("ℓ = {ell}"), right: format!("deg/w0 = {l1}") });
        }
        split_distinguished(&v1, 1)?;
        split_distinguished(&v2, 2)?;
        Ok(TwistInput { v1, v2, ell })
    }

    pub fn w(&self) -> &[u64] {
        self.v1.weights().weights()
    }

    pub fn v(&self) -> &[u64] {
        self.v2.weights().weights()
    }

    /// `p(x1..xn)` of the first factor.
    pub fn p(&self) -> Poly {
        split_distinguished(&self.v1, 1).expect("validated").1
    }

    /// `q(y1..ym)` of the second factor.
    pub fn q(&self) -> Poly {
        split_distinguished(&self.v2, 2).expect("validated").1
    }

    /// `v0 Σ_{i≥1} w_i + w0 Σ_{j≥1} v_j = v0 w0 ℓ`, the Calabi-Yau condition on the image.
    pub fn total_cy(&self) -> bool {
        let (w, v) = (self.w(), self.v());
        v[0] * w[1..].iter().sum::<u64>() + w[0] * v[1..].iter().sum::<u64>() == v[0] * w[0] * self.ell
    }

    /// `Σ v_j = ℓ v0`, the Calabi-Yau condition on the fiber.
    pub fn fiber_cy(&self) -> bool {
        self.v().iter().sum::<u64>() == self.ell * self.v()[0]
    }
}

/// Output of [`twist`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistResult {
    pub x: WeightedHypersurface,
    pub quotient_order: u64,
    /// `Some(ℓ)` when the map is generically `ℓ : 1`; `None` flags a shared factor.
    pub generically_finite_degree: Option<u64>,
    pub quotient: QuotientCheck,
    pub fibration: FibrationStatus,
    /// Locus where the map is undefined.
    pub indeterminacy: &'static str,
}

/// Result of [`quotient_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientCheck {
    pub gcd: u64,
    pub is_ell_to_one: bool,
}

/// `gcd(w0, v0, ℓ)` and whether it equals one.
pub fn quotient_check_weights(w0: u64, v0: u64, ell: u64) -> QuotientCheck {
    let gcd = w0.gcd(&v0).gcd(&ell);
    QuotientCheck { gcd, is_ell_to_one: gcd == 1 }
}

pub fn quotient_check(input: &TwistInput) -> QuotientCheck {
    quotient_check_weights(input.w()[0], input.v()[0], input.ell)
}

/// Image weights `(v0 w1, ..., v0 wn, w0 v1, ..., w0 vm)`.
pub fn image_weights(w: &[u64], v: &[u64]) -> Vec<u64> {
    w[1..].iter().map(|&wi| v[0] * wi).chain(v[1..].iter().map(|&vj| w[0] * vj)).collect()
}

/// The twist image `X = {p(z) - q(t) = 0}`; its weights are not normalized.
pub fn twist(input: &TwistInput) -> Result<TwistResult, TwistError> {
    let (w, v) = (input.w(), input.v());
    let (n, m) = (w.len() - 1, v.len() - 1);
    let weights = image_weights(w, v);
    let degree = v[0] * w[0] * input.ell;
    let first: Vec<usize> = (0..n).collect();
    let second: Vec<usize> = (n..n + m).collect();
    let poly = &input.p().embed(n + m, &first) - &input.q().embed(n + m, &second);
    let x = WeightedHypersurface::from_parts(weights, degree, poly)?;
    let quotient = quotient_check(input);
    Ok(TwistResult {
        x,
        quotient_order: input.ell,
        generically_finite_degree: quotient.is_ell_to_one.then_some(input.ell),
        quotient,
        fibration: FibrationStatus::for_distinguished_weight(w[0]),
        indeterminacy: "x0 = y0 = 0",
    })
}

/// Rewrites `Y^w0 → y0`, `X^v0 → x0` (formal roots of the distinguished coordinates).
fn reduce_roots(p: &Poly, big_y: usize, w0: u64, y0: usize, big_x: usize, v0: u64, x0: usize) -> Poly {
    let nv = p.nvars();
    p.reduce_power(big_y, w0 as u32, &Poly::var(nv, y0)).reduce_power(big_x, v0 as u32, &Poly::var(nv, x0))
}

/// Checks symbolically that the twist map lands in `X`.
///
/// In the ring `Q[x0..xn, y0..ym, Y, X]` substitute `z_i = Y^w_i x_i` and
/// `t_j = X^v_j y_j` into `p(z) - q(t)`, rewrite `Y^w0 → y0`, `X^v0 → x0`,
/// then `x0^ℓ → -p(x)` and `y0^ℓ → -q(y)`; the result must vanish.
pub fn verify_substitution(input: &TwistInput) -> bool {
    let (w, v) = (input.w(), input.v());
    let (n1, m1) = (w.len(), v.len());
    let nv = n1 + m1 + 2;
    let (big_y, big_x) = (n1 + m1, n1 + m1 + 1);
    let x = |i: usize| Poly::var(nv, i);
    let y = |j: usize| Poly::var(nv, n1 + j);
    let z_images: Vec<Poly> = (1..n1).map(|i| &Poly::var(nv, big_y).pow(w[i] as u32) * &x(i)).collect();
    let t_images: Vec<Poly> = (1..m1).map(|j| &Poly::var(nv, big_x).pow(v[j] as u32) * &y(j)).collect();
    let p = input.p();
    let q = input.q();
    let image = &p.substitute(&z_images) - &q.substitute(&t_images);
    let reduced = reduce_roots(&image, big_y, w[0], n1, big_x, v[0], 0);
    let p_x = p.embed(nv, &(1..n1).collect::<Vec<_>>());
    let q_y = q.embed(nv, &(n1 + 1..n1 + m1).collect::<Vec<_>>());
    let ell = input.ell as u32;
    reduced.reduce_power(0, ell, &(-&p_x)).reduce_power(n1, ell, &(-&q_y)).is_zero()
}

/// Report of [`cy_conditions`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyReport {
    /// `d = Σ k_i`.
    pub sufficient: bool,
    pub fiber_cy: Option<bool>,
    pub total_cy: Option<bool>,
    /// Number of monomials of degree `d - Σ k_i`, zero when that is negative.
    pub genus: u128,
    /// The sufficient condition fails but the geometric genus is one.
    pub exceptional_candidate: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fibration: Option<FibrationStatus>,
}

pub fn cy_conditions(x: &WeightedHypersurface, fibered_from: Option<&TwistInput>) -> CyReport {
    let ws = x.weights();
    let d = x.degree();
    let s = ws.sum();
    let sufficient = d == s;
    let genus = if d >= s { count_monomials(ws, d - s, None) } else { 0 };
    CyReport {
        sufficient,
        fiber_cy: fibered_from.map(TwistInput::fiber_cy),
        total_cy: fibered_from.map(TwistInput::total_cy),
        genus,
        exceptional_candidate: !sufficient && genus == 1,
        fibration: fibered_from.map(|t| FibrationStatus::for_distinguished_weight(t.w()[0])),
    }
}

/// Reorders variables: new variable `k` is old variable `perm[k]`.
pub fn permute(v: &WeightedHypersurface, perm: &[usize]) -> Result<WeightedHypersurface, WpsError> {
    let n = v.weights().len();
    assert_eq!(perm.len(), n);
    let weights: Vec<u64> = perm.iter().map(|&i| v.weights().weights()[i]).collect();
    let mut positions = vec![0; n];
    for (k, &i) in perm.iter().enumerate() {
        positions[i] = k;
    }
    WeightedHypersurface::from_parts(weights, v.degree(), v.poly().embed(n, &positions))
}

/// A chain of twist maps ending in a Fermat hypersurface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FermatTower {
    pub factors: Vec<WeightedHypersurface>,
    pub steps: Vec<TwistResult>,
    pub result: WeightedHypersurface,
    /// `d^(number of folds)`.
    pub group_order: u128,
}

/// Writes the Fermat hypersurface of degree `d` in `n` variables as an
/// iterated twist of smaller Fermat varieties, folding left to right.
///
/// The first factor has `n1 + 1` variables and the last `nλ + 1`. A middle
/// factor has `nk + 2`: one extra coordinate `u` whose pure power survives
/// into the image and becomes the distinguished coordinate of the next fold
/// (after flipping the overall sign, so the image is again `u^d + ...`).
pub fn fermat_partition(d: u64, n: usize, partition: &[usize]) -> Result<FermatTower, TwistError> {
    let bad = |m: String| Err(TwistError::BadPartition(m));
    if d < 2 {
        return bad(format!("degree {d} must be at least 2"));
    }
    if n < 4 {
        return bad(format!("need at least 4 variables, got {n}"));
    }
    if partition.is_empty() || partition.iter().any(|&k| k < 2) {
        return bad(format!("parts must be at least 2: {partition:?}"));
    }
    if partition.iter().sum::<usize>() != n {
        return bad(format!("parts {partition:?} do not sum to {n}"));
    }
    let fermat = |vars: usize| -> Result<WeightedHypersurface, TwistError> {
        let ws = WeightSystem::new(vec![1; vars])?;
        Ok(WeightedHypersurface::new(build_fermat(&ws, d)?))
    };
    if partition.len() == 1 {
        let f = fermat(n)?;
        return Ok(FermatTower { factors: vec![f.clone()], steps: vec![], result: f, group_order: 1 });
    }
    let last = partition.len() - 1;
    let factors: Vec<WeightedHypersurface> = partition
        .iter()
        .enumerate()
        .map(|(k, &nk)| fermat(if k == 0 || k == last { nk + 1 } else { nk + 2 }))
        .collect::<Result<_, _>>()?;
    let mut current = factors[0].clone();
    let mut steps = Vec::new();
    for (k, factor) in factors.iter().enumerate().skip(1) {
        let step = twist(&TwistInput::new(current.clone(), factor.clone(), d)?)?;
        current = step.x.clone();
        steps.push(step);
        if k != last {
            // The extra coordinate is the last one; move it to the front and flip the sign.
            let nv = current.weights().len();
            let perm: Vec<usize> = std::iter::once(nv - 1).chain(0..nv - 1).collect();
            let moved = permute(&current, &perm)?;
            let flipped = moved.poly().scale(&-Rational::one());
            current = WeightedHypersurface::from_parts(moved.weights().weights().to_vec(), d, flipped)?;
        }
    }
    let group_order = (d as u128).pow(steps.len() as u32);
    Ok(FermatTower { factors, steps, result: current, group_order })
}

impl FermatTower {
    /// The result is `Σ ±x_i^d` in ordinary projective space.
    pub fn is_fermat_up_to_signs(&self) -> bool {
        let ws = self.result.weights().weights();
        let d = self.result.degree() as u32;
        let n = ws.len();
        ws.iter().all(|&w| w == 1)
            && self.result.poly().len() == n
            && self.result.poly().terms().all(|(e, c)| {
                let nz: Vec<_> = e.iter().filter(|&&k| k != 0).collect();
                nz == [&d] && (c.is_one() || (-c).is_one())
            })
    }
}

/// Data for the generalized twist.
///
/// `V2 ⊂ P(1,1) × P(v0..vm)` is cut out by
/// `u0 y1 + u1 p11(y)` and `u0 (y0^μ + p20(y)) + u1 y1^(ν-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedTwistInput {
    /// `x0^μ + p(x)`.
    pub v1: WeightedHypersurface,
    pub v: WeightSystem,
    /// Weighted degree `v1`, in the variables `y0..ym` but free of `y0`.
    pub p11: Poly,
    /// Weighted degree `d - v1`, free of `y0`.
    pub p20: Poly,
    pub nu: u64,
}

/// Output of [`generalized_twist`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedTwistResult {
    pub x: CompleteIntersection,
    /// `V2` itself as a complete intersection in `P(1,1) × P(v)`.
    pub v2: CompleteIntersection,
    pub mu: u64,
    /// `gcd(μ, ν)`.
    pub quotient_order: u64,
    /// Both substitution identities hold.
    pub verified: bool,
}

impl GeneralizedTwistInput {
    fn check(&self) -> Result<(u64, Poly), TwistError> {
        let bad = |m: String| Err(TwistError::WeightRelationViolated(m));
        let v = self.v.weights();
        if v.len() < 2 {
            return bad("need at least two fiber weights".into());
        }
        let d: u64 = v.iter().sum();
        let (v0, v1) = (v[0], v[1]);
        if (d - v1) % v0 != 0 {
            return bad(format!("(d - v1)/v0 = {}/{v0} is not an integer", d - v1));
        }
        let mu = (d - v1) / v0;
        if v1 * (self.nu - 1) != v0 * mu {
            return bad(format!("v1(ν-1) = {} differs from v0 μ = {}", v1 * (self.nu - 1), v0 * mu));
        }
        let (e, p) = split_distinguished(&self.v1, 1)?;
        if e != mu {
            return bad(format!("the first factor has exponent {e}, the weights force μ = {mu}"));
        }
        for (name, poly, deg) in [("p11", &self.p11, v1), ("p20", &self.p20, d - v1)] {
            if poly.nvars() != v.len() || poly.degree_in(0) != 0 {
                return bad(format!("{name} must be a polynomial in y1..ym"));
            }
            if let Some((e, _)) = poly.terms().find(|(e, _)| self.v.degree_of(e) != deg) {
                return bad(format!("{name} term {e:?} does not have degree {deg}"));
            }
        }
        Ok((mu, p))
    }
}

/// Builds `X ⊂ P(1,1) × P(w1 v0..wn v0, w0 v1..w0 vm)` with equations
/// `u0 t1 + u1 p11(t)` and `u0 (p20(t) - p(z)) + u1 t1^(ν-1)`.
pub fn generalized_twist(input: &GeneralizedTwistInput) -> Result<GeneralizedTwistResult, TwistError> {
    let (mu, p) = input.check()?;
    let w = input.v1.weights().weights();
    let v = input.v.weights();
    let (n, m) = (w.len() - 1, v.len() - 1);
    let d: u64 = v.iter().sum();
    let (v1, w0) = (v[1], w[0]);
    let weights = image_weights(w, v);
    // Variables: u0, u1, z1..zn, t1..tm.
    let nv = 2 + n + m;
    let u = |k: usize| Poly::var(nv, k);
    let t1 = Poly::var(nv, 2 + n);
    let t_pos: Vec<usize> = std::iter::once(usize::MAX).chain(2 + n..2 + n + m).collect();
    let from_y = |poly: &Poly| -> Poly {
        let dropped = Poly::from_terms(m, poly.terms().map(|(e, c)| (e[1..].to_vec(), c.clone())));
        dropped.embed(nv, &t_pos[1..])
    };
    let p_z = p.embed(nv, &(2..2 + n).collect::<Vec<_>>());
    let eq1 = &(&u(0) * &t1) + &(&u(1) * &from_y(&input.p11));
    let eq2 = &(&u(0) * &(&from_y(&input.p20) - &p_z)) + &(&u(1) * &t1.pow((input.nu - 1) as u32));
    let x = CompleteIntersection::new(
        vec![WeightSystem::new(vec![1, 1])?, WeightSystem::new(weights)?],
        vec![vec![1, v1 * w0], vec![1, (d - v1) * w0]],
        Some(vec![eq1.clone(), eq2.clone()]),
    )?;
    let (p1, p2) = v2_equations(input, mu);
    let v2 = CompleteIntersection::new(
        vec![WeightSystem::new(vec![1, 1])?, input.v.clone()],
        vec![vec![1, v1], vec![1, d - v1]],
        Some(vec![p1, p2]),
    )?;
    let verified = verify_generalized(input, mu, &p, &eq1, &eq2);
    Ok(GeneralizedTwistResult { x, v2, mu, quotient_order: mu.gcd(&input.nu), verified })
}

/// `p1 = u0 y1 + u1 p11(y)`, `p2 = u0 (y0^μ + p20(y)) + u1 y1^(ν-1)` over `(u0, u1, y0..ym)`.
fn v2_equations(input: &GeneralizedTwistInput, mu: u64) -> (Poly, Poly) {
    let m1 = input.v.len();
    let nv = 2 + m1;
    let pos: Vec<usize> = (2..2 + m1).collect();
    let u = |k| Poly::var(nv, k);
    let y = |j: usize| Poly::var(nv, 2 + j);
    let p1 = &(&u(0) * &y(1)) + &(&u(1) * &input.p11.embed(nv, &pos));
    let inner = &y(0).pow(mu as u32) + &input.p20.embed(nv, &pos);
    let p2 = &(&u(0) * &inner) + &(&u(1) * &y(1).pow((input.nu - 1) as u32));
    (p1, p2)
}

/// The two substitution identities
/// `eq1(Φ) = X^v1 · p1` and `eq2(Φ) ≡ -p(x) · p2 (mod x0^μ + p)`.
fn verify_generalized(input: &GeneralizedTwistInput, mu: u64, p: &Poly, eq1: &Poly, eq2: &Poly) -> bool {
    let w = input.v1.weights().weights();
    let v = input.v.weights();
    let (n1, m1) = (w.len(), v.len());
    // Ring: x0..xn, u0, u1, y0..ym, Y, X.
    let nv = n1 + 2 + m1 + 2;
    let (ui, yi, big_y, big_x) = (n1, n1 + 2, n1 + 2 + m1, n1 + 3 + m1);
    let var = |k| Poly::var(nv, k);
    let mut images = vec![var(ui), var(ui + 1)];
    images.extend((1..n1).map(|i| &var(big_y).pow(w[i] as u32) * &var(i)));
    images.extend((1..m1).map(|j| &var(big_x).pow(v[j] as u32) * &var(yi + j)));
    let reduce = |q: &Poly| reduce_roots(q, big_y, w[0], yi, big_x, v[0], 0);
    let (p1, p2) = v2_equations(input, mu);
    let lift: Vec<usize> = (ui..ui + 2 + m1).collect();
    let (p1, p2) = (p1.embed(nv, &lift), p2.embed(nv, &lift));
    let p_x = p.embed(nv, &(1..n1).collect::<Vec<_>>());
    let lhs1 = reduce(&eq1.substitute(&images));
    let rhs1 = reduce(&(&var(big_x).pow(v[1] as u32) * &p1));
    let lhs2 = reduce(&eq2.substitute(&images)).reduce_power(0, mu as u32, &(-&p_x));
    let rhs2 = -&(&p_x * &p2);
    lhs1 == rhs1 && lhs2 == rhs2 && !eq1.is_zero() && !eq2.is_zero()
}
