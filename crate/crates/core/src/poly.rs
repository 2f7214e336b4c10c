//! Sparse multivariate polynomials over the rationals.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors, so iteration order
//! and equality are canonical. Zero coefficients are never stored.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::Rational;

/// A polynomial in a fixed number of variables with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl Poly {
    /// The zero polynomial in `nvars` variables.
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    /// The constant `c`.
    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(vec![0; nvars], c)
    }

    /// The single term `c·x^exps`.
    pub fn term(exps: Vec<u32>, c: Rational) -> Self {
        let mut p = Poly::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    /// The monomial `x^exps` with coefficient one.
    pub fn monomial(exps: Vec<u32>) -> Self {
        Self::term(exps, Rational::one())
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e)
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging repeats.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Poly::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length must equal nvars");
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (lexicographic exponent) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    /// Coefficient of `x^exps`, zero if absent.
    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `c·x^exps` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect() }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::constant(self.nvars, Rational::one());
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Partial derivative with respect to `x_i`.
    pub fn derivative(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut d = e.clone();
            d[i] -= 1;
            out.add_term(d, c * Rational::from_integer(e[i].into()));
        }
        out
    }

    /// Sets every variable outside `keep` to zero.
    pub fn restrict_to_support(&self, keep: &[bool]) -> Poly {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.iter().zip(keep).all(|(&x, &k)| k || x == 0))
            .map(|(e, c)| (e.clone(), c.clone()));
        Poly { nvars: self.nvars, terms: terms.collect() }
    }

    /// Substitutes `x_i ↦ images[i]`; every image lives in the same target ring.
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.nvars, "one image per variable");
        let target = images.first().map_or(0, Poly::nvars);
        let mut out = Poly::zero(target);
        let mut cache: BTreeMap<(usize, u32), Poly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let p = cache.entry((i, k)).or_insert_with(|| images[i].pow(k));
                t = &t * p;
            }
            out = &out + &t;
        }
        out
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                t *= num_traits::pow(x.clone(), k as usize);
            }
            acc += t;
        }
        acc
    }

    /// Rewrites with the rule `x_var^power → replacement` until no term has
    /// `x_var`-degree `≥ power`.
    ///
    /// The replacement must have `x_var`-degree below `power`, which keeps the
    /// rewriting terminating.
    pub fn reduce_power(&self, var: usize, power: u32, replacement: &Poly) -> Poly {
        assert!(power > 0);
        assert!(
            replacement.terms.keys().all(|e| e[var] < power),
            "replacement must be reduced in the rewritten variable"
        );
        let mut current = self.clone();
        loop {
            let mut done = Poly::zero(self.nvars);
            let mut pending = Poly::zero(self.nvars);
            for (e, c) in &current.terms {
                if e[var] < power {
                    done.add_term(e.clone(), c.clone());
                } else {
                    let mut rest = e.clone();
                    rest[var] -= power;
                    let t = Poly::term(rest, c.clone());
                    pending = &pending + &(&t * replacement);
                }
            }
            if pending.is_zero() {
                return done;
            }
            current = &done + &pending;
        }
    }

    /// Embeds into a ring with `nvars` variables, placing variable `i` at `positions[i]`.
    pub fn embed(&self, nvars: usize, positions: &[usize]) -> Poly {
        assert_eq!(positions.len(), self.nvars);
        let mut out = Poly::zero(nvars);
        for (e, c) in &self.terms {
            let mut f = vec![0; nvars];
            for (&k, &p) in e.iter().zip(positions) {
                f[p] += k;
            }
            out.add_term(f, c.clone());
        }
        out
    }

    /// Highest power of `x_i` occurring.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    /// Variables that occur in at least one term.
    pub fn support(&self) -> Vec<bool> {
        let mut s = vec![false; self.nvars];
        for e in self.terms.keys() {
            for (flag, &k) in s.iter_mut().zip(e) {
                *flag |= k > 0;
            }
        }
        s
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Poly::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let e = a.iter().zip(b).map(|(i, j)| i + j).collect();
                out.add_term(e, x * y);
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let is_const = e.iter().all(|&k| k == 0);
            if !abs.is_one() || is_const {
                write!(f, "{abs}")?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            let mut first = true;
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "x{i}")?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

/// Dense univariate polynomial helpers, used for torus-zero tests on two-variable strata.
pub(crate) mod univariate {
    use num_traits::{One, Zero};

    use crate::Rational;

    /// Coefficients from constant term upward, with trailing zeros trimmed.
    pub type Dense = Vec<Rational>;

    pub fn trim(mut p: Dense) -> Dense {
        while p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
        p
    }

    fn rem(a: &Dense, b: &Dense) -> Dense {
        let mut r = a.clone();
        let lead = b.last().expect("divisor is nonzero").clone();
        while r.len() >= b.len() && !r.is_empty() {
            let shift = r.len() - b.len();
            let q = r.last().unwrap() / &lead;
            for (i, c) in b.iter().enumerate() {
                r[shift + i] -= &q * c;
            }
            r = trim(r);
        }
        r
    }

    /// Monic greatest common divisor; empty when both inputs are zero.
    pub fn gcd(a: &Dense, b: &Dense) -> Dense {
        let (mut x, mut y) = (trim(a.clone()), trim(b.clone()));
        while !y.is_empty() {
            let r = rem(&x, &y);
            x = y;
            y = r;
        }
        if let Some(l) = x.last().cloned() {
            for c in &mut x {
                *c = &*c / &l;
            }
        }
        debug_assert!(x.last().map_or(true, One::is_one));
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn x(i: usize) -> Poly {
        Poly::var(3, i)
    }

    #[test]
    fn ring_operations() {
        let p = &x(0) + &x(1);
        let sq = &p * &p;
        assert_eq!(sq.len(), 3);
        assert_eq!(sq.coeff(&[1, 1, 0]), int(2));
        assert!((&sq - &sq).is_zero());
        assert_eq!(p.pow(3).coeff(&[2, 1, 0]), int(3));
    }

    #[test]
    fn derivative_and_restriction() {
        let p = &x(0).pow(3) + &(&x(1) * &x(2));
        assert_eq!(p.derivative(0), Poly::term(vec![2, 0, 0], int(3)));
        let r = p.restrict_to_support(&[true, true, false]);
        assert_eq!(r, x(0).pow(3));
    }

    #[test]
    fn substitution_and_reduction() {
        // x0^2 with x0 -> x1 + x2, then rewrite x1^2 -> -x2^2.
        let p = x(0).pow(2);
        let s = p.substitute(&[&x(1) + &x(2), x(1), x(2)]);
        let r = s.reduce_power(1, 2, &(-&x(2).pow(2)));
        assert_eq!(r, Poly::term(vec![0, 1, 1], int(2)));
    }

    #[test]
    fn embedding_and_eval() {
        let p = Poly::from_terms(2, [(vec![2, 1], int(3))]);
        let e = p.embed(3, &[2, 0]);
        assert_eq!(e.coeff(&[1, 0, 2]), int(3));
        assert_eq!(e.eval(&[int(2), int(5), int(1)]), int(6));
    }

    #[test]
    fn display() {
        let p = &(&x(0).pow(2) - &x(1)) + &Poly::constant(3, int(4));
        assert_eq!(p.to_string(), "x0^2 - x1 + 4");
    }

    #[test]
    fn univariate_gcd() {
        use univariate::gcd;
        // (s - 1)(s + 2) and (s - 1)(s - 3) share s - 1.
        let a = vec![int(-2), int(1), int(1)];
        let b = vec![int(3), int(-4), int(1)];
        assert_eq!(gcd(&a, &b), vec![int(-1), int(1)]);
        assert_eq!(gcd(&a, &vec![int(5)]), vec![int(1)]);
    }
}
