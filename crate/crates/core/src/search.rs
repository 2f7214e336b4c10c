//! Bounded enumeration of twist-map tables.
//!
//! A base weight system `(w0, w1, ..)` with `w1 + .. = w0` is paired with a
//! fiber `P(v)[ℓ v0]` from a catalog. The base needs an invertible
//! polynomial `x0^ℓ + p(x1, ..)` of degree `ℓ w0` in which `x0` is never a
//! chain partner; the image `P(v0 w1, .., w0 v1, ..)[v0 w0 ℓ]` is then a
//! quasismooth Calabi-Yau hypersurface. Rows are sorted by
//! `(w0, w1, .., ℓ, v)` and are identical across runs and thread counts.

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::gcd_all;
use crate::euler_hodge::orbifold_euler;
use crate::fibration::{classify_elliptic_fibers, discriminant_count, KodairaFiber};
use crate::reference::{
    FiberCatalogEntry, LatticeDatum, ELLIPTIC_CATALOG, K3_CATALOG, K3_TABLE, LATTICE_TABLE, MAX_K3_AUTOMORPHISM_ORDER,
    TABLE_1, TABLE_2, TABLE_3,
};
use crate::twist::{twist, TwistInput};
use crate::wps::{
    build_fermat, delsarte_polynomial, find_delsarte, is_quasismooth, normalize, DelsarteOptions, WeightSystem,
    WeightedHypersurface,
};

/// Limits for the enumerators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBounds {
    pub min_w0: u64,
    pub max_w0: u64,
    /// Keep only fibers with these exponents; `None` keeps all.
    pub ells: Option<Vec<u64>>,
    /// Keep only catalog entries with these names; `None` keeps all.
    pub catalog: Option<Vec<String>>,
    /// Allow chain monomials `x_i^a x_j` besides pure powers in the base polynomial.
    pub allow_chain: bool,
    /// Attach orbifold Euler numbers to elliptic threefold rows.
    pub with_chi: bool,
    /// Also use catalog fibers that do not appear in the reference tables.
    pub extra_fibers: bool,
}

impl SearchBounds {
    pub fn up_to(max_w0: u64) -> Self {
        SearchBounds { min_w0: 2, max_w0, ells: None, catalog: None, allow_chain: true, with_chi: false, extra_fibers: false }
    }

    /// Only `w0` itself.
    pub fn exactly(w0: u64) -> Self {
        SearchBounds { min_w0: w0, ..Self::up_to(w0) }
    }

    fn admits(&self, entry: &FiberCatalogEntry) -> bool {
        (entry.listed || self.extra_fibers)
            && self.ells.as_ref().map_or(true, |e| e.contains(&entry.ell))
            && self.catalog.as_ref().map_or(true, |c| c.iter().any(|n| n == entry.name))
    }

    fn w0_range(&self) -> std::ops::RangeInclusive<u64> {
        self.min_w0.max(2)..=self.max_w0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableKind {
    K3,
    Cy3Elliptic,
    Cy3K3Fibered,
}

/// One emitted row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub kind: TableKind,
    pub base: Vec<u64>,
    /// `x0^ℓ + p` realizing the base.
    pub base_polynomial: String,
    pub fiber_name: String,
    pub fiber: Vec<u64>,
    pub ell: u64,
    /// Image weights before normalization.
    pub image: Vec<u64>,
    pub degree: u64,
    pub normalized_image: Vec<u64>,
    pub normalized_degree: u64,
    pub chi: Option<i64>,
    /// Singular fibers of the elliptic K3, merged by type.
    pub fibers: Option<Vec<(KodairaFiber, usize)>>,
    /// Number of singular fibers of a K3 fibration.
    pub singular_fibers: Option<usize>,
    /// Whether the row appears among the reference rows.
    pub listed: bool,
}

impl TableRow {
    fn sort_key(&self) -> (Vec<u64>, u64, Vec<u64>) {
        (self.base.clone(), self.ell, self.fiber.clone())
    }

    /// The image as a weight multiset, for comparisons up to reordering.
    pub fn sorted_image(&self) -> Vec<u64> {
        let mut w = self.normalized_image.clone();
        w.sort_unstable();
        w
    }
}

/// Builds the twist for one base and fiber, or `None` if it is not a quasismooth Calabi-Yau row.
fn build_row(kind: TableKind, base: &[u64], entry: &FiberCatalogEntry, allow_chain: bool) -> Option<(TableRow, WeightedHypersurface)> {
    let ws = WeightSystem::new(base.to_vec()).ok()?;
    let ell = entry.ell;
    let d = ell * base[0];
    let opts = DelsarteOptions { allow_chain, forbidden_partners: vec![0] };
    let terms = find_delsarte(&ws, d, &opts)?;
    if terms.iter().any(|t| t.owner == 0 && (t.partner.is_some() || u64::from(t.exponent) != ell)) {
        return None;
    }
    let curve = WeightedHypersurface::new(delsarte_polynomial(&ws, d, &terms).ok()?);
    let fws = WeightSystem::new(entry.weights.to_vec()).ok()?;
    let fiber = WeightedHypersurface::new(build_fermat(&fws, entry.degree()).ok()?);
    let input = TwistInput::new(curve.clone(), fiber, ell).ok()?;
    let r = twist(&input).ok()?;
    if !r.quotient.is_ell_to_one || !input.total_cy() || is_quasismooth(&r.x) != Ok(true) {
        return None;
    }
    let norm = normalize(r.x.weights(), r.x.degree(), None).ok()?;
    let row = TableRow {
        kind,
        base: base.to_vec(),
        base_polynomial: curve.poly().to_string(),
        fiber_name: entry.name.to_string(),
        fiber: entry.weights.to_vec(),
        ell,
        image: r.x.weights().weights().to_vec(),
        degree: r.x.degree(),
        normalized_image: norm.weights.weights().to_vec(),
        normalized_degree: norm.degree,
        chi: None,
        fibers: None,
        singular_fibers: None,
        listed: false,
    };
    Some((row, curve))
}

/// Sorted partitions `w1 ≤ .. ≤ wk` of `w0` with `gcd(w0, w1, ..) = 1` and a normalized base.
fn bases(w0: u64, parts: usize) -> Vec<Vec<u64>> {
    fn rec(rest: u64, parts: usize, min: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if parts == 1 {
            if rest >= min {
                cur.push(rest);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        let mut x = min;
        while x * parts as u64 <= rest {
            cur.push(x);
            rec(rest - x, parts - 1, x, cur, out);
            cur.pop();
            x += 1;
        }
    }
    let mut out = Vec::new();
    rec(w0, parts, 1, &mut vec![w0], &mut out);
    out.retain(|b| gcd_all(b) == 1 && WeightSystem::new(b.clone()).map(|w| w.is_normalized()).unwrap_or(false));
    out
}

fn sorted_rows(mut rows: Vec<TableRow>) -> Vec<TableRow> {
    rows.sort_by_key(TableRow::sort_key);
    rows.dedup();
    rows
}

/// Elliptic K3 surfaces `(C × E)/μ_ℓ` over curves `P(w0, w1, w2)`, each with its singular fibers.
pub fn enumerate_k3(bounds: &SearchBounds) -> Vec<TableRow> {
    let rows = bounds
        .w0_range()
        .into_par_iter()
        .flat_map_iter(|w0| {
            let mut out = Vec::new();
            for base in bases(w0, 2) {
                for entry in ELLIPTIC_CATALOG.iter().filter(|e| bounds.admits(e)) {
                    let Some((mut row, curve)) = build_row(TableKind::K3, &base, entry, bounds.allow_chain) else {
                        continue;
                    };
                    let cws = WeightSystem::new(entry.weights.to_vec()).expect("catalog weights are valid");
                    let Ok(report) = classify_elliptic_fibers(&curve, &cws, entry.ell) else {
                        continue;
                    };
                    row.fibers = Some(report.fibers);
                    row.listed = K3_TABLE
                        .iter()
                        .any(|r| r.curve[..] == base[..] && r.elliptic[..] == entry.weights[..] && r.ell == entry.ell);
                    out.push(row);
                }
            }
            out
        })
        .collect();
    sorted_rows(rows)
}

/// Elliptic threefolds over surfaces `P(w0, w1, w2, w3)` with `w1 + w2 + w3 = w0`.
pub fn enumerate_cy3_elliptic(bounds: &SearchBounds) -> Vec<TableRow> {
    let rows = bounds
        .w0_range()
        .into_par_iter()
        .flat_map_iter(|w0| {
            let mut out = Vec::new();
            for base in bases(w0, 3) {
                for entry in ELLIPTIC_CATALOG.iter().filter(|e| bounds.admits(e)) {
                    let Some((mut row, _)) = build_row(TableKind::Cy3Elliptic, &base, entry, bounds.allow_chain) else {
                        continue;
                    };
                    let same = |b: &[u64], f: &[u64], ell: u64| b == &base[..] && f == entry.weights && ell == entry.ell;
                    row.listed = TABLE_1.iter().any(|r| same(&r.base, &r.elliptic, r.ell))
                        || TABLE_2.iter().any(|r| same(&r.base, &[1, 2, 3], 6));
                    if bounds.with_chi {
                        row.chi = orbifold_euler(&WeightSystem::new(row.image.clone()).expect("valid"), row.degree).ok();
                    }
                    out.push(row);
                }
            }
            out
        })
        .collect();
    sorted_rows(rows)
}

/// K3-fibered threefolds over curves `P(w0, w1, w2)`, with Euler numbers and singular-fiber counts.
pub fn enumerate_cy3_k3fibered(bounds: &SearchBounds) -> Vec<TableRow> {
    let rows = bounds
        .w0_range()
        .into_par_iter()
        .flat_map_iter(|w0| {
            let mut out = Vec::new();
            for base in bases(w0, 2) {
                for entry in K3_CATALOG.iter().filter(|e| bounds.admits(e)) {
                    let Some((mut row, curve)) = build_row(TableKind::Cy3K3Fibered, &base, entry, bounds.allow_chain) else {
                        continue;
                    };
                    row.chi = orbifold_euler(&WeightSystem::new(row.image.clone()).expect("valid"), row.degree).ok();
                    row.singular_fibers = discriminant_count(&curve, entry.ell).ok();
                    row.listed = entry.listed
                        && TABLE_3.iter().any(|r| r.curve[..] == base[..] && r.k3[..] == entry.weights[..] && r.ell == entry.ell);
                    out.push(row);
                }
            }
            out
        })
        .collect();
    sorted_rows(rows)
}

/// Result of [`validate_k3_automorphism_order`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AutomorphismCheck {
    pub admissible: bool,
    /// Lattice data when the order is one of the unimodular cases.
    pub datum: Option<LatticeDatum>,
}

/// `ℓ ≤ 66`, with the Néron-Severi and transcendental lattices when tabulated.
pub fn validate_k3_automorphism_order(ell: u64) -> AutomorphismCheck {
    AutomorphismCheck {
        admissible: (1..=MAX_K3_AUTOMORPHISM_ORDER).contains(&ell),
        datum: LATTICE_TABLE.iter().find(|d| d.order == ell).copied(),
    }
}
