//! Known classification rows, kept as static reference data.
//!
//! These rows are what the enumerators must reproduce. Two transcription
//! slips are corrected: the elliptic threefold base `(5,1,1,2)`, whose image
//! `(1,2,2,5,10)` forces `(5,1,2,2)`, and the image `(1.2.2.10.15)` written
//! with periods.

use crate::fibration::KodairaFiber::{self, *};

/// An elliptic curve or K3 surface of shape `y0^ℓ + q = 0` used as twist fiber.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FiberCatalogEntry {
    pub name: &'static str,
    pub weights: &'static [u64],
    pub ell: u64,
    /// `false` for catalog entries that do not appear in the reference tables.
    pub listed: bool,
}

impl FiberCatalogEntry {
    pub fn degree(&self) -> u64 {
        self.ell * self.weights[0]
    }
}

/// The three elliptic curves `E1 = P(1,1,1)[3]`, `E2 = P(1,1,2)[4]`, `E3 = P(1,2,3)[6]`.
pub const ELLIPTIC_CATALOG: [FiberCatalogEntry; 3] = [
    FiberCatalogEntry { name: "E1", weights: &[1, 1, 1], ell: 3, listed: true },
    FiberCatalogEntry { name: "E2", weights: &[1, 1, 2], ell: 4, listed: true },
    FiberCatalogEntry { name: "E3", weights: &[1, 2, 3], ell: 6, listed: true },
];

/// K3 fibers. `K1..K3` appear in the reference tables; `K4` and `K5` are extra
/// surfaces of the same shape that give the two twist presentations of
/// `P(2,2,1,1,6)[12]` (`K5` with `ℓ = 3`, `K4` with `ℓ = 6`).
pub const K3_CATALOG: [FiberCatalogEntry; 5] = [
    FiberCatalogEntry { name: "K1", weights: &[1, 1, 2, 2], ell: 6, listed: true },
    FiberCatalogEntry { name: "K2", weights: &[1, 2, 3, 6], ell: 12, listed: true },
    FiberCatalogEntry { name: "K3", weights: &[1, 6, 14, 21], ell: 42, listed: true },
    FiberCatalogEntry { name: "K4", weights: &[1, 1, 1, 3], ell: 6, listed: false },
    FiberCatalogEntry { name: "K5", weights: &[4, 1, 1, 6], ell: 3, listed: false },
];

/// Row of the elliptic K3 table; fibers are listed in Kodaira order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct K3Row {
    pub number: u8,
    pub curve: [u64; 3],
    pub elliptic: [u64; 3],
    pub ell: u64,
    pub image: [u64; 4],
    pub degree: u64,
    pub fibers: &'static [(KodairaFiber, usize)],
}

pub const K3_TABLE: [K3Row; 11] = [
    K3Row { number: 1, curve: [2, 1, 1], elliptic: [1, 1, 1], ell: 3, image: [1, 1, 2, 2], degree: 6, fibers: &[(IV, 6)] },
    K3Row { number: 2, curve: [2, 1, 1], elliptic: [1, 1, 2], ell: 4, image: [1, 1, 2, 4], degree: 8, fibers: &[(III, 8)] },
    K3Row { number: 3, curve: [2, 1, 1], elliptic: [1, 2, 3], ell: 6, image: [1, 1, 4, 6], degree: 12, fibers: &[(II, 12)] },
    K3Row { number: 4, curve: [3, 1, 2], elliptic: [1, 1, 2], ell: 4, image: [1, 2, 3, 6], degree: 12, fibers: &[(III, 6), (I0Star, 1)] },
    K3Row { number: 5, curve: [3, 1, 2], elliptic: [1, 2, 3], ell: 6, image: [1, 2, 6, 9], degree: 18, fibers: &[(II, 9), (I0Star, 1)] },
    K3Row { number: 6, curve: [4, 1, 3], elliptic: [1, 1, 1], ell: 3, image: [1, 3, 4, 4], degree: 12, fibers: &[(IV, 4), (IVStar, 1)] },
    K3Row { number: 7, curve: [4, 1, 3], elliptic: [1, 2, 3], ell: 6, image: [1, 3, 8, 12], degree: 24, fibers: &[(II, 8), (IVStar, 1)] },
    K3Row { number: 8, curve: [5, 1, 4], elliptic: [1, 1, 2], ell: 4, image: [1, 4, 5, 10], degree: 20, fibers: &[(III, 5), (IIIStar, 1)] },
    K3Row { number: 9, curve: [7, 1, 6], elliptic: [1, 2, 3], ell: 6, image: [1, 6, 14, 21], degree: 42, fibers: &[(II, 7), (IIStar, 1)] },
    K3Row { number: 10, curve: [5, 2, 3], elliptic: [1, 2, 3], ell: 6, image: [2, 3, 10, 15], degree: 30, fibers: &[(II, 5), (I0Star, 1), (IVStar, 1)] },
    K3Row { number: 11, curve: [11, 5, 6], elliptic: [1, 2, 3], ell: 6, image: [5, 6, 22, 33], degree: 66, fibers: &[(II, 2), (IIStar, 2)] },
];

/// Row of the table of elliptic threefolds over weighted surfaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EllipticThreefoldRow {
    pub base: [u64; 4],
    pub elliptic: [u64; 3],
    pub ell: u64,
    pub image: [u64; 5],
    pub degree: u64,
}

const fn r1(base: [u64; 4], elliptic: [u64; 3], ell: u64, image: [u64; 5], degree: u64) -> EllipticThreefoldRow {
    EllipticThreefoldRow { base, elliptic, ell, image, degree }
}

/// All 37 reference rows, in their original order.
pub const TABLE_1: [EllipticThreefoldRow; 37] = [
    r1([3, 1, 1, 1], [1, 1, 1], 3, [1, 1, 1, 3, 3], 9),
    r1([3, 1, 1, 1], [1, 1, 2], 4, [1, 1, 1, 3, 6], 12),
    r1([3, 1, 1, 1], [1, 2, 3], 6, [1, 1, 1, 6, 9], 18),
    r1([4, 1, 1, 2], [1, 1, 1], 3, [1, 1, 2, 4, 4], 12),
    r1([4, 1, 1, 2], [1, 1, 2], 4, [1, 1, 2, 4, 8], 16),
    r1([4, 1, 1, 2], [1, 2, 3], 6, [1, 1, 2, 8, 12], 24),
    r1([5, 1, 1, 3], [1, 1, 1], 3, [1, 1, 3, 5, 5], 15),
    r1([5, 1, 1, 3], [1, 2, 3], 6, [1, 1, 3, 10, 15], 30),
    r1([5, 1, 2, 2], [1, 1, 2], 4, [1, 2, 2, 5, 10], 20),
    r1([5, 1, 2, 2], [1, 2, 3], 6, [1, 2, 2, 10, 15], 30),
    r1([6, 1, 1, 4], [1, 1, 2], 4, [1, 1, 4, 6, 12], 24),
    r1([6, 1, 1, 4], [1, 2, 3], 6, [1, 1, 4, 12, 18], 36),
    r1([6, 1, 2, 3], [1, 1, 1], 3, [1, 2, 3, 6, 6], 18),
    r1([6, 1, 2, 3], [1, 1, 2], 4, [1, 2, 3, 6, 12], 24),
    r1([6, 1, 2, 3], [1, 2, 3], 6, [1, 2, 3, 12, 18], 36),
    r1([7, 1, 2, 4], [1, 1, 2], 4, [1, 2, 4, 7, 14], 28),
    r1([7, 1, 3, 3], [1, 1, 1], 3, [1, 3, 3, 7, 7], 21),
    r1([7, 1, 3, 3], [1, 2, 3], 6, [1, 3, 3, 14, 21], 42),
    r1([7, 2, 2, 3], [1, 2, 3], 6, [2, 2, 3, 14, 21], 42),
    r1([8, 1, 1, 6], [1, 1, 1], 3, [1, 1, 6, 8, 8], 24),
    r1([8, 1, 1, 6], [1, 2, 3], 6, [1, 1, 6, 16, 24], 48),
    r1([8, 1, 3, 4], [1, 2, 3], 6, [1, 3, 4, 16, 24], 48),
    r1([8, 2, 3, 3], [1, 2, 3], 6, [2, 3, 3, 16, 24], 48),
    r1([9, 1, 2, 6], [1, 1, 2], 4, [1, 2, 6, 9, 18], 36),
    r1([9, 1, 2, 6], [1, 2, 3], 6, [1, 2, 6, 18, 27], 54),
    r1([9, 1, 4, 4], [1, 1, 2], 4, [1, 4, 4, 9, 18], 36),
    r1([9, 2, 3, 4], [1, 1, 2], 4, [2, 3, 4, 9, 18], 36),
    r1([10, 1, 1, 8], [1, 1, 2], 4, [1, 1, 8, 10, 20], 40),
    r1([10, 2, 3, 5], [1, 1, 1], 3, [2, 3, 5, 10, 10], 30),
    r1([10, 2, 3, 5], [1, 2, 3], 6, [2, 3, 5, 20, 30], 60),
    r1([10, 1, 3, 6], [1, 1, 1], 3, [1, 3, 6, 10, 10], 30),
    r1([10, 1, 3, 6], [1, 2, 3], 6, [1, 3, 6, 20, 30], 60),
    r1([10, 3, 3, 4], [1, 2, 3], 6, [3, 3, 4, 20, 30], 60),
    r1([12, 1, 2, 9], [1, 1, 1], 3, [1, 2, 9, 12, 12], 36),
    r1([12, 1, 2, 9], [1, 2, 3], 6, [1, 2, 9, 24, 36], 72),
    r1([13, 1, 6, 6], [1, 2, 3], 6, [1, 6, 6, 26, 39], 78),
    r1([14, 1, 1, 12], [1, 2, 3], 6, [1, 1, 12, 28, 42], 84),
];

/// Row of the large positive Euler number table; all use `E3` with `ℓ = 6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PositiveEulerRow {
    pub base: [u64; 4],
    pub image: [u64; 5],
    pub degree: u64,
    pub chi: i64,
    pub h11: u64,
    /// Whether the base admits an invertible polynomial of twist shape.
    pub reachable: bool,
}

const fn r2(base: [u64; 4], image: [u64; 5], degree: u64, chi: i64, h11: u64, reachable: bool) -> PositiveEulerRow {
    PositiveEulerRow { base, image, degree, chi, h11, reachable }
}

pub const TABLE_2: [PositiveEulerRow; 11] = [
    r2([581, 41, 42, 498], [41, 42, 498, 1162, 1743], 3486, 960, 491, true),
    r2([498, 36, 41, 421], [36, 41, 421, 996, 1494], 2988, 960, 491, true),
    r2([539, 36, 41, 462], [36, 41, 462, 1078, 1617], 3234, 900, 462, true),
    r2([469, 31, 42, 396], [31, 42, 396, 938, 1407], 2814, 900, 462, true),
    r2([463, 31, 41, 391], [31, 41, 391, 926, 1389], 2778, 900, 462, true),
    r2([433, 31, 36, 366], [31, 36, 366, 866, 1299], 2598, 840, 433, false),
    r2([483, 28, 41, 414], [28, 41, 414, 966, 1449], 2898, 804, 416, false),
    r2([414, 24, 41, 349], [24, 41, 349, 828, 1242], 2484, 804, 416, false),
    r2([385, 28, 31, 326], [28, 31, 326, 770, 1155], 2310, 744, 387, false),
    r2([434, 21, 41, 372], [21, 41, 372, 868, 1302], 2604, 720, 377, true),
    r2([372, 18, 41, 313], [18, 41, 313, 744, 1116], 2232, 720, 377, true),
];

/// Row of the K3-fibered threefold table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct K3FiberedRow {
    pub curve: [u64; 3],
    pub k3: [u64; 4],
    pub ell: u64,
    pub image: [u64; 5],
    pub degree: u64,
    pub chi: i64,
}

const fn r3(curve: [u64; 3], k3: [u64; 4], ell: u64, image: [u64; 5], degree: u64, chi: i64) -> K3FiberedRow {
    K3FiberedRow { curve, k3, ell, image, degree, chi }
}

pub const TABLE_3: [K3FiberedRow; 15] = [
    r3([2, 1, 1], [1, 1, 2, 2], 6, [1, 1, 2, 4, 4], 12, -192),
    r3([2, 1, 1], [1, 2, 3, 6], 12, [1, 1, 4, 6, 12], 24, -312),
    r3([2, 1, 1], [1, 6, 14, 21], 42, [1, 1, 12, 28, 42], 84, -960),
    r3([3, 1, 2], [1, 1, 2, 2], 6, [1, 2, 3, 6, 6], 18, -144),
    r3([3, 1, 2], [1, 2, 3, 6], 12, [1, 2, 6, 9, 18], 36, -228),
    r3([3, 1, 2], [1, 6, 14, 21], 42, [1, 2, 18, 42, 63], 126, -720),
    r3([4, 1, 3], [1, 1, 2, 2], 6, [1, 3, 4, 8, 8], 24, -120),
    r3([4, 1, 3], [1, 2, 3, 6], 12, [1, 3, 8, 12, 24], 48, -192),
    r3([4, 1, 3], [1, 6, 14, 21], 42, [1, 3, 24, 56, 84], 168, -624),
    r3([5, 1, 4], [1, 2, 3, 6], 12, [1, 4, 10, 15, 30], 60, -168),
    r3([7, 1, 6], [1, 2, 3, 6], 12, [1, 6, 14, 21, 42], 84, -132),
    r3([7, 1, 6], [1, 6, 14, 21], 42, [1, 6, 42, 98, 147], 294, -480),
    r3([5, 2, 3], [1, 1, 2, 2], 6, [2, 3, 5, 10, 10], 30, -72),
    r3([5, 2, 3], [1, 2, 3, 6], 12, [2, 3, 10, 15, 30], 60, -108),
    r3([5, 2, 3], [1, 6, 14, 21], 42, [2, 3, 30, 70, 105], 210, -384),
];

/// Néron-Severi and transcendental lattices of K3 surfaces with a purely
/// non-symplectic automorphism of order `k` and unimodular transcendental lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeDatum {
    pub order: u64,
    pub s_x: &'static str,
    pub t_x: &'static str,
}

pub const LATTICE_TABLE: [LatticeDatum; 6] = [
    LatticeDatum { order: 66, s_x: "U", t_x: "U⊕U⊕E8⊕E8" },
    LatticeDatum { order: 44, s_x: "U", t_x: "U⊕U⊕E8⊕E8" },
    LatticeDatum { order: 42, s_x: "U⊕E8", t_x: "U⊕U⊕E8" },
    LatticeDatum { order: 36, s_x: "U⊕E8", t_x: "U⊕U⊕E8" },
    LatticeDatum { order: 28, s_x: "U⊕E8", t_x: "U⊕U⊕E8" },
    LatticeDatum { order: 12, s_x: "U⊕E8⊕E8", t_x: "U⊕U" },
];

/// Largest possible order of a non-symplectic automorphism of a K3 surface.
pub const MAX_K3_AUTOMORPHISM_ORDER: u64 = 66;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twist_weights_are_consistent() {
        for r in &K3_TABLE {
            let [w0, w1, w2] = r.curve;
            let [v0, v1, v2] = r.elliptic;
            assert_eq!(r.image, [v0 * w1, v0 * w2, w0 * v1, w0 * v2], "row {}", r.number);
            assert_eq!(r.degree, v0 * w0 * r.ell);
            assert_eq!(r.degree, r.image.iter().sum::<u64>());
        }
        for r in &TABLE_1 {
            let [w0, w1, w2, w3] = r.base;
            let [v0, v1, v2] = r.elliptic;
            assert_eq!(r.image, [v0 * w1, v0 * w2, v0 * w3, w0 * v1, w0 * v2]);
            assert_eq!(r.degree, r.image.iter().sum::<u64>());
            assert_eq!(w1 + w2 + w3, w0);
        }
        for r in &TABLE_2 {
            let [w0, w1, w2, w3] = r.base;
            assert_eq!(r.image, [w1, w2, w3, 2 * w0, 3 * w0]);
            assert_eq!(r.degree, 6 * w0);
            assert!(r.h11 as i64 - r.chi / 2 > 0);
        }
        for r in &TABLE_3 {
            let [w0, w1, w2] = r.curve;
            let [v0, v1, v2, v3] = r.k3;
            assert_eq!(r.image, [v0 * w1, v0 * w2, w0 * v1, w0 * v2, w0 * v3]);
            assert_eq!(r.degree, r.image.iter().sum::<u64>());
        }
    }

    #[test]
    fn catalogs_are_calabi_yau() {
        for e in ELLIPTIC_CATALOG.iter().chain(&K3_CATALOG) {
            assert_eq!(e.weights.iter().sum::<u64>(), e.degree(), "{}", e.name);
        }
    }
}
