//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines are always printed.
//!
//! Every comparison is exact. Integers and rationals are compared with
//! `==`; the pinned tolerance below documents that no slack is allowed.

use std::fmt::Write as _;
use std::path::PathBuf;

use num_traits::One;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use wptwist::arith::{int, ratio};
use wptwist::euler_hodge::{
    ci_curve_genus, conifold_transition, cy3_hodge, fourfold_transition_report, geometric_genus, orbifold_euler,
    ConifoldData, HodgePair,
};
use wptwist::fibration::{
    discriminant_count, fibration_euler, hirzebruch_discriminant, milnor_number, BranchedCover, K3FiberDatum,
    KodairaFiber,
};
use wptwist::reference::{K3_TABLE, TABLE_1, TABLE_2, TABLE_3};
use wptwist::resolve::{
    central_self_intersection, cone_lattice_points, exotic_surface_fixture, hj_evaluate, hj_expand, CyclicSingularity,
};
use wptwist::search::{enumerate_cy3_elliptic, enumerate_cy3_k3fibered, enumerate_k3, SearchBounds, TableRow};
use wptwist::wps::{count_monomials, normalize, weighted_bezout};
use wptwist::{WeightSystem, WeightedHypersurface};

/// Absolute tolerance for every numeric comparison: results are exact.
const TOLERANCE: i64 = 0;

/// Largest curve weight searched when testing the Euler bound on K3-fibered rows.
const BOUND_SEARCH_MAX_W0: u64 = 40;

/// Criteria that fail on the faithful implementation.
///
/// 7: the bound `48 - 24N < χ < 48` assumes every singular fiber has
/// `0 < e < 24`. Rows such as `P(14,3,11)` with the `(1,2,3,6)` fiber have
/// fibers over points with smaller stabilizers whose Euler numbers exceed
/// 24, and their Euler numbers are positive.
const KNOWN_FAILURES: &[usize] = &[7];

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn exact_eq(found: i64, expected: i64, what: &str) -> Result<(), String> {
    ensure((found - expected).abs() <= TOLERANCE, || format!("{what}: found {found}, expected {expected}"))
}

fn ws(w: &[u64]) -> WeightSystem {
    WeightSystem::new(w.to_vec()).expect("valid weights")
}

fn find<'a>(rows: &'a [TableRow], base: &[u64], fiber: &[u64], ell: u64) -> Option<&'a TableRow> {
    rows.iter().find(|r| r.base == base && r.fiber == fiber && r.ell == ell)
}

fn k3_table() -> Outcome {
    let rows = enumerate_k3(&SearchBounds::up_to(11));
    for t in &K3_TABLE {
        let r = find(&rows, &t.curve, &t.elliptic, t.ell).ok_or_else(|| format!("row {} not enumerated", t.number))?;
        ensure(r.image == t.image && r.degree == t.degree, || format!("row {}: image {:?}[{}]", t.number, r.image, r.degree))?;
        ensure(r.fibers.as_deref() == Some(t.fibers), || format!("row {}: fibers {:?}", t.number, r.fibers))?;
        let alpha: wptwist::Rational =
            t.fibers.iter().map(|&(f, n)| f.alpha() * int(n as i64)).fold(int(0), |a, b| a + b);
        let euler: i64 = t.fibers.iter().map(|&(f, n)| f.euler() * n as i64).sum();
        ensure(alpha == int(2), || format!("row {}: Σα = {alpha}", t.number))?;
        exact_eq(euler, 24, &format!("row {} Σe", t.number))?;
    }
    let extra = rows.iter().filter(|r| !r.listed).count();
    Ok(format!("11/11 rows with Σα = 2, Σe = 24 ({} rows emitted, {extra} extra)", rows.len()))
}

fn table_1() -> Outcome {
    let rows = enumerate_cy3_elliptic(&SearchBounds::up_to(14));
    for t in &TABLE_1 {
        let r = find(&rows, &t.base, &t.elliptic, t.ell).ok_or_else(|| format!("{:?} with ℓ = {} missing", t.base, t.ell))?;
        ensure(r.image == t.image && r.degree == t.degree, || format!("{:?}: image {:?}[{}]", t.base, r.image, r.degree))?;
        ensure(r.listed, || format!("{:?} not marked as listed", t.base))?;
    }
    Ok(format!("{}/{} reference rows ({} rows emitted)", TABLE_1.len(), TABLE_1.len(), rows.len()))
}

fn table_3() -> Outcome {
    let rows = enumerate_cy3_k3fibered(&SearchBounds::up_to(7));
    let mut cross = 0;
    for t in &TABLE_3 {
        let r = find(&rows, &t.curve, &t.k3, t.ell).ok_or_else(|| format!("{:?} × {:?} missing", t.curve, t.k3))?;
        ensure(r.image == t.image && r.degree == t.degree, || format!("{:?}: image {:?}", t.curve, r.image))?;
        let chi = orbifold_euler(&ws(&t.image), t.degree).map_err(|e| e.to_string())?;
        exact_eq(chi, t.chi, &format!("χ of {:?}", t.image))?;
        ensure(r.chi == Some(t.chi), || format!("row χ {:?}", r.chi))?;
        if t.curve == [2, 1, 1] {
            let curve = WeightedHypersurface::generic(vec![2, 1, 1], 2 * t.ell).map_err(|e| e.to_string())?;
            let n = discriminant_count(&curve, t.ell).map_err(|e| e.to_string())? as u64;
            let fiber = K3FiberDatum::from_fermat_weights(&t.k3, t.ell).map_err(|e| e.to_string())?;
            let via_fibers = fibration_euler(n, fiber.euler, 24, 2).value;
            exact_eq(via_fibers, chi, &format!("fibration formula for {:?}", t.k3))?;
            cross += 1;
        }
    }
    Ok(format!("15/15 χ values; fibration formula agrees on {cross}/3 rows over P(2,1,1)"))
}

fn table_2() -> Outcome {
    let mut notes = Vec::new();
    for (base, chi, h11, h21) in [([581u64, 41, 42, 498], 960i64, 491u64, Some(11u64)), ([372, 18, 41, 313], 720, 377, None)] {
        let mut b = SearchBounds::exactly(base[0]);
        b.catalog = Some(vec!["E3".into()]);
        b.with_chi = true;
        let rows = enumerate_cy3_elliptic(&b);
        let r = find(&rows, &base, &[1, 2, 3], 6).ok_or_else(|| format!("{base:?} not found by the chain search"))?;
        let t = TABLE_2.iter().find(|t| t.base == base).expect("reference row");
        ensure(r.image == t.image && r.degree == t.degree, || format!("{base:?}: image {:?}", r.image))?;
        exact_eq(r.chi.ok_or("χ missing")?, chi, &format!("χ of {base:?}"))?;
        let hodge = cy3_hodge(chi, h11).map_err(|e| e.to_string())?;
        if let Some(h21) = h21 {
            exact_eq(hodge.h21 as i64, h21 as i64, "h21")?;
        }
        exact_eq(hodge.h11 as i64, t.h11 as i64, "h11")?;
        if base[0] == 581 {
            let expected = "x0^6 + x1^84*x2 + x2^83 + x3^7";
            ensure(r.base_polynomial == expected, || format!("polynomial {}", r.base_polynomial))?;
        }
        notes.push(format!("{base:?}: χ = {chi}, (h11, h21) = ({}, {})", hodge.h11, hodge.h21));
    }
    Ok(notes.join("; "))
}

fn resolution() -> Outcome {
    let s = CyclicSingularity::new(11, 2).map_err(|e| e.to_string())?;
    ensure(hj_expand(&s) == [6, 2], || format!("hj(11,2) = {:?}", hj_expand(&s)))?;
    let c = central_self_intersection(&[(2, 1), (3, 1), (11, 2)], 66, 0).map_err(|e| e.to_string())?;
    ensure(c.b == int(1) && c.first_kind, || format!("b = {}", c.b))?;
    let end = exotic_surface_fixture().blowdown_all();
    exact_eq(end.history().len() as i64, 3, "contractions")?;
    let f = end.curve("G").ok_or("F missing")?;
    let d = end.curve("H").ok_or("D missing")?;
    ensure(end.curves().len() == 2, || format!("left with {end}"))?;
    ensure(f.self_intersection == 0 && f.arithmetic_genus == 1 && f.geometric_genus == 0, || format!("F = {f:?}"))?;
    ensure(d.self_intersection == -2 && d.arithmetic_genus == 0, || format!("D = {d:?}"))?;
    ensure(end.meet("G", "H") == Some(1), || "F and D do not meet once".into())?;
    Ok(format!("[6,2]; b = 1; {} after 3 contractions", end))
}

fn toric() -> Outcome {
    let pts = cone_lattice_points([41, 7, 83]);
    let expected: [[u64; 3]; 20] = [
        [11, 2, 23], [16, 3, 33], [17, 3, 35], [21, 4, 43], [22, 4, 45], [23, 4, 47], [26, 5, 53],
        [27, 5, 55], [28, 5, 57], [29, 5, 59], [31, 6, 63], [32, 6, 65], [33, 6, 67], [34, 6, 69],
        [35, 6, 71], [36, 7, 73], [37, 7, 75], [38, 7, 77], [39, 7, 79], [40, 7, 81],
    ];
    ensure(pts == expected, || format!("got {pts:?}"))?;
    Ok("20 points, (11,2,23) .. (40,7,81)".into())
}

fn curious() -> Outcome {
    exact_eq(milnor_number(&[11, 3, 2]).map_err(|e| e.to_string())? as i64, 20, "Milnor number")?;
    let e = fibration_euler(132, 4, 24, 2);
    exact_eq(e.value, -2592, "fibration Euler number")?;
    exact_eq(geometric_genus(&ws(&[1, 1, 12, 44, 66]), 132) as i64, 9, "geometric genus")?;
    let cover = BranchedCover { degree: 11, branch_points: 132, n: 12 };
    let r = hirzebruch_discriminant(cover, KodairaFiber::II, KodairaFiber::II).map_err(|e| e.to_string())?;
    exact_eq(r.cover_euler, -1298, "e(Σ)")?;
    ensure(r.delta.to_string() == "24C∞ + 264F", || format!("Δ = {}", r.delta))?;
    ensure(r.minus_12k.to_string() == "24C∞ + 168F", || format!("-12K = {}", r.minus_12k))?;
    ensure(!r.matches, || "Δ unexpectedly equals -12K".into())?;
    let rows = enumerate_cy3_k3fibered(&SearchBounds::up_to(BOUND_SEARCH_MAX_W0));
    let mut violations = Vec::new();
    let mut family_ok = true;
    for row in &rows {
        let (chi, n) = (row.chi.ok_or("χ missing")?, row.singular_fibers.ok_or("N missing")? as i64);
        if !(48 - 24 * n < chi && chi < 48) {
            family_ok &= row.base != [2, 1, 1];
            violations.push(format!("{:?}×{} (χ = {chi}, N = {n})", row.base, row.fiber_name));
        }
    }
    ensure(family_ok, || "bound fails over P(2,1,1)".into())?;
    ensure(violations.is_empty(), || {
        format!(
            "Euler bound fails on {} of {} rows with w0 ≤ {BOUND_SEARCH_MAX_W0}: {}; it holds on every row over P(2,1,1)",
            violations.len(),
            rows.len(),
            violations.join(", ")
        )
    })?;
    Ok(format!("μ = 20, e = -2592, p_g = 9, Δ ≠ -12K, Euler bound on {} rows", rows.len()))
}

fn conifold() -> Outcome {
    let before = HodgePair { h11: 5, h21: 101 };
    let after = conifold_transition(&ConifoldData { nodes: 32, relations: 1, before }).map_err(|e| e.to_string())?;
    ensure(after == HodgePair { h11: 6, h21: 70 }, || format!("after = {after:?}"))?;
    let nodes = weighted_bezout(&[4, 4, 8, 8], &ws(&[4, 4, 1, 1, 2])).map_err(|e| e.to_string())?;
    ensure(nodes.integral && nodes.value == int(32), || format!("Bézout = {}", nodes.value))?;
    exact_eq(after.euler() - before.euler(), 64, "χ delta")?;
    Ok("(6,70); 32 nodes; Δχ = 64".into())
}

fn fourfold() -> Outcome {
    exact_eq(ci_curve_genus(16, 16, &ws(&[4, 2, 1, 1])).map_err(|e| e.to_string())? as i64, 385, "genus")?;
    let r = fourfold_transition_report().map_err(|e| e.to_string())?;
    for f in &r.factorizations {
        ensure(f.ok, || format!("{} gave {}, expected {}", f.description, f.found, f.expected))?;
    }
    Ok(format!("g = 385; {} factorizations verified", r.factorizations.len()))
}

fn double_fibration() -> Outcome {
    let mut b = SearchBounds::up_to(2);
    b.extra_fibers = true;
    let rows = enumerate_cy3_k3fibered(&b);
    let target = {
        let n = normalize(&ws(&[2, 2, 1, 1, 6]), 12, None).map_err(|e| e.to_string())?;
        let mut w = n.weights.weights().to_vec();
        w.sort_unstable();
        (w, n.degree)
    };
    let hits: Vec<_> = rows.iter().filter(|r| (r.sorted_image(), r.normalized_degree) == target).collect();
    let has = |fiber: &[u64], ell: u64, deg: u64| {
        hits.iter().any(|r| r.base == [2, 1, 1] && r.fiber == fiber && r.ell == ell && r.ell * r.base[0] == deg)
    };
    ensure(has(&[4, 1, 1, 6], 3, 6), || "P(2,1,1)[6] × P(4,1,1,6)[12] missing".into())?;
    ensure(has(&[1, 1, 1, 3], 6, 12), || "P(2,1,1)[12] × P(1,1,1,3)[6] missing".into())?;
    Ok("P(2,2,1,1,6)[12] from ℓ = 3 and ℓ = 6".into())
}

/// Truncated product of geometric series, an oracle independent of the coin-change recursion.
fn series_count(w: &[u64], d: usize) -> u128 {
    let mut acc = vec![0u128; d + 1];
    acc[0] = 1;
    for &wi in w {
        let mut next = vec![0u128; d + 1];
        for (k, &a) in acc.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let mut j = k;
            while j <= d {
                next[j] += a;
                j += wi as usize;
            }
        }
        acc = next;
    }
    acc[d]
}

fn property_suites() -> Outcome {
    let mut runner = TestRunner::new(Config { cases: 1000, failure_persistence: None, ..Config::default() });
    let strategy = (prop::collection::vec(1u64..=60, 2..=6), 1u64..=4);
    runner
        .run(&strategy, |(w, k)| {
            let weights = ws(&w);
            let d = k * wptwist::arith::lcm_all(&w);
            let once = normalize(&weights, d, None).expect("lcm multiples normalize");
            let twice = normalize(&once.weights, once.degree, None).expect("normalized input");
            prop_assert_eq!(&twice.weights, &once.weights);
            prop_assert_eq!(twice.degree, once.degree);
            prop_assert!(twice.steps.is_empty());
            Ok(())
        })
        .map_err(|e| format!("normalize idempotence: {e}"))?;

    let mut runner = TestRunner::new(Config { cases: 200, failure_persistence: None, ..Config::default() });
    let strategy = (prop::collection::vec(1u64..=60, 2..=6), 0u64..=200);
    runner
        .run(&strategy, |(w, d)| {
            prop_assert_eq!(count_monomials(&ws(&w), d, None), series_count(&w, d as usize));
            Ok(())
        })
        .map_err(|e| format!("monomial counts: {e}"))?;

    let mut pairs = 0;
    for a in 2..=200u64 {
        for b in (1..a).filter(|b| num_integer::gcd(a, *b) == 1) {
            let s = CyclicSingularity::new(a, b).map_err(|e| e.to_string())?;
            let chain = hj_expand(&s);
            ensure(chain.iter().all(|&x| x >= 2) && (chain.len() as u64) < a, || format!("chain {chain:?} for {a}/{b}"))?;
            ensure(hj_evaluate(&chain) == Some(ratio(a as i64, b as i64)), || format!("round trip {a}/{b}"))?;
            pairs += 1;
        }
    }

    for f in KodairaFiber::ALL {
        ensure(f.dual().dual() == f && f.alpha() + f.dual().alpha() == wptwist::Rational::one(), || format!("{f} duality"))?;
        ensure(f.euler() + f.dual().euler() == 12, || format!("{f} Euler duality"))?;
    }

    let goldens = golden_outputs();
    ensure(golden_outputs() == goldens, || "enumeration output differs between runs".into())?;
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for (name, text) in &goldens {
        let path = dir.join(name);
        if std::env::var_os("WPTWIST_BLESS").is_some() {
            std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
            std::fs::write(&path, text).map_err(|e| e.to_string())?;
        }
        let frozen = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
        ensure(&frozen == text, || format!("{name} differs from the frozen output"))?;
    }
    Ok(format!("1000 normalizations, 200 counts, {pairs} fractions, 7 fibers, {} golden files", goldens.len()))
}

fn golden_outputs() -> Vec<(&'static str, String)> {
    let json = |rows: Vec<TableRow>| serde_json::to_string_pretty(&rows).expect("rows serialize") + "\n";
    let mut with_chi = SearchBounds::up_to(14);
    with_chi.with_chi = true;
    vec![
        ("k3.json", json(enumerate_k3(&SearchBounds::up_to(11)))),
        ("cy3_elliptic.json", json(enumerate_cy3_elliptic(&with_chi))),
        ("cy3_k3fibered.json", json(enumerate_cy3_k3fibered(&SearchBounds::up_to(12)))),
    ]
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 11] = [
        ("elliptic K3 table", k3_table),
        ("elliptic threefold table", table_1),
        ("K3-fibered Euler numbers", table_3),
        ("large positive Euler numbers", table_2),
        ("resolution arithmetic", resolution),
        ("toric lattice points", toric),
        ("curious example", curious),
        ("conifold transition", conifold),
        ("fourfold transition", fourfold),
        ("double K3 fibration", double_fibration),
        ("property suites", property_suites),
    ];
    let mut report = String::new();
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let line = match run() {
            Ok(detail) => format!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed.push(i + 1);
                format!("FAIL {:>2} {name}: {detail}", i + 1)
            }
        };
        println!("{line}");
        writeln!(report, "{line}").unwrap();
    }
    assert_eq!(failed, KNOWN_FAILURES, "unexpected criterion outcomes\n{report}");
}
