//! Graphlike code distance as a rank-2 shortest-vector problem under the
//! graph norm, with basis reduction, a bounded enumeration, and an
//! independent shortest-cycle oracle on the quotient graph.

use std::collections::{HashMap, VecDeque};

use num_rational::Ratio;

use crate::error::Error;
use crate::graph_metric::{graph_norm, signed_edges, speed_bound};
use crate::intmath::Mat2;
use crate::lattice::{CodeParams, Embedding, Rational, SpacetimeVec};
use crate::Result;

/// A Lagrange-reduced lattice basis together with the coefficient transform.
///
/// `transform` has determinant ±1 and maps coefficients in the original
/// basis to coefficients in the reduced one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReducedBasis {
    pub l1: SpacetimeVec,
    pub l2: SpacetimeVec,
    pub transform: Mat2,
}

fn independent(l1: SpacetimeVec, l2: SpacetimeVec) -> bool {
    let cx = l1.j * l2.t - l1.t * l2.j;
    let cy = l1.t * l2.i - l1.i * l2.t;
    let cz = l1.i * l2.j - l1.j * l2.i;
    cx != 0 || cy != 0 || cz != 0
}

/// Lagrange-Gauss reduction of a rank-2 lattice basis in the Euclidean
/// metric (time axis weighted as-is).
///
/// The reduced basis spans the same lattice and satisfies
/// `|l1| <= |l2|` and `|<l1, l2>| <= |l1|^2 / 2`.
pub fn reduce_basis(l1: SpacetimeVec, l2: SpacetimeVec) -> Result<ReducedBasis> {
    if !independent(l1, l2) {
        return Err(Error::DegenerateBasis);
    }
    let mut b1 = l1;
    let mut b2 = l2;
    // transform maps original coefficients to current-basis coefficients.
    let mut t = Mat2::IDENTITY;
    loop {
        if b1.norm2() > b2.norm2() {
            std::mem::swap(&mut b1, &mut b2);
            t = Mat2 { a: 0, b: 1, c: 1, d: 0 }.mul(&t);
        }
        // mu = nearest integer to <b1,b2> / |b1|^2.
        let dot = b1.dot(&b2);
        let n2 = b1.norm2();
        let mu = crate::intmath::floor_div(2 * dot + n2, 2 * n2);
        if mu == 0 {
            break;
        }
        b2 = b2 - b1.scaled(mu);
        // If w = a*b1 + b*b2_old then w = (a + mu*b)*b1 + b*b2_new.
        t = Mat2 { a: 1, b: mu, c: 0, d: 1 }.mul(&t);
    }
    debug_assert!(b1.norm2() <= b2.norm2());
    debug_assert!(2 * b1.dot(&b2).abs() <= b1.norm2());
    debug_assert_eq!(t.det().abs(), 1);
    Ok(ReducedBasis { l1: b1, l2: b2, transform: t })
}

/// Distance computation report: the graphlike distance (minimum over
/// coefficient pairs with at least one odd coordinate), all minimizing
/// pairs in original-basis coefficients (sign-normalized), and the
/// unrestricted minimum over all nonzero pairs as a diagnostic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceReport {
    pub distance: i64,
    pub minimizers: Vec<(i64, i64)>,
    pub unrestricted_min: i64,
}

fn lattice_vector(rb: &ReducedBasis, m1: i64, m2: i64) -> SpacetimeVec {
    rb.l1.scaled(m1) + rb.l2.scaled(m2)
}

/// Enumeration bounds: every pair with `speed_bound < limit` satisfies
/// `|m1| <= M1`, `|m2| <= M2`.
fn coefficient_bounds(rb: &ReducedBasis, limit: i64) -> (i64, i64) {
    let det_s = rb.l1.i * rb.l2.j - rb.l2.i * rb.l1.j;
    debug_assert!(det_s != 0);
    let reach = 2 * limit - 2;
    let m1 = (reach * (rb.l2.i.abs() + rb.l2.j.abs())) / det_s.abs() + 1;
    let m2 = (reach * (rb.l1.i.abs() + rb.l1.j.abs())) / det_s.abs() + 1;
    (m1, m2)
}

/// Compute the distance report with a window enlarged by `scale` (the
/// default enumeration uses `scale = 1`; larger values stress-test window
/// soundness).
pub fn distance_report_scaled(emb: &Embedding, scale: i64) -> Result<DistanceReport> {
    let rb = reduce_basis(emb.l1(), emb.l2())?;
    let norm_of = |m1: i64, m2: i64| -> i64 {
        graph_norm(lattice_vector(&rb, m1, m2)).expect("lattice vectors join detector vertices") as i64
    };
    // Seed the bound from a small box around the origin.
    let mut best_odd = i64::MAX;
    let mut best_any = i64::MAX;
    for m1 in -2..=2i64 {
        for m2 in -2..=2i64 {
            if (m1, m2) == (0, 0) {
                continue;
            }
            let n = norm_of(m1, m2);
            best_any = best_any.min(n);
            if m1 % 2 != 0 || m2 % 2 != 0 {
                best_odd = best_odd.min(n);
            }
        }
    }
    let (mut bound1, mut bound2) = coefficient_bounds(&rb, best_odd);
    bound1 *= scale;
    bound2 *= scale;
    let mut minimizers = Vec::new();
    for m1 in -bound1..=bound1 {
        for m2 in -bound2..=bound2 {
            if (m1, m2) == (0, 0) {
                continue;
            }
            let w = lattice_vector(&rb, m1, m2);
            if speed_bound(w) as i64 > best_odd {
                continue;
            }
            let n = graph_norm(w).expect("lattice vectors join detector vertices") as i64;
            best_any = best_any.min(n);
            if m1 % 2 == 0 && m2 % 2 == 0 {
                continue;
            }
            if n < best_odd {
                best_odd = n;
                minimizers.clear();
            }
            if n == best_odd {
                // Back to original-basis coefficients, sign-normalized so
                // each +/- pair is reported once.
                let inv = Mat2 {
                    a: rb.transform.d,
                    b: -rb.transform.b,
                    c: -rb.transform.c,
                    d: rb.transform.a,
                };
                let s = rb.transform.det();
                debug_assert_eq!(s.abs(), 1);
                let (mut o1, mut o2) = inv.apply(m1, m2);
                o1 *= s;
                o2 *= s;
                if o1 < 0 || (o1 == 0 && o2 < 0) {
                    o1 = -o1;
                    o2 = -o2;
                }
                if !minimizers.contains(&(o1, o2)) {
                    minimizers.push((o1, o2));
                }
            }
        }
    }
    minimizers.sort_unstable();
    Ok(DistanceReport { distance: best_odd, minimizers, unrestricted_min: best_any })
}

/// Full distance report for an embedding.
pub fn distance_report(emb: &Embedding) -> Result<DistanceReport> {
    distance_report_scaled(emb, 1)
}

/// Graphlike code distance of an embedding: the minimum graph norm of
/// `m1 L1 + m2 L2` over integer pairs with at least one odd coordinate.
pub fn code_distance(emb: &Embedding) -> Result<i64> {
    Ok(distance_report(emb)?.distance)
}

/// Qubit-cost figure of merit `R = N / D^2` as an exact rational.
pub fn rate(emb: &Embedding) -> Result<Rational> {
    let d = code_distance(emb)?;
    Ok(Ratio::new(emb.qubit_count(), d * d))
}

/// Code parameters `[[N, K=2, D]]` with `R = N / D^2`.
pub fn code_params(emb: &Embedding) -> Result<CodeParams> {
    let d = code_distance(emb)?;
    Ok(CodeParams {
        n: emb.qubit_count(),
        k: 2,
        d,
        r: Ratio::new(emb.qubit_count(), d * d),
    })
}

/// Independent distance oracle: breadth-first search for the shortest
/// homologically nontrivial cycle on the quotient detector graph.
///
/// Works on the quotient by the doubled lattice `(2 L1, 2 L2)`, where a
/// nontrivial cycle of the original quotient becomes a shortest path from
/// the origin to the image of `m1 L1 + m2 L2` with `m1` or `m2` odd.
/// Restricted to `N <= 200`.
pub fn distance_cycle_oracle(emb: &Embedding) -> Result<i64> {
    if emb.qubit_count() > 200 {
        return Err(Error::TooLarge);
    }
    let doubled = Embedding::from_vectors(emb.l1().scaled(2), emb.l2().scaled(2))?;
    let origin = doubled.reduce_point(SpacetimeVec::ZERO);
    let targets: Vec<SpacetimeVec> = [(1i64, 0i64), (0, 1), (1, 1)]
        .iter()
        .map(|&(m1, m2)| doubled.reduce_point(emb.l1().scaled(m1) + emb.l2().scaled(m2)))
        .collect();
    debug_assert!(!targets.contains(&origin));
    let edges = signed_edges();
    let mut seen: HashMap<SpacetimeVec, i64> = HashMap::new();
    let mut queue = VecDeque::new();
    seen.insert(origin, 0);
    queue.push_back((origin, 0i64));
    // Generous cap: a flat loop around the torus is never longer than this.
    let cap = 3 * emb.qubit_count() + 48;
    while let Some((u, d)) = queue.pop_front() {
        if d >= cap {
            break;
        }
        for e in edges {
            let v = doubled.reduce_point(u + e);
            if targets.contains(&v) {
                return Ok(d + 1);
            }
            if let std::collections::hash_map::Entry::Vacant(slot) = seen.entry(v) {
                slot.insert(d + 1);
                queue.push_back((v, d + 1));
            }
        }
    }
    Err(Error::TooLarge)
}
