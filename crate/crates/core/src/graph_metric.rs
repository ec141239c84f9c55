//! The graph norm on the infinite space-time matching graph: shortest path
//! length between detectors, in closed form and via a brute-force BFS oracle.
//!
//! Matchable errors displace detectors by one of eighteen vectors, the
//! signed elements of three sets:
//!
//! - `E1 = {(-1,0,4), (0,1,4), (1,-1,4)}` (measurement flips),
//! - `E2 = {(1,0,2), (0,-1,2), (-1,1,2)}` (single-qubit Pauli errors),
//! - `E3 = {(1,1,0), (2,-1,0), (-1,2,0)}` (correlated two-qubit errors).
//!
//! Removing the `E2` edges splits the graph into two components (times
//! `0 mod 4` and `2 mod 4`). Within the even component every displacement is
//! an integer combination of the `E1` vectors, and the norm has the closed
//! form `(|w1| + |w2| + |w3| + |w1+w2+w3|) / 2`. A displacement between the
//! components costs one `E2` edge plus an even-component remainder.

use std::collections::HashMap;

use crate::error::Error;
use crate::lattice::SpacetimeVec;
use crate::Result;

/// Measurement-flip displacements (`t = 4`).
pub const EDGES_E1: [SpacetimeVec; 3] = [
    SpacetimeVec::new(-1, 0, 4),
    SpacetimeVec::new(0, 1, 4),
    SpacetimeVec::new(1, -1, 4),
];

/// Single-qubit-error displacements (`t = 2`).
pub const EDGES_E2: [SpacetimeVec; 3] = [
    SpacetimeVec::new(1, 0, 2),
    SpacetimeVec::new(0, -1, 2),
    SpacetimeVec::new(-1, 1, 2),
];

/// Correlated-error displacements (`t = 0`).
pub const EDGES_E3: [SpacetimeVec; 3] = [
    SpacetimeVec::new(1, 1, 0),
    SpacetimeVec::new(2, -1, 0),
    SpacetimeVec::new(-1, 2, 0),
];

/// All eighteen signed edge displacements; every detector has degree 18.
pub fn signed_edges() -> [SpacetimeVec; 18] {
    let mut out = [SpacetimeVec::ZERO; 18];
    let mut k = 0;
    for set in [EDGES_E1, EDGES_E2, EDGES_E3] {
        for e in set {
            out[k] = e;
            out[k + 1] = -e;
            k += 2;
        }
    }
    out
}

/// Coefficients of a displacement in the `E1` basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisCoords {
    pub w1: i64,
    pub w2: i64,
    pub w3: i64,
}

impl BasisCoords {
    /// Reconstruct the displacement `w1 E1[0] + w2 E1[1] + w3 E1[2]`.
    pub fn reconstruct(&self) -> SpacetimeVec {
        EDGES_E1[0].scaled(self.w1) + EDGES_E1[1].scaled(self.w2) + EDGES_E1[2].scaled(self.w3)
    }
}

/// Express a displacement of the even component in the `E1` basis.
///
/// The basis matrix has determinant -12; an integer solution exists exactly
/// when `t = 0 mod 4` and `t/4 = j - i mod 3`, which together characterize
/// the even-component sublattice.
pub fn basis_coords(w: SpacetimeVec) -> Result<BasisCoords> {
    if w.t % 4 != 0 {
        return Err(Error::NotInEvenComponent);
    }
    let s = w.t / 4;
    let num = s - 2 * w.i - w.j;
    if num.rem_euclid(3) != 0 {
        return Err(Error::NotInEvenComponent);
    }
    let w1 = num / 3;
    let w2 = w.j + w.i + w1;
    let w3 = w.i + w1;
    let coords = BasisCoords { w1, w2, w3 };
    debug_assert_eq!(coords.reconstruct(), w);
    Ok(coords)
}

fn even_component_norm(w: SpacetimeVec) -> Result<u64> {
    let c = basis_coords(w)?;
    let sum = c.w1 + c.w2 + c.w3;
    Ok(((c.w1.abs() + c.w2.abs() + c.w3.abs() + sum.abs()) / 2) as u64)
}

/// Exact shortest-path edge count between detectors separated by `w`.
///
/// Fails with [`Error::NotDetectorDisplacement`] when `w` does not connect
/// two detector vertices.
pub fn graph_norm(w: SpacetimeVec) -> Result<u64> {
    if !w.is_detector_displacement() {
        return Err(Error::NotDetectorDisplacement);
    }
    if w.t.rem_euclid(4) == 0 {
        even_component_norm(w)
    } else {
        // Exactly one E2 edge joins the components; try all six signed
        // choices and keep the cheapest remainder.
        let mut best = u64::MAX;
        for e in EDGES_E2 {
            for step in [e, -e] {
                let rest = w - step;
                let n = even_component_norm(rest)
                    .expect("remainder after an E2 step is in the even component");
                best = best.min(1 + n);
            }
        }
        Ok(best)
    }
}

/// Lower bound on the norm from the per-edge displacement limits
/// `|di| <= 2`, `|dj| <= 2`, `|dt| <= 4`.
pub fn speed_bound(w: SpacetimeVec) -> u64 {
    let a = (w.i.unsigned_abs() + 1) / 2;
    let b = (w.j.unsigned_abs() + 1) / 2;
    let c = (w.t.unsigned_abs() + 3) / 4;
    a.max(b).max(c)
}

/// Breadth-first-search oracle for [`graph_norm`] over the infinite
/// 18-regular graph.
///
/// States that cannot reach the target within the remaining budget (by the
/// per-edge speed bound) are pruned, so the search always terminates.
/// Fails with [`Error::RadiusExceeded`] when no path of length at most
/// `radius` exists.
pub fn graph_norm_bfs(w: SpacetimeVec, radius: u32) -> Result<u64> {
    if !w.is_detector_displacement() {
        return Err(Error::NotDetectorDisplacement);
    }
    if w == SpacetimeVec::ZERO {
        return Ok(0);
    }
    let edges = signed_edges();
    let mut dist: HashMap<SpacetimeVec, u32> = HashMap::new();
    dist.insert(SpacetimeVec::ZERO, 0);
    let mut frontier = vec![SpacetimeVec::ZERO];
    for depth in 1..=radius {
        let budget = radius - depth;
        let mut next = Vec::new();
        for &u in &frontier {
            for e in edges {
                let v = u + e;
                if v == w {
                    return Ok(depth as u64);
                }
                if speed_bound(w - v) > budget as u64 {
                    continue;
                }
                if let std::collections::hash_map::Entry::Vacant(slot) = dist.entry(v) {
                    slot.insert(depth);
                    next.push(v);
                }
            }
        }
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    Err(Error::RadiusExceeded(radius))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn paired_e2_edges_reduce_to_e1_and_e3() {
        // 2*(1,0,2) = (1,-1,4) + (1,1,0) and (0,-1,2) + (-1,1,2) = (-1,0,4).
        assert_eq!(EDGES_E2[0].scaled(2), EDGES_E1[2] + EDGES_E3[0]);
        assert_eq!(EDGES_E2[1] + EDGES_E2[2], EDGES_E1[0]);
        // Each E3 edge is a difference of two E1 edges.
        assert_eq!(EDGES_E3[0], EDGES_E1[1] - EDGES_E1[0]);
        assert_eq!(EDGES_E3[1], EDGES_E1[2] - EDGES_E1[0]);
        assert_eq!(EDGES_E3[2], EDGES_E1[1] - EDGES_E1[2]);
    }

    #[test]
    fn all_edges_connect_detector_vertices() {
        for e in signed_edges() {
            assert!(e.is_detector_displacement(), "{e} is not a valid edge");
        }
    }

    #[test]
    fn basis_coords_examples() {
        let c = basis_coords(SpacetimeVec::new(-1, 0, 4)).unwrap();
        assert_eq!((c.w1, c.w2, c.w3), (1, 0, 0));
        let c = basis_coords(SpacetimeVec::new(1, 1, 0)).unwrap();
        assert_eq!((c.w1, c.w2, c.w3), (-1, 1, 0));
        let c = basis_coords(SpacetimeVec::new(3, 0, 0)).unwrap();
        assert_eq!((c.w1, c.w2, c.w3), (-2, 1, 1));
        assert_eq!(
            basis_coords(SpacetimeVec::new(1, 0, 2)),
            Err(Error::NotInEvenComponent)
        );
        // t = 0 mod 4 but not in the sublattice spanned by E1.
        assert_eq!(
            basis_coords(SpacetimeVec::new(1, 0, 0)),
            Err(Error::NotInEvenComponent)
        );
    }

    #[test]
    fn norm_examples() {
        assert_eq!(graph_norm(SpacetimeVec::ZERO).unwrap(), 0);
        assert_eq!(graph_norm(SpacetimeVec::new(1, 0, 2)).unwrap(), 1);
        assert_eq!(graph_norm(SpacetimeVec::new(3, 0, 0)).unwrap(), 2);
        assert_eq!(graph_norm(SpacetimeVec::new(3, 3, 0)).unwrap(), 3);
        assert_eq!(
            graph_norm(SpacetimeVec::new(1, 0, 0)),
            Err(Error::NotDetectorDisplacement)
        );
    }

    #[test]
    fn bfs_examples() {
        assert_eq!(graph_norm_bfs(SpacetimeVec::new(0, 1, 4), 3).unwrap(), 1);
        assert_eq!(graph_norm_bfs(SpacetimeVec::new(3, 0, 0), 5).unwrap(), 2);
        assert_eq!(graph_norm_bfs(SpacetimeVec::new(2, -1, 0), 3).unwrap(), 1);
        assert_eq!(
            graph_norm_bfs(SpacetimeVec::new(3, 3, 0), 2),
            Err(Error::RadiusExceeded(2))
        );
    }

    #[test]
    fn zero_norm_only_at_origin() {
        for e in signed_edges() {
            assert!(graph_norm(e).unwrap() == 1);
        }
    }

    /// Strategy generating valid detector displacements.
    fn detector_displacement() -> impl Strategy<Value = SpacetimeVec> {
        (-8i64..=8, -8i64..=8, -5i64..=5, prop::bool::ANY).prop_map(|(i, j, k, odd)| {
            let mut v = SpacetimeVec::new(i, j, 2 * (i - j) + 6 * k);
            if odd {
                v = v + EDGES_E2[0];
            }
            v
        })
    }

    proptest! {
        #[test]
        fn norm_is_symmetric(w in detector_displacement()) {
            prop_assert_eq!(graph_norm(w).unwrap(), graph_norm(-w).unwrap());
        }

        #[test]
        fn triangle_inequality(u in detector_displacement(), v in detector_displacement()) {
            prop_assert!(graph_norm(u + v).unwrap() <= graph_norm(u).unwrap() + graph_norm(v).unwrap());
        }

        #[test]
        fn even_component_homogeneity(w in detector_displacement()) {
            if w.t.rem_euclid(4) == 0 {
                prop_assert_eq!(graph_norm(w.scaled(2)).unwrap(), 2 * graph_norm(w).unwrap());
            }
        }

        #[test]
        fn speed_bound_holds(w in detector_displacement()) {
            prop_assert!(graph_norm(w).unwrap() >= speed_bound(w));
        }
    }
}
