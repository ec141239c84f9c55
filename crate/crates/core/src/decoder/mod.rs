//! Minimum-weight perfect matching decoding of syndromes on the detector
//! graph, with an exact brute-force oracle for small defect sets.

pub mod blossom;

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::dem::DetectorGraph;
use crate::error::Error;
use crate::Result;

/// Fixed-point scale for converting log-likelihood weights to integers.
/// All matching arithmetic is exact in the scaled domain.
const WEIGHT_SCALE: f64 = 65536.0;
/// Cap applied to infinite or huge weights so path sums cannot overflow.
const WEIGHT_CAP: i64 = 1 << 40;

fn scaled_weight(w: f64) -> i64 {
    if !w.is_finite() {
        return WEIGHT_CAP;
    }
    ((w * WEIGHT_SCALE).round() as i64).clamp(1, WEIGHT_CAP)
}

/// Complete graph over the defects of one syndrome: exact integer pair
/// weights (shortest paths) and the logical labels of those paths.
#[derive(Debug, Clone)]
pub struct DefectGraph {
    /// Detector ids with odd syndrome.
    pub defects: Vec<u32>,
    /// Symmetric matrix of shortest-path weights, indexed by defect
    /// position.
    pub pair_weights: Vec<Vec<i64>>,
    /// Logical label of one minimal path per pair (deterministic
    /// tie-breaking).
    pub pair_labels: Vec<Vec<[bool; 2]>>,
}

struct Adjacency {
    // (neighbor, scaled weight, label) per node.
    lists: Vec<Vec<(u32, i64, [bool; 2])>>,
}

fn adjacency(g: &DetectorGraph) -> Adjacency {
    let mut lists = vec![Vec::new(); g.detectors.len()];
    for e in &g.edges {
        let w = scaled_weight(e.weight);
        lists[e.u as usize].push((e.v, w, e.logical_flip));
        lists[e.v as usize].push((e.u, w, e.logical_flip));
    }
    Adjacency { lists }
}

/// Dijkstra from one defect, tracking distances and path labels.
/// Equal-distance relaxations keep the first-settled predecessor, which is
/// deterministic because nodes and edges are visited in a fixed order.
fn shortest_paths(adj: &Adjacency, source: u32) -> (Vec<i64>, Vec<[bool; 2]>) {
    let n = adj.lists.len();
    let mut dist = vec![i64::MAX; n];
    let mut label = vec![[false, false]; n];
    let mut settled = vec![false; n];
    let mut heap: BinaryHeap<Reverse<(i64, u32)>> = BinaryHeap::new();
    dist[source as usize] = 0;
    heap.push(Reverse((0, source)));
    while let Some(Reverse((d, u))) = heap.pop() {
        if settled[u as usize] {
            continue;
        }
        settled[u as usize] = true;
        for &(v, w, elab) in &adj.lists[u as usize] {
            let nd = d.saturating_add(w);
            if nd < dist[v as usize] {
                dist[v as usize] = nd;
                label[v as usize] = [
                    label[u as usize][0] ^ elab[0],
                    label[u as usize][1] ^ elab[1],
                ];
                heap.push(Reverse((nd, v)));
            }
        }
    }
    (dist, label)
}

/// Build the defect graph of a syndrome: all-pairs shortest paths between
/// defects over the decoding edge set.
pub fn defect_pairs(g: &DetectorGraph, syndrome: &[bool]) -> Result<DefectGraph> {
    if syndrome.len() != g.detectors.len() {
        return Err(Error::InvalidParams(format!(
            "syndrome length {} != detector count {}",
            syndrome.len(),
            g.detectors.len()
        )));
    }
    let defects: Vec<u32> = syndrome
        .iter()
        .enumerate()
        .filter_map(|(i, &b)| b.then_some(i as u32))
        .collect();
    if defects.len() % 2 != 0 {
        return Err(Error::OddDefectCount(defects.len()));
    }
    let adj = adjacency(g);
    let k = defects.len();
    let mut pair_weights = vec![vec![0i64; k]; k];
    let mut pair_labels = vec![vec![[false, false]; k]; k];
    for (a, &d) in defects.iter().enumerate() {
        let (dist, label) = shortest_paths(&adj, d);
        for (b, &e) in defects.iter().enumerate() {
            if a != b {
                pair_weights[a][b] = dist[e as usize].min(WEIGHT_CAP);
                pair_labels[a][b] = label[e as usize];
            }
        }
    }
    Ok(DefectGraph { defects, pair_weights, pair_labels })
}

/// Exact minimum-weight perfect matching of the defect graph via the
/// blossom algorithm. Returns defect index pairs, each with the smaller
/// index first, sorted.
pub fn mwpm(dg: &DefectGraph) -> Result<Vec<(usize, usize)>> {
    let k = dg.defects.len();
    if k % 2 != 0 {
        return Err(Error::OddDefectCount(k));
    }
    if k == 0 {
        return Ok(Vec::new());
    }
    // Convert to maximum weight: the max-cardinality matching of a complete
    // even graph is perfect, so any constant shift preserves the optimum.
    let maxw = dg
        .pair_weights
        .iter()
        .flatten()
        .copied()
        .max()
        .unwrap_or(0);
    let mut edges = Vec::with_capacity(k * (k - 1) / 2);
    for a in 0..k {
        for b in (a + 1)..k {
            edges.push((a, b, maxw + 1 - dg.pair_weights[a][b]));
        }
    }
    let mate = blossom::max_weight_matching(k, edges, true);
    let mut pairs = Vec::with_capacity(k / 2);
    for a in 0..k {
        let b = mate[a];
        debug_assert!(b != blossom::UNMATCHED, "complete graph must match perfectly");
        if a < b {
            pairs.push((a, b));
        }
    }
    pairs.sort_unstable();
    Ok(pairs)
}

/// Total weight of a matching in the defect graph.
pub fn matching_weight(dg: &DefectGraph, pairs: &[(usize, usize)]) -> i64 {
    pairs.iter().map(|&(a, b)| dg.pair_weights[a][b]).sum()
}

/// Exhaustive minimum-weight perfect matching over all pairings; global
/// optimum, restricted to at most 12 defects.
pub fn brute_force_matching(dg: &DefectGraph) -> Result<Vec<(usize, usize)>> {
    let k = dg.defects.len();
    if k % 2 != 0 {
        return Err(Error::OddDefectCount(k));
    }
    if k > 12 {
        return Err(Error::TooManyDefects(k));
    }
    fn recurse(
        remaining: &mut Vec<usize>,
        dg: &DefectGraph,
        current: &mut Vec<(usize, usize)>,
        acc: i64,
        best: &mut (i64, Vec<(usize, usize)>),
    ) {
        if remaining.is_empty() {
            if acc < best.0 {
                *best = (acc, current.clone());
            }
            return;
        }
        let a = remaining[0];
        for idx in 1..remaining.len() {
            let b = remaining[idx];
            let w = dg.pair_weights[a][b];
            if acc + w >= best.0 {
                continue;
            }
            let mut rest: Vec<usize> = remaining
                .iter()
                .copied()
                .filter(|&x| x != a && x != b)
                .collect();
            current.push((a, b));
            recurse(&mut rest, dg, current, acc + w, best);
            current.pop();
        }
    }
    let mut remaining: Vec<usize> = (0..k).collect();
    let mut best = (i64::MAX, Vec::new());
    if k == 0 {
        return Ok(Vec::new());
    }
    recurse(&mut remaining, dg, &mut Vec::new(), 0, &mut best);
    let mut pairs = best.1;
    pairs.sort_unstable();
    Ok(pairs)
}

/// Decode a syndrome: match defects at minimum weight and return the
/// predicted 2-bit logical flip (XOR of the matched pairs' path labels).
pub fn decode(g: &DetectorGraph, syndrome: &[bool]) -> Result<[bool; 2]> {
    let dg = defect_pairs(g, syndrome)?;
    let pairs = mwpm(&dg)?;
    let mut flip = [false, false];
    for (a, b) in pairs {
        let l = dg.pair_labels[a][b];
        flip[0] ^= l[0];
        flip[1] ^= l[1];
    }
    Ok(flip)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dem::{build_memory_experiment, decompose_hyperedges};
    use crate::lattice::{Embedding, SpacetimeVec};
    use rand::{Rng, SeedableRng};

    fn emb(l1: (i64, i64, i64), l2: (i64, i64, i64)) -> Embedding {
        Embedding::from_vectors(
            SpacetimeVec::new(l1.0, l1.1, l1.2),
            SpacetimeVec::new(l2.0, l2.1, l2.2),
        )
        .unwrap()
    }

    fn decoded_graph(l1: (i64, i64, i64), l2: (i64, i64, i64), rounds: i64) -> DetectorGraph {
        let g = build_memory_experiment(&emb(l1, l2), rounds, 0.01).unwrap();
        decompose_hyperedges(&g).unwrap()
    }

    #[test]
    fn empty_syndrome_decodes_trivially() {
        let g = decoded_graph((3, 0, -6), (1, -5, 0), 3);
        let syndrome = vec![false; g.detectors.len()];
        let dg = defect_pairs(&g, &syndrome).unwrap();
        assert!(dg.defects.is_empty());
        assert_eq!(mwpm(&dg).unwrap(), Vec::new());
        assert_eq!(decode(&g, &syndrome).unwrap(), [false, false]);
    }

    #[test]
    fn odd_defect_count_is_rejected() {
        let g = decoded_graph((1, 1, 0), (2, -1, 0), 1);
        let mut syndrome = vec![false; g.detectors.len()];
        syndrome[0] = true;
        assert!(matches!(
            defect_pairs(&g, &syndrome),
            Err(Error::OddDefectCount(1))
        ));
    }

    #[test]
    fn single_edge_mechanism_pairs_at_edge_weight() {
        let g = decoded_graph((3, 0, -6), (1, -5, 0), 3);
        let edge = g
            .edges
            .iter()
            .find(|e| e.logical_flip == [false, false])
            .unwrap();
        let mut syndrome = vec![false; g.detectors.len()];
        syndrome[edge.u as usize] = true;
        syndrome[edge.v as usize] = true;
        let dg = defect_pairs(&g, &syndrome).unwrap();
        assert_eq!(dg.defects.len(), 2);
        assert!(dg.pair_weights[0][1] <= scaled_weight(edge.weight));
        assert!(dg.pair_weights[0][1] > 0);
    }

    #[test]
    fn pair_weights_satisfy_triangle_inequality() {
        let g = decoded_graph((4, 1, 0), (1, -5, 0), 3);
        // Fire three scattered mechanisms and check the metric property.
        let mut syndrome = vec![false; g.detectors.len()];
        for m in g.mechanisms.iter().filter(|m| m.detectors.len() == 2).step_by(37).take(3) {
            for &d in &m.detectors {
                syndrome[d as usize] ^= true;
            }
        }
        let dg = defect_pairs(&g, &syndrome).unwrap();
        let k = dg.defects.len();
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    if a != b && b != c && a != c {
                        assert!(
                            dg.pair_weights[a][c]
                                <= dg.pair_weights[a][b] + dg.pair_weights[b][c]
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn every_single_matchable_mechanism_is_corrected() {
        // Distance-3 vortexed configuration: single errors never cause a
        // logical error after decoding.
        let g = decoded_graph((3, 0, -6), (1, -5, 0), 3);
        let mut checked = 0;
        for m in &g.mechanisms {
            if m.detectors.len() != 2 {
                continue;
            }
            let mut syndrome = vec![false; g.detectors.len()];
            for &d in &m.detectors {
                syndrome[d as usize] = true;
            }
            let prediction = decode(&g, &syndrome).unwrap();
            assert_eq!(
                prediction, m.logical_flip,
                "mechanism {:?} decoded wrongly",
                m.detectors
            );
            checked += 1;
        }
        assert!(checked > 100);
    }

    #[test]
    fn two_disjoint_mechanisms_recover_their_labels() {
        let g = decoded_graph((4, 1, 0), (1, -5, 0), 3);
        let pairs: Vec<_> = g
            .mechanisms
            .iter()
            .filter(|m| m.detectors.len() == 2)
            .collect();
        // Find two mechanisms with disjoint, well-separated detector sets.
        let far = pairs
            .iter()
            .find(|m| {
                let a = g.detectors[m.detectors[0] as usize];
                pairs.iter().any(|m2| {
                    let b = g.detectors[m2.detectors[0] as usize];
                    (a.t - b.t).abs() >= 6 && m.detectors != m2.detectors
                })
            })
            .unwrap();
        let partner = pairs
            .iter()
            .find(|m2| {
                let a = g.detectors[far.detectors[0] as usize];
                let b = g.detectors[m2.detectors[0] as usize];
                (a.t - b.t).abs() >= 6 && far.detectors != m2.detectors
            })
            .unwrap();
        let mut syndrome = vec![false; g.detectors.len()];
        for &d in far.detectors.iter().chain(&partner.detectors) {
            syndrome[d as usize] ^= true;
        }
        let expected = [
            far.logical_flip[0] ^ partner.logical_flip[0],
            far.logical_flip[1] ^ partner.logical_flip[1],
        ];
        assert_eq!(decode(&g, &syndrome).unwrap(), expected);
    }

    fn random_defect_graph(rng: &mut impl Rng, k: usize) -> DefectGraph {
        // Random symmetric weights obeying no structure; the matchers must
        // agree regardless.
        let mut pair_weights = vec![vec![0i64; k]; k];
        for a in 0..k {
            for b in (a + 1)..k {
                let w = rng.gen_range(1..1000);
                pair_weights[a][b] = w;
                pair_weights[b][a] = w;
            }
        }
        DefectGraph {
            defects: (0..k as u32).collect(),
            pair_weights,
            pair_labels: vec![vec![[false, false]; k]; k],
        }
    }

    #[test]
    fn forced_optimum_four_defects() {
        let mut dg = random_defect_graph(
            &mut rand_chacha::ChaCha8Rng::seed_from_u64(7),
            4,
        );
        for (a, b, w) in [(0, 1, 1), (2, 3, 1), (0, 2, 3), (1, 3, 3), (0, 3, 3), (1, 2, 3)] {
            dg.pair_weights[a][b] = w;
            dg.pair_weights[b][a] = w;
        }
        let pairs = brute_force_matching(&dg).unwrap();
        assert_eq!(pairs, vec![(0, 1), (2, 3)]);
        assert_eq!(matching_weight(&dg, &pairs), 2);
        assert_eq!(mwpm(&dg).unwrap(), pairs);
    }

    #[test]
    fn mwpm_matches_brute_force_on_random_instances() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for trial in 0..200 {
            let k = 2 * rng.gen_range(1..=6);
            let dg = random_defect_graph(&mut rng, k);
            let exact = brute_force_matching(&dg).unwrap();
            let fast = mwpm(&dg).unwrap();
            assert_eq!(
                matching_weight(&dg, &fast),
                matching_weight(&dg, &exact),
                "trial {trial} with {k} defects"
            );
        }
    }

    #[test]
    fn brute_force_rejects_large_instances() {
        let dg = random_defect_graph(&mut rand_chacha::ChaCha8Rng::seed_from_u64(1), 14);
        assert!(matches!(
            brute_force_matching(&dg),
            Err(Error::TooManyDefects(14))
        ));
    }

    #[test]
    fn decoding_is_deterministic() {
        let g = decoded_graph((3, 0, -6), (1, -5, 0), 3);
        let mut syndrome = vec![false; g.detectors.len()];
        for m in g.mechanisms.iter().filter(|m| m.detectors.len() == 2).step_by(11).take(4) {
            for &d in &m.detectors {
                syndrome[d as usize] ^= true;
            }
        }
        let a = decode(&g, &syndrome).unwrap();
        for _ in 0..5 {
            assert_eq!(decode(&g, &syndrome).unwrap(), a);
        }
    }
}
