//! Finite detector error models for quantum memory experiments: X-type
//! detectors on the torus over a time window, EM3 error mechanisms with
//! probabilities, hyperedge decomposition, and 2-bit logical labels.
//!
//! Each two-qubit measurement is replaced, with probability `p`, by a
//! uniformly random two-qubit Pauli followed by the ideal measurement and an
//! independent outcome flip. Only the Z components of the Pauli and (for X
//! checks) the outcome flip act on the X-detector sector. The 32 outcome
//! combinations of one check aggregate into at most eight detector-set
//! classes; their sets are derived by propagating each outcome onto the
//! detection cells of the schedule rather than hard-coded per step:
//!
//! - a Z (or Y) component on a qubit flips, for each of the qubit's three
//!   plaquettes, the detection cell whose open span contains the error time
//!   (one of the three is always in its refresh gap);
//! - an outcome flip on an X check flips, for each of the two plaquettes
//!   sharing the bond, the unique cell using that inference.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::Error;
use crate::lattice::{
    color_class, x_step, z_step, Basis, Bond, Embedding, SpacetimeVec, PERIOD,
};
use crate::Result;

/// Classification of a mechanism by its displacement structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum MechanismCategory {
    E1,
    E2,
    E3,
    Hyperedge,
    Trivial,
}

/// One independent error mechanism of the quotient detector graph.
#[derive(Debug, Clone, Serialize)]
pub struct ErrorMechanism {
    /// Aggregated firing probability.
    pub probability: f64,
    /// Sorted detector ids; 0, 2, or 4 entries.
    pub detectors: Vec<u32>,
    /// Effect on the two logical observables.
    pub logical_flip: [bool; 2],
    /// Displacement class (annotation; not part of graph identity).
    pub category: MechanismCategory,
}

/// A matchable edge of the decoding graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecodingEdge {
    pub u: u32,
    pub v: u32,
    /// Aggregated edge probability.
    pub probability: f64,
    /// Log-likelihood weight `ln((1-q)/q)`.
    pub weight: f64,
    pub logical_flip: [bool; 2],
}

/// Quotient space-time detector graph of a memory experiment.
///
/// `mechanisms` is the sampling view (hyperedges fire atomically);
/// `edges` is the decoding view (pairwise only, hyperedges folded in by
/// [`decompose_hyperedges`]).
#[derive(Debug, Clone, Serialize)]
pub struct DetectorGraph {
    /// Embedding metadata when the graph was built locally.
    pub embedding: Option<Embedding>,
    pub rounds: i64,
    pub error_rate: f64,
    /// Canonical space-time coordinates per detector id, sorted by
    /// `(t, i, j)`.
    pub detectors: Vec<SpacetimeVec>,
    pub mechanisms: Vec<ErrorMechanism>,
    pub edges: Vec<DecodingEdge>,
    /// True once hyperedges have been folded into `edges`.
    pub decomposed: bool,
}

impl PartialEq for DetectorGraph {
    fn eq(&self, other: &Self) -> bool {
        // Categories are derived annotations and excluded from identity.
        self.embedding == other.embedding
            && self.rounds == other.rounds
            && self.error_rate == other.error_rate
            && self.detectors == other.detectors
            && self.decomposed == other.decomposed
            && self.mechanisms.len() == other.mechanisms.len()
            && self
                .mechanisms
                .iter()
                .zip(&other.mechanisms)
                .all(|(a, b)| {
                    a.probability == b.probability
                        && a.detectors == b.detectors
                        && a.logical_flip == b.logical_flip
                })
            && self.edges == other.edges
    }
}

/// Combined probability that an odd number of two independent events fire.
pub fn xor_probability(q1: f64, q2: f64) -> f64 {
    q1 * (1.0 - q2) + q2 * (1.0 - q1)
}

/// Log-likelihood weight of an edge with probability `q`.
pub fn edge_weight(q: f64) -> f64 {
    if q <= 0.0 {
        f64::INFINITY
    } else {
        ((1.0 - q) / q).ln()
    }
}

/// 2-bit logical label of a lifted edge between cover points: the parities
/// of integer-boundary crossings of the two fractional coordinates in the
/// `(L1, L2)` basis. Additive over path concatenation; a closed lifted path
/// with winding `(m1, m2)` accumulates `(m1 mod 2, m2 mod 2)`.
pub fn logical_label(emb: &Embedding, from: SpacetimeVec, to: SpacetimeVec) -> [bool; 2] {
    let (a1, a2) = emb.coefficient_floors(from.i, from.j);
    let (b1, b2) = emb.coefficient_floors(to.i, to.j);
    [(b1 - a1) % 2 != 0, (b2 - a2) % 2 != 0]
}

/// The detection cell of a class-`c` plaquette whose open span contains an
/// error at time `tau`, if any: cells are stamped `2c mod 6` and span
/// `(stamp-2, stamp+2]`. One plaquette class around any error time is in
/// its refresh gap and has no straddling cell.
fn cell_containing(class: i64, tau: i64) -> Option<i64> {
    let lo = tau - 2; // candidate stamps are lo..lo+3
    let offset = (2 * class - lo).rem_euclid(PERIOD);
    if offset <= 3 {
        Some(lo + offset)
    } else {
        None
    }
}

/// The detection cell of a class-`c` plaquette that consumes the stabilizer
/// inference made at step `sigma`: each inference opens or closes exactly
/// one valid cell.
fn cell_with_inference_at(class: i64, sigma: i64) -> Option<i64> {
    let rel = (sigma - 2 * class).rem_euclid(PERIOD);
    match rel {
        4 => Some(sigma + 2), // opening inference
        2 => Some(sigma - 2), // closing inference
        _ => None,
    }
}

/// Cells flipped by a persistent Z-type error on `qubit` at time `tau`.
fn pauli_triggers(qubit: crate::lattice::Qubit, tau: i64) -> Vec<SpacetimeVec> {
    let mut out = Vec::with_capacity(2);
    for (px, py) in qubit.plaquettes() {
        if let Some(stamp) = cell_containing(color_class(px, py), tau) {
            out.push(SpacetimeVec::new(px, py, stamp));
        }
    }
    out
}

/// Cells flipped by an outcome flip of the check on `bond` at time `tau`.
/// Only X-basis outcomes feed X-detector inferences.
fn flip_triggers(bond: &Bond, tau: i64, basis: Basis) -> Vec<SpacetimeVec> {
    if basis == Basis::Z {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(2);
    for (px, py) in bond.side_plaquettes() {
        if let Some(stamp) = cell_with_inference_at(color_class(px, py), tau) {
            out.push(SpacetimeVec::new(px, py, stamp));
        }
    }
    out
}

fn xor_points(acc: &mut Vec<SpacetimeVec>, pts: &[SpacetimeVec]) {
    for p in pts {
        if let Some(pos) = acc.iter().position(|q| q == p) {
            acc.swap_remove(pos);
        } else {
            acc.push(*p);
        }
    }
}

/// One aggregated outcome class of a single noisy check.
#[derive(Debug, Clone, PartialEq)]
pub struct MechanismClass {
    /// Summed probability of the outcomes in this class.
    pub probability: f64,
    /// Triggered cells as cover points (empty for the trivial class).
    pub detectors: Vec<SpacetimeVec>,
    /// True when the class acts on detectors (and hence can carry a
    /// logical flip).
    pub logical_relevant: bool,
    pub category: MechanismCategory,
}

/// Enumerate the 32 equiprobable EM3 outcomes of the check on `bond` at
/// absolute step `step`, project each onto its X-detector effect, and
/// aggregate outcomes with identical detector sets into summed
/// probabilities. The class probabilities sum to `p`.
pub fn classify_em3(bond: &Bond, step: i64, basis: Basis, p: f64) -> Vec<MechanismClass> {
    debug_assert_eq!(
        step.rem_euclid(PERIOD),
        match basis {
            Basis::X => x_step(bond.class()),
            Basis::Z => z_step(bond.class()),
        },
        "step inconsistent with the schedule for {bond:?}"
    );
    let [v1, v2] = bond.qubits();
    let t1 = pauli_triggers(v1, step);
    let t2 = pauli_triggers(v2, step);
    let tf = flip_triggers(bond, step, basis);
    let mut classes: Vec<MechanismClass> = Vec::new();
    // Pauli slots: I, X have no Z component; Z, Y do.
    for pauli1 in 0..4u8 {
        for pauli2 in 0..4u8 {
            for flip in [false, true] {
                let mut cells = Vec::new();
                if pauli1 >= 2 {
                    xor_points(&mut cells, &t1);
                }
                if pauli2 >= 2 {
                    xor_points(&mut cells, &t2);
                }
                if flip {
                    xor_points(&mut cells, &tf);
                }
                cells.sort_unstable();
                match classes.iter_mut().find(|c| c.detectors == cells) {
                    Some(c) => c.probability += p / 32.0,
                    None => {
                        let category = categorize(&cells);
                        classes.push(MechanismClass {
                            probability: p / 32.0,
                            logical_relevant: !cells.is_empty(),
                            detectors: cells,
                            category,
                        });
                    }
                }
            }
        }
    }
    classes.sort_by(|a, b| a.detectors.cmp(&b.detectors));
    classes
}

fn categorize(cells: &[SpacetimeVec]) -> MechanismCategory {
    match cells.len() {
        0 => MechanismCategory::Trivial,
        4 => MechanismCategory::Hyperedge,
        2 => {
            let d = cells[1] - cells[0];
            if crate::graph_metric::EDGES_E1.contains(&d) || crate::graph_metric::EDGES_E1.contains(&(-d)) {
                MechanismCategory::E1
            } else if crate::graph_metric::EDGES_E2.contains(&d)
                || crate::graph_metric::EDGES_E2.contains(&(-d))
            {
                MechanismCategory::E2
            } else {
                debug_assert!(
                    crate::graph_metric::EDGES_E3.contains(&d)
                        || crate::graph_metric::EDGES_E3.contains(&(-d)),
                    "unexpected pair displacement {d}"
                );
                MechanismCategory::E3
            }
        }
        n => unreachable!("EM3 outcome classes have 0, 2, or 4 cells, got {n}"),
    }
}

struct GraphBuilder<'a> {
    emb: &'a Embedding,
    detector_ids: HashMap<SpacetimeVec, u32>,
    detectors: Vec<SpacetimeVec>,
    // (sorted detector ids, label) -> (probability, category)
    accum: HashMap<(Vec<u32>, [bool; 2]), (f64, MechanismCategory)>,
}

impl<'a> GraphBuilder<'a> {
    fn detector_id(&mut self, rep: SpacetimeVec) -> u32 {
        if let Some(&id) = self.detector_ids.get(&rep) {
            return id;
        }
        let id = self.detectors.len() as u32;
        self.detector_ids.insert(rep, id);
        self.detectors.push(rep);
        id
    }

    fn add_class(&mut self, class: &MechanismClass) {
        if class.detectors.is_empty() {
            return;
        }
        // Quotient the cover cells; coincident images cancel pairwise.
        let mut ids: Vec<u32> = Vec::with_capacity(class.detectors.len());
        for &cell in &class.detectors {
            let id = self.detector_id(self.emb.reduce_point(cell));
            if let Some(pos) = ids.iter().position(|&x| x == id) {
                ids.swap_remove(pos);
            } else {
                ids.push(id);
            }
        }
        ids.sort_unstable();
        let label = class_label(self.emb, &class.detectors);
        let entry = self
            .accum
            .entry((ids, label))
            .or_insert((0.0, class.category));
        entry.0 = xor_probability(entry.0, class.probability);
        entry.1 = entry.1.min(class.category);
    }
}

/// Logical label of an outcome class: the cover cells pair up into
/// segments; labels of segments add. Cells are sorted, so pairing
/// consecutive entries is deterministic; any pairing gives the same parity.
fn class_label(emb: &Embedding, cells: &[SpacetimeVec]) -> [bool; 2] {
    debug_assert!(cells.len() % 2 == 0);
    let mut label = [false, false];
    for pair in cells.chunks(2) {
        let l = logical_label(emb, pair[0], pair[1]);
        label[0] ^= l[0];
        label[1] ^= l[1];
    }
    label
}

/// Build the detector error model of a memory experiment: `rounds` noisy
/// periods of the schedule, noiseless initialization and readout. Every
/// detector touched by a window mechanism is included (the noiseless
/// boundaries close all detection cells).
pub fn build_memory_experiment(emb: &Embedding, rounds: i64, p: f64) -> Result<DetectorGraph> {
    if !emb.check_vortex_constraints() {
        return Err(Error::InvalidEmbedding(
            "vortex delay constraints violated".into(),
        ));
    }
    if !(0.0..0.5).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    if rounds < 0 {
        return Err(Error::InvalidParams("rounds must be nonnegative".into()));
    }
    let mut builder = GraphBuilder {
        emb,
        detector_ids: HashMap::new(),
        detectors: Vec::new(),
        accum: HashMap::new(),
    };
    for &(x, y) in &emb.plaquettes() {
        for kind in 0..3u8 {
            let bond = Bond { anchor: (x, y), kind };
            let class = bond.class();
            for cycle in 0..rounds {
                for (basis, base) in [(Basis::X, x_step(class)), (Basis::Z, z_step(class))] {
                    let step = base + PERIOD * cycle;
                    for mech in classify_em3(&bond, step, basis, p) {
                        builder.add_class(&mech);
                    }
                }
            }
        }
    }
    // Canonical detector order: sort by (t, i, j) and remap ids.
    let mut order: Vec<u32> = (0..builder.detectors.len() as u32).collect();
    order.sort_by_key(|&id| {
        let d = builder.detectors[id as usize];
        (d.t, d.i, d.j)
    });
    let mut remap = vec![0u32; order.len()];
    for (new_id, &old_id) in order.iter().enumerate() {
        remap[old_id as usize] = new_id as u32;
    }
    let detectors: Vec<SpacetimeVec> = order
        .iter()
        .map(|&old| builder.detectors[old as usize])
        .collect();
    let mut mechanisms: Vec<ErrorMechanism> = builder
        .accum
        .into_iter()
        .map(|((ids, label), (q, category))| {
            let mut dets: Vec<u32> = ids.iter().map(|&i| remap[i as usize]).collect();
            dets.sort_unstable();
            ErrorMechanism {
                probability: q,
                detectors: dets,
                logical_flip: label,
                category,
            }
        })
        .collect();
    mechanisms.sort_by(|a, b| {
        (&a.detectors, a.logical_flip, a.category).cmp(&(&b.detectors, b.logical_flip, b.category))
    });
    let edges = base_edges(&mechanisms);
    Ok(DetectorGraph {
        embedding: Some(*emb),
        rounds,
        error_rate: p,
        detectors,
        mechanisms,
        edges,
        decomposed: false,
    })
}

/// Decoding edges from the 2-detector mechanisms only.
fn base_edges(mechanisms: &[ErrorMechanism]) -> Vec<DecodingEdge> {
    let mut edges: Vec<DecodingEdge> = Vec::new();
    for m in mechanisms {
        if m.detectors.len() != 2 {
            continue;
        }
        edges.push(DecodingEdge {
            u: m.detectors[0],
            v: m.detectors[1],
            probability: m.probability,
            weight: edge_weight(m.probability),
            logical_flip: m.logical_flip,
        });
    }
    edges.sort_by(|a, b| (a.u, a.v, a.logical_flip).cmp(&(b.u, b.v, b.logical_flip)));
    edges
}

/// Fold each 4-detector mechanism into two matchable edges for decoding.
///
/// Of the three pairings of the four detectors, those whose both pairs
/// already exist as edges (they always do for EM3: the same check produces
/// all six pairs) are scored by the total weight the edges would have after
/// absorbing the hyperedge probability, requiring the pair labels to sum to
/// the hyperedge label; the minimal-weight pairing wins, ties broken by
/// pairing order. The sampler keeps using the original hyperedges.
pub fn decompose_hyperedges(g: &DetectorGraph) -> Result<DetectorGraph> {
    let mut out = g.clone();
    if out.decomposed {
        return Ok(out);
    }
    // Index base edges by endpoint pair.
    let mut by_pair: HashMap<(u32, u32), Vec<usize>> = HashMap::new();
    for (idx, e) in out.edges.iter().enumerate() {
        by_pair.entry((e.u, e.v)).or_default().push(idx);
    }
    let base: Vec<DecodingEdge> = out.edges.clone();
    // Extra probability to fold into each edge index.
    let mut folds: Vec<f64> = vec![0.0; out.edges.len()];
    for m in &out.mechanisms {
        if m.detectors.len() != 4 {
            continue;
        }
        let d = &m.detectors;
        let pairings = [
            [(d[0], d[1]), (d[2], d[3])],
            [(d[0], d[2]), (d[1], d[3])],
            [(d[0], d[3]), (d[1], d[2])],
        ];
        let mut best: Option<(f64, [usize; 2])> = None;
        for pairing in pairings {
            let (Some(c1), Some(c2)) = (by_pair.get(&pairing[0]), by_pair.get(&pairing[1]))
            else {
                continue;
            };
            for &i1 in c1 {
                for &i2 in c2 {
                    let label_ok = (0..2).all(|k| {
                        base[i1].logical_flip[k] ^ base[i2].logical_flip[k] == m.logical_flip[k]
                    });
                    if !label_ok {
                        continue;
                    }
                    let score = edge_weight(xor_probability(base[i1].probability, m.probability))
                        + edge_weight(xor_probability(base[i2].probability, m.probability));
                    if best.map_or(true, |(s, _)| score < s) {
                        best = Some((score, [i1, i2]));
                    }
                }
            }
        }
        let Some((_, [i1, i2])) = best else {
            return Err(Error::UndecomposableHyperedge);
        };
        for idx in [i1, i2] {
            folds[idx] = xor_probability(folds[idx], m.probability);
        }
    }
    for (idx, extra) in folds.iter().enumerate() {
        if *extra > 0.0 {
            let q = xor_probability(base[idx].probability, *extra);
            out.edges[idx].probability = q;
        }
    }
    for e in &mut out.edges {
        e.weight = edge_weight(e.probability);
    }
    out.decomposed = true;
    Ok(out)
}

/// Length of the shortest homologically nontrivial cycle of matchable
/// mechanisms inside the windowed graph, if one fits. Zero-detector
/// mechanisms with a nontrivial label count as cycles of length 1.
pub fn shortest_logical_cycle(g: &DetectorGraph) -> Option<i64> {
    use std::collections::VecDeque;
    let mut best: Option<i64> = None;
    for m in &g.mechanisms {
        if m.detectors.is_empty() && m.logical_flip != [false, false] {
            best = Some(1);
        }
    }
    let n = g.detectors.len();
    let mut adjacency: Vec<Vec<(u32, u8)>> = vec![Vec::new(); n];
    for m in &g.mechanisms {
        if m.detectors.len() != 2 {
            continue;
        }
        let lab = (m.logical_flip[0] as u8) | ((m.logical_flip[1] as u8) << 1);
        adjacency[m.detectors[0] as usize].push((m.detectors[1], lab));
        adjacency[m.detectors[1] as usize].push((m.detectors[0], lab));
    }
    // BFS in the 4-fold label cover from every start.
    for start in 0..n {
        let mut dist = vec![[i64::MAX; 4]; n];
        let mut queue = VecDeque::new();
        dist[start][0] = 0;
        queue.push_back((start as u32, 0u8));
        while let Some((u, lab)) = queue.pop_front() {
            let d = dist[u as usize][lab as usize];
            if let Some(b) = best {
                if d + 1 >= b {
                    continue;
                }
            }
            for &(v, elab) in &adjacency[u as usize] {
                let nl = lab ^ elab;
                if dist[v as usize][nl as usize] == i64::MAX {
                    dist[v as usize][nl as usize] = d + 1;
                    queue.push_back((v, nl));
                }
            }
        }
        for lab in 1..4 {
            let d = dist[start][lab];
            if d != i64::MAX && best.map_or(true, |b| d < b) {
                best = Some(d);
            }
        }
    }
    best
}

// ----- text export / import ------------------------------------------------

/// Serialize the graph in the line-oriented detector-error-model format
/// (see the repository README for the grammar).
pub fn export_dem(g: &DetectorGraph) -> String {
    let mut out = String::from("dem 1\n");
    if let Some(emb) = &g.embedding {
        let (c1, d1, n1, c2, d2, n2) = emb.coefficients();
        out.push_str(&format!("embedding {c1} {d1} {n1} {c2} {d2} {n2}\n"));
    }
    out.push_str(&format!("rounds {}\n", g.rounds));
    out.push_str(&format!("p {}\n", g.error_rate));
    out.push_str(&format!("detectors {}\n", g.detectors.len()));
    for (id, d) in g.detectors.iter().enumerate() {
        out.push_str(&format!("detector D{id} {} {} {}\n", d.i, d.j, d.t));
    }
    for m in &g.mechanisms {
        out.push_str(&format!("error({})", m.probability));
        for d in &m.detectors {
            out.push_str(&format!(" D{d}"));
        }
        if m.logical_flip[0] {
            out.push_str(" L0");
        }
        if m.logical_flip[1] {
            out.push_str(" L1");
        }
        out.push('\n');
    }
    out
}

/// Parse a detector-error-model text back into a graph. The decoding edge
/// set is rebuilt from the 2-detector mechanisms, so a full round trip
/// (export, import) reproduces an identical graph.
pub fn import_dem(text: &str) -> Result<DetectorGraph> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| Error::MalformedDem("empty input".into()))?;
    if header.trim() != "dem 1" {
        return Err(Error::MalformedDem(format!("bad header {header:?}")));
    }
    let mut embedding = None;
    let mut rounds = 0i64;
    let mut error_rate = 0.0f64;
    let mut detectors: Vec<SpacetimeVec> = Vec::new();
    let mut mechanisms: Vec<ErrorMechanism> = Vec::new();
    let bad = |line: &str| Error::MalformedDem(format!("cannot parse line {line:?}"));
    for line in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let head = parts.next().unwrap();
        match head {
            "embedding" => {
                let vals: Vec<i64> = parts
                    .map(|s| s.parse().map_err(|_| bad(line)))
                    .collect::<Result<_>>()?;
                if vals.len() != 6 {
                    return Err(bad(line));
                }
                embedding =
                    Some(Embedding::new(vals[0], vals[1], vals[2], vals[3], vals[4], vals[5])?);
            }
            "rounds" => {
                rounds = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| bad(line))?;
            }
            "p" => {
                error_rate = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| bad(line))?;
            }
            "detectors" => {}
            "detector" => {
                let id: usize = parts
                    .next()
                    .and_then(|s| s.strip_prefix('D'))
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| bad(line))?;
                if id != detectors.len() {
                    return Err(Error::MalformedDem(format!(
                        "detector ids must be consecutive, got D{id}"
                    )));
                }
                let vals: Vec<i64> = parts
                    .map(|s| s.parse().map_err(|_| bad(line)))
                    .collect::<Result<_>>()?;
                if vals.len() != 3 {
                    return Err(bad(line));
                }
                detectors.push(SpacetimeVec::new(vals[0], vals[1], vals[2]));
            }
            _ if head.starts_with("error(") => {
                let q: f64 = head
                    .strip_prefix("error(")
                    .and_then(|s| s.strip_suffix(')'))
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| bad(line))?;
                let mut dets = Vec::new();
                let mut label = [false, false];
                for tok in parts {
                    if let Some(d) = tok.strip_prefix('D') {
                        dets.push(d.parse::<u32>().map_err(|_| bad(line))?);
                    } else if tok == "L0" {
                        label[0] = true;
                    } else if tok == "L1" {
                        label[1] = true;
                    } else {
                        return Err(bad(line));
                    }
                }
                for &d in &dets {
                    if d as usize >= detectors.len() {
                        return Err(Error::MalformedDem(format!("unknown detector D{d}")));
                    }
                }
                let category = imported_category(&embedding, &detectors, &dets, label);
                mechanisms.push(ErrorMechanism {
                    probability: q,
                    detectors: dets,
                    logical_flip: label,
                    category,
                });
            }
            _ => return Err(bad(line)),
        }
    }
    let edges = base_edges(&mechanisms);
    Ok(DetectorGraph {
        embedding,
        rounds,
        error_rate,
        detectors,
        mechanisms,
        edges,
        decomposed: false,
    })
}

/// Best-effort category reconstruction from imported quotient data.
/// Categories are annotations, not graph identity; with the embedding
/// header present, pairs are matched exactly against the edge displacements.
fn imported_category(
    embedding: &Option<Embedding>,
    coords: &[SpacetimeVec],
    dets: &[u32],
    label: [bool; 2],
) -> MechanismCategory {
    match dets.len() {
        4 => MechanismCategory::Hyperedge,
        0 => {
            // Only wrapped correlated-error pairs can lose both detectors.
            if label == [false, false] {
                MechanismCategory::Trivial
            } else {
                MechanismCategory::E3
            }
        }
        2 => {
            let u = coords[dets[0] as usize];
            let v = coords[dets[1] as usize];
            if let Some(emb) = embedding {
                for (set, cat) in [
                    (crate::graph_metric::EDGES_E1, MechanismCategory::E1),
                    (crate::graph_metric::EDGES_E2, MechanismCategory::E2),
                    (crate::graph_metric::EDGES_E3, MechanismCategory::E3),
                ] {
                    for e in set {
                        if emb.reduce_point(u + e) == v || emb.reduce_point(u - e) == v {
                            return cat;
                        }
                    }
                }
            }
            // Without an embedding the time residue separates only the
            // correlated class.
            if (v.t - u.t).rem_euclid(PERIOD) == 0 {
                MechanismCategory::E3
            } else {
                MechanismCategory::E2
            }
        }
        _ => MechanismCategory::Trivial,
    }
}
