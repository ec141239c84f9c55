//! Exhaustive, symmetry-deduplicated search over torus embeddings for the
//! minimal qubit count at each code distance.
//!
//! Embeddings are equivalent when their identification lattices are related
//! by the point group of the matching graph combined with a determinant ±1
//! change of basis. The point group has order 12 and is generated by the
//! reflection `(i,j,t) -> (-i, i+j, t)` and the rotation-with-time-reversal
//! `(i,j,t) -> (-j, i+j, -t)`. Canonical forms kill the basis-change
//! redundancy with a row Hermite normal form and minimize over the point
//! group orbit.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::distance::code_distance;
use crate::intmath::row_hnf_2x3;
use crate::lattice::{Embedding, SpacetimeVec, PERIOD};
use crate::Result;

type Mat3 = [[i64; 3]; 3];

const IDENTITY3: Mat3 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
const REFLECTION: Mat3 = [[-1, 0, 0], [1, 1, 0], [0, 0, 1]];
const ROTATION_TR: Mat3 = [[0, -1, 0], [1, 1, 0], [0, 0, -1]];

fn mat3_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out = [[0i64; 3]; 3];
    for r in 0..3 {
        for c in 0..3 {
            out[r][c] = (0..3).map(|k| a[r][k] * b[k][c]).sum();
        }
    }
    out
}

fn mat3_apply(m: &Mat3, v: SpacetimeVec) -> SpacetimeVec {
    SpacetimeVec::new(
        m[0][0] * v.i + m[0][1] * v.j + m[0][2] * v.t,
        m[1][0] * v.i + m[1][1] * v.j + m[1][2] * v.t,
        m[2][0] * v.i + m[2][1] * v.j + m[2][2] * v.t,
    )
}

/// The twelve point-group elements, generated by closure.
pub fn point_group() -> Vec<Mat3> {
    let mut elements = vec![IDENTITY3];
    loop {
        let mut added = false;
        let snapshot = elements.clone();
        for g in &snapshot {
            for gen in [&REFLECTION, &ROTATION_TR] {
                let h = mat3_mul(gen, g);
                if !elements.contains(&h) {
                    elements.push(h);
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    debug_assert_eq!(elements.len(), 12);
    elements
}

/// Canonical key of an embedding under point-group and basis-change
/// equivalence: the lexicographically minimal row Hermite normal form over
/// the twelve point-group images of the basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(pub [[i64; 3]; 2]);

impl CanonicalKey {
    /// Stable byte encoding (big-endian), ordered like the key itself.
    pub fn to_bytes(&self) -> [u8; 48] {
        let mut out = [0u8; 48];
        for (idx, row) in self.0.iter().enumerate() {
            for (k, &v) in row.iter().enumerate() {
                let off = (idx * 3 + k) * 8;
                // Offset so lexicographic byte order matches integer order.
                out[off..off + 8]
                    .copy_from_slice(&((v as i128 - i64::MIN as i128) as u64).to_be_bytes());
            }
        }
        out
    }

    /// The canonical representative embedding: the key rows themselves form
    /// a basis of the lattice.
    pub fn representative(&self) -> Embedding {
        let l1 = SpacetimeVec::new(self.0[0][0], self.0[0][1], self.0[0][2]);
        let l2 = SpacetimeVec::new(self.0[1][0], self.0[1][1], self.0[1][2]);
        Embedding::from_vectors(l1, l2).expect("canonical key rows form a valid basis")
    }
}

impl std::fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{},{},{};{},{},{}]",
            self.0[0][0], self.0[0][1], self.0[0][2], self.0[1][0], self.0[1][1], self.0[1][2]
        )
    }
}

/// Compute the canonical key of an embedding.
pub fn canonical_form(emb: &Embedding) -> CanonicalKey {
    canonical_form_with(&point_group(), emb)
}

fn canonical_form_with(group: &[Mat3], emb: &Embedding) -> CanonicalKey {
    let l1 = emb.l1();
    let l2 = emb.l2();
    let mut best: Option<[[i64; 3]; 2]> = None;
    for g in group {
        let a = mat3_apply(g, l1);
        let b = mat3_apply(g, l2);
        let h = row_hnf_2x3([[a.i, a.j, a.t], [b.i, b.j, b.t]]);
        if best.map_or(true, |cur| h < cur) {
            best = Some(h);
        }
    }
    CanonicalKey(best.unwrap())
}

/// Minimal qubit count and all inequivalent optimal configurations at one
/// code distance.
#[derive(Debug, Clone, Serialize)]
pub struct SearchResult {
    pub distance: i64,
    pub n_min: i64,
    pub configs: Vec<Embedding>,
}

/// Iterate all index-`kappa` sublattices of the color superlattice, giving
/// their spatial bases in lattice coordinates. Each sublattice appears
/// exactly once (Hermite normal form in superlattice coordinates).
fn sublattice_bases(kappa: i64) -> Vec<((i64, i64), (i64, i64))> {
    // Superlattice basis (1,1) and (2,-1).
    const S1: (i64, i64) = (1, 1);
    const S2: (i64, i64) = (2, -1);
    let combine = |p: i64, q: i64| (p * S1.0 + q * S2.0, p * S1.1 + q * S2.1);
    let mut out = Vec::new();
    for alpha in 1..=kappa {
        if kappa % alpha != 0 {
            continue;
        }
        let delta = kappa / alpha;
        for gamma in 0..delta {
            out.push((combine(alpha, gamma), combine(0, delta)));
        }
    }
    out
}

/// Per-(distance) candidate accumulator: minimal N and canonical keys
/// achieving it.
type Optima = BTreeMap<i64, (i64, Vec<CanonicalKey>)>;

fn vortex_box(a: (i64, i64), b: (i64, i64)) -> (i64, i64) {
    let bound = |v: (i64, i64)| (5 * (v.0.abs() + v.1.abs())) / 3;
    (bound(a), bound(b))
}

fn spatial_reduce(mut a: (i64, i64), mut b: (i64, i64)) -> ((i64, i64), (i64, i64)) {
    let norm2 = |v: (i64, i64)| v.0 * v.0 + v.1 * v.1;
    let dot = |u: (i64, i64), v: (i64, i64)| u.0 * v.0 + u.1 * v.1;
    loop {
        if norm2(a) > norm2(b) {
            std::mem::swap(&mut a, &mut b);
        }
        let mu = crate::intmath::floor_div(2 * dot(a, b) + norm2(a), 2 * norm2(a));
        if mu == 0 {
            break;
        }
        b = (b.0 - mu * a.0, b.1 - mu * a.1);
    }
    (a, b)
}

fn scan_kappa(
    kappa: i64,
    allow_vortices: bool,
    mut visit: impl FnMut(i64, &Embedding),
) {
    let n_qubits = 6 * kappa;
    for (a_raw, b_raw) in sublattice_bases(kappa) {
        let (a, b) = spatial_reduce(a_raw, b_raw);
        let (bound1, bound2) = if allow_vortices { vortex_box(a, b) } else { (0, 0) };
        for n1 in -bound1..=bound1 {
            for n2 in -bound2..=bound2 {
                let l1 = SpacetimeVec::new(a.0, a.1, -PERIOD * n1);
                let l2 = SpacetimeVec::new(b.0, b.1, -PERIOD * n2);
                let emb = Embedding::from_vectors(l1, l2)
                    .expect("superlattice sublattice bases are valid");
                if !emb.check_vortex_constraints() {
                    continue;
                }
                debug_assert_eq!(emb.qubit_count(), n_qubits);
                let d = code_distance(&emb).expect("search embeddings are nondegenerate");
                visit(d, &emb);
            }
        }
    }
}

/// Exhaustive search over all embeddings with `N <= max_qubits`
/// (all vortex counts satisfying the delay constraints when
/// `allow_vortices`, none otherwise), reporting for each achieved distance
/// the minimal qubit count and all inequivalent optimal configurations.
pub fn search_optimal(max_qubits: i64, allow_vortices: bool) -> Result<Vec<SearchResult>> {
    let group = point_group();
    let max_kappa = max_qubits / 6;
    // Phase 1: minimal N per distance.
    let n_min: BTreeMap<i64, i64> = (1..=max_kappa)
        .into_par_iter()
        .map(|kappa| {
            let mut local: BTreeMap<i64, i64> = BTreeMap::new();
            scan_kappa(kappa, allow_vortices, |d, emb| {
                let n = emb.qubit_count();
                local.entry(d).and_modify(|m| *m = (*m).min(n)).or_insert(n);
            });
            local
        })
        .reduce(BTreeMap::new, |mut acc, local| {
            for (d, n) in local {
                acc.entry(d).and_modify(|m| *m = (*m).min(n)).or_insert(n);
            }
            acc
        });
    // Phase 2: revisit only the qubit counts that realize some optimum and
    // collect the inequivalent configurations.
    let target_kappas: Vec<i64> = {
        let mut ks: Vec<i64> = n_min.values().map(|n| n / 6).collect();
        ks.sort_unstable();
        ks.dedup();
        ks
    };
    let optima: Optima = target_kappas
        .into_par_iter()
        .map(|kappa| {
            let mut local: Optima = BTreeMap::new();
            scan_kappa(kappa, allow_vortices, |d, emb| {
                let n = emb.qubit_count();
                if n_min.get(&d) != Some(&n) {
                    return;
                }
                let key = canonical_form_with(&group, emb);
                let entry = local.entry(d).or_insert((n, Vec::new()));
                if !entry.1.contains(&key) {
                    entry.1.push(key);
                }
            });
            local
        })
        .reduce(BTreeMap::new, |mut acc, local| {
            for (d, (n, keys)) in local {
                let entry = acc.entry(d).or_insert((n, Vec::new()));
                debug_assert_eq!(entry.0, n);
                for k in keys {
                    if !entry.1.contains(&k) {
                        entry.1.push(k);
                    }
                }
            }
            acc
        });
    let mut results = Vec::new();
    for (d, (n, mut keys)) in optima {
        keys.sort_unstable();
        results.push(SearchResult {
            distance: d,
            n_min: n,
            configs: keys.iter().map(CanonicalKey::representative).collect(),
        });
    }
    Ok(results)
}

fn fmt_vec(v: SpacetimeVec) -> String {
    format!("({},{},{})", v.i, v.j, v.t)
}

/// Long-format CSV of optimal configurations for both families, one row per
/// configuration: `D,family,N,L1,L2`.
pub fn table_csv(max_qubits: i64) -> Result<String> {
    let without = search_optimal(max_qubits, false)?;
    let with = search_optimal(max_qubits, true)?;
    let mut out = String::from("D,family,N,L1,L2\n");
    let mut all_d: Vec<i64> = without
        .iter()
        .map(|r| r.distance)
        .chain(with.iter().map(|r| r.distance))
        .collect();
    all_d.sort_unstable();
    all_d.dedup();
    for d in all_d {
        for (family, results) in [("novortex", &without), ("vortex", &with)] {
            if let Some(r) = results.iter().find(|r| r.distance == d) {
                for cfg in &r.configs {
                    out.push_str(&format!(
                        "{},{},{},\"{}\",\"{}\"\n",
                        d,
                        family,
                        r.n_min,
                        fmt_vec(cfg.l1()),
                        fmt_vec(cfg.l2()),
                    ));
                }
            }
        }
    }
    Ok(out)
}

/// CSV of the best figure of merit `R = N / D^2` per distance for both
/// families: `family,D,N,R`.
pub fn fig_of_merit_csv(max_qubits: i64) -> Result<String> {
    let mut out = String::from("family,D,N,R\n");
    for (family, allow) in [("novortex", false), ("vortex", true)] {
        for r in search_optimal(max_qubits, allow)? {
            let num = r.n_min;
            let den = r.distance * r.distance;
            let g = num_integer::gcd(num, den);
            out.push_str(&format!(
                "{},{},{},{}/{}\n",
                family,
                r.distance,
                r.n_min,
                num / g,
                den / g
            ));
        }
    }
    Ok(out)
}
