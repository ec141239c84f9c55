//! Maximum-weight matching in general graphs by the blossom method.
//!
//! Primal-dual algorithm with blossom shrinking, O(n^3). The structure
//! follows the classic formulation: a forest of alternating trees is grown
//! from free vertices; tight edges extend trees, merge them (augmentation),
//! or close odd cycles (blossoms); dual variables are adjusted by the
//! minimal slack when the forest is stuck. Edge weights are integers and
//! slacks use doubled weights, so all dual arithmetic stays integral.
//!
//! With `max_cardinality` the matching is constrained to maximum
//! cardinality; on a complete graph with an even number of vertices this
//! yields a perfect matching, which is how minimum-weight perfect matching
//! is obtained (negate or shift the weights).

pub const UNMATCHED: usize = usize::MAX;
const NONE: usize = usize::MAX;

/// Labels of top-level blossoms in the alternating forest.
const FREE: u8 = 0;
const LABEL_S: u8 = 1; // outer: even distance from a root
const LABEL_T: u8 = 2; // inner: odd distance from a root

pub struct Matching {
    nvertex: usize,
    nedge: usize,
    edges: Vec<(usize, usize, i64)>,
    max_cardinality: bool,
    // endpoint[p]: vertex at endpoint p of edge p/2; p^1 is the other end.
    endpoint: Vec<usize>,
    // neighbend[v]: remote endpoints of edges incident to v.
    neighbend: Vec<Vec<usize>>,
    // mate[v]: endpoint of the matched edge at v, or NONE.
    mate: Vec<usize>,
    label: Vec<u8>,
    label_flag: Vec<bool>, // visited mark used during scan_blossom
    labelend: Vec<usize>,
    inblossom: Vec<usize>,
    blossomparent: Vec<usize>,
    blossomchilds: Vec<Vec<usize>>,
    blossombase: Vec<usize>,
    blossomendps: Vec<Vec<usize>>,
    bestedge: Vec<usize>,
    blossombestedges: Vec<Vec<usize>>,
    unusedblossoms: Vec<usize>,
    dualvar: Vec<i64>,
    allowedge: Vec<bool>,
    queue: Vec<usize>,
}

impl Matching {
    pub fn new(nvertex: usize, edges: Vec<(usize, usize, i64)>, max_cardinality: bool) -> Self {
        let nedge = edges.len();
        let maxweight = edges.iter().map(|e| e.2).max().unwrap_or(0).max(0);
        let mut endpoint = Vec::with_capacity(2 * nedge);
        for &(i, j, _) in &edges {
            endpoint.push(i);
            endpoint.push(j);
        }
        let mut neighbend = vec![Vec::new(); nvertex];
        for (k, &(i, j, _)) in edges.iter().enumerate() {
            neighbend[i].push(2 * k + 1);
            neighbend[j].push(2 * k);
        }
        let mut dualvar = vec![maxweight; nvertex];
        dualvar.extend(std::iter::repeat(0).take(nvertex));
        Matching {
            nvertex,
            nedge,
            edges,
            max_cardinality,
            endpoint,
            neighbend,
            mate: vec![NONE; nvertex],
            label: vec![FREE; 2 * nvertex],
            label_flag: vec![false; 2 * nvertex],
            labelend: vec![NONE; 2 * nvertex],
            inblossom: (0..nvertex).collect(),
            blossomparent: vec![NONE; 2 * nvertex],
            blossomchilds: vec![Vec::new(); 2 * nvertex],
            blossombase: (0..nvertex).chain(std::iter::repeat(NONE).take(nvertex)).collect(),
            blossomendps: vec![Vec::new(); 2 * nvertex],
            bestedge: vec![NONE; 2 * nvertex],
            blossombestedges: vec![Vec::new(); 2 * nvertex],
            unusedblossoms: (nvertex..2 * nvertex).collect(),
            dualvar,
            allowedge: vec![false; nedge],
            queue: Vec::new(),
        }
    }

    fn slack(&self, k: usize) -> i64 {
        let (i, j, wt) = self.edges[k];
        self.dualvar[i] + self.dualvar[j] - 2 * wt
    }

    fn blossom_leaves(&self, b: usize, out: &mut Vec<usize>) {
        if b < self.nvertex {
            out.push(b);
        } else {
            for &t in &self.blossomchilds[b] {
                self.blossom_leaves(t, out);
            }
        }
    }

    fn assign_label(&mut self, w: usize, t: u8, p: usize) {
        let b = self.inblossom[w];
        debug_assert!(self.label[w] == FREE && self.label[b] == FREE);
        self.label[w] = t;
        self.label[b] = t;
        self.labelend[w] = p;
        self.labelend[b] = p;
        self.bestedge[w] = NONE;
        self.bestedge[b] = NONE;
        if t == LABEL_S {
            let mut leaves = Vec::new();
            self.blossom_leaves(b, &mut leaves);
            self.queue.extend(leaves);
        } else {
            let base = self.blossombase[b];
            debug_assert!(self.mate[base] != NONE);
            let next = self.endpoint[self.mate[base]];
            let via = self.mate[base] ^ 1;
            self.assign_label(next, LABEL_S, via);
        }
    }

    /// Trace back from both ends of a tight S-S edge; return the first
    /// common ancestor blossom base, or NONE if the trees have different
    /// roots (then the edge augments the matching).
    fn scan_blossom(&mut self, v0: usize, w0: usize) -> usize {
        let mut path = Vec::new();
        let mut base = NONE;
        let mut v = v0;
        let mut w = w0;
        loop {
            if v == NONE && w == NONE {
                break;
            }
            if v != NONE {
                let b = self.inblossom[v];
                if self.label_flag[b] {
                    base = self.blossombase[b];
                    break;
                }
                debug_assert_eq!(self.label[b], LABEL_S);
                path.push(b);
                self.label_flag[b] = true;
                debug_assert_eq!(self.labelend[b], self.mate[self.blossombase[b]]);
                if self.labelend[b] == NONE {
                    v = NONE;
                } else {
                    let t = self.endpoint[self.labelend[b]];
                    let bt = self.inblossom[t];
                    debug_assert_eq!(self.label[bt], LABEL_T);
                    debug_assert!(self.labelend[bt] != NONE);
                    v = self.endpoint[self.labelend[bt]];
                }
            }
            if w != NONE {
                std::mem::swap(&mut v, &mut w);
            }
        }
        for b in path {
            self.label_flag[b] = false;
        }
        base
    }

    /// Shrink the odd cycle through edge `k` and base `base` into a new
    /// blossom.
    fn add_blossom(&mut self, base: usize, k: usize) {
        let (mut v, mut w, _) = self.edges[k];
        let bb = self.inblossom[base];
        let mut bv = self.inblossom[v];
        let mut bw = self.inblossom[w];
        let b = self.unusedblossoms.pop().expect("blossom pool exhausted");
        self.blossombase[b] = base;
        self.blossomparent[b] = NONE;
        self.blossomparent[bb] = b;
        let mut path = Vec::new();
        let mut endps = Vec::new();
        while bv != bb {
            self.blossomparent[bv] = b;
            path.push(bv);
            endps.push(self.labelend[bv]);
            debug_assert!(
                self.label[bv] == LABEL_T
                    || (self.label[bv] == LABEL_S
                        && self.labelend[bv] == self.mate[self.blossombase[bv]])
            );
            debug_assert!(self.labelend[bv] != NONE);
            v = self.endpoint[self.labelend[bv]];
            bv = self.inblossom[v];
        }
        path.push(bb);
        path.reverse();
        endps.reverse();
        endps.push(2 * k);
        while bw != bb {
            self.blossomparent[bw] = b;
            path.push(bw);
            endps.push(self.labelend[bw] ^ 1);
            debug_assert!(
                self.label[bw] == LABEL_T
                    || (self.label[bw] == LABEL_S
                        && self.labelend[bw] == self.mate[self.blossombase[bw]])
            );
            debug_assert!(self.labelend[bw] != NONE);
            w = self.endpoint[self.labelend[bw]];
            bw = self.inblossom[w];
        }
        debug_assert_eq!(self.label[bb], LABEL_S);
        self.blossomchilds[b] = path.clone();
        self.blossomendps[b] = endps;
        self.label[b] = LABEL_S;
        self.labelend[b] = self.labelend[bb];
        self.dualvar[b] = 0;
        let mut leaves = Vec::new();
        self.blossom_leaves(b, &mut leaves);
        for &leaf in &leaves {
            if self.label[self.inblossom[leaf]] == LABEL_T {
                self.queue.push(leaf);
            }
            self.inblossom[leaf] = b;
        }
        // Recompute best edges to neighbouring S-blossoms.
        let mut bestedgeto = vec![NONE; 2 * self.nvertex];
        for &bv in &path {
            let nblists: Vec<Vec<usize>> = if self.blossombestedges[bv].is_empty() {
                let mut lists = Vec::new();
                let mut lv = Vec::new();
                self.blossom_leaves(bv, &mut lv);
                for leaf in lv {
                    lists.push(self.neighbend[leaf].iter().map(|&p| p / 2).collect());
                }
                lists
            } else {
                vec![self.blossombestedges[bv].clone()]
            };
            for nblist in nblists {
                for k2 in nblist {
                    let (mut i, mut j, _) = self.edges[k2];
                    if self.inblossom[j] == b {
                        std::mem::swap(&mut i, &mut j);
                    }
                    let bj = self.inblossom[j];
                    if bj != b
                        && self.label[bj] == LABEL_S
                        && (bestedgeto[bj] == NONE || self.slack(k2) < self.slack(bestedgeto[bj]))
                    {
                        bestedgeto[bj] = k2;
                    }
                }
            }
            self.blossombestedges[bv].clear();
            self.bestedge[bv] = NONE;
        }
        self.blossombestedges[b] = bestedgeto.into_iter().filter(|&k2| k2 != NONE).collect();
        self.bestedge[b] = NONE;
        for idx in 0..self.blossombestedges[b].len() {
            let k2 = self.blossombestedges[b][idx];
            if self.bestedge[b] == NONE || self.slack(k2) < self.slack(self.bestedge[b]) {
                self.bestedge[b] = k2;
            }
        }
    }

    /// Expand a blossom whose dual variable reached zero (or any blossom at
    /// the end of a stage).
    fn expand_blossom(&mut self, b: usize, endstage: bool) {
        let childs = self.blossomchilds[b].clone();
        for &s in &childs {
            self.blossomparent[s] = NONE;
            if s < self.nvertex {
                self.inblossom[s] = s;
            } else if endstage && self.dualvar[s] == 0 {
                self.expand_blossom(s, endstage);
            } else {
                let mut leaves = Vec::new();
                self.blossom_leaves(s, &mut leaves);
                for leaf in leaves {
                    self.inblossom[leaf] = s;
                }
            }
        }
        if !endstage && self.label[b] == LABEL_T {
            // The expanded blossom sat on an alternating path; relabel the
            // even-position children along the path through it.
            debug_assert!(self.labelend[b] != NONE);
            let entrychild = self.inblossom[self.endpoint[self.labelend[b] ^ 1]];
            let childs = self.blossomchilds[b].clone();
            let endps = self.blossomendps[b].clone();
            let len = childs.len() as isize;
            let mut j = childs.iter().position(|&c| c == entrychild).unwrap() as isize;
            let (jstep, endptrick): (isize, usize) =
                if j & 1 != 0 { (1, 0) } else { (-1, 1) };
            if j & 1 != 0 {
                j -= len;
            }
            let idx = |x: isize| -> usize { x.rem_euclid(len) as usize };
            let mut p = self.labelend[b];
            while j != 0 {
                self.label[self.endpoint[p ^ 1]] = FREE;
                let q = endps[idx(j - endptrick as isize)] ^ endptrick ^ 1;
                self.label[self.endpoint[q]] = FREE;
                self.assign_label(self.endpoint[p ^ 1], LABEL_T, p);
                self.allowedge[endps[idx(j - endptrick as isize)] / 2] = true;
                j += jstep;
                p = endps[idx(j - endptrick as isize)] ^ endptrick;
                self.allowedge[p / 2] = true;
                j += jstep;
            }
            let bv = childs[idx(j)];
            self.label[self.endpoint[p ^ 1]] = LABEL_T;
            self.label[bv] = LABEL_T;
            self.labelend[self.endpoint[p ^ 1]] = p;
            self.labelend[bv] = p;
            self.bestedge[bv] = NONE;
            j += jstep;
            while childs[idx(j)] != entrychild {
                let bv = childs[idx(j)];
                if self.label[bv] == LABEL_S {
                    j += jstep;
                    continue;
                }
                let mut leaves = Vec::new();
                self.blossom_leaves(bv, &mut leaves);
                let mut vfound = NONE;
                for v in leaves {
                    if self.label[v] != FREE {
                        vfound = v;
                        break;
                    }
                }
                if vfound != NONE {
                    debug_assert_eq!(self.label[vfound], LABEL_T);
                    debug_assert_eq!(self.inblossom[vfound], bv);
                    self.label[vfound] = FREE;
                    self.label[self.endpoint[self.mate[self.blossombase[bv]]]] = FREE;
                    let pe = self.labelend[vfound];
                    self.assign_label(vfound, LABEL_T, pe);
                }
                j += jstep;
            }
        }
        self.label[b] = FREE;
        self.labelend[b] = NONE;
        self.blossomchilds[b].clear();
        self.blossomendps[b].clear();
        self.blossombase[b] = NONE;
        self.blossombestedges[b].clear();
        self.bestedge[b] = NONE;
        self.unusedblossoms.push(b);
    }

    /// Swap matched and unmatched edges along the path from vertex `v` to
    /// the base of blossom `b`.
    fn augment_blossom(&mut self, b: usize, v: usize) {
        let mut t = v;
        while self.blossomparent[t] != b {
            t = self.blossomparent[t];
        }
        if t >= self.nvertex {
            self.augment_blossom(t, v);
        }
        let childs = self.blossomchilds[b].clone();
        let endps = self.blossomendps[b].clone();
        let len = childs.len() as isize;
        let i = childs.iter().position(|&c| c == t).unwrap() as isize;
        let mut j = i;
        let (jstep, endptrick): (isize, usize) =
            if i & 1 != 0 { (1, 0) } else { (-1, 1) };
        if i & 1 != 0 {
            j -= len;
        }
        let idx = |x: isize| -> usize { x.rem_euclid(len) as usize };
        while j != 0 {
            j += jstep;
            let t1 = childs[idx(j)];
            let p = endps[idx(j - endptrick as isize)] ^ endptrick;
            if t1 >= self.nvertex {
                self.augment_blossom(t1, self.endpoint[p]);
            }
            j += jstep;
            let t2 = childs[idx(j)];
            if t2 >= self.nvertex {
                self.augment_blossom(t2, self.endpoint[p ^ 1]);
            }
            self.mate[self.endpoint[p]] = p ^ 1;
            self.mate[self.endpoint[p ^ 1]] = p;
        }
        // Rotate the child list so the new base comes first.
        let i = i.rem_euclid(len) as usize;
        self.blossomchilds[b].rotate_left(i);
        self.blossomendps[b].rotate_left(i);
        self.blossombase[b] = self.blossombase[self.blossomchilds[b][0]];
        debug_assert_eq!(self.blossombase[b], v);
    }

    /// Augment the matching along the path through tight edge `k`.
    fn augment_matching(&mut self, k: usize) {
        let (v, w, _) = self.edges[k];
        for (mut s, mut p) in [(v, 2 * k + 1), (w, 2 * k)] {
            loop {
                let bs = self.inblossom[s];
                debug_assert_eq!(self.label[bs], LABEL_S);
                debug_assert_eq!(self.labelend[bs], self.mate[self.blossombase[bs]]);
                if bs >= self.nvertex {
                    self.augment_blossom(bs, s);
                }
                self.mate[s] = p;
                if self.labelend[bs] == NONE {
                    break;
                }
                let t = self.endpoint[self.labelend[bs]];
                let bt = self.inblossom[t];
                debug_assert_eq!(self.label[bt], LABEL_T);
                debug_assert!(self.labelend[bt] != NONE);
                s = self.endpoint[self.labelend[bt]];
                let j = self.endpoint[self.labelend[bt] ^ 1];
                debug_assert_eq!(self.blossombase[bt], t);
                if bt >= self.nvertex {
                    self.augment_blossom(bt, j);
                }
                self.mate[j] = self.labelend[bt];
                p = self.labelend[bt] ^ 1;
            }
        }
    }

    /// Run the algorithm; returns `mate[v]` = matched vertex or
    /// [`UNMATCHED`].
    pub fn solve(mut self) -> Vec<usize> {
        if self.nedge == 0 {
            return vec![UNMATCHED; self.nvertex];
        }
        for _stage in 0..self.nvertex {
            self.label.iter_mut().for_each(|l| *l = FREE);
            self.bestedge.iter_mut().for_each(|e| *e = NONE);
            for list in self.blossombestedges[self.nvertex..].iter_mut() {
                list.clear();
            }
            self.allowedge.iter_mut().for_each(|a| *a = false);
            self.queue.clear();
            for v in 0..self.nvertex {
                if self.mate[v] == NONE && self.label[self.inblossom[v]] == FREE {
                    self.assign_label(v, LABEL_S, NONE);
                }
            }
            let mut augmented = false;
            loop {
                while let Some(v) = self.queue.pop() {
                    if augmented {
                        break;
                    }
                    debug_assert_eq!(self.label[self.inblossom[v]], LABEL_S);
                    let neighbors = self.neighbend[v].clone();
                    for p in neighbors {
                        let k = p / 2;
                        let w = self.endpoint[p];
                        if self.inblossom[v] == self.inblossom[w] {
                            continue;
                        }
                        let mut kslack = 0;
                        if !self.allowedge[k] {
                            kslack = self.slack(k);
                            if kslack <= 0 {
                                self.allowedge[k] = true;
                            }
                        }
                        if self.allowedge[k] {
                            if self.label[self.inblossom[w]] == FREE {
                                self.assign_label(w, LABEL_T, p ^ 1);
                            } else if self.label[self.inblossom[w]] == LABEL_S {
                                let base = self.scan_blossom(v, w);
                                if base != NONE {
                                    self.add_blossom(base, k);
                                } else {
                                    self.augment_matching(k);
                                    augmented = true;
                                    break;
                                }
                            } else if self.label[w] == FREE {
                                debug_assert_eq!(self.label[self.inblossom[w]], LABEL_T);
                                self.label[w] = LABEL_T;
                                self.labelend[w] = p ^ 1;
                            }
                        } else if self.label[self.inblossom[w]] == LABEL_S {
                            let b = self.inblossom[v];
                            if self.bestedge[b] == NONE || kslack < self.slack(self.bestedge[b]) {
                                self.bestedge[b] = k;
                            }
                        } else if self.label[w] == FREE
                            && (self.bestedge[w] == NONE || kslack < self.slack(self.bestedge[w]))
                        {
                            self.bestedge[w] = k;
                        }
                    }
                    if augmented {
                        break;
                    }
                }
                if augmented {
                    break;
                }
                // Forest is stuck: compute the dual adjustment.
                let mut deltatype = -1i32;
                let mut delta = 0i64;
                let mut deltaedge = NONE;
                let mut deltablossom = NONE;
                if !self.max_cardinality {
                    deltatype = 1;
                    delta = *self.dualvar[..self.nvertex].iter().min().unwrap();
                }
                for v in 0..self.nvertex {
                    if self.label[self.inblossom[v]] == FREE && self.bestedge[v] != NONE {
                        let d = self.slack(self.bestedge[v]);
                        if deltatype == -1 || d < delta {
                            delta = d;
                            deltatype = 2;
                            deltaedge = self.bestedge[v];
                        }
                    }
                }
                for b in 0..2 * self.nvertex {
                    if self.blossomparent[b] == NONE
                        && self.label[b] == LABEL_S
                        && self.bestedge[b] != NONE
                    {
                        let kslack = self.slack(self.bestedge[b]);
                        debug_assert_eq!(kslack % 2, 0);
                        let d = kslack / 2;
                        if deltatype == -1 || d < delta {
                            delta = d;
                            deltatype = 3;
                            deltaedge = self.bestedge[b];
                        }
                    }
                }
                for b in self.nvertex..2 * self.nvertex {
                    if self.blossombase[b] != NONE
                        && self.blossomparent[b] == NONE
                        && self.label[b] == LABEL_T
                        && (deltatype == -1 || self.dualvar[b] < delta)
                    {
                        delta = self.dualvar[b];
                        deltatype = 4;
                        deltablossom = b;
                    }
                }
                if deltatype == -1 {
                    // No further improvement possible (max-cardinality).
                    deltatype = 1;
                    delta = self.dualvar[..self.nvertex].iter().min().unwrap().max(&0).to_owned();
                }
                for v in 0..self.nvertex {
                    match self.label[self.inblossom[v]] {
                        l if l == LABEL_S => self.dualvar[v] -= delta,
                        l if l == LABEL_T => self.dualvar[v] += delta,
                        _ => {}
                    }
                }
                for b in self.nvertex..2 * self.nvertex {
                    if self.blossombase[b] != NONE && self.blossomparent[b] == NONE {
                        match self.label[b] {
                            l if l == LABEL_S => self.dualvar[b] += delta,
                            l if l == LABEL_T => self.dualvar[b] -= delta,
                            _ => {}
                        }
                    }
                }
                match deltatype {
                    1 => break,
                    2 => {
                        self.allowedge[deltaedge] = true;
                        let (mut i, j, _) = self.edges[deltaedge];
                        if self.label[self.inblossom[i]] == FREE {
                            i = j;
                        }
                        debug_assert_eq!(self.label[self.inblossom[i]], LABEL_S);
                        self.queue.push(i);
                    }
                    3 => {
                        self.allowedge[deltaedge] = true;
                        let (i, _, _) = self.edges[deltaedge];
                        debug_assert_eq!(self.label[self.inblossom[i]], LABEL_S);
                        self.queue.push(i);
                    }
                    _ => {
                        self.expand_blossom(deltablossom, false);
                    }
                }
            }
            if !augmented {
                break;
            }
            for b in self.nvertex..2 * self.nvertex {
                if self.blossomparent[b] == NONE
                    && self.blossombase[b] != NONE
                    && self.label[b] == LABEL_S
                    && self.dualvar[b] == 0
                {
                    self.expand_blossom(b, true);
                }
            }
        }
        let mut mate_vertex = vec![UNMATCHED; self.nvertex];
        for v in 0..self.nvertex {
            if self.mate[v] != NONE {
                mate_vertex[v] = self.endpoint[self.mate[v]];
            }
        }
        for v in 0..self.nvertex {
            debug_assert!(mate_vertex[v] == UNMATCHED || mate_vertex[mate_vertex[v]] == v);
        }
        mate_vertex
    }
}

/// Maximum-weight matching of an undirected weighted graph.
///
/// `edges` lists `(u, v, weight)` with `u != v` and at most one edge per
/// pair. Returns `mate[v]` = matched partner or [`UNMATCHED`].
pub fn max_weight_matching(
    nvertex: usize,
    edges: Vec<(usize, usize, i64)>,
    max_cardinality: bool,
) -> Vec<usize> {
    Matching::new(nvertex, edges, max_cardinality).solve()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mates(edges: &[(usize, usize, i64)], maxcard: bool) -> Vec<i64> {
        let n = edges.iter().map(|&(i, j, _)| i.max(j) + 1).max().unwrap_or(0);
        max_weight_matching(n, edges.to_vec(), maxcard)
            .into_iter()
            .map(|m| if m == UNMATCHED { -1 } else { m as i64 })
            .collect()
    }

    #[test]
    fn trivial_cases() {
        assert_eq!(mates(&[], false), Vec::<i64>::new());
        assert_eq!(mates(&[(0, 1, 1)], false), vec![1, 0]);
        assert_eq!(mates(&[(1, 2, 10), (2, 3, 11)], false), vec![-1, -1, 3, 2]);
        assert_eq!(
            mates(&[(1, 2, 5), (2, 3, 11), (3, 4, 5)], false),
            vec![-1, -1, 3, 2, -1]
        );
    }

    #[test]
    fn max_cardinality_changes_the_answer() {
        assert_eq!(
            mates(&[(1, 2, 5), (2, 3, 11), (3, 4, 5)], true),
            vec![-1, 2, 1, 4, 3]
        );
    }

    #[test]
    fn negative_weights() {
        let e = [(1, 2, 2), (1, 3, -2), (2, 3, 1), (2, 4, -1), (3, 4, -6)];
        assert_eq!(mates(&e, false), vec![-1, 2, 1, -1, -1]);
        assert_eq!(mates(&e, true), vec![-1, 3, 4, 1, 2]);
    }

    #[test]
    fn s_blossom_cases() {
        assert_eq!(
            mates(&[(1, 2, 8), (1, 3, 9), (2, 3, 10), (3, 4, 7)], false),
            vec![-1, 2, 1, 4, 3]
        );
        assert_eq!(
            mates(
                &[(1, 2, 8), (1, 3, 9), (2, 3, 10), (3, 4, 7), (1, 6, 5), (4, 5, 6)],
                false
            ),
            vec![-1, 6, 3, 2, 5, 4, 1]
        );
    }

    #[test]
    fn s_blossom_relabelled_as_t() {
        assert_eq!(
            mates(
                &[(1, 2, 9), (1, 3, 8), (2, 3, 10), (1, 4, 5), (4, 5, 4), (1, 6, 3)],
                false
            ),
            vec![-1, 6, 3, 2, 5, 4, 1]
        );
        assert_eq!(
            mates(
                &[(1, 2, 9), (1, 3, 8), (2, 3, 10), (1, 4, 5), (4, 5, 3), (1, 6, 4)],
                false
            ),
            vec![-1, 6, 3, 2, 5, 4, 1]
        );
        assert_eq!(
            mates(
                &[(1, 2, 9), (1, 3, 8), (2, 3, 10), (1, 4, 5), (4, 5, 3), (3, 6, 4)],
                false
            ),
            vec![-1, 2, 1, 6, 5, 4, 3]
        );
    }

    #[test]
    fn nested_s_blossom() {
        assert_eq!(
            mates(
                &[
                    (1, 2, 9),
                    (1, 3, 9),
                    (2, 3, 10),
                    (2, 4, 8),
                    (3, 5, 8),
                    (4, 5, 10),
                    (5, 6, 6)
                ],
                false
            ),
            vec![-1, 3, 4, 1, 2, 6, 5]
        );
    }

    #[test]
    fn s_blossom_relabelled_as_s() {
        assert_eq!(
            mates(
                &[
                    (1, 2, 10),
                    (1, 7, 10),
                    (2, 3, 12),
                    (3, 4, 20),
                    (3, 5, 20),
                    (4, 5, 25),
                    (5, 6, 10),
                    (6, 7, 10),
                    (7, 8, 8)
                ],
                false
            ),
            vec![-1, 2, 1, 4, 3, 6, 5, 8, 7]
        );
    }

    #[test]
    fn nested_s_blossom_expands() {
        assert_eq!(
            mates(
                &[
                    (1, 2, 8),
                    (1, 3, 8),
                    (2, 3, 10),
                    (2, 4, 12),
                    (3, 5, 12),
                    (4, 5, 14),
                    (4, 6, 12),
                    (5, 7, 12),
                    (6, 7, 14),
                    (7, 8, 12)
                ],
                false
            ),
            vec![-1, 2, 1, 5, 6, 3, 4, 8, 7]
        );
    }

    #[test]
    fn s_blossom_relabelled_as_t_blossom() {
        assert_eq!(
            mates(
                &[
                    (1, 2, 23),
                    (1, 5, 22),
                    (1, 6, 15),
                    (2, 3, 25),
                    (3, 4, 22),
                    (4, 5, 25),
                    (4, 8, 14),
                    (5, 7, 13)
                ],
                false
            ),
            vec![-1, 6, 3, 2, 8, 7, 1, 5, 4]
        );
        assert_eq!(
            mates(
                &[
                    (1, 2, 19),
                    (1, 5, 20),
                    (1, 8, 8),
                    (2, 3, 25),
                    (3, 4, 18),
                    (4, 5, 18),
                    (4, 7, 13),
                    (5, 6, 7)
                ],
                false
            ),
            vec![-1, 8, 3, 2, 7, 6, 5, 4, 1]
        );
    }

    #[test]
    fn nasty_blossom_expansion_cases() {
        // Create a blossom, relabel as T in more than one way, expand,
        // augment.
        assert_eq!(
            mates(
                &[
                    (1, 2, 45),
                    (1, 5, 45),
                    (2, 3, 50),
                    (3, 4, 45),
                    (4, 5, 50),
                    (1, 6, 30),
                    (3, 9, 35),
                    (4, 8, 35),
                    (5, 7, 26),
                    (9, 10, 5)
                ],
                false
            ),
            vec![-1, 6, 3, 2, 8, 7, 1, 5, 4, 10, 9]
        );
        assert_eq!(
            mates(
                &[
                    (1, 2, 45),
                    (1, 5, 45),
                    (2, 3, 50),
                    (3, 4, 45),
                    (4, 5, 50),
                    (1, 6, 30),
                    (3, 9, 35),
                    (4, 8, 26),
                    (5, 7, 40),
                    (9, 10, 5)
                ],
                false
            ),
            vec![-1, 6, 3, 2, 8, 7, 1, 5, 4, 10, 9]
        );
        assert_eq!(
            mates(
                &[
                    (1, 2, 45),
                    (1, 5, 45),
                    (2, 3, 50),
                    (3, 4, 45),
                    (4, 5, 50),
                    (1, 6, 30),
                    (3, 9, 35),
                    (4, 8, 28),
                    (5, 7, 26),
                    (9, 10, 5)
                ],
                false
            ),
            vec![-1, 6, 3, 2, 8, 7, 1, 5, 4, 10, 9]
        );
    }
}
