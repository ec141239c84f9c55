//! Integer algebra of the space-time detector lattice, torus embeddings,
//! vortex delays, and schedule validity constraints.
//!
//! # Coordinate conventions
//!
//! Plaquettes of the honeycomb live on a triangular lattice indexed by
//! `(i, j)`, with color class `(i - j) mod 3` (0 = red, 1 = blue, 2 = green).
//! Qubits sit on the two triangle sublattices: `Up(i, j)` at barycentric
//! position `(i + 1/3, j + 1/3)` and `Down(i, j)` at `(i + 2/3, j + 2/3)`.
//! Bonds are anchored at their up-triangle qubit and come in three kinds:
//!
//! - kind 0 (class `c`): `Up(i,j)-Down(i,j)`, center `(i+1/2, j+1/2)`,
//!   connecting plaquettes `(i,j)` and `(i+1,j+1)`;
//! - kind 1 (class `c+1`): `Up(i,j)-Down(i-1,j)`, center `(i, j+1/2)`,
//!   connecting `(i+1,j)` and `(i-1,j+1)`;
//! - kind 2 (class `c+2`): `Up(i,j)-Down(i,j-1)`, center `(i+1/2, j)`,
//!   connecting `(i,j+1)` and `(i+1,j-1)`.
//!
//! The measurement sequence visits color classes in decreasing order with
//! alternating bases: step `s` of the six-step cycle measures class
//! `(-s) mod 3` in basis X for even `s` and Z for odd `s`, so class `c` is
//! measured in X at step `2c mod 6` and in Z at step `(2c+3) mod 6`. One
//! X detector per plaquette per period sits at `t = 2(i-j) mod 6`.
//!
//! Half-integer bond offsets are passed around as doubled integers so all
//! feasibility decisions stay in exact arithmetic.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::intmath::{column_hnf_2x2, floor_div};
use crate::Result;

/// Exact rational used for delays and times.
pub type Rational = Ratio<i64>;

/// Integer displacement `(i, j, t)` on the detector lattice. One measurement
/// step is one unit of `t`; the measurement period is [`PERIOD`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SpacetimeVec {
    pub i: i64,
    pub j: i64,
    pub t: i64,
}

/// Measurement period of the six-step cycle.
pub const PERIOD: i64 = 6;

impl SpacetimeVec {
    pub const fn new(i: i64, j: i64, t: i64) -> Self {
        SpacetimeVec { i, j, t }
    }

    pub const ZERO: SpacetimeVec = SpacetimeVec::new(0, 0, 0);

    /// True iff this vector connects two X-detector vertices,
    /// i.e. `t = 2(i - j) mod 6`.
    pub fn is_detector_displacement(&self) -> bool {
        (self.t - 2 * (self.i - self.j)).rem_euclid(PERIOD) == 0
    }

    pub fn scaled(&self, k: i64) -> SpacetimeVec {
        SpacetimeVec::new(self.i * k, self.j * k, self.t * k)
    }

    pub fn norm2(&self) -> i64 {
        self.i * self.i + self.j * self.j + self.t * self.t
    }

    pub fn dot(&self, other: &SpacetimeVec) -> i64 {
        self.i * other.i + self.j * other.j + self.t * other.t
    }
}

impl std::ops::Add for SpacetimeVec {
    type Output = SpacetimeVec;
    fn add(self, rhs: SpacetimeVec) -> SpacetimeVec {
        SpacetimeVec::new(self.i + rhs.i, self.j + rhs.j, self.t + rhs.t)
    }
}

impl std::ops::Sub for SpacetimeVec {
    type Output = SpacetimeVec;
    fn sub(self, rhs: SpacetimeVec) -> SpacetimeVec {
        SpacetimeVec::new(self.i - rhs.i, self.j - rhs.j, self.t - rhs.t)
    }
}

impl std::ops::Neg for SpacetimeVec {
    type Output = SpacetimeVec;
    fn neg(self) -> SpacetimeVec {
        SpacetimeVec::new(-self.i, -self.j, -self.t)
    }
}

impl fmt::Display for SpacetimeVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.i, self.j, self.t)
    }
}

/// Code parameters `[[N, K, D]]` plus the qubit-cost figure of merit
/// `R = N / D^2` kept as an exact rational.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeParams {
    pub n: i64,
    pub k: i64,
    pub d: i64,
    pub r: Rational,
}

/// Torus embedding in superlattice form.
///
/// The identification vectors are `L1 = (c1 + 3 d1, c1, -6 n1)` and
/// `L2 = (c2 + 3 d2, c2, -6 n2)`; `n1`, `n2` count the time vortices
/// inserted around each direction of the torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Embedding {
    c1: i64,
    d1: i64,
    n1: i64,
    c2: i64,
    d2: i64,
    n2: i64,
}

impl Embedding {
    /// Build an embedding from superlattice coefficients and vortex counts.
    ///
    /// Fails with [`Error::DegenerateBasis`] when the two identification
    /// vectors do not span a rank-2 spatial lattice.
    pub fn new(c1: i64, d1: i64, n1: i64, c2: i64, d2: i64, n2: i64) -> Result<Self> {
        let emb = Embedding { c1, d1, n1, c2, d2, n2 };
        if emb.det() == 0 {
            return Err(Error::DegenerateBasis);
        }
        Ok(emb)
    }

    /// Build an embedding from explicit identification vectors.
    ///
    /// Each vector must have the superlattice form `(c + 3d, c, -6n)`:
    /// first component congruent to the second mod 3 and time component a
    /// multiple of 6.
    pub fn from_vectors(l1: SpacetimeVec, l2: SpacetimeVec) -> Result<Self> {
        for v in [&l1, &l2] {
            if (v.i - v.j).rem_euclid(3) != 0 {
                return Err(Error::InvalidEmbedding(format!(
                    "{v} is not a superlattice vector (needs i = j mod 3)"
                )));
            }
            if v.t % PERIOD != 0 {
                return Err(Error::InvalidEmbedding(format!(
                    "{v} has a time component not divisible by {PERIOD}"
                )));
            }
        }
        Embedding::new(
            l1.j,
            (l1.i - l1.j) / 3,
            -l1.t / PERIOD,
            l2.j,
            (l2.i - l2.j) / 3,
            -l2.t / PERIOD,
        )
    }

    pub fn coefficients(&self) -> (i64, i64, i64, i64, i64, i64) {
        (self.c1, self.d1, self.n1, self.c2, self.d2, self.n2)
    }

    pub fn vortex_counts(&self) -> (i64, i64) {
        (self.n1, self.n2)
    }

    pub fn l1(&self) -> SpacetimeVec {
        SpacetimeVec::new(self.c1 + 3 * self.d1, self.c1, -PERIOD * self.n1)
    }

    pub fn l2(&self) -> SpacetimeVec {
        SpacetimeVec::new(self.c2 + 3 * self.d2, self.c2, -PERIOD * self.n2)
    }

    /// Spatial determinant `a1 b2 - a2 b1 = 3 (d1 c2 - d2 c1)`.
    pub fn det(&self) -> i64 {
        let l1 = self.l1();
        let l2 = self.l2();
        l1.i * l2.j - l2.i * l1.j
    }

    /// Number of physical qubits, `N = 2 |a1 b2 - a2 b1|`.
    pub fn qubit_count(&self) -> i64 {
        2 * self.det().abs()
    }

    /// Number of plaquettes (`N / 2`).
    pub fn plaquette_count(&self) -> i64 {
        self.det().abs()
    }

    /// Delay induced by the time vortices between two bonds separated by the
    /// spatial offset `(di2/2, dj2/2)`. Offsets are passed doubled so the
    /// half-integer bond offsets stay integer.
    pub fn vortex_delay(&self, di2: i64, dj2: i64) -> Rational {
        let l1 = self.l1();
        let l2 = self.l2();
        let (a1, b1) = (l1.i, l1.j);
        let (a2, b2) = (l2.i, l2.j);
        let num = 3 * (self.n1 * (b2 * di2 - a2 * dj2) + self.n2 * (a1 * dj2 - b1 * di2));
        Ratio::new(num, self.det())
    }

    /// The three delays between consecutively measured bonds incident to a
    /// qubit, at doubled offsets `(1,0)`, `(-1,1)`, `(0,-1)`.
    pub fn consecutive_delays(&self) -> [Rational; 3] {
        [
            self.vortex_delay(1, 0),
            self.vortex_delay(-1, 1),
            self.vortex_delay(0, -1),
        ]
    }

    /// True iff all three consecutive-bond delays lie strictly inside
    /// `(-1, 5)`, i.e. the vortexed schedule preserves the local measurement
    /// order around every qubit.
    pub fn check_vortex_constraints(&self) -> bool {
        let lo = Ratio::from_integer(-1);
        let hi = Ratio::from_integer(5);
        self.consecutive_delays().iter().all(|dt| *dt > lo && *dt < hi)
    }

    // ----- fundamental domain -------------------------------------------

    /// The two lattice vectors whose spatial parts are the column HNF of the
    /// spatial identification lattice. Used for canonical coset
    /// representatives of plaquettes, qubits, and detectors.
    pub(crate) fn hnf_generators(&self) -> [SpacetimeVec; 2] {
        let l1 = self.l1();
        let l2 = self.l2();
        let h = column_hnf_2x2(l1.i, l1.j, l2.i, l2.j);
        // Express the HNF columns in terms of (l1, l2) to carry the time
        // components along: solve [l1s l2s] * u = h_col for integer u.
        let det = self.det();
        let solve = |hx: i64, hy: i64| -> SpacetimeVec {
            let u1_num = hx * l2.j - hy * l2.i;
            let u2_num = l1.i * hy - l1.j * hx;
            debug_assert_eq!(u1_num % det, 0);
            debug_assert_eq!(u2_num % det, 0);
            let u1 = u1_num / det;
            let u2 = u2_num / det;
            l1.scaled(u1) + l2.scaled(u2)
        };
        [solve(h.a, h.c), solve(h.b, h.d)]
    }

    /// Spatial extents `(h11, h22)` of the HNF fundamental domain.
    pub(crate) fn domain_extents(&self) -> (i64, i64) {
        let [g1, g2] = self.hnf_generators();
        debug_assert_eq!(g2.i, 0);
        (g1.i, g2.j)
    }

    /// Reduce a lattice point into the HNF fundamental domain.
    ///
    /// Returns the representative; the input differs from it by a lattice
    /// vector, and for detector points the time component of the
    /// representative is the canonical detector time.
    pub fn reduce_point(&self, p: SpacetimeVec) -> SpacetimeVec {
        let [g1, g2] = self.hnf_generators();
        let k1 = floor_div(p.i, g1.i);
        let p1 = p - g1.scaled(k1);
        let k2 = floor_div(p1.j, g2.j);
        p1 - g2.scaled(k2)
    }

    /// Fractional-coordinate integer parts of a spatial point in the
    /// `(L1, L2)` basis: `m_k = floor(alpha_k)` where
    /// `(i, j) = alpha_1 L1s + alpha_2 L2s`.
    pub fn coefficient_floors(&self, i: i64, j: i64) -> (i64, i64) {
        let l1 = self.l1();
        let l2 = self.l2();
        let det = self.det();
        let m1 = floor_div(i * l2.j - j * l2.i, det);
        let m2 = floor_div(l1.i * j - l1.j * i, det);
        (m1, m2)
    }

    /// All plaquette representatives of the fundamental domain in index
    /// order.
    pub fn plaquettes(&self) -> Vec<(i64, i64)> {
        let (h11, h22) = self.domain_extents();
        let mut out = Vec::with_capacity((h11 * h22) as usize);
        for x in 0..h11 {
            for y in 0..h22 {
                out.push((x, y));
            }
        }
        out
    }

    /// Index of a plaquette representative inside [`Self::plaquettes`].
    pub fn plaquette_index(&self, x: i64, y: i64) -> usize {
        let (_h11, h22) = self.domain_extents();
        (x * h22 + y) as usize
    }

    // ----- schedule ------------------------------------------------------

    /// Emit one entry per bond of the fundamental domain per basis per
    /// cycle, with exact rational times in `[0, 6)`.
    ///
    /// Fails with [`Error::InvalidVortexCount`] when the vortex constraints
    /// are violated (the emitted order would not match the vortex-free local
    /// sequence).
    pub fn schedule(&self) -> Result<Vec<ScheduleEntry>> {
        if !self.check_vortex_constraints() {
            return Err(Error::InvalidVortexCount);
        }
        let mut entries = Vec::new();
        for &(x, y) in &self.plaquettes() {
            for kind in 0..3u8 {
                let bond = Bond { anchor: (x, y), kind };
                let class = bond.class();
                let (cx2, cy2) = bond.center_doubled();
                let delay = self.vortex_delay(cx2, cy2);
                for (basis, step) in [(Basis::X, x_step(class)), (Basis::Z, z_step(class))] {
                    let t = (Ratio::from_integer(step) + delay) % Ratio::from_integer(PERIOD);
                    let t = if t < Ratio::from_integer(0) {
                        t + Ratio::from_integer(PERIOD)
                    } else {
                        t
                    };
                    entries.push(ScheduleEntry {
                        bond_id: (3 * self.plaquette_index(x, y) + kind as usize) as u32,
                        color: Color::from_class(class),
                        basis,
                        time_in_cycle: t,
                    });
                }
            }
        }
        Ok(entries)
    }

    /// Check directly that the cyclic measurement order around every qubit
    /// of the fundamental domain matches the vortex-free sequence. This is
    /// the defining property that [`Self::check_vortex_constraints`]
    /// certifies algebraically.
    pub fn local_order_preserved(&self) -> bool {
        for &(x, y) in &self.plaquettes() {
            for qubit in [Qubit::Up(x, y), Qubit::Down(x, y)] {
                // The six events of one cycle in vortex-free step order;
                // event k happens at step k plus the bond's delay.
                let mut times = Vec::with_capacity(6);
                for step in 0..PERIOD {
                    let class = (-step).rem_euclid(3);
                    let bond = qubit.bond_of_class(class);
                    let (cx2, cy2) = bond.center_doubled();
                    times.push(Ratio::from_integer(step) + self.vortex_delay(cx2, cy2));
                }
                // Order preserved iff every consecutive gap is positive,
                // including the wrap back to event 0 one period later.
                for k in 0..6 {
                    let next = if k == 5 {
                        times[0] + Ratio::from_integer(PERIOD)
                    } else {
                        times[k + 1]
                    };
                    if next - times[k] <= Ratio::from_integer(0) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl Serialize for Embedding {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Embedding", 9)?;
        s.serialize_field("c1", &self.c1)?;
        s.serialize_field("d1", &self.d1)?;
        s.serialize_field("n1", &self.n1)?;
        s.serialize_field("c2", &self.c2)?;
        s.serialize_field("d2", &self.d2)?;
        s.serialize_field("n2", &self.n2)?;
        let l1 = self.l1();
        let l2 = self.l2();
        s.serialize_field("L1", &[l1.i, l1.j, l1.t])?;
        s.serialize_field("L2", &[l2.i, l2.j, l2.t])?;
        s.serialize_field("N", &self.qubit_count())?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for Embedding {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            c1: i64,
            d1: i64,
            n1: i64,
            c2: i64,
            d2: i64,
            n2: i64,
        }
        let raw = Raw::deserialize(deserializer)?;
        Embedding::new(raw.c1, raw.d1, raw.n1, raw.c2, raw.d2, raw.n2)
            .map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L1={} L2={}", self.l1(), self.l2())
    }
}

/// Plaquette color class: `(i - j) mod 3`.
pub fn color_class(i: i64, j: i64) -> i64 {
    (i - j).rem_euclid(3)
}

/// Step of the cycle at which class `c` bonds are measured in the X basis.
pub fn x_step(class: i64) -> i64 {
    (2 * class).rem_euclid(PERIOD)
}

/// Step of the cycle at which class `c` bonds are measured in the Z basis.
pub fn z_step(class: i64) -> i64 {
    (2 * class + 3).rem_euclid(PERIOD)
}

/// Bond color as printed in schedules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Color {
    R,
    G,
    B,
}

impl Color {
    pub fn from_class(class: i64) -> Color {
        match class.rem_euclid(3) {
            0 => Color::R,
            1 => Color::B,
            _ => Color::G,
        }
    }

    pub fn as_char(&self) -> char {
        match self {
            Color::R => 'r',
            Color::G => 'g',
            Color::B => 'b',
        }
    }
}

/// Measurement basis of a check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Basis {
    X,
    Z,
}

impl Basis {
    pub fn as_char(&self) -> char {
        match self {
            Basis::X => 'x',
            Basis::Z => 'z',
        }
    }
}

/// One scheduled measurement of the fundamental domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScheduleEntry {
    pub bond_id: u32,
    pub color: Color,
    pub basis: Basis,
    pub time_in_cycle: Rational,
}

/// A bond anchored at its up-triangle qubit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bond {
    /// Anchor plaquette `(i, j)` of the up qubit.
    pub anchor: (i64, i64),
    /// Bond kind 0, 1, or 2; the class is `class(anchor) + kind`.
    pub kind: u8,
}

impl Bond {
    pub fn class(&self) -> i64 {
        (color_class(self.anchor.0, self.anchor.1) + self.kind as i64).rem_euclid(3)
    }

    /// Bond center in doubled lattice coordinates.
    pub fn center_doubled(&self) -> (i64, i64) {
        let (x, y) = self.anchor;
        match self.kind {
            0 => (2 * x + 1, 2 * y + 1),
            1 => (2 * x, 2 * y + 1),
            _ => (2 * x + 1, 2 * y),
        }
    }

    /// The two same-class plaquettes at the ends of the bond.
    pub fn end_plaquettes(&self) -> [(i64, i64); 2] {
        let (x, y) = self.anchor;
        match self.kind {
            0 => [(x, y), (x + 1, y + 1)],
            1 => [(x + 1, y), (x - 1, y + 1)],
            _ => [(x, y + 1), (x + 1, y - 1)],
        }
    }

    /// The two adjacent plaquettes sharing the bond, of classes
    /// `class + 1` and `class + 2`.
    pub fn side_plaquettes(&self) -> [(i64, i64); 2] {
        let (x, y) = self.anchor;
        match self.kind {
            0 => [(x + 1, y), (x, y + 1)],
            1 => [(x, y), (x, y + 1)],
            _ => [(x, y), (x + 1, y)],
        }
    }

    /// The two qubits of the bond.
    pub fn qubits(&self) -> [Qubit; 2] {
        let (x, y) = self.anchor;
        match self.kind {
            0 => [Qubit::Up(x, y), Qubit::Down(x, y)],
            1 => [Qubit::Up(x, y), Qubit::Down(x - 1, y)],
            _ => [Qubit::Up(x, y), Qubit::Down(x, y - 1)],
        }
    }
}

/// A qubit on one of the two triangle sublattices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Qubit {
    Up(i64, i64),
    Down(i64, i64),
}

impl Qubit {
    /// The three plaquettes this qubit touches.
    pub fn plaquettes(&self) -> [(i64, i64); 3] {
        match *self {
            Qubit::Up(x, y) => [(x, y), (x + 1, y), (x, y + 1)],
            Qubit::Down(x, y) => [(x + 1, y), (x, y + 1), (x + 1, y + 1)],
        }
    }

    /// The incident bond of the given color class.
    pub fn bond_of_class(&self, class: i64) -> Bond {
        let class = class.rem_euclid(3);
        match *self {
            Qubit::Up(x, y) => {
                let c = color_class(x, y);
                Bond { anchor: (x, y), kind: (class - c).rem_euclid(3) as u8 }
            }
            Qubit::Down(x, y) => {
                let c = color_class(x, y);
                if class == c {
                    Bond { anchor: (x, y), kind: 0 }
                } else if class == (c + 2).rem_euclid(3) {
                    Bond { anchor: (x + 1, y), kind: 1 }
                } else {
                    Bond { anchor: (x, y + 1), kind: 2 }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn emb(c1: i64, d1: i64, n1: i64, c2: i64, d2: i64, n2: i64) -> Embedding {
        Embedding::new(c1, d1, n1, c2, d2, n2).unwrap()
    }

    #[test]
    fn derived_vectors_match_known_configurations() {
        let e = emb(0, 1, 0, 3, -1, 0);
        assert_eq!(e.l1(), SpacetimeVec::new(3, 0, 0));
        assert_eq!(e.l2(), SpacetimeVec::new(0, 3, 0));
        assert_eq!(e.qubit_count(), 18);

        let e = emb(0, 1, 1, -5, 2, 0);
        assert_eq!(e.l1(), SpacetimeVec::new(3, 0, -6));
        assert_eq!(e.l2(), SpacetimeVec::new(1, -5, 0));
        assert_eq!(e.qubit_count(), 30);

        let e = emb(1, 0, 0, -1, 1, 0);
        assert_eq!(e.l1(), SpacetimeVec::new(1, 1, 0));
        assert_eq!(e.l2(), SpacetimeVec::new(2, -1, 0));
        assert_eq!(e.qubit_count(), 6);
    }

    #[test]
    fn degenerate_basis_is_rejected() {
        assert_eq!(Embedding::new(1, 1, 0, 2, 2, 0), Err(Error::DegenerateBasis));
        assert_eq!(Embedding::new(0, 0, 0, 0, 0, 0), Err(Error::DegenerateBasis));
    }

    #[test]
    fn from_vectors_validates_superlattice_form() {
        let e = Embedding::from_vectors(SpacetimeVec::new(4, 1, 0), SpacetimeVec::new(1, -5, 0))
            .unwrap();
        assert_eq!(e.l1(), SpacetimeVec::new(4, 1, 0));
        assert_eq!(e.qubit_count(), 42);
        // (1, 0, 0) is not a superlattice vector.
        assert!(Embedding::from_vectors(SpacetimeVec::new(1, 0, 0), SpacetimeVec::new(0, 3, 0))
            .is_err());
        // Time component must be a multiple of 6.
        assert!(Embedding::from_vectors(SpacetimeVec::new(3, 0, -3), SpacetimeVec::new(0, 3, 0))
            .is_err());
    }

    #[test]
    fn qubit_count_scales_quadratically() {
        // N = 762 for the x = 1 member of the best vortexed family.
        let e = Embedding::from_vectors(
            SpacetimeVec::new(19, 1, 36),
            SpacetimeVec::new(1, -20, -72),
        )
        .unwrap();
        assert_eq!(e.qubit_count(), 762);
        assert_eq!(e.qubit_count() % 6, 0);
    }

    #[test]
    fn vortex_delay_matches_hand_substitution() {
        let e = emb(0, 1, 1, -5, 2, 0); // L1=(3,0,-6), L2=(1,-5,0)
        assert_eq!(e.vortex_delay(1, 0), Ratio::from_integer(1));
        assert_eq!(e.vortex_delay(0, -1), Ratio::new(-1, 5));
        // No vortices: every delay vanishes.
        let e0 = emb(1, 0, 0, -1, 1, 0);
        assert_eq!(e0.vortex_delay(17, -5), Ratio::from_integer(0));
    }

    #[test]
    fn vortex_delay_is_linear() {
        let e = emb(0, 1, 1, -5, 2, 0);
        let a = e.vortex_delay(3, 1);
        let b = e.vortex_delay(-1, 4);
        assert_eq!(e.vortex_delay(2, 5), a + b);
        assert_eq!(e.vortex_delay(6, 2), a * 2);
    }

    #[test]
    fn accumulated_delay_around_torus_equals_vortex_periods() {
        let e = emb(0, 1, 1, -5, 2, 0);
        let l1 = e.l1();
        let l2 = e.l2();
        assert_eq!(e.vortex_delay(2 * l1.i, 2 * l1.j), Ratio::from_integer(6));
        assert_eq!(e.vortex_delay(2 * l2.i, 2 * l2.j), Ratio::from_integer(0));
    }

    #[test]
    fn constraints_open_interval() {
        // Vortex-free is always admissible.
        assert!(emb(1, 0, 0, -1, 1, 0).check_vortex_constraints());
        // delays (1, -4/5, -1/5) are all inside (-1, 5).
        let e = emb(0, 1, 1, -5, 2, 0);
        assert_eq!(
            e.consecutive_delays(),
            [Ratio::from_integer(1), Ratio::new(-4, 5), Ratio::new(-1, 5)]
        );
        assert!(e.check_vortex_constraints());
        // L1=(1,1,-30), L2=(2,-1,0): delay hits the excluded boundary 5.
        let e = Embedding::from_vectors(
            SpacetimeVec::new(1, 1, -30),
            SpacetimeVec::new(2, -1, 0),
        )
        .unwrap();
        assert!(!e.check_vortex_constraints());
        assert!(e.consecutive_delays().contains(&Ratio::from_integer(5)));
    }

    #[test]
    fn scaling_preserves_delays_and_scales_qubits() {
        for alpha in 1..4 {
            let e = Embedding::new(0, alpha, alpha, -5 * alpha, 2 * alpha, 0).unwrap();
            let base = emb(0, 1, 1, -5, 2, 0);
            assert_eq!(e.qubit_count(), base.qubit_count() * alpha * alpha);
            assert_eq!(e.consecutive_delays(), base.consecutive_delays());
        }
    }

    #[test]
    fn vortex_free_schedule_sits_on_integer_steps() {
        let e = emb(1, 0, 0, -1, 1, 0);
        let sched = e.schedule().unwrap();
        assert_eq!(sched.len(), 3 * e.qubit_count() as usize);
        for entry in &sched {
            assert!(entry.time_in_cycle.is_integer());
            let step = entry.time_in_cycle.to_integer();
            let class = (-step).rem_euclid(3);
            assert_eq!(entry.color, Color::from_class(class));
            let expect_x = step % 2 == 0;
            assert_eq!(entry.basis == Basis::X, expect_x);
        }
    }

    #[test]
    fn schedule_rejects_invalid_vortex_counts() {
        let e = Embedding::from_vectors(
            SpacetimeVec::new(1, 1, -30),
            SpacetimeVec::new(2, -1, 0),
        )
        .unwrap();
        assert_eq!(e.schedule(), Err(Error::InvalidVortexCount));
    }

    #[test]
    fn constraints_decide_local_order_preservation() {
        // Valid and invalid samples: the algebraic check and the explicit
        // per-qubit cyclic order check must agree.
        let samples = [
            (0i64, 1i64, 0i64, 3i64, -1i64, 0i64),
            (0, 1, 1, -5, 2, 0),
            (1, 0, 0, -1, 1, 0),
            (1, 1, 2, -5, 2, 0),
            (0, 1, 2, -5, 2, 0),
            (0, 1, -1, -5, 2, 1),
            (0, 2, 1, -6, 3, -1),
            (1, 2, 3, -4, 1, 2),
        ];
        for (c1, d1, n1, c2, d2, n2) in samples {
            if let Ok(e) = Embedding::new(c1, d1, n1, c2, d2, n2) {
                assert_eq!(
                    e.check_vortex_constraints(),
                    e.local_order_preserved(),
                    "disagreement for {e}"
                );
            }
        }
        // And the boundary case with a delay of exactly 5.
        let e = Embedding::from_vectors(
            SpacetimeVec::new(1, 1, -30),
            SpacetimeVec::new(2, -1, 0),
        )
        .unwrap();
        assert_eq!(e.check_vortex_constraints(), e.local_order_preserved());
    }

    #[test]
    fn reduce_point_is_idempotent_and_lattice_periodic() {
        let e = emb(0, 1, 1, -5, 2, 0);
        let p = SpacetimeVec::new(7, -3, 4);
        let r = e.reduce_point(p);
        assert_eq!(e.reduce_point(r), r);
        let shifted = p + e.l1() + e.l2().scaled(-2);
        assert_eq!(e.reduce_point(shifted), r);
        let (h11, h22) = e.domain_extents();
        assert_eq!(h11 * h22, e.plaquette_count());
        assert!(r.i >= 0 && r.i < h11 && r.j >= 0 && r.j < h22);
    }

    #[test]
    fn embedding_json_round_trip() {
        let e = emb(0, 1, 1, -5, 2, 0);
        let json = serde_json::to_string(&e).unwrap();
        assert!(json.contains("\"L1\":[3,0,-6]"));
        assert!(json.contains("\"N\":30"));
        let back: Embedding = serde_json::from_str(&json).unwrap();
        assert_eq!(back, e);
    }

    #[test]
    fn qubit_bond_incidences_are_consistent() {
        // Each qubit's bond of class c must actually contain that qubit and
        // carry that class.
        for (x, y) in [(0i64, 0i64), (1, 2), (-2, 3)] {
            for q in [Qubit::Up(x, y), Qubit::Down(x, y)] {
                for class in 0..3 {
                    let b = q.bond_of_class(class);
                    assert_eq!(b.class(), class);
                    assert!(b.qubits().contains(&q), "bond {b:?} missing qubit {q:?}");
                }
            }
        }
    }
}
