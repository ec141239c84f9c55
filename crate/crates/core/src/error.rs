use thiserror::Error;

/// Errors raised by lattice, distance, detector-model, and decoding routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The two basis vectors do not span a rank-2 lattice.
    #[error("degenerate basis: vectors do not span a rank-2 lattice")]
    DegenerateBasis,
    /// Vortex counts violate the schedule validity constraints.
    #[error("invalid vortex count: delay constraints violated")]
    InvalidVortexCount,
    /// The displacement does not lie in the even connected component.
    #[error("displacement not in the even component of the matching graph")]
    NotInEvenComponent,
    /// The displacement does not connect two detector vertices.
    #[error("displacement does not connect detector vertices (t != 2(i-j) mod 6)")]
    NotDetectorDisplacement,
    /// BFS found no path within the requested radius.
    #[error("no path within radius {0}")]
    RadiusExceeded(u32),
    /// The instance is too large for the explicit oracle.
    #[error("instance too large for explicit graph search")]
    TooLarge,
    /// The embedding is rejected by the detector model.
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),
    /// Probability outside the accepted range.
    #[error("invalid probability {0}: must satisfy 0 <= p < 1/2")]
    InvalidProbability(f64),
    /// A four-detector mechanism admits no covering pair of graph edges.
    #[error("hyperedge admits no covering pair of matchable edges")]
    UndecomposableHyperedge,
    /// A syndrome with an odd number of defects cannot be matched.
    #[error("odd defect count {0}: syndrome is corrupted")]
    OddDefectCount(usize),
    /// Brute-force matching refuses instances this large.
    #[error("too many defects for brute-force matching: {0}")]
    TooManyDefects(usize),
    /// The simulated time window cannot contain any nontrivial cycle.
    #[error("time window too short to contain a nontrivial cycle")]
    WindowTooShort,
    /// Parameters outside their documented domain.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    /// Malformed detector-error-model text.
    #[error("malformed detector error model: {0}")]
    MalformedDem(String),
}
