mod error;
mod intmath;
pub mod lattice;
pub mod graph_metric;
pub mod distance;
pub mod search;
pub mod dem;
pub mod decoder;

pub use error::Error;
pub use lattice::{CodeParams, Embedding, ScheduleEntry, SpacetimeVec};
pub use graph_metric::{basis_coords, graph_norm, graph_norm_bfs, BasisCoords, EDGES_E1, EDGES_E2, EDGES_E3};
pub use distance::{code_distance, distance_cycle_oracle, distance_report, rate, reduce_basis, DistanceReport, ReducedBasis};

pub use decoder::{brute_force_matching, decode, defect_pairs, mwpm, DefectGraph};
pub use dem::{build_memory_experiment, decompose_hyperedges, export_dem, import_dem, logical_label, DetectorGraph, ErrorMechanism, MechanismCategory};
pub use search::{canonical_form, search_optimal, table_csv, CanonicalKey, SearchResult};

pub type Result<T> = std::result::Result<T, Error>;
