//! Exact constructions, solvers and projector certificates for graphs whose
//! quantum independence number (or quantum chromatic number) differs from the
//! classical one.
//!
//! Everything here is exact: graphs are bitset-backed, vectors have integer
//! coordinates, projectors are matrices of arbitrary-precision rationals and
//! the inertia of an adjacency matrix is computed by rational congruence.
//!
//! Module map:
//!
//! * [`graph`]: simple graphs, orthogonality graphs, cones, clique partitions.
//! * [`perm`]: permutations of `{1..n}`, Cayley graphs, isomorphism checks.
//! * [`embed`]: integer quaternions and the `S_4`/`S_5` vector embeddings.
//! * [`field`]: projective points over `F_p` and the `ER(p)`/`ER'(p)` family.
//! * [`solve`]: exact independence number, chromatic number, clique partitions
//!   and Kochen–Specker transversal search.
//! * [`spectra`]: exact inertia and the inertia bound.
//! * [`cert`]: rational projectors and quantum coclique / coloring certificates.
//! * [`census`]: isomorphism classes of small graphs for exhaustive sweeps.
//! * [`reproduce`]: named end-to-end reproduction runs.
//!
//! With the default `parallel` feature the sweeps and the root level of the
//! branch-and-bound searches run on rayon; without it every path is
//! sequential. Reported values never depend on the thread count.

pub mod bitset;
pub mod cert;
pub mod census;
pub mod embed;
pub mod error;
pub mod field;
pub mod graph;
pub mod par;
pub mod perm;
pub mod reproduce;
pub mod solve;
pub mod spectra;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::{CliquePartition, Graph, InnerProduct, VectorSet};
pub use perm::Perm;
