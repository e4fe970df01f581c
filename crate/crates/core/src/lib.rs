//! Finite commutative rings with identity, the amalgamated duplication `R⋈I`,
//! zero-divisor graphs, and an exhaustive checker harness for the structural
//! results relating `Γ(R)` and `Γ(R⋈I)`.
//!
//! Rings are given by explicit Cayley tables over an index carrier `0..order`.
//! Everything is immutable after construction, so rings, ideals and graphs can
//! be shared read-only across sweep workers.

pub mod amalgam;
pub mod error;
pub mod graph;
pub mod ring;
pub mod set;
pub mod spec;
pub mod sweep;
pub mod theorems;

pub use amalgam::{AmalgamRing, Remark23Report, ZdClassification};
pub use error::{Error, Result};
pub use graph::{Bipartite, Diameter, Distance, Girth, GraphInvariants, ZdGraph};
pub use ring::{AxiomReport, AxiomViolation, Elem, FiniteRing, Ideal};
pub use set::ElemSet;
pub use spec::{parse_family, parse_ideal, parse_ring};
pub use sweep::{sweep, IdealFilter, SweepReport};
pub use theorems::{run_all, Instance, Status, TheoremId, VerificationOutcome};
