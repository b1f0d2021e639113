//! Exact tooling for the second squarefree Veronese subring `K[K_n]`.
//!
//! The ring is modelled as the edge ring of the complete graph: a monomial is
//! identified with its `Z^n` multidegree, ring membership is degree-sequence
//! realizability, and monomial ideals are decided degreewise. On top of that
//! sit closed-form colon ideals by a single edge variable, the family of
//! connected chordal subgraphs satisfying the edge-distance condition, and a
//! verifier that checks the Koszul filtration axioms for every member of the
//! family against a brute-force colon oracle.

pub mod edge_ring;
pub mod error;
pub mod filtration;
pub mod graph;
pub mod ideal;

pub use edge_ring::{EdgeVariable, Multidegree, ToricRelation};
pub use error::{Error, Result};
pub use filtration::{FamilyMember, VerificationReport};
pub use graph::{CanonicalForm, Edge, Graph, Peo, Vertex};
pub use ideal::MonomialIdeal;
