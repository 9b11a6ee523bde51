//! q-factorization graphs of Drinfeld polynomials in type A and the
//! primality certificates they support.

pub mod dynkin;
pub mod error;
pub mod families;
pub mod fgraph;
pub mod lweight;
pub mod primality;
pub mod redsets;

pub use dynkin::{DynkinA, Interval, Node};
pub use error::{Error, Result};
pub use fgraph::{build_graph, Arrow, Cut, FactGraph, Level, Vertex, VertexId};
pub use lweight::{DrinfeldPoly, KrFactor};
pub use primality::{classify, Certificate, Outcome, Verdict};
