//! Exact analysis of graded Betti tables.
//!
//! * [`arith`]: rationals, polynomials, symmetric functions, Vandermonde determinants
//! * [`table`]: Betti tables, degree sequences, pure and symmetrized pure tables
//! * [`hilbert`]: Hilbert coefficients by three independent routes
//! * [`decomp`]: Boij-Soderberg and symmetric decompositions
//! * [`bounds`]: upper bounds for `e_0`, `e_1` and the conjectured `e_j` bound
//! * [`explorer`]: exhaustive enumeration and fuzz verification
//! * [`cli`]: the `bettikit` command line

pub mod arith;
pub mod bounds;
pub mod cli;
pub mod decomp;
pub mod error;
pub mod explorer;
pub mod hilbert;
pub mod table;

pub use arith::{Poly, Rational};
pub use bounds::{BoundReport, ComparisonBounds};
pub use decomp::{Decomposition, Part, SymmetricDecomposition};
pub use error::{Error, Result};
pub use explorer::{Check, Constraint, FuzzReport, SearchSpec};
pub use hilbert::HilbertData;
pub use table::{BettiTable, DegreeSequence, Shifts, SignedTable};
