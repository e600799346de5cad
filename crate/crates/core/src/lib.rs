//! Exact verification engine for O-operators on the 3-dimensional complex
//! 3-Lie algebra, the 3-Pre-Lie algebras they induce, and the matching
//! solutions of the 3-Lie classical Yang–Baxter equation.

pub mod par;
pub mod scalar;
pub mod trisys;
pub mod ooperator;
pub mod prelie;
pub mod cybe;
pub mod io;
pub mod sampling;
pub mod suites;
