//! Exact combinatorics of nilpotent orbits and unipotent representations.
//!
//! Everything here is integer combinatorics: partitions with the dominance
//! order, B/C/D membership and collapse, the Barbasch-Vogan-Spaltenstein
//! duality, two-row symbols with their shift calculus, spin-group partition
//! recursions, the generalized Springer correspondence for classical groups,
//! Kawanaka wavefront sets of finite-group unipotent representations, the
//! Achar-class model of the canonical unramified wavefront set, and the
//! faithfulness checker that certifies the main wavefront formula.
//!
//! All values are immutable and all operations are pure functions, so the
//! whole crate is thread-safe without synchronization.
//!
//! Modules, bottom up:
//!
//! - [`partition`]: partitions, dominance, transpose, union, collapse, d_BV
//! - [`symbol`]: beta-sets, symbols, shift classes, special symbols, linear
//!   presentations, the `!` and tilde maps
//! - [`spin`]: d(m)/d(lambda), the rho recursions and closed form, the spin
//!   symbol, and d_BV on rather-odd partitions
//! - [`branching`]: Littlewood-Richardson coefficients and hyperoctahedral
//!   restriction multiplicities, j-induction at the s-symbol level
//! - [`finite`]: unipotent representations of finite classical groups,
//!   families, Kawanaka wavefront sets, Harish-Chandra series
//! - [`springer`]: the generalized Springer correspondence for SL, SO, Sp,
//!   Spin
//! - [`duality`]: saturation, d_S via j-induction, Achar classes and `<=_A`
//! - [`faithful`]: the three-condition faithfulness checker plus the E6/E7
//!   data tables
//! - [`wavefront`]: the top-level wavefront-set formulas

pub mod branching;
pub mod duality;
pub mod error;
pub mod faithful;
pub mod finite;
pub mod partition;
pub mod spin;
pub mod springer;
pub mod symbol;
pub mod wavefront;

pub use error::Error;
pub type Result<T> = std::result::Result<T, Error>;
