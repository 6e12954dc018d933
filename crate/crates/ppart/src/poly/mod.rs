//! Exact polynomial and q-series arithmetic.

pub mod bipoly;
pub mod intpoly;
pub mod laurent;
pub mod qrat;
pub mod qseries;
pub mod ratpoly;
pub mod sturm;

pub use bipoly::BiPoly;
pub use intpoly::IntPoly;
pub use laurent::{Laurent, RatFn};
pub use qrat::{q_poch, q_pochhammer, t_poch, Factor, QRational};
pub use qseries::{q_binomial_poly, q_binomial_rat, q_integer};
pub use ratpoly::{binom, binomial_in_m, interpolate, RatPoly};
pub use sturm::real_rooted;
