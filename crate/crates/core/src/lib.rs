//! Exact cohomology of line bundles on a smooth cubic surface.
//!
//! Classes live in `Pic(X) = Z^7` (see [`picard`]). The [`cohomology`] module
//! computes `h^0`, `h^1`, `h^2` by reducing against the 27 lines; [`laway`]
//! builds twist profiles and the `l`-away ACM predicates on top of it;
//! [`enumerate`] regenerates the 1-away and 2-away classification tables and
//! brute-force checks the classification statements; [`quadric`] covers the
//! smooth quadric and the degree-`d` existence check.
//!
//! ```
//! use cubic_laway::{laway, DivisorClass};
//!
//! let d: DivisorClass = "e5 + e6".parse().unwrap();
//! let profile = laway::h1_profile(&d).unwrap();
//! assert_eq!(profile.s_set, vec![-1]);
//! ```

pub mod cohomology;
pub mod emit;
pub mod enumerate;
pub mod error;
pub mod laway;
pub mod par;
pub mod picard;
pub mod quadric;

pub use cohomology::{coh, h0, h1, h2, CohTriple};
pub use error::{Error, Result};
pub use par::Exec;
pub use picard::{DivisorClass, OrbitKey};
