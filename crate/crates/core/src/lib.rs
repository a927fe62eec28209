//! Hat-flavor Heegaard Floer rank of Dehn surgery on a knot, computed from its
//! bifiltered knot Floer complex.
//!
//! The layers, bottom up:
//!
//! * [`f2linalg`]: bit-packed GF(2) matrices, homology and induced maps.
//! * [`cfk`]: the complex itself, validation, region complexes `A_s`, `B`
//!   and the maps `v_s`, `h_s`.
//! * [`surgery`]: the truncated mapping cone, two independent rank oracles,
//!   the closed-form rank formula and an explicit kernel basis.
//! * [`obstructions`]: image-containment checks, cosmetic-surgery and
//!   complement obstructions.
//! * [`knots`]: built-in complexes and generators.
//!
//! ```
//! use hfsurgery::{knots, surgery::{Slope, SurgeryContext}};
//!
//! let trefoil = knots::builtin("trefoil_rh").unwrap();
//! let ctx = SurgeryContext::new(&trefoil).unwrap();
//! let slope: Slope = "1/2".parse().unwrap();
//! assert_eq!(ctx.cone_rank_chain(slope), 3);
//! assert_eq!(ctx.rank_formula(slope).unwrap(), 3);
//! ```

pub mod cfk;
pub mod error;
pub mod f2linalg;
pub mod knots;
pub mod obstructions;
pub mod surgery;

pub use cfk::{CfkComplex, CfkData};
pub use error::{Error, Result};
pub use surgery::{Slope, SurgeryContext};
